#include "trop/maxplus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace trop {

int pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    for (int p = 0; p < 6; ++p)
        if (kPairs[p][0] == i && kPairs[p][1] == j) return p;
    throw std::invalid_argument("pair_index: need two distinct indices in 0..3");
}

std::pair<int, int> complement_pair(int i, int j) {
    std::pair<int, int> r{-1, -1};
    for (int x = 0; x < 4; ++x) {
        if (x == i || x == j) continue;
        if (r.first < 0)
            r.first = x;
        else
            r.second = x;
    }
    return r;
}

TropDet trop_det(const std::vector<Rational>& entries, int n) {
    if (n < 2 || n > 4) throw std::invalid_argument("trop_det: supported sizes are 2..4");
    if (entries.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
        throw std::invalid_argument("trop_det: entry count does not match side");

    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<Rational> best;
    int count = 0;
    do {
        Rational s(0);
        for (int i = 0; i < n; ++i) s += entries[static_cast<size_t>(i * n + perm[static_cast<size_t>(i)])];
        if (!best || *best < s) {
            best = s;
            count = 1;
        } else if (*best == s) {
            ++count;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {*best, count};
}

TropDet trop_det(const Matrix4& m) {
    std::vector<Rational> e;
    e.reserve(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) e.push_back(m.at(i, j));
    return trop_det(e, 4);
}

TropDet trop_det2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    Rational main = a + d;
    Rational sec = b + c;
    if (main == sec) return {main, 2};
    return {max(main, sec), 1};
}

std::string KleeneViolation::str() const {
    if (i == j && j == k) return "a[" + std::to_string(i + 1) + "][" + std::to_string(i + 1) + "] != 0";
    return "a[" + std::to_string(i + 1) + "][" + std::to_string(k + 1) + "] + a[" + std::to_string(k + 1) +
           "][" + std::to_string(j + 1) + "] > a[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
}

KleeneCheck is_kleene_star(const Matrix4& a) {
    KleeneCheck r;
    for (int i = 0; i < 4; ++i)
        if (!a.at(i, i).is_zero()) r.violations.push_back({i, i, i});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                if (i == j && j == k) continue;
                if (a.at(i, j) < a.at(i, k) + a.at(k, j)) r.violations.push_back({i, j, k});
            }
    r.ok = r.violations.empty();
    return r;
}

Matrix4 normalize_chart(const Matrix4& a) {
    Matrix4 out;
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) out.at(i, j) = a.at(i, j) - a.at(3, j);
    return out;
}

KleeneMatrix KleeneMatrix::validate(const Matrix4& a) {
    KleeneCheck check = is_kleene_star(a);
    if (!check.ok) {
        std::string msg = "not a Kleene star:";
        for (const auto& v : check.violations) {
            msg += ' ';
            msg += v.str();
            msg += ';';
        }
        throw std::invalid_argument(msg);
    }
    KleeneMatrix m;
    m.a_ = a;
    m.chart_ = normalize_chart(a);
    for (int rp = 0; rp < 6; ++rp)
        for (int cp = 0; cp < 6; ++cp) {
            int k = kPairs[rp][0], l = kPairs[rp][1];
            int i = kPairs[cp][0], j = kPairs[cp][1];
            m.minors_[static_cast<size_t>(rp)][static_cast<size_t>(cp)] =
                trop_det2(a.at(k, i), a.at(k, j), a.at(l, i), a.at(l, j));
            m.adiffs_[static_cast<size_t>(rp)][static_cast<size_t>(cp)] =
                ((a.at(k, i) + a.at(l, j)) - (a.at(k, j) + a.at(l, i))).abs();
        }
    return m;
}

ProjectivePoint KleeneMatrix::generator(int j) const {
    return ProjectivePoint::from_homogeneous(a_.col(j));
}

ProjectivePoint KleeneMatrix::plane_vertex_omitting(int l) const {
    Vec4 v;
    for (int i = 0; i < 4; ++i) v[static_cast<size_t>(i)] = -a_.at(l, i);
    return ProjectivePoint::from_homogeneous(v);
}

Rational KleeneMatrix::adiff(int k, int l, int i, int j) const {
    return adiff(pair_index(k, l), pair_index(i, j));
}

KleeneMatrix KleeneMatrix::conjugate(const std::array<int, 4>& perm) const {
    Matrix4 b;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            b.at(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]) = a_.at(i, j);
    return validate(b);
}

Matrix4 maxplus_product(const Matrix4& a, const Matrix4& b) {
    Matrix4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rational best = a.at(i, 0) + b.at(0, j);
            for (int k = 1; k < 4; ++k) best = max(best, a.at(i, k) + b.at(k, j));
            out.at(i, j) = best;
        }
    return out;
}

KleeneMatrix kleene_closure(const Matrix4& a) {
    for (int i = 0; i < 4; ++i) {
        if (!a.at(i, i).is_zero())
            throw std::invalid_argument("kleene_closure: diagonal must be zero");
        for (int j = 0; j < 4; ++j)
            if (i != j && Rational(0) < a.at(i, j))
                throw std::invalid_argument("kleene_closure: off-diagonal entries must be nonpositive");
    }
    Matrix4 sq = maxplus_product(a, a);
    Matrix4 closure = maxplus_product(sq, sq);
    return KleeneMatrix::validate(closure);
}

} // namespace trop
