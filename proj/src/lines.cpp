#include "trop/lines.hpp"

#include <stdexcept>

namespace trop {

namespace {

// Sum of the minors of an opposite pair split: split code 0 -> m01+m23, etc.
Rational split_sum(const MinorSextet& m, int code) {
    switch (code) {
        case 0: return m.of(0, 1) + m.of(2, 3);
        case 1: return m.of(0, 2) + m.of(1, 3);
        default: return m.of(0, 3) + m.of(1, 2);
    }
}

} // namespace

LineType LineType::pairing(int x, int y) {
    if (x > y) std::swap(x, y);
    if (x == 0) return LineType(y - 1);
    // pair not containing 0: name the split by 0's mate in the complement
    return LineType(complement_pair(x, y).second - 1);
}

int LineType::partner(int x) const {
    if (is_tetrapod()) throw std::logic_error("tetrapod has no partner structure");
    if (x == 0) return code_ + 1;
    if (x == code_ + 1) return 0;
    auto [a, b] = complement_pair(0, code_ + 1);
    return x == a ? b : a;
}

std::array<std::array<int, 2>, 2> LineType::halves() const {
    if (is_tetrapod()) throw std::logic_error("tetrapod has a single vertex");
    int mate = code_ + 1;
    auto [a, b] = complement_pair(0, mate);
    return {{{0, mate}, {a, b}}};
}

std::string LineType::str() const {
    if (is_tetrapod()) return "[1234]";
    auto h = halves();
    return "[" + std::to_string(h[0][0] + 1) + std::to_string(h[0][1] + 1) + "," +
           std::to_string(h[1][0] + 1) + std::to_string(h[1][1] + 1) + "]";
}

MinorSextet minors(const ProjectivePoint& p, const ProjectivePoint& q) {
    if (p == q) throw std::invalid_argument("minors: the two points coincide");
    MinorSextet out;
    for (int t = 0; t < 6; ++t) {
        int i = kPairs[t][0], j = kPairs[t][1];
        Rational a = p[i] + q[j];
        Rational b = p[j] + q[i];
        out.m[static_cast<size_t>(t)] = max(a, b);
        out.side[static_cast<size_t>(t)] = a == b ? AttainSide::both : (a < b ? AttainSide::second : AttainSide::first);
    }
    // Pluecker relation: the max of the three split sums is attained twice.
    Rational s0 = split_sum(out, 0), s1 = split_sum(out, 1), s2 = split_sum(out, 2);
    Rational top = max(s0, max(s1, s2));
    int att = (s0 == top) + (s1 == top) + (s2 == top);
    if (att < 2) throw std::logic_error("Pluecker relation violated for genuine minors");
    return out;
}

LineType line_type(const MinorSextet& m) {
    Rational s[3] = {split_sum(m, 0), split_sum(m, 1), split_sum(m, 2)};
    Rational top = max(s[0], max(s[1], s[2]));
    int att = (s[0] == top) + (s[1] == top) + (s[2] == top);
    if (att == 3) return LineType::tetrapod();
    if (att != 2) throw std::logic_error("line_type: Pluecker relation violated");
    for (int c = 0; c < 3; ++c)
        if (s[c] < top) return LineType::pairing(0, c + 1);
    throw std::logic_error("line_type: unreachable");
}

namespace {

// Projective meet of the rays through coordinates i and j. Exists exactly
// when the two split sums not separating {i,j} are equal, which is the type
// condition; mismatch throws.
ProjectivePoint meet_rays(int i, int j, const MinorSextet& m) {
    auto [a, b] = complement_pair(i, j);
    Rational da = m.of(i, b) - m.of(j, b);
    Rational db = m.of(i, a) - m.of(j, a);
    if (da != db) throw std::logic_error("meet_rays: rays do not meet (type mismatch)");
    Vec4 v;
    for (int y = 0; y < 4; ++y) {
        if (y == i) continue;
        auto [c1, c2] = complement_pair(i, y);
        v[static_cast<size_t>(y)] = -m.of(c1, c2);
    }
    v[static_cast<size_t>(i)] = da - m.of(a, b);
    return ProjectivePoint::from_homogeneous(v);
}

} // namespace

LineVertices line_vertices(const ProjectivePoint& p, const ProjectivePoint& q, const MinorSextet& m,
                           LineType t) {
    LineVertices out;
    if (t.is_tetrapod()) {
        out.first = meet_rays(0, 1, m);
        out.second = out.first;
        out.tetrapod = true;
    } else {
        auto h = t.halves();
        out.first = meet_rays(h[0][0], h[0][1], m);
        out.second = meet_rays(h[1][0], h[1][1], m);
    }
    if (!rank2_check(p, q, out.first) || !rank2_check(p, q, out.second))
        throw std::logic_error("line_vertices: computed vertex fails the rank-2 membership check");
    return out;
}

bool rank2_check(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& x) {
    MinorSextet m = minors(p, q);
    for (int omit = 0; omit < 4; ++omit) {
        std::optional<Rational> best;
        int count = 0;
        for (int y = 0; y < 4; ++y) {
            if (y == omit) continue;
            auto [c1, c2] = complement_pair(omit, y);
            Rational term = x[y] + m.of(c1, c2);
            if (!best || *best < term) {
                best = term;
                count = 1;
            } else if (*best == term) {
                ++count;
            }
        }
        if (count < 2) return false;
    }
    return true;
}

LineType line_type_from_kleene(const KleeneMatrix& a, int i, int j) {
    if (i == j) throw std::invalid_argument("line_type_from_kleene: need two distinct column indices");
    if (i > j) std::swap(i, j);
    auto [k, l] = complement_pair(i, j);
    Rational main = a.at(k, i) + a.at(l, j);
    Rational sec = a.at(k, j) + a.at(l, i);
    if (main == sec) return LineType::tetrapod();
    LineType t = main > sec ? LineType::pairing(i, k) : LineType::pairing(i, l);
    if (!t.separates(i, j)) throw std::logic_error("line type must separate the generating columns");
    return t;
}

} // namespace trop
