#include "trop/families.hpp"

#include <stdexcept>

namespace trop {
namespace families {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("family parameter constraint violated: " + what);
}

Matrix4 validated(const Matrix4& m, const std::string& family) {
    KleeneCheck check = is_kleene_star(m);
    if (!check.ok) {
        std::string msg = family + ": constructed matrix is not a Kleene star:";
        for (const auto& v : check.violations) msg += " " + v.str() + ";";
        throw std::invalid_argument(msg);
    }
    return m;
}

} // namespace

Matrix4 gamma_delta(const Rational& g, const Rational& d, const Rational& c) {
    Rational zero(0);
    require(zero < g && zero < d && zero < c, "gamma, delta, c must be positive");
    require(g + g + d < c + c, "2*gamma + delta < 2*c");
    Matrix4 m;
    Rational gd = -(g + d);
    Rational ggd = -(g + g + d);
    m.rows = {Vec4{zero, ggd, gd, -c},
              Vec4{gd, zero, ggd, -c},
              Vec4{ggd, gd, zero, -c},
              Vec4{-c, -c, -c, zero}};
    return validated(m, "gamma_delta");
}

Matrix4 circulant_pattern(const Vec4& p) {
    Matrix4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = p[static_cast<size_t>(((i - j) % 4 + 4) % 4)];
    return m;
}

Matrix4 anticirculant_pattern(const Vec4& p) {
    Matrix4 m;
    // Symmetric pattern: rows are p, (p2 p1 p4 p3), (p3 p4 p1 p2), (p4 p3 p2 p1).
    constexpr int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = p[static_cast<size_t>(idx[i][j])];
    return m;
}

namespace {

Vec4 circulant_vector(const Rational& a, const Rational& b, const Rational& c) {
    Rational zero(0);
    require(zero < a && a < b && b < c, "0 < a < b < c");
    require(c <= a + a, "c <= 2a");
    require(b + b != a + c, "2b != a+c (the boundary is not maximal)");
    return {zero, -a, -b, -c};
}

} // namespace

Matrix4 circulant(const Rational& a, const Rational& b, const Rational& c) {
    return validated(circulant_pattern(circulant_vector(a, b, c)), "circulant");
}

Matrix4 anticirculant(const Rational& a, const Rational& b, const Rational& c) {
    return validated(anticirculant_pattern(circulant_vector(a, b, c)), "anticirculant");
}

Matrix4 penta555_left(const std::array<Rational, 3>& g, const std::array<Rational, 3>& d,
                      const Rational& a, const Rational& b, const Rational& c) {
    Rational zero(0);
    for (int k = 0; k < 3; ++k)
        require(zero < g[static_cast<size_t>(k)] && zero < d[static_cast<size_t>(k)],
                "gamma_j, delta_j must be positive");
    require(zero < a && zero < b && zero < c, "a, b, c must be positive");
    Matrix4 m;
    m.rows = {Vec4{zero, -(g[1] + d[1]), -(g[2] + g[1] + d[1]), -a},
              Vec4{-(g[0] + g[2] + d[2]), zero, -(g[2] + d[2]), -b},
              Vec4{-(g[0] + d[0]), -(g[1] + g[0] + d[0]), zero, -c},
              Vec4{zero, zero, zero, zero}};
    return validated(m, "penta555_left");
}

Matrix4 registry(const std::string& name) {
    if (name == "drum")
        return Matrix4::from_ints({{{0, -4, -6, -10}, {-4, 0, -10, -6}, {-6, -10, 0, -4}, {-10, -6, -4, 0}}});
    if (name == "b15")
        return Matrix4::from_ints({{{0, -7, -5, -1}, {-8, 0, -8, -7}, {-7, -4, 0, -7}, {-9, -9, -8, 0}}});
    if (name == "b15-prime")
        return Matrix4::from_ints({{{0, -6, -6, -4}, {-4, 0, -9, -6}, {-6, -8, 0, -7}, {-10, -7, -6, 0}}});
    if (name == "aa191")
        return Matrix4::from_ints({{{0, -6, -10, -5}, {-6, 0, -5, -3}, {-3, -5, 0, -6}, {-5, -3, -6, 0}}});
    throw std::invalid_argument("unknown registry matrix '" + name + "'");
}

std::vector<std::string> registry_names() { return {"drum", "b15", "b15-prime", "aa191"}; }

} // namespace families
} // namespace trop
