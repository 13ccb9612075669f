#pragma once

#include <array>
#include <string>

#include "trop/rational.hpp"

namespace trop {

using Vec4 = std::array<Rational, 4>;

/// Dense 4x4 rational matrix; all entries finite. Columns are read as points
/// of tropical projective 3-space.
struct Matrix4 {
    std::array<Vec4, 4> rows{};

    const Rational& at(int i, int j) const { return rows[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    Rational& at(int i, int j) { return rows[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

    Vec4 col(int j) const {
        return {at(0, j), at(1, j), at(2, j), at(3, j)};
    }

    Matrix4 transpose() const {
        Matrix4 t;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool operator==(const Matrix4& o) const = default;

    static Matrix4 zero() { return Matrix4{}; }
    static Matrix4 from_ints(const std::array<std::array<std::int64_t, 4>, 4>& e) {
        Matrix4 m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = Rational(e[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        return m;
    }

    std::string str() const;
};

/// Point of TP^3. The stored representative always has last coordinate 0
/// (the X4 = 0 chart), so equality of representatives is projective equality.
struct ProjectivePoint {
    Vec4 c{};

    ProjectivePoint() = default;

    /// Normalizes an arbitrary homogeneous representative into the chart.
    static ProjectivePoint from_homogeneous(const Vec4& h) {
        ProjectivePoint p;
        for (int i = 0; i < 4; ++i) p.c[static_cast<size_t>(i)] = h[static_cast<size_t>(i)] - h[3];
        return p;
    }

    static ProjectivePoint from_chart(const Rational& x, const Rational& y, const Rational& z) {
        ProjectivePoint p;
        p.c = {x, y, z, Rational(0)};
        return p;
    }

    const Rational& operator[](int i) const { return c[static_cast<size_t>(i)]; }

    bool operator==(const ProjectivePoint& o) const = default;
    auto operator<=>(const ProjectivePoint& o) const = default;

    std::string str() const;
};

/// Tropical distance: max absolute coordinate difference in the X4 = 0 chart.
Rational tdist(const ProjectivePoint& p, const ProjectivePoint& q);

/// Exact squared Euclidean distance of the chart representatives.
Rational euclid_sq(const ProjectivePoint& p, const ProjectivePoint& q);

} // namespace trop
