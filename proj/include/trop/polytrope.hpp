#pragma once

#include "trop/extremals.hpp"

namespace trop {

/// One of the twelve supporting planes of span(A): a coordinate bound
/// a[i][4] <= X_i <= -a[4][i] or a difference bound a[i][j] <= X_i - X_j
/// <= -a[j][i] for (i,j) in {(1,2),(2,3),(3,1)}.
struct SupportingPlane {
    enum class Kind { coordinate, difference };
    enum class Bound { lower, upper };

    Kind kind;
    Bound bound;
    int i = 0; // coordinate index, or minuend of the difference
    int j = 0; // subtrahend (difference planes only)
    Rational level;

    Rational eval(const ProjectivePoint& x) const {
        return kind == Kind::coordinate ? x[i] : x[i] - x[j];
    }
    bool tight(const ProjectivePoint& x) const { return eval(x) == level; }
    bool satisfied(const ProjectivePoint& x) const {
        return bound == Bound::lower ? level <= eval(x) : eval(x) <= level;
    }

    /// Outward normal as an integer 3-vector in the chart.
    std::array<int, 3> outward_normal() const;

    /// "X1 = -1" or "X2-X3 = 4".
    std::string str() const;
    std::string functional_str() const; // "X1" or "X2-X3"

    bool operator==(const SupportingPlane&) const = default;
};

/// The twelve supporting planes, levels read off A. Order: X1,X2,X3 bounds
/// (lower then upper), then X1-X2, X2-X3, X3-X1 bounds.
std::array<SupportingPlane, 12> facet_planes(const KleeneMatrix& a);

/// Membership in span(A) as the conjunction of the twelve inequalities.
bool membership(const KleeneMatrix& a, const ProjectivePoint& x);

struct Facet {
    int plane_index; // into facet_planes order
    SupportingPlane plane;
    std::vector<ExtremalLabel> cycle; // convex cycle, outward orientation
    int gon = 0;
};

struct PolytropeEdge {
    ExtremalLabel a, b;
    Rational tropical_length;
    Rational euclidean_sq;
};

/// (5.5.5) with handedness, or the ordered facet sizes (p.q.r) read along
/// the X1, X2, X3 axes of the coordinates in which the extremal plays the
/// role of generator 4 / plane vertex 123.
struct Configuration {
    bool is_555 = false;
    bool left = false;            // meaningful when is_555
    std::array<int, 3> sizes{};   // per-axis facet sizes
    std::string str() const;
    bool operator==(const Configuration&) const = default;
};

struct Polytrope {
    KleeneMatrix a;
    ExtremalSet extremals;
    std::vector<std::pair<ExtremalLabel, ProjectivePoint>> vertices; // distinct, canonically labeled
    std::vector<Facet> facets;
    std::vector<PolytropeEdge> edges;
    std::array<int, 3> f_vector{};      // vertices, edges, facets
    std::array<int, 4> polygon_vector{}; // f3, f4, f5, f6

    const ProjectivePoint& point_of(const ExtremalLabel& l) const { return extremals.at(l); }

    /// Indices of the facets whose cycle contains the vertex carrying this
    /// label (labels aliasing the same point count as that point).
    std::vector<int> facets_at(const ExtremalLabel& l) const;

    const Facet* facet_on(const SupportingPlane& p) const;
};

/// Builds the convex body: per plane, the tight extremals angularly ordered
/// by exact 2D cross-product comparisons, then edges, f-vector and
/// polygon-vector. Maximality invariants (f-vector (20,30,12), f3 = 0,
/// f4 = f6, Euler 2, trivalence, alcoved edge directions) are asserted when
/// the extremal set is maximal; a non-convex facet cycle always throws.
Polytrope build_polytrope(const KleeneMatrix& a);
Polytrope build_polytrope(const KleeneMatrix& a, const ExtremalSet& ext);

/// Configuration at an oddly generated extremal of a maximal polytrope.
/// Facet sizes are read from the built facets; the ordered reading and the
/// (5.5.5) handedness come from the types of the three lines through the
/// point, and the two readings must agree.
Configuration configuration_at(const Polytrope& p, const ExtremalLabel& label);

/// Interior angles (degrees) between consecutive edges of the facet cycle,
/// for reports; exact data stays rational everywhere else.
std::vector<double> angle_vector(const Polytrope& p, const Facet& f);

} // namespace trop
