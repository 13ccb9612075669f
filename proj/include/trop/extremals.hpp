#pragma once

#include <map>
#include <vector>

#include "trop/lines.hpp"

namespace trop {

/// Label of a polytrope extremal: a generator column, the vertex of the
/// tropical plane through three generators (named by the omitted column), or
/// a vertex of the line through two generators. LineVertex(i, j) is ordered:
/// it names the vertex tropically nearest generator i.
struct ExtremalLabel {
    enum class Kind { generator, plane_vertex, line_vertex };

    Kind kind;
    int a = 0; // generator index / omitted index / first line index
    int b = 0; // second line index (line vertices only)

    static ExtremalLabel generator(int i) { return {Kind::generator, i, 0}; }
    static ExtremalLabel plane_vertex_omitting(int l) { return {Kind::plane_vertex, l, 0}; }
    static ExtremalLabel line_vertex(int i, int j) { return {Kind::line_vertex, i, j}; }

    /// "1", "123" (the three included indices), "13"; all 1-based.
    std::string str() const;

    bool odd() const { return kind != Kind::line_vertex; } // generated by an odd number of points

    auto operator<=>(const ExtremalLabel&) const = default;
};

struct Hypothesis1Result {
    bool ok = false;
    std::vector<int> coplanar_witnesses; // columns at which the plane evaluation ties
};

/// Non-coplanarity of the four generators, tested the direct way: for each
/// omitted column l, evaluate the tropical linear form of the plane through
/// the other three (vertex = column l of -A^t) at column l and require the
/// maximum to be attained exactly once.
Hypothesis1Result check_hypothesis1(const KleeneMatrix& a);

struct MinorRef {
    int row_pair, col_pair;
    std::string str() const; // "adiff(13;12)" style, 1-based
};

struct Hypothesis2Result {
    bool ok = false;
    std::vector<MinorRef> singular; // minors on >= 3 distinct indices with zero adiff
};

/// Regularity of all thirty 2x2 minors involving three or four distinct
/// indices (equivalently: their adiffs are nonzero).
Hypothesis2Result check_hypothesis2(const KleeneMatrix& a);

struct ExtremalSet {
    std::map<ExtremalLabel, ProjectivePoint> points;
    std::array<LineType, 6> line_types; // indexed by kPairs over column pairs
    bool hypothesis1 = false;
    bool hypothesis2 = false;
    bool maximal = false; // hypotheses hold and all 20 points are distinct

    const ProjectivePoint& at(const ExtremalLabel& l) const { return points.at(l); }

    /// Distinct points, each with its smallest label.
    std::vector<std::pair<ExtremalLabel, ProjectivePoint>> distinct() const;
};

/// The labeled extremal candidates: 4 generators, 4 plane vertices, up to 12
/// line vertices. With both hypotheses this is the full set of 20 distinct
/// extremals and maximal is set; otherwise the partial (possibly aliased)
/// set is returned with maximal false.
ExtremalSet extremal_set(const KleeneMatrix& a);

struct EdgeLengths {
    Rational generator_to_near;  // dist(i, ij): tropical = Euclidean here
    Rational generator_to_near2; // dist(j, ji)
    Rational between_vertices;   // tdist(ij, ji)
};

/// The three segment lengths along line L_ij predicted by the adiffs of A.
/// Throws std::invalid_argument if the line is a tetrapod.
EdgeLengths edge_lengths_on_line(const KleeneMatrix& a, int i, int j);

} // namespace trop
