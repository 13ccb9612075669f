#pragma once

#include <array>
#include <string>

#include "trop/maxplus.hpp"

namespace trop {

/// Type of a tropical line in TP^3: one of the three ways to split the four
/// ray labels into two vertices, or a tetrapod (single vertex carrying all
/// four rays). Code k in 0..2 is the split that puts index 0 with index k+1;
/// code 3 is the tetrapod.
class LineType {
public:
    static LineType pairing(int x, int y); // the split with x and y at one vertex
    static LineType tetrapod() { return LineType(3); }

    bool is_tetrapod() const { return code_ == 3; }
    int code() const { return code_; }

    /// The index sharing a vertex with x (split types only).
    int partner(int x) const;

    /// True if x and y sit at different vertices.
    bool separates(int x, int y) const { return !is_tetrapod() && partner(x) != y; }

    /// The two halves, each ascending; the half containing index 0 first.
    std::array<std::array<int, 2>, 2> halves() const;

    /// "[12,34]", "[13,24]", "[14,23]" or "[1234]" (1-based).
    std::string str() const;

    bool operator==(const LineType& o) const = default;

private:
    explicit LineType(int code) : code_(code) {}
    int code_;
};

enum class AttainSide { first, second, both }; // p_i + q_j vs p_j + q_i

/// The six 2x2 tropical minors of the 4x2 matrix [p q], indexed by kPairs.
struct MinorSextet {
    std::array<Rational, 6> m{};
    std::array<AttainSide, 6> side{};

    const Rational& of(int i, int j) const { return m[static_cast<size_t>(pair_index(i, j))]; }
};

/// Minors of the line through p and q. Throws std::invalid_argument if
/// p == q. The result always satisfies the tropical Pluecker relation
/// (max of the three opposite-pair sums attained at least twice); violation
/// would be a bug and throws std::logic_error.
MinorSextet minors(const ProjectivePoint& p, const ProjectivePoint& q);

/// Reads the line type off the minor sums: the strictly smallest of the
/// three Pluecker sums names the split, all equal means tetrapod.
LineType line_type(const MinorSextet& m);

struct LineVertices {
    ProjectivePoint first;  // vertex of the half containing index 0
    ProjectivePoint second; // the other vertex; equals first for a tetrapod
    bool tetrapod = false;
};

/// Vertices of the line, computed by meeting the coordinate rays
/// x_c(u) = (-m_{complement(c,y)})_y, x_c(u)_c = -u pairwise: two ray points
/// are the same projective point iff their difference is a constant vector,
/// which pins both parameters. The same mechanism covers all three splits
/// and the tetrapod. Every returned vertex is validated with rank2_check;
/// failure throws std::logic_error.
LineVertices line_vertices(const ProjectivePoint& p, const ProjectivePoint& q, const MinorSextet& m,
                           LineType t);

/// Membership of x on the line through p and q: each of the four 3x3
/// tropical minors of [p q x] must attain its maximum at least twice.
bool rank2_check(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& x);

/// Type of the line through columns i and j of a Kleene star, read directly
/// from the comparison of a[k][i]+a[l][j] with a[k][j]+a[l][i] (k<l the
/// other two indices). Always separates i and j.
LineType line_type_from_kleene(const KleeneMatrix& a, int i, int j);

} // namespace trop
