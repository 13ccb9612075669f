#pragma once

#include <map>
#include <stdexcept>

#include "trop/polytrope.hpp"

namespace trop {

/// t[k] counts the lines whose type puts index 4 with index k+1 (1-based:
/// the number of lines of type [4j,kl]).
struct TypeVector {
    std::array<int, 3> t{};
    std::array<int, 3> sorted_desc() const;
    std::string str() const;
    bool operator==(const TypeVector&) const = default;
};

TypeVector type_vector(const KleeneMatrix& a);

enum class HexAdjacency { none, one_pair, two_pairs, cycle4 };

struct HexStructure {
    int hexagon_count = 0;
    HexAdjacency adjacency = HexAdjacency::none;
    std::string str() const;
    bool operator==(const HexStructure&) const = default;
};

/// Hexagon count and adjacency derived from the line types (same-type pairs
/// sharing an index yield a hexagon; 3-line chains an adjacent pair; 4-line
/// cycles a cycle of four) and cross-checked against the hexagonal facets of
/// the built body. Disagreement throws std::logic_error.
HexStructure hex_structure(const KleeneMatrix& a, const Polytrope& p);

struct ClassVerdict {
    int class_id = 0; // 1..6
    TypeVector type_vector;
    std::array<int, 4> polygon_vector{};
    HexStructure hexes;
    bool centrally_symmetric = false;
    bool chiral_partner_distinct = false;
    std::array<Configuration, 8> configurations{}; // 4 generators then plane vertices omitting 1..4
    Configuration at_123, at_4;
};

class HypothesisError : public std::invalid_argument {
public:
    HypothesisError(std::string which, std::string detail)
        : std::invalid_argument(which + " fails: " + detail), which_(std::move(which)) {}
    const std::string& which() const { return which_; }

private:
    std::string which_;
};

/// Combinatorial class of a maximal span:
///   {2,2,2} -> 1; {3,2,1} with the doubled type's lines sharing an index
///   -> 2, disjoint -> 3; {3,3,0} -> 4; {4,1,1} -> 5; {4,2,0} -> 6.
/// Refuses (HypothesisError) when hypothesis 1 or 2 fails.
ClassVerdict classify(const KleeneMatrix& a);
ClassVerdict classify(const Polytrope& p);

struct ChiralityReport {
    bool centrally_symmetric = false;
    int class_id = 0; // 0 when the span is not classifiable (hypotheses fail)
    int transpose_class_id = 0;
    Configuration at_123, at_4;                     // of span(A)
    Configuration transpose_at_123, transpose_at_4; // of span(A^t)
};

/// Central symmetry (A = A^t) and the classification of the transpose,
/// whose solid is the antipodal image. Non-maximal spans report symmetry
/// with class 0.
ChiralityReport symmetry_chirality(const KleeneMatrix& a);

} // namespace trop
