#pragma once

#include <vector>

#include "trop/maxplus.hpp"

namespace trop {

// Brute-force validators, kept deliberately independent of the line and
// extremal machinery: they see only the matrix entries and the Rational
// arithmetic, so an agreement between the two routes is meaningful.
namespace oracle {

/// Classical H-to-V conversion of the twelve-inequality body: solve every
/// triple of supporting planes exactly, keep the nondegenerate solutions
/// satisfying all twelve inequalities, deduplicate.
std::vector<ProjectivePoint> vertex_enum(const KleeneMatrix& a);

/// Max-plus residuated projection onto the span: lambda_k = min_i of
/// (x_i - alpha[i][k]), membership iff the tropical combination of the
/// chart columns with these coefficients reproduces x.
bool span_membership(const KleeneMatrix& a, const ProjectivePoint& x);

struct CrossValidation {
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Compares the engine's output with the brute-force route: vertex sets,
/// per-plane tightness patterns, facet/edge counts, rank-2 membership of
/// the engine's line vertices, and span membership of every vertex.
CrossValidation cross_validate(const KleeneMatrix& a);

} // namespace oracle
} // namespace trop
