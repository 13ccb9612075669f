#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trop/maxplus.hpp"

namespace trop {

struct CensusConfig {
    int samples = 10000;
    int range = 50; // entries drawn uniformly from {-range, ..., 0}
    std::uint64_t seed = 1;
    int jobs = 1;
    bool cross_validate = false; // run the brute-force oracle on every classified sample
};

struct CensusReport {
    CensusConfig config;
    int classified = 0; // samples passing both hypotheses
    std::array<int, 6> class_counts{};
    std::map<std::array<int, 4>, int> polygon_vectors;
    std::map<std::array<int, 3>, int> type_multisets; // sorted descending
    int singular_3x3_under_hypotheses = 0;            // open-question bookkeeping, not asserted
    std::vector<std::string> violations;              // invariant breaches (expected empty)

    std::string str() const;
};

/// Random zero-diagonal matrices with integer entries in [-range, 0],
/// closed into Kleene stars, filtered by the hypotheses and classified.
/// Checks on each classified sample: f-vector (20,30,12), f4 = f6, trivalence,
/// Euler 2, polygon-vector among the three admissible ones, type-vector
/// multiset among the five admissible ones, opposite (5.5.5) handedness
/// agreement, class consistency. Deterministic for a fixed (seed, jobs).
CensusReport run_census(const CensusConfig& cfg);

/// The sample matrix a given worker stream produces at a given step;
/// exposed for determinism tests.
Matrix4 census_sample(std::uint64_t seed, int worker, int step, int range);

} // namespace trop
