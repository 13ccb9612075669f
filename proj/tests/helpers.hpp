#pragma once

#include <random>

#include "trop/maxplus.hpp"

namespace trop::testing {

// Deterministic generators for property-style tests.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den = 4) {
        std::int64_t den = integer(1, max_den);
        return Rational(integer(lo * den, hi * den), den);
    }

    ProjectivePoint point(std::int64_t lo = -12, std::int64_t hi = 12) {
        return ProjectivePoint::from_chart(rational(lo, hi), rational(lo, hi), rational(lo, hi));
    }

    // Random Kleene star: transitive closure of nonpositive integer noise.
    KleeneMatrix kleene(int range = 20) {
        Matrix4 m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = i == j ? Rational(0) : Rational(-integer(0, range));
        return kleene_closure(m);
    }
};

} // namespace trop::testing
