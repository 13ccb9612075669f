#pragma once

#include <vector>

#include "trop/maxplus.hpp"

namespace trop {
namespace families {

/// Three-parameter family landing in class 1 (both odd configurations
/// (5.5.5) right). Requires gamma, delta, c > 0 and 2*gamma + delta < 2c.
Matrix4 gamma_delta(const Rational& gamma, const Rational& delta, const Rational& c);

/// Circulant matrix of p = [0,-a,-b,-c]; classes 4 or 5 under
/// 0 < a < b < c <= 2a and 2b != a+c.
Matrix4 circulant(const Rational& a, const Rational& b, const Rational& c);

/// Symmetric anticirculant of the same vector; class 6 under the same
/// constraints.
Matrix4 anticirculant(const Rational& a, const Rational& b, const Rational& c);

/// Raw circulant / anticirculant patterns of an arbitrary vector p with
/// p[0] = 0, without the class-guaranteeing constraints (used for
/// perturbation experiments).
Matrix4 circulant_pattern(const Vec4& p);
Matrix4 anticirculant_pattern(const Vec4& p);

/// Matrix shaped so that, when it satisfies the Kleene conditions and both
/// hypotheses, plane vertex 123 sits at the origin with configuration
/// (5.5.5) left. All parameters must be positive; the Kleene conditions are
/// validated after construction and reported via std::invalid_argument.
Matrix4 penta555_left(const std::array<Rational, 3>& gamma, const std::array<Rational, 3>& delta,
                      const Rational& a, const Rational& b, const Rational& c);

/// Named example matrices. Names: drum, b15, b15-prime, aa191.
Matrix4 registry(const std::string& name);
std::vector<std::string> registry_names();

} // namespace families
} // namespace trop
