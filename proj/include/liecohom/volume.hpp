#pragma once

#include <string>

#include "liecohom/rational.hpp"

namespace liecohom {

/// Seifert volume constant 4χ²/|e| as the rational coefficient of π².
/// Throws ZeroEuler when e = 0.
Rational seifert_volume(const Rational& chi, const Rational& euler);

/// Volume 4n²|e| for a representation sending the fiber to the n-th central
/// element, as the coefficient of π².
Rational sl2tilde_volume(long n, const Rational& euler);

/// "p/q · π²", or "0".
std::string format_pi_squared(const Rational& coefficient);

} // namespace liecohom
