#pragma once

#include <string>
#include <vector>

#include "cyclicover/laurent.hpp"
#include "cyclicover/matrix.hpp"
#include "cyclicover/presentation.hpp"

namespace cyclicover {

/// Free derivative of w by g, specialized through phi to Z[t^+-1]:
///   D(1) = 0, D(g) = 1, D(h) = 0 for h != g,
///   D(g^-1) = -t^(-phi(g)), D(uv) = D(u) + t^(phi(u)) D(v).
LaurentPoly fox_derivative(const FreeWord &w, const std::string &gen, const CyclicClass &phi);

/// Fox Jacobian of the relators with the stable generator's column removed.
struct AlexanderMatrix {
  LaurentMatrix matrix; // rows = relators, cols = non-stable generators
  std::string stable;   // generator with phi == 1
  std::vector<std::string> column_order;
};

/// Builds the Alexander matrix; applies ensure_stable_generator first when no
/// generator has class value 1. Throws std::invalid_argument if phi is not
/// primitive or not a homomorphism for p.
AlexanderMatrix alexander_matrix(const Presentation &p, const CyclicClass &phi);

/// Order of the Alexander module: normalized gcd of the maximal minors of the
/// Alexander matrix (k = column count).
LaurentPoly alexander_polynomial(const Presentation &p, const CyclicClass &phi,
                                 std::size_t minor_cap = kDefaultMinorCap);

enum class HnnVerdict {
  AscendingOnly,  // consistent-with-ascending-only
  DescendingOnly, // consistent-with-descending-only
  Both,           // consistent-with-both
  Neither,        // certified: not ascending and not descending
  Inconclusive,   // zero polynomial
};

std::string to_string(HnnVerdict v);

/// Necessary-condition test on the end coefficients of the normalized
/// Alexander polynomial. Orientation is fixed by calibration: the ascending
/// extension <t,a | t^-1 a t a^-2> has a unit constant coefficient, the
/// descending <t,a | t^-1 a^2 t a^-1> a unit leading coefficient. "Neither"
/// is a certificate; unit coefficients are never a certificate of splitting.
struct EndTestReport {
  bool bottom_is_unit = false; // |constant coefficient| == 1 after normalization
  bool top_is_unit = false;    // |leading coefficient| == 1
  HnnVerdict verdict = HnnVerdict::Inconclusive;
};

EndTestReport hnn_end_test(const LaurentPoly &delta);

} // namespace cyclicover
