#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

namespace cyclicover {

/// Laurent polynomial over Z: coefficients c[minDeg .. maxDeg] with nonzero
/// ends. The zero polynomial has an empty coefficient list.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long v) : LaurentPoly(mpz_class(v), 0) {}
  LaurentPoly(const mpz_class &c, std::int64_t deg);
  static LaurentPoly from_coeffs(std::int64_t min_deg, std::vector<mpz_class> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t min_deg() const { return min_deg_; }
  std::int64_t max_deg() const { return min_deg_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  const std::vector<mpz_class> &coeffs() const { return coeffs_; }
  mpz_class coeff(std::int64_t deg) const;

  LaurentPoly operator-() const;
  LaurentPoly shifted(std::int64_t k) const; // multiply by t^k

  // Unit-multiply by +-t^k so that min degree is 0 and the leading
  // coefficient is positive; zero stays zero.
  LaurentPoly normalized() const;
  bool is_unit() const; // +-t^k

  mpz_class content() const; // gcd of |coefficients|, 0 for the zero poly
  mpz_class eval_at_one() const;

  /// Ascending-degree display, e.g. "2 - 5t + 2t^2" ("2 - 5*t + 2*t^2" with
  /// explicit multiplication signs).
  std::string str(bool star = false) const;

  friend LaurentPoly operator+(const LaurentPoly &, const LaurentPoly &);
  friend LaurentPoly operator-(const LaurentPoly &, const LaurentPoly &);
  friend LaurentPoly operator*(const LaurentPoly &, const LaurentPoly &);
  friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

private:
  std::int64_t min_deg_ = 0;
  std::vector<mpz_class> coeffs_;

  void trim();
};

/// gcd in the UFD Z[t^+-1], returned normalized. Computed as
/// gcd(contents) * primitive-part gcd (Gauss's lemma); gcd(0, q) = |q|.
LaurentPoly laurent_gcd(const LaurentPoly &p, const LaurentPoly &q);

/// Quotient p / d when d divides p exactly in Z[t^+-1], else nullopt.
std::optional<LaurentPoly> laurent_divide_exact(const LaurentPoly &p, const LaurentPoly &d);

} // namespace cyclicover
