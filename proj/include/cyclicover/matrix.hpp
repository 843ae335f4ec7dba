#pragma once

#include <cstddef>
#include <gmpxx.h>
#include <vector>

#include "cyclicover/laurent.hpp"

namespace cyclicover {

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class &at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class &at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> data_;
};

struct SmithResult {
  // d_1 | d_2 | ... | d_min(r,c), nonnegative.
  std::vector<mpz_class> diagonal;
  std::size_t rank = 0; // count of nonzero invariant factors
};

SmithResult smith_normal_form(IntMatrix m);

/// Minimal generator count of coker(M): Z^cols / row space.
std::size_t cokernel_min_generators(const SmithResult &snf, std::size_t cols);

/// Dense matrix of Laurent polynomials.
class LaurentMatrix {
public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  LaurentPoly &at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const LaurentPoly &at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const LaurentMatrix &, const LaurentMatrix &) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<LaurentPoly> data_;
};

/// Exact determinant of a square Laurent matrix: cofactor expansion up to
/// 4x4, fraction-free (Bareiss) elimination over Z[t] beyond.
LaurentPoly laurent_det(const LaurentMatrix &m);

inline constexpr std::size_t kDefaultMinorCap = 12;

/// Normalized gcd of all k x k minors. Conventions: k = 0 -> 1,
/// k > min(rows, cols) -> 0. Throws SizeLimitError when rows or cols exceed
/// `cap` (the subset enumeration is combinatorial).
LaurentPoly minors_gcd(const LaurentMatrix &m, std::size_t k,
                       std::size_t cap = kDefaultMinorCap);

} // namespace cyclicover
