#include "cyclicover/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclicover/errors.hpp"

namespace cyclicover {

namespace {

// Position of an entry with minimal nonzero |value| in m[k.., k..], if any.
bool find_pivot(const IntMatrix &m, std::size_t k, std::size_t &pr, std::size_t &pc) {
  bool found = false;
  mpz_class best;
  for (std::size_t r = k; r < m.rows(); ++r)
    for (std::size_t c = k; c < m.cols(); ++c) {
      const mpz_class &v = m.at(r, c);
      if (v == 0)
        continue;
      mpz_class a = abs(v);
      if (!found || a < best) {
        found = true;
        best = a;
        pr = r;
        pc = c;
      }
    }
  return found;
}

void swap_rows(IntMatrix &m, std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t c = 0; c < m.cols(); ++c)
    std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix &m, std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t r = 0; r < m.rows(); ++r)
    std::swap(m.at(r, a), m.at(r, b));
}

} // namespace

SmithResult smith_normal_form(IntMatrix m) {
  std::size_t n = std::min(m.rows(), m.cols());
  SmithResult out;
  out.diagonal.assign(n, 0);

  for (std::size_t k = 0; k < n; ++k) {
    // Each retry strictly shrinks the minimal |entry| of the submatrix, so
    // the loop terminates.
    while (true) {
      std::size_t pr, pc;
      if (!find_pivot(m, k, pr, pc))
        goto done;
      swap_rows(m, k, pr);
      swap_cols(m, k, pc);

      bool clear = true;
      for (std::size_t r = k + 1; r < m.rows(); ++r) {
        if (m.at(r, k) == 0)
          continue;
        mpz_class q = m.at(r, k) / m.at(k, k); // truncated
        if (q != 0)
          for (std::size_t c = k; c < m.cols(); ++c)
            m.at(r, c) -= q * m.at(k, c);
        if (m.at(r, k) != 0)
          clear = false;
      }
      for (std::size_t c = k + 1; c < m.cols(); ++c) {
        if (m.at(k, c) == 0)
          continue;
        mpz_class q = m.at(k, c) / m.at(k, k);
        if (q != 0)
          for (std::size_t r = k; r < m.rows(); ++r)
            m.at(r, c) -= q * m.at(r, k);
        if (m.at(k, c) != 0)
          clear = false;
      }
      if (!clear)
        continue; // leftover residues are smaller than the pivot

      bool divisible = true;
      for (std::size_t r = k + 1; r < m.rows() && divisible; ++r)
        for (std::size_t c = k + 1; c < m.cols() && divisible; ++c)
          if (m.at(r, c) % m.at(k, k) != 0) {
            for (std::size_t cc = k; cc < m.cols(); ++cc)
              m.at(k, cc) += m.at(r, cc);
            divisible = false;
          }
      if (divisible)
        break;
    }
    if (m.at(k, k) < 0)
      m.at(k, k) = -m.at(k, k);
  }
done:
  for (std::size_t k = 0; k < n; ++k) {
    out.diagonal[k] = m.at(k, k);
    if (out.diagonal[k] != 0)
      ++out.rank;
  }
  return out;
}

std::size_t cokernel_min_generators(const SmithResult &snf, std::size_t cols) {
  std::size_t free_rank = cols - snf.rank;
  std::size_t torsion = 0;
  for (const auto &d : snf.diagonal)
    if (d != 0 && d != 1)
      ++torsion;
  return free_rank + torsion;
}

namespace {

LaurentPoly det_cofactor(const LaurentMatrix &m, std::vector<std::size_t> cols,
                         std::size_t row) {
  if (cols.size() == 1)
    return m.at(row, cols[0]);
  LaurentPoly det;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const LaurentPoly &a = m.at(row, cols[i]);
    if (a.is_zero())
      continue;
    std::vector<std::size_t> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != i)
        rest.push_back(cols[j]);
    LaurentPoly sub = det_cofactor(m, rest, row + 1);
    det = (i % 2 == 0) ? det + a * sub : det - a * sub;
  }
  return det;
}

// Bareiss fraction-free elimination over Z[t]; rows are first shifted to
// min degree 0 and the stripped unit t^shift is restored at the end.
LaurentPoly det_bareiss(const LaurentMatrix &m) {
  std::size_t n = m.rows();
  std::int64_t shift = 0;
  std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n));
  for (std::size_t r = 0; r < n; ++r) {
    std::int64_t lo = 0;
    bool nonzero = false;
    for (std::size_t c = 0; c < n; ++c) {
      const LaurentPoly &e = m.at(r, c);
      if (!e.is_zero()) {
        lo = nonzero ? std::min(lo, e.min_deg()) : e.min_deg();
        nonzero = true;
      }
    }
    if (!nonzero)
      return LaurentPoly();
    shift += lo;
    for (std::size_t c = 0; c < n; ++c)
      a[r][c] = m.at(r, c).shifted(-lo);
  }

  int sign = 1;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k].is_zero())
        ++piv;
      if (piv == n)
        return LaurentPoly();
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r)
      for (std::size_t c = k + 1; c < n; ++c) {
        LaurentPoly num = a[k][k] * a[r][c] - a[r][k] * a[k][c];
        auto q = laurent_divide_exact(num, prev);
        if (!q)
          throw std::logic_error("Bareiss division not exact");
        a[r][c] = *q;
      }
    prev = a[k][k];
  }
  LaurentPoly det = a[n - 1][n - 1].shifted(shift);
  return sign < 0 ? -det : det;
}

} // namespace

LaurentPoly laurent_det(const LaurentMatrix &m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0)
    return LaurentPoly(1);
  if (m.rows() <= 4) {
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t i = 0; i < cols.size(); ++i)
      cols[i] = i;
    return det_cofactor(m, cols, 0);
  }
  return det_bareiss(m);
}

namespace {

// All size-k index subsets of {0..n-1}, lexicographic.
bool next_subset(std::vector<std::size_t> &idx, std::size_t n) {
  std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + (i - 1))
    --i;
  if (i == 0)
    return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j)
    idx[j] = idx[j - 1] + 1;
  return true;
}

} // namespace

LaurentPoly minors_gcd(const LaurentMatrix &m, std::size_t k, std::size_t cap) {
  if (k == 0)
    return LaurentPoly(1);
  if (k > std::min(m.rows(), m.cols()))
    return LaurentPoly();
  if (m.rows() > cap || m.cols() > cap)
    throw SizeLimitError("matrix exceeds the minor-enumeration cap of " +
                         std::to_string(cap) + " (set CYCLICOVER_SIZE_LIMIT to raise)");

  LaurentPoly g;
  std::vector<std::size_t> rows(k), cols(k);
  for (std::size_t i = 0; i < k; ++i)
    rows[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i)
      cols[i] = i;
    do {
      LaurentMatrix sub(k, k);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
          sub.at(r, c) = m.at(rows[r], cols[c]);
      g = laurent_gcd(g, laurent_det(sub));
      if (!g.is_zero() && g.normalized() == LaurentPoly(1))
        return LaurentPoly(1);
    } while (next_subset(cols, m.cols()));
  } while (next_subset(rows, m.rows()));
  return g.normalized();
}

} // namespace cyclicover
