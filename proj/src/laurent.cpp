#include "cyclicover/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclicover {

LaurentPoly::LaurentPoly(const mpz_class &c, std::int64_t deg) {
  if (c != 0) {
    min_deg_ = deg;
    coeffs_.push_back(c);
  }
}

LaurentPoly LaurentPoly::from_coeffs(std::int64_t min_deg, std::vector<mpz_class> coeffs) {
  LaurentPoly p;
  p.min_deg_ = min_deg;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  std::size_t lead = coeffs_.size();
  while (lead > 0 && coeffs_[lead - 1] == 0)
    --lead;
  coeffs_.resize(lead);
  std::size_t low = 0;
  while (low < coeffs_.size() && coeffs_[low] == 0)
    ++low;
  if (low > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(low));
    min_deg_ += static_cast<std::int64_t>(low);
  }
  if (coeffs_.empty())
    min_deg_ = 0;
}

mpz_class LaurentPoly::coeff(std::int64_t deg) const {
  if (is_zero() || deg < min_deg_ || deg > max_deg())
    return 0;
  return coeffs_[static_cast<std::size_t>(deg - min_deg_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto &c : p.coeffs_)
    c = -c;
  return p;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly p = *this;
  if (!p.is_zero())
    p.min_deg_ += k;
  return p;
}

LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b) {
  if (a.is_zero())
    return b;
  if (b.is_zero())
    return a;
  std::int64_t lo = std::min(a.min_deg(), b.min_deg());
  std::int64_t hi = std::max(a.max_deg(), b.max_deg());
  std::vector<mpz_class> c(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t d = a.min_deg(); d <= a.max_deg(); ++d)
    c[static_cast<std::size_t>(d - lo)] += a.coeffs()[static_cast<std::size_t>(d - a.min_deg())];
  for (std::int64_t d = b.min_deg(); d <= b.max_deg(); ++d)
    c[static_cast<std::size_t>(d - lo)] += b.coeffs()[static_cast<std::size_t>(d - b.min_deg())];
  return LaurentPoly::from_coeffs(lo, std::move(c));
}

LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
  if (a.is_zero() || b.is_zero())
    return LaurentPoly();
  std::vector<mpz_class> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return LaurentPoly::from_coeffs(a.min_deg() + b.min_deg(), std::move(c));
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero())
    return *this;
  LaurentPoly p = shifted(-min_deg_);
  if (p.coeffs_.back() < 0)
    p = -p;
  return p;
}

bool LaurentPoly::is_unit() const {
  return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
}

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (const auto &c : coeffs_)
    g = gcd(g, c);
  return abs(g);
}

mpz_class LaurentPoly::eval_at_one() const {
  mpz_class s = 0;
  for (const auto &c : coeffs_)
    s += c;
  return s;
}

std::string LaurentPoly::str(bool star) const {
  if (is_zero())
    return "0";
  std::string out;
  for (std::int64_t d = min_deg(); d <= max_deg(); ++d) {
    mpz_class c = coeff(d);
    if (c == 0)
      continue;
    bool neg = c < 0;
    mpz_class a = abs(c);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mag = a.get_str();
    if (d == 0) {
      out += mag;
    } else {
      if (a != 1)
        out += mag + (star ? "*" : "");
      out += 't';
      if (d != 1)
        out += '^' + std::to_string(d);
    }
  }
  return out;
}

namespace {

// plain Z[t] polynomial, ascending coefficients, for the gcd internals
using Zpoly = std::vector<mpz_class>;

void ztrim(Zpoly &p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

mpz_class zcontent(const Zpoly &p) {
  mpz_class g = 0;
  for (const auto &c : p)
    g = gcd(g, c);
  return abs(g);
}

void zdiv_scalar(Zpoly &p, const mpz_class &d) {
  for (auto &c : p)
    c /= d;
}

// pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b
Zpoly prem(Zpoly a, const Zpoly &b) {
  mpz_class lead = b.back();
  while (a.size() >= b.size()) {
    mpz_class top = a.back();
    for (auto &c : a)
      c *= lead;
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[off + i] -= top * b[i];
    ztrim(a);
    if (a.empty())
      break;
  }
  return a;
}

Zpoly to_zpoly(const LaurentPoly &p) { return p.coeffs(); }

} // namespace

LaurentPoly laurent_gcd(const LaurentPoly &p, const LaurentPoly &q) {
  if (p.is_zero())
    return q.normalized();
  if (q.is_zero())
    return p.normalized();

  mpz_class cont = gcd(p.content(), q.content());
  Zpoly a = to_zpoly(p), b = to_zpoly(q);
  zdiv_scalar(a, zcontent(a));
  zdiv_scalar(b, zcontent(b));
  if (a.size() < b.size())
    std::swap(a, b);
  // primitive pseudo-remainder sequence
  while (!b.empty()) {
    Zpoly r = prem(a, b);
    if (!r.empty())
      zdiv_scalar(r, zcontent(r));
    a = std::move(b);
    b = std::move(r);
  }
  LaurentPoly g = LaurentPoly::from_coeffs(0, std::move(a));
  return (LaurentPoly(cont, 0) * g).normalized();
}

std::optional<LaurentPoly> laurent_divide_exact(const LaurentPoly &p, const LaurentPoly &d) {
  if (d.is_zero())
    return std::nullopt;
  if (p.is_zero())
    return LaurentPoly();

  // Work in Z[t] with both ends at degree 0; the unit shift of the quotient
  // is then forced to p.min - d.min.
  Zpoly num = p.coeffs();
  const Zpoly &den = d.coeffs();
  if (num.size() < den.size())
    return std::nullopt;
  Zpoly quot(num.size() - den.size() + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpz_class top = num[k + den.size() - 1];
    if (top == 0)
      continue;
    mpz_class qc, rem;
    mpz_fdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(), den.back().get_mpz_t());
    if (rem != 0)
      return std::nullopt;
    quot[k] = qc;
    for (std::size_t i = 0; i < den.size(); ++i)
      num[k + i] -= qc * den[i];
  }
  for (const auto &c : num)
    if (c != 0)
      return std::nullopt;
  return LaurentPoly::from_coeffs(p.min_deg() - d.min_deg(), std::move(quot));
}

} // namespace cyclicover
