#include "cyclicover/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cyclicover {

mpq_class parse_rational(const std::string &s) {
  auto is_int = [](const std::string &t) {
    if (t.empty())
      return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size())
      return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        return false;
    return true;
  };

  std::size_t slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw std::invalid_argument("malformed rational: " + s);
  mpz_class n(num), d(den);
  if (d == 0)
    throw std::invalid_argument("zero denominator: " + s);
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_str(const mpq_class &q) { return q.get_str(); }

mpq_class rational_pow(const mpq_class &base, std::int64_t e) {
  if (e == 0)
    return 1;
  if (e < 0) {
    if (base == 0)
      throw std::invalid_argument("zero to a negative power");
    return rational_pow(1 / base, -e);
  }
  mpq_class acc = 1, b = base;
  std::int64_t n = e;
  while (n > 0) {
    if (n & 1)
      acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

mpq_class rational_invert(const mpq_class &q) {
  if (q == 0)
    throw std::invalid_argument("division by zero");
  return 1 / q;
}

std::vector<std::pair<mpz_class, std::int64_t>> factorize(mpz_class n) {
  if (n < 1)
    throw std::invalid_argument("factorize expects n >= 1");
  std::vector<std::pair<mpz_class, std::int64_t>> out;
  mpz_class p = 2;
  while (p * p <= n) {
    if (n % p == 0) {
      std::int64_t e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
    p += (p == 2) ? 1 : 2;
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

} // namespace cyclicover
