#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <vector>

namespace cyclicover {

/// Parses "p/q" or "p" (decimal, optional sign) into canonical form.
/// Throws std::invalid_argument on malformed input or zero denominator.
mpq_class parse_rational(const std::string &s);

/// "p/q" with q >= 1, plain "p" when the denominator is 1.
std::string rational_str(const mpq_class &q);

mpq_class rational_pow(const mpq_class &base, std::int64_t e);

/// Throws std::invalid_argument on zero.
mpq_class rational_invert(const mpq_class &q);

/// Prime factors of n >= 1 by trial division, ascending, with multiplicity
/// collapsed: returns (prime, exponent) pairs.
std::vector<std::pair<mpz_class, std::int64_t>> factorize(mpz_class n);

} // namespace cyclicover
