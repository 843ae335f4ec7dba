#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

#include "cyclicover/matrix.hpp"

namespace cyclicover {

/// Multiplicative slope group <n_1,...,n_k>: positive integers >= 2 that are
/// multiplicatively independent (their prime-exponent vectors have full rank).
class SlopeBasis {
public:
  // Throws std::invalid_argument on n_i < 2 or a dependent basis; the
  // exception message carries a witness relation prod n_i^j_i = 1.
  static SlopeBasis make(std::vector<std::int64_t> basis);

  const std::vector<std::int64_t> &values() const { return basis_; }
  const std::vector<std::int64_t> &primes() const { return primes_; }
  const IntMatrix &exponent_matrix() const { return exponents_; }
  std::size_t size() const { return basis_.size(); }
  // n = n_1 * ... * n_k; breakpoints live in Z[1/n]
  mpz_class ring_modulus() const;

  friend bool operator==(const SlopeBasis &, const SlopeBasis &) = default;

private:
  std::vector<std::int64_t> basis_;
  std::vector<std::int64_t> primes_;
  IntMatrix exponents_; // size() rows, primes() cols
};

/// Exponent vector j with slope value prod n_i^(j_i).
struct SlopeExponent {
  std::vector<std::int64_t> j;

  mpq_class value(const SlopeBasis &basis) const;
  friend bool operator==(const SlopeExponent &, const SlopeExponent &) = default;
};

SlopeExponent slope_exponent_zero(const SlopeBasis &basis);
SlopeExponent slope_exponent_add(const SlopeExponent &a, const SlopeExponent &b);
SlopeExponent slope_exponent_neg(const SlopeExponent &a);

/// The unique exponent vector with value s, or nullopt when s is not in the
/// slope group. Throws std::invalid_argument on s <= 0.
std::optional<SlopeExponent> slope_membership(const mpq_class &s, const SlopeBasis &basis);

/// True when every prime of den(x) divides the ring modulus.
bool in_ring(const mpq_class &x, const SlopeBasis &basis);

struct GroupSpec {
  mpq_class ell;
  SlopeBasis basis;

  // Throws std::invalid_argument unless 0 < ell and ell is in Z[1/n].
  static GroupSpec make(const mpq_class &ell, SlopeBasis basis);
  friend bool operator==(const GroupSpec &, const GroupSpec &) = default;
};

/// Orientation-preserving PL homeomorphism of [0, ell] in canonical form:
/// breakpoints strictly increasing in both coordinates, first (0,0), last
/// (ell, ell), no two consecutive segments with equal slope. Structural
/// equality is therefore equality of homeomorphisms.
class PLMap {
public:
  static PLMap identity(const mpq_class &ell);
  // Validates the shape (endpoints, strict monotonicity) and removes
  // collinear interior points; throws std::invalid_argument otherwise.
  static PLMap from_breakpoints(const mpq_class &ell,
                                std::vector<std::pair<mpq_class, mpq_class>> pts);

  const mpq_class &ell() const { return ell_; }
  const std::vector<std::pair<mpq_class, mpq_class>> &breakpoints() const { return pts_; }
  std::vector<mpq_class> segment_slopes() const;

  mpq_class eval(const mpq_class &x) const;
  mpq_class eval_inverse(const mpq_class &y) const;

  mpq_class slope_at_zero() const;
  mpq_class slope_at_ell() const;

  PLMap inverse() const;

  /// Exact solution set of f(x) = x: disjoint closed intervals in ascending
  /// order; points appear as degenerate intervals. Always contains 0 and ell.
  std::vector<std::pair<mpq_class, mpq_class>> fixed_points() const;

  friend bool operator==(const PLMap &, const PLMap &) = default;

private:
  mpq_class ell_;
  std::vector<std::pair<mpq_class, mpq_class>> pts_;
};

/// Composite f after g (x -> f(g(x))). Throws on mismatched ell.
PLMap compose(const PLMap &f, const PLMap &g);

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Membership check against F(ell, Z[1/n], <n_1,...,n_k>) on raw breakpoint
/// data; violations are reported, not thrown.
ValidationReport validate_breakpoints(const mpq_class &ell,
                                      const std::vector<std::pair<mpq_class, mpq_class>> &pts,
                                      const GroupSpec &spec);
ValidationReport validate(const PLMap &f, const GroupSpec &spec);

/// Endpoint-slope characters: exponent vector of the first (resp. last)
/// segment slope. Throws std::invalid_argument when the slope is not in the
/// group.
SlopeExponent lambda_char(const PLMap &f, const SlopeBasis &basis);
SlopeExponent rho_char(const PLMap &f, const SlopeBasis &basis);

/// Element with no fixed point in (0, ell): three segments of slope nu, 1,
/// 1/nu through ((1/nu)(ell/n), ell/n) and (ell - ell/n, ell - (1/nu)(ell/n)).
/// Requires nu > 1 (throws otherwise); asserts validity and the fixed-point
/// set {0, ell} as a postcondition.
PLMap irreducibility_witness(const GroupSpec &spec, const SlopeExponent &nu);

enum class End { Left, Right };

/// Element h with lambda(h) = nu, rho(h) = 1 (end = Left; identity near ell),
/// built on the scaled interval [0, ell - ell/n]; the Right version is the
/// mirror image with rho(h) = nu, lambda(h) = 1. Requires nu != 1.
/// Postconditions (both character values) are asserted.
PLMap independence_witness(const GroupSpec &spec, const SlopeExponent &nu, End end);

struct WitnessCheck {
  SlopeExponent nu;
  mpq_class nu_value;
  End end = End::Left;
  PLMap map;
  bool lambda_ok = false;
  bool rho_ok = false;
};

/// Executes the witness constructions that exhibit lambda(G) = lambda(Ker rho)
/// and rho(G) = rho(Ker lambda) on the generators n_i of the value group, plus
/// an irreducibility element for nu = n_1.
struct IndependenceCertificate {
  std::vector<WitnessCheck> witnesses;
  PLMap irreducibility;
  std::vector<std::pair<mpq_class, mpq_class>> irreducibility_fixed;
  bool irreducible_ok = false;
  bool pass = false;
};

IndependenceCertificate independence_certificate(const GroupSpec &spec);

/// Symbolic descriptor of an exceptional character log(lambda) or log(rho):
/// the endpoint exponent vector paired with the weight vector
/// (log n_1, ..., log n_k).
struct CharacterDescriptor {
  std::string functional; // "lambda" | "rho"
  std::vector<std::int64_t> basis;
  std::vector<std::string> weights; // "log(n_i)"
};

/// Restates the two exceptional characters for a spec whose independence
/// certificate passes; throws std::invalid_argument when it does not.
std::pair<CharacterDescriptor, CharacterDescriptor>
exceptional_characters(const GroupSpec &spec);

/// PLMap JSON: {"ell":"p/q","breakpoints":[["x","y"],...]} with rationals as
/// decimal fraction strings.
std::string plmap_to_json(const PLMap &f);
PLMap plmap_from_json(const std::string &text);

/// Fixed-size 400x400 SVG rendering of the graph with axis labels.
std::string plmap_to_svg(const PLMap &f);

} // namespace cyclicover
