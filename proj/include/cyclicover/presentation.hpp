#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclicover/word.hpp"

namespace cyclicover {

/// Finite presentation: ordered generator list plus relators, which are kept
/// freely and cyclically reduced (cyclic reduction does not change the group).
class Presentation {
public:
  Presentation() = default;
  // Throws std::invalid_argument if a relator mentions an undeclared
  // generator or a generator is declared twice.
  Presentation(std::vector<std::string> generators, std::vector<FreeWord> relators);

  const std::vector<std::string> &generators() const { return generators_; }
  const std::vector<FreeWord> &relators() const { return relators_; }
  bool has_generator(const std::string &g) const;

  friend bool operator==(const Presentation &, const Presentation &) = default;

private:
  std::vector<std::string> generators_;
  std::vector<FreeWord> relators_;
};

/// Integer assignment to generators, inducing a homomorphism to Z.
class CyclicClass {
public:
  CyclicClass() = default;
  explicit CyclicClass(std::map<std::string, std::int64_t> values)
      : values_(std::move(values)) {}

  const std::map<std::string, std::int64_t> &values() const { return values_; }
  // Throws std::invalid_argument on a generator outside the domain.
  std::int64_t value(const std::string &gen) const;
  std::int64_t of_word(const FreeWord &w) const;

  // gcd of all generator values is 1 (i.e. the induced map G -> Z is onto).
  bool is_primitive() const;
  // Every relator must evaluate to 0 for the assignment to be a class.
  bool is_homomorphism_for(const Presentation &p) const;

  friend bool operator==(const CyclicClass &, const CyclicClass &) = default;

private:
  std::map<std::string, std::int64_t> values_;
};

std::int64_t class_of_word(const CyclicClass &phi, const FreeWord &w);

/// HNN extension data <B, t | t^-1 A+ t = A->, with the associated subgroups
/// given by generating word lists over the base generators.
struct HnnData {
  Presentation base;
  std::string stable;
  std::vector<FreeWord> assoc_plus;
  std::vector<FreeWord> assoc_minus;

  // Throws std::invalid_argument on invariant violations (stable letter
  // collides with a base generator, empty or unequal-length word lists,
  // words over undeclared generators).
  void check() const;

  // Syntactic flags: the associated word list is exactly the base generator
  // set. Sufficient for A+ = B (resp. A- = B), never necessary; subgroup
  // equality in general is not decided.
  bool plus_is_base_generating_set() const;
  bool minus_is_base_generating_set() const;
};

/// <B,t | rels(B), t^-1 a+_i t = a-_i>, with the class t -> 1, B -> 0.
std::pair<Presentation, CyclicClass> hnn_presentation(const HnnData &h);

struct StablePresentation {
  Presentation presentation;
  CyclicClass phi;
  std::string stable; // generator with phi == 1
  bool changed = false;
};

/// Returns an equivalent presentation containing a generator of class value 1.
/// If none exists, a fresh generator tau with defining relator tau * w^-1 is
/// added, where w is the lexicographically-first minimal-support word with
/// phi(w) = 1 built from extended-Euclid coefficients.
/// Throws std::invalid_argument if phi is not primitive.
StablePresentation ensure_stable_generator(const Presentation &p, const CyclicClass &phi);

/// Serializes in the presentation file grammar (parse round-trips).
std::string print_presentation(const Presentation &p,
                               const std::optional<CyclicClass> &phi = std::nullopt);

} // namespace cyclicover
