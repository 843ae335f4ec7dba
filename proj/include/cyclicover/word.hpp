#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cyclicover {

// One syllable of a word: a generator id with a nonzero exponent.
struct Letter {
  std::string gen;
  std::int64_t exp = 1;

  friend bool operator==(const Letter &, const Letter &) = default;
};

/// Freely reduced word in the free group on named generators.
/// The empty word is the identity; adjacent letters never share a generator.
class FreeWord {
public:
  FreeWord() = default;

  static FreeWord generator(std::string gen, std::int64_t exp = 1);
  // Reduces the given letter sequence (merges neighbours, drops exponent 0).
  static FreeWord from_letters(const std::vector<Letter> &raw);

  const std::vector<Letter> &letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  // Word length as total letter count, i.e. the sum of |exponent|.
  std::int64_t length() const;

  FreeWord inverse() const;
  FreeWord pow(std::int64_t e) const;
  // Conjugation by c: c^-1 * w * c.
  FreeWord conjugated_by(const FreeWord &c) const;
  // Merges equal generators across the ends; the result represents the same
  // conjugacy class and satisfies front.gen != back.gen (or has <= 1 letter).
  FreeWord cyclically_reduced() const;
  // Replaces every occurrence of `gen` by `replacement` (raised to the
  // occurrence's exponent) and reduces.
  FreeWord substituted(const std::string &gen, const FreeWord &replacement) const;

  std::int64_t exponent_sum(const std::string &gen) const;
  // Total occurrence count of `gen`, counting multiplicity |exponent|.
  std::int64_t occurrences(const std::string &gen) const;
  bool mentions(const std::string &gen) const;

  std::string str() const;

  friend FreeWord operator*(const FreeWord &u, const FreeWord &v);
  friend bool operator==(const FreeWord &, const FreeWord &) = default;

private:
  std::vector<Letter> letters_;

  void append_reduced(const std::string &gen, std::int64_t exp);
};

// Equality of cyclic words: some rotation of a's letters equals b's.
// Both arguments must already be cyclically reduced.
bool cyclically_equal(const FreeWord &a, const FreeWord &b);

} // namespace cyclicover
