#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <string>
#include <vector>

#include "cyclicover/matrix.hpp"
#include "cyclicover/presentation.hpp"

namespace cyclicover {

/// Presentation of the kernel of G -> Z -> Z/i along a primitive class,
/// produced by Reidemeister-Schreier rewriting over the transversal
/// {1, t, ..., t^(i-1)} (as t^-j representatives, matching x_j = t^-j x t^j
/// for class-0 generators). Before simplification it has
/// i * (non-stable generator count) + 1 generators and i * (relator count)
/// relators.
struct CoverPresentation {
  std::int64_t index = 1;
  Presentation presentation;
  // (original generator, coset exponent 0..i-1) -> new generator id
  std::map<std::pair<std::string, std::int64_t>, std::string> naming;
  std::string power_gen; // s = t^i
};

CoverPresentation cyclic_cover_presentation(const Presentation &p, const CyclicClass &phi,
                                            std::int64_t index);

inline constexpr std::int64_t kTietzeLengthGuard = 1'000'000;

/// Greedy generator elimination: repeatedly drops trivial relators and, for
/// the shortest relator in which some generator occurs exactly once with
/// exponent +-1, solves for that generator and substitutes it everywhere.
/// An elimination that would push the total presentation length past
/// `length_guard` letters is rolled back and that generator is skipped.
Presentation tietze_simplify(const Presentation &p, std::int64_t max_passes = 10'000,
                             std::int64_t length_guard = kTietzeLengthGuard);

/// Relation matrix of the abelianization (rows = relators, entries = exponent
/// sums).
IntMatrix abelianized_relation_matrix(const Presentation &p);

/// Minimal generator count of the abelianization; a lower bound for the rank.
std::size_t rank_lower_bound(const Presentation &p);

struct RankBoundEntry {
  std::int64_t index = 0;
  std::size_t lower = 0;       // abelianization bound for the cover group
  std::size_t upper = 0;       // generator count after greedy simplification
  mpq_class lower_ratio;       // lower / index
  mpq_class upper_ratio;       // upper / index
};

/// Certified rank brackets for the kernels at indices 1..N. The limit
/// inferior is not computable from finitely many indices; min_upper_ratio is
/// only the best upper estimate seen.
struct RankBoundSequence {
  std::vector<RankBoundEntry> entries;
  mpq_class min_upper_ratio;
};

RankBoundSequence rank_gradient_sequence(const Presentation &p, const CyclicClass &phi,
                                         std::int64_t max_index);

struct FreeKernelRank {
  std::int64_t index_of_kernel = 0; // lcm(m, i) / m
  std::int64_t rank = 0;            // index * (n - 1) + 1
};

/// Closed form for the kernel of F_n -> Z -> Z/i when the map to Z has image
/// m*Z: the kernel has index lcm(m,i)/m and is free of rank
/// lcm(m,i)/m * (n-1) + 1.
FreeKernelRank free_kernel_rank(std::int64_t n, std::int64_t m, std::int64_t i);

} // namespace cyclicover
