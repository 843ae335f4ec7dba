#include "cyclicover/covers.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cyclicover/matrix.hpp"

namespace cyclicover {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::string fresh(const std::string &want, const std::set<std::string> &taken) {
  if (!taken.count(want))
    return want;
  for (int k = 1;; ++k) {
    std::string cand = want + "_" + std::to_string(k);
    if (!taken.count(cand))
      return cand;
  }
}

} // namespace

CoverPresentation cyclic_cover_presentation(const Presentation &p, const CyclicClass &phi,
                                            std::int64_t index) {
  if (index < 1)
    throw std::invalid_argument("cover index must be >= 1");
  auto stable = ensure_stable_generator(p, phi);
  const Presentation &sp = stable.presentation;
  const CyclicClass &sphi = stable.phi;
  const std::string &t = stable.stable;

  CoverPresentation out;
  out.index = index;

  std::vector<std::string> others;
  for (const auto &g : sp.generators())
    if (g != t)
      others.push_back(g);

  // Copy names x_j are collision-free among themselves (the trailing _j is
  // recoverable), so only the power generator needs a freshness check.
  std::set<std::string> taken;
  for (const auto &x : others)
    for (std::int64_t j = 0; j < index; ++j)
      taken.insert(x + "_" + std::to_string(j));
  out.power_gen = fresh("s", taken);

  std::vector<std::string> gens;
  gens.push_back(out.power_gen);
  for (const auto &x : others)
    for (std::int64_t j = 0; j < index; ++j) {
      std::string name = x + "_" + std::to_string(j);
      out.naming[{x, j}] = name;
      gens.push_back(name);
    }

  // Schreier rewriting of a word starting from coset class c: the letter x at
  // class c becomes the generator (x, c) and moves the class to c - phi(x);
  // the stable letter is a transversal step and contributes only when it
  // crosses class 0, where it yields s = t^index.
  auto rewrite = [&](const FreeWord &w, std::int64_t start_class) {
    FreeWord result;
    std::int64_t c = start_class;
    for (const auto &l : w.letters()) {
      std::int64_t v = sphi.value(l.gen);
      std::int64_t steps = l.exp > 0 ? l.exp : -l.exp;
      std::int64_t sign = l.exp > 0 ? 1 : -1;
      for (std::int64_t k = 0; k < steps; ++k) {
        if (l.gen == t) {
          if (sign > 0) {
            if (c == 0)
              result = result * FreeWord::generator(out.power_gen);
            c = mod(c - 1, index);
          } else {
            c = mod(c + 1, index);
            if (c == 0)
              result = result * FreeWord::generator(out.power_gen, -1);
          }
        } else {
          if (sign > 0) {
            result = result * FreeWord::generator(out.naming[{l.gen, c}]);
            c = mod(c - v, index);
          } else {
            c = mod(c + v, index);
            result = result * FreeWord::generator(out.naming[{l.gen, c}], -1);
          }
        }
      }
    }
    return result;
  };

  std::vector<FreeWord> rels;
  for (const auto &r : sp.relators())
    for (std::int64_t j = 0; j < index; ++j)
      rels.push_back(rewrite(r, j));

  out.presentation = Presentation(gens, rels);
  return out;
}

namespace {

// Position of the single occurrence of an eligible generator, or npos.
std::size_t single_unit_position(const FreeWord &r, const std::string &g) {
  std::size_t pos = std::string::npos;
  for (std::size_t i = 0; i < r.letters().size(); ++i) {
    const auto &l = r.letters()[i];
    if (l.gen != g)
      continue;
    if (l.exp != 1 && l.exp != -1)
      return std::string::npos;
    if (pos != std::string::npos)
      return std::string::npos;
    pos = i;
  }
  return pos;
}

} // namespace

Presentation tietze_simplify(const Presentation &p, std::int64_t max_passes,
                             std::int64_t length_guard) {
  std::vector<std::string> gens = p.generators();
  std::vector<FreeWord> rels = p.relators();
  std::set<std::string> skipped;

  for (std::int64_t step = 0; step < max_passes; ++step) {
    rels.erase(std::remove_if(rels.begin(), rels.end(),
                              [](const FreeWord &r) { return r.is_identity(); }),
               rels.end());

    // candidate order: shortest relator first (ties by position), generators
    // in lexicographic order within a relator
    std::vector<std::size_t> order(rels.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return rels[a].length() < rels[b].length();
    });

    bool applied = false;
    for (std::size_t oi = 0; oi < order.size() && !applied; ++oi) {
      const FreeWord &r = rels[order[oi]];
      std::vector<std::string> cand;
      for (const auto &l : r.letters())
        if (!skipped.count(l.gen) && r.occurrences(l.gen) == 1)
          cand.push_back(l.gen);
      std::sort(cand.begin(), cand.end());
      for (const auto &g : cand) {
        std::size_t pos = single_unit_position(r, g);
        if (pos == std::string::npos)
          continue;

        // r = u g^e v  =>  g = u^-1 v^-1 (e = 1)  or  g = v u (e = -1)
        FreeWord u = FreeWord::from_letters(
            {r.letters().begin(), r.letters().begin() + static_cast<std::ptrdiff_t>(pos)});
        FreeWord v = FreeWord::from_letters(
            {r.letters().begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.letters().end()});
        FreeWord repl = r.letters()[pos].exp == 1 ? u.inverse() * v.inverse() : v * u;

        // conservative length estimate before substituting
        std::int64_t estimate = 0;
        for (std::size_t i = 0; i < rels.size(); ++i) {
          if (i == order[oi])
            continue;
          estimate += rels[i].length() + rels[i].occurrences(g) * repl.length();
        }
        if (estimate > length_guard) {
          skipped.insert(g);
          continue;
        }

        std::vector<FreeWord> next;
        next.reserve(rels.size() - 1);
        for (std::size_t i = 0; i < rels.size(); ++i) {
          if (i == order[oi])
            continue;
          next.push_back(rels[i].substituted(g, repl).cyclically_reduced());
        }
        rels = std::move(next);
        gens.erase(std::find(gens.begin(), gens.end(), g));
        applied = true;
        break;
      }
    }
    if (!applied)
      break;
  }

  rels.erase(std::remove_if(rels.begin(), rels.end(),
                            [](const FreeWord &r) { return r.is_identity(); }),
             rels.end());
  return Presentation(gens, rels);
}

IntMatrix abelianized_relation_matrix(const Presentation &p) {
  IntMatrix m(p.relators().size(), p.generators().size());
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (std::size_t c = 0; c < p.generators().size(); ++c)
      m.at(r, c) = p.relators()[r].exponent_sum(p.generators()[c]);
  return m;
}

std::size_t rank_lower_bound(const Presentation &p) {
  SmithResult snf = smith_normal_form(abelianized_relation_matrix(p));
  return cokernel_min_generators(snf, p.generators().size());
}

RankBoundSequence rank_gradient_sequence(const Presentation &p, const CyclicClass &phi,
                                         std::int64_t max_index) {
  if (max_index < 1)
    throw std::invalid_argument("max index must be >= 1");
  RankBoundSequence seq;
  for (std::int64_t i = 1; i <= max_index; ++i) {
    CoverPresentation cover = cyclic_cover_presentation(p, phi, i);
    Presentation simplified = tietze_simplify(cover.presentation);
    RankBoundEntry e;
    e.index = i;
    e.lower = rank_lower_bound(cover.presentation);
    e.upper = simplified.generators().size();
    e.lower_ratio = mpq_class(static_cast<long>(e.lower), static_cast<long>(i));
    e.upper_ratio = mpq_class(static_cast<long>(e.upper), static_cast<long>(i));
    e.lower_ratio.canonicalize();
    e.upper_ratio.canonicalize();
    if (seq.entries.empty() || e.upper_ratio < seq.min_upper_ratio)
      seq.min_upper_ratio = e.upper_ratio;
    seq.entries.push_back(std::move(e));
  }
  return seq;
}

FreeKernelRank free_kernel_rank(std::int64_t n, std::int64_t m, std::int64_t i) {
  if (n < 1 || m < 1 || i < 1)
    throw std::invalid_argument("free_kernel_rank arguments must be >= 1");
  std::int64_t idx = std::lcm(m, i) / m;
  return {idx, idx * (n - 1) + 1};
}

} // namespace cyclicover
