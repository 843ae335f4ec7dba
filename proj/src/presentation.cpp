#include "cyclicover/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cyclicover {

Presentation::Presentation(std::vector<std::string> generators,
                           std::vector<FreeWord> relators)
    : generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto &g : generators_) {
    if (g.empty())
      throw std::invalid_argument("empty generator id");
    if (!seen.insert(g).second)
      throw std::invalid_argument("generator declared twice: " + g);
  }
  relators_.reserve(relators.size());
  for (const auto &r : relators) {
    for (const auto &l : r.letters())
      if (!seen.count(l.gen))
        throw std::invalid_argument("relator uses undeclared generator: " + l.gen);
    relators_.push_back(r.cyclically_reduced());
  }
}

bool Presentation::has_generator(const std::string &g) const {
  return std::find(generators_.begin(), generators_.end(), g) != generators_.end();
}

std::int64_t CyclicClass::value(const std::string &gen) const {
  auto it = values_.find(gen);
  if (it == values_.end())
    throw std::invalid_argument("class is not defined on generator: " + gen);
  return it->second;
}

std::int64_t CyclicClass::of_word(const FreeWord &w) const {
  std::int64_t s = 0;
  for (const auto &l : w.letters())
    s += l.exp * value(l.gen);
  return s;
}

bool CyclicClass::is_primitive() const {
  std::int64_t g = 0;
  for (const auto &[gen, v] : values_)
    g = std::gcd(g, v);
  return g == 1;
}

bool CyclicClass::is_homomorphism_for(const Presentation &p) const {
  for (const auto &g : p.generators())
    if (!values_.count(g))
      return false;
  for (const auto &r : p.relators())
    if (of_word(r) != 0)
      return false;
  return true;
}

std::int64_t class_of_word(const CyclicClass &phi, const FreeWord &w) {
  return phi.of_word(w);
}

void HnnData::check() const {
  if (base.has_generator(stable))
    throw std::invalid_argument("stable letter collides with a base generator: " + stable);
  if (assoc_plus.empty() || assoc_plus.size() != assoc_minus.size())
    throw std::invalid_argument("associated word lists must be nonempty and of equal length");
  for (const auto *list : {&assoc_plus, &assoc_minus})
    for (const auto &w : *list)
      for (const auto &l : w.letters())
        if (!base.has_generator(l.gen))
          throw std::invalid_argument("associated word uses undeclared generator: " + l.gen);
}

static bool word_list_is_generating_set(const std::vector<FreeWord> &words,
                                        const std::vector<std::string> &gens) {
  std::set<std::string> found;
  for (const auto &w : words) {
    const auto &ls = w.letters();
    if (ls.size() != 1 || ls[0].exp != 1)
      return false;
    found.insert(ls[0].gen);
  }
  return found == std::set<std::string>(gens.begin(), gens.end());
}

bool HnnData::plus_is_base_generating_set() const {
  return word_list_is_generating_set(assoc_plus, base.generators());
}

bool HnnData::minus_is_base_generating_set() const {
  return word_list_is_generating_set(assoc_minus, base.generators());
}

std::pair<Presentation, CyclicClass> hnn_presentation(const HnnData &h) {
  h.check();
  std::vector<std::string> gens;
  gens.push_back(h.stable);
  for (const auto &g : h.base.generators())
    gens.push_back(g);

  std::vector<FreeWord> rels = h.base.relators();
  FreeWord t = FreeWord::generator(h.stable);
  for (std::size_t i = 0; i < h.assoc_plus.size(); ++i)
    rels.push_back(t.inverse() * h.assoc_plus[i] * t * h.assoc_minus[i].inverse());

  std::map<std::string, std::int64_t> values;
  values[h.stable] = 1;
  for (const auto &g : h.base.generators())
    values[g] = 0;
  return {Presentation(gens, rels), CyclicClass(values)};
}

// Deterministic extended Euclid: returns (g, x, y) with a*x + b*y = g >= 0.
static void ext_gcd(std::int64_t a, std::int64_t b, std::int64_t &g,
                    std::int64_t &x, std::int64_t &y) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp;
    tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * s; old_s = s; s = tmp;
    tmp = old_t - q * t; old_t = t; t = tmp;
  }
  g = old_r; x = old_s; y = old_t;
  if (g < 0) {
    g = -g; x = -x; y = -y;
  }
}

static std::string fresh_name(const std::string &base, const Presentation &p) {
  if (!p.has_generator(base))
    return base;
  for (int k = 1;; ++k) {
    std::string cand = base + "_" + std::to_string(k);
    if (!p.has_generator(cand))
      return cand;
  }
}

StablePresentation ensure_stable_generator(const Presentation &p, const CyclicClass &phi) {
  if (!phi.is_primitive())
    throw std::invalid_argument("class is not primitive");
  for (const auto &g : p.generators())
    if (phi.value(g) == 1)
      return {p, phi, g, false};

  // Smallest support first, then lexicographically first index tuple, over
  // subsets of generators whose values have gcd 1.
  const auto &gens = p.generators();
  std::size_t n = gens.size();
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> best;
  for (std::size_t size = 1; size <= n && best.empty(); ++size) {
    std::vector<std::size_t> idx(size);
    // iterate index combinations in lexicographic order
    for (std::size_t i = 0; i < size; ++i)
      idx[i] = i;
    while (true) {
      std::int64_t g = 0;
      for (auto i : idx)
        g = std::gcd(g, phi.value(gens[i]));
      if (g == 1) {
        best = idx;
        break;
      }
      // next combination
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == n - size + (k - 1))
        --k;
      if (k == 0)
        break;
      ++idx[k - 1];
      for (std::size_t j = k; j < size; ++j)
        idx[j] = idx[j - 1] + 1;
    }
  }
  if (best.empty())
    throw std::invalid_argument("class is not primitive");

  // Bezout coefficients over the chosen subset, folded left to right.
  std::vector<std::int64_t> coeff(best.size(), 0);
  std::int64_t g = phi.value(gens[best[0]]);
  coeff[0] = 1;
  for (std::size_t k = 1; k < best.size(); ++k) {
    std::int64_t gg, x, y;
    ext_gcd(g, phi.value(gens[best[k]]), gg, x, y);
    for (std::size_t j = 0; j < k; ++j)
      coeff[j] *= x;
    coeff[k] = y;
    g = gg;
  }
  if (g == -1) { // single negative value -1
    g = 1;
    for (auto &c : coeff)
      c = -c;
  }

  FreeWord w;
  for (std::size_t k = 0; k < best.size(); ++k)
    if (coeff[k] != 0)
      w = w * FreeWord::generator(gens[best[k]], coeff[k]);

  std::string tau = fresh_name("tau", p);
  std::vector<std::string> new_gens = gens;
  new_gens.push_back(tau);
  std::vector<FreeWord> new_rels = p.relators();
  new_rels.push_back(FreeWord::generator(tau) * w.inverse());

  auto values = phi.values();
  values[tau] = 1;
  return {Presentation(new_gens, new_rels), CyclicClass(values), tau, true};
}

std::string print_presentation(const Presentation &p,
                               const std::optional<CyclicClass> &phi) {
  std::string out = "gens:";
  for (const auto &g : p.generators())
    out += ' ' + g;
  out += "\nrels:";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += p.relators()[i].str();
  }
  out += '\n';
  if (phi) {
    out += "phi:";
    for (const auto &g : p.generators())
      out += ' ' + g + '=' + std::to_string(phi->value(g));
    out += '\n';
  }
  return out;
}

} // namespace cyclicover
