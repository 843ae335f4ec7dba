#include "cyclicover/fox.hpp"

#include <stdexcept>

namespace cyclicover {

LaurentPoly fox_derivative(const FreeWord &w, const std::string &gen,
                           const CyclicClass &phi) {
  LaurentPoly d;
  std::int64_t prefix = 0; // phi of the prefix read so far
  for (const auto &l : w.letters()) {
    std::int64_t v = phi.value(l.gen);
    if (l.gen == gen) {
      if (l.exp > 0) {
        // D(x^k) = 1 + t^v + ... + t^((k-1)v)
        for (std::int64_t j = 0; j < l.exp; ++j)
          d = d + LaurentPoly(1, prefix + j * v);
      } else {
        // D(x^-k) = -(t^-v + ... + t^-kv)
        for (std::int64_t j = 1; j <= -l.exp; ++j)
          d = d - LaurentPoly(1, prefix - j * v);
      }
    }
    prefix += l.exp * v;
  }
  return d;
}

AlexanderMatrix alexander_matrix(const Presentation &p, const CyclicClass &phi) {
  if (!phi.is_homomorphism_for(p))
    throw std::invalid_argument("class is not a homomorphism for the presentation");
  auto stable = ensure_stable_generator(p, phi);

  AlexanderMatrix out;
  out.stable = stable.stable;
  for (const auto &g : stable.presentation.generators())
    if (g != stable.stable)
      out.column_order.push_back(g);

  std::vector<FreeWord> rels;
  for (const auto &r : stable.presentation.relators())
    if (!r.is_identity()) // trivial relators are dropped before differentiation
      rels.push_back(r);
  out.matrix = LaurentMatrix(rels.size(), out.column_order.size());
  for (std::size_t r = 0; r < rels.size(); ++r)
    for (std::size_t c = 0; c < out.column_order.size(); ++c)
      out.matrix.at(r, c) = fox_derivative(rels[r], out.column_order[c], stable.phi);
  return out;
}

LaurentPoly alexander_polynomial(const Presentation &p, const CyclicClass &phi,
                                 std::size_t minor_cap) {
  AlexanderMatrix am = alexander_matrix(p, phi);
  return minors_gcd(am.matrix, am.matrix.cols(), minor_cap);
}

std::string to_string(HnnVerdict v) {
  switch (v) {
  case HnnVerdict::AscendingOnly:
    return "consistent-with-ascending-only";
  case HnnVerdict::DescendingOnly:
    return "consistent-with-descending-only";
  case HnnVerdict::Both:
    return "consistent-with-both";
  case HnnVerdict::Neither:
    return "neither";
  case HnnVerdict::Inconclusive:
    return "inconclusive";
  }
  return "?";
}

EndTestReport hnn_end_test(const LaurentPoly &delta) {
  EndTestReport r;
  if (delta.is_zero())
    return r;
  LaurentPoly d = delta.normalized();
  mpz_class bottom = abs(d.coeff(0));
  mpz_class top = abs(d.coeff(d.max_deg()));
  r.bottom_is_unit = bottom == 1;
  r.top_is_unit = top == 1;
  if (r.bottom_is_unit && r.top_is_unit)
    r.verdict = HnnVerdict::Both;
  else if (r.bottom_is_unit)
    r.verdict = HnnVerdict::AscendingOnly;
  else if (r.top_is_unit)
    r.verdict = HnnVerdict::DescendingOnly;
  else
    r.verdict = HnnVerdict::Neither;
  return r;
}

} // namespace cyclicover
