#include "cyclicover/plmap.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "cyclicover/rational.hpp"

namespace cyclicover {

namespace {

// --- small exact linear algebra over mpq, used for exponent-vector solves ---

using QMatrix = std::vector<std::vector<mpq_class>>;

// Row echelon form in place; returns pivot column per row-step.
std::vector<std::size_t> echelon(QMatrix &m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0)
      ++piv;
    if (piv == m.size())
      continue;
    std::swap(m[row], m[piv]);
    mpq_class lead = m[row][col];
    for (auto &v : m[row])
      v /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0)
        continue;
      mpq_class f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c)
        m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

SlopeBasis SlopeBasis::make(std::vector<std::int64_t> basis) {
  if (basis.empty())
    throw std::invalid_argument("slope basis must be nonempty");
  SlopeBasis out;
  out.basis_ = std::move(basis);

  mpz_class product = 1;
  for (auto n : out.basis_) {
    if (n < 2)
      throw std::invalid_argument("slope basis entries must be >= 2");
    product *= n;
  }
  for (const auto &[p, e] : factorize(product))
    out.primes_.push_back(static_cast<std::int64_t>(p.get_si()));

  out.exponents_ = IntMatrix(out.basis_.size(), out.primes_.size());
  for (std::size_t i = 0; i < out.basis_.size(); ++i)
    for (const auto &[p, e] : factorize(out.basis_[i]))
      for (std::size_t c = 0; c < out.primes_.size(); ++c)
        if (p == out.primes_[c])
          out.exponents_.at(i, c) = e;

  // Multiplicative independence: the exponent matrix must have full row rank.
  SmithResult snf = smith_normal_form(out.exponents_);
  if (snf.rank < out.basis_.size()) {
    // Witness relation: nonzero integer row combination that vanishes.
    // Row-reduce [E | I] and read the combination off a vanished E-part.
    std::size_t k = out.basis_.size(), np = out.primes_.size();
    QMatrix aug(k, std::vector<mpq_class>(np + k, 0));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < np; ++c)
        aug[r][c] = mpq_class(out.exponents_.at(r, c));
      aug[r][np + r] = 1;
    }
    echelon(aug, np);
    std::string relation = "1";
    for (std::size_t r = 0; r < k; ++r) {
      bool zero = true;
      for (std::size_t c = 0; c < np && zero; ++c)
        zero = aug[r][c] == 0;
      if (!zero)
        continue;
      // clear denominators and divide by content
      mpz_class scale = 1;
      for (std::size_t j = 0; j < k; ++j)
        scale = lcm(scale, aug[r][np + j].get_den());
      std::vector<mpz_class> coef(k);
      mpz_class content = 0;
      for (std::size_t j = 0; j < k; ++j) {
        mpq_class scaled = aug[r][np + j] * scale; // integral by choice of scale
        coef[j] = scaled.get_num();
        content = gcd(content, coef[j]);
      }
      relation.clear();
      for (std::size_t j = 0; j < k; ++j) {
        if (coef[j] == 0)
          continue;
        mpz_class e = coef[j] / content;
        if (!relation.empty())
          relation += " * ";
        relation += std::to_string(out.basis_[j]) + "^" + e.get_str();
      }
      relation += " = 1";
      break;
    }
    throw std::invalid_argument("slope basis is multiplicatively dependent: " + relation);
  }
  return out;
}

mpz_class SlopeBasis::ring_modulus() const {
  mpz_class n = 1;
  for (auto v : basis_)
    n *= v;
  return n;
}

mpq_class SlopeExponent::value(const SlopeBasis &basis) const {
  if (j.size() != basis.size())
    throw std::invalid_argument("exponent vector length does not match basis");
  mpq_class v = 1;
  for (std::size_t i = 0; i < j.size(); ++i)
    v *= rational_pow(mpq_class(basis.values()[i]), j[i]);
  return v;
}

SlopeExponent slope_exponent_zero(const SlopeBasis &basis) {
  return {std::vector<std::int64_t>(basis.size(), 0)};
}

SlopeExponent slope_exponent_add(const SlopeExponent &a, const SlopeExponent &b) {
  if (a.j.size() != b.j.size())
    throw std::invalid_argument("exponent vector length mismatch");
  SlopeExponent out = a;
  for (std::size_t i = 0; i < out.j.size(); ++i)
    out.j[i] += b.j[i];
  return out;
}

SlopeExponent slope_exponent_neg(const SlopeExponent &a) {
  SlopeExponent out = a;
  for (auto &v : out.j)
    v = -v;
  return out;
}

namespace {

// Exponent of each basis prime in x > 0, or nullopt if a foreign prime occurs.
std::optional<std::vector<std::int64_t>> prime_exponents(const mpq_class &x,
                                                         const SlopeBasis &basis) {
  std::vector<std::int64_t> e(basis.primes().size(), 0);
  mpz_class num = x.get_num(), den = x.get_den();
  for (std::size_t i = 0; i < basis.primes().size(); ++i) {
    mpz_class p = basis.primes()[i];
    while (num % p == 0) {
      num /= p;
      ++e[i];
    }
    while (den % p == 0) {
      den /= p;
      --e[i];
    }
  }
  if (num != 1 || den != 1)
    return std::nullopt;
  return e;
}

} // namespace

std::optional<SlopeExponent> slope_membership(const mpq_class &s, const SlopeBasis &basis) {
  if (s <= 0)
    throw std::invalid_argument("slope must be positive");
  auto target = prime_exponents(s, basis);
  if (!target)
    return std::nullopt;

  // solve j * E = e over the integers; E has full row rank so a rational
  // solution, if consistent, is unique
  std::size_t k = basis.size(), np = basis.primes().size();
  QMatrix aug(np, std::vector<mpq_class>(k + 1, 0));
  for (std::size_t c = 0; c < np; ++c) {
    for (std::size_t r = 0; r < k; ++r)
      aug[c][r] = mpq_class(basis.exponent_matrix().at(r, c));
    aug[c][k] = mpq_class(static_cast<long>((*target)[c]));
  }
  auto pivots = echelon(aug, k);

  std::vector<mpq_class> sol(k, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    sol[pivots[r]] = aug[r][k];
  for (std::size_t r = pivots.size(); r < aug.size(); ++r)
    if (aug[r][k] != 0)
      return std::nullopt; // inconsistent
  SlopeExponent out;
  out.j.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (sol[i].get_den() != 1)
      return std::nullopt;
    out.j[i] = static_cast<std::int64_t>(sol[i].get_num().get_si());
  }
  return out;
}

bool in_ring(const mpq_class &x, const SlopeBasis &basis) {
  mpz_class den = x.get_den();
  for (auto p : basis.primes())
    while (den % p == 0)
      den /= p;
  return den == 1;
}

GroupSpec GroupSpec::make(const mpq_class &ell, SlopeBasis basis) {
  if (ell <= 0)
    throw std::invalid_argument("ell must be positive");
  if (!in_ring(ell, basis))
    throw std::invalid_argument("ell = " + rational_str(ell) + " is not in Z[1/" +
                                basis.ring_modulus().get_str() + "]");
  return {ell, std::move(basis)};
}

PLMap PLMap::identity(const mpq_class &ell) {
  return from_breakpoints(ell, {{0, 0}, {ell, ell}});
}

PLMap PLMap::from_breakpoints(const mpq_class &ell,
                              std::vector<std::pair<mpq_class, mpq_class>> pts) {
  if (ell <= 0)
    throw std::invalid_argument("ell must be positive");
  if (pts.size() < 2 || pts.front() != std::make_pair(mpq_class(0), mpq_class(0)) ||
      pts.back() != std::make_pair(ell, ell))
    throw std::invalid_argument("breakpoints must run from (0,0) to (ell,ell)");
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i - 1].first >= pts[i].first || pts[i - 1].second >= pts[i].second)
      throw std::invalid_argument("breakpoints must be strictly increasing");

  // canonical form: drop interior points where the slope does not change
  std::vector<std::pair<mpq_class, mpq_class>> canon;
  canon.push_back(pts.front());
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const auto &a = canon.back();
    const auto &b = pts[i];
    const auto &c = pts[i + 1];
    mpq_class left = (b.second - a.second) / (b.first - a.first);
    mpq_class right = (c.second - b.second) / (c.first - b.first);
    if (left != right)
      canon.push_back(b);
  }
  canon.push_back(pts.back());

  PLMap f;
  f.ell_ = ell;
  f.pts_ = std::move(canon);
  return f;
}

std::vector<mpq_class> PLMap::segment_slopes() const {
  std::vector<mpq_class> slopes;
  for (std::size_t i = 1; i < pts_.size(); ++i)
    slopes.push_back((pts_[i].second - pts_[i - 1].second) /
                     (pts_[i].first - pts_[i - 1].first));
  return slopes;
}

mpq_class PLMap::eval(const mpq_class &x) const {
  if (x < 0 || x > ell_)
    throw std::invalid_argument("argument outside [0, ell]");
  for (std::size_t i = 1; i < pts_.size(); ++i) {
    if (x <= pts_[i].first) {
      const auto &a = pts_[i - 1];
      const auto &b = pts_[i];
      return a.second + (x - a.first) * (b.second - a.second) / (b.first - a.first);
    }
  }
  return pts_.back().second;
}

mpq_class PLMap::eval_inverse(const mpq_class &y) const {
  if (y < 0 || y > ell_)
    throw std::invalid_argument("argument outside [0, ell]");
  for (std::size_t i = 1; i < pts_.size(); ++i) {
    if (y <= pts_[i].second) {
      const auto &a = pts_[i - 1];
      const auto &b = pts_[i];
      return a.first + (y - a.second) * (b.first - a.first) / (b.second - a.second);
    }
  }
  return pts_.back().first;
}

mpq_class PLMap::slope_at_zero() const {
  return (pts_[1].second - pts_[0].second) / (pts_[1].first - pts_[0].first);
}

mpq_class PLMap::slope_at_ell() const {
  const auto &a = pts_[pts_.size() - 2];
  const auto &b = pts_.back();
  return (b.second - a.second) / (b.first - a.first);
}

PLMap PLMap::inverse() const {
  std::vector<std::pair<mpq_class, mpq_class>> pts;
  pts.reserve(pts_.size());
  for (const auto &[x, y] : pts_)
    pts.emplace_back(y, x);
  return from_breakpoints(ell_, std::move(pts));
}

std::vector<std::pair<mpq_class, mpq_class>> PLMap::fixed_points() const {
  std::vector<std::pair<mpq_class, mpq_class>> found;
  for (std::size_t i = 1; i < pts_.size(); ++i) {
    const auto &a = pts_[i - 1];
    const auto &b = pts_[i];
    mpq_class slope = (b.second - a.second) / (b.first - a.first);
    if (slope == 1) {
      if (a.second == a.first) // whole segment fixed
        found.emplace_back(a.first, b.first);
    } else {
      // a.y + s (x - a.x) = x  =>  x = (a.y - s a.x) / (1 - s)
      mpq_class x = (a.second - slope * a.first) / (1 - slope);
      if (x >= a.first && x <= b.first)
        found.emplace_back(x, x);
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<std::pair<mpq_class, mpq_class>> merged;
  for (const auto &iv : found) {
    if (!merged.empty() && iv.first <= merged.back().second)
      merged.back().second = std::max(merged.back().second, iv.second);
    else
      merged.push_back(iv);
  }
  return merged;
}

PLMap compose(const PLMap &f, const PLMap &g) {
  if (f.ell() != g.ell())
    throw std::invalid_argument("cannot compose maps on different intervals");
  std::vector<mpq_class> xs;
  for (const auto &[x, y] : g.breakpoints())
    xs.push_back(x);
  for (const auto &[x, y] : f.breakpoints())
    xs.push_back(g.eval_inverse(x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<std::pair<mpq_class, mpq_class>> pts;
  pts.reserve(xs.size());
  for (const auto &x : xs)
    pts.emplace_back(x, f.eval(g.eval(x)));
  return PLMap::from_breakpoints(f.ell(), std::move(pts));
}

ValidationReport validate_breakpoints(const mpq_class &ell,
                                      const std::vector<std::pair<mpq_class, mpq_class>> &pts,
                                      const GroupSpec &spec) {
  ValidationReport rep;
  auto fail = [&rep](const std::string &why) {
    rep.valid = false;
    rep.violations.push_back(why);
  };

  if (ell != spec.ell)
    fail("interval length " + rational_str(ell) + " does not match spec ell " +
         rational_str(spec.ell));
  if (pts.size() < 2) {
    fail("fewer than two breakpoints");
    return rep;
  }
  if (pts.front() != std::make_pair(mpq_class(0), mpq_class(0)))
    fail("first breakpoint is not (0,0)");
  if (pts.back() != std::make_pair(ell, ell))
    fail("last breakpoint is not (ell,ell)");
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i - 1].first >= pts[i].first || pts[i - 1].second >= pts[i].second) {
      fail("breakpoints not strictly increasing at index " + std::to_string(i));
      return rep;
    }

  for (const auto &[x, y] : pts) {
    if (!in_ring(x, spec.basis))
      fail("breakpoint coordinate " + rational_str(x) + " is not in Z[1/" +
           spec.basis.ring_modulus().get_str() + "]");
    if (!in_ring(y, spec.basis))
      fail("breakpoint coordinate " + rational_str(y) + " is not in Z[1/" +
           spec.basis.ring_modulus().get_str() + "]");
  }

  mpq_class prev_slope = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    mpq_class slope = (pts[i].second - pts[i - 1].second) /
                      (pts[i].first - pts[i - 1].first);
    if (!slope_membership(slope, spec.basis))
      fail("segment slope " + rational_str(slope) + " is not in the slope group");
    if (i > 1 && slope == prev_slope)
      fail("consecutive segments share slope " + rational_str(slope) +
           " (not in canonical form)");
    prev_slope = slope;
  }
  return rep;
}

ValidationReport validate(const PLMap &f, const GroupSpec &spec) {
  return validate_breakpoints(f.ell(), f.breakpoints(), spec);
}

namespace {

SlopeExponent char_of_slope(const mpq_class &slope, const SlopeBasis &basis) {
  auto e = slope_membership(slope, basis);
  if (!e)
    throw std::invalid_argument("slope " + rational_str(slope) +
                                " is not in the slope group");
  return *e;
}

} // namespace

SlopeExponent lambda_char(const PLMap &f, const SlopeBasis &basis) {
  return char_of_slope(f.slope_at_zero(), basis);
}

SlopeExponent rho_char(const PLMap &f, const SlopeBasis &basis) {
  return char_of_slope(f.slope_at_ell(), basis);
}

PLMap irreducibility_witness(const GroupSpec &spec, const SlopeExponent &nu) {
  mpq_class v = nu.value(spec.basis);
  if (v <= 1)
    throw std::invalid_argument("irreducibility witness needs nu > 1");
  mpq_class ell = spec.ell;
  mpq_class n(spec.basis.ring_modulus());
  mpq_class step = ell / n;
  PLMap f = PLMap::from_breakpoints(
      ell, {{0, 0}, {step / v, step}, {ell - step, ell - step / v}, {ell, ell}});

  ValidationReport rep = validate(f, spec);
  auto fixed = f.fixed_points();
  bool fixed_ok = fixed.size() == 2 && fixed[0] == std::make_pair(mpq_class(0), mpq_class(0)) &&
                  fixed[1] == std::make_pair(ell, ell);
  if (!rep.valid || !fixed_ok)
    throw std::logic_error("irreducibility witness failed its postcondition");
  return f;
}

PLMap independence_witness(const GroupSpec &spec, const SlopeExponent &nu, End end) {
  mpq_class v = nu.value(spec.basis);
  if (v == 1)
    throw std::invalid_argument("independence witness needs nu != 1");
  mpq_class ell = spec.ell;
  mpq_class n(spec.basis.ring_modulus());
  mpq_class scaled = ell - ell / n; // the construction lives on [0, scaled]
  mpq_class step = scaled / n;

  std::vector<std::pair<mpq_class, mpq_class>> pts;
  if (v > 1)
    pts = {{0, 0},
           {step / v, step},
           {scaled - step, scaled - step / v},
           {scaled, scaled},
           {ell, ell}};
  else
    pts = {{0, 0},
           {step, v * step},
           {scaled - v * step, scaled - step},
           {scaled, scaled},
           {ell, ell}};

  if (end == End::Right) {
    std::vector<std::pair<mpq_class, mpq_class>> mirrored;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it)
      mirrored.emplace_back(ell - it->first, ell - it->second);
    pts = std::move(mirrored);
  }

  PLMap h = PLMap::from_breakpoints(ell, std::move(pts));

  SlopeExponent zero = slope_exponent_zero(spec.basis);
  SlopeExponent lam = lambda_char(h, spec.basis);
  SlopeExponent rho = rho_char(h, spec.basis);
  bool ok = end == End::Left ? (lam == nu && rho == zero) : (rho == nu && lam == zero);
  if (!ok || !validate(h, spec).valid)
    throw std::logic_error("independence witness failed its postcondition");
  return h;
}

IndependenceCertificate independence_certificate(const GroupSpec &spec) {
  IndependenceCertificate cert{.witnesses = {},
                               .irreducibility = PLMap::identity(spec.ell),
                               .irreducibility_fixed = {},
                               .irreducible_ok = false,
                               .pass = false};
  bool all_ok = true;
  SlopeExponent zero = slope_exponent_zero(spec.basis);
  for (std::size_t i = 0; i < spec.basis.size(); ++i) {
    SlopeExponent nu = zero;
    nu.j[i] = 1;
    for (End end : {End::Left, End::Right}) {
      WitnessCheck w{.nu = nu,
                     .nu_value = nu.value(spec.basis),
                     .end = end,
                     .map = independence_witness(spec, nu, end),
                     .lambda_ok = false,
                     .rho_ok = false};
      SlopeExponent lam = lambda_char(w.map, spec.basis);
      SlopeExponent rho = rho_char(w.map, spec.basis);
      w.lambda_ok = lam == (end == End::Left ? nu : zero);
      w.rho_ok = rho == (end == End::Left ? zero : nu);
      all_ok = all_ok && w.lambda_ok && w.rho_ok;
      cert.witnesses.push_back(std::move(w));
    }
  }

  SlopeExponent nu1 = zero;
  nu1.j[0] = 1;
  cert.irreducibility = irreducibility_witness(spec, nu1);
  cert.irreducibility_fixed = cert.irreducibility.fixed_points();
  cert.irreducible_ok =
      cert.irreducibility_fixed.size() == 2 &&
      cert.irreducibility_fixed[0] == std::make_pair(mpq_class(0), mpq_class(0)) &&
      cert.irreducibility_fixed[1] == std::make_pair(spec.ell, spec.ell);
  cert.pass = all_ok && cert.irreducible_ok;
  return cert;
}

std::pair<CharacterDescriptor, CharacterDescriptor>
exceptional_characters(const GroupSpec &spec) {
  IndependenceCertificate cert = independence_certificate(spec);
  if (!cert.pass)
    throw std::invalid_argument("independence certificate failed");
  CharacterDescriptor lam, rho;
  lam.functional = "lambda";
  rho.functional = "rho";
  lam.basis = rho.basis = spec.basis.values();
  for (auto n : spec.basis.values()) {
    lam.weights.push_back("log(" + std::to_string(n) + ")");
    rho.weights.push_back("log(" + std::to_string(n) + ")");
  }
  return {lam, rho};
}

std::string plmap_to_json(const PLMap &f) {
  nlohmann::ordered_json j;
  j["ell"] = rational_str(f.ell());
  j["breakpoints"] = nlohmann::ordered_json::array();
  for (const auto &[x, y] : f.breakpoints())
    j["breakpoints"].push_back({rational_str(x), rational_str(y)});
  return j.dump();
}

PLMap plmap_from_json(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw std::invalid_argument(std::string("malformed PL map JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("ell") || !j.contains("breakpoints"))
    throw std::invalid_argument("PL map JSON needs \"ell\" and \"breakpoints\"");
  mpq_class ell = parse_rational(j["ell"].get<std::string>());
  std::vector<std::pair<mpq_class, mpq_class>> pts;
  for (const auto &bp : j["breakpoints"]) {
    if (!bp.is_array() || bp.size() != 2)
      throw std::invalid_argument("each breakpoint must be a [x, y] pair");
    pts.emplace_back(parse_rational(bp[0].get<std::string>()),
                     parse_rational(bp[1].get<std::string>()));
  }
  return PLMap::from_breakpoints(ell, std::move(pts));
}

std::string plmap_to_svg(const PLMap &f) {
  const double size = 400, margin = 40;
  const double span = size - 2 * margin;
  double ell = f.ell().get_d();
  auto sx = [&](const mpq_class &v) { return margin + v.get_d() / ell * span; };
  auto sy = [&](const mpq_class &v) { return size - margin - v.get_d() / ell * span; };
  char buf[160];
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
         "viewBox=\"0 0 400 400\">\n";
  svg += "<rect width=\"400\" height=\"400\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
                margin, size - margin, size - margin, size - margin);
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
                margin, size - margin, margin, margin);
  svg += buf;
  svg += "<text x=\"380\" y=\"375\" font-size=\"14\">x</text>\n";
  svg += "<text x=\"22\" y=\"30\" font-size=\"14\">y</text>\n";
  std::string ell_str = rational_str(f.ell());
  std::snprintf(buf, sizeof buf, "<text x=\"%.2f\" y=\"375\" font-size=\"11\">%s</text>\n",
                size - margin - 4.0, ell_str.c_str());
  svg += buf;
  std::snprintf(buf, sizeof buf, "<text x=\"%.2f\" y=\"%.2f\" font-size=\"11\">0</text>\n",
                margin - 10.0, size - margin + 12.0);
  svg += buf;
  // dashed diagonal for reference, then the graph
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#bbbbbb\" "
                "stroke-dasharray=\"4 3\"/>\n",
                margin, size - margin, size - margin, margin);
  svg += buf;
  svg += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (const auto &[x, y] : f.breakpoints()) {
    std::snprintf(buf, sizeof buf, "%.2f,%.2f ", sx(x), sy(y));
    svg += buf;
  }
  if (!f.breakpoints().empty())
    svg.pop_back();
  svg += "\"/>\n";
  for (const auto &[x, y] : f.breakpoints()) {
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"black\"/>\n", sx(x), sy(y));
    svg += buf;
  }
  svg += "</svg>\n";
  return svg;
}

} // namespace cyclicover
