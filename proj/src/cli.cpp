#include "cyclicover/cli.hpp"

#include <fstream>
#include <sstream>

#include "cyclicover/covers.hpp"
#include "cyclicover/fox.hpp"
#include "cyclicover/parse.hpp"
#include "cyclicover/rational.hpp"

namespace cyclicover {

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParsedPresentation parse_file(const std::string &path) {
  return parse_presentation(read_file(path));
}

CyclicClass require_primitive_phi(const ParsedPresentation &pp, const std::string &path) {
  if (!pp.phi)
    throw std::invalid_argument(path + ": a phi block is required for this command");
  if (pp.phi_not_primitive)
    throw std::invalid_argument(path + ": phi is not primitive (gcd of values != 1)");
  return *pp.phi;
}

nlohmann::ordered_json laurent_json(const LaurentPoly &p) {
  nlohmann::ordered_json j;
  j["minDeg"] = p.is_zero() ? 0 : p.min_deg();
  j["coeffs"] = nlohmann::ordered_json::array();
  for (const auto &c : p.coeffs())
    j["coeffs"].push_back(c.get_str());
  return j;
}

nlohmann::ordered_json presentation_json(const Presentation &p) {
  nlohmann::ordered_json j;
  j["generators"] = p.generators();
  j["relators"] = nlohmann::ordered_json::array();
  for (const auto &r : p.relators())
    j["relators"].push_back(r.str());
  return j;
}

nlohmann::ordered_json plmap_json_obj(const PLMap &f) {
  nlohmann::ordered_json j;
  j["ell"] = rational_str(f.ell());
  j["breakpoints"] = nlohmann::ordered_json::array();
  for (const auto &[x, y] : f.breakpoints())
    j["breakpoints"].push_back({rational_str(x), rational_str(y)});
  return j;
}

nlohmann::ordered_json intervals_json(const std::vector<std::pair<mpq_class, mpq_class>> &ivs) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto &[lo, hi] : ivs)
    arr.push_back({rational_str(lo), rational_str(hi)});
  return arr;
}

std::string intervals_str(const std::vector<std::pair<mpq_class, mpq_class>> &ivs) {
  std::string s;
  for (const auto &[lo, hi] : ivs) {
    if (!s.empty())
      s += " u ";
    if (lo == hi)
      s += "{" + rational_str(lo) + "}";
    else
      s += "[" + rational_str(lo) + ", " + rational_str(hi) + "]";
  }
  return s.empty() ? "(empty)" : s;
}

} // namespace

CommandResult cmd_alex(const std::string &file, std::size_t minor_cap) {
  ParsedPresentation pp = parse_file(file);
  CyclicClass phi = require_primitive_phi(pp, file);

  LaurentPoly delta = alexander_polynomial(pp.presentation, phi, minor_cap);
  EndTestReport rep = hnn_end_test(delta);

  LaurentPoly d = delta.normalized();
  CommandResult out;
  std::ostringstream h;
  h << "Alexander polynomial: " << d.str() << "\n";
  if (d.is_zero()) {
    h << "verdict: " << to_string(rep.verdict) << "\n";
  } else {
    h << "bottom coefficient: " << d.coeff(0).get_str()
      << " (unit: " << (rep.bottom_is_unit ? "yes" : "no") << ")\n";
    h << "top coefficient: " << d.coeff(d.max_deg()).get_str()
      << " (unit: " << (rep.top_is_unit ? "yes" : "no") << ")\n";
    h << "verdict: " << to_string(rep.verdict) << "\n";
  }
  out.human_text = h.str();

  out.json["schema"] = kSchemaTag;
  out.json["command"] = "alex";
  out.json["delta"] = laurent_json(d);
  out.json["deltaStr"] = d.str();
  out.json["bottomIsUnit"] = rep.bottom_is_unit;
  out.json["topIsUnit"] = rep.top_is_unit;
  out.json["verdict"] = to_string(rep.verdict);
  return out;
}

CommandResult cmd_cover(const std::string &file, std::int64_t index) {
  ParsedPresentation pp = parse_file(file);
  CyclicClass phi = require_primitive_phi(pp, file);

  CoverPresentation cover = cyclic_cover_presentation(pp.presentation, phi, index);
  Presentation simplified = tietze_simplify(cover.presentation);

  CommandResult out;
  std::ostringstream h;
  h << "cover of index " << index << ": " << cover.presentation.generators().size()
    << " generators, " << cover.presentation.relators().size() << " relators\n"
    << print_presentation(cover.presentation) << "simplified: "
    << simplified.generators().size() << " generators, " << simplified.relators().size()
    << " relators\n"
    << print_presentation(simplified);
  out.human_text = h.str();

  out.json["schema"] = kSchemaTag;
  out.json["command"] = "cover";
  out.json["index"] = index;
  out.json["raw"] = presentation_json(cover.presentation);
  out.json["simplified"] = presentation_json(simplified);
  return out;
}

CommandResult cmd_rg(const std::string &file, std::int64_t max_index) {
  if (max_index < 1)
    throw std::invalid_argument("--max must be >= 1");
  ParsedPresentation pp = parse_file(file);
  CyclicClass phi = require_primitive_phi(pp, file);

  RankBoundSequence seq = rank_gradient_sequence(pp.presentation, phi, max_index);

  CommandResult out;
  std::ostringstream h;
  h << "    i   lower   upper   lower/i   upper/i\n";
  for (const auto &e : seq.entries) {
    auto pad = [](const std::string &s, std::size_t w) {
      return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
    };
    h << pad(std::to_string(e.index), 5) << pad(std::to_string(e.lower), 8)
      << pad(std::to_string(e.upper), 8) << pad(rational_str(e.lower_ratio), 10)
      << pad(rational_str(e.upper_ratio), 10) << "\n";
  }
  h << "min upper ratio: " << rational_str(seq.min_upper_ratio) << "\n";
  h << "note: upper values are generator counts after greedy simplification\n"
       "(certified upper bounds, not ranks); the limit inferior is not\n"
       "determined by finitely many indices.\n";
  out.human_text = h.str();

  out.json["schema"] = kSchemaTag;
  out.json["command"] = "rg";
  out.json["entries"] = nlohmann::ordered_json::array();
  for (const auto &e : seq.entries) {
    nlohmann::ordered_json je;
    je["i"] = e.index;
    je["lb"] = e.lower;
    je["ub"] = e.upper;
    je["lbRatio"] = rational_str(e.lower_ratio);
    je["ubRatio"] = rational_str(e.upper_ratio);
    out.json["entries"].push_back(je);
  }
  out.json["minUbRatio"] = rational_str(seq.min_upper_ratio);
  return out;
}

CommandResult cmd_thompson_validate(const GroupSpec &spec, const std::string &map_file) {
  // Construct leniently so that shape violations are reported, not thrown.
  std::string text = read_file(map_file);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw std::invalid_argument(map_file + ": malformed JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("ell") || !j.contains("breakpoints"))
    throw std::invalid_argument(map_file + ": PL map JSON needs \"ell\" and \"breakpoints\"");
  mpq_class ell = parse_rational(j["ell"].get<std::string>());
  std::vector<std::pair<mpq_class, mpq_class>> pts;
  for (const auto &bp : j["breakpoints"]) {
    if (!bp.is_array() || bp.size() != 2)
      throw std::invalid_argument(map_file + ": each breakpoint must be a [x, y] pair");
    pts.emplace_back(parse_rational(bp[0].get<std::string>()),
                     parse_rational(bp[1].get<std::string>()));
  }

  ValidationReport rep = validate_breakpoints(ell, pts, spec);

  CommandResult out;
  std::ostringstream h;
  if (rep.valid) {
    h << "valid\n";
  } else {
    h << "invalid:\n";
    for (const auto &v : rep.violations)
      h << "  - " << v << "\n";
  }
  out.human_text = h.str();
  out.json["schema"] = kSchemaTag;
  out.json["command"] = "thompson-validate";
  out.json["valid"] = rep.valid;
  out.json["violations"] = rep.violations;
  return out;
}

CommandResult cmd_thompson_compose(const GroupSpec &spec, const std::string &f_file,
                                   const std::string &g_file) {
  PLMap f = plmap_from_json(read_file(f_file));
  PLMap g = plmap_from_json(read_file(g_file));
  for (const auto *m : {&f, &g}) {
    ValidationReport rep = validate(*m, spec);
    if (!rep.valid)
      throw std::invalid_argument("input map is not in the group: " + rep.violations[0]);
  }
  PLMap h = compose(f, g);

  CommandResult out;
  out.human_text = plmap_to_json(h) + "\n";
  out.json["schema"] = kSchemaTag;
  out.json["command"] = "thompson-compose";
  out.json["map"] = plmap_json_obj(h);
  return out;
}

CommandResult cmd_thompson_witness(const GroupSpec &spec, const mpq_class &nu,
                                   std::optional<End> end,
                                   const std::optional<std::string> &plot_path) {
  auto exponent = slope_membership(nu, spec.basis);
  if (!exponent)
    throw std::invalid_argument("--nu " + rational_str(nu) + " is not in the slope group");

  PLMap w = end ? independence_witness(spec, *exponent, *end)
                : irreducibility_witness(spec, *exponent);
  auto fixed = w.fixed_points();
  mpq_class lam = w.slope_at_zero(), rho = w.slope_at_ell();

  CommandResult out;
  std::ostringstream h;
  h << (end ? "independence witness" : "irreducibility witness") << " for nu = "
    << rational_str(nu);
  if (end)
    h << " (" << (*end == End::Left ? "left" : "right") << " end)";
  h << "\nbreakpoints:";
  for (const auto &[x, y] : w.breakpoints())
    h << " (" << rational_str(x) << ", " << rational_str(y) << ")";
  h << "\nlambda: " << rational_str(lam) << "   rho: " << rational_str(rho)
    << "\nfixed points: " << intervals_str(fixed) << "\n";
  out.human_text = h.str();

  out.json["schema"] = kSchemaTag;
  out.json["command"] = "thompson-witness";
  out.json["kind"] = end ? "independence" : "irreducibility";
  if (end)
    out.json["end"] = *end == End::Left ? "left" : "right";
  out.json["nu"] = rational_str(nu);
  out.json["map"] = plmap_json_obj(w);
  out.json["lambda"] = rational_str(lam);
  out.json["rho"] = rational_str(rho);
  out.json["lambdaExponent"] = lambda_char(w, spec.basis).j;
  out.json["rhoExponent"] = rho_char(w, spec.basis).j;
  out.json["fixedPoints"] = intervals_json(fixed);

  if (plot_path) {
    std::ofstream svg(*plot_path, std::ios::binary);
    if (!svg)
      throw std::invalid_argument("cannot write plot file: " + *plot_path);
    svg << plmap_to_svg(w);
  }
  return out;
}

CommandResult cmd_thompson_certify(const GroupSpec &spec) {
  IndependenceCertificate cert = independence_certificate(spec);

  CommandResult out;
  std::ostringstream h;
  h << "independence certificate for F(" << rational_str(spec.ell) << ", Z[1/"
    << spec.basis.ring_modulus().get_str() << "], <";
  for (std::size_t i = 0; i < spec.basis.size(); ++i)
    h << (i ? "," : "") << spec.basis.values()[i];
  h << ">)\n";
  for (const auto &w : cert.witnesses) {
    h << "  witness nu=" << rational_str(w.nu_value) << " "
      << (w.end == End::Left ? "left " : "right") << ": lambda "
      << (w.lambda_ok ? "ok" : "FAIL") << ", rho " << (w.rho_ok ? "ok" : "FAIL") << "\n";
  }
  h << "  irreducibility element fixed points: "
    << intervals_str(cert.irreducibility_fixed) << " ("
    << (cert.irreducible_ok ? "ok" : "FAIL") << ")\n";
  h << "certificate: " << (cert.pass ? "PASS" : "FAIL") << "\n";
  if (cert.pass) {
    auto [lam, rho] = exceptional_characters(spec);
    h << "exceptional characters: [log(" << lam.functional << ")], [log("
      << rho.functional << ")] on the exponent lattice Z^" << lam.basis.size() << "\n";
  }
  out.human_text = h.str();

  out.json["schema"] = kSchemaTag;
  out.json["command"] = "thompson-certify";
  out.json["pass"] = cert.pass;
  out.json["witnesses"] = nlohmann::ordered_json::array();
  for (const auto &w : cert.witnesses) {
    nlohmann::ordered_json jw;
    jw["nu"] = rational_str(w.nu_value);
    jw["nuExponent"] = w.nu.j;
    jw["end"] = w.end == End::Left ? "left" : "right";
    jw["lambdaOk"] = w.lambda_ok;
    jw["rhoOk"] = w.rho_ok;
    jw["map"] = plmap_json_obj(w.map);
    out.json["witnesses"].push_back(jw);
  }
  out.json["irreducibility"] = nlohmann::ordered_json();
  out.json["irreducibility"]["map"] = plmap_json_obj(cert.irreducibility);
  out.json["irreducibility"]["fixedPoints"] = intervals_json(cert.irreducibility_fixed);
  out.json["irreducibility"]["ok"] = cert.irreducible_ok;
  if (cert.pass) {
    auto [lam, rho] = exceptional_characters(spec);
    auto desc = [](const CharacterDescriptor &d) {
      nlohmann::ordered_json j;
      j["functional"] = d.functional;
      j["basis"] = d.basis;
      j["weights"] = d.weights;
      return j;
    };
    out.json["exceptionalCharacters"] = {desc(lam), desc(rho)};
  }
  return out;
}

} // namespace cyclicover
