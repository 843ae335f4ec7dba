#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cyclicover/cli.hpp"
#include "cyclicover/errors.hpp"

using namespace cyclicover;
namespace fs = std::filesystem;

namespace {

const char *kPiSource = "gens: t a b\n"
                        "rels: t^-1 a t a^-2, t^-1 b^2 t b^-1\n"
                        "phi: t=1 a=0 b=0\n";

fs::path write_temp(const std::string &name, const std::string &content) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p, std::ios::binary);
  out << content;
  return p;
}

struct RunResult {
  int exit_code;
  std::string output; // stdout only
};

RunResult run_cli(const std::string &args, const std::string &env = "") {
  std::string cmd = (env.empty() ? std::string() : "env " + env + " ") +
                    std::string(CYCLICOVER_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  std::string out;
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

// Checks a value against the restricted JSON-Schema subset the shipped
// schemas use: type, enum, required, properties, additionalProperties,
// items, $ref (relative file).
bool check_schema(const nlohmann::json &schema, const nlohmann::json &value,
                  std::string &err);

bool check_type(const std::string &type, const nlohmann::json &value) {
  if (type == "object")
    return value.is_object();
  if (type == "array")
    return value.is_array();
  if (type == "string")
    return value.is_string();
  if (type == "integer")
    return value.is_number_integer();
  if (type == "number")
    return value.is_number();
  if (type == "boolean")
    return value.is_boolean();
  return false;
}

nlohmann::json load_schema(const std::string &name) {
  std::ifstream in(fs::path(CYCLICOVER_SCHEMA_DIR) / name);
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

bool check_schema(const nlohmann::json &schema, const nlohmann::json &value,
                  std::string &err) {
  if (schema.contains("$ref"))
    return check_schema(load_schema(schema["$ref"].get<std::string>()), value, err);
  if (schema.contains("type") &&
      !check_type(schema["type"].get<std::string>(), value)) {
    err = "type mismatch, expected " + schema["type"].get<std::string>() + " got " +
          value.dump();
    return false;
  }
  if (schema.contains("enum")) {
    bool any = false;
    for (const auto &e : schema["enum"])
      any = any || e == value;
    if (!any) {
      err = "value " + value.dump() + " not in enum";
      return false;
    }
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto &r : schema["required"])
        if (!value.contains(r.get<std::string>())) {
          err = "missing required key " + r.get<std::string>();
          return false;
        }
    bool closed = schema.contains("additionalProperties") &&
                  schema["additionalProperties"].is_boolean() &&
                  !schema["additionalProperties"].get<bool>();
    for (const auto &[key, sub] : value.items()) {
      if (schema.contains("properties") && schema["properties"].contains(key)) {
        if (!check_schema(schema["properties"][key], sub, err))
          return false;
      } else if (closed) {
        err = "unexpected key " + key;
        return false;
      }
    }
  }
  if (value.is_array() && schema.contains("items"))
    for (const auto &item : value)
      if (!check_schema(schema["items"], item, err))
        return false;
  return true;
}

void expect_schema(const std::string &schema_file, const nlohmann::json &value) {
  std::string err;
  bool ok = check_schema(load_schema(schema_file), value, err);
  INFO(schema_file, ": ", err);
  CHECK(ok);
}

} // namespace

TEST_CASE("cmd_alex on the worked examples") {
  fs::path pi = write_temp("cyclicover_pi.pres", kPiSource);
  CommandResult r = cmd_alex(pi.string());
  CHECK(r.exit_code == 0);
  CHECK(r.human_text.find("2 - 5t + 2t^2") != std::string::npos);
  CHECK(r.human_text.find("verdict: neither") != std::string::npos);
  CHECK(r.json["deltaStr"] == "2 - 5t + 2t^2");
  CHECK(r.json["verdict"] == "neither");
  CHECK(r.json["schema"] == "cyclicover/1");
  CHECK(r.json["delta"]["coeffs"] == nlohmann::json({"2", "-5", "2"}));
  expect_schema("alex.schema.json", r.json);

  fs::path bs = write_temp("cyclicover_bs12.pres",
                           "gens: t a\nrels: t^-1 a t a^-2\nphi: t=1 a=0\n");
  CommandResult rb = cmd_alex(bs.string());
  CHECK(rb.json["verdict"] == "consistent-with-ascending-only");
  CHECK(rb.json["deltaStr"] == "-1 + 2t");
  expect_schema("alex.schema.json", rb.json);

  fs::path free1 = write_temp("cyclicover_z.pres", "gens: t\nrels:\nphi: t=1\n");
  CommandResult rf = cmd_alex(free1.string());
  CHECK(rf.json["deltaStr"] == "1");
  CHECK(rf.json["verdict"] == "consistent-with-both");

  fs::path nophi = write_temp("cyclicover_nophi.pres", "gens: t\nrels:\n");
  CHECK_THROWS_AS(cmd_alex(nophi.string()), std::invalid_argument);
  CHECK_THROWS_AS(cmd_alex("/nonexistent/file.pres"), std::invalid_argument);
}

TEST_CASE("cmd_cover output shape") {
  fs::path pi = write_temp("cyclicover_pi.pres", kPiSource);
  CommandResult r = cmd_cover(pi.string(), 3);
  CHECK(r.json["raw"]["generators"].size() == 7);
  CHECK(r.json["raw"]["relators"].size() == 6);
  CHECK(r.json["simplified"]["generators"].size() == 3);
  CHECK(r.human_text.find("7 generators, 6 relators") != std::string::npos);
  expect_schema("cover.schema.json", r.json);

  CommandResult r1 = cmd_cover(pi.string(), 1);
  CHECK(r1.json["raw"]["generators"] == nlohmann::json({"s", "a_0", "b_0"}));
  CHECK(r1.json["raw"]["relators"] ==
        nlohmann::json({"s^-1 a_0 s a_0^-2", "s^-1 b_0^2 s b_0^-1"}));

  fs::path bad = write_temp("cyclicover_bad.pres", "gens: a\nrels: q\n");
  CHECK_THROWS_AS(cmd_cover(bad.string(), 2), ParseError);
}

TEST_CASE("cmd_rg table") {
  fs::path pi = write_temp("cyclicover_pi.pres", kPiSource);
  CommandResult r = cmd_rg(pi.string(), 16);
  CHECK(r.json["entries"].size() == 16);
  for (const auto &e : r.json["entries"])
    CHECK(e["ub"] == 3);
  CHECK(r.json["minUbRatio"] == "3/16");
  expect_schema("rg.schema.json", r.json);

  fs::path f2 = write_temp("cyclicover_f2.pres", "gens: t x\nrels:\nphi: t=1 x=0\n");
  CommandResult rf = cmd_rg(f2.string(), 8);
  CHECK(rf.json["entries"][7]["ubRatio"] == "9/8");

  CHECK_THROWS_AS(cmd_rg(pi.string(), 0), std::invalid_argument);
}

TEST_CASE("thompson commands") {
  GroupSpec spec = GroupSpec::make(1, SlopeBasis::make({2, 3}));

  SUBCASE("witness JSON matches the worked example") {
    CommandResult w = cmd_thompson_witness(spec, 2, End::Left, std::nullopt);
    CHECK(w.json["map"]["breakpoints"] ==
          nlohmann::json::parse(
              R"([["0","0"],["5/72","5/36"],["25/36","55/72"],["5/6","5/6"],["1","1"]])"));
    CHECK(w.json["lambda"] == "2");
    CHECK(w.json["rho"] == "1");
    expect_schema("thompson-witness.schema.json", w.json);

    CommandResult irr = cmd_thompson_witness(spec, 2, std::nullopt, std::nullopt);
    CHECK(irr.json["kind"] == "irreducibility");
    CHECK(irr.json["fixedPoints"] == nlohmann::json::parse(R"([["0","0"],["1","1"]])"));
    expect_schema("thompson-witness.schema.json", irr.json);

    CHECK_THROWS_AS(cmd_thompson_witness(spec, 5, End::Left, std::nullopt),
                    std::invalid_argument);
  }

  SUBCASE("witness --plot writes an SVG") {
    fs::path svg = fs::temp_directory_path() / "cyclicover_w.svg";
    cmd_thompson_witness(spec, 2, std::nullopt, svg.string());
    std::ifstream in(svg);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(content.rfind("<svg", 0) == 0);
  }

  SUBCASE("validate reports a bad slope as data") {
    fs::path bad = write_temp(
        "cyclicover_bad.plmap",
        "{\"ell\":\"1\",\"breakpoints\":[[\"0\",\"0\"],[\"1/6\",\"5/6\"],[\"1\",\"1\"]]}");
    CommandResult v = cmd_thompson_validate(spec, bad.string());
    CHECK(v.exit_code == 0);
    CHECK(v.json["valid"] == false);
    bool mentions = false;
    for (const auto &s : v.json["violations"])
      mentions = mentions || s.get<std::string>().find("5") != std::string::npos;
    CHECK(mentions);
    expect_schema("thompson-validate.schema.json", v.json);

    fs::path broken = write_temp("cyclicover_broken.plmap", "{nope");
    CHECK_THROWS_AS(cmd_thompson_validate(spec, broken.string()), std::invalid_argument);
  }

  SUBCASE("compose against the inverse gives the identity") {
    PLMap h = independence_witness(spec, {{1, 0}}, End::Left);
    fs::path hf = write_temp("cyclicover_h.plmap", plmap_to_json(h));
    fs::path hi = write_temp("cyclicover_hinv.plmap", plmap_to_json(h.inverse()));
    CommandResult c = cmd_thompson_compose(spec, hf.string(), hi.string());
    CHECK(c.json["map"]["breakpoints"] ==
          nlohmann::json::parse(R"([["0","0"],["1","1"]])"));
    expect_schema("thompson-compose.schema.json", c.json);
  }

  SUBCASE("certify") {
    CommandResult c = cmd_thompson_certify(spec);
    CHECK(c.json["pass"] == true);
    CHECK(c.json["witnesses"].size() == 4);
    CHECK(c.json["exceptionalCharacters"].size() == 2);
    expect_schema("thompson-certify.schema.json", c.json);
    expect_schema("plmap.schema.json", c.json["irreducibility"]["map"]);
  }
}

TEST_CASE("binary end-to-end: exit codes and determinism") {
  fs::path pi = write_temp("cyclicover_pi.pres", kPiSource);

  RunResult ok = run_cli("alex " + pi.string());
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("2 - 5t + 2t^2") != std::string::npos);

  RunResult j1 = run_cli("alex --json " + pi.string());
  RunResult j2 = run_cli("alex --json " + pi.string());
  CHECK(j1.exit_code == 0);
  CHECK(j1.output == j2.output); // byte-identical across runs
  expect_schema("alex.schema.json", nlohmann::json::parse(j1.output));

  RunResult r1 = run_cli("rg --max 4 --json " + pi.string());
  RunResult r2 = run_cli("rg --max 4 --json " + pi.string());
  CHECK(r1.output == r2.output);

  fs::path bad = write_temp("cyclicover_malformed.pres", "gens 1\n");
  CHECK(run_cli("alex " + bad.string()).exit_code == 2);
  CHECK(run_cli("cover --index 2 " + bad.string()).exit_code == 2);
  CHECK(run_cli("alex /does/not/exist").exit_code == 2);

  // the minor-enumeration cap maps to "computation refused"
  RunResult refused = run_cli("alex " + pi.string() + " --json", "CYCLICOVER_SIZE_LIMIT=1");
  CHECK(refused.exit_code == 1);

  RunResult wcli = run_cli("thompson --ell 1 --basis 2,3 witness --nu 2 --end left --json");
  expect_schema("thompson-witness.schema.json", nlohmann::json::parse(wcli.output));

  fs::path outfile = fs::temp_directory_path() / "cyclicover_out.json";
  RunResult redirected =
      run_cli("alex --json --output " + outfile.string() + " " + pi.string());
  CHECK(redirected.exit_code == 0);
  CHECK(redirected.output.empty());
  std::ifstream in(outfile);
  nlohmann::json written = nlohmann::json::parse(in);
  CHECK(written["deltaStr"] == "2 - 5t + 2t^2");
}
