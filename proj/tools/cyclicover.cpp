#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cyclicover/cli.hpp"
#include "cyclicover/errors.hpp"
#include "cyclicover/rational.hpp"

namespace {

using namespace cyclicover;

std::size_t minor_cap_from_env() {
  const char *v = std::getenv("CYCLICOVER_SIZE_LIMIT");
  if (!v)
    return kDefaultMinorCap;
  char *end = nullptr;
  unsigned long cap = std::strtoul(v, &end, 10);
  if (!end || *end != '\0' || cap == 0)
    throw std::invalid_argument("CYCLICOVER_SIZE_LIMIT must be a positive integer");
  return static_cast<std::size_t>(cap);
}

GroupSpec spec_from_flags(const std::string &ell, const std::string &basis_csv) {
  std::vector<std::int64_t> basis;
  std::size_t pos = 0;
  while (pos <= basis_csv.size()) {
    std::size_t comma = basis_csv.find(',', pos);
    std::string item = basis_csv.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty())
      throw std::invalid_argument("--basis must be a comma-separated integer list");
    basis.push_back(std::stoll(item));
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  return GroupSpec::make(parse_rational(ell), SlopeBasis::make(std::move(basis)));
}

void emit(const CommandResult &result, bool as_json, const std::string &output) {
  std::string text = as_json ? result.json.dump(2) + "\n" : result.human_text;
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out)
      throw std::invalid_argument("cannot write output file: " + output);
    out << text;
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"invariants of finitely presented groups along infinite cyclic covers"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::string output;
  app.add_flag("--json", as_json, "emit JSON instead of text");
  app.add_option("--output", output, "write output to a file");

  std::string file, file2;
  std::int64_t index = 1, max_index = 1;

  auto *alex = app.add_subcommand("alex", "Alexander polynomial and HNN end test");
  alex->add_option("file", file, "presentation file")->required();

  auto *cover = app.add_subcommand("cover", "Reidemeister-Schreier cover presentation");
  cover->add_option("--index", index, "cover index i >= 1")->required();
  cover->add_option("file", file, "presentation file")->required();

  auto *rg = app.add_subcommand("rg", "rank gradient bound table");
  rg->add_option("--max", max_index, "largest index N >= 1")->required();
  rg->add_option("file", file, "presentation file")->required();

  auto *thompson = app.add_subcommand("thompson", "generalized Thompson groups of PL maps");
  thompson->require_subcommand(1);
  thompson->fallthrough();
  std::string ell = "1", basis = "2";
  std::string nu, end_str, plot;
  thompson->add_option("--ell", ell, "interval length, rational p/q")->required();
  thompson->add_option("--basis", basis, "slope basis n1,n2,...")->required();

  auto *validate = thompson->add_subcommand("validate", "check a PL map against the group");
  validate->add_option("file", file, "PL map JSON file")->required();

  auto *compose = thompson->add_subcommand("compose", "compose two PL maps (f after g)");
  compose->add_option("f", file, "outer map JSON file")->required();
  compose->add_option("g", file2, "inner map JSON file")->required();

  auto *witness = thompson->add_subcommand(
      "witness", "endpoint-character witness (or irreducibility element without --end)");
  witness->add_option("--nu", nu, "slope value, rational p/q")->required();
  witness->add_option("--end", end_str, "left|right: independence witness end");
  witness->add_option("--plot", plot, "write an SVG plot of the graph");

  auto *certify = thompson->add_subcommand("certify", "independence certificate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    CommandResult result;
    if (*alex) {
      result = cmd_alex(file, minor_cap_from_env());
    } else if (*cover) {
      result = cmd_cover(file, index);
    } else if (*rg) {
      result = cmd_rg(file, max_index);
    } else if (*thompson) {
      GroupSpec spec = spec_from_flags(ell, basis);
      if (*validate) {
        result = cmd_thompson_validate(spec, file);
      } else if (*compose) {
        result = cmd_thompson_compose(spec, file, file2);
      } else if (*witness) {
        std::optional<End> end;
        if (!end_str.empty()) {
          if (end_str == "left")
            end = End::Left;
          else if (end_str == "right")
            end = End::Right;
          else
            throw std::invalid_argument("--end must be left or right");
        }
        std::optional<std::string> plot_path;
        if (!plot.empty())
          plot_path = plot;
        result = cmd_thompson_witness(spec, parse_rational(nu), end, plot_path);
      } else if (*certify) {
        result = cmd_thompson_certify(spec);
      }
    }
    emit(result, as_json, output);
    return result.exit_code;
  } catch (const SizeLimitError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
