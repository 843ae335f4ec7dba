#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "cyclicover/matrix.hpp"
#include "cyclicover/plmap.hpp"

namespace cyclicover {

/// Outcome of one CLI command. exit_code: 0 success, 1 computation refused
/// (size limits), 2 input error; commands throw instead of returning nonzero
/// codes (SizeLimitError -> 1, anything else -> 2) and the frontend maps the
/// exception.
struct CommandResult {
  std::string human_text;
  nlohmann::ordered_json json;
  int exit_code = 0;
};

inline constexpr const char *kSchemaTag = "cyclicover/1";

/// `alex <file>`: normalized Alexander polynomial and the end-coefficient
/// report. The file must carry a phi block with a primitive class.
CommandResult cmd_alex(const std::string &file, std::size_t minor_cap = kDefaultMinorCap);

/// `cover --index i <file>`: Reidemeister-Schreier presentation of the kernel
/// before and after greedy simplification.
CommandResult cmd_cover(const std::string &file, std::int64_t index);

/// `rg --max N <file>`: rank bound table for indices 1..N.
CommandResult cmd_rg(const std::string &file, std::int64_t max_index);

/// `thompson validate --ell --basis <mapfile>`
CommandResult cmd_thompson_validate(const GroupSpec &spec, const std::string &map_file);

/// `thompson compose --ell --basis <f.json> <g.json>`: f after g.
CommandResult cmd_thompson_compose(const GroupSpec &spec, const std::string &f_file,
                                   const std::string &g_file);

/// `thompson witness --ell --basis --nu [--end left|right] [--plot out.svg]`:
/// independence witness when an end is given, irreducibility witness
/// otherwise.
CommandResult cmd_thompson_witness(const GroupSpec &spec, const mpq_class &nu,
                                   std::optional<End> end,
                                   const std::optional<std::string> &plot_path);

/// `thompson certify --ell --basis`: witness certificate plus the two
/// exceptional-character descriptors.
CommandResult cmd_thompson_certify(const GroupSpec &spec);

} // namespace cyclicover
