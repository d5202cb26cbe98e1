#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "weddle/json_io.hpp"
#include "weddle/solve.hpp"

namespace weddle::cli {

struct RunContext {
  SolverConfig solver;
  std::string fixture_dir;
  bool timing = false;
};

/// A path, or a fixture name looked up as <fixture_dir>/<name>.json.
std::string resolve_input(const std::string& arg, const std::string& fixture_dir);

/// JSON documents as is; anything else is taken as polynomial text.
Json load_input(const std::string& path);

/// Accepts {"n", "quadrics"}, a tensor {"faces"}, {"M"} for the rank-5
/// construction, or {"n", "points"} for quadrics through points.
LinearSystem system_from_any(const Json& j);

/// Reports: {"command", "input_digest", "seed", "outputs", "certified"}.
Json cmd_decompose(const Json& input, const RunContext& ctx);
Json cmd_weddle(const Json& input, const RunContext& ctx);
Json cmd_basepoints(const Json& input, const RunContext& ctx);
Json cmd_singular(const Json& input, const RunContext& ctx);
Json cmd_jinv(const Json& input, const RunContext& ctx, bool force_numeric);
Json cmd_certify(const Json& input, const RunContext& ctx);
Json cmd_jacobsthal_sweep(int dim_lo, int dim_hi, int trials, const RunContext& ctx);

std::string render_text(const Json& report);

/// Full command line; returns the process exit status (0 certified,
/// 2 uncertified, 1 error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weddle::cli
