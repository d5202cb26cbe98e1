#include "weddle_cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "weddle/cubic.hpp"
#include "weddle/jacobsthal.hpp"
#include "weddle/tensor.hpp"
#include "weddle/weddle.hpp"

#ifndef WEDDLE_DEFAULT_FIXTURE_DIR
#define WEDDLE_DEFAULT_FIXTURE_DIR "data/fixtures"
#endif

namespace weddle::cli {

namespace {

std::string digest(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json report(const std::string& command, const Json& input, const RunContext& ctx) {
  return Json{{"command", command},
              {"input_digest", digest(command + "\n" + input.dump())},
              {"seed", ctx.solver.seed},
              {"outputs", Json::object()},
              {"certified", false}};
}

MultiPoly poly_from_any(const Json& j) {
  if (j.is_string()) return parse_poly(j.get<std::string>());
  return poly_from_json(j);
}

Json matrix_text(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string point_text(const Json& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ":";
    s += p[i].get<std::string>();
  }
  return s + "]";
}

std::string cpoint_text(const Json& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += " : ";
    const double re = p[i][0].get<double>(), im = p[i][1].get<double>();
    s += fmt_double(re);
    if (std::abs(im) > 1e-12) s += (im < 0 ? " - " : " + ") + fmt_double(std::abs(im)) + "i";
  }
  return s + "]";
}

void append_points(std::ostringstream& os, const Json& solutions) {
  for (const auto& c : solutions.at("clusters")) {
    os << "  ";
    if (!c.at("rational_match").is_null())
      os << point_text(c.at("rational_match"));
    else
      os << cpoint_text(c.at("point"));
    os << "  residual " << fmt_double(c.at("residual").get<double>()) << "\n";
  }
}

std::string cert_tag(bool certified) { return certified ? "certified" : "UNCERTIFIED"; }

}  // namespace

std::string resolve_input(const std::string& arg, const std::string& fixture_dir) {
  namespace fs = std::filesystem;
  if (fs::exists(arg)) return arg;
  const fs::path named = fs::path(fixture_dir) / (arg + ".json");
  if (fs::exists(named)) return named.string();
  throw std::invalid_argument("no such file or fixture: " + arg);
}

Json load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) return Json::parse(text);
  std::string trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
  return Json(trimmed);
}

LinearSystem system_from_any(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
  if (j.contains("quadrics")) return system_from_json(j);
  if (j.contains("faces")) return LinearSystem::from_tensor(tensor_from_json(j));
  if (j.contains("M")) return rank5_system(matrix_from_json(j.at("M")));
  if (j.contains("points")) {
    const std::size_t n = j.at("n").get<std::size_t>();
    std::vector<RatPoint> pts;
    for (const auto& p : j.at("points")) pts.push_back(point_from_json(p));
    LinearSystem sys;
    sys.n = n;
    sys.quadrics = quadrics_through_points(pts, n);
    sys.validate();
    return sys;
  }
  throw std::invalid_argument("unrecognized system description");
}

Json cmd_decompose(const Json& input, const RunContext& ctx) {
  Json r = report("decompose", input, ctx);
  const Tensor3 t = tensor_from_json(input);
  const Decomposition d = decompose(t);
  auto& o = r["outputs"];
  o["sym"] = tensor_to_json(d.sym);
  o["n1"] = tensor_to_json(d.n1);
  o["n2"] = tensor_to_json(d.n2);
  o["skew"] = tensor_to_json(d.skew);
  Json member = Json::object();
  for (auto c : {SymmetryClass::Symmetric, SymmetryClass::SkewSymmetric, SymmetryClass::Residual,
                 SymmetryClass::Residual1, SymmetryClass::Residual2, SymmetryClass::PartialSym12})
    member[to_string(c)] = belongs_to(t, c);
  o["memberships"] = member;
  const bool resum = d.sym + d.n1 + d.n2 + d.skew == t;
  o["resum_ok"] = resum;
  r["certified"] = resum;
  return r;
}

Json cmd_weddle(const Json& input, const RunContext& ctx) {
  Json r = report("weddle", input, ctx);
  const LinearSystem sys = system_from_any(input);
  const WeddleData w = weddle_matrix(sys);
  auto& o = r["outputs"];
  o["matrix"] = matrix_text(w.matrix);
  o["polynomial"] = to_string(w.polynomial);
  o["degenerate"] = w.degenerate;
  r["certified"] = true;
  return r;
}

Json cmd_basepoints(const Json& input, const RunContext& ctx) {
  Json r = report("basepoints", input, ctx);
  const LinearSystem sys = system_from_any(input);
  const SolutionSet s = base_points(sys, ctx.solver);
  auto& o = r["outputs"];
  o["count"] = s.count();
  o["solutions"] = solution_set_to_json(s);
  if (input.contains("faces") && in_N1V(sys.to_tensor())) o["jacobsthal"] = jacobsthal(static_cast<int>(sys.nvars()));
  r["certified"] = s.certified;
  return r;
}

Json cmd_singular(const Json& input, const RunContext& ctx) {
  Json r = report("singular", input, ctx);
  const MultiPoly f = poly_from_any(input);
  const SolutionSet s = singular_points(f, ctx.solver);
  auto& o = r["outputs"];
  o["polynomial"] = to_string(f);
  o["count"] = s.count();
  o["solutions"] = solution_set_to_json(s);
  r["certified"] = s.certified;
  return r;
}

Json cmd_jinv(const Json& input, const RunContext& ctx, bool force_numeric) {
  Json r = report("jinv", input, ctx);
  const MultiPoly f = poly_from_any(input);
  const WeierstrassResult w = weierstrass_reduce(f, ctx.solver, force_numeric);
  const JInvariant j = j_invariant(f, ctx.solver, force_numeric);
  auto& o = r["outputs"];
  o["polynomial"] = to_string(f);
  o["exact"] = j.exact;
  if (w.exact) {
    o["a"] = to_string(w.form->a);
    o["b"] = to_string(w.form->b);
    o["j"] = to_string(j.value);
    o["flex"] = point_to_json(w.flex);
  } else {
    o["a"] = Json::array({w.a_num.real(), w.a_num.imag()});
    o["b"] = Json::array({w.b_num.real(), w.b_num.imag()});
    o["j"] = nullptr;
    o["flex"] = cpoint_to_json(w.flex_num);
    o["flex_residual"] = w.flex_residual;
  }
  o["j_numeric"] = Json::array({j.numeric.real(), j.numeric.imag()});
  r["certified"] = j.certified;
  return r;
}

Json cmd_certify(const Json& input, const RunContext& ctx) {
  Json r = report("certify", input, ctx);
  const LinearSystem sys = system_from_any(input);
  const RankCertificate c = rank_lower_bound_certificate(sys, ctx.solver);
  auto& o = r["outputs"];
  o["polynomial"] = to_string(weddle_matrix(sys).polynomial);
  o["singular_count"] = c.singular_count;
  const bool at_least6 = c.conclusion == RankConclusion::RankAtLeast6;
  o["conclusion"] = at_least6 ? "RankAtLeast6" : "Inconclusive";
  std::string summary;
  if (!c.count_certified)
    summary = "singular points: uncertified count, inconclusive";
  else if (at_least6)
    summary = "singular points: " + std::to_string(c.singular_count) + " < 10 => rank >= 6";
  else
    summary = "singular points: " + std::to_string(c.singular_count) + " >= 10, inconclusive";
  o["summary"] = summary;
  o["solutions"] = solution_set_to_json(c.evidence);
  r["certified"] = c.count_certified;
  return r;
}

Json cmd_jacobsthal_sweep(int dim_lo, int dim_hi, int trials, const RunContext& ctx) {
  if (dim_lo < 2 || dim_hi > 5 || dim_lo > dim_hi) throw std::invalid_argument("dims must lie in 2..5");
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  const Json params{{"dims", Json::array({dim_lo, dim_hi})}, {"trials", trials}};
  Json r = report("jacobsthal-sweep", params, ctx);
  Json table = Json::array();
  bool all_ok = true;
  for (int d = dim_lo; d <= dim_hi; ++d) {
    const std::int64_t expected = jacobsthal(d);
    int certified = 0, matching = 0;
    Json mismatches = Json::array(), uncertified = Json::array();
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t seed = ctx.solver.seed + 1000u * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(t);
      const Tensor3 tensor = random_n1(static_cast<std::size_t>(d), seed);
      SolverConfig cfg = ctx.solver;
      cfg.seed = seed;
      const SolutionSet s = base_points(LinearSystem::from_tensor(tensor), cfg);
      if (!s.certified) {
        uncertified.push_back(Json{{"seed", seed}, {"tensor", tensor_to_json(tensor)}});
        continue;
      }
      ++certified;
      if (static_cast<std::int64_t>(s.count()) == expected)
        ++matching;
      else
        mismatches.push_back(Json{{"seed", seed}, {"count", s.count()}, {"tensor", tensor_to_json(tensor)}});
    }
    const bool ok = mismatches.empty() && certified * 5 >= trials * 4;
    all_ok = all_ok && ok;
    table.push_back(Json{{"dim", d},
                         {"expected", expected},
                         {"trials", trials},
                         {"certified", certified},
                         {"matching", matching},
                         {"mismatches", mismatches},
                         {"uncertified", uncertified}});
  }
  r["outputs"]["table"] = table;
  r["certified"] = all_ok;
  return r;
}

std::string render_text(const Json& rep) {
  std::ostringstream os;
  const std::string cmd = rep.at("command");
  const auto& o = rep.at("outputs");
  const bool cert = rep.at("certified").get<bool>();
  if (cmd == "decompose") {
    os << "memberships:";
    for (const auto& [k, v] : o.at("memberships").items()) os << " " << k << "=" << (v.get<bool>() ? "yes" : "no");
    os << "\nparts re-sum to input: " << (o.at("resum_ok").get<bool>() ? "yes" : "no") << "\n";
    for (const char* part : {"sym", "n1", "n2", "skew"}) {
      os << part << ":\n";
      const auto& faces = o.at(part).at("faces");
      for (std::size_t k = 0; k < faces.size(); ++k) {
        os << "  face " << k << ":";
        for (const auto& row : faces[k]) {
          os << " [";
          for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j].get<std::string>();
          os << "]";
        }
        os << "\n";
      }
    }
  } else if (cmd == "weddle") {
    os << "Weddle matrix:\n";
    for (const auto& row : o.at("matrix")) {
      os << " ";
      for (const auto& e : row) os << " [" << e.get<std::string>() << "]";
      os << "\n";
    }
    os << "Weddle polynomial: " << o.at("polynomial").get<std::string>() << "\n";
    os << "degenerate: " << (o.at("degenerate").get<bool>() ? "yes" : "no") << "\n";
  } else if (cmd == "basepoints" || cmd == "singular") {
    os << (cmd == "basepoints" ? "base points: " : "singular points: ") << o.at("count").get<std::size_t>() << " ("
       << cert_tag(cert) << ")\n";
    append_points(os, o.at("solutions"));
    if (o.contains("jacobsthal")) os << "Jacobsthal number for this dimension: " << o.at("jacobsthal") << "\n";
  } else if (cmd == "jinv") {
    if (o.at("exact").get<bool>()) {
      os << "Weierstrass form: y^2 = x^3 + (" << o.at("a").get<std::string>() << ")*x + ("
         << o.at("b").get<std::string>() << ")\n";
      os << "j = " << o.at("j").get<std::string>() << " (exact)\n";
    } else {
      os << "j ~ " << fmt_double(o.at("j_numeric")[0].get<double>()) << " (numeric, imaginary part "
         << fmt_double(o.at("j_numeric")[1].get<double>()) << ", flex residual "
         << fmt_double(o.at("flex_residual").get<double>()) << ", " << cert_tag(cert) << ")\n";
    }
  } else if (cmd == "certify") {
    os << "Weddle polynomial: " << o.at("polynomial").get<std::string>() << "\n";
    os << o.at("summary").get<std::string>() << "\n";
  } else if (cmd == "jacobsthal-sweep") {
    for (const auto& row : o.at("table")) {
      os << "dim " << row.at("dim") << ": J = " << row.at("expected") << ", certified " << row.at("certified") << "/"
         << row.at("trials") << ", matching " << row.at("matching") << ", mismatches " << row.at("mismatches").size()
         << "\n";
    }
  }
  if (!cert) os << "status: UNCERTIFIED\n";
  if (rep.contains("timing_ms")) os << "time: " << rep.at("timing_ms") << " ms\n";
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weddle loci of linear systems of quadrics"};
  app.require_subcommand(1);
  app.fallthrough();

  RunContext ctx;
  ctx.fixture_dir = WEDDLE_DEFAULT_FIXTURE_DIR;
  bool as_json = false;
  app.add_option("--seed", ctx.solver.seed, "master seed")->envname("WEDDLE_SEED");
  app.add_option("--track-tol", ctx.solver.track_tol, "corrector tolerance")->envname("WEDDLE_TRACK_TOL");
  app.add_option("--residual-tol", ctx.solver.residual_tol, "certification residual")->envname("WEDDLE_RESIDUAL_TOL");
  app.add_option("--cluster-radius", ctx.solver.cluster_radius, "cluster radius")->envname("WEDDLE_CLUSTER_RADIUS");
  app.add_option("--fixture-dir", ctx.fixture_dir, "directory of named fixtures")->envname("WEDDLE_FIXTURE_DIR");
  app.add_flag("--json", as_json, "print the JSON report");
  app.add_flag("--timing", ctx.timing, "include wall time in the report");

  std::string input;
  bool numeric = false;
  int random_dim = 0;
  std::string dims = "2..5";
  int trials = 10;

  auto* dec = app.add_subcommand("decompose", "S/N1/N2/A parts of a tensor");
  dec->add_option("input", input, "tensor file or fixture name")->required();
  auto* wed = app.add_subcommand("weddle", "Weddle matrix and polynomial");
  wed->add_option("input", input, "system or tensor file, or fixture name")->required();
  auto* bp = app.add_subcommand("basepoints", "certified base points");
  bp->add_option("input", input, "system or tensor file, or fixture name");
  bp->add_option("--random-n1", random_dim, "sample a cyclic-symmetric tensor of this dimension");
  auto* sing = app.add_subcommand("singular", "certified singular points of a form");
  sing->add_option("input", input, "polynomial file or fixture name")->required();
  auto* jinv = app.add_subcommand("jinv", "j-invariant of a plane cubic");
  jinv->add_option("input", input, "polynomial file or fixture name")->required();
  jinv->add_flag("--numeric", numeric, "skip the exact flex search");
  auto* cert = app.add_subcommand("certify", "rank lower bound from singular points");
  cert->add_option("input", input, "system file or fixture name")->required();
  auto* sweep = app.add_subcommand("jacobsthal-sweep", "base-point counts of random cyclic-symmetric systems");
  sweep->add_option("--dims", dims, "range lo..hi");
  sweep->add_option("--trials", trials, "trials per dimension");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    auto read = [&] { return load_input(resolve_input(input, ctx.fixture_dir)); };
    Json rep;
    if (*dec) {
      rep = cmd_decompose(read(), ctx);
    } else if (*wed) {
      rep = cmd_weddle(read(), ctx);
    } else if (*bp) {
      if (random_dim > 0)
        rep = cmd_basepoints(tensor_to_json(random_n1(static_cast<std::size_t>(random_dim), ctx.solver.seed)), ctx);
      else if (!input.empty())
        rep = cmd_basepoints(read(), ctx);
      else
        throw std::invalid_argument("basepoints needs an input or --random-n1");
    } else if (*sing) {
      rep = cmd_singular(read(), ctx);
    } else if (*jinv) {
      rep = cmd_jinv(read(), ctx, numeric);
    } else if (*cert) {
      rep = cmd_certify(read(), ctx);
    } else if (*sweep) {
      const auto sep = dims.find("..");
      const int lo = std::stoi(dims.substr(0, sep));
      const int hi = sep == std::string::npos ? lo : std::stoi(dims.substr(sep + 2));
      rep = cmd_jacobsthal_sweep(lo, hi, trials, ctx);
    }
    if (ctx.timing)
      rep["timing_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (as_json)
      out << rep.dump(2) << "\n";
    else
      out << render_text(rep);
    return rep.at("certified").get<bool>() ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace weddle::cli
