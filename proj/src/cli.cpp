#include "realcover/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "realcover/bn_calc.hpp"
#include "realcover/covering4.hpp"
#include "realcover/json_util.hpp"
#include "realcover/pl_sim.hpp"
#include "realcover/planner.hpp"

namespace realcover::cli {

namespace {

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

Json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(where, std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Inline JSON when it looks like an object, otherwise a file name.
Json json_argument(const std::string& arg, const std::string& where) {
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return parse_json_text(arg, where);
  return parse_json_text(read_file(arg), arg);
}

int scan_workers() {
  const char* raw = std::getenv("REALCOVER_SCAN_WORKERS");
  if (!raw || !*raw) return 1;
  int value = 0;
  const char* end = raw + std::char_traits<char>::length(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value < 1) throw ParseError("REALCOVER_SCAN_WORKERS", "expected a positive integer");
  return value;
}

int cmd_admissible(const std::string& arg, std::ostream& out) {
  const CoverSpec spec = cover_spec_from_json(json_argument(arg, "spec"));
  Json j;
  if (auto reason = first_violation(spec)) {
    j["admissible"] = false;
    j["reason"] = *reason;
    emit(out, j);
    return kExitNegative;
  }
  j["admissible"] = true;
  emit(out, j);
  return kExitOk;
}

int cmd_plan(const std::string& arg, std::ostream& out) {
  const CoverSpec spec = cover_spec_from_json(json_argument(arg, "spec"));
  const PlanResult result = plan(spec);
  if (const auto* p = std::get_if<Plan>(&result)) {
    emit(out, to_json(*p));
    return kExitOk;
  }
  Json j;
  j["infeasible"] = true;
  j["reason"] = std::get<Infeasible>(result).reason;
  emit(out, j);
  return kExitNegative;
}

int cmd_verify(const std::string& plan_file, const std::string& spec_arg, std::ostream& out) {
  const Plan p = plan_from_json(json_argument(plan_file, "plan"));
  const CoverSpec spec = cover_spec_from_json(json_argument(spec_arg, "spec"));
  const Verification v = verify_plan(p, spec);
  Json j;
  j["verified"] = v.verified;
  if (!v.trail.empty()) j["trail"] = v.trail;
  emit(out, j);
  return v.verified ? kExitOk : kExitNegative;
}

int cmd_realize(const std::string& plan_file, const std::string& format, std::ostream& out) {
  const Plan p = plan_from_json(json_argument(plan_file, "plan"));
  const PLCover cover = realize(p);
  if (format == "csv")
    out << fiber_csv(cover);
  else
    emit(out, to_json(cover));
  return kExitOk;
}

int cmd_covnum(const std::string& arg, std::ostream& out) {
  const Json j = json_argument(arg, "target");
  CoveringNumberTarget target;
  target.top = {detail::require_int(j, "", "g"), detail::require_int(j, "", "s"), detail::require_int(j, "", "a")};
  target.kcov = detail::require_int(j, "", "kcov");
  try {
    emit(out, to_json(build_covnum(target)));
    return kExitOk;
  } catch (const InfeasibleTarget& e) {
    Json neg;
    neg["infeasible"] = true;
    neg["reason"] = e.what();
    emit(out, neg);
    return kExitNegative;
  }
}

int cmd_enumerate(int g_max, int k_max, std::ostream& out) {
  if (g_max < 0) throw ParseError("g_max", "must be non-negative");
  if (k_max < 2) throw ParseError("k_max", "must be at least 2");
  Json arr = Json::array();
  for (const auto& spec : enumerate_admissible(g_max, k_max, scan_workers())) arr.push_back(to_json(spec));
  emit(out, arr);
  return kExitOk;
}

int cmd_rho(int g, int k, int r, std::ostream& out) {
  if (g < 0) throw ParseError("g", "must be non-negative");
  if (k < 1) throw ParseError("k", "must be positive");
  if (r < 1) throw ParseError("r", "must be positive");
  Json j;
  j["g"] = g;
  j["k"] = k;
  j["r"] = r;
  j["rho"] = rho(g, k, r);
  if (r == 1 && k <= g) {
    const auto w = expected_W1k(g, k);
    j["expected_W1k"] = w ? Json(*w) : Json("empty");
  }
  emit(out, j);
  return kExitOk;
}

int cmd_dims(int g, int k, std::ostream& out) {
  if (g < 2) throw ParseError("g", "must be at least 2");
  if (k < 1) throw ParseError("k", "must be positive");
  emit(out, to_json(dims(g, k)));
  return kExitOk;
}

int cmd_facts(const std::vector<int>& key, std::ostream& out) {
  if (key.empty()) {
    Json arr = Json::array();
    for (const auto& f : facts()) arr.push_back(to_json(f));
    emit(out, arr);
    return kExitOk;
  }
  if (key.size() != 4) throw ParseError("facts", "expected g s a k or nothing");
  emit(out, to_json(lookup_fact({key[0], key[1], key[2], key[3]})));
  return kExitOk;
}

int report(std::ostream& out, std::ostream& err, const std::string& path, const std::string& message) {
  Json j;
  j["error"] = message;
  if (!path.empty()) j["path"] = path;
  emit(out, j);
  err << "realcover: " << message << "\n";
  return kExitMalformed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real coverings of real curves: admissibility, plans, PL models, covering numbers"};
  app.name("realcover");
  app.require_subcommand(1);

  std::string json_arg, plan_file, format = "json";
  int g = 0, k = 0, r = 1, g_max = 0, k_max = 0;
  std::vector<int> fact_key;

  auto* admissible = app.add_subcommand("admissible", "check a cover spec against the admissibility predicates");
  admissible->add_option("spec", json_arg, "cover spec JSON or file")->required();
  auto* plan_cmd = app.add_subcommand("plan", "synthesize a construction plan");
  plan_cmd->add_option("spec", json_arg, "cover spec JSON or file")->required();
  auto* verify = app.add_subcommand("verify", "replay a plan and compare with a spec");
  verify->add_option("plan", plan_file, "plan JSON file")->required();
  verify->add_option("spec", json_arg, "cover spec JSON or file")->required();
  auto* realize_cmd = app.add_subcommand("realize", "build the piecewise-linear real locus of a plan");
  realize_cmd->add_option("plan", plan_file, "plan JSON file")->required();
  realize_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  auto* covnum = app.add_subcommand("covnum", "degree-4 covering with a prescribed covering number");
  covnum->add_option("target", json_arg, R"({"g","s","a","kcov"} JSON or file)")->required();
  auto* enumerate = app.add_subcommand("enumerate", "list every admissible spec in a box");
  enumerate->add_option("g_max", g_max)->required();
  enumerate->add_option("k_max", k_max)->required();
  auto* rho_cmd = app.add_subcommand("rho", "Brill-Noether number");
  rho_cmd->add_option("g", g)->required();
  rho_cmd->add_option("k", k)->required();
  rho_cmd->add_option("r", r);
  auto* dims_cmd = app.add_subcommand("dims", "Hurwitz space and moduli dimensions");
  dims_cmd->add_option("g", g)->required();
  dims_cmd->add_option("k", k)->required();
  auto* facts_cmd = app.add_subcommand("facts", "recorded facts about special types");
  facts_cmd->add_option("key", fact_key, "g s a k");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return report(out, err, "argv", e.what());
  }

  try {
    if (admissible->parsed()) return cmd_admissible(json_arg, out);
    if (plan_cmd->parsed()) return cmd_plan(json_arg, out);
    if (verify->parsed()) return cmd_verify(plan_file, json_arg, out);
    if (realize_cmd->parsed()) return cmd_realize(plan_file, format, out);
    if (covnum->parsed()) return cmd_covnum(json_arg, out);
    if (enumerate->parsed()) return cmd_enumerate(g_max, k_max, out);
    if (rho_cmd->parsed()) return cmd_rho(g, k, r, out);
    if (dims_cmd->parsed()) return cmd_dims(g, k, out);
    if (facts_cmd->parsed()) return cmd_facts(fact_key, out);
  } catch (const ParseError& e) {
    return report(out, err, e.path(), e.what());
  } catch (const nlohmann::json::exception& e) {
    return report(out, err, "", e.what());
  } catch (const std::invalid_argument& e) {
    return report(out, err, "", e.what());
  }
  return report(out, err, "argv", "no subcommand");
}

}  // namespace realcover::cli
