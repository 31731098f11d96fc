// Copyright 2026 The entcmi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// entcmi: correlation measures, formation/distillation solvers, and
// inequality sweeps over JSON-described distributions and density matrices.
//
// Exit codes: 0 success, 1 check violation, 2 parse/usage error,
// 3 invariant or infeasibility violation, 4 budget misconfiguration.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entcmi/density_matrix.hpp"
#include "entcmi/dpi.hpp"
#include "entcmi/ed.hpp"
#include "entcmi/ef.hpp"
#include "entcmi/errors.hpp"
#include "entcmi/info.hpp"
#include "entcmi/joint_pmf.hpp"
#include "entcmi/nets.hpp"
#include "entcmi/opt_report.hpp"
#include "entcmi/quantum_info.hpp"
#include "entcmi/sampling.hpp"
#include "entcmi/serialize.hpp"

namespace {

namespace io = entcmi::io;

struct OutputOpts {
  std::string format = "human";
  std::string path;
};

std::string resolve_out_path(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  const char* dir = std::getenv("ENTCMI_OUT_DIR");
  if (dir != nullptr && *dir != '\0') return std::string(dir) + "/" + path;
  return path;
}

void emit(const OutputOpts& out, std::string text) {
  if (text.empty() || text.back() != '\n') text += '\n';
  const std::string target = resolve_out_path(out.path);
  if (target.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(target, std::ios::binary);
  if (!f) throw entcmi::ConfigError("cannot open output path: " + target);
  f << text;
}

std::string read_input(const std::string& path) {
  if (path.empty()) {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw entcmi::ParseError("cannot open input file: " + path);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

std::vector<std::string> split_group(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) out.push_back(token);
  }
  if (out.empty()) throw entcmi::ParseError("empty axis group: " + text);
  return out;
}

std::vector<entcmi::Axis> parse_axis_list(const std::string& text) {
  std::vector<entcmi::Axis> axes;
  for (const auto& token : split_group(text)) {
    const auto pos = token.find('=');
    if (pos == std::string::npos || pos == 0 || pos + 1 == token.size()) {
      throw entcmi::ParseError("expected name=size, found: " + token);
    }
    axes.push_back(entcmi::Axis{token.substr(0, pos),
                                std::stoi(token.substr(pos + 1))});
  }
  return axes;
}

std::string nats_line(const std::string& key, double v) {
  return key + " = " + io::format_double(v) + " nats (" +
         io::format_double(v / entcmi::kNatsPerBit) + " bits)\n";
}

std::string plain_line(const std::string& key, const std::string& v) {
  return key + " = " + v + "\n";
}

std::string render_opt_report(const entcmi::OptReport& r,
                              const std::string& format) {
  if (format == "json") return io::to_json(r).dump(2);
  if (format == "csv") return io::to_csv(r);
  std::string out = nats_line("best_value", r.best_value);
  out += plain_line("bound_direction", to_string(r.bound_direction));
  out += plain_line("seed", std::to_string(r.seed));
  out += plain_line("evaluations", std::to_string(r.evaluations));
  out += plain_line("converged", r.converged ? "true" : "false");
  return out;
}

std::string render_sweep_report(const entcmi::SweepReport& r,
                                const std::string& format,
                                const nlohmann::json& extra) {
  if (format == "json") {
    nlohmann::json j = io::to_json(r);
    for (auto it = extra.begin(); it != extra.end(); ++it) {
      j[it.key()] = it.value();
    }
    return j.dump(2);
  }
  if (format == "csv") return io::to_csv(r);
  std::string out = plain_line("kind", to_string(r.kind));
  out += plain_line("trials", std::to_string(r.trials));
  out += plain_line("seed", std::to_string(r.seed));
  out += plain_line("slack", io::format_double(r.slack));
  out += nats_line("worst_margin", r.worst_margin);
  out += plain_line("violations", std::to_string(r.violations.size()));
  for (const auto& v : r.violations) {
    out += "violation trial=" + std::to_string(v.trial) +
           " lhs=" + io::format_double(v.lhs) +
           " rhs=" + io::format_double(v.rhs) +
           " margin=" + io::format_double(v.margin) + "\n";
  }
  for (auto it = extra.begin(); it != extra.end(); ++it) {
    for (auto inner = it->begin(); inner != it->end(); ++inner) {
      if (inner->is_number()) {
        out += nats_line(it.key() + "." + inner.key(),
                         inner->get<double>());
      }
    }
  }
  return out;
}

entcmi::SweepKind sweep_kind_from_name(const std::string& name) {
  if (name == "dpi-re") return entcmi::SweepKind::kDpiRelativeEntropy;
  if (name == "dpi-cmi") return entcmi::SweepKind::kDpiCmi;
  if (name == "fig3-ids") return entcmi::SweepKind::kFig3Identities;
  if (name == "ed-le-ef") return entcmi::SweepKind::kEdLeEf;
  if (name == "cmi-vs-mi") return entcmi::SweepKind::kCmiVsMi;
  throw entcmi::ParseError("unknown check kind: " + name);
}

double default_slack(const std::string& kind) {
  return kind == "ed-le-ef" ? 1e-6 : 1e-12;
}

void add_budget_flags(CLI::App* cmd, entcmi::ExtensionBudget* b) {
  cmd->add_option("--n-alpha", b->n_alpha,
                  "extension family size (0 = solver default)");
  cmd->add_option("--restarts", b->restarts, "random restarts");
  cmd->add_option("--iterations", b->iterations,
                  "simplex iterations per start");
  cmd->add_option("--seed", b->seed, "search seed");
  cmd->add_option("--tolerance", b->tolerance,
                  "early-exit slack above a known lower bound");
  cmd->add_option("--env-dim", b->env_dim,
                  "channel environment dimension (0 = state rank)");
}

struct InfoArgs {
  std::string in_path;
  std::string entropy_group;
  std::vector<std::string> mi_groups;
  std::vector<std::string> cmi_groups;
  std::string relent_path;
};

struct EfArgs {
  std::string in_path;
  std::string family = "k2";
  entcmi::ExtensionBudget budget;
};

struct EdArgs {
  std::string x_path;
  std::string xp_path;
  int n_lambda = 1;
  bool comm = false;
  entcmi::GammaEvent gamma;
  entcmi::ExtensionBudget budget;
};

struct CheckArgs {
  std::string kind;
  entcmi::SweepConfig config;
  bool slack_given = false;
};

struct GenArgs {
  std::string kind;
  std::uint64_t seed = 0;
  std::string axes = "a=2,b=2";
  std::string in_axes = "x=2";
  std::string out_axes = "a=2";
  int rank = 0;
  int n_a = 2;
  int n_b = 2;
  int n_x = 2;
  int n_y = 2;
  int n_alpha = 2;
  int n_lambda = 2;
  bool comm = false;
};

/// Builds the measurable joint for `info`: pmfs pass through, net specs are
/// compiled to their joint laws.
entcmi::JointPmf info_pmf(const nlohmann::json& doc, io::PayloadKind kind) {
  switch (kind) {
    case io::PayloadKind::kPmf:
      return io::pmf_from_json(doc);
    case io::PayloadKind::kFig1:
      return build_fig1(io::fig1_from_json(doc));
    case io::PayloadKind::kFig2:
      return build_fig2(io::fig2_from_json(doc));
    case io::PayloadKind::kFig3:
      return build_fig3(io::fig3_from_json(doc));
    default:
      throw entcmi::InvariantError(
          "measurable input must be a pmf, a net spec, or a density matrix");
  }
}

std::vector<std::string> all_axis_names(const entcmi::JointPmf& p) {
  std::vector<std::string> names;
  for (const auto& axis : p.axes()) names.push_back(axis.name);
  return names;
}

std::vector<std::string> all_subsystem_names(const entcmi::DensityMatrix& rho) {
  std::vector<std::string> names;
  for (const auto& s : rho.subsystems()) names.push_back(s.name);
  return names;
}

int run_info(const InfoArgs& args, const OutputOpts& out) {
  int selected = 0;
  selected += args.entropy_group.empty() ? 0 : 1;
  selected += args.mi_groups.empty() ? 0 : 1;
  selected += args.cmi_groups.empty() ? 0 : 1;
  selected += args.relent_path.empty() ? 0 : 1;
  if (selected != 1) {
    throw entcmi::ParseError(
        "info requires exactly one of --entropy, --mi, --cmi, --relent");
  }

  const nlohmann::json doc = io::parse_text(read_input(args.in_path));
  const io::PayloadKind kind = io::detect_payload(doc);
  const bool quantum = kind == io::PayloadKind::kDensityMatrix;

  std::string measure;
  nlohmann::json groups = nlohmann::json::array();
  double value = 0.0;
  if (!args.relent_path.empty()) {
    measure = "relent";
    if (quantum) {
      throw entcmi::InvariantError(
          "relative entropy requires pmf inputs on both sides");
    }
    const entcmi::JointPmf p = info_pmf(doc, kind);
    const nlohmann::json q_doc = io::parse_text(read_input(args.relent_path));
    const entcmi::JointPmf q = info_pmf(q_doc, io::detect_payload(q_doc));
    value = relative_entropy(p, q);
    groups.push_back(all_axis_names(p));
  } else if (!args.entropy_group.empty()) {
    measure = "entropy";
    if (quantum) {
      const entcmi::DensityMatrix rho = io::dmat_from_json(doc);
      const auto names = args.entropy_group == "all"
                             ? all_subsystem_names(rho)
                             : split_group(args.entropy_group);
      groups.push_back(names);
      value = von_neumann_entropy(partial_trace(rho, names));
    } else {
      const entcmi::JointPmf p = info_pmf(doc, kind);
      const auto names = args.entropy_group == "all" ? all_axis_names(p)
                                                     : split_group(
                                                           args.entropy_group);
      groups.push_back(names);
      value = entropy(p, names);
    }
  } else {
    const auto& raw = args.mi_groups.empty() ? args.cmi_groups
                                             : args.mi_groups;
    measure = args.mi_groups.empty() ? "cmi" : "mi";
    std::vector<std::vector<std::string>> g;
    for (const auto& part : raw) g.push_back(split_group(part));
    if (measure == "mi") g.push_back({});
    for (std::size_t i = 0; i + 1 < g.size(); ++i) groups.push_back(g[i]);
    if (measure == "cmi") groups.push_back(g[2]);
    if (quantum) {
      const entcmi::DensityMatrix rho = io::dmat_from_json(doc);
      value = quantum_cmi(rho, g[0], g[1], g[2]);
    } else {
      value = conditional_mutual_information(info_pmf(doc, kind), g[0], g[1],
                                             g[2]);
    }
  }

  if (out.format == "json") {
    nlohmann::json j = {{"measure", measure},
                        {"groups", groups},
                        {"value", value},
                        {"units", "nats"}};
    emit(out, j.dump(2));
  } else if (out.format == "csv") {
    std::string text = "field,value\nmeasure," + measure + "\nvalue," +
                       io::format_double(value) + "\n";
    emit(out, text);
  } else {
    emit(out, nats_line(measure, value));
  }
  return 0;
}

/// Accepts a bipartite pmf directly or reduces a common-cause net to its
/// visible pair.
entcmi::JointPmf bipartite_pmf(const nlohmann::json& doc,
                               io::PayloadKind kind) {
  if (kind == io::PayloadKind::kPmf) return io::pmf_from_json(doc);
  if (kind == io::PayloadKind::kFig1) {
    const entcmi::Fig1Spec spec = io::fig1_from_json(doc);
    return marginalize(build_fig1(spec), {spec.a_name(), spec.b_name()});
  }
  throw entcmi::InvariantError(
      "expected a bipartite pmf, a common-cause net, or a density matrix");
}

int run_ef(const EfArgs& args, const OutputOpts& out) {
  const nlohmann::json doc = io::parse_text(read_input(args.in_path));
  const io::PayloadKind kind = io::detect_payload(doc);
  entcmi::OptReport report;
  if (kind == io::PayloadKind::kDensityMatrix) {
    const entcmi::DensityMatrix rho = io::dmat_from_json(doc);
    if (args.family == "k2") {
      report = quantum_ef_k2(rho, args.budget);
    } else if (args.family == "k1") {
      report = quantum_ef_k1(rho, args.budget);
    } else {
      const int dim_lambda = args.budget.n_alpha > 0 ? args.budget.n_alpha : 2;
      report = quantum_ef_k0_bounded(rho, dim_lambda, args.budget);
    }
  } else {
    report = classical_ef(bipartite_pmf(doc, kind), args.budget);
  }
  emit(out, render_opt_report(report, out.format));
  return 0;
}

int run_ed(const EdArgs& args, const OutputOpts& out) {
  const nlohmann::json x_doc = io::parse_text(read_input(args.x_path));
  const nlohmann::json xp_doc = io::parse_text(read_input(args.xp_path));
  const io::PayloadKind x_kind = io::detect_payload(x_doc);
  const io::PayloadKind xp_kind = io::detect_payload(xp_doc);
  const bool x_quantum = x_kind == io::PayloadKind::kDensityMatrix;
  const bool xp_quantum = xp_kind == io::PayloadKind::kDensityMatrix;
  if (x_quantum != xp_quantum) {
    throw entcmi::InvariantError(
        "the two sources must both be classical or both be quantum");
  }
  entcmi::OptReport report;
  if (x_quantum) {
    report = quantum_ed(io::dmat_from_json(x_doc), io::dmat_from_json(xp_doc),
                        args.n_lambda, args.budget, args.comm, args.gamma);
  } else {
    report = classical_ed(bipartite_pmf(x_doc, x_kind),
                          bipartite_pmf(xp_doc, xp_kind), args.n_lambda,
                          args.budget, args.comm, args.gamma);
  }
  emit(out, render_opt_report(report, out.format));
  return 0;
}

int run_check(CheckArgs args, const OutputOpts& out) {
  if (!args.slack_given) args.config.slack = default_slack(args.kind);
  const entcmi::SweepKind kind = sweep_kind_from_name(args.kind);
  const entcmi::SweepReport report = run_sweep(kind, args.config);
  nlohmann::json extra = nlohmann::json::object();
  if (kind == entcmi::SweepKind::kCmiVsMi) {
    const auto [above, below] = search_cmi_vs_mi(args.config);
    extra["conditioning_raises"] = {{"cmi", above.cmi},
                                    {"mi", above.mi},
                                    {"gap", above.cmi - above.mi},
                                    {"pmf", io::to_json(above.pmf)}};
    extra["conditioning_destroys"] = {{"cmi", below.cmi},
                                      {"mi", below.mi},
                                      {"gap", below.mi - below.cmi},
                                      {"pmf", io::to_json(below.pmf)}};
  }
  emit(out, render_sweep_report(report, out.format, extra));
  return report.violations.empty() ? 0 : 1;
}

int run_gen(const GenArgs& args, const OutputOpts& out) {
  nlohmann::json doc;
  if (args.kind == "pmf") {
    entcmi::Rng rng(args.seed);
    doc = io::to_json(random_joint_pmf(rng, parse_axis_list(args.axes)));
  } else if (args.kind == "map") {
    entcmi::Rng rng(args.seed);
    doc = io::to_json(random_stochastic_map(rng, parse_axis_list(args.in_axes),
                                            parse_axis_list(args.out_axes)));
  } else if (args.kind == "dmat") {
    std::vector<entcmi::Subsystem> subs;
    for (const auto& axis : parse_axis_list(args.axes)) {
      subs.push_back(entcmi::Subsystem{axis.name, axis.size});
    }
    doc = io::to_json(
        random_density_matrix(args.seed, std::move(subs), args.rank));
  } else if (args.kind == "fig1") {
    doc = io::to_json(
        entcmi::random_fig1(args.seed, args.n_a, args.n_b, args.n_alpha));
  } else if (args.kind == "fig2") {
    doc = io::to_json(entcmi::random_fig2(args.seed, args.n_a, args.n_b,
                                          args.n_alpha, args.comm));
  } else if (args.kind == "fig3") {
    entcmi::Fig3Cards cards;
    cards.n_a = args.n_a;
    cards.n_b = args.n_b;
    cards.n_x = args.n_x;
    cards.n_y = args.n_y;
    cards.n_lambda = args.n_lambda;
    doc = io::to_json(random_fig3(args.seed, cards));
  } else {
    throw entcmi::ParseError("unknown gen kind: " + args.kind);
  }
  emit(out, doc.dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "correlation measures, formation/distillation solvers, and inequality "
      "sweeps (values in nats)"};
  app.require_subcommand(1);

  OutputOpts out;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "human"}))
      ->capture_default_str();
  app.add_option("--out", out.path,
                 "output file (relative paths resolve under ENTCMI_OUT_DIR; "
                 "default stdout)");

  InfoArgs info_args;
  CLI::App* info_cmd =
      app.add_subcommand("info", "evaluate one information measure");
  info_cmd->add_option("--in", info_args.in_path,
                       "input document (default stdin)");
  info_cmd->add_option("--entropy", info_args.entropy_group,
                       "entropy of a comma-separated axis group, or 'all'");
  info_cmd->add_option("--mi", info_args.mi_groups,
                       "mutual information between two axis groups")
      ->expected(2);
  info_cmd->add_option("--cmi", info_args.cmi_groups,
                       "conditional mutual information of two axis groups "
                       "given a third")
      ->expected(3);
  info_cmd->add_option("--relent", info_args.relent_path,
                       "relative entropy against the pmf in this file");

  EfArgs ef_args;
  CLI::App* ef_cmd =
      app.add_subcommand("ef", "formation cost of a bipartite input");
  ef_cmd->add_option("--in", ef_args.in_path, "input document (default stdin)");
  ef_cmd->add_option("--family", ef_args.family,
                     "extension family for density-matrix inputs")
      ->check(CLI::IsMember({"k0", "k1", "k2"}))
      ->capture_default_str();
  add_budget_flags(ef_cmd, &ef_args.budget);

  EdArgs ed_args;
  CLI::App* ed_cmd = app.add_subcommand(
      "ed", "distillable correlation of a two-pair source under local "
            "processing and post-selection");
  ed_cmd->add_option("--x", ed_args.x_path, "left source document")
      ->required();
  ed_cmd->add_option("--xp", ed_args.xp_path, "right source document")
      ->required();
  ed_cmd->add_option("--n-lambda", ed_args.n_lambda,
                     "extension family size for the inner minimization")
      ->capture_default_str();
  ed_cmd->add_flag("--comm", ed_args.comm,
                   "allow one-way communication of the kept outcome");
  ed_cmd->add_option("--gamma-a", ed_args.gamma.a_prime,
                     "kept outcome on the left ancilla")
      ->capture_default_str();
  ed_cmd->add_option("--gamma-b", ed_args.gamma.b_prime,
                     "kept outcome on the right ancilla")
      ->capture_default_str();
  add_budget_flags(ed_cmd, &ed_args.budget);

  CheckArgs check_args;
  CLI::App* check_cmd =
      app.add_subcommand("check", "run a property sweep and report violations");
  check_cmd
      ->add_option("kind", check_args.kind, "property to sweep")
      ->required()
      ->check(CLI::IsMember(
          {"dpi-re", "dpi-cmi", "fig3-ids", "ed-le-ef", "cmi-vs-mi"}));
  check_cmd->add_option("--trials", check_args.config.trials, "trial count")
      ->capture_default_str();
  check_cmd->add_option("--seed", check_args.config.seed, "sweep seed")
      ->capture_default_str();
  check_cmd
      ->add_option("--min-card", check_args.config.min_card,
                   "minimum axis cardinality")
      ->capture_default_str();
  check_cmd
      ->add_option("--max-card", check_args.config.max_card,
                   "maximum axis cardinality")
      ->capture_default_str();
  CLI::Option* slack_opt = check_cmd->add_option(
      "--slack", check_args.config.slack,
      "violation threshold (default 1e-12; 1e-6 for ed-le-ef)");
  check_cmd->add_option("--restarts", check_args.config.budget.restarts,
                        "solver restarts for ed-le-ef");
  check_cmd->add_option("--iterations", check_args.config.budget.iterations,
                        "solver iterations for ed-le-ef");

  GenArgs gen_args;
  CLI::App* gen_cmd =
      app.add_subcommand("gen", "emit a random instance as JSON");
  gen_cmd->add_option("kind", gen_args.kind, "document kind")
      ->required()
      ->check(CLI::IsMember({"pmf", "dmat", "map", "fig1", "fig2", "fig3"}));
  gen_cmd->add_option("--seed", gen_args.seed, "generation seed")
      ->capture_default_str();
  gen_cmd->add_option("--axes", gen_args.axes,
                      "name=size list for pmf/dmat kinds")
      ->capture_default_str();
  gen_cmd->add_option("--in-axes", gen_args.in_axes, "map input axes")
      ->capture_default_str();
  gen_cmd->add_option("--out-axes", gen_args.out_axes, "map output axes")
      ->capture_default_str();
  gen_cmd->add_option("--rank", gen_args.rank,
                      "density-matrix rank (0 = full)");
  gen_cmd->add_option("--n-a", gen_args.n_a, "visible cardinality a")
      ->capture_default_str();
  gen_cmd->add_option("--n-b", gen_args.n_b, "visible cardinality b")
      ->capture_default_str();
  gen_cmd->add_option("--n-x", gen_args.n_x, "hidden-net cardinality x")
      ->capture_default_str();
  gen_cmd->add_option("--n-y", gen_args.n_y, "hidden-net cardinality y")
      ->capture_default_str();
  gen_cmd->add_option("--n-alpha", gen_args.n_alpha, "source cause size")
      ->capture_default_str();
  gen_cmd->add_option("--n-lambda", gen_args.n_lambda,
                      "hidden-variable size")
      ->capture_default_str();
  gen_cmd->add_flag("--comm", gen_args.comm,
                    "add the communication arrow to fig2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  check_args.slack_given = slack_opt->count() > 0;

  try {
    if (info_cmd->parsed()) return run_info(info_args, out);
    if (ef_cmd->parsed()) return run_ef(ef_args, out);
    if (ed_cmd->parsed()) return run_ed(ed_args, out);
    if (check_cmd->parsed()) return run_check(check_args, out);
    if (gen_cmd->parsed()) return run_gen(gen_args, out);
  } catch (const entcmi::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const entcmi::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 4;
  } catch (const entcmi::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const entcmi::InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
