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
#include "entcmi/serialize.hpp"

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "entcmi/errors.hpp"

namespace entcmi::io {

namespace {

nlohmann::json axes_to_json(const std::vector<Axis>& axes) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& axis : axes) {
    out.push_back({{"name", axis.name}, {"size", axis.size}});
  }
  return out;
}

std::vector<Axis> axes_from_json(const nlohmann::json& j,
                                 const std::string& field) {
  if (!j.is_array()) {
    throw ParseError(field + " must be an array of {name, size} objects");
  }
  std::vector<Axis> axes;
  axes.reserve(j.size());
  for (const auto& entry : j) {
    axes.push_back(Axis{entry.at("name").get<std::string>(),
                        entry.at("size").get<int>()});
  }
  return axes;
}

std::vector<double> vector_from_json(const nlohmann::json& j,
                                     const std::string& field) {
  if (!j.is_array()) {
    throw ParseError(field + " must be an array of numbers");
  }
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& entry : j) {
    out.push_back(entry.get<double>());
  }
  return out;
}

nlohmann::json matrix_rows_to_json(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(m(r, c));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_rows_from_json(const nlohmann::json& j,
                                      const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(field + " must be a non-empty array of rows");
  }
  const std::size_t n_rows = j.size();
  const std::size_t n_cols = j.front().is_array() ? j.front().size() : 0;
  if (n_cols == 0) {
    throw ParseError(field + " rows must be non-empty arrays");
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n_rows),
                    static_cast<Eigen::Index>(n_cols));
  for (std::size_t r = 0; r < n_rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != n_cols) {
      throw ParseError(field + " rows must all have the same length");
    }
    for (std::size_t c = 0; c < n_cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          row[c].get<double>();
    }
  }
  return m;
}

std::string type_tag(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw ParseError("payload must be a JSON object");
  }
  const auto it = j.find("type");
  if (it == j.end()) {
    return {};
  }
  if (!it->is_string()) {
    throw ParseError("type field must be a string");
  }
  return it->get<std::string>();
}

void require_tag(const nlohmann::json& j, const std::string& expected) {
  const std::string tag = type_tag(j);
  if (!tag.empty() && tag != expected) {
    throw ParseError("expected type \"" + expected + "\", found \"" + tag +
                     "\"");
  }
}

[[noreturn]] void rethrow_as_parse(const std::string& what,
                                   const nlohmann::json::exception& e) {
  throw ParseError(what + ": " + e.what());
}

void append_row(std::string& out, const std::string& key,
                const std::string& value) {
  out += key;
  out += ',';
  out += value;
  out += '\n';
}

}  // namespace

nlohmann::json parse_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

nlohmann::json to_json(const JointPmf& p) {
  return {{"axes", axes_to_json(p.axes())}, {"probs", p.probs()}};
}

nlohmann::json to_json(const StochasticMap& t) {
  const int n_in = static_cast<int>(axis_volume(t.in_axes()));
  const int n_out = static_cast<int>(axis_volume(t.out_axes()));
  nlohmann::json rows = nlohmann::json::array();
  for (int out = 0; out < n_out; ++out) {
    nlohmann::json row = nlohmann::json::array();
    for (int in = 0; in < n_in; ++in) {
      row.push_back(t.table()[static_cast<std::size_t>(out) *
                                  static_cast<std::size_t>(n_in) +
                              static_cast<std::size_t>(in)]);
    }
    rows.push_back(std::move(row));
  }
  return {{"in_axes", axes_to_json(t.in_axes())},
          {"out_axes", axes_to_json(t.out_axes())},
          {"table", rows}};
}

nlohmann::json to_json(const DensityMatrix& rho) {
  nlohmann::json subsystems = nlohmann::json::array();
  for (const auto& s : rho.subsystems()) {
    subsystems.push_back({{"name", s.name}, {"dim", s.dim}});
  }
  return {{"subsystems", subsystems},
          {"re", matrix_rows_to_json(rho.matrix().real())},
          {"im", matrix_rows_to_json(rho.matrix().imag())}};
}

nlohmann::json to_json(const Fig1Spec& spec) {
  return {{"type", "fig1"},
          {"p_alpha", to_json(spec.p_alpha)},
          {"p_a_given_alpha", to_json(spec.p_a_given_alpha)},
          {"p_b_given_alpha", to_json(spec.p_b_given_alpha)}};
}

nlohmann::json to_json(const Fig2Spec& spec) {
  return {{"type", "fig2"},
          {"x", to_json(spec.x)},
          {"xp", to_json(spec.xp)},
          {"u", to_json(spec.u)},
          {"v", to_json(spec.v)},
          {"comm_arrow", spec.comm_arrow}};
}

nlohmann::json to_json(const Fig3Spec& spec) {
  return {{"type", "fig3"},
          {"p_lambda", to_json(spec.p_lambda)},
          {"p_x_given_lambda", to_json(spec.p_x_given_lambda)},
          {"p_y_given_lambda", to_json(spec.p_y_given_lambda)},
          {"p_a_given_x", to_json(spec.p_a_given_x)},
          {"p_b_given_y", to_json(spec.p_b_given_y)}};
}

nlohmann::json to_json(const OptReport& report) {
  return {{"best_value", report.best_value},
          {"bound_direction", to_string(report.bound_direction)},
          {"best_params", report.best_params},
          {"seed", report.seed},
          {"evaluations", report.evaluations},
          {"converged", report.converged}};
}

nlohmann::json to_json(const SweepReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"trial", v.trial},
                          {"lhs", v.lhs},
                          {"rhs", v.rhs},
                          {"margin", v.margin},
                          {"instance", v.instance}});
  }
  return {{"kind", to_string(report.kind)},
          {"trials", report.trials},
          {"seed", report.seed},
          {"slack", report.slack},
          {"worst_margin", report.worst_margin},
          {"violations", violations}};
}

JointPmf pmf_from_json(const nlohmann::json& j) {
  try {
    require_tag(j, "pmf");
    auto axes = axes_from_json(j.at("axes"), "axes");
    auto probs = vector_from_json(j.at("probs"), "probs");
    return JointPmf(std::move(axes), std::move(probs));
  } catch (const nlohmann::json::exception& e) {
    rethrow_as_parse("invalid pmf document", e);
  }
}

StochasticMap map_from_json(const nlohmann::json& j) {
  try {
    require_tag(j, "map");
    const auto in_axes = axes_from_json(j.at("in_axes"), "in_axes");
    const auto out_axes = axes_from_json(j.at("out_axes"), "out_axes");
    const Eigen::MatrixXd rows = matrix_rows_from_json(j.at("table"), "table");
    std::vector<double> table(static_cast<std::size_t>(rows.size()));
    const int n_in = static_cast<int>(rows.cols());
    for (Eigen::Index out = 0; out < rows.rows(); ++out) {
      for (Eigen::Index in = 0; in < rows.cols(); ++in) {
        table[static_cast<std::size_t>(out) * static_cast<std::size_t>(n_in) +
              static_cast<std::size_t>(in)] = rows(out, in);
      }
    }
    return StochasticMap(in_axes, out_axes, table);
  } catch (const nlohmann::json::exception& e) {
    rethrow_as_parse("invalid map document", e);
  }
}

DensityMatrix dmat_from_json(const nlohmann::json& j) {
  try {
    require_tag(j, "dmat");
    const auto& subs_json = j.at("subsystems");
    if (!subs_json.is_array()) {
      throw ParseError("subsystems must be an array of {name, dim} objects");
    }
    std::vector<Subsystem> subsystems;
    subsystems.reserve(subs_json.size());
    for (const auto& entry : subs_json) {
      subsystems.push_back(Subsystem{entry.at("name").get<std::string>(),
                                     entry.at("dim").get<int>()});
    }
    const Eigen::MatrixXd re = matrix_rows_from_json(j.at("re"), "re");
    const Eigen::MatrixXd im = matrix_rows_from_json(j.at("im"), "im");
    if (re.rows() != im.rows() || re.cols() != im.cols()) {
      throw ParseError("re and im blocks must have identical shape");
    }
    Eigen::MatrixXcd m(re.rows(), re.cols());
    m.real() = re;
    m.imag() = im;
    return DensityMatrix(subsystems, m);
  } catch (const nlohmann::json::exception& e) {
    rethrow_as_parse("invalid dmat document", e);
  }
}

Fig1Spec fig1_from_json(const nlohmann::json& j) {
  try {
    require_tag(j, "fig1");
    Fig1Spec spec{pmf_from_json(j.at("p_alpha")),
                  map_from_json(j.at("p_a_given_alpha")),
                  map_from_json(j.at("p_b_given_alpha"))};
    validate_fig1(spec);
    return spec;
  } catch (const nlohmann::json::exception& e) {
    rethrow_as_parse("invalid fig1 document", e);
  }
}

Fig2Spec fig2_from_json(const nlohmann::json& j) {
  try {
    require_tag(j, "fig2");
    Fig2Spec spec{fig1_from_json(j.at("x")), fig1_from_json(j.at("xp")),
                  map_from_json(j.at("u")), map_from_json(j.at("v")),
                  j.at("comm_arrow").get<bool>()};
    validate_fig2(spec);
    return spec;
  } catch (const nlohmann::json::exception& e) {
    rethrow_as_parse("invalid fig2 document", e);
  }
}

Fig3Spec fig3_from_json(const nlohmann::json& j) {
  try {
    require_tag(j, "fig3");
    Fig3Spec spec{pmf_from_json(j.at("p_lambda")),
                  map_from_json(j.at("p_x_given_lambda")),
                  map_from_json(j.at("p_y_given_lambda")),
                  map_from_json(j.at("p_a_given_x")),
                  map_from_json(j.at("p_b_given_y"))};
    validate_fig3(spec);
    return spec;
  } catch (const nlohmann::json::exception& e) {
    rethrow_as_parse("invalid fig3 document", e);
  }
}

PayloadKind detect_payload(const nlohmann::json& j) {
  const std::string tag = type_tag(j);
  if (tag == "fig1") return PayloadKind::kFig1;
  if (tag == "fig2") return PayloadKind::kFig2;
  if (tag == "fig3") return PayloadKind::kFig3;
  if (tag == "pmf" || j.contains("probs")) return PayloadKind::kPmf;
  if (tag == "map" || j.contains("table")) return PayloadKind::kStochasticMap;
  if (tag == "dmat" || j.contains("re")) return PayloadKind::kDensityMatrix;
  throw ParseError("unrecognized payload schema");
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_csv(const OptReport& report) {
  std::string out = "field,value\n";
  append_row(out, "best_value", format_double(report.best_value));
  append_row(out, "bound_direction", to_string(report.bound_direction));
  append_row(out, "seed", std::to_string(report.seed));
  append_row(out, "evaluations", std::to_string(report.evaluations));
  append_row(out, "converged", report.converged ? "true" : "false");
  return out;
}

std::string to_csv(const SweepReport& report) {
  std::string out = "field,value\n";
  append_row(out, "kind", to_string(report.kind));
  append_row(out, "trials", std::to_string(report.trials));
  append_row(out, "seed", std::to_string(report.seed));
  append_row(out, "slack", format_double(report.slack));
  append_row(out, "worst_margin", format_double(report.worst_margin));
  append_row(out, "violation_count", std::to_string(report.violations.size()));
  for (std::size_t i = 0; i < report.violations.size(); ++i) {
    const auto& v = report.violations[i];
    const std::string prefix = "violation." + std::to_string(i) + ".";
    append_row(out, prefix + "trial", std::to_string(v.trial));
    append_row(out, prefix + "lhs", format_double(v.lhs));
    append_row(out, prefix + "rhs", format_double(v.rhs));
    append_row(out, prefix + "margin", format_double(v.margin));
  }
  return out;
}

}  // namespace entcmi::io
