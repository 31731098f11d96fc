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
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "entcmi/dpi.hpp"
#include "entcmi/errors.hpp"
#include "entcmi/nets.hpp"
#include "entcmi/quantum_info.hpp"
#include "entcmi/serialize.hpp"
#include "support/oracles.hpp"

namespace entcmi {
namespace {

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

TEST(RoundTripTest, PmfSurvivesJson) {
  oracle::TestRng rng(1);
  const JointPmf original({Axis{"a", 2}, Axis{"b", 3}}, rng.simplex(6));
  const JointPmf copy = io::pmf_from_json(io::to_json(original));
  ASSERT_EQ(copy.axes().size(), 2u);
  EXPECT_EQ(copy.axes()[0].name, "a");
  EXPECT_EQ(copy.axes()[1].size, 3);
  for (std::size_t i = 0; i < original.size(); ++i) {
    EXPECT_NEAR(copy[i], original[i], 1e-15);
  }
}

TEST(RoundTripTest, MapSurvivesJson) {
  oracle::TestRng rng(2);
  const StochasticMap original({Axis{"x", 3}}, {Axis{"y", 2}, Axis{"z", 2}},
                               rng.map_table(3, 4));
  const StochasticMap copy = io::map_from_json(io::to_json(original));
  ASSERT_EQ(copy.in_axes().size(), 1u);
  ASSERT_EQ(copy.out_axes().size(), 2u);
  EXPECT_EQ(copy.out_axes()[1].name, "z");
  for (std::size_t o = 0; o < 4; ++o) {
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_NEAR(copy(o, i), original(o, i), 1e-15);
    }
  }
}

TEST(RoundTripTest, DensityMatrixSurvivesJson) {
  const DensityMatrix original = random_density_matrix(
      3, {Subsystem{"a", 2}, Subsystem{"b", 3}});
  const DensityMatrix copy = io::dmat_from_json(io::to_json(original));
  ASSERT_EQ(copy.subsystems().size(), 2u);
  EXPECT_EQ(copy.subsystems()[1].name, "b");
  EXPECT_EQ(copy.subsystems()[1].dim, 3);
  EXPECT_LT((copy.matrix() - original.matrix()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(RoundTripTest, NetSpecsSurviveJson) {
  const Fig1Spec f1 = random_fig1(4, 2, 3, 2);
  const nlohmann::json j1 = io::to_json(f1);
  EXPECT_EQ(j1.at("type"), "fig1");
  const JointPmf built1 = build_fig1(f1);
  const JointPmf copy1 = build_fig1(io::fig1_from_json(j1));
  for (std::size_t i = 0; i < built1.size(); ++i) {
    EXPECT_NEAR(copy1[i], built1[i], 1e-15);
  }

  const Fig2Spec f2 = random_fig2(5, 2, 2, 2, true);
  const nlohmann::json j2 = io::to_json(f2);
  EXPECT_EQ(j2.at("type"), "fig2");
  EXPECT_EQ(j2.at("comm_arrow"), true);
  const JointPmf built2 = build_fig2(f2);
  const JointPmf copy2 = build_fig2(io::fig2_from_json(j2));
  for (std::size_t i = 0; i < built2.size(); ++i) {
    EXPECT_NEAR(copy2[i], built2[i], 1e-15);
  }

  const Fig3Spec f3 = random_fig3(6, Fig3Cards{2, 2, 3, 2, 2});
  const nlohmann::json j3 = io::to_json(f3);
  EXPECT_EQ(j3.at("type"), "fig3");
  const JointPmf built3 = build_fig3(f3);
  const JointPmf copy3 = build_fig3(io::fig3_from_json(j3));
  for (std::size_t i = 0; i < built3.size(); ++i) {
    EXPECT_NEAR(copy3[i], built3[i], 1e-15);
  }
}

TEST(RoundTripTest, ReportsSerializeAllFields) {
  OptReport opt;
  opt.best_value = 0.25;
  opt.bound_direction = BoundDirection::kUpperBoundOfMin;
  opt.best_params = {{"family", "k2"}};
  opt.seed = 7;
  opt.evaluations = 123;
  opt.converged = true;
  const nlohmann::json j = io::to_json(opt);
  EXPECT_EQ(j.at("best_value"), 0.25);
  EXPECT_EQ(j.at("bound_direction"), "upper-bound-of-min");
  EXPECT_EQ(j.at("best_params").at("family"), "k2");
  EXPECT_EQ(j.at("seed"), 7);
  EXPECT_EQ(j.at("evaluations"), 123);
  EXPECT_EQ(j.at("converged"), true);

  SweepReport sweep;
  sweep.kind = SweepKind::kDpiCmi;
  sweep.trials = 4;
  sweep.seed = 9;
  sweep.slack = 1e-12;
  sweep.worst_margin = 0.125;
  sweep.violations.push_back(
      ViolationRecord{2, 1.0, 2.0, -1.0, {{"note", "test"}}});
  const nlohmann::json js = io::to_json(sweep);
  EXPECT_EQ(js.at("kind"), "dpi-cmi");
  EXPECT_EQ(js.at("trials"), 4);
  EXPECT_EQ(js.at("worst_margin"), 0.125);
  ASSERT_EQ(js.at("violations").size(), 1u);
  EXPECT_EQ(js.at("violations")[0].at("trial"), 2);
  EXPECT_EQ(js.at("violations")[0].at("instance").at("note"), "test");
}

TEST(DetectPayloadTest, ClassifiesEveryDocumentKind) {
  oracle::TestRng rng(7);
  const JointPmf pmf({Axis{"a", 2}}, rng.simplex(2));
  EXPECT_EQ(io::detect_payload(io::to_json(pmf)), io::PayloadKind::kPmf);

  const StochasticMap map({Axis{"x", 2}}, {Axis{"y", 2}},
                          rng.map_table(2, 2));
  EXPECT_EQ(io::detect_payload(io::to_json(map)),
            io::PayloadKind::kStochasticMap);

  const DensityMatrix rho =
      random_density_matrix(8, {Subsystem{"a", 2}, Subsystem{"b", 2}});
  EXPECT_EQ(io::detect_payload(io::to_json(rho)),
            io::PayloadKind::kDensityMatrix);

  EXPECT_EQ(io::detect_payload(io::to_json(random_fig1(1, 2, 2, 2))),
            io::PayloadKind::kFig1);
  EXPECT_EQ(io::detect_payload(io::to_json(random_fig2(1, 2, 2, 2))),
            io::PayloadKind::kFig2);
  EXPECT_EQ(io::detect_payload(io::to_json(
                random_fig3(1, Fig3Cards{2, 2, 2, 2, 2}))),
            io::PayloadKind::kFig3);

  EXPECT_THROW(io::detect_payload(nlohmann::json::object()), ParseError);
  EXPECT_THROW(io::detect_payload(nlohmann::json::array()), ParseError);
}

TEST(ParseErrorTest, MalformedTextIsWrapped) {
  EXPECT_THROW(io::parse_text("{ nope"), ParseError);
  EXPECT_NO_THROW(io::parse_text("{\"probs\": [1.0]}"));
}

TEST(ParseErrorTest, SchemaViolationsRaiseParseError) {
  EXPECT_THROW(io::pmf_from_json(nlohmann::json{{"axes", 3}}), ParseError);
  EXPECT_THROW(
      io::pmf_from_json(nlohmann::json{
          {"axes", {{{"name", "a"}, {"size", 2}}}}}),
      ParseError);  // missing probs
  EXPECT_THROW(io::pmf_from_json(nlohmann::json{
                   {"type", "map"},
                   {"axes", {{{"name", "a"}, {"size", 2}}}},
                   {"probs", {0.5, 0.5}}}),
               ParseError);  // wrong tag

  nlohmann::json ragged = {{"in_axes", {{{"name", "x"}, {"size", 2}}}},
                           {"out_axes", {{{"name", "y"}, {"size", 2}}}},
                           {"table", {{1.0, 0.0}, {0.0}}}};
  EXPECT_THROW(io::map_from_json(ragged), ParseError);

  nlohmann::json mismatched = {
      {"subsystems", {{{"name", "a"}, {"dim", 2}}}},
      {"re", {{1.0, 0.0}, {0.0, 0.0}}},
      {"im", {{0.0, 0.0}}}};
  EXPECT_THROW(io::dmat_from_json(mismatched), ParseError);

  nlohmann::json no_arrow = io::to_json(random_fig2(2, 2, 2, 2));
  no_arrow.erase("comm_arrow");
  EXPECT_THROW(io::fig2_from_json(no_arrow), ParseError);
}

TEST(ParseErrorTest, DomainViolationsKeepTheirType) {
  const nlohmann::json negative = {
      {"axes", {{{"name", "a"}, {"size", 2}}}}, {"probs", {1.5, -0.5}}};
  EXPECT_THROW(io::pmf_from_json(negative), InvariantError);
}

TEST(FormatDoubleTest, SeventeenDigitsRoundTrip) {
  EXPECT_EQ(io::format_double(1.0), "1");
  EXPECT_EQ(io::format_double(0.1), "0.10000000000000001");
  oracle::TestRng rng(11);
  for (int i = 0; i < 50; ++i) {
    const double x = (rng.uniform() - 0.5) * std::pow(10.0, i % 7);
    EXPECT_EQ(std::stod(io::format_double(x)), x);
  }
}

TEST(CsvTest, OptReportRowsAreStable) {
  OptReport opt;
  opt.best_value = 0.5;
  opt.bound_direction = BoundDirection::kHeuristic;
  opt.seed = 3;
  opt.evaluations = 10;
  const std::string csv = io::to_csv(opt);
  EXPECT_EQ(csv.rfind("field,value\n", 0), 0u);
  EXPECT_NE(csv.find("best_value,0.5\n"), std::string::npos);
  EXPECT_NE(csv.find("bound_direction,heuristic\n"), std::string::npos);
  EXPECT_NE(csv.find("converged,false\n"), std::string::npos);
  EXPECT_EQ(count_lines(csv), 6u);
}

TEST(CsvTest, SweepReportListsViolations) {
  SweepReport sweep;
  sweep.kind = SweepKind::kEdLeEf;
  sweep.trials = 2;
  sweep.worst_margin = -0.25;
  sweep.violations.push_back(ViolationRecord{1, 0.75, 0.5, -0.25, {}});
  const std::string csv = io::to_csv(sweep);
  EXPECT_NE(csv.find("kind,ed-le-ef\n"), std::string::npos);
  EXPECT_NE(csv.find("violation_count,1\n"), std::string::npos);
  EXPECT_NE(csv.find("violation.0.trial,1\n"), std::string::npos);
  EXPECT_NE(csv.find("violation.0.margin,-0.25\n"), std::string::npos);
  EXPECT_EQ(count_lines(csv), 11u);
}

}  // namespace
}  // namespace entcmi
