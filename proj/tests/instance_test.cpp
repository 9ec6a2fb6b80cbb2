// Copyright 2026 The bgclean Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "bgc/bias.hpp"
#include "bgc/errors.hpp"
#include "bgc/generators.hpp"
#include "bgc/instance.hpp"

namespace bgc {
namespace {

int error_line(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

std::string error_message(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseInstanceTest, MinimalFeedbackVertexSetFile) {
  const Instance inst = parse_instance(
      "# triangle\ngraph 3\nbias empty\nedge 0 1\nedge 1 2\nedge 0 2\n");
  EXPECT_EQ(inst.graph.num_vertices(), 3);
  EXPECT_EQ(inst.graph.num_edges(), 3);
  EXPECT_EQ(inst.spec.bias.kind, BiasKind::kEmpty);
  EXPECT_EQ(inst.oracle->name(), "empty");
  EXPECT_FALSE(inst.spec.root);
  EXPECT_FALSE(inst.spec.budget);
  EXPECT_EQ(inst.costs, (std::vector<Rational>(3, 1)));
}

TEST(ParseInstanceTest, BiasDefaultsToEmpty) {
  const Instance inst = parse_instance("graph 2\nedge 0 1\n");
  EXPECT_EQ(inst.spec.bias.kind, BiasKind::kEmpty);
}

TEST(ParseInstanceTest, CyclicLabels) {
  const Instance inst = parse_instance(
      "graph 3\nbias cyclic 2\nedge 0 1 g=1\nedge 1 2\nedge 0 2\n");
  EXPECT_EQ(inst.spec.edges[0].g, 1);
  EXPECT_FALSE(inst.spec.edges[1].g);
  const auto& oracle = dynamic_cast<const CyclicOracle&>(*inst.oracle);
  EXPECT_EQ(oracle.labels(), (std::vector<long>{0, 1, 0, 0}));
  EXPECT_FALSE(oracle.is_balanced(inst.graph, make_cycle(inst.graph, std::vector<Vertex>{0, 1, 2})));
}

TEST(ParseInstanceTest, RootBudgetAndCosts) {
  const Instance inst = parse_instance(
      "graph 3\nedge 0 1\nroot 2\nbudget 4\ncost 1 3/4\ncost 2 1\n");
  EXPECT_EQ(inst.spec.root, 2);
  EXPECT_EQ(inst.spec.budget, 4);
  EXPECT_EQ(inst.costs[1], Rational(3, 4));
  EXPECT_EQ(inst.costs[0], 1);
}

TEST(ParseInstanceTest, ColourMatrixAndPartition) {
  const Instance colour = parse_instance(
      "graph 3\nbias color\nedge 0 1 color=1\nedge 1 2 color=1\nedge 0 2 color=1\n");
  EXPECT_EQ(colour.oracle->name(), "color");
  const Instance matrix = parse_instance(
      "graph 2\nbias matrix 2\nedge 0 1 m=1,1/2,0,-3\n");
  const auto& m = dynamic_cast<const MatrixOracle&>(*matrix.oracle);
  EXPECT_EQ(m.labels()[1].at(0, 1), Rational(1, 2));
  const Instance partition = parse_instance(
      "graph 3\nbias partition\nedge 0 1\nedge 0 2\nedge 1 2\nclass 1 0\n"
      "class 2 1\nroot 0\n");
  EXPECT_EQ(partition.oracle->name(), "partition");
}

TEST(ParseInstanceTest, TableBiasLoadsRelativeToTheFile) {
  const std::filesystem::path data = BGC_TEST_DATA_DIR;
  const Instance inst = load_instance(data / "s3_triangle.txt");
  EXPECT_EQ(inst.spec.bias.kind, BiasKind::kTable);
  const auto& oracle = dynamic_cast<const TableOracle&>(*inst.oracle);
  EXPECT_EQ(oracle.group().order(), 6);
  EXPECT_TRUE(oracle.is_balanced(
      inst.graph, make_cycle(inst.graph, std::vector<Vertex>{0, 1, 2})));
}

TEST(ParseInstanceTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("graph 2\nedge 0 0\n"), 2);
  EXPECT_NE(error_message("graph 2\nedge 0 0\n").find("subdivide"),
            std::string::npos);
  EXPECT_EQ(error_line("graph 2\nedge 0 1\nedge 1 0\n"), 3);
  EXPECT_EQ(error_line("graph 2\n\nedge 0 5\n"), 3);
  EXPECT_EQ(error_line("graph 2\nedge 0 1 color=2\n"), 2);
  EXPECT_EQ(error_line("graph 2\nbias cyclic 3\nedge 0 1 g=3\n"), 3);
  EXPECT_EQ(error_line("graph 2\nbias color\nedge 0 1\n"), 3);
  EXPECT_EQ(error_line("graph 2\nbias matrix 2\nedge 0 1 m=1,2,2,4\n"), 3);
  EXPECT_EQ(error_line("graph 2\nbias matrix 2\nedge 0 1 m=1,2,3\n"), 3);
  EXPECT_EQ(error_line("graph 2\nedge 0 1\ncost 1 0\n"), 3);
  EXPECT_EQ(error_line("graph 2\nedge 0 1\nfrobnicate\n"), 3);
  EXPECT_EQ(error_line("edge 0 1\ngraph 2\n"), 1);
  EXPECT_EQ(error_line("graph 2\ngraph 2\n"), 2);
  EXPECT_EQ(error_line("graph 3\nbias partition\nedge 0 1\nclass 1 0\n"), 2);
  EXPECT_EQ(error_line("graph 2\nbias table missing.table\nedge 0 1\n"), 2);
  EXPECT_THROW(parse_instance(""), ParseError);
}

TEST(RenderInstanceTest, RoundTripsGeneratorOutput) {
  const std::vector<Family> families{Family::kEmpty, Family::kCyclic,
                                     Family::kOct,   Family::kColour,
                                     Family::kMatrix, Family::kApex,
                                     Family::kMultiway};
  for (Family family : families) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      GeneratorOptions options;
      options.family = family;
      options.n = 7;
      options.modulus = 5;
      options.terminals = 3;
      options.weighted = seed % 2 == 0;
      options.seed = seed;
      InstanceSpec spec = generate_instance(options);
      spec.budget = static_cast<int>(seed);
      const std::string text = render_instance(spec);
      EXPECT_EQ(parse_instance_spec(text), spec) << text;
      EXPECT_EQ(render_instance(parse_instance_spec(text)), text);
      EXPECT_NO_THROW(build_instance(spec));
    }
  }
}

TEST(GeneratorTest, SameSeedSameInstance) {
  GeneratorOptions options;
  options.family = Family::kCyclic;
  options.modulus = 3;
  options.seed = 77;
  EXPECT_EQ(generate_instance(options), generate_instance(options));
  GeneratorOptions other = options;
  other.seed = 78;
  EXPECT_NE(generate_instance(options), generate_instance(other));
}

TEST(GeneratorTest, MultiwayRespectsTheSizeBound) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GeneratorOptions options;
    options.family = Family::kMultiway;
    options.n = 9;
    options.terminals = 3;
    options.seed = seed;
    const InstanceSpec spec = generate_instance(options);
    EXPECT_LE(spec.n, 9);
    EXPECT_EQ(spec.bias.kind, BiasKind::kPartition);
    ASSERT_TRUE(spec.root);
  }
}

TEST(GeneratorTest, FamilyNames) {
  for (Family f : {Family::kEmpty, Family::kCyclic, Family::kOct,
                   Family::kColour, Family::kMatrix, Family::kApex,
                   Family::kMultiway}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  EXPECT_FALSE(parse_family("nope"));
}

TEST(RngTest, BoundsAndReproducibility) {
  Rng a(5);
  Rng b(5);
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.below(7);
    EXPECT_LT(x, 7u);
    EXPECT_EQ(x, b.below(7));
    const long y = a.between(-2, 2);
    b.between(-2, 2);
    EXPECT_GE(y, -2);
    EXPECT_LE(y, 2);
  }
  Rng c(9);
  for (int i = 0; i < 100; ++i) {
    EXPECT_FALSE(c.chance(0.0));
    EXPECT_TRUE(c.chance(1.0));
  }
}

}  // namespace
}  // namespace bgc
