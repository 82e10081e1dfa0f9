#include <gtest/gtest.h>

#include "sinkloc/generator.hpp"
#include "sinkloc/instance_io.hpp"
#include "support.hpp"

namespace sinkloc {
namespace {

constexpr const char* kPath3 =
    "n 3\n"
    "k 1\n"
    "edge 0 1 1 1\n"
    "edge 1 2 1 1\n"
    "weight 0 1\n"
    "weight 1 1\n"
    "weight 2 1\n";

TEST(InstanceIoTest, CanonicalTextRoundTrips) {
  const Instance inst = parse_instance(kPath3);
  EXPECT_EQ(inst.size(), 3u);
  EXPECT_EQ(inst.total_weight(), 3u);
  EXPECT_EQ(serialize_instance(inst), kPath3);
  EXPECT_EQ(serialize_instance(testing::path(3)), kPath3);
}

TEST(InstanceIoTest, CommentsBlankLinesAndDefaults) {
  const Instance inst = parse_instance("# two vertices\n\nn 2   # count\nedge 1 0 4 2\nweight 1 5\n");
  EXPECT_EQ(inst.k(), 1u);
  EXPECT_EQ(inst.weight(0), 0u);
  EXPECT_EQ(inst.weight(1), 5u);
  EXPECT_EQ(serialize_instance(inst), "n 2\nk 1\nedge 1 0 4 2\nweight 1 5\n");
}

TEST(InstanceIoTest, KOverride) { EXPECT_EQ(parse_instance(kPath3, 3).k(), 3u); }

TEST(InstanceIoTest, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const char* text) {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("n 2\nedge 0 1 1\n"), 2u);
  EXPECT_EQ(line_of("n 2\nk 1\nvertex 3\n"), 3u);
  EXPECT_EQ(line_of("n x\n"), 1u);
  EXPECT_EQ(line_of("n 2\nn 2\n"), 2u);
  EXPECT_EQ(line_of("k 1\n"), 1u);
}

TEST(InstanceIoTest, InvalidTreesAreInstanceErrors) {
  EXPECT_THROW(parse_instance("n 3\nedge 0 1 1 1\nedge 1 0 1 1\n"), InstanceError);
  EXPECT_THROW(parse_instance("n 2\nedge 0 1 1 0\n"), InstanceError);
  EXPECT_THROW(parse_instance("n 2\nedge 0 1 -1 1\n"), InstanceError);
  EXPECT_THROW(parse_instance("n 2\nedge 0 1 1 1\nweight 2 1\n"), InstanceError);
  EXPECT_THROW(parse_instance("n 2\nk 0\nedge 0 1 1 1\n"), InstanceError);
}

TEST(GeneratorTest, PathShapeIsUnitPathByDefault) {
  GeneratorOptions o;
  o.n = 3;
  o.shape = TreeShape::Path;
  EXPECT_EQ(serialize_instance(generate_instance(o)), kPath3);
}

TEST(GeneratorTest, DeterministicAndParsesBack) {
  for (TreeShape shape : {TreeShape::Random, TreeShape::Path, TreeShape::Star, TreeShape::Caterpillar}) {
    GeneratorOptions o;
    o.n = 50;
    o.seed = 7;
    o.max_tau = 5;
    o.max_cap = 4;
    o.max_weight = 9;
    o.shape = shape;
    const std::string a = serialize_instance(generate_instance(o));
    EXPECT_EQ(a, serialize_instance(generate_instance(o)));
    EXPECT_EQ(serialize_instance(parse_instance(a)), a);
    o.seed = 8;
    if (shape != TreeShape::Path && shape != TreeShape::Star) EXPECT_NE(a, serialize_instance(generate_instance(o)));
  }
}

TEST(GeneratorTest, SingleVertex) {
  GeneratorOptions o;
  o.n = 1;
  EXPECT_EQ(serialize_instance(generate_instance(o)), "n 1\nk 1\nweight 0 1\n");
}

}  // namespace
}  // namespace sinkloc
