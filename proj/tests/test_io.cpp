#include <gtest/gtest.h>

#include <algorithm>

#include "parinv/error.hpp"
#include "parinv/io.hpp"
#include "test_support.hpp"

using namespace parinv;
using parinv::testing::x;

namespace {

const Composition kMain({2, 1, 3, 2});

int count_char(const std::string& s, char c) { return static_cast<int>(std::count(s.begin(), s.end(), c)); }

}  // namespace

TEST(Diagram, MarkerCountsOfMainExample) {
  const std::string d = render_diagram(GeneratorSet(kMain));
  EXPECT_EQ(count_char(d, 'S'), 5);
  EXPECT_EQ(count_char(d, 'X'), 3);
  EXPECT_EQ(count_char(d, 'T'), 8);
  EXPECT_EQ(count_char(d, 'o'), 23 - 13);
  EXPECT_EQ(std::count(d.begin(), d.end(), '\n'), 9);
}

TEST(Diagram, TrivialCases) {
  const std::string single = render_diagram(GeneratorSet(Composition({3})));
  EXPECT_EQ(single, "    1  2  3\n  1 .  .  .\n  2 .  .  .\n  3 .  .  .\n");
  EXPECT_EQ(render_diagram(GeneratorSet(Composition({1, 1}))), "    1  2\n  1 .  S\n  2 .  .\n");
}

TEST(Diagram, CellsLineUpWithColumns) {
  const std::string d = render_diagram(GeneratorSet(kMain));
  std::vector<std::string> lines;
  std::size_t start = 0;
  for (std::size_t pos; (pos = d.find('\n', start)) != std::string::npos; start = pos + 1) lines.push_back(d.substr(start, pos - start));
  // Column j's marker sits at offset 1 + 3j in every row.
  auto marker = [&](int i, int j) {
    const std::string& row = lines[static_cast<std::size_t>(i)];
    const std::size_t at = static_cast<std::size_t>(1 + 3 * j);
    return at < row.size() ? row[at] : ' ';
  };
  EXPECT_EQ(marker(2, 3), 'S');
  EXPECT_EQ(marker(1, 6), 'T');
  EXPECT_EQ(marker(4, 7), 'T');
  EXPECT_EQ(marker(1, 4), 'o');
  EXPECT_EQ(marker(3, 1), '.');
  EXPECT_EQ(lines[4][static_cast<std::size_t>(2 + 3 * 7)], 'X');
}

TEST(GeneratorSetJson, Fields) {
  const Json j = generator_set_to_json(GeneratorSet(kMain));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"composition", "M", "S_layers", "pairs", "phi", "T", "M_prime"}));
  EXPECT_EQ(j["composition"], Json::parse("[2,1,3,2]"));
  EXPECT_EQ(j["S_layers"], Json::parse("[[[2,3],[3,4],[6,7]],[[1,5],[5,8]]]"));
  EXPECT_EQ(j["phi"], Json::parse("[[4,7],[4,8],[5,7]]"));
  EXPECT_EQ(j["M"].size(), 23u);
  EXPECT_EQ(j["T"].size(), 13u);
  EXPECT_EQ(j["M_prime"].size(), 12u);
  EXPECT_EQ(j["pairs"][0].size(), 4u);
}

TEST(PolynomialJson, RoundTripAndLayout) {
  const Polynomial p = x(1, 3) * x(2, 4) * Rational(-3, 2) + x(5, 7).pow(2) + 4;
  const Json j = polynomial_to_json(p);
  EXPECT_EQ(j.dump(), R"({"[[\"x_{1,3}\",1],[\"x_{2,4}\",1]]":"-3/2","[[\"x_{5,7}\",2]]":"1","[]":"4"})");
  EXPECT_EQ(polynomial_from_json(j), p);
  Rng rng(3);
  const std::vector<VariableId> vars = {VariableId::x(1, 3), VariableId::t(), VariableId::y({2, 3}), VariableId::c({4, 5})};
  for (int round = 0; round < 30; ++round) {
    const Polynomial q = parinv::testing::random_polynomial(rng, vars, 5, 3);
    EXPECT_EQ(polynomial_from_json(polynomial_to_json(q)), q);
  }
}

TEST(PolynomialJson, RejectsMalformedInput) {
  for (const char* bad : {"[1,2]", R"({"x":"1"})", R"({"[[\"x_{1,3}\"]]":"1"})", R"({"[[\"q_{1,3}\",1]]":"1"})",
                          R"({"[]":"1/0"})", R"({"[]":1.5})"}) {
    try {
      polynomial_from_json(Json::parse(bad));
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadInput) << bad;
    }
  }
}

TEST(MatrixJson, RoundTripAndValidation) {
  Rng rng(4);
  const RationalMatrix m = parinv::testing::random_point(rng, kMain);
  EXPECT_EQ(matrix_from_json(matrix_to_json(m), kMain), m);
  Json bad = matrix_to_json(m);
  bad[1][0] = "1/2";
  try {
    matrix_from_json(bad, kMain);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LeavesNilradical);
  }
  Json short_rows = matrix_to_json(m);
  short_rows.erase(7);
  EXPECT_THROW(matrix_from_json(short_rows, kMain), Error);
  Json not_number = matrix_to_json(m);
  not_number[0][3] = "abc";
  EXPECT_THROW(matrix_from_json(not_number, kMain), Error);
}

TEST(RootValuesJson, KeysInLexOrder) {
  const Json j = root_values_to_json({{{2, 3}, Rational(1, 2)}, {{1, 5}, Rational(-4)}});
  EXPECT_EQ(j.dump(), R"j({"(1,5)":"-4","(2,3)":"1/2"})j");
}
