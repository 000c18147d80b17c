// Copyright 2026 The pap Authors
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

#include <gtest/gtest.h>

#include "pap/frlp.hpp"

namespace pap {
namespace {

Rational Q(const char* text) { return ParseRational(text); }

// Exact row check, independent of the simplex.
bool Satisfies(const RationalLp& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.variables.size()) return false;
  for (size_t v = 0; v < x.size(); ++v) {
    if (!lp.free[v] && x[v] < 0) return false;
  }
  for (const auto& row : lp.rows) {
    Rational lhs = 0;
    for (const auto& [v, c] : row.terms) lhs += c * x[v];
    if (row.sense == Sense::kLe && lhs > row.rhs) return false;
    if (row.sense == Sense::kGe && lhs < row.rhs) return false;
    if (row.sense == Sense::kEq && lhs != row.rhs) return false;
  }
  return true;
}

TEST(ParseRational, DecimalsAndFractions) {
  EXPECT_EQ(Q("1.9412"), Rational(4853, 2500));
  EXPECT_EQ(Q("7/4"), Rational(7, 4));
  EXPECT_EQ(Q("2"), Rational(2));
  EXPECT_EQ(Q("0.0001"), Rational(1, 10000));
  EXPECT_THROW(Q("abc"), std::invalid_argument);
  EXPECT_THROW(Q("1/0"), std::invalid_argument);
  EXPECT_EQ(FormatRational(Rational(33, 17), 4), "1.9412");
}

TEST(Polyhedron, Shape) {
  auto lp = BuildPolyhedron(Q("1.9412"), Q("0.001"), Q("0.0001"));
  EXPECT_EQ(lp.variables.size(), 24u);
  EXPECT_TRUE(lp.free[lp.variable("opt_C")]);
  EXPECT_TRUE(lp.free[lp.variable("cost")]);
  EXPECT_FALSE(lp.free[lp.variable("omega_0")]);
  EXPECT_THROW(lp.variable("nope"), std::out_of_range);
  EXPECT_GT(lp.num_nonzeros(), 0);
}

TEST(Polyhedron, NonemptyAtOnePointNine) {
  auto lp = BuildPolyhedron(Q("1.90"), Q("0.001"), Q("0.0001"));
  auto v = CheckFeasibility(lp);
  ASSERT_FALSE(v.empty);
  EXPECT_TRUE(Satisfies(lp, v.point));
}

TEST(Polyhedron, FeasiblePointsCheckOut) {
  for (const char* rho : {"1", "1.5", "1.9", "1.94", "1.9412", "1.95", "2", "3"}) {
    auto lp = BuildPolyhedron(Q(rho), Q("0.001"), Q("0.0001"));
    auto v = CheckFeasibility(lp);
    if (!v.empty) {
      EXPECT_TRUE(Satisfies(lp, v.point)) << "rho " << rho;
    }
  }
}

TEST(Polyhedron, EmptinessIsMonotoneInRho) {
  bool seen_empty = false;
  for (int k = 0; k <= 40; ++k) {
    const Rational rho = Rational(180, 100) + Rational(k, 200);
    const bool empty = IsEmpty(BuildPolyhedron(rho, Q("0.001"), Q("0.0001")));
    if (seen_empty) {
      EXPECT_TRUE(empty) << "rho " << rho.get_str();
    }
    seen_empty = seen_empty || empty;
  }
  EXPECT_TRUE(seen_empty);
}

TEST(Polyhedron, VerdictIgnoresRowOrder) {
  for (const char* rho : {"1.90", "1.9412", "1.96"}) {
    auto lp = BuildPolyhedron(Q(rho), Q("0.001"), Q("0.0001"));
    auto reversed = lp;
    std::reverse(reversed.rows.begin(), reversed.rows.end());
    EXPECT_EQ(IsEmpty(lp), IsEmpty(reversed)) << "rho " << rho;
  }
}

// Frozen from the bisection, cross-checked by the exact row test above at
// both ends.
TEST(MaxRho, Bracket) {
  auto r = MaxRho(Q("0.001"), Q("0.0001"), Q("1/1000000"));
  EXPECT_LE(r.empty - r.nonempty, Q("1/1000000"));
  EXPECT_FALSE(IsEmpty(BuildPolyhedron(r.nonempty, Q("0.001"), Q("0.0001"))));
  EXPECT_TRUE(IsEmpty(BuildPolyhedron(r.empty, Q("0.001"), Q("0.0001"))));
  EXPECT_EQ(FormatRational(r.nonempty, 6), "1.941231");
  EXPECT_GT(r.nonempty, Q("1.90"));
}

TEST(ForestBound, MaximizerAndValues) {
  EXPECT_EQ(FapRatio(0, 0), Rational(5, 3));
  EXPECT_EQ(FapRatio(1, 0), Rational(7, 4));
  auto m = MaximizeFapRatio();
  EXPECT_EQ(m.beta1, 1);
  EXPECT_EQ(m.beta0e, 0);
  EXPECT_EQ(m.ratio, Rational(7, 4));
  EXPECT_TRUE(IsEmpty(BuildFapPolyhedron(Q("1.7510"), Q("0.001"))));
  EXPECT_FALSE(IsEmpty(BuildFapPolyhedron(Q("1.70"), Q("0.001"))));
}

TEST(ExportLp, Sections) {
  auto lp = BuildPolyhedron(Q("1.9412"), Q("0.001"), Q("0.0001"));
  auto text = ExportLp(lp);
  for (const char* s : {"max 0", "subject to", "bounds", "end", "ratio"}) {
    EXPECT_NE(text.find(s), std::string::npos) << s;
  }
}

}  // namespace
}  // namespace pap
