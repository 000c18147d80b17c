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


#ifndef PAP_FRLP_HPP_
#define PAP_FRLP_HPP_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pap {

using Rational = mpq_class;

// Parses "1.9412", "7/4" or "2" into an exact rational.
Rational ParseRational(const std::string& text);
std::string FormatRational(const Rational& value, int digits = 8);

enum class Sense { kLe, kGe, kEq };

struct LpRow {
  std::string name;
  std::vector<std::pair<int, Rational>> terms;  // (variable, coefficient)
  Sense sense = Sense::kLe;
  Rational rhs;
};

struct RationalLp {
  std::vector<std::string> variables;
  std::vector<bool> free;  // per variable; the others are non-negative
  std::vector<LpRow> rows;
  Rational rho, epsilon, epsilon_prime;

  int variable(const std::string& name) const;  // throws std::out_of_range
  int num_nonzeros() const;
};

// Every displayed row of the starting-solution bound, non-negativities as
// variable bounds. Variables are normalized by the number of paths.
RationalLp BuildPolyhedron(const Rational& rho, const Rational& epsilon,
                           const Rational& epsilon_prime);

struct LpVerdict {
  bool empty = true;
  std::vector<Rational> point;  // a feasible point when nonempty
  int pivots = 0;
};

// Exact phase-one simplex with Bland's rule.
LpVerdict CheckFeasibility(const RationalLp& lp);
inline bool IsEmpty(const RationalLp& lp) { return CheckFeasibility(lp).empty; }

struct RhoInterval {
  Rational nonempty;  // largest probed rho with a nonempty polyhedron
  Rational empty;     // smallest probed rho with an empty one
};

// Bisection on rho in [1, 4] until the gap is at most `precision`.
RhoInterval MaxRho(const Rational& epsilon, const Rational& epsilon_prime,
                   const Rational& precision);

// Reduced system of the forest bound in the variables opt, cost, beta_1 and
// beta_0^e.
RationalLp BuildFapPolyhedron(const Rational& rho, const Rational& epsilon);

// (5/2 - 3/4 beta_1 + 1/4 beta_0^e) / (3/2 - 1/2 beta_1 + 1/4 beta_0^e).
Rational FapRatio(const Rational& beta1, const Rational& beta0e);

struct FapMaximizer {
  Rational beta1, beta0e, ratio;
};

// Maximizes FapRatio over 0 <= beta_0^e <= beta_1 <= 1 by checking the
// vertices of that triangle (the ratio is linear-fractional).
FapMaximizer MaximizeFapRatio();

// Plain-text LP: "max 0", named rows, bounds section.
std::string ExportLp(const RationalLp& lp);

}  // namespace pap

#endif  // PAP_FRLP_HPP_
