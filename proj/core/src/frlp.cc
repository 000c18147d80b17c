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


#include "pap/frlp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pap {

Rational ParseRational(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw std::invalid_argument("empty number");
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const Rational num = ParseRational(s.substr(0, slash));
    const Rational den = ParseRational(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return num / den;
  }
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  const auto dot = s.find('.');
  std::string digits = s;
  mpz_class denom = 1;
  if (dot != std::string::npos) {
    digits = s.substr(0, dot) + s.substr(dot + 1);
    for (size_t i = dot + 1; i < s.size(); ++i) denom *= 10;
  }
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a number: " + text);
  }
  Rational r{mpz_class(digits, 10), denom};
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string FormatRational(const Rational& value, int digits) {
  mpf_class f(value, 256);
  std::ostringstream out;
  out.precision(digits);
  out << std::fixed << f;
  return out.str();
}

int RationalLp::variable(const std::string& name) const {
  auto it = std::find(variables.begin(), variables.end(), name);
  if (it == variables.end()) throw std::out_of_range("unknown variable " + name);
  return static_cast<int>(it - variables.begin());
}

int RationalLp::num_nonzeros() const {
  int k = 0;
  for (const auto& row : rows) k += static_cast<int>(row.terms.size());
  return k;
}

namespace {

class LpBuilder {
 public:
  explicit LpBuilder(RationalLp& lp) : lp_(lp) {}

  int Var(const std::string& name, bool is_free = false) {
    lp_.variables.push_back(name);
    lp_.free.push_back(is_free);
    return static_cast<int>(lp_.variables.size()) - 1;
  }

  void Row(std::string name, std::vector<std::pair<int, Rational>> terms, Sense sense,
           Rational rhs) {
    lp_.rows.push_back({std::move(name), std::move(terms), sense, std::move(rhs)});
  }

 private:
  RationalLp& lp_;
};

}  // namespace

RationalLp BuildPolyhedron(const Rational& rho, const Rational& epsilon,
                           const Rational& epsilon_prime) {
  RationalLp lp;
  lp.rho = rho;
  lp.epsilon = epsilon;
  lp.epsilon_prime = epsilon_prime;
  LpBuilder b(lp);
  const int opt_c = b.Var("opt_C", true);
  const int cost = b.Var("cost", true);
  int w[4];
  for (int i = 0; i < 4; ++i) w[i] = b.Var("omega_" + std::to_string(i));
  struct Family {
    int zero_e, one, one0, one1, one2, two;
  };
  auto family = [&](const std::string& s) {
    Family f;
    f.zero_e = b.Var(s + "_0e");
    f.one = b.Var(s + "_1");
    f.one0 = b.Var(s + "_1^0");
    f.one1 = b.Var(s + "_1^1");
    f.one2 = b.Var(s + "_1^2");
    f.two = b.Var(s + "_2");
    return f;
  };
  const Family a = family("alpha"), be = family("beta"), g = family("gamma");
  const Rational one = 1, quarter{1, 4}, five_quarters{5, 4}, half{1, 2};
  const Rational packing = Rational(3) / (Rational(5) + epsilon);

  b.Row("relaxation_lower_bound", {{opt_c, 1}, {w[1], 1}, {w[2], 1}, {w[3], 1}}, Sense::kGe, 2);
  b.Row("ratio", {{cost, 1}, {opt_c, -rho}}, Sense::kGe, 0);
  for (const auto& [name, f] : {std::pair{"alpha", a}, std::pair{"beta", be}, std::pair{"gamma", g}}) {
    b.Row(std::string("cost_") + name,
          {{cost, 1}, {f.one, five_quarters}, {f.two, one}, {f.zero_e, -quarter}}, Sense::kLe,
          Rational(3) + half * epsilon_prime);
  }
  b.Row("track_mass", {{w[0], 1}, {w[1], 2}, {w[2], 4}, {w[3], 6}}, Sense::kLe, 2);
  b.Row("alpha1_ge_omega1", {{a.one, 1}, {w[1], -1}}, Sense::kGe, 0);
  b.Row("alpha1_ge_beta1", {{a.one, 1}, {be.one, -1}}, Sense::kGe, 0);
  b.Row("alpha1_ge_gamma1", {{a.one, 1}, {g.one, -1}}, Sense::kGe, 0);
  b.Row("alpha1_ge_omega1_alpha10", {{a.one, 1}, {w[1], -1}, {a.one0, -1}}, Sense::kGe, 0);
  b.Row("alpha1_ge_omega1_beta10", {{a.one, 1}, {w[1], -1}, {be.one0, -1}}, Sense::kGe, 0);
  b.Row("beta1_ge_omega1", {{be.one, 1}, {w[1], -1}}, Sense::kGe, 0);
  b.Row("alpha1_ge_alpha0e", {{a.one, 1}, {a.zero_e, -1}}, Sense::kGe, 0);
  b.Row("beta1_ge_beta0e", {{be.one, 1}, {be.zero_e, -1}}, Sense::kGe, 0);
  b.Row("gamma1_ge_gamma0e", {{g.one, 1}, {g.zero_e, -1}}, Sense::kGe, 0);
  b.Row("omega0_ge_beta0e", {{w[0], 1}, {be.zero_e, -1}}, Sense::kGe, 0);
  b.Row("alpha1_split", {{a.one, 1}, {a.one0, -1}, {a.one1, -1}, {a.one2, -1}}, Sense::kEq, 0);
  b.Row("beta1_split", {{be.one, 1}, {be.one0, -1}, {be.one1, -1}, {be.one2, -1}}, Sense::kEq, 0);
  b.Row("alpha2_packing",
        {{a.two, 1}, {w[2], -packing}, {a.one0, 2 * packing}, {a.one1, packing}}, Sense::kGe, 0);
  b.Row("beta2_packing",
        {{be.two, 1}, {w[2], -packing}, {be.one0, 2 * packing}, {be.one1, packing}}, Sense::kGe,
        0);
  b.Row("gamma_packing", {{g.one, 1}, {g.two, 1}, {w[1], -packing}, {w[2], -packing}},
        Sense::kGe, 0);
  return lp;
}

namespace {

// Dense tableau for: A x (=) b, x >= 0, b >= 0, artificials on every row.
class Phase1 {
 public:
  Phase1(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
      : m_(static_cast<int>(a.size())), n_(m_ ? static_cast<int>(a[0].size()) : 0) {
    t_.assign(m_ + 1, std::vector<Rational>(n_ + m_ + 1));
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      if (b[i] < 0) {
        for (auto& x : a[i]) x = -x;
        b[i] = -b[i];
      }
      for (int j = 0; j < n_; ++j) t_[i][j] = a[i][j];
      t_[i][n_ + i] = 1;
      t_[i][n_ + m_] = b[i];
      basis_[i] = n_ + i;
    }
    // Objective row: minimize the sum of artificials, written as reduced costs.
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) t_[m_][j] -= t_[i][j];
      t_[m_][n_ + m_] -= t_[i][n_ + m_];
    }
  }

  int Run() {
    int pivots = 0;
    for (;;) {
      int enter = -1;
      for (int j = 0; j < n_ + m_; ++j) {
        if (t_[m_][j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == -1) return pivots;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][n_ + m_] / t_[i][enter];
        if (leave == -1 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == -1) return pivots;  // unbounded cannot happen in phase one
      Pivot(leave, enter);
      ++pivots;
    }
  }

  bool Feasible() const { return t_[m_][n_ + m_] == 0; }

  std::vector<Rational> Solution() const {
    std::vector<Rational> x(n_);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = t_[i][n_ + m_];
    }
    return x;
  }

 private:
  void Pivot(int r, int c) {
    const Rational p = t_[r][c];
    for (auto& x : t_[r]) x /= p;
    for (int i = 0; i <= m_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      const Rational f = t_[i][c];
      for (int j = 0; j <= n_ + m_; ++j) {
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
      }
    }
    basis_[r] = c;
  }

  int m_, n_;
  std::vector<std::vector<Rational>> t_;
  std::vector<int> basis_;
};

}  // namespace

LpVerdict CheckFeasibility(const RationalLp& lp) {
  // Columns: one per variable, a negative twin per free variable, one slack
  // per inequality.
  const int nv = static_cast<int>(lp.variables.size());
  std::vector<int> twin(nv, -1);
  int cols = nv;
  for (int v = 0; v < nv; ++v) {
    if (lp.free[v]) twin[v] = cols++;
  }
  std::vector<int> slack(lp.rows.size(), -1);
  for (size_t r = 0; r < lp.rows.size(); ++r) {
    if (lp.rows[r].sense != Sense::kEq) slack[r] = cols++;
  }
  std::vector<std::vector<Rational>> a(lp.rows.size(), std::vector<Rational>(cols));
  std::vector<Rational> b(lp.rows.size());
  for (size_t r = 0; r < lp.rows.size(); ++r) {
    const auto& row = lp.rows[r];
    for (const auto& [v, c] : row.terms) {
      a[r][v] += c;
      if (twin[v] >= 0) a[r][twin[v]] -= c;
    }
    if (row.sense == Sense::kLe) a[r][slack[r]] = 1;
    if (row.sense == Sense::kGe) a[r][slack[r]] = -1;
    b[r] = row.rhs;
  }
  Phase1 solver(std::move(a), std::move(b));
  LpVerdict verdict;
  verdict.pivots = solver.Run();
  verdict.empty = !solver.Feasible();
  if (!verdict.empty) {
    auto x = solver.Solution();
    verdict.point.resize(nv);
    for (int v = 0; v < nv; ++v) {
      verdict.point[v] = x[v];
      if (twin[v] >= 0) verdict.point[v] -= x[twin[v]];
    }
  }
  return verdict;
}

RhoInterval MaxRho(const Rational& epsilon, const Rational& epsilon_prime,
                   const Rational& precision) {
  if (precision <= 0) throw std::invalid_argument("precision must be positive");
  RhoInterval r{Rational(1), Rational(4)};
  if (IsEmpty(BuildPolyhedron(r.nonempty, epsilon, epsilon_prime)) ||
      !IsEmpty(BuildPolyhedron(r.empty, epsilon, epsilon_prime))) {
    throw std::logic_error("feasibility is not monotone on [1, 4]");
  }
  while (r.empty - r.nonempty > precision) {
    Rational mid = (r.nonempty + r.empty) / 2;
    if (IsEmpty(BuildPolyhedron(mid, epsilon, epsilon_prime))) {
      r.empty = mid;
    } else {
      r.nonempty = mid;
    }
  }
  return r;
}

RationalLp BuildFapPolyhedron(const Rational& rho, const Rational& epsilon) {
  RationalLp lp;
  lp.rho = rho;
  lp.epsilon = epsilon;
  LpBuilder b(lp);
  const int opt = b.Var("opt", true);
  const int cost = b.Var("cost", true);
  const int beta1 = b.Var("beta_1");
  const int beta0e = b.Var("beta_0e");
  const Rational quarter{1, 4}, half{1, 2};
  b.Row("opt_lower_bound", {{opt, 1}, {beta1, half}, {beta0e, -quarter}}, Sense::kGe,
        Rational(3, 2));
  b.Row("cost_upper_bound", {{cost, 1}, {beta1, Rational(3, 4)}, {beta0e, -quarter}},
        Sense::kLe, Rational(5, 2) + half * epsilon);
  b.Row("ratio", {{cost, 1}, {opt, -rho}}, Sense::kGe, 0);
  b.Row("beta1_at_most_one", {{beta1, 1}}, Sense::kLe, 1);
  b.Row("beta1_ge_beta0e", {{beta1, 1}, {beta0e, -1}}, Sense::kGe, 0);
  return lp;
}

Rational FapRatio(const Rational& beta1, const Rational& beta0e) {
  const Rational num = Rational(5, 2) - Rational(3, 4) * beta1 + Rational(1, 4) * beta0e;
  const Rational den = Rational(3, 2) - Rational(1, 2) * beta1 + Rational(1, 4) * beta0e;
  return num / den;
}

FapMaximizer MaximizeFapRatio() {
  FapMaximizer best{0, 0, FapRatio(0, 0)};
  for (const auto& [b1, b0] : {std::pair{Rational(1), Rational(0)},
                               std::pair{Rational(1), Rational(1)}}) {
    const Rational r = FapRatio(b1, b0);
    if (r > best.ratio) best = {b1, b0, r};
  }
  return best;
}

std::string ExportLp(const RationalLp& lp) {
  std::ostringstream out;
  out << "\\ rho=" << lp.rho.get_str() << " eps=" << lp.epsilon.get_str()
      << " eps'=" << lp.epsilon_prime.get_str() << "\n";
  out << "max 0\nsubject to\n";
  for (const auto& row : lp.rows) {
    out << "  " << row.name << ":";
    for (const auto& [v, c] : row.terms) {
      out << (c < 0 ? " - " : " + ") << Rational(abs(c)).get_str() << " " << lp.variables[v];
    }
    out << (row.sense == Sense::kLe ? " <= " : row.sense == Sense::kGe ? " >= " : " = ")
        << row.rhs.get_str() << "\n";
  }
  out << "bounds\n";
  for (size_t v = 0; v < lp.variables.size(); ++v) {
    out << "  " << lp.variables[v] << (lp.free[v] ? " free" : " >= 0") << "\n";
  }
  out << "end\n";
  return out.str();
}

}  // namespace pap
