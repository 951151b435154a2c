// Copyright 2026 The qroute Authors
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

#include "qroute/milp/simplex.hpp"

#include <cmath>
#include <stdexcept>

namespace qroute::milp {

namespace {

constexpr double kPrimalTol = 1e-8;
constexpr double kDualTol = 1e-9;
constexpr double kPivotTol = 1e-9;
constexpr int kRefactorEvery = 64;

}  // namespace

DualSimplex::DualSimplex(const MilpModel& model)
    : n_(model.num_variables()), m_(model.num_rows()) {
  cols_.assign(n_, {});
  cost_.assign(n_, 0.0);
  lower_.assign(n_ + m_, 0.0);
  upper_.assign(n_ + m_, 0.0);
  for (int j = 0; j < n_; ++j) {
    const Variable& v = model.variable(j);
    if (!std::isfinite(v.lower) || !std::isfinite(v.upper)) {
      throw std::invalid_argument("dual simplex needs finite column bounds (" +
                                  v.name + ")");
    }
    cost_[j] = v.cost;
    lower_[j] = v.lower;
    upper_[j] = v.upper;
  }
  for (int i = 0; i < m_; ++i) {
    const Row& r = model.rows()[i];
    for (const Term& t : r.terms) {
      cols_[t.var].emplace_back(i, t.coef);
    }
    lower_[n_ + i] = r.sense == Sense::LessEqual ? -kInf : r.rhs;
    upper_[n_ + i] = r.sense == Sense::GreaterEqual ? kInf : r.rhs;
  }
  heads_.resize(m_);
  pos_in_basis_.assign(n_ + m_, -1);
  at_upper_.assign(n_ + m_, 0);
  for (int i = 0; i < m_; ++i) {
    heads_[i] = n_ + i;
    pos_in_basis_[n_ + i] = i;
  }
  for (int j = 0; j < n_; ++j) at_upper_[j] = cost_[j] < 0.0;
}

void DualSimplex::set_bounds(int j, double lower, double upper) {
  lower_[j] = lower;
  upper_[j] = upper;
  factor_valid_ = false;
}

double DualSimplex::nonbasic_value(int j) const {
  return at_upper_[j] ? upper_[j] : lower_[j];
}

void DualSimplex::refactor() {
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m_, m_);
  for (int i = 0; i < m_; ++i) {
    int j = heads_[i];
    if (j < n_) {
      for (auto [r, a] : cols_[j]) b(r, i) = a;
    } else {
      b(j - n_, i) = -1.0;
    }
  }
  if (m_ > 0) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(b);
    if (!lu.isInvertible()) throw std::runtime_error("singular basis");
    binv_ = lu.inverse();
  } else {
    binv_.resize(0, 0);
  }
  updates_since_refactor_ = 0;
  compute_primal();
  compute_duals();
  factor_valid_ = true;
}

void DualSimplex::compute_primal() {
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m_);
  for (int j = 0; j < n_ + m_; ++j) {
    if (pos_in_basis_[j] >= 0) continue;
    double v = nonbasic_value(j);
    if (v == 0.0) continue;
    if (j < n_) {
      for (auto [r, a] : cols_[j]) rhs(r) -= a * v;
    } else {
      rhs(j - n_) += v;
    }
  }
  xb_ = binv_ * rhs;
}

void DualSimplex::compute_duals() {
  Eigen::VectorXd cb(m_);
  for (int i = 0; i < m_; ++i) {
    cb(i) = heads_[i] < n_ ? cost_[heads_[i]] : 0.0;
  }
  Eigen::VectorXd y = binv_.transpose() * cb;
  d_.assign(n_ + m_, 0.0);
  for (int j = 0; j < n_; ++j) {
    if (pos_in_basis_[j] >= 0) continue;
    double s = cost_[j];
    for (auto [r, a] : cols_[j]) s -= y(r) * a;
    d_[j] = s;
  }
  for (int i = 0; i < m_; ++i) {
    if (pos_in_basis_[n_ + i] < 0) d_[n_ + i] = y(i);
  }
}

void DualSimplex::pivot_column(int j, Eigen::VectorXd& out) const {
  out = Eigen::VectorXd::Zero(m_);
  if (j < n_) {
    for (auto [r, a] : cols_[j]) out += a * binv_.col(r);
  } else {
    out = -binv_.col(j - n_);
  }
}

DualSimplex::Status DualSimplex::solve(long iteration_limit) {
  try {
    if (!factor_valid_ || updates_since_refactor_ > 0) refactor();
  } catch (const std::exception&) {
    return Status::Error;
  }
  Eigen::VectorXd rho(m_), alpha_q(m_);
  std::vector<double> alpha_row(n_ + m_, 0.0);
  std::vector<int> candidates;

  for (long iter = 0; iter < iteration_limit; ++iter) {
    // Restore dual feasibility by bound flips (all structurals are boxed).
    bool flipped = false;
    for (int j = 0; j < n_ + m_; ++j) {
      if (pos_in_basis_[j] >= 0 || lower_[j] == upper_[j]) continue;
      if (!at_upper_[j] && d_[j] < -kDualTol && std::isfinite(upper_[j])) {
        at_upper_[j] = 1;
        flipped = true;
      } else if (at_upper_[j] && d_[j] > kDualTol &&
                 std::isfinite(lower_[j])) {
        at_upper_[j] = 0;
        flipped = true;
      }
    }
    if (flipped) compute_primal();

    int r = -1;
    double worst = kPrimalTol;
    for (int i = 0; i < m_; ++i) {
      int j = heads_[i];
      double viol = std::max(lower_[j] - xb_(i), xb_(i) - upper_[j]);
      double scale = 1.0 + std::min(std::abs(xb_(i)), 1e3);
      if (viol > worst * scale) {
        worst = viol / scale;
        r = i;
      }
    }
    if (r < 0) {
      if (updates_since_refactor_ > 0) {
        refactor();
        bool clean = true;
        for (int i = 0; i < m_ && clean; ++i) {
          int j = heads_[i];
          clean = xb_(i) >= lower_[j] - kPrimalTol * 10 &&
                  xb_(i) <= upper_[j] + kPrimalTol * 10;
        }
        if (!clean) continue;
      }
      return Status::Optimal;
    }

    const int leaving = heads_[r];
    const bool to_lower = xb_(r) < lower_[leaving];
    const double target = to_lower ? lower_[leaving] : upper_[leaving];

    rho = binv_.row(r).transpose();
    candidates.clear();
    for (int j = 0; j < n_ + m_; ++j) {
      if (pos_in_basis_[j] >= 0 || lower_[j] == upper_[j]) continue;
      double a;
      if (j < n_) {
        a = 0.0;
        for (auto [i, v] : cols_[j]) a += rho(i) * v;
      } else {
        a = -rho(j - n_);
      }
      alpha_row[j] = a;
      if (std::abs(a) < kPivotTol) continue;
      const bool can_increase = !at_upper_[j];
      // x_r moves by -a * dx_j.
      const bool helps = to_lower ? (can_increase ? a < 0 : a > 0)
                                  : (can_increase ? a > 0 : a < 0);
      if (helps) candidates.push_back(j);
    }
    if (candidates.empty()) return Status::Infeasible;

    double theta_max = kInf;
    for (int j : candidates) {
      double dj = at_upper_[j] ? std::max(0.0, -d_[j]) : std::max(0.0, d_[j]);
      theta_max = std::min(theta_max, (dj + kDualTol) / std::abs(alpha_row[j]));
    }
    int q = -1;
    double best_alpha = 0.0;
    for (int j : candidates) {
      double dj = at_upper_[j] ? std::max(0.0, -d_[j]) : std::max(0.0, d_[j]);
      if (dj / std::abs(alpha_row[j]) <= theta_max &&
          std::abs(alpha_row[j]) > best_alpha) {
        best_alpha = std::abs(alpha_row[j]);
        q = j;
      }
    }

    pivot_column(q, alpha_q);
    const double piv = alpha_q(r);
    if (std::abs(piv) < kPivotTol) {
      refactor();
      continue;
    }

    const double theta_d = d_[q] / alpha_row[q];
    // Fixed columns never enter; their reduced costs are refreshed on the
    // next refactor.
    for (int j = 0; j < n_ + m_; ++j) {
      if (pos_in_basis_[j] >= 0 || j == q || lower_[j] == upper_[j]) continue;
      d_[j] -= theta_d * alpha_row[j];
    }
    d_[q] = 0.0;
    d_[leaving] = -theta_d;

    const double xq = nonbasic_value(q);
    const double dx = (xb_(r) - target) / piv;
    xb_ -= dx * alpha_q;
    xb_(r) = xq + dx;

    binv_.row(r) /= piv;
    for (int i = 0; i < m_; ++i) {
      if (i == r || alpha_q(i) == 0.0) continue;
      binv_.row(i) -= alpha_q(i) * binv_.row(r);
    }

    heads_[r] = q;
    pos_in_basis_[q] = r;
    pos_in_basis_[leaving] = -1;
    at_upper_[leaving] = to_lower ? 0 : 1;

    if (++updates_since_refactor_ >= kRefactorEvery) {
      try {
        refactor();
      } catch (const std::exception&) {
        return Status::Error;
      }
    }
  }
  return Status::IterationLimit;
}

double DualSimplex::objective() const {
  auto x = primal();
  double s = 0.0;
  for (int j = 0; j < n_; ++j) s += cost_[j] * x[j];
  return s;
}

std::vector<double> DualSimplex::primal() const {
  std::vector<double> x(n_);
  for (int j = 0; j < n_; ++j) {
    int p = pos_in_basis_[j];
    x[j] = p >= 0 ? xb_(p) : nonbasic_value(j);
  }
  return x;
}

DualSimplex::Basis DualSimplex::basis() const {
  return Basis{heads_, at_upper_};
}

void DualSimplex::restore(const Basis& b) {
  heads_ = b.heads;
  at_upper_ = b.at_upper;
  std::fill(pos_in_basis_.begin(), pos_in_basis_.end(), -1);
  for (int i = 0; i < m_; ++i) pos_in_basis_[heads_[i]] = i;
  factor_valid_ = false;
}

}  // namespace qroute::milp
