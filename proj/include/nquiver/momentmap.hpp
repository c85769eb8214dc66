// Explicit representations of the doubled quiver, the moment map mu_alpha and
// symplectic form omega_alpha (exact rational or binary64), and the numeric
// layer: Gauss-Newton with Levenberg damping for mu(x) = lambda and
// SVD-rank-based fiber tangent dimensions.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "nquiver/linalg.hpp"
#include "nquiver/quiver.hpp"

namespace nquiver {

namespace matops {

inline Eigen::MatrixXd zero_like(const Eigen::MatrixXd*, int r, int c) {
  return Eigen::MatrixXd::Zero(r, c);
}
inline RatMat zero_like(const RatMat*, int r, int c) { return RatMat(r, c); }
inline double trace_of(const Eigen::MatrixXd& m) { return m.trace(); }
inline Rational trace_of(const RatMat& m) {
  Rational t = 0;
  for (int i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace matops

// One matrix per arrow of the doubled quiver, x_a of shape
// alpha_head x alpha_tail.
template <class Mat>
struct Representation {
  std::vector<Mat> mats;
};

using RationalRep = Representation<RatMat>;
using FloatRep = Representation<Eigen::MatrixXd>;

// Matrices per vertex (an element of Endom(alpha)).
template <class Mat>
using EndoElement = std::vector<Mat>;

template <class Mat>
void check_shapes(const DoubledQuiver& dq, const IntVec& alpha, const Representation<Mat>& x) {
  check_dim_vector(dq.base(), alpha, "representation");
  if (static_cast<int>(x.mats.size()) != dq.num_arrows())
    throw std::invalid_argument("representation: arrow count mismatch");
  for (int a = 0; a < dq.num_arrows(); ++a)
    if (x.mats[a].rows() != alpha[dq.head(a)] || x.mats[a].cols() != alpha[dq.tail(a)])
      throw std::invalid_argument("representation: matrix shape mismatch at arrow " +
                                  std::to_string(a));
}

template <class Mat>
Representation<Mat> zero_representation(const DoubledQuiver& dq, const IntVec& alpha) {
  Representation<Mat> x;
  for (int a = 0; a < dq.num_arrows(); ++a)
    x.mats.push_back(matops::zero_like(static_cast<Mat*>(nullptr),
                                       static_cast<int>(alpha[dq.head(a)]),
                                       static_cast<int>(alpha[dq.tail(a)])));
  return x;
}

inline int ambient_dim(const DoubledQuiver& dq, const IntVec& alpha) {
  int d = 0;
  for (int a = 0; a < dq.num_arrows(); ++a)
    d += static_cast<int>(alpha[dq.head(a)] * alpha[dq.tail(a)]);
  return d;
}

// mu(x)_i = sum_{a in Q, h(a)=i} x_a x_{a*} - sum_{a in Q, t(a)=i} x_{a*} x_a.
template <class Mat>
EndoElement<Mat> moment_map(const DoubledQuiver& dq, const IntVec& alpha,
                            const Representation<Mat>& x) {
  check_shapes(dq, alpha, x);
  EndoElement<Mat> mu;
  for (int i = 0; i < dq.base().size(); ++i)
    mu.push_back(matops::zero_like(static_cast<Mat*>(nullptr), static_cast<int>(alpha[i]),
                                   static_cast<int>(alpha[i])));
  const int m = dq.base().num_arrows();
  for (int a = 0; a < m; ++a) {
    const auto& arr = dq.base().arrows()[a];
    mu[arr.head] = mu[arr.head] + x.mats[a] * x.mats[a + m];
    mu[arr.tail] = mu[arr.tail] - x.mats[a + m] * x.mats[a];
  }
  return mu;
}

// omega(x, y) = sum_{a in Q} tr(x_{a*} y_a) - tr(x_a y_{a*}).
template <class Mat>
auto symplectic_form(const DoubledQuiver& dq, const IntVec& alpha, const Representation<Mat>& x,
                     const Representation<Mat>& y) {
  check_shapes(dq, alpha, x);
  check_shapes(dq, alpha, y);
  const int m = dq.base().num_arrows();
  auto acc = matops::trace_of(matops::zero_like(static_cast<Mat*>(nullptr), 0, 0));
  for (int a = 0; a < m; ++a)
    acc += matops::trace_of(x.mats[a + m] * y.mats[a]) - matops::trace_of(x.mats[a] * y.mats[a + m]);
  return acc;
}

// (a . x)_b = a_{h(b)} x_b - x_b a_{t(b)} for a in Endom(alpha).
template <class Mat>
Representation<Mat> endo_action(const DoubledQuiver& dq, const IntVec& alpha,
                                const EndoElement<Mat>& a, const Representation<Mat>& x) {
  check_shapes(dq, alpha, x);
  Representation<Mat> out;
  for (int b = 0; b < dq.num_arrows(); ++b)
    out.mats.push_back(a[dq.head(b)] * x.mats[b] - x.mats[b] * a[dq.tail(b)]);
  return out;
}

// Verifies that the trace pairing identifies mu with the abstract moment
// map: sum_i tr(mu(x)_i a_i) = omega(x, a x) for the left bimodule action
// (a x)_b = a_{h(b)} x_b, equivalently half the pairing against [a, x].
inline bool trace_pairing_check(const DoubledQuiver& dq, const IntVec& alpha,
                                const RationalRep& x, const EndoElement<RatMat>& a) {
  auto mu = moment_map(dq, alpha, x);
  Rational lhs = 0;
  for (int i = 0; i < dq.base().size(); ++i) lhs += matops::trace_of(mu[i] * a[i]);
  RationalRep left = x;
  for (int b = 0; b < dq.num_arrows(); ++b) left.mats[b] = a[dq.head(b)] * x.mats[b];
  Rational rhs = symplectic_form(dq, alpha, x, left);
  Rational comm = symplectic_form(dq, alpha, x, endo_action(dq, alpha, a, x));
  return lhs == rhs && 2 * lhs == comm;
}

struct empty_fiber_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline Eigen::VectorXd flatten_residual(const DoubledQuiver& dq, const IntVec& alpha,
                                        const std::vector<double>& lambda, const FloatRep& x) {
  auto mu = moment_map(dq, alpha, x);
  int rows = 0;
  for (auto ai : alpha) rows += static_cast<int>(ai * ai);
  Eigen::VectorXd r(rows);
  int at = 0;
  for (int i = 0; i < dq.base().size(); ++i) {
    Eigen::MatrixXd block = mu[i] - lambda[i] * Eigen::MatrixXd::Identity(
                                         static_cast<int>(alpha[i]), static_cast<int>(alpha[i]));
    for (int rr = 0; rr < block.rows(); ++rr)
      for (int cc = 0; cc < block.cols(); ++cc) r(at++) = block(rr, cc);
  }
  return r;
}

inline FloatRep unflatten_step(const DoubledQuiver& dq, const IntVec& alpha,
                               const Eigen::VectorXd& v) {
  FloatRep d = zero_representation<Eigen::MatrixXd>(dq, alpha);
  int at = 0;
  for (int a = 0; a < dq.num_arrows(); ++a)
    for (int rr = 0; rr < d.mats[a].rows(); ++rr)
      for (int cc = 0; cc < d.mats[a].cols(); ++cc) d.mats[a](rr, cc) = v(at++);
  return d;
}

}  // namespace detail

// Differential of the moment map at x, as a (sum alpha_i^2) x (ambient)
// matrix over the flattened coordinates.
inline Eigen::MatrixXd moment_map_jacobian(const DoubledQuiver& dq, const IntVec& alpha,
                                           const FloatRep& x) {
  check_shapes(dq, alpha, x);
  const int m = dq.base().num_arrows();
  int rows = 0;
  for (auto ai : alpha) rows += static_cast<int>(ai * ai);
  std::vector<int> vertex_offset(dq.base().size() + 1, 0);
  for (int i = 0; i < dq.base().size(); ++i)
    vertex_offset[i + 1] = vertex_offset[i] + static_cast<int>(alpha[i] * alpha[i]);
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(rows, ambient_dim(dq, alpha));
  int col = 0;
  for (int b = 0; b < dq.num_arrows(); ++b) {
    int base = b % m;
    const auto& arr = dq.base().arrows()[base];
    int hb = dq.head(b), tb = dq.tail(b);
    for (int rr = 0; rr < alpha[hb]; ++rr)
      for (int cc = 0; cc < alpha[tb]; ++cc, ++col) {
        // d mu[v] = sum_{h(a)=i} (v_a x_{a*} + x_a v_{a*}) - sum_{t(a)=i} (...)
        // with v the unit at arrow b, entry (rr, cc)
        auto add_block = [&](int vertex, const Eigen::MatrixXd& block, double sign) {
          int off = vertex_offset[vertex];
          for (int p = 0; p < block.rows(); ++p)
            for (int qq = 0; qq < block.cols(); ++qq)
              jac(off + p * block.cols() + qq, col) += sign * block(p, qq);
        };
        if (!dq.is_reversed(b)) {
          const Eigen::MatrixXd& star = x.mats[base + m];
          // head term: E x_{a*} ; tail term: x_{a*} E
          Eigen::MatrixXd headblk = Eigen::MatrixXd::Zero(alpha[arr.head], alpha[arr.head]);
          headblk.row(rr) = star.row(cc);
          add_block(arr.head, headblk, 1.0);
          Eigen::MatrixXd tailblk = Eigen::MatrixXd::Zero(alpha[arr.tail], alpha[arr.tail]);
          tailblk.col(cc) = star.col(rr);
          add_block(arr.tail, tailblk, -1.0);
        } else {
          const Eigen::MatrixXd& fwd = x.mats[base];
          // head term: x_a E ; tail term: E x_a
          Eigen::MatrixXd headblk = Eigen::MatrixXd::Zero(alpha[arr.head], alpha[arr.head]);
          headblk.col(cc) = fwd.col(rr);
          add_block(arr.head, headblk, 1.0);
          Eigen::MatrixXd tailblk = Eigen::MatrixXd::Zero(alpha[arr.tail], alpha[arr.tail]);
          tailblk.row(rr) = fwd.row(cc);
          add_block(arr.tail, tailblk, -1.0);
        }
      }
  }
  return jac;
}

struct SolveOptions {
  double tol = 1e-10;
  int max_iter = 200;
  double rank_tol = 1e-8;      // relative to the largest singular value
  double damping_init = 1e-3;
  double damping_up = 10.0;
  double damping_down = 0.1;
};

struct SolveResult {
  FloatRep x;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

inline FloatRep random_representation(const DoubledQuiver& dq, const IntVec& alpha,
                                      std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FloatRep x = zero_representation<Eigen::MatrixXd>(dq, alpha);
  for (auto& m : x.mats)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) = u(rng);
  return x;
}

// Gauss-Newton with Levenberg damping on the stacked residual mu(x) - lambda.
// The damped least-squares step is solved rank-revealing on the augmented
// system, so the trace-identity redundancy needs no special casing.
inline SolveResult gauss_newton_solve(const DoubledQuiver& dq, const IntVec& alpha,
                                      const Weight& lambda, FloatRep x,
                                      const SolveOptions& opts = {}) {
  check_shapes(dq, alpha, x);
  check_vertex_count(dq.base(), lambda, "gauss_newton_solve");
  if (dot(lambda, alpha) != 0)
    throw empty_fiber_error("gauss_newton_solve: dot(lambda, alpha) != 0, the fiber is empty");
  std::vector<double> lam;
  for (const auto& l : lambda) lam.push_back(to_double(l));

  SolveResult res;
  Eigen::VectorXd r = detail::flatten_residual(dq, alpha, lam, x);
  double rnorm = r.norm();
  double damping = opts.damping_init;
  const int ambient = ambient_dim(dq, alpha);
  if (ambient == 0) {
    res.x = std::move(x);
    res.residual = rnorm;
    res.converged = rnorm <= opts.tol;
    return res;
  }
  for (int iter = 0; iter < opts.max_iter; ++iter) {
    if (rnorm <= opts.tol) break;
    Eigen::MatrixXd jac = moment_map_jacobian(dq, alpha, x);
    bool stepped = false;
    for (int tries = 0; tries < 60 && !stepped; ++tries) {
      Eigen::MatrixXd aug(jac.rows() + ambient, ambient);
      aug.topRows(jac.rows()) = jac;
      aug.bottomRows(ambient) =
          std::sqrt(damping) * Eigen::MatrixXd::Identity(ambient, ambient);
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(jac.rows() + ambient);
      rhs.head(jac.rows()) = -r;
      Eigen::VectorXd step = aug.completeOrthogonalDecomposition().solve(rhs);
      FloatRep trial = x;
      int at = 0;
      for (int a = 0; a < dq.num_arrows(); ++a)
        for (int rr = 0; rr < trial.mats[a].rows(); ++rr)
          for (int cc = 0; cc < trial.mats[a].cols(); ++cc) trial.mats[a](rr, cc) += step(at++);
      Eigen::VectorXd rt = detail::flatten_residual(dq, alpha, lam, trial);
      if (rt.norm() < rnorm) {
        x = std::move(trial);
        r = std::move(rt);
        rnorm = r.norm();
        damping = std::max(damping * opts.damping_down, 1e-14);
        stepped = true;
      } else {
        damping *= opts.damping_up;
        if (damping > 1e14) break;
      }
    }
    res.iterations = iter + 1;
    if (!stepped) break;
  }
  res.x = std::move(x);
  res.residual = rnorm;
  res.converged = rnorm <= opts.tol;
  return res;
}

// dim Rep(doubled Q, alpha) minus the numerical rank of the differential at
// x; requires x to lie on the fiber within resid_tol.
inline int fiber_tangent_dim(const DoubledQuiver& dq, const IntVec& alpha, const Weight& lambda,
                             const FloatRep& x, double rank_tol = 1e-8,
                             double resid_tol = 1e-8) {
  std::vector<double> lam;
  for (const auto& l : lambda) lam.push_back(to_double(l));
  double resid = detail::flatten_residual(dq, alpha, lam, x).norm();
  if (resid > resid_tol)
    throw std::invalid_argument("fiber_tangent_dim: point is not on the fiber (residual " +
                                std::to_string(resid) + ")");
  const int ambient = ambient_dim(dq, alpha);
  if (ambient == 0) return 0;
  Eigen::MatrixXd jac = moment_map_jacobian(dq, alpha, x);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return ambient;
  int rk = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > rank_tol * sv(0)) ++rk;
  return ambient - rk;
}

struct MultiStartResult {
  SolveResult best;
  int starts_used = 0;
  std::optional<int> tangent_dim;  // at the best converged point
};

// Deterministic multi-start driver: seeds seed, seed+1, ... one per start.
inline MultiStartResult solve_multi(const DoubledQuiver& dq, const IntVec& alpha,
                                    const Weight& lambda, std::uint64_t seed, int starts,
                                    const SolveOptions& opts = {}) {
  MultiStartResult out;
  bool have = false;
  for (int k = 0; k < starts; ++k) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(k));
    FloatRep x0 = random_representation(dq, alpha, rng);
    SolveResult res = gauss_newton_solve(dq, alpha, lambda, std::move(x0), opts);
    ++out.starts_used;
    if (!have || res.residual < out.best.residual) {
      out.best = std::move(res);
      have = true;
    }
    if (out.best.converged) break;
  }
  if (out.best.converged)
    out.tangent_dim =
        fiber_tangent_dim(dq, alpha, lambda, out.best.x, opts.rank_tol, opts.tol * 100);
  return out;
}

}  // namespace nquiver
