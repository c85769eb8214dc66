// Membership in Sigma_lambda, nonemptiness, and dimension of the reduction.
//
// Decompositions of alpha into positive roots orthogonal to lambda are the
// primitive everything else reduces to. The stream enumerator below emits
// every multiset exactly once (parts nonincreasing in pool order). Membership
// and dimension questions only need extremal statistics of those multisets,
// which a dynamic program over the box [0, alpha] computes without touching
// the exponential enumeration.
#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nquiver/roots.hpp"

namespace nquiver {

struct SigmaOptions {
  std::size_t max_pool = 10000;        // hard cap on the root pool
  std::size_t max_cells = 1u << 22;    // hard cap on the DP box size
};

struct pool_cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Decomposition = std::vector<IntVec>;  // parts, nonincreasing in pool order

namespace detail {

inline bool leq_componentwise(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline void subtract_inplace(IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
}

inline void add_inplace(IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

}  // namespace detail

// Calls f(parts) for every multiset of pool elements summing to alpha.
// Pool order is respected: parts arrive with nondecreasing pool index, so
// with a descending-sorted pool the parts are nonincreasing. f returns false
// to stop early; the function returns false iff stopped.
template <class F>
bool for_each_decomposition(const IntVec& alpha, const std::vector<IntVec>& pool, F&& f) {
  Decomposition parts;
  IntVec remaining = alpha;
  std::function<bool(std::size_t)> dfs = [&](std::size_t start) -> bool {
    if (is_zero(remaining)) return f(static_cast<const Decomposition&>(parts));
    std::int64_t rem_sum = vector_sum(remaining);
    for (std::size_t k = start; k < pool.size(); ++k) {
      const IntVec& part = pool[k];
      if (vector_sum(part) > rem_sum) continue;
      if (!detail::leq_componentwise(part, remaining)) continue;
      parts.push_back(part);
      detail::subtract_inplace(remaining, part);
      bool keep_going = dfs(k);
      detail::add_inplace(remaining, part);
      parts.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  return dfs(0);
}

inline std::vector<Decomposition> decompositions(const IntVec& alpha,
                                                 std::vector<IntVec> pool) {
  std::sort(pool.begin(), pool.end(), std::greater<IntVec>());
  std::vector<Decomposition> out;
  for_each_decomposition(alpha, pool, [&](const Decomposition& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

// Root pool and decomposition statistics for a fixed (Q, lambda) inside the
// box [0, alpha]. maxp(v) is the largest sum of p over the parts of any
// decomposition of v into pool roots (INT64_MIN if v has none).
class LambdaRootSystem {
 public:
  LambdaRootSystem(const Quiver& q, const Weight& lambda, const IntVec& alpha,
                   const SigmaOptions& opts = {})
      : q_(q), box_(alpha) {
    check_dim_vector(q, alpha, "LambdaRootSystem");
    check_vertex_count(q, lambda, "LambdaRootSystem");
    std::size_t cells = 1;
    for (auto b : alpha) {
      cells *= static_cast<std::size_t>(b) + 1;
      if (cells > opts.max_cells)
        throw pool_cap_exceeded("box for dimension vector exceeds the DP cell cap");
    }
    for (auto& e : r_lambda_plus(q, lambda, alpha)) {
      pool_.push_back(std::move(e.alpha));
      if (pool_.size() > opts.max_pool)
        throw pool_cap_exceeded("root pool exceeds the configured cap");
    }
    pool_p_.reserve(pool_.size());
    for (const auto& r : pool_) pool_p_.push_back(tits_p(q, r));

    radix_.assign(alpha.size(), 1);
    for (int i = static_cast<int>(alpha.size()) - 2; i >= 0; --i)
      radix_[i] = radix_[i + 1] * (alpha[i + 1] + 1);

    pool_offset_.reserve(pool_.size());
    for (const auto& r : pool_) pool_offset_.push_back(index_of(r));

    maxp_.assign(cells, kNone);
    choice_.assign(cells, -1);
    maxp_[0] = 0;
    // ascending lexicographic sweep: every v - part precedes v, and the
    // mixed-radix index is linear, so index(v - part) = index(v) - offset
    IntVec v(alpha.size(), 0);
    const int n = static_cast<int>(alpha.size());
    std::size_t vi = 0;
    while (true) {
      int k = n - 1;
      while (k >= 0 && v[k] == alpha[k]) { v[k] = 0; --k; }
      if (k < 0) break;
      ++v[k];
      vi = index_of(v);
      for (std::size_t pk = 0; pk < pool_.size(); ++pk) {
        if (!detail::leq_componentwise(pool_[pk], v)) continue;
        std::int64_t sub = maxp_[vi - pool_offset_[pk]];
        if (sub == kNone) continue;
        if (maxp_[vi] == kNone || sub + pool_p_[pk] > maxp_[vi]) {
          maxp_[vi] = sub + pool_p_[pk];
          choice_[vi] = static_cast<int>(pk);
        }
      }
    }
  }

  const std::vector<IntVec>& pool() const { return pool_; }

  bool in_pool(const IntVec& v) const {
    for (const auto& r : pool_)
      if (r == v) return true;
    return false;
  }

  bool decomposable(const IntVec& v) const {
    return maxp_[index_of(v)] != kNone;
  }

  // Largest sum of p over >= 2-part decompositions of v; nullopt if none.
  std::optional<std::int64_t> best_multi_part_p(const IntVec& v) const {
    std::optional<std::int64_t> best;
    std::size_t vi = index_of(v);
    for (std::size_t pk = 0; pk < pool_.size(); ++pk) {
      if (pool_[pk] == v) continue;
      if (!detail::leq_componentwise(pool_[pk], v)) continue;
      std::int64_t sub = maxp_[vi - pool_offset_[pk]];
      if (sub == kNone) continue;
      std::int64_t total = sub + pool_p_[pk];
      if (!best || total > *best) best = total;
    }
    return best;
  }

  bool in_sigma(const IntVec& v) const {
    if (!in_pool(v)) return false;
    auto best = best_multi_part_p(v);
    return !best || tits_p(q_, v) > *best;
  }

  // A decomposition with >= 2 parts witnessing failure of the Sigma
  // inequality, when one exists.
  std::optional<Decomposition> sigma_violation(const IntVec& v) const {
    if (!in_pool(v)) return std::nullopt;
    std::optional<std::int64_t> best;
    std::size_t best_first = 0;
    std::size_t vi = index_of(v);
    for (std::size_t pk = 0; pk < pool_.size(); ++pk) {
      if (pool_[pk] == v) continue;
      if (!detail::leq_componentwise(pool_[pk], v)) continue;
      std::int64_t sub = maxp_[vi - pool_offset_[pk]];
      if (sub == kNone) continue;
      std::int64_t total = sub + pool_p_[pk];
      if (!best || total > *best) { best = total; best_first = pk; }
    }
    if (!best || tits_p(q_, v) > *best) return std::nullopt;
    Decomposition parts{pool_[best_first]};
    IntVec rest = v;
    detail::subtract_inplace(rest, pool_[best_first]);
    while (!is_zero(rest)) {
      int pk = choice_[index_of(rest)];
      parts.push_back(pool_[pk]);
      detail::subtract_inplace(rest, pool_[pk]);
    }
    return parts;
  }

  // 2 * max over decompositions into Sigma_lambda parts of sum p(part);
  // nullopt if v is not a sum of pool roots. This equals the maximum of
  // sum_t 2 p(beta^(t)) over realizable representation types.
  std::optional<std::int64_t> dimension(const IntVec& v) const {
    if (is_zero(v)) return 0;
    if (!decomposable(v)) return std::nullopt;
    std::vector<IntVec> sigma_pool;
    std::vector<std::int64_t> sigma_p;
    std::vector<std::size_t> sigma_offset;
    for (const auto& r : pool_)
      if (in_sigma(r)) {
        sigma_pool.push_back(r);
        sigma_p.push_back(tits_p(q_, r));
        sigma_offset.push_back(index_of(r));
      }
    std::vector<std::int64_t> f(maxp_.size(), kNone);
    f[0] = 0;
    IntVec w(v.size(), 0);
    const int n = static_cast<int>(v.size());
    while (true) {
      int k = n - 1;
      while (k >= 0 && w[k] == box_[k]) { w[k] = 0; --k; }
      if (k < 0) break;
      ++w[k];
      if (!detail::leq_componentwise(w, v)) continue;
      std::size_t wi = index_of(w);
      for (std::size_t pk = 0; pk < sigma_pool.size(); ++pk) {
        if (!detail::leq_componentwise(sigma_pool[pk], w)) continue;
        std::int64_t sub = f[wi - sigma_offset[pk]];
        if (sub == kNone) continue;
        if (f[wi] == kNone || sub + sigma_p[pk] > f[wi]) f[wi] = sub + sigma_p[pk];
      }
    }
    std::int64_t fv = f[index_of(v)];
    if (fv == kNone) return std::nullopt;  // cannot happen: R- and Sigma-decomposability agree
    return 2 * fv;
  }

  std::vector<IntVec> sigma_pool() const {
    std::vector<IntVec> out;
    for (const auto& r : pool_)
      if (in_sigma(r)) out.push_back(r);
    return out;
  }

 private:
  static constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min();

  std::size_t index_of(const IntVec& v) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < v.size(); ++i) idx += static_cast<std::size_t>(v[i]) * radix_[i];
    return idx;
  }

  Quiver q_;
  IntVec box_;
  std::vector<IntVec> pool_;
  std::vector<std::int64_t> pool_p_;
  std::vector<std::size_t> pool_offset_;
  std::vector<std::size_t> radix_;
  std::vector<std::int64_t> maxp_;
  std::vector<int> choice_;
};

inline bool in_r_lambda_plus(const Quiver& q, const Weight& lambda, const IntVec& alpha) {
  check_vertex_count(q, lambda, "in_r_lambda_plus");
  check_vertex_count(q, alpha, "in_r_lambda_plus");
  if (is_zero(alpha) || !is_nonnegative(alpha)) return false;
  if (dot(lambda, alpha) != 0) return false;
  return classify_root(q, alpha).kind != RootKind::NotRoot;
}

inline bool in_sigma(const Quiver& q, const Weight& lambda, const IntVec& alpha,
                     const SigmaOptions& opts = {}) {
  check_dim_vector(q, alpha, "in_sigma");
  if (is_zero(alpha)) return false;
  if (!in_r_lambda_plus(q, lambda, alpha)) return false;
  return LambdaRootSystem(q, lambda, alpha, opts).in_sigma(alpha);
}

struct SigmaCheck {
  bool in_r_plus = false;
  bool member = false;
  std::optional<Decomposition> violation;  // set when in_r_plus && !member
};

inline SigmaCheck check_sigma(const Quiver& q, const Weight& lambda, const IntVec& alpha,
                              const SigmaOptions& opts = {}) {
  check_dim_vector(q, alpha, "check_sigma");
  SigmaCheck out;
  if (is_zero(alpha)) return out;
  out.in_r_plus = in_r_lambda_plus(q, lambda, alpha);
  if (!out.in_r_plus) return out;
  LambdaRootSystem sys(q, lambda, alpha, opts);
  out.violation = sys.sigma_violation(alpha);
  out.member = !out.violation.has_value();
  return out;
}

inline bool is_nonempty(const Quiver& q, const Weight& lambda, const IntVec& alpha,
                        const SigmaOptions& opts = {}) {
  check_dim_vector(q, alpha, "is_nonempty");
  if (is_zero(alpha)) return true;
  return LambdaRootSystem(q, lambda, alpha, opts).decomposable(alpha);
}

// Dimension of N_Q(lambda, alpha); nullopt when the variety is empty.
inline std::optional<std::int64_t> dim_n(const Quiver& q, const Weight& lambda,
                                         const IntVec& alpha, const SigmaOptions& opts = {}) {
  check_dim_vector(q, alpha, "dim_n");
  if (is_zero(alpha)) return 0;
  LambdaRootSystem sys(q, lambda, alpha, opts);
  if (sys.in_sigma(alpha)) return 2 * tits_p(q, alpha);
  return sys.dimension(alpha);
}

}  // namespace nquiver
