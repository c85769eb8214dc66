// Representation-type stratification, etale-local quiver data, the dimension
// bounds for strata and top-types, nearly Kleinian detection, the normality
// dichotomy, and the consolidated geometry report.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nquiver/linalg.hpp"
#include "nquiver/sigma.hpp"

namespace nquiver {

struct RepTypeEntry {
  std::int64_t mult = 0;
  IntVec beta;
  friend bool operator==(const RepTypeEntry&, const RepTypeEntry&) = default;
};

// A stratum label (k_1, beta^(1); ...; k_r, beta^(r)). Entries are kept in
// canonical order: beta descending lexicographically, multiplicity descending
// among equal betas.
struct RepType {
  std::vector<RepTypeEntry> entries;
  Weight lambda;

  IntVec total() const {
    if (entries.empty()) return {};
    IntVec sum(entries.front().beta.size(), 0);
    for (const auto& e : entries)
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += e.mult * e.beta[i];
    return sum;
  }

  void canonicalize() {
    std::sort(entries.begin(), entries.end(), [](const RepTypeEntry& a, const RepTypeEntry& b) {
      if (a.beta != b.beta) return a.beta > b.beta;
      return a.mult > b.mult;
    });
  }

  friend bool operator==(const RepType& a, const RepType& b) { return a.entries == b.entries; }
  friend bool operator<(const RepType& a, const RepType& b) {
    return std::lexicographical_compare(
        a.entries.begin(), a.entries.end(), b.entries.begin(), b.entries.end(),
        [](const RepTypeEntry& x, const RepTypeEntry& y) {
          if (x.beta != y.beta) return x.beta > y.beta;
          return x.mult > y.mult;
        });
  }
};

namespace detail {

inline std::vector<std::vector<std::int64_t>> partitions_of(std::int64_t m) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t rest, std::int64_t maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

}  // namespace detail

// All realizable representation types for (Q, lambda, alpha), sorted. A type
// may repeat a beta across entries only when p(beta) >= 1: a dimension vector
// with p = 0 supports a unique simple, so its copies all land in one entry.
inline std::vector<RepType> enumerate_rep_types(const Quiver& q, const Weight& lambda,
                                                const IntVec& alpha,
                                                const SigmaOptions& opts = {}) {
  check_dim_vector(q, alpha, "enumerate_rep_types");
  check_vertex_count(q, lambda, "enumerate_rep_types");
  std::vector<RepType> out;
  if (is_zero(alpha)) {
    out.push_back(RepType{{}, lambda});
    return out;
  }
  LambdaRootSystem sys(q, lambda, alpha, opts);
  std::vector<IntVec> sigma_pool = sys.sigma_pool();
  std::sort(sigma_pool.begin(), sigma_pool.end(), std::greater<IntVec>());

  for_each_decomposition(alpha, sigma_pool, [&](const Decomposition& parts) {
    // group equal parts; the stream emits them adjacently
    std::vector<std::pair<IntVec, std::int64_t>> groups;
    for (const auto& part : parts) {
      if (!groups.empty() && groups.back().first == part) ++groups.back().second;
      else groups.emplace_back(part, 1);
    }
    // per group: p = 0 forces a single entry, otherwise any partition of the
    // multiplicity splits the copies among pairwise non-isomorphic simples
    std::vector<std::vector<std::vector<std::int64_t>>> options;
    for (const auto& [beta, m] : groups) {
      if (tits_p(q, beta) == 0) options.push_back({{m}});
      else options.push_back(detail::partitions_of(m));
    }
    std::vector<std::size_t> pick(groups.size(), 0);
    while (true) {
      RepType t;
      t.lambda = lambda;
      for (std::size_t g = 0; g < groups.size(); ++g)
        for (std::int64_t k : options[g][pick[g]])
          t.entries.push_back(RepTypeEntry{k, groups[g].first});
      t.canonicalize();
      out.push_back(std::move(t));
      std::size_t g = 0;
      while (g < groups.size() && ++pick[g] == options[g].size()) pick[g++] = 0;
      if (g == groups.size()) break;
    }
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

struct LocalData {
  std::vector<std::vector<std::int64_t>> doubled_counts;  // L: loops / arrow counts in Q-bar'
  IntVec kappa;
  Quiver oriented;  // one chosen orientation Q' with double Q-bar'
};

// Etale-local quiver at a point of the given representation type: L_ii =
// 2 p(beta^(i)) loops, L_ij = -(beta^(i), beta^(j)) arrows between distinct
// vertices of the doubled local quiver.
inline LocalData local_quiver(const Quiver& q, const RepType& t) {
  const int r = static_cast<int>(t.entries.size());
  LocalData out;
  out.doubled_counts.assign(r, std::vector<std::int64_t>(r, 0));
  for (int i = 0; i < r; ++i) {
    out.kappa.push_back(t.entries[i].mult);
    out.doubled_counts[i][i] = 2 * tits_p(q, t.entries[i].beta);
    for (int j = i + 1; j < r; ++j) {
      std::int64_t c = -symmetric_form(q, t.entries[i].beta, t.entries[j].beta);
      if (c < 0)
        throw std::invalid_argument("local_quiver: representation type pairs two dimension "
                                    "vectors with positive symmetric form");
      out.doubled_counts[i][j] = out.doubled_counts[j][i] = c;
    }
  }
  std::vector<std::pair<int, int>> arrows;
  for (int i = 0; i < r; ++i)
    for (std::int64_t k = 0; k < out.doubled_counts[i][i] / 2; ++k) arrows.emplace_back(i, i);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (std::int64_t k = 0; k < out.doubled_counts[i][j]; ++k) arrows.emplace_back(i, j);
  out.oriented = Quiver::from_edges(std::max(r, 1), r == 0 ? std::vector<std::pair<int, int>>{} : arrows);
  return out;
}

// alpha.alpha - 1 + p(alpha) + sum_t p(beta^(t)), valid for lambda = 0.
inline std::int64_t stratum_fiber_bound(const Quiver& q, const RepType& t) {
  for (const auto& l : t.lambda)
    if (l != 0) throw std::invalid_argument("stratum_fiber_bound: requires lambda = 0");
  IntVec alpha = t.total();
  std::int64_t bound = dot_int(alpha, alpha) - 1 + tits_p(q, alpha);
  for (const auto& e : t.entries) bound += tits_p(q, e.beta);
  return bound;
}

struct TopType {
  // (simple index into betas, multiplicity) along the filtration
  std::vector<std::pair<int, std::int64_t>> seq;
  std::vector<IntVec> betas;
};

// alpha.alpha - 1 + p(alpha) + sum m_i z_i - sum m_i^2 p(beta^(j_i)), where
// z_i is the previous multiplicity of the same simple (0 if none, or if the
// simple has p = 0).
inline std::int64_t top_type_bound(const Quiver& q, const TopType& tt) {
  if (tt.seq.empty()) throw std::invalid_argument("top_type_bound: empty top-type");
  IntVec alpha(tt.betas.at(0).size(), 0);
  for (const auto& [j, m] : tt.seq) {
    if (m < 1) throw std::invalid_argument("top_type_bound: multiplicities must be positive");
    for (std::size_t v = 0; v < alpha.size(); ++v) alpha[v] += m * tt.betas.at(j)[v];
  }
  std::int64_t bound = dot_int(alpha, alpha) - 1 + tits_p(q, alpha);
  for (std::size_t i = 0; i < tt.seq.size(); ++i) {
    auto [j, m] = tt.seq[i];
    std::int64_t pb = tits_p(q, tt.betas.at(j));
    std::int64_t z = 0;
    if (pb != 0) {
      for (std::size_t k = 0; k < i; ++k)
        if (tt.seq[k].first == j) z = tt.seq[k].second;
    }
    bound += m * z - m * m * pb;
  }
  return bound;
}

// The representation type a top-type semisimplifies to.
inline RepType induced_rep_type(const TopType& tt, const Weight& lambda) {
  std::map<int, std::int64_t> mult;
  for (const auto& [j, m] : tt.seq) mult[j] += m;
  RepType t;
  t.lambda = lambda;
  for (const auto& [j, k] : mult) t.entries.push_back(RepTypeEntry{k, tt.betas.at(j)});
  t.canonicalize();
  return t;
}

enum class NearlyKleinian { No, Case1, Case2 };

struct NearlyKleinianResult {
  NearlyKleinian kind = NearlyKleinian::No;
  IntVec delta;                 // Case2: minimal positive imaginary root
  std::vector<int> extending;   // Case2: vertices with delta_i = 1
};

struct DynkinCheck {
  bool extended_dynkin = false;
  IntVec delta;
};

// A connected loop-free quiver is extended Dynkin iff its symmetric form is
// positive semidefinite with one-dimensional radical; delta is the primitive
// positive integral radical generator.
inline DynkinCheck extended_dynkin_delta(const Quiver& q) {
  DynkinCheck out;
  for (int i = 0; i < q.size(); ++i)
    if (!q.loop_free_at(i)) return out;
  IntVec ones(q.size(), 1);
  if (!support_connected(q, ones)) return out;
  RatMat form(q.size(), q.size());
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j)
      form(i, j) = symmetric_form(q, coordinate_vector(q.size(), i), coordinate_vector(q.size(), j));
  Inertia in = symmetric_inertia(form);
  if (in.negative != 0 || in.zero != 1) return out;
  RatMat ker = kernel_basis(form);
  // scale to a primitive integral vector; connectedness makes it sincere
  BigInt lcm = 1;
  for (int i = 0; i < ker.rows(); ++i) {
    BigInt den = denominator(ker(i, 0));
    lcm = lcm / gcd(lcm, den) * den;
  }
  IntVec delta(q.size());
  BigInt g = 0;
  std::vector<BigInt> scaled(q.size());
  for (int i = 0; i < ker.rows(); ++i) {
    scaled[i] = numerator(ker(i, 0) * Rational(lcm));
    g = gcd(g, abs(scaled[i]));
  }
  if (g == 0) return out;
  bool neg = false, pos = false;
  for (int i = 0; i < q.size(); ++i) {
    BigInt e = scaled[i] / g;
    if (e < 0) neg = true;
    if (e > 0) pos = true;
    delta[i] = static_cast<std::int64_t>(e);
  }
  if (neg && pos) return out;
  if (neg)
    for (auto& d : delta) d = -d;
  if (!is_sincere(delta)) return out;
  out.extended_dynkin = true;
  out.delta = std::move(delta);
  return out;
}

inline NearlyKleinianResult is_nearly_kleinian(const Quiver& q, const IntVec& alpha) {
  check_dim_vector(q, alpha, "is_nearly_kleinian");
  if (!is_sincere(alpha)) throw std::invalid_argument("is_nearly_kleinian: alpha must be sincere");
  NearlyKleinianResult out;
  if (q.size() == 1 && alpha[0] == 1) {
    out.kind = NearlyKleinian::Case1;
    return out;
  }
  std::vector<std::pair<int, int>> loopless;
  for (const auto& a : q.arrows())
    if (a.tail != a.head) loopless.emplace_back(a.tail, a.head);
  Quiver stripped(q.vertex_names(), loopless);
  DynkinCheck dc = extended_dynkin_delta(stripped);
  if (!dc.extended_dynkin || alpha != dc.delta) return out;
  for (int i = 0; i < q.size(); ++i)
    if (q.loops_at(i) > 0 && dc.delta[i] != 1) return out;
  out.kind = NearlyKleinian::Case2;
  out.delta = dc.delta;
  for (int i = 0; i < q.size(); ++i)
    if (dc.delta[i] == 1) out.extending.push_back(i);
  return out;
}

enum class Dichotomy { CaseI, CaseII, Both, Violation };

// (i): sum k_t^2 < sum alpha_i^2.  (ii): p(alpha) - sum p(beta^(t)) >= 2.
inline Dichotomy normality_dichotomy(const Quiver& q, const IntVec& alpha, const RepType& t) {
  check_dim_vector(q, alpha, "normality_dichotomy");
  for (const auto& l : t.lambda)
    if (l != 0) throw std::invalid_argument("normality_dichotomy: requires lambda = 0");
  std::int64_t ksq = 0, psum = 0;
  for (const auto& e : t.entries) {
    ksq += e.mult * e.mult;
    psum += tits_p(q, e.beta);
  }
  bool first = ksq < dot_int(alpha, alpha);
  bool second = tits_p(q, alpha) - psum >= 2;
  if (first && second) return Dichotomy::Both;
  if (first) return Dichotomy::CaseI;
  if (second) return Dichotomy::CaseII;
  return Dichotomy::Violation;
}

enum class Smoothness { SmoothPoint, Smooth, Singular, Undetermined };
enum class TriState { Yes, Undetermined, NotApplicable };

struct GeometryReport {
  bool nonempty = false;
  bool irreducible_or_empty = true;  // always: the variety is irreducible or empty
  std::optional<std::int64_t> dimension;
  bool in_r_plus = false;
  bool in_sigma = false;
  TriState normal = TriState::NotApplicable;
  TriState rational_singularities = TriState::NotApplicable;
  Smoothness smoothness = Smoothness::Undetermined;
};

// Consolidated verdicts for N_Q(lambda, alpha). Normality is reported as a
// fact for every nonempty case. The variety only depends on the support
// subquiver, so the smoothness criteria are evaluated there.
inline GeometryReport geometry_report(const Quiver& q, const Weight& lambda, const IntVec& alpha,
                                      const SigmaOptions& opts = {}) {
  check_dim_vector(q, alpha, "geometry_report");
  check_vertex_count(q, lambda, "geometry_report");
  GeometryReport rep;
  if (is_zero(alpha)) {
    rep.nonempty = true;
    rep.dimension = 0;
    rep.normal = TriState::Yes;
    rep.smoothness = Smoothness::SmoothPoint;
    return rep;
  }
  LambdaRootSystem sys(q, lambda, alpha, opts);
  rep.in_r_plus = in_r_lambda_plus(q, lambda, alpha);
  rep.in_sigma = rep.in_r_plus && sys.in_sigma(alpha);
  rep.nonempty = sys.decomposable(alpha);
  if (!rep.nonempty) return rep;
  rep.dimension = rep.in_sigma ? 2 * tits_p(q, alpha) : sys.dimension(alpha);
  rep.normal = TriState::Yes;
  rep.rational_singularities =
      (rep.in_sigma && gcd_of(alpha) == 1) ? TriState::Yes : TriState::Undetermined;

  // restrict to the support subquiver for the smoothness criteria
  std::vector<int> keep;
  for (int i = 0; i < q.size(); ++i)
    if (alpha[i] > 0) keep.push_back(i);
  std::vector<int> to_sub(q.size(), -1);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    to_sub[keep[k]] = static_cast<int>(k);
    names.push_back(q.name_of(keep[k]));
  }
  std::vector<std::pair<int, int>> arrows;
  for (const auto& a : q.arrows())
    if (to_sub[a.tail] >= 0 && to_sub[a.head] >= 0)
      arrows.emplace_back(to_sub[a.tail], to_sub[a.head]);
  Quiver sub(names, arrows);
  IntVec sub_alpha;
  Weight sub_lambda;
  for (int i : keep) {
    sub_alpha.push_back(alpha[i]);
    sub_lambda.push_back(lambda[i]);
  }

  bool lambda_zero = std::all_of(sub_lambda.begin(), sub_lambda.end(),
                                 [](const Rational& x) { return x == 0; });
  bool loop_free = true;
  for (int i = 0; i < sub.size(); ++i)
    if (!sub.loop_free_at(i)) loop_free = false;
  bool indivisible = gcd_of(sub_alpha) == 1;

  if (rep.in_sigma && tits_p(q, alpha) == 0) {
    rep.smoothness = Smoothness::SmoothPoint;  // irreducible of dimension zero
  } else if (lambda_zero && rep.in_sigma) {
    NearlyKleinianResult nk = is_nearly_kleinian(sub, sub_alpha);
    if (nk.kind == NearlyKleinian::Case1) {
      rep.smoothness = Smoothness::Smooth;  // affine space
    } else if (nk.kind == NearlyKleinian::Case2) {
      rep.smoothness = Smoothness::Singular;  // Kleinian singularity x affine space
    } else if (loop_free && indivisible) {
      rep.smoothness = is_coordinate_vector(sub_alpha) ? Smoothness::SmoothPoint
                                                       : Smoothness::Singular;
    }
  }
  return rep;
}

}  // namespace nquiver
