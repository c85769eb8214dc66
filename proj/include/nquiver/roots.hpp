// Kac root system of a quiver, loops allowed. Classification descends by
// reflections at loop-free vertices: the walk ends at a simple root (real),
// in the fundamental region (imaginary), or leaves the nonnegative orthant
// (not a root). Vertices carrying loops admit no reflection and their
// coordinate vectors sit inside the fundamental region.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nquiver/quiver.hpp"

namespace nquiver {

enum class RootKind { Real, Imaginary, NotRoot };

struct RootClass {
  RootKind kind = RootKind::NotRoot;
  std::vector<int> witness;  // reflection word applied during the descent
  bool negated = false;      // classified -alpha (input was nonpositive)
};

inline IntVec coordinate_vector(int n, int i) {
  IntVec e(n, 0);
  e[i] = 1;
  return e;
}

inline IntVec reflect(const Quiver& q, const IntVec& v, int i) {
  check_vertex_count(q, v, "reflect");
  if (i < 0 || i >= q.size()) throw std::invalid_argument("reflect: vertex out of range");
  if (!q.loop_free_at(i)) throw std::invalid_argument("reflect: vertex carries a loop");
  std::int64_t pairing = symmetric_form(q, v, coordinate_vector(q.size(), i));
  IntVec w = v;
  w[i] -= pairing;
  return w;
}

// beta > 0, connected support, (beta, e_i) <= 0 at every loop-free vertex.
inline bool in_fundamental_region(const Quiver& q, const IntVec& v) {
  check_vertex_count(q, v, "in_fundamental_region");
  if (is_zero(v) || !is_nonnegative(v)) return false;
  for (int i = 0; i < q.size(); ++i) {
    if (!q.loop_free_at(i)) continue;
    if (symmetric_form(q, v, coordinate_vector(q.size(), i)) > 0) return false;
  }
  return support_connected(q, v);
}

inline RootClass classify_root(const Quiver& q, const IntVec& alpha) {
  check_vertex_count(q, alpha, "classify_root");
  if (is_zero(alpha)) throw std::invalid_argument("classify_root: zero vector");

  RootClass out;
  bool has_pos = std::any_of(alpha.begin(), alpha.end(), [](auto x) { return x > 0; });
  bool has_neg = std::any_of(alpha.begin(), alpha.end(), [](auto x) { return x < 0; });
  if (has_pos && has_neg) return out;  // roots are sign-coherent

  IntVec v = alpha;
  if (has_neg) {
    for (auto& x : v) x = -x;
    out.negated = true;
  }

  const int n = q.size();
  while (true) {
    if (is_coordinate_vector(v)) {
      int i = static_cast<int>(std::find(v.begin(), v.end(), 1) - v.begin());
      out.kind = q.loop_free_at(i) ? RootKind::Real : RootKind::Imaginary;
      return out;
    }
    int pick = -1;
    for (int i = 0; i < n; ++i) {
      if (!q.loop_free_at(i)) continue;
      if (symmetric_form(q, v, coordinate_vector(n, i)) > 0) { pick = i; break; }
    }
    if (pick < 0) {
      out.kind = support_connected(q, v) ? RootKind::Imaginary : RootKind::NotRoot;
      return out;
    }
    IntVec w = reflect(q, v, pick);
    if (!is_nonnegative(w)) {
      out.kind = RootKind::NotRoot;
      return out;
    }
    out.witness.push_back(pick);
    v = std::move(w);
  }
}

struct RootEntry {
  IntVec alpha;
  RootClass cls;
};

// All 0 < v <= bound (componentwise) with classify_root != NotRoot,
// in ascending lexicographic order.
inline std::vector<RootEntry> positive_roots_up_to(const Quiver& q, const IntVec& bound) {
  check_dim_vector(q, bound, "positive_roots_up_to");
  std::vector<RootEntry> out;
  IntVec v(q.size(), 0);
  const int n = q.size();
  while (true) {
    int k = n - 1;
    while (k >= 0 && v[k] == bound[k]) { v[k] = 0; --k; }
    if (k < 0) break;
    ++v[k];
    RootClass c = classify_root(q, v);
    if (c.kind != RootKind::NotRoot) out.push_back(RootEntry{v, std::move(c)});
  }
  return out;
}

inline std::vector<RootEntry> r_lambda_plus(const Quiver& q, const Weight& lambda,
                                            const IntVec& bound) {
  check_vertex_count(q, lambda, "r_lambda_plus");
  std::vector<RootEntry> out;
  for (auto& e : positive_roots_up_to(q, bound))
    if (dot(lambda, e.alpha) == 0) out.push_back(std::move(e));
  return out;
}

}  // namespace nquiver
