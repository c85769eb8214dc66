// Quivers (directed multigraphs with loops), dimension vectors and weights,
// the quadratic form q, the symmetric bilinear form (-,-), p = 1 - q,
// doubling, and deframing.
//
// A quiver fixes a vertex order at construction; every vector indexed by
// vertices uses that order. All values are immutable after construction and
// every operation here is a pure function, so concurrent use is safe.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nquiver/rational.hpp"

namespace nquiver {

using IntVec = std::vector<std::int64_t>;  // elements of Z^I; DimVector when >= 0
using DimVector = IntVec;
using Weight = std::vector<Rational>;

struct Arrow {
  int id = 0;
  int tail = 0;
  int head = 0;
};

class Quiver {
 public:
  Quiver() = default;

  Quiver(std::vector<std::string> vertex_names,
         const std::vector<std::pair<int, int>>& arrows)
      : names_(std::move(vertex_names)) {
    if (names_.empty()) throw std::invalid_argument("quiver needs at least one vertex");
    for (int i = 0; i < size(); ++i) {
      if (!index_.emplace(names_[i], i).second)
        throw std::invalid_argument("duplicate vertex name: " + names_[i]);
    }
    loops_.assign(names_.size(), 0);
    arrows_.reserve(arrows.size());
    for (auto [t, h] : arrows) {
      if (t < 0 || t >= size() || h < 0 || h >= size())
        throw std::invalid_argument("arrow endpoint is not a declared vertex");
      arrows_.push_back(Arrow{static_cast<int>(arrows_.size()), t, h});
      if (t == h) ++loops_[t];
    }
  }

  // Vertices named "1", "2", ... in order.
  static Quiver from_edges(int num_vertices, const std::vector<std::pair<int, int>>& arrows) {
    std::vector<std::string> names;
    names.reserve(num_vertices);
    for (int i = 1; i <= num_vertices; ++i) names.push_back(std::to_string(i));
    return Quiver(std::move(names), arrows);
  }

  int size() const { return static_cast<int>(names_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name_of(int v) const { return names_.at(v); }

  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::invalid_argument("unknown vertex: " + name);
    return it->second;
  }

  int loops_at(int v) const { return loops_.at(v); }
  bool loop_free_at(int v) const { return loops_.at(v) == 0; }

  // Arrows between i and j in either direction, loops counted once.
  int edges_between(int i, int j) const {
    int c = 0;
    for (const auto& a : arrows_)
      if ((a.tail == i && a.head == j) || (i != j && a.tail == j && a.head == i)) ++c;
    return c;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Arrow> arrows_;
  std::vector<int> loops_;
  std::unordered_map<std::string, int> index_;
};

inline void check_vertex_count(const Quiver& q, const IntVec& v, const char* what) {
  if (static_cast<int>(v.size()) != q.size())
    throw std::invalid_argument(std::string(what) + ": length does not match vertex count");
}

inline void check_vertex_count(const Quiver& q, const Weight& v, const char* what) {
  if (static_cast<int>(v.size()) != q.size())
    throw std::invalid_argument(std::string(what) + ": length does not match vertex count");
}

inline void check_dim_vector(const Quiver& q, const IntVec& v, const char* what) {
  check_vertex_count(q, v, what);
  for (auto x : v)
    if (x < 0) throw std::invalid_argument(std::string(what) + ": negative entry in dimension vector");
}

// (alpha,beta) = 2 sum_i a_i b_i - sum_{arrows} (a_h b_t + a_t b_h).
inline std::int64_t symmetric_form(const Quiver& q, const IntVec& a, const IntVec& b) {
  check_vertex_count(q, a, "symmetric_form");
  check_vertex_count(q, b, "symmetric_form");
  std::int64_t s = 0;
  for (int i = 0; i < q.size(); ++i) s += 2 * a[i] * b[i];
  for (const auto& arr : q.arrows()) s -= a[arr.head] * b[arr.tail] + a[arr.tail] * b[arr.head];
  return s;
}

inline std::int64_t tits_q(const Quiver& q, const IntVec& a) {
  check_vertex_count(q, a, "tits_q");
  std::int64_t s = 0;
  for (auto x : a) s += x * x;
  for (const auto& arr : q.arrows()) s -= a[arr.head] * a[arr.tail];
  return s;
}

inline std::int64_t tits_p(const Quiver& q, const IntVec& a) {
  return 1 - tits_q(q, a);
}

inline Rational dot(const Weight& lambda, const IntVec& alpha) {
  if (lambda.size() != alpha.size())
    throw std::invalid_argument("dot: weight and dimension vector lengths differ");
  Rational s = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) s += lambda[i] * alpha[i];
  return s;
}

// The double: base arrows 0..m-1 keep their ids, arrow m+k reverses arrow k.
class DoubledQuiver {
 public:
  explicit DoubledQuiver(Quiver base) : base_(std::move(base)) {}

  const Quiver& base() const { return base_; }
  int num_arrows() const { return 2 * base_.num_arrows(); }
  bool is_reversed(int a) const { return a >= base_.num_arrows(); }
  int partner(int a) const {
    int m = base_.num_arrows();
    return a < m ? a + m : a - m;
  }
  int tail(int a) const {
    const auto& arr = base_.arrows()[a % base_.num_arrows()];
    return is_reversed(a) ? arr.head : arr.tail;
  }
  int head(int a) const {
    const auto& arr = base_.arrows()[a % base_.num_arrows()];
    return is_reversed(a) ? arr.tail : arr.head;
  }

 private:
  Quiver base_;
};

inline DoubledQuiver double_quiver(const Quiver& q) { return DoubledQuiver(q); }

// Adds a vertex "inf" with w_i arrows i -> inf; alpha gains a trailing 1.
inline std::pair<Quiver, IntVec> deframe(const Quiver& q, const IntVec& w, const IntVec& alpha) {
  check_dim_vector(q, w, "deframe weights");
  check_dim_vector(q, alpha, "deframe alpha");
  std::vector<std::string> names = q.vertex_names();
  std::string frame = "inf";
  while (std::find(names.begin(), names.end(), frame) != names.end()) frame += "'";
  names.push_back(frame);
  int inf = static_cast<int>(names.size()) - 1;
  std::vector<std::pair<int, int>> arrows;
  for (const auto& a : q.arrows()) arrows.emplace_back(a.tail, a.head);
  for (int i = 0; i < q.size(); ++i)
    for (std::int64_t k = 0; k < w[i]; ++k) arrows.emplace_back(i, inf);
  IntVec ext = alpha;
  ext.push_back(1);
  return {Quiver(std::move(names), arrows), std::move(ext)};
}

// True iff the full subgraph on the support of alpha is nonempty and
// connected in the underlying graph.
inline bool support_connected(const Quiver& q, const IntVec& alpha) {
  check_vertex_count(q, alpha, "support_connected");
  int start = -1;
  for (int i = 0; i < q.size(); ++i)
    if (alpha[i] > 0) { start = i; break; }
  if (start < 0) throw std::invalid_argument("support_connected: zero vector");
  std::vector<char> seen(q.size(), 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& a : q.arrows()) {
      int other = -1;
      if (a.tail == v) other = a.head;
      else if (a.head == v) other = a.tail;
      if (other >= 0 && alpha[other] > 0 && !seen[other]) {
        seen[other] = 1;
        stack.push_back(other);
      }
    }
  }
  for (int i = 0; i < q.size(); ++i)
    if (alpha[i] > 0 && !seen[i]) return false;
  return true;
}

inline std::int64_t vector_sum(const IntVec& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

inline std::int64_t dot_int(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot_int: lengths differ");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::int64_t gcd_of(const IntVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

inline bool is_sincere(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x > 0; });
}

inline bool is_nonnegative(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; });
}

inline bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

inline bool is_coordinate_vector(const IntVec& v) {
  int ones = 0;
  for (auto x : v) {
    if (x == 1) ++ones;
    else if (x != 0) return false;
  }
  return ones == 1;
}

}  // namespace nquiver
