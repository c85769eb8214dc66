// Conjugacy classes of matrices and their closures as quiver data: chain
// ranks, orbit dimension, the chain encoding of a single class, the star
// encoding of a zero-sum tuple of classes, and leg attachment for general
// coadjoint orbits.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "nquiver/quiver.hpp"

namespace nquiver {

struct ClassEntry {
  Rational eigenvalue;
  std::vector<std::int64_t> partition;  // Jordan block sizes, nonincreasing
};

struct ConjugacyClass {
  std::vector<ClassEntry> entries;

  std::int64_t n() const {
    std::int64_t total = 0;
    for (const auto& e : entries)
      for (auto b : e.partition) total += b;
    return total;
  }

  void validate() const {
    if (entries.empty()) throw std::invalid_argument("conjugacy class: no eigenvalues");
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& e = entries[i];
      if (e.partition.empty())
        throw std::invalid_argument("conjugacy class: empty partition");
      for (std::size_t k = 0; k < e.partition.size(); ++k) {
        if (e.partition[k] <= 0)
          throw std::invalid_argument("conjugacy class: block sizes must be positive");
        if (k && e.partition[k] > e.partition[k - 1])
          throw std::invalid_argument("conjugacy class: partition must be nonincreasing");
      }
      for (std::size_t j = i + 1; j < entries.size(); ++j)
        if (entries[j].eigenvalue == e.eigenvalue)
          throw std::invalid_argument("conjugacy class: repeated eigenvalue");
    }
  }

  Rational trace() const {
    Rational t = 0;
    for (const auto& e : entries) {
      std::int64_t mult = 0;
      for (auto b : e.partition) mult += b;
      t += e.eigenvalue * mult;
    }
    return t;
  }
};

struct ChainData {
  int t = 0;
  std::vector<Rational> xi;  // annihilating sequence, eigenvalues grouped
  IntVec ranks;              // n_1, ..., n_t with n_t = n
  IntVec jumps;              // d_i = n_i - n_{i-1}
};

// xi repeats each eigenvalue maxblock times (groups in input order); the rank
// of prod_{j>i} (M - xi_j) counts, per Jordan block, the dimensions not yet
// annihilated: n_i = sum_blocks max(0, size - maxblock + #{j <= i : xi_j = eig}).
inline ChainData chain_data(const ConjugacyClass& c) {
  c.validate();
  ChainData out;
  std::vector<std::int64_t> maxblock;
  for (const auto& e : c.entries) {
    std::int64_t mb = *std::max_element(e.partition.begin(), e.partition.end());
    maxblock.push_back(mb);
    for (std::int64_t k = 0; k < mb; ++k) out.xi.push_back(e.eigenvalue);
  }
  out.t = static_cast<int>(out.xi.size());
  out.ranks.resize(out.t);
  for (int i = 1; i <= out.t; ++i) {
    std::int64_t rank = 0;
    // count of xi_1..xi_i equal to each eigenvalue
    std::int64_t consumed = i;
    for (std::size_t e = 0; e < c.entries.size(); ++e) {
      std::int64_t ce = std::min<std::int64_t>(std::max<std::int64_t>(consumed, 0), maxblock[e]);
      consumed -= maxblock[e];
      for (auto b : c.entries[e].partition) rank += std::max<std::int64_t>(0, b - maxblock[e] + ce);
    }
    out.ranks[i - 1] = rank;
  }
  out.jumps.resize(out.t);
  for (int i = 0; i < out.t; ++i) out.jumps[i] = out.ranks[i] - (i ? out.ranks[i - 1] : 0);
  return out;
}

// dim C = n^2 - sum d_i^2.
inline std::int64_t class_dim(const ConjugacyClass& c) {
  ChainData cd = chain_data(c);
  std::int64_t d = c.n() * c.n();
  for (auto j : cd.jumps) d -= j * j;
  return d;
}

struct QuiverSetting {
  Quiver quiver;
  Weight lambda;
  IntVec alpha;
};

// Chain on t vertices, single arrows except n parallel arrows into the
// framing vertex; alpha = (n_1, ..., n_{t-1}, 1); lambda lists consecutive
// eigenvalue differences with the framing weight fixed by dot(lambda,alpha)=0.
inline QuiverSetting class_to_quiver(const ConjugacyClass& c) {
  ChainData cd = chain_data(c);
  QuiverSetting out;
  if (cd.t == 1) {
    out.quiver = Quiver::from_edges(1, {});
    out.alpha = {1};
    out.lambda = {Rational(0)};
    return out;
  }
  std::vector<std::pair<int, int>> arrows;
  for (int i = 0; i + 2 < cd.t; ++i) arrows.emplace_back(i, i + 1);
  for (std::int64_t k = 0; k < c.n(); ++k) arrows.emplace_back(cd.t - 2, cd.t - 1);
  out.quiver = Quiver::from_edges(cd.t, arrows);
  out.alpha.assign(cd.ranks.begin(), cd.ranks.end() - 1);
  out.alpha.push_back(1);
  Rational acc = 0;
  for (int i = 0; i + 1 < cd.t; ++i) {
    Rational diff = cd.xi[i + 1] - cd.xi[i];
    out.lambda.push_back(diff);
    acc += diff * out.alpha[i];
  }
  out.lambda.push_back(-acc);
  if (2 * tits_p(out.quiver, out.alpha) != class_dim(c))
    throw std::logic_error("class_to_quiver: dimension identity failed");
  return out;
}

struct StarResult {
  QuiverSetting setting;
  Rational trace_sum;  // zero-sum tuples are the nonempty case
  bool traceless = false;
};

// Star quiver for { (M_i) in prod closure(C_i) : sum M_i = 0 } // GL(n):
// central vertex of dimension n, one Kraft-Procesi chain per class as an arm
// oriented toward the centre. Arm weights are consecutive eigenvalue
// differences; the central weight is -sum_i xi_{i,t_i}, the value that makes
// the central moment-map equation read sum M_i = 0. By the trace identity
// dot(lambda, alpha) = sum_i tr(C_i), so the weight is orthogonal to alpha
// exactly when the trace condition holds, and otherwise every root misses
// lambda and the variety is empty.
inline StarResult classes_to_star(const std::vector<ConjugacyClass>& classes) {
  if (classes.empty()) throw std::invalid_argument("classes_to_star: no classes");
  std::int64_t n = classes.front().n();
  for (const auto& c : classes) {
    c.validate();
    if (c.n() != n) throw std::invalid_argument("classes_to_star: classes have different sizes");
  }
  StarResult out;
  for (const auto& c : classes) out.trace_sum += c.trace();
  out.traceless = out.trace_sum == 0;

  std::vector<std::string> names{"0"};
  IntVec alpha{n};
  Weight lambda{Rational(0)};
  std::vector<std::pair<int, int>> arrows;
  for (std::size_t a = 0; a < classes.size(); ++a) {
    ChainData cd = chain_data(classes[a]);
    lambda[0] -= cd.xi.back();
    int first = static_cast<int>(names.size());
    for (int j = 1; j < cd.t; ++j) {
      names.push_back(std::to_string(a + 1) + "." + std::to_string(j));
      alpha.push_back(cd.ranks[j - 1]);
      lambda.push_back(cd.xi[j] - cd.xi[j - 1]);
    }
    for (int j = 0; j + 1 < cd.t - 1; ++j) arrows.emplace_back(first + j, first + j + 1);
    if (cd.t > 1) arrows.emplace_back(first + cd.t - 2, 0);
  }
  out.setting = QuiverSetting{Quiver(std::move(names), arrows), std::move(lambda), std::move(alpha)};
  return out;
}

// Realizes { x : mu(x)_i = M_i, M_i in closure(C_i) } // GL(alpha) as an
// ordinary reduction: each vertex grows a chain oriented toward it, leg
// weights are the negated consecutive differences, and the anchor vertex
// keeps the last element of the annihilating sequence as its weight.
inline QuiverSetting attach_legs(const Quiver& q, const IntVec& alpha,
                                 const std::vector<ConjugacyClass>& classes) {
  check_dim_vector(q, alpha, "attach_legs");
  if (static_cast<int>(classes.size()) != q.size())
    throw std::invalid_argument("attach_legs: one class per vertex required");
  for (int i = 0; i < q.size(); ++i) {
    classes[i].validate();
    if (classes[i].n() != alpha[i])
      throw std::invalid_argument("attach_legs: class size differs from alpha at vertex " +
                                  q.name_of(i));
  }
  std::vector<std::string> names = q.vertex_names();
  std::vector<std::pair<int, int>> arrows;
  for (const auto& a : q.arrows()) arrows.emplace_back(a.tail, a.head);
  IntVec out_alpha = alpha;
  Weight out_lambda(q.size(), Rational(0));
  for (int i = 0; i < q.size(); ++i) {
    ChainData cd = chain_data(classes[i]);
    out_lambda[i] = cd.xi.back();
    int first = static_cast<int>(names.size());
    for (int j = 1; j < cd.t; ++j) {
      names.push_back(q.name_of(i) + "." + std::to_string(j));
      out_alpha.push_back(cd.ranks[j - 1]);
      out_lambda.push_back(cd.xi[j - 1] - cd.xi[j]);
    }
    for (int j = 0; j + 1 < cd.t - 1; ++j) arrows.emplace_back(first + j, first + j + 1);
    if (cd.t > 1) arrows.emplace_back(first + cd.t - 2, i);
  }
  return QuiverSetting{Quiver(std::move(names), arrows), std::move(out_lambda),
                       std::move(out_alpha)};
}

}  // namespace nquiver
