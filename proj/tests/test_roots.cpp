#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nquiver/roots.hpp"
#include "oracles.hpp"

using namespace nquiver;

namespace {

Quiver kronecker() { return Quiver::from_edges(2, {{0, 1}, {0, 1}}); }
Quiver jordan() { return Quiver::from_edges(1, {{0, 0}}); }

}  // namespace

TEST_CASE("reflection examples") {
  // Kronecker, (1,0) reflected at vertex 2: (alpha, e2) = -2
  CHECK(reflect(kronecker(), {1, 0}, 1) == IntVec{1, 2});
  // e_i at loop-free i goes to -e_i
  Quiver a2 = Quiver::from_edges(2, {{0, 1}});
  CHECK(reflect(a2, {1, 0}, 0) == IntVec{-1, 0});
  CHECK_THROWS_AS(reflect(jordan(), {1}, 0), std::invalid_argument);
}

TEST_CASE("reflections are involutive and preserve q") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> nv(1, 4);
    int n = nv(rng);
    std::uniform_int_distribution<int> na(0, 5), vx(0, n - 1), entry(-3, 3);
    std::vector<std::pair<int, int>> arrows;
    int m = na(rng);
    for (int a = 0; a < m; ++a) arrows.emplace_back(vx(rng), vx(rng));
    Quiver q = Quiver::from_edges(n, arrows);
    IntVec v(n);
    for (auto& x : v) x = entry(rng);
    for (int i = 0; i < n; ++i) {
      if (!q.loop_free_at(i)) continue;
      IntVec w = reflect(q, v, i);
      CHECK(reflect(q, w, i) == v);
      CHECK(tits_q(q, w) == tits_q(q, v));
    }
  }
}

TEST_CASE("classification on the Kronecker quiver") {
  Quiver q = kronecker();
  for (std::int64_t n = 0; n <= 3; ++n) {
    if (n + 1 <= 4) {
      CHECK(classify_root(q, {n, n + 1}).kind == RootKind::Real);
      CHECK(classify_root(q, {n + 1, n}).kind == RootKind::Real);
    }
    if (n >= 1) CHECK(classify_root(q, {n, n}).kind == RootKind::Imaginary);
  }
  CHECK(classify_root(q, {1, 3}).kind == RootKind::NotRoot);
  CHECK_THROWS_AS(classify_root(q, {0, 0}), std::invalid_argument);
}

TEST_CASE("loop-free simples are real, Jordan powers are imaginary") {
  Quiver a2 = Quiver::from_edges(2, {{0, 1}});
  CHECK(classify_root(a2, {1, 0}).kind == RootKind::Real);
  CHECK(classify_root(a2, {0, -1}).kind == RootKind::Real);
  for (std::int64_t n = 1; n <= 4; ++n)
    CHECK(classify_root(jordan(), {n}).kind == RootKind::Imaginary);
}

TEST_CASE("negative vectors classify like their negation, mixed signs fail") {
  Quiver q = kronecker();
  auto c = classify_root(q, {-1, -1});
  CHECK(c.kind == RootKind::Imaginary);
  CHECK(c.negated);
  CHECK(classify_root(q, {1, -1}).kind == RootKind::NotRoot);
}

TEST_CASE("real roots have p = 0, fundamental region has p >= 1") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> nv(1, 4);
    int n = nv(rng);
    std::uniform_int_distribution<int> na(0, 5), vx(0, n - 1), entry(0, 3);
    std::vector<std::pair<int, int>> arrows;
    int m = na(rng);
    for (int a = 0; a < m; ++a) arrows.emplace_back(vx(rng), vx(rng));
    Quiver q = Quiver::from_edges(n, arrows);
    IntVec v(n);
    for (auto& x : v) x = entry(rng);
    if (is_zero(v)) continue;
    auto cls = classify_root(q, v);
    if (cls.kind == RootKind::Real) CHECK(tits_p(q, v) == 0);
    if (in_fundamental_region(q, v)) {
      CHECK(tits_p(q, v) >= 1);
      CHECK(cls.kind == RootKind::Imaginary);
    }
  }
}

TEST_CASE("box enumeration on the Kronecker quiver") {
  auto roots = positive_roots_up_to(kronecker(), {2, 2});
  std::vector<IntVec> expect = {{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}};
  REQUIRE(roots.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(roots[i].alpha == expect[i]);
  CHECK(positive_roots_up_to(kronecker(), {0, 0}).empty());
  auto a1 = positive_roots_up_to(Quiver::from_edges(1, {}), {3});
  REQUIRE(a1.size() == 1);
  CHECK(a1[0].alpha == IntVec{1});
}

TEST_CASE("r_lambda_plus filters by the weight") {
  Quiver q = kronecker();
  Weight zero{Rational(0), Rational(0)};
  CHECK(r_lambda_plus(q, zero, {2, 2}).size() == positive_roots_up_to(q, {2, 2}).size());
  auto balanced = r_lambda_plus(q, {Rational(1), Rational(-1)}, {2, 2});
  REQUIRE(balanced.size() == 2);
  CHECK(balanced[0].alpha == IntVec{1, 1});
  CHECK(balanced[1].alpha == IntVec{2, 2});
  CHECK(r_lambda_plus(q, {Rational(1), Rational(1)}, {3, 3}).empty());
}

TEST_CASE("extended Dynkin deltas are imaginary along with their multiples") {
  // A~1 = Kronecker with delta = (1,1); A~2 = oriented triangle, delta = (1,1,1)
  Quiver tri = Quiver::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  for (std::int64_t n = 1; n <= 3; ++n) {
    CHECK(classify_root(kronecker(), {n, n}).kind == RootKind::Imaginary);
    CHECK(classify_root(tri, {n, n, n}).kind == RootKind::Imaginary);
  }
}

TEST_CASE("the witness word replays the descent") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    Quiver q = test_oracles::random_quiver(rng, 4, 5);
    IntVec bound(q.size(), 3);
    for (const auto& entry : positive_roots_up_to(q, bound)) {
      IntVec v = entry.alpha;
      for (int i : entry.cls.witness) v = reflect(q, v, i);
      if (entry.cls.kind == RootKind::Real) {
        CHECK(is_coordinate_vector(v));
        int i = static_cast<int>(std::find(v.begin(), v.end(), 1) - v.begin());
        CHECK(q.loop_free_at(i));
      } else {
        CHECK(in_fundamental_region(q, v));
      }
      CHECK(tits_q(q, v) == tits_q(q, entry.alpha));
    }
  }
}

TEST_CASE("classification agrees with the reflection-closure oracle") {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<int> nv(1, 4), na(0, 5);
  for (int trial = 0; trial < 60; ++trial) {
    int n = nv(rng);
    std::uniform_int_distribution<int> vx(0, n - 1);
    std::vector<std::pair<int, int>> arrows;
    int m = na(rng);
    for (int a = 0; a < m; ++a) arrows.emplace_back(vx(rng), vx(rng));
    Quiver q = Quiver::from_edges(n, arrows);
    IntVec bound(n, 3);
    auto oracle = test_oracles::reflection_closure_oracle(q, bound);
    for (const auto& entry : positive_roots_up_to(q, bound)) {
      if (entry.cls.kind == RootKind::Real) CHECK(oracle.real.count(entry.alpha) == 1);
      else CHECK(oracle.imaginary.count(entry.alpha) == 1);
    }
    std::size_t found = positive_roots_up_to(q, bound).size();
    CHECK(found == oracle.real.size() + oracle.imaginary.size());
  }
}
