#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nquiver/quiver.hpp"

using namespace nquiver;

namespace {

Quiver kronecker() { return Quiver::from_edges(2, {{0, 1}, {0, 1}}); }
Quiver jordan() { return Quiver::from_edges(1, {{0, 0}}); }

Quiver random_quiver(std::mt19937_64& rng, int max_vertices, int max_arrows) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  int n = nv(rng);
  std::uniform_int_distribution<int> na(0, max_arrows);
  std::uniform_int_distribution<int> v(0, n - 1);
  std::vector<std::pair<int, int>> arrows;
  int m = na(rng);
  for (int a = 0; a < m; ++a) arrows.emplace_back(v(rng), v(rng));
  return Quiver::from_edges(n, arrows);
}

IntVec random_vec(std::mt19937_64& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntVec v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("symmetric form on stated examples") {
  // Kronecker, alpha = beta = (1,1): 2+2 - (1+1) - (1+1) = 0
  CHECK(symmetric_form(kronecker(), {1, 1}, {1, 1}) == 0);
  // any Q, alpha = 0
  CHECK(symmetric_form(kronecker(), {0, 0}, {3, 5}) == 0);
  // one loop vertex: (e1, e1) = 2 - 2 = 0
  CHECK(symmetric_form(jordan(), {1}, {1}) == 0);
  CHECK_THROWS_AS(symmetric_form(kronecker(), {1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("q and p on stated examples") {
  for (std::int64_t n = 1; n <= 5; ++n) {
    CHECK(tits_q(jordan(), {n}) == 0);
    CHECK(tits_p(jordan(), {n}) == 1);
  }
  Quiver a1 = Quiver::from_edges(1, {});
  CHECK(tits_q(a1, {1}) == 1);
  CHECK(tits_p(a1, {1}) == 0);
}

TEST_CASE("q on the deframed chain matches the telescoping formula") {
  // chain 1 -> 2 -> ... -> (t-1) with w = (0,...,0,n)
  const std::int64_t n = 4;
  std::vector<IntVec> alphas = {{1, 2, 3}, {2, 2, 4}, {1, 1, 1}};
  for (const auto& a : alphas) {
    int t1 = static_cast<int>(a.size());
    std::vector<std::pair<int, int>> chain;
    for (int i = 0; i + 1 < t1; ++i) chain.emplace_back(i, i + 1);
    Quiver q = Quiver::from_edges(t1, chain);
    IntVec w(t1, 0);
    w.back() = n;
    auto [qd, ext] = deframe(q, w, a);
    REQUIRE(qd.size() == t1 + 1);
    // p(alpha) = sum n_i n_{i+1} - n_i^2 with n_t = n
    std::int64_t expect = 0;
    for (int i = 0; i < t1; ++i) {
      std::int64_t next = (i + 1 < t1) ? a[i + 1] : n;
      expect += a[i] * next - a[i] * a[i];
    }
    CHECK(tits_p(qd, ext) == expect);
  }
}

TEST_CASE("double quiver structure") {
  DoubledQuiver d(kronecker());
  CHECK(d.num_arrows() == 4);
  CHECK(d.partner(0) == 2);
  CHECK(d.partner(3) == 1);
  CHECK(d.head(0) == 1);
  CHECK(d.head(2) == 0);
  CHECK(d.tail(2) == 1);

  DoubledQuiver dj(jordan());
  CHECK(dj.num_arrows() == 2);
  CHECK(dj.head(1) == 0);
  CHECK(dj.tail(1) == 0);
}

TEST_CASE("deframe trivial cases") {
  Quiver q = Quiver::from_edges(1, {});
  auto [q2, a2] = deframe(q, {1}, {1});
  CHECK(q2.size() == 2);
  CHECK(q2.num_arrows() == 1);  // A_2
  CHECK(a2 == IntVec{1, 1});

  auto [q3, a3] = deframe(kronecker(), {0, 0}, {1, 1});
  CHECK(q3.size() == 3);
  CHECK(q3.num_arrows() == kronecker().num_arrows());
  CHECK(a3 == IntVec{1, 1, 1});
}

TEST_CASE("dot products") {
  CHECK(dot({Rational(1), Rational(-1)}, {1, 1}) == 0);
  CHECK(dot({Rational(0), Rational(0)}, {7, 9}) == 0);
  CHECK(dot({Rational(1, 2), Rational(1, 3)}, {2, 3}) == 2);
}

TEST_CASE("support connectivity") {
  Quiver two = Quiver::from_edges(2, {});
  CHECK(support_connected(two, {1, 0}));
  CHECK_FALSE(support_connected(two, {1, 1}));
  CHECK(support_connected(kronecker(), {1, 1}));
  CHECK_THROWS_AS(support_connected(two, {0, 0}), std::invalid_argument);
}

TEST_CASE("form identities on random quivers") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    Quiver q = random_quiver(rng, 4, 6);
    IntVec a = random_vec(rng, q.size(), -3, 3);
    IntVec b = random_vec(rng, q.size(), -3, 3);
    CHECK(symmetric_form(q, a, b) == symmetric_form(q, b, a));
    CHECK(symmetric_form(q, a, a) == 2 * tits_q(q, a));
    IntVec sum = a;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += b[i];
    CHECK(symmetric_form(q, a, b) == tits_q(q, sum) - tits_q(q, a) - tits_q(q, b));
  }
}

TEST_CASE("q is orientation independent") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    Quiver q = random_quiver(rng, 4, 6);
    std::vector<std::pair<int, int>> flipped;
    std::uniform_int_distribution<int> coin(0, 1);
    for (const auto& arr : q.arrows()) {
      if (coin(rng)) flipped.emplace_back(arr.head, arr.tail);
      else flipped.emplace_back(arr.tail, arr.head);
    }
    Quiver q2 = Quiver::from_edges(q.size(), flipped);
    IntVec a = random_vec(rng, q.size(), -3, 3);
    IntVec b = random_vec(rng, q.size(), -3, 3);
    CHECK(tits_q(q, a) == tits_q(q2, a));
    CHECK(tits_p(q, a) == tits_p(q2, a));
    CHECK(symmetric_form(q, a, b) == symmetric_form(q2, a, b));
  }
}

TEST_CASE("deframe q identity") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    Quiver q = random_quiver(rng, 3, 4);
    IntVec w = random_vec(rng, q.size(), 0, 3);
    IntVec a = random_vec(rng, q.size(), 0, 3);
    auto [qd, ext] = deframe(q, w, a);
    std::int64_t cross = 0;
    for (int i = 0; i < q.size(); ++i) cross += w[i] * a[i];
    CHECK(tits_q(qd, ext) == tits_q(q, a) + 1 - cross);
  }
}

TEST_CASE("quiver construction validates") {
  CHECK_THROWS_AS(Quiver::from_edges(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Quiver({"a", "a"}, {}), std::invalid_argument);
  Quiver q({"x", "y"}, {{0, 0}, {0, 1}});
  CHECK(q.loops_at(0) == 1);
  CHECK(q.loop_free_at(1));
  CHECK(q.index_of("y") == 1);
  CHECK_THROWS_AS(q.index_of("z"), std::invalid_argument);
}
