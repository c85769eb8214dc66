#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nquiver/bimodule.hpp"
#include "nquiver/momentmap.hpp"
#include "oracles.hpp"

using namespace nquiver;

namespace {

// random bimodule automorphism: invertible blocks on multiplicity spaces
RatMat random_bimodule_automorphism(const Bimodule& m, std::mt19937_64& rng) {
  int r = m.algebra().num_blocks();
  SubBimodule blocks;
  blocks.mult_basis.assign(r, std::vector<RatMat>(r));
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      int k = m.mult(i, j);
      RatMat p(k, k);
      do {
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) p(a, b) = entry(rng);
      } while (k > 0 && rank(p) < k);
      blocks.mult_basis[i][j] = std::move(p);
    }
  return expand(m, blocks);
}

Bimodule random_bimodule(std::mt19937_64& rng, int max_blocks, int max_dim) {
  std::uniform_int_distribution<int> nb(1, max_blocks), bs(1, 3), ms(0, 3);
  while (true) {
    SemisimpleAlgebra alg;
    int r = nb(rng);
    for (int i = 0; i < r; ++i) alg.blocks.push_back(bs(rng));
    std::vector<std::vector<int>> mult(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i)
      for (int j = i; j < r; ++j) {
        if (i == j) mult[i][i] = 2 * (ms(rng) / 2);
        else mult[i][j] = mult[j][i] = ms(rng);
      }
    Bimodule m(alg, mult);
    if (m.dim() > 0 && m.dim() <= max_dim) return m;
  }
}

}  // namespace

TEST_CASE("canonical slot indexing round-trips") {
  SemisimpleAlgebra alg{{2, 1}};
  Bimodule m(alg, {{2, 1}, {1, 0}});
  CHECK(m.dim() == 2 * 4 + 1 * 2 + 1 * 2);
  for (int idx = 0; idx < m.dim(); ++idx) {
    auto s = m.slot(idx);
    CHECK(m.index(s.i, s.j, s.copy, s.r, s.s) == idx);
  }
}

TEST_CASE("standard gram is balanced, skew, and nondegenerate") {
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 15; ++trial) {
    Bimodule m = random_bimodule(rng, 3, 24);
    RatMat g = standard_gram(m);
    CHECK_NOTHROW(check_balanced_symplectic(m, g));
  }
}

TEST_CASE("automorphism pullbacks stay balanced") {
  std::mt19937_64 rng(1002);
  for (int trial = 0; trial < 10; ++trial) {
    Bimodule m = random_bimodule(rng, 2, 16);
    RatMat p = random_bimodule_automorphism(m, rng);
    RatMat g = p.transpose() * standard_gram(m) * p;
    CHECK_NOTHROW(check_balanced_symplectic(m, g));
  }
}

TEST_CASE("form validation produces named diagnostics") {
  SemisimpleAlgebra alg{{1}};
  SECTION("odd diagonal multiplicity") {
    Bimodule m(alg, {{1}});
    RatMat g(1, 1);
    CHECK_THROWS_WITH(check_balanced_symplectic(m, g),
                      Catch::Matchers::ContainsSubstring("odd"));
  }
  SECTION("asymmetric multiplicities") {
    SemisimpleAlgebra alg2{{1, 1}};
    Bimodule m(alg2, {{0, 1}, {0, 0}});
    RatMat g(1, 1);
    CHECK_THROWS_WITH(check_balanced_symplectic(m, g),
                      Catch::Matchers::ContainsSubstring("symmetric"));
  }
  SECTION("degenerate form") {
    Bimodule m(alg, {{2}});
    RatMat g(2, 2);
    CHECK_THROWS_WITH(check_balanced_symplectic(m, g),
                      Catch::Matchers::ContainsSubstring("degenerate"));
  }
  SECTION("unbalanced form") {
    SemisimpleAlgebra alg2{{2}};
    Bimodule m(alg2, {{2}});
    RatMat g(m.dim(), m.dim());
    // skew nondegenerate but pairing entries that a balanced form forbids
    for (int i = 0; i < m.dim() / 2; ++i) {
      g(i, m.dim() / 2 + i) = i + 1;
      g(m.dim() / 2 + i, i) = -(i + 1);
    }
    CHECK_THROWS_WITH(check_balanced_symplectic(m, g),
                      Catch::Matchers::ContainsSubstring("balanced"));
  }
}

TEST_CASE("perp is an inclusion-reversing involution") {
  std::mt19937_64 rng(1003);
  for (int trial = 0; trial < 10; ++trial) {
    Bimodule m = random_bimodule(rng, 2, 16);
    RatMat g = standard_gram(m);
    const int d = m.dim();
    // U = 0 and U = M
    CHECK(perp(g, RatMat(d, 0)).cols() == d);
    CHECK(perp(g, RatMat::identity(d)).cols() == 0);
    std::uniform_int_distribution<int> entry(-2, 2), cols(1, d);
    RatMat u(d, cols(rng));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < u.cols(); ++j) u(i, j) = entry(rng);
    RatMat up = perp(g, u);
    CHECK(up.cols() == d - rank(u));
    RatMat upp = perp(g, up);
    CHECK(rank(upp) == rank(u));
    CHECK(columns_in_span(upp, u));
  }
}

TEST_CASE("perp turns sums into intersections") {
  std::mt19937_64 rng(1013);
  for (int trial = 0; trial < 10; ++trial) {
    Bimodule m = random_bimodule(rng, 2, 14);
    RatMat g = standard_gram(m);
    const int d = m.dim();
    std::uniform_int_distribution<int> entry(-2, 2), cols(1, std::max(1, d / 2));
    auto rand_subspace = [&] {
      RatMat u(d, cols(rng));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < u.cols(); ++j) u(i, j) = entry(rng);
      return u;
    };
    RatMat u = rand_subspace(), v = rand_subspace();
    RatMat sum(d, u.cols() + v.cols());
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < u.cols(); ++j) sum(i, j) = u(i, j);
      for (int j = 0; j < v.cols(); ++j) sum(i, u.cols() + j) = v(i, j);
    }
    RatMat lhs = perp(g, sum);
    // intersection of the perps: kernel of the stacked conditions
    RatMat cond(u.cols() + v.cols(), d);
    RatMat cu = u.transpose() * g.transpose();
    RatMat cv = v.transpose() * g.transpose();
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < u.cols(); ++i) cond(i, j) = cu(i, j);
      for (int i = 0; i < v.cols(); ++i) cond(u.cols() + i, j) = cv(i, j);
    }
    RatMat rhs = kernel_basis(cond);
    CHECK(rank(lhs) == rank(rhs));
    CHECK(columns_in_span(lhs, rhs));
    CHECK(columns_in_span(rhs, lhs));
  }
}

TEST_CASE("balancedness implies the mirrored identity on units") {
  // omega(x, a y) = omega(x a, y) checked by construction; the derived form
  // omega(a x, y) = omega(x, y a) must follow
  std::mt19937_64 rng(1014);
  for (int trial = 0; trial < 8; ++trial) {
    Bimodule m = random_bimodule(rng, 2, 14);
    RatMat p = random_bimodule_automorphism(m, rng);
    RatMat g = p.transpose() * standard_gram(m) * p;
    const int d = m.dim();
    for (int b = 0; b < m.algebra().num_blocks(); ++b) {
      int ab = m.algebra().blocks[b];
      for (int r = 0; r < ab; ++r)
        for (int s = 0; s < ab; ++s) {
          auto left = m.left_unit_map(b, r, s);
          auto right = m.right_unit_map(b, r, s);
          for (int row = 0; row < d; ++row)
            for (int col = 0; col < d; ++col) {
              Rational lhs = left[row] >= 0 ? g(left[row], col) : Rational(0);
              Rational rhs = right[col] >= 0 ? g(row, right[col]) : Rational(0);
              CHECK(lhs == rhs);
            }
        }
    }
  }
}

TEST_CASE("a line is its own perp in the symplectic plane") {
  SemisimpleAlgebra alg{{1}};
  Bimodule m(alg, {{2}});
  RatMat g = standard_gram(m);
  RatMat u(2, 1);
  u(0, 0) = 1;
  RatMat up = perp(g, u);
  REQUIRE(up.cols() == 1);
  CHECK(columns_in_span(u, up));
}

TEST_CASE("simple sub-bimodules are isotropic") {
  std::mt19937_64 rng(1004);
  for (int trial = 0; trial < 10; ++trial) {
    Bimodule m = random_bimodule(rng, 2, 16);
    RatMat p = random_bimodule_automorphism(m, rng);
    RatMat g = p.transpose() * standard_gram(m) * p;
    // pick the simple generated by one multiplicity vector of one component
    int r = m.algebra().num_blocks();
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        if (m.mult(i, j) == 0) continue;
        SubBimodule s;
        s.mult_basis.assign(r, std::vector<RatMat>(r));
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b) s.mult_basis[a][b] = RatMat(m.mult(a, b), 0);
        RatMat one(m.mult(i, j), 1);
        std::uniform_int_distribution<int> entry(-2, 2);
        bool nonzero = false;
        while (!nonzero)
          for (int t = 0; t < m.mult(i, j); ++t) {
            one(t, 0) = entry(rng);
            nonzero |= one(t, 0) != 0;
          }
        s.mult_basis[i][j] = one;
        CHECK(check_simple_isotropic(m, g, expand(m, s)));
      }
  }
}

TEST_CASE("check_simple_isotropic rejects non-sub-bimodules and non-simples") {
  SemisimpleAlgebra alg{{2}};
  Bimodule m(alg, {{2}});
  RatMat g = standard_gram(m);
  // a random line is generally not a sub-bimodule
  RatMat line(m.dim(), 1);
  line(0, 0) = 1;
  line(3, 0) = 1;
  line(5, 0) = 2;
  CHECK_THROWS_AS(check_simple_isotropic(m, g, line), std::invalid_argument);
  // the whole module is a sub-bimodule but not simple
  CHECK_THROWS_AS(check_simple_isotropic(m, g, RatMat::identity(m.dim())),
                  std::invalid_argument);
}

TEST_CASE("a symmetric pairing on a non-balanced form breaks isotropy") {
  // one block of size 1, multiplicity 2: every form is balanced over a
  // 1-dimensional block algebra, so use the raw Gram check directly on a
  // symplectic form whose simple line is NOT isotropic... on the nose:
  // lines are always isotropic for skew forms, so instead check that the
  // balance test itself is what fails for a twisted pairing on a 2x2 block.
  SemisimpleAlgebra alg{{2}};
  Bimodule m(alg, {{2}});
  RatMat g(m.dim(), m.dim());
  // pair entry (r,s) of copy 0 with entry (r,s) of copy 1 (not (s,r)):
  // skew and nondegenerate but unbalanced
  for (int rr = 0; rr < 2; ++rr)
    for (int ss = 0; ss < 2; ++ss) {
      g(m.index(0, 0, 0, rr, ss), m.index(0, 0, 1, rr, ss)) = 1;
      g(m.index(0, 0, 1, rr, ss), m.index(0, 0, 0, rr, ss)) = -1;
    }
  check_skew(g);
  CHECK(rank(g) == m.dim());
  CHECK_FALSE(is_balanced(m, g));
  CHECK_THROWS_AS(maximal_isotropic(m, g), std::invalid_argument);
}

TEST_CASE("maximal isotropic sub-bimodules are Lagrangian") {
  std::mt19937_64 rng(1005);
  for (int trial = 0; trial < 12; ++trial) {
    Bimodule m = random_bimodule(rng, 3, 24);
    RatMat p = random_bimodule_automorphism(m, rng);
    RatMat g = p.transpose() * standard_gram(m) * p;
    SubBimodule s = maximal_isotropic(m, g);
    RatMat sfull = expand(m, s);
    CHECK(2 * sfull.cols() == m.dim());
    CHECK(rank(sfull) == sfull.cols());
    CHECK(is_sub_bimodule(m, sfull));
    CHECK((sfull.transpose() * g * sfull).is_zero());
  }
}

TEST_CASE("darboux on the symplectic plane") {
  SemisimpleAlgebra alg{{1}};
  Bimodule m(alg, {{2}});
  RatMat g = standard_gram(m);
  SubBimodule s;
  s.mult_basis.assign(1, std::vector<RatMat>(1));
  RatMat first(2, 1);
  first(0, 0) = 1;
  s.mult_basis[0][0] = first;
  DarbouxCertificate cert = darboux(m, g, s);
  CHECK(cert.gram == standard_symplectic_gram(1));
  CHECK(cert.basis == RatMat::identity(2));
}

TEST_CASE("darboux certifies random balanced forms exactly") {
  std::mt19937_64 rng(1006);
  for (int trial = 0; trial < 12; ++trial) {
    Bimodule m = random_bimodule(rng, 2, 20);
    RatMat p = random_bimodule_automorphism(m, rng);
    RatMat g = p.transpose() * standard_gram(m) * p;
    SubBimodule s = maximal_isotropic(m, g);
    DarbouxCertificate cert = darboux(m, g, s);
    CHECK(cert.gram == standard_symplectic_gram(m.dim() / 2));
    // D is an isotropic sub-bimodule complement
    RatMat dpart(m.dim(), m.dim() / 2);
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < m.dim() / 2; ++j) dpart(i, j) = cert.basis(i, m.dim() / 2 + j);
    CHECK(is_sub_bimodule(m, dpart));
    CHECK((dpart.transpose() * g * dpart).is_zero());
    CHECK(rank(cert.basis) == m.dim());
  }
}

TEST_CASE("darboux corrects a non-isotropic coordinate complement") {
  // diagonal component with a twisted form: theta != 0 is exercised because
  // the plain coordinate complement of S is not omega-isotropic
  SemisimpleAlgebra alg{{1}};
  Bimodule m(alg, {{4}});
  RatMat g(4, 4);
  auto set = [&](int a, int b, int v) {
    g(a, b) = v;
    g(b, a) = -v;
  };
  set(0, 2, 1);
  set(1, 3, 1);
  set(2, 3, 1);  // the complement {e2,e3} of S = {e0,e1} is not isotropic
  check_balanced_symplectic(m, g);
  SubBimodule s;
  s.mult_basis.assign(1, std::vector<RatMat>(1));
  RatMat u(4, 2);
  u(0, 0) = 1;
  u(1, 1) = 1;
  s.mult_basis[0][0] = u;
  DarbouxCertificate cert = darboux(m, g, s);
  CHECK(cert.gram == standard_symplectic_gram(2));
}

TEST_CASE("darboux rejects subspaces that are not maximal isotropic") {
  SemisimpleAlgebra alg{{1}};
  Bimodule m(alg, {{4}});
  RatMat g = standard_gram(m);
  SubBimodule s;
  s.mult_basis.assign(1, std::vector<RatMat>(1));
  RatMat u(4, 2);
  u(0, 0) = 1;
  u(2, 1) = 1;  // pairs with the first column: not isotropic
  s.mult_basis[0][0] = u;
  CHECK_THROWS_AS(darboux(m, g, s), std::invalid_argument);
  RatMat small(4, 1);
  small(0, 0) = 1;
  s.mult_basis[0][0] = small;
  CHECK_THROWS_AS(darboux(m, g, s), std::invalid_argument);
}

TEST_CASE("abstract moment map basics") {
  auto qq = make_quadruple(Quiver::from_edges(2, {{0, 1}, {0, 1}}), {1, 1},
                           {Rational(1), Rational(-1)});
  const Quadruple& quad = qq.quad;
  SECTION("zero element maps to the zero functional") {
    std::vector<Rational> zero(quad.module.dim(), Rational(0));
    for (const auto& f : abstract_moment_map(quad, zero)) CHECK(f.is_zero());
  }
  SECTION("mu(m)(a) = omega(m, a m) = half omega(m, [a, m])") {
    std::mt19937_64 rng(2024);
    std::vector<Rational> mvec(quad.module.dim());
    for (auto& x : mvec) x = test_oracles::random_small_rational(rng);
    auto f = abstract_moment_map(quad, mvec);
    // functional applied to matrix units, against the defining formula
    const Bimodule& mod = quad.module;
    for (int b = 0; b < quad.algebra.num_blocks(); ++b) {
      int ab = quad.algebra.blocks[b];
      for (int r = 0; r < ab; ++r)
        for (int s = 0; s < ab; ++s) {
          auto left = mod.left_unit_map(b, r, s);
          auto right = mod.right_unit_map(b, r, s);
          // omega(m, E m) and omega(m, E m - m E) entrywise
          Rational am = 0, ma = 0;
          for (int src = 0; src < mod.dim(); ++src) {
            if (mvec[src] == 0) continue;
            for (int row = 0; row < mod.dim(); ++row) {
              if (mvec[row] == 0) continue;
              if (left[src] >= 0) am += mvec[row] * quad.omega(row, left[src]) * mvec[src];
              if (right[src] >= 0) ma += mvec[row] * quad.omega(row, right[src]) * mvec[src];
            }
          }
          CHECK(f[b](s, r) == am);
          CHECK(f[b](s, r) == Rational(1, 2) * (am - ma));
        }
    }
    // the identity of A commutes with every element, so mu(m)(1) = 0
    Rational at_identity = 0;
    for (int b = 0; b < quad.algebra.num_blocks(); ++b)
      for (int r = 0; r < quad.algebra.blocks[b]; ++r) at_identity += f[b](r, r);
    CHECK(at_identity == 0);
  }
}

TEST_CASE("abstract moment map agrees with mu_alpha under the trace pairing") {
  std::mt19937_64 rng(2025);
  for (int trial = 0; trial < 10; ++trial) {
    Quiver q = test_oracles::random_quiver(rng, 2, 3);
    std::uniform_int_distribution<int> entry(1, 2);
    IntVec alpha(q.size());
    for (auto& a : alpha) a = entry(rng);
    Weight lambda(q.size(), Rational(0));
    auto qq = make_quadruple(q, alpha, lambda);
    DoubledQuiver dq(q);

    // a random representation, written both ways
    RationalRep x = zero_representation<RatMat>(dq, alpha);
    std::vector<Rational> mvec(qq.quad.module.dim(), Rational(0));
    for (int b = 0; b < dq.num_arrows(); ++b) {
      int i = dq.head(b), j = dq.tail(b);
      for (int rr = 0; rr < alpha[i]; ++rr)
        for (int cc = 0; cc < alpha[j]; ++cc) {
          Rational v = test_oracles::random_small_rational(rng);
          x.mats[b](rr, cc) = v;
          mvec[qq.quad.module.index(i, j, qq.arrow_copy[b], rr, cc)] = v;
        }
    }
    auto mu = moment_map(dq, alpha, x);
    auto f = abstract_moment_map(qq.quad, mvec);
    for (int i = 0; i < q.size(); ++i) CHECK(f[i] == mu[i]);
  }
}

TEST_CASE("the quadruple Gram computes omega_alpha") {
  std::mt19937_64 rng(2027);
  for (int trial = 0; trial < 10; ++trial) {
    Quiver q = test_oracles::random_quiver(rng, 3, 4);
    std::uniform_int_distribution<int> entry(1, 2);
    IntVec alpha(q.size());
    for (auto& a : alpha) a = entry(rng);
    auto qq = make_quadruple(q, alpha, Weight(q.size(), Rational(0)));
    DoubledQuiver dq(q);
    auto fill = [&](RationalRep& rep, std::vector<Rational>& vec) {
      for (int b = 0; b < dq.num_arrows(); ++b) {
        int i = dq.head(b), j = dq.tail(b);
        for (int rr = 0; rr < alpha[i]; ++rr)
          for (int cc = 0; cc < alpha[j]; ++cc) {
            Rational v = test_oracles::random_small_rational(rng);
            rep.mats[b](rr, cc) = v;
            vec[qq.quad.module.index(i, j, qq.arrow_copy[b], rr, cc)] = v;
          }
      }
    };
    RationalRep x = zero_representation<RatMat>(dq, alpha);
    RationalRep y = zero_representation<RatMat>(dq, alpha);
    std::vector<Rational> xv(qq.quad.module.dim(), Rational(0));
    std::vector<Rational> yv(qq.quad.module.dim(), Rational(0));
    fill(x, xv);
    fill(y, yv);
    Rational via_gram = 0;
    for (int i = 0; i < qq.quad.module.dim(); ++i) {
      if (xv[i] == 0) continue;
      for (int j = 0; j < qq.quad.module.dim(); ++j)
        if (yv[j] != 0) via_gram += xv[i] * qq.quad.omega(i, j) * yv[j];
    }
    CHECK(via_gram == symplectic_form(dq, alpha, x, y));
  }
}

TEST_CASE("the forward-arrow subspace is Lagrangian in the quadruple") {
  std::mt19937_64 rng(2028);
  for (int trial = 0; trial < 10; ++trial) {
    Quiver q = test_oracles::random_quiver(rng, 3, 4, 1);
    if (q.num_arrows() == 0) continue;
    std::uniform_int_distribution<int> entry(1, 2);
    IntVec alpha(q.size());
    for (auto& a : alpha) a = entry(rng);
    auto qq = make_quadruple(q, alpha, Weight(q.size(), Rational(0)));
    const Bimodule& m = qq.quad.module;
    DoubledQuiver dq(q);
    // basis vectors of the slots used by unstarred arrows
    std::vector<int> slots;
    for (int b = 0; b < q.num_arrows(); ++b) {
      int i = dq.head(b), j = dq.tail(b);
      for (int rr = 0; rr < alpha[i]; ++rr)
        for (int cc = 0; cc < alpha[j]; ++cc)
          slots.push_back(m.index(i, j, qq.arrow_copy[b], rr, cc));
    }
    RatMat fwd(m.dim(), static_cast<int>(slots.size()));
    for (std::size_t k = 0; k < slots.size(); ++k) fwd(slots[k], static_cast<int>(k)) = 1;
    CHECK(2 * fwd.cols() == m.dim());
    CHECK(is_sub_bimodule(m, fwd));
    CHECK((fwd.transpose() * qq.quad.omega * fwd).is_zero());
  }
}

TEST_CASE("quadruple extraction on stated examples") {
  SECTION("Kronecker round trip") {
    auto qq = make_quadruple(Quiver::from_edges(2, {{0, 1}, {0, 1}}), {1, 1},
                             {Rational(1), Rational(-1)});
    ExtractedQuiver ex = quadruple_to_quiver(qq.quad);
    CHECK(ex.alpha == IntVec{1, 1});
    CHECK(ex.lambda == Weight{Rational(1), Rational(-1)});
    CHECK(ex.quiver.num_arrows() == 2);
    CHECK(ex.quiver.edges_between(0, 1) == 2);
  }
  SECTION("zero module gives no arrows") {
    SemisimpleAlgebra alg{{2, 1}};
    Bimodule m(alg, {{0, 0}, {0, 0}});
    Quadruple quad{alg, m, RatMat(0, 0), TraceFunction{{Rational(3), Rational(0)}}};
    ExtractedQuiver ex = quadruple_to_quiver(quad);
    CHECK(ex.quiver.num_arrows() == 0);
    CHECK(ex.alpha == IntVec{2, 1});
    CHECK(ex.lambda == Weight{Rational(3), Rational(0)});
  }
  SECTION("one block of size one with multiplicity two gives a loop") {
    SemisimpleAlgebra alg{{1}};
    Bimodule m(alg, {{2}});
    std::mt19937_64 rng(7);
    RatMat p = random_bimodule_automorphism(m, rng);
    RatMat g = p.transpose() * standard_gram(m) * p;
    Quadruple quad{alg, m, g, TraceFunction{{Rational(0)}}};
    ExtractedQuiver ex = quadruple_to_quiver(quad);
    CHECK(ex.quiver.size() == 1);
    CHECK(ex.quiver.num_arrows() == 1);
    CHECK(ex.quiver.loops_at(0) == 1);
  }
}

TEST_CASE("quadruple round trip is stable") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 10; ++trial) {
    Quiver q = test_oracles::random_quiver(rng, 3, 4);
    std::uniform_int_distribution<int> entry(1, 2);
    IntVec alpha(q.size());
    for (auto& a : alpha) a = entry(rng);
    Weight lambda(q.size());
    for (auto& l : lambda) l = test_oracles::random_small_rational(rng);
    auto qq = make_quadruple(q, alpha, lambda);
    ExtractedQuiver ex = quadruple_to_quiver(qq.quad);
    REQUIRE(ex.alpha == alpha);
    REQUIRE(ex.lambda == lambda);
    for (int i = 0; i < q.size(); ++i) {
      CHECK(ex.quiver.loops_at(i) == q.loops_at(i));
      for (int j = i + 1; j < q.size(); ++j)
        CHECK(ex.quiver.edges_between(i, j) == q.edges_between(i, j));
    }
    // second pass: rebuild from the extracted data and extract again
    auto qq2 = make_quadruple(ex.quiver, ex.alpha, ex.lambda);
    ExtractedQuiver ex2 = quadruple_to_quiver(qq2.quad);
    CHECK(ex2.alpha == ex.alpha);
    CHECK(ex2.lambda == ex.lambda);
    for (int i = 0; i < q.size(); ++i) {
      CHECK(ex2.quiver.loops_at(i) == ex.quiver.loops_at(i));
      for (int j = i + 1; j < q.size(); ++j)
        CHECK(ex2.quiver.edges_between(i, j) == ex.quiver.edges_between(i, j));
    }
  }
}
