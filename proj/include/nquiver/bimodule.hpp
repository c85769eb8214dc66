// Symplectic linear algebra over a split semisimple algebra A = prod Mat(a_i)
// and the coordinate-free quadruple formalism (A, M, omega, zeta), all in
// exact rational arithmetic.
//
// Bimodules are kept in the canonical model M = sum_(i,j) (X_i (x) X_j^*)^m_ij
// = sum copies of Mat(a_i x a_j). Basis order: components (i,j) ascending
// lexicographically, copies within a component, matrix entries row-major.
// Every construction reduces to linear algebra on the multiplicity spaces:
// a balanced form pairs the (i,j) and (j,i) multiplicity spaces perfectly,
// and restricts to a symplectic form on the (i,i) one.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nquiver/linalg.hpp"
#include "nquiver/quiver.hpp"

namespace nquiver {

struct SemisimpleAlgebra {
  std::vector<int> blocks;  // matrix block sizes, one per simple module

  int num_blocks() const { return static_cast<int>(blocks.size()); }

  int dim() const {
    int d = 0;
    for (int b : blocks) d += b * b;
    return d;
  }

  void validate() const {
    if (blocks.empty()) throw std::invalid_argument("semisimple algebra: no blocks");
    for (int b : blocks)
      if (b <= 0) throw std::invalid_argument("semisimple algebra: block sizes must be positive");
  }
};

class Bimodule {
 public:
  Bimodule() = default;

  Bimodule(SemisimpleAlgebra algebra, std::vector<std::vector<int>> mult)
      : algebra_(std::move(algebra)), mult_(std::move(mult)) {
    algebra_.validate();
    int r = algebra_.num_blocks();
    if (static_cast<int>(mult_.size()) != r)
      throw std::invalid_argument("bimodule: multiplicity matrix has wrong shape");
    for (const auto& row : mult_) {
      if (static_cast<int>(row.size()) != r)
        throw std::invalid_argument("bimodule: multiplicity matrix has wrong shape");
      for (int m : row)
        if (m < 0) throw std::invalid_argument("bimodule: negative multiplicity");
    }
    offset_.assign(r, std::vector<int>(r, 0));
    int at = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        offset_[i][j] = at;
        at += mult_[i][j] * algebra_.blocks[i] * algebra_.blocks[j];
      }
    dim_ = at;
  }

  const SemisimpleAlgebra& algebra() const { return algebra_; }
  const std::vector<std::vector<int>>& multiplicities() const { return mult_; }
  int dim() const { return dim_; }
  int mult(int i, int j) const { return mult_[i][j]; }

  int index(int i, int j, int copy, int r, int s) const {
    int ai = algebra_.blocks[i], aj = algebra_.blocks[j];
    return offset_[i][j] + (copy * ai + r) * aj + s;
  }

  struct Slot {
    int i, j, copy, r, s;
  };

  Slot slot(int index) const {
    int r = algebra_.num_blocks();
    for (int i = r - 1; i >= 0; --i)
      for (int j = r - 1; j >= 0; --j) {
        if (offset_[i][j] > index || mult_[i][j] == 0) continue;
        int rel = index - offset_[i][j];
        int ai = algebra_.blocks[i], aj = algebra_.blocks[j];
        if (rel >= mult_[i][j] * ai * aj) continue;
        return Slot{i, j, rel / (ai * aj), (rel / aj) % ai, rel % aj};
      }
    throw std::out_of_range("bimodule slot index out of range");
  }

  // Action of the matrix unit E^(b)_{rs} on basis slots; -1 marks a killed
  // slot. Left: E_{rs} X picks row s of X into row r. Right: X E_{rs} picks
  // column r into column s.
  std::vector<int> left_unit_map(int b, int r, int s) const {
    std::vector<int> map(dim_, -1);
    int nb = algebra_.num_blocks();
    for (int j = 0; j < nb; ++j) {
      int aj = algebra_.blocks[j];
      for (int t = 0; t < mult_[b][j]; ++t)
        for (int sp = 0; sp < aj; ++sp) map[index(b, j, t, s, sp)] = index(b, j, t, r, sp);
    }
    return map;
  }

  std::vector<int> right_unit_map(int b, int r, int s) const {
    std::vector<int> map(dim_, -1);
    int nb = algebra_.num_blocks();
    for (int i = 0; i < nb; ++i) {
      int ai = algebra_.blocks[i];
      for (int t = 0; t < mult_[i][b]; ++t)
        for (int rp = 0; rp < ai; ++rp) map[index(i, b, t, rp, r)] = index(i, b, t, rp, s);
    }
    return map;
  }

 private:
  SemisimpleAlgebra algebra_;
  std::vector<std::vector<int>> mult_;
  std::vector<std::vector<int>> offset_;
  int dim_ = 0;
};

struct TraceFunction {
  std::vector<Rational> block_scalars;  // zeta(a) = sum_b scalar_b tr(a_b)
};

struct Quadruple {
  SemisimpleAlgebra algebra;
  Bimodule module;
  RatMat omega;  // Gram matrix on the canonical basis
  TraceFunction trace;
};

// --- form validation ---------------------------------------------------

inline void check_skew(const RatMat& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("form: Gram matrix is not square");
  for (int i = 0; i < g.rows(); ++i)
    for (int j = i; j < g.cols(); ++j)
      if (g(i, j) != -g(j, i)) throw std::invalid_argument("form: Gram matrix is not skew");
}

inline bool is_balanced(const Bimodule& m, const RatMat& g) {
  const int d = m.dim();
  for (int b = 0; b < m.algebra().num_blocks(); ++b) {
    int ab = m.algebra().blocks[b];
    for (int r = 0; r < ab; ++r)
      for (int s = 0; s < ab; ++s) {
        auto left = m.left_unit_map(b, r, s);
        auto right = m.right_unit_map(b, r, s);
        // omega(x, a y) == omega(x a, y): G L_a = R_a^T G entrywise
        for (int row = 0; row < d; ++row)
          for (int col = 0; col < d; ++col) {
            const Rational lhs = left[col] >= 0 ? g(row, left[col]) : Rational(0);
            const Rational rhs = right[row] >= 0 ? g(right[row], col) : Rational(0);
            if (lhs != rhs) return false;
          }
      }
  }
  return true;
}

// Throws with a specific diagnostic unless omega is a balanced symplectic
// form on the bimodule. Nondegeneracy forces m_ij = m_ji and even m_ii.
inline void check_balanced_symplectic(const Bimodule& m, const RatMat& g) {
  if (g.rows() != m.dim())
    throw std::invalid_argument("form: Gram size does not match bimodule dimension");
  check_skew(g);
  int r = m.algebra().num_blocks();
  for (int i = 0; i < r; ++i) {
    if (m.mult(i, i) % 2 != 0)
      throw std::invalid_argument("form: multiplicity m[" + std::to_string(i) + "][" +
                                  std::to_string(i) + "] is odd, no symplectic form exists");
    for (int j = i + 1; j < r; ++j)
      if (m.mult(i, j) != m.mult(j, i))
        throw std::invalid_argument("form: multiplicity matrix is not symmetric, no "
                                    "nondegenerate balanced form exists");
  }
  if (!is_balanced(m, g)) throw std::invalid_argument("form: not balanced");
  if (rank(g) != m.dim()) throw std::invalid_argument("form: degenerate");
}

// --- subspaces ----------------------------------------------------------

// U^perp = { x : omega(x, u) = 0 for all u in U }; columns span the result.
inline RatMat perp(const RatMat& g, const RatMat& u) {
  if (u.rows() != g.rows()) throw std::invalid_argument("perp: subspace lives elsewhere");
  return kernel_basis(u.transpose() * g.transpose());
}

inline bool is_sub_bimodule(const Bimodule& m, const RatMat& u) {
  if (u.rows() != m.dim()) throw std::invalid_argument("is_sub_bimodule: wrong ambient dimension");
  for (int b = 0; b < m.algebra().num_blocks(); ++b) {
    int ab = m.algebra().blocks[b];
    for (int r = 0; r < ab; ++r)
      for (int s = 0; s < ab; ++s) {
        auto left = m.left_unit_map(b, r, s);
        auto right = m.right_unit_map(b, r, s);
        RatMat lu(m.dim(), u.cols()), ru(m.dim(), u.cols());
        for (int src = 0; src < m.dim(); ++src) {
          for (int c = 0; c < u.cols(); ++c) {
            if (left[src] >= 0) lu(left[src], c) += u(src, c);
            if (right[src] >= 0) ru(right[src], c) += u(src, c);
          }
        }
        if (!columns_in_span(u, lu) || !columns_in_span(u, ru)) return false;
      }
  }
  return true;
}

// A sub-bimodule presented by its multiplicity-space bases: columns of
// mult_basis[i][j] live in Q^{m_ij}.
struct SubBimodule {
  std::vector<std::vector<RatMat>> mult_basis;

  int multiplicity(int i, int j) const { return mult_basis[i][j].cols(); }
};

// Full-space basis matrix; columns ordered by ((i,j) asc, column, entry).
inline RatMat expand(const Bimodule& m, const SubBimodule& s) {
  int r = m.algebra().num_blocks();
  int total = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      total += s.mult_basis[i][j].cols() * m.algebra().blocks[i] * m.algebra().blocks[j];
  RatMat out(m.dim(), total);
  int col = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const RatMat& u = s.mult_basis[i][j];
      int ai = m.algebra().blocks[i], aj = m.algebra().blocks[j];
      for (int a = 0; a < u.cols(); ++a)
        for (int rr = 0; rr < ai; ++rr)
          for (int ss = 0; ss < aj; ++ss) {
            for (int t = 0; t < m.mult(i, j); ++t)
              if (u(t, a) != 0) out(m.index(i, j, t, rr, ss), col) = u(t, a);
            ++col;
          }
    }
  return out;
}

// Multiplicity-space components of a subspace: the (i,j) coordinates at
// matrix entry (0,0). For a sub-bimodule this recovers its decomposition.
inline SubBimodule restrict_to_multiplicity(const Bimodule& m, const RatMat& u) {
  int r = m.algebra().num_blocks();
  SubBimodule s;
  s.mult_basis.assign(r, std::vector<RatMat>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      RatMat rows(m.mult(i, j), u.cols());
      for (int t = 0; t < m.mult(i, j); ++t)
        for (int c = 0; c < u.cols(); ++c) rows(t, c) = u(m.index(i, j, t, 0, 0), c);
      s.mult_basis[i][j] = column_space_basis(rows);
    }
  return s;
}

// Verifies T is a simple sub-bimodule, then reports whether omega vanishes
// on it (it must, for balanced omega).
inline bool check_simple_isotropic(const Bimodule& m, const RatMat& g, const RatMat& t) {
  if (!is_sub_bimodule(m, t))
    throw std::invalid_argument("check_simple_isotropic: not a sub-bimodule");
  SubBimodule s = restrict_to_multiplicity(m, t);
  int r = m.algebra().num_blocks();
  int components = 0, dim_expected = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (s.mult_basis[i][j].cols() > 0) {
        components += s.mult_basis[i][j].cols();
        dim_expected += m.algebra().blocks[i] * m.algebra().blocks[j];
      }
  if (components != 1 || rank(t) != dim_expected)
    throw std::invalid_argument("check_simple_isotropic: sub-bimodule is not simple");
  return (t.transpose() * g * t).is_zero();
}

// --- multiplicity-space pairings and the Darboux construction -----------

// b_ij(t, t') = omega(copy t of (i,j) at entry (0,0), copy t' of (j,i)).
inline RatMat multiplicity_pairing(const Bimodule& m, const RatMat& g, int i, int j) {
  RatMat b(m.mult(i, j), m.mult(j, i));
  for (int t = 0; t < m.mult(i, j); ++t)
    for (int u = 0; u < m.mult(j, i); ++u)
      b(t, u) = g(m.index(i, j, t, 0, 0), m.index(j, i, u, 0, 0));
  return b;
}

// Columns (v_1..v_k, w_1..w_k) with b(v_a, w_c) = delta and both halves
// isotropic; requires b skew nondegenerate.
inline RatMat symplectic_basis(const RatMat& b) {
  const int n = b.rows();
  if (n % 2 != 0) throw std::invalid_argument("symplectic_basis: odd dimension");
  RatMat rem = RatMat::identity(n);
  std::vector<std::vector<Rational>> vs, ws;
  auto pairing = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational acc = 0;
    for (int i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < n; ++j)
        if (y[j] != 0) acc += x[i] * b(i, j) * y[j];
    }
    return acc;
  };
  std::vector<std::vector<Rational>> cols;
  for (int c = 0; c < n; ++c) {
    std::vector<Rational> col(n);
    for (int i = 0; i < n; ++i) col[i] = rem(i, c);
    cols.push_back(std::move(col));
  }
  while (!cols.empty()) {
    std::vector<Rational> v = cols.front();
    cols.erase(cols.begin());
    int mate = -1;
    Rational pv;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      pv = pairing(v, cols[k]);
      if (pv != 0) { mate = static_cast<int>(k); break; }
    }
    if (mate < 0) throw std::invalid_argument("symplectic_basis: degenerate form");
    std::vector<Rational> w = cols[mate];
    cols.erase(cols.begin() + mate);
    Rational inv = Rational(1) / pv;
    for (auto& x : w) x *= inv;
    for (auto& rest : cols) {
      Rational a = pairing(w, rest);   // coefficient of v
      Rational c = pairing(v, rest);   // coefficient of w
      for (int i = 0; i < n; ++i) rest[i] += a * v[i] - c * w[i];
    }
    vs.push_back(std::move(v));
    ws.push_back(std::move(w));
  }
  RatMat out(n, n);
  for (std::size_t k = 0; k < vs.size(); ++k)
    for (int i = 0; i < n; ++i) {
      out(i, static_cast<int>(k)) = vs[k][i];
      out(i, static_cast<int>(vs.size() + k)) = ws[k][i];
    }
  return out;
}

// Deterministic maximal isotropic (Lagrangian) sub-bimodule: the whole (i,j)
// multiplicity space for i < j, half of a symplectic basis on the diagonal.
inline SubBimodule maximal_isotropic(const Bimodule& m, const RatMat& g) {
  check_balanced_symplectic(m, g);
  int r = m.algebra().num_blocks();
  SubBimodule s;
  s.mult_basis.assign(r, std::vector<RatMat>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i < j) s.mult_basis[i][j] = RatMat::identity(m.mult(i, j));
      else if (i > j) s.mult_basis[i][j] = RatMat(m.mult(i, j), 0);
      else {
        RatMat b = multiplicity_pairing(m, g, i, i);
        int half = m.mult(i, i) / 2;
        RatMat basis = m.mult(i, i) ? symplectic_basis(b) : RatMat(0, 0);
        RatMat lag(m.mult(i, i), half);
        for (int c = 0; c < half; ++c)
          for (int row = 0; row < m.mult(i, i); ++row) lag(row, c) = basis(row, c);
        s.mult_basis[i][i] = lag;
      }
    }
  return s;
}

struct DarbouxCertificate {
  RatMat basis;            // columns: Lagrangian S then complement D
  RatMat gram;             // basis^T G basis; the standard block form exactly
  SubBimodule complement;  // D at multiplicity level
};

inline RatMat standard_symplectic_gram(int half) {
  RatMat j(2 * half, 2 * half);
  for (int k = 0; k < half; ++k) {
    j(k, half + k) = 1;
    j(half + k, k) = -1;
  }
  return j;
}

// Constructive Darboux: given a maximal isotropic sub-bimodule S, produce an
// isotropic bimodule complement D = { c - theta(c)/2 } and a change of basis
// in which the Gram matrix is exactly [[0, I], [-I, 0]].
inline DarbouxCertificate darboux(const Bimodule& m, const RatMat& g, const SubBimodule& s) {
  check_balanced_symplectic(m, g);
  const int r = m.algebra().num_blocks();
  const int d = m.dim();

  int sdim = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (s.mult_basis[i][j].rows() != m.mult(i, j))
        throw std::invalid_argument("darboux: multiplicity basis has wrong shape");
      sdim += s.mult_basis[i][j].cols() * m.algebra().blocks[i] * m.algebra().blocks[j];
    }
  if (2 * sdim != d)
    throw std::invalid_argument("darboux: subspace is not maximal isotropic (dimension)");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      RatMat b = multiplicity_pairing(m, g, i, j);
      if (!(s.mult_basis[i][j].transpose() * b * s.mult_basis[j][i]).is_zero())
        throw std::invalid_argument("darboux: subspace is not isotropic");
    }

  // complement and theta-correction per component
  std::vector<std::vector<RatMat>> comp(r, std::vector<RatMat>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) comp[i][j] = complement_basis(s.mult_basis[i][j]);
  SubBimodule dsub;
  dsub.mult_basis.assign(r, std::vector<RatMat>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const RatMat& u = s.mult_basis[i][j];
      const RatMat& v = comp[i][j];
      const RatMat& vji = comp[j][i];
      RatMat b = multiplicity_pairing(m, g, i, j);
      if (v.cols() == 0) { dsub.mult_basis[i][j] = v; continue; }
      RatMat p = u.transpose() * b * vji;   // pairings of S_ij against C_ji
      RatMat w = v.transpose() * b * vji;   // pairings of C_ij against C_ji
      std::optional<RatMat> t;               // theta as a map C_ij -> S_ij: t^T p = w
      if (u.cols() == 0) {
        if (!w.is_zero())
          throw std::invalid_argument("darboux: subspace is not maximal isotropic");
        t = RatMat(0, v.cols());
      } else {
        t = solve_linear(p.transpose(), w.transpose());
        if (!t) throw std::invalid_argument("darboux: subspace is not maximal isotropic");
      }
      dsub.mult_basis[i][j] = v - Rational(1, 2) * (u * *t);
    }

  // normalize D against S so the pairing blocks become identities
  std::vector<std::vector<RatMat>> dnorm(r, std::vector<RatMat>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      RatMat b = multiplicity_pairing(m, g, i, j);
      const RatMat& u = s.mult_basis[i][j];
      const RatMat& dj = dsub.mult_basis[j][i];
      if (u.cols() != dj.cols())
        throw std::invalid_argument("darboux: subspace is not maximal isotropic (pairing)");
      if (u.cols() == 0) { dnorm[j][i] = dj; continue; }
      RatMat k = u.transpose() * b * dj;
      auto kinv = inverse(k);
      if (!kinv) throw std::invalid_argument("darboux: subspace is not maximal isotropic (pairing)");
      dnorm[j][i] = dj * *kinv;
    }
  dsub.mult_basis = dnorm;

  // assemble the certificate basis: S columns, then D columns in the pairing
  // order (component transposed, entries transposed)
  DarbouxCertificate cert;
  cert.complement = dsub;
  cert.basis = RatMat(d, d);
  int col = 0;
  RatMat sfull = expand(m, s);
  for (int c = 0; c < sfull.cols(); ++c, ++col)
    for (int row = 0; row < d; ++row) cert.basis(row, col) = sfull(row, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const RatMat& u = s.mult_basis[i][j];
      const RatMat& dj = dsub.mult_basis[j][i];
      int ai = m.algebra().blocks[i], aj = m.algebra().blocks[j];
      for (int a = 0; a < u.cols(); ++a)
        for (int rr = 0; rr < ai; ++rr)
          for (int ss = 0; ss < aj; ++ss) {
            for (int t = 0; t < m.mult(j, i); ++t)
              if (dj(t, a) != 0) cert.basis(m.index(j, i, t, ss, rr), col) = dj(t, a);
            ++col;
          }
    }
  cert.gram = cert.basis.transpose() * g * cert.basis;
  if (!(cert.gram == standard_symplectic_gram(sdim)))
    throw std::logic_error("darboux: certificate verification failed");
  return cert;
}

// --- quadruples ----------------------------------------------------------

inline void validate_quadruple(const Quadruple& q) {
  q.algebra.validate();
  if (q.module.algebra().blocks != q.algebra.blocks)
    throw std::invalid_argument("quadruple: module algebra differs");
  if (static_cast<int>(q.trace.block_scalars.size()) != q.algebra.num_blocks())
    throw std::invalid_argument("quadruple: trace function has wrong block count");
  check_balanced_symplectic(q.module, q.omega);
}

// mu(m)(a) = omega(m, a m), returned as the blockwise matrices F with
// mu(m)(a) = sum_b tr(F_b a_b).
inline std::vector<RatMat> abstract_moment_map(const Quadruple& quad,
                                               const std::vector<Rational>& m) {
  if (static_cast<int>(m.size()) != quad.module.dim())
    throw std::invalid_argument("abstract_moment_map: element has wrong dimension");
  const Bimodule& mod = quad.module;
  std::vector<RatMat> out;
  for (int b = 0; b < quad.algebra.num_blocks(); ++b) {
    int ab = quad.algebra.blocks[b];
    RatMat f(ab, ab);
    for (int r = 0; r < ab; ++r)
      for (int s = 0; s < ab; ++s) {
        auto left = mod.left_unit_map(b, r, s);
        Rational acc = 0;
        for (int src = 0; src < mod.dim(); ++src) {
          if (left[src] < 0 || m[src] == 0) continue;
          // omega(m, E_rs m) accumulated through the Gram matrix
          for (int row = 0; row < mod.dim(); ++row)
            if (m[row] != 0) acc += m[row] * quad.omega(row, left[src]) * m[src];
        }
        f(s, r) = acc;
      }
    out.push_back(std::move(f));
  }
  return out;
}

struct ExtractedQuiver {
  Quiver quiver;
  IntVec alpha;
  Weight lambda;
  SubBimodule lagrangian;
};

// Every quadruple is equivalent to quiver data: choose a maximal isotropic S
// and read the quiver off its isotypic multiplicities. An arrow a: i -> j
// corresponds to the simple X_j (x) X_i^*, so Rep(Q, alpha)'s component for
// a is Mat(alpha_j x alpha_i).
inline ExtractedQuiver quadruple_to_quiver(const Quadruple& quad) {
  validate_quadruple(quad);
  SubBimodule s = maximal_isotropic(quad.module, quad.omega);
  int r = quad.algebra.num_blocks();
  std::vector<std::pair<int, int>> arrows;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      int count = s.mult_basis[j][i].cols();  // multiplicity of X_j (x) X_i^* in S
      for (int k = 0; k < count; ++k) arrows.emplace_back(i, j);
    }
  ExtractedQuiver out{Quiver::from_edges(r, arrows), IntVec{}, Weight{}, std::move(s)};
  for (int b : quad.algebra.blocks) out.alpha.push_back(b);
  out.lambda = quad.trace.block_scalars;
  return out;
}

// The quadruple (Endom(alpha), Rep(doubled Q, alpha), omega_alpha,
// zeta_lambda). Also reports which component copy each doubled arrow uses.
struct QuiverQuadruple {
  Quadruple quad;
  std::vector<int> arrow_copy;  // per doubled arrow: copy index inside its component
};

inline QuiverQuadruple make_quadruple(const Quiver& q, const IntVec& alpha, const Weight& lambda) {
  check_dim_vector(q, alpha, "make_quadruple");
  check_vertex_count(q, lambda, "make_quadruple");
  for (auto a : alpha)
    if (a == 0)
      throw std::invalid_argument("make_quadruple: alpha must be sincere (drop unused vertices)");
  SemisimpleAlgebra alg;
  for (auto a : alpha) alg.blocks.push_back(static_cast<int>(a));
  int n = q.size();
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  DoubledQuiver dq(q);
  std::vector<int> copy_of(dq.num_arrows());
  for (int a = 0; a < dq.num_arrows(); ++a) {
    int i = dq.head(a), j = dq.tail(a);  // component Mat(alpha_i x alpha_j) = X_i (x) X_j^*
    copy_of[a] = mult[i][j]++;
  }
  Bimodule mod(alg, mult);
  RatMat g(mod.dim(), mod.dim());
  int m = q.num_arrows();
  for (int a = 0; a < m; ++a) {
    int i = q.arrows()[a].tail, j = q.arrows()[a].head;
    int ca = copy_of[a], cas = copy_of[a + m];
    // omega(x, y) = sum_a tr(x_{a*} y_a) - tr(x_a y_{a*})
    for (int rr = 0; rr < alpha[i]; ++rr)
      for (int ss = 0; ss < alpha[j]; ++ss) {
        int star_slot = mod.index(i, j, cas, rr, ss);   // x_{a*} entry (rr,ss)
        int fwd_slot = mod.index(j, i, ca, ss, rr);     // y_a entry (ss,rr)
        g(star_slot, fwd_slot) += 1;
        g(fwd_slot, star_slot) -= 1;
      }
  }
  QuiverQuadruple out;
  out.quad = Quadruple{std::move(alg), std::move(mod), std::move(g), TraceFunction{lambda}};
  out.arrow_copy = std::move(copy_of);
  return out;
}

// Standard balanced symplectic Gram for a bimodule with symmetric
// multiplicities and even diagonal: copy t of (i,j) pairs copy t of (j,i)
// for i < j, and copy t pairs copy t + m/2 on the diagonal.
inline RatMat standard_gram(const Bimodule& m) {
  int r = m.algebra().num_blocks();
  RatMat g(m.dim(), m.dim());
  for (int i = 0; i < r; ++i) {
    int ai = m.algebra().blocks[i];
    for (int j = i; j < r; ++j) {
      int aj = m.algebra().blocks[j];
      if (i < j) {
        if (m.mult(i, j) != m.mult(j, i))
          throw std::invalid_argument("standard_gram: asymmetric multiplicities");
        for (int t = 0; t < m.mult(i, j); ++t)
          for (int rr = 0; rr < ai; ++rr)
            for (int ss = 0; ss < aj; ++ss) {
              g(m.index(i, j, t, rr, ss), m.index(j, i, t, ss, rr)) += 1;
              g(m.index(j, i, t, ss, rr), m.index(i, j, t, rr, ss)) -= 1;
            }
      } else {
        if (m.mult(i, i) % 2) throw std::invalid_argument("standard_gram: odd diagonal multiplicity");
        int half = m.mult(i, i) / 2;
        for (int t = 0; t < half; ++t)
          for (int rr = 0; rr < ai; ++rr)
            for (int ss = 0; ss < ai; ++ss) {
              g(m.index(i, i, t, rr, ss), m.index(i, i, t + half, ss, rr)) += 1;
              g(m.index(i, i, t + half, ss, rr), m.index(i, i, t, rr, ss)) -= 1;
            }
      }
    }
  }
  return g;
}

}  // namespace nquiver
