#include "latcusp/snf.hpp"

#include <cstdlib>

namespace latcusp {

namespace {

// Smallest |entry| != 0 in the block with top-left (t,t); ties by (row, col).
bool find_pivot(const IntMat& m, size_t t, size_t& pi, size_t& pj) {
  bool found = false;
  Int best;
  for (size_t i = t; i < m.rows(); ++i)
    for (size_t j = t; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      Int a = abs(m(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SnfDecomposition snf(const IntMat& a) {
  const size_t rows = a.rows(), cols = a.cols();
  IntMat m = a;
  IntMat u = IntMat::identity(rows);
  IntMat v = IntMat::identity(cols);

  const size_t rank_bound = std::min(rows, cols);
  for (size_t t = 0; t < rank_bound; ++t) {
    size_t pi = t, pj = t;
    if (!find_pivot(m, t, pi, pj)) break;
    m.swap_rows(t, pi);
    u.swap_rows(t, pi);
    m.swap_cols(t, pj);
    v.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
        if (q != 0) {
          m.add_row(i, t, -q);
          u.add_row(i, t, -q);
        }
        if (m(i, t) != 0) clean = false;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
        if (q != 0) {
          m.add_col(j, t, -q);
          v.add_col(j, t, -q);
        }
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) {
        size_t pi2 = t, pj2 = t;
        find_pivot(m, t, pi2, pj2);
        m.swap_rows(t, pi2);
        u.swap_rows(t, pi2);
        m.swap_cols(t, pj2);
        v.swap_cols(t, pj2);
        continue;
      }
      // Row and column of the pivot are clear; force the divisibility chain.
      bool divides_rest = true;
      for (size_t i = t + 1; i < rows && divides_rest; ++i)
        for (size_t j = t + 1; j < cols && divides_rest; ++j)
          if (m(i, j) % m(t, t) != 0) {
            m.add_row(t, i, 1);
            u.add_row(t, i, 1);
            divides_rest = false;
          }
      if (divides_rest) break;
    }
    if (m(t, t) < 0) {
      m.scale_row(t, -1);
      u.scale_row(t, -1);
    }
  }

  SnfDecomposition out;
  out.left = std::move(u);
  out.right = std::move(v);
  out.diag.resize(rank_bound);
  for (size_t i = 0; i < rank_bound; ++i) out.diag[i] = m(i, i);
  return out;
}

std::optional<IntVec> solve_in_lattice(const IntMat& a, const IntVec& b) {
  if (b.size() != a.rows()) throw SpecError("solve_in_lattice: dimension mismatch");
  SnfDecomposition s = snf(a);
  IntVec ub = s.left * b;
  IntVec y(a.cols(), Int(0));
  for (size_t i = 0; i < a.rows(); ++i) {
    Int rhs = ub[i];
    if (i < s.diag.size() && s.diag[i] != 0) {
      if (rhs % s.diag[i] != 0) return std::nullopt;
      y[i] = rhs / s.diag[i];
    } else if (rhs != 0) {
      return std::nullopt;
    }
  }
  return s.right * y;
}

IntMat integer_kernel(const IntMat& a) {
  SnfDecomposition s = snf(a);
  std::vector<size_t> free_cols;
  for (size_t j = 0; j < a.cols(); ++j)
    if (j >= s.diag.size() || s.diag[j] == 0) free_cols.push_back(j);
  IntMat k(a.cols(), free_cols.size());
  for (size_t idx = 0; idx < free_cols.size(); ++idx)
    for (size_t i = 0; i < a.cols(); ++i) k(i, idx) = s.right(i, free_cols[idx]);
  return k;
}

CongruentDiagonalization congruent_diagonalize(const RatMat& g) {
  if (!g.is_symmetric()) throw SpecError("congruent_diagonalize: matrix not symmetric");
  const size_t n = g.rows();
  RatMat m = g;
  RatMat p = RatMat::identity(n);

  for (size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      size_t j = k + 1;
      while (j < n && m(j, j) == 0) ++j;
      if (j < n) {
        m.swap_rows(k, j);
        m.swap_cols(k, j);
        p.swap_cols(k, j);
      } else {
        // All remaining diagonal entries vanish; pull in an off-diagonal one.
        size_t r = k, c = k;
        bool found = false;
        for (size_t i = k; i < n && !found; ++i)
          for (size_t jj = i + 1; jj < n && !found; ++jj)
            if (m(i, jj) != 0) {
              r = i;
              c = jj;
              found = true;
            }
        if (!found) throw SpecError("congruent_diagonalize: degenerate form");
        // col r += col c (and symmetric row op) makes (r,r) = 2*m(r,c) != 0.
        m.add_col(r, c, Rat(1));
        m.add_row(r, c, Rat(1));
        p.add_col(r, c, Rat(1));
        if (r != k) {
          m.swap_rows(k, r);
          m.swap_cols(k, r);
          p.swap_cols(k, r);
        }
      }
    }
    if (m(k, k) == 0) throw SpecError("congruent_diagonalize: degenerate form");
    for (size_t j = k + 1; j < n; ++j) {
      if (m(k, j) == 0) continue;
      Rat f = -m(k, j) / m(k, k);
      m.add_col(j, k, f);
      m.add_row(j, k, f);
      p.add_col(j, k, f);
    }
  }

  CongruentDiagonalization out;
  out.entries.resize(n);
  for (size_t i = 0; i < n; ++i) out.entries[i] = m(i, i);
  out.transform = std::move(p);
  return out;
}

std::pair<int, int> signature(const RatMat& g) {
  CongruentDiagonalization d = congruent_diagonalize(g);
  int pos = 0, neg = 0;
  for (const Rat& e : d.entries) {
    if (e > 0)
      ++pos;
    else
      ++neg;
  }
  return {pos, neg};
}

}  // namespace latcusp
