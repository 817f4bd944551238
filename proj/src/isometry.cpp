#include "latcusp/isometry.hpp"

#include <cassert>

namespace latcusp {

bool is_form_preserving(const Lattice& l, const RatMat& mat) {
  if (mat.rows() != l.rank() || mat.cols() != l.rank()) return false;
  return mat.transpose() * to_rat(l.gram) * mat == to_rat(l.gram);
}

namespace {

int det_sign_of(const RatMat& mat) {
  Rat d = det(mat);
  if (d == 1) return 1;
  if (d == -1) return -1;
  throw SpecError("isometry determinant is not +-1");
}

}  // namespace

Isometry make_isometry(const Lattice& l, RatMat mat) {
  if (!is_form_preserving(l, mat)) throw SpecError("matrix does not preserve the form");
  int ds = det_sign_of(mat);
  return Isometry{std::move(mat), ds};
}

Isometry identity_isometry(const Lattice& l) {
  return Isometry{RatMat::identity(l.rank()), 1};
}

Isometry minus_identity(const Lattice& l) {
  return Isometry{-RatMat::identity(l.rank()), l.rank() % 2 == 0 ? 1 : -1};
}

Isometry eichler(const Lattice& l, const IntVec& iso, const RatVec& m_lift) {
  const size_t n = l.rank();
  if (iso.size() != n || m_lift.size() != n) throw SpecError("eichler: dimension mismatch");
  if (l.norm(iso) != 0) throw SpecError("eichler: l must be isotropic");
  RatVec iso_q = to_rat_vec(iso);
  if (l.pair(m_lift, iso_q) != 0) throw SpecError("eichler: lift must be orthogonal to l");

  Rat mm = l.pair(m_lift, m_lift);
  RatVec gm(n, Rat(0)), gl(n, Rat(0));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) {
      gm[j] += m_lift[i] * Rat(l.gram(i, j));
      gl[j] += Rat(iso[i]) * Rat(l.gram(i, j));
    }

  RatMat e(n, n);
  for (size_t j = 0; j < n; ++j) {
    Rat cl = -gm[j] - mm / 2 * gl[j];  // coefficient of l in the image of e_j
    for (size_t i = 0; i < n; ++i) {
      Rat entry = cl * Rat(iso[i]) + gl[j] * m_lift[i];
      if (i == j) entry += 1;
      e(i, j) = entry;
    }
  }
#ifndef NDEBUG
  assert(is_form_preserving(l, e));
#endif
  return Isometry{std::move(e), 1};
}

Isometry compose(const Lattice& l, const Isometry& a, const Isometry& b) {
  if (a.mat.cols() != b.mat.rows() || a.mat.rows() != l.rank())
    throw SpecError("compose: dimension mismatch");
  Isometry r{a.mat * b.mat, a.det_sign * b.det_sign};
#ifndef NDEBUG
  assert(is_form_preserving(l, r.mat));
#endif
  return r;
}

Isometry inverse(const Lattice& l, const Isometry& a) {
  (void)l;
  return Isometry{inverse(a.mat), a.det_sign};
}

Isometry negate(const Lattice& l, const Isometry& a) {
  int flip = l.rank() % 2 == 0 ? 1 : -1;
  return Isometry{-a.mat, a.det_sign * flip};
}

Isometry reflection(const Lattice& l, const RatVec& v) {
  Rat vv = l.pair(v, v);
  if (vv == 0) throw SpecError("reflection: vector must be anisotropic");
  const size_t n = l.rank();
  RatVec gv(n, Rat(0));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) gv[j] += v[i] * Rat(l.gram(i, j));
  RatMat m = RatMat::identity(n);
  for (size_t j = 0; j < n; ++j) {
    Rat f = 2 * gv[j] / vv;
    for (size_t i = 0; i < n; ++i) m(i, j) -= f * v[i];
  }
  return Isometry{std::move(m), -1};
}

bool preserves_lattice(const Lattice& l, const Isometry& a) {
  (void)l;
  return is_integral(a.mat);
}

namespace {

// v := a*x - x etc. helpers on rational vectors
RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
bool is_zero(const RatVec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

// Apply the reflection in v on the left of m, in place.
void apply_reflection(const Lattice& l, const RatVec& v, RatMat& m) {
  const size_t n = l.rank();
  Rat vv = l.pair(v, v);
  RatVec gv(n, Rat(0));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) gv[j] += v[i] * Rat(l.gram(i, j));
  for (size_t c = 0; c < m.cols(); ++c) {
    Rat dot;
    for (size_t i = 0; i < n; ++i) dot += gv[i] * m(i, c);
    Rat f = 2 * dot / vv;
    for (size_t i = 0; i < n; ++i) m(i, c) -= f * v[i];
  }
}

}  // namespace

std::vector<RatVec> reflection_factorization(const Lattice& l, const Isometry& a) {
  const size_t n = l.rank();
  RatMat m = a.mat;
  std::vector<RatVec> span;  // basis of the subspace still to be handled
  for (size_t j = 0; j < n; ++j) {
    RatVec e(n, Rat(0));
    e[j] = 1;
    span.push_back(std::move(e));
  }
  std::vector<RatVec> refs;

  while (!span.empty()) {
    // Anisotropic vector of the current subspace: a basis vector or a sum
    // of two of them (one exists since the subspace is nondegenerate).
    RatVec y;
    bool found = false;
    for (const RatVec& s : span)
      if (l.pair(s, s) != 0) {
        y = s;
        found = true;
        break;
      }
    if (!found) {
      for (size_t i = 0; i < span.size() && !found; ++i)
        for (size_t j = i + 1; j < span.size() && !found; ++j) {
          RatVec cand = add(span[i], span[j]);
          if (l.pair(cand, cand) != 0) {
            y = cand;
            found = true;
          }
        }
    }
    if (!found) throw SpecError("internal: reflection factorization on a degenerate subspace");

    RatVec z = m * y;
    RatVec v = sub(z, y);
    if (!is_zero(v)) {
      if (l.pair(v, v) != 0) {
        apply_reflection(l, v, m);
        refs.push_back(v);
      } else {
        // z - y isotropic forces z + y anisotropic; two reflections send z to y.
        RatVec w = add(z, y);
        apply_reflection(l, w, m);
        apply_reflection(l, y, m);
        refs.push_back(w);
        refs.push_back(y);
      }
    }

    // Restrict to the orthogonal complement of y inside the subspace.
    size_t p = span.size();
    RatVec pairings(span.size());
    for (size_t i = 0; i < span.size(); ++i) {
      pairings[i] = l.pair(y, span[i]);
      if (p == span.size() && pairings[i] != 0) p = i;
    }
    if (p == span.size()) throw SpecError("internal: pivot vanished in factorization");
    std::vector<RatVec> next;
    for (size_t i = 0; i < span.size(); ++i) {
      if (i == p) continue;
      RatVec s = span[i];
      if (pairings[i] != 0) {
        Rat f = pairings[i] / pairings[p];
        for (size_t k = 0; k < n; ++k) s[k] -= f * span[p][k];
      }
      next.push_back(std::move(s));
    }
    span = std::move(next);
  }

  if (m != RatMat::identity(n))
    throw SpecError("internal: reflection factorization did not reach the identity");
  return refs;
}

bool in_O_plus(const Lattice& l, const Isometry& a) {
  if (l.sig_pos != 2) throw SpecError("in_O_plus expects signature (2, b)");
  std::vector<RatVec> refs = reflection_factorization(l, a);
  int positive = 0;
  for (const RatVec& v : refs)
    if (l.pair(v, v) > 0) ++positive;
  return positive % 2 == 0;
}

}  // namespace latcusp
