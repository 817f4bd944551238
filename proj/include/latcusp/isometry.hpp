#pragma once

// Exact isometries of L_Q in the lattice basis: Eichler transvections,
// group operations, lattice preservation and the O+ test via reflection
// factorization.

#include "latcusp/lattice.hpp"

namespace latcusp {

struct Isometry {
  RatMat mat;
  int det_sign = 1;  // +1 or -1; exact
};

// Verifies mat^T * gram * mat = gram and computes the determinant sign.
Isometry make_isometry(const Lattice& l, RatMat mat);

bool is_form_preserving(const Lattice& l, const RatMat& mat);

Isometry identity_isometry(const Lattice& l);
Isometry minus_identity(const Lattice& l);

// E_{m (x) l}(v) = v - (m~, v) l + (l, v) m~ - 1/2 (m, m)(l, v) l.
// l must be isotropic and m_lift orthogonal to l; the result fixes l,
// has determinant +1, and depends on m_lift only modulo Q*l.
Isometry eichler(const Lattice& l, const IntVec& iso, const RatVec& m_lift);

Isometry compose(const Lattice& l, const Isometry& a, const Isometry& b);
Isometry inverse(const Lattice& l, const Isometry& a);
Isometry negate(const Lattice& l, const Isometry& a);

// Reflection in an anisotropic vector v.
Isometry reflection(const Lattice& l, const RatVec& v);

// True iff the matrix is integral (an integral isometry automatically has
// an integral inverse because its determinant is +-1).
bool preserves_lattice(const Lattice& l, const Isometry& a);

// Cartan-Dieudonne factorization over Q; the vectors returned generate a
// as a product of reflections (at most 2 * rank of them).
std::vector<RatVec> reflection_factorization(const Lattice& l, const Isometry& a);

// For signature (2, b): true iff the factorization uses an even number of
// positive-norm reflection vectors. -id and every Eichler transvection
// land in O+ under this convention.
bool in_O_plus(const Lattice& l, const Isometry& a);

}  // namespace latcusp
