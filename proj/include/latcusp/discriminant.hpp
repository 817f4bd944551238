#pragma once

// The discriminant group A_L = L-dual / L in invariant-factor form, its
// Q/2Z-valued quadratic form for even lattices, the two group shapes
// compatible with irregular cusps of the stable orthogonal group, and the
// induced action of an integral isometry.

#include <vector>

#include "latcusp/lattice.hpp"

namespace latcusp {

struct DiscGroup {
  IntVec factors;                  // invariant factors > 1, ascending divisibility chain
  std::vector<RatVec> generators;  // lifts in L-dual, coordinates in the L-basis
  Int order = 1;
  bool even = false;

  // decomposition data for expressing arbitrary dual vectors; only present
  // when the group was computed for a whole lattice (not a summand block)
  bool can_decompose = false;
  IntMat gram;
  IntMat snf_left;
  IntVec snf_diag;
  std::vector<size_t> live;  // diag indices with entry > 1

  bool trivial() const { return factors.empty(); }
  bool two_elementary() const {
    for (const Int& d : factors)
      if (d != 2) return false;
    return true;
  }
  Int exponent() const { return factors.empty() ? Int(1) : factors.back(); }

  // Exponent tuple of a dual vector's class, entries reduced into [0, d_i).
  IntVec decompose(const RatVec& dual_vec) const;
  // Lift of an exponent tuple back into L-dual.
  RatVec element(const IntVec& exponents) const;
};

DiscGroup disc_group(const Lattice& l);

// Discriminant group of the orthogonal block spanned by the given summands,
// with generator lifts placed in full L-coordinates.
DiscGroup sub_disc_group(const Lattice& l, const std::vector<size_t>& summand_indices);

// Quadratic/bilinear values of the discriminant form (L must be even).
struct DiscFormValue {
  Rat q;  // in [0, 2)
  Rat b;  // in [0, 1)
};
Rat disc_q(const Lattice& l, const DiscGroup& a, const IntVec& exponents);
Rat disc_b(const Lattice& l, const DiscGroup& a, const IntVec& x, const IntVec& y);
DiscFormValue disc_form(const Lattice& l, const DiscGroup& a, const IntVec& exponents);

// x has q(x) = 0; a form with no nonzero isotropic element forces every
// primitive isotropic line of L to have divisibility one.
bool disc_form_is_anisotropic(const Lattice& l, const DiscGroup& a, long enum_limit = 65536);

enum class DiscPattern { TwoElementary, Z8Plus2s, Z4SqPlus2s };
bool matches_pattern(const DiscGroup& a, DiscPattern p);
// Either of the two shapes compatible with an irregular cusp of the stable group.
bool matches_irregular_shape(const DiscGroup& a);

// Image of each generator under an integral isometry, as exponent tuples.
struct DiscAction {
  std::vector<IntVec> images;
  bool is_id = false;
  bool is_minus_id = false;
};
enum class DiscActionClass { Id, MinusId, Other };
DiscAction induced_disc_action(const Lattice& l, const DiscGroup& a, const RatMat& gamma);
DiscActionClass classify_disc_action(const DiscAction& act);

// gamma * g ≡ sign * g mod L for every generator g of a.
bool acts_as_scalar(const Lattice& l, const DiscGroup& a, const RatMat& gamma, int sign);

}  // namespace latcusp
