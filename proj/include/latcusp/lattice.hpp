#pragma once

// Lattices as integer Gram matrices with an ordered summand structure,
// plus the constructions attached to a rank-1 primitive isotropic
// sublattice: divisibility, the orthogonal-quotient lattice and bounded
// enumeration of isotropic lines.

#include <optional>
#include <string>
#include <vector>

#include "latcusp/matrix.hpp"
#include "latcusp/snf.hpp"

namespace latcusp {

struct Summand {
  enum class Kind { U, E8, A2, Diag, Gram };
  Kind kind = Kind::U;
  int sign = +1;        // required for E8 / A2
  IntVec entries;       // Diag
  IntMat custom;        // Gram
  // filled by build_lattice
  size_t offset = 0;
  size_t rank = 0;
};

struct Lattice {
  IntMat gram;
  std::vector<Summand> summands;
  int sig_pos = 0;
  int sig_neg = 0;
  bool even = false;

  size_t rank() const { return gram.rows(); }

  Rat pair(const RatVec& v, const RatVec& w) const { return pair_with(gram, v, w); }
  Int pair(const IntVec& v, const IntVec& w) const {
    Int acc;
    for (size_t i = 0; i < rank(); ++i) {
      if (v[i] == 0) continue;
      Int line;
      for (size_t j = 0; j < rank(); ++j) line += gram(i, j) * w[j];
      acc += v[i] * line;
    }
    return acc;
  }
  Rat norm(const RatVec& v) const { return pair(v, v); }
  Int norm(const IntVec& v) const { return pair(v, v); }

  // Coordinate range [offset, offset+rank) of summand i.
  std::pair<size_t, size_t> summand_span(size_t i) const {
    return {summands[i].offset, summands[i].offset + summands[i].rank};
  }
};

// Gram matrices of the named blocks (positive-definite root lattices;
// the sign argument rescales by -1).
IntMat gram_U();
IntMat gram_E8(int sign);
IntMat gram_A2(int sign);

Lattice build_lattice(const std::vector<Summand>& spec);

// Gram inverse; its columns are the dual basis in lattice coordinates.
RatMat dual_coords(const Lattice& l);

bool is_primitive_isotropic(const Lattice& l, const IntVec& v);

// gcd of the pairings of v with the basis; v must be primitive.
Int divisibility(const Lattice& l, const IntVec& v);

struct IsotropicLine {
  IntVec generator;
  Int div;
};

// Validates primitivity and isotropy.
IsotropicLine make_isotropic_line(const Lattice& l, const IntVec& generator);

// L(I) = (I-perp cap L / I) tensor I, with a fixed generator of I.
struct QuotientLattice {
  IsotropicLine line;
  Lattice base;       // the induced form, signature (1, b-1)
  IntMat perp_basis;  // n x (n-1), basis of I-perp cap L
  IntMat lift;        // n x (n-2), quotient basis -> representatives in I-perp cap L
  RatMat project;     // (n-2) x n, defined on (I-perp)_Q

  size_t quotient_rank() const { return lift.cols(); }
  RatVec lift_vec(const RatVec& quotient_coords) const;
  RatVec project_vec(const RatVec& ambient) const;  // ambient must lie in (I-perp)_Q
};

QuotientLattice quotient_L_I(const Lattice& l, const IsotropicLine& line);

// All primitive isotropic lines with coordinates in [-box, box], one
// representative per +/- pair (first nonzero coordinate positive),
// lexicographic order. Throws BudgetError when the coordinate box exceeds
// max_candidates points.
std::vector<IsotropicLine> enumerate_isotropic(const Lattice& l, long box,
                                               std::optional<Int> div_filter = std::nullopt,
                                               long max_candidates = 100000000L);

}  // namespace latcusp
