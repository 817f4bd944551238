#pragma once

// Decision procedures at a cusp: the translation lattice U(I)_Z inside
// L(I)_Q, irregularity of 0-dimensional cusps with a unique witness coset,
// the three-case classification of U(I)_Z^star, irregular rays, and
// 1-dimensional cusps by reduction to an adjacent 0-dimensional one.

#include <memory>
#include <optional>
#include <string>

#include "latcusp/groups.hpp"

namespace latcusp {

struct SearchLimits {
  long disc_enum_limit = 1 << 16;  // |A_{L(I)}| guard when computing U(I)_Z
  int brute_rank_limit = 14;       // 2^b coset sweep
  int pruned_rank_limit = 26;
  long pruned_survivor_limit = 1 << 16;
};

// U(I)_Z as a lattice between L(I) and L(I)-dual, in L(I)-coordinates.
struct TranslationLattice {
  std::shared_ptr<const QuotientLattice> quotient;
  RatMat basis;      // columns span U(I)_Z in L(I)-coordinates
  RatMat basis_inv;  // cached
  Int index = 1;     // [U(I)_Z : L(I)]

  size_t rank() const { return basis.rows(); }
  RatVec to_ambient_lift(const RatVec& u_coords) const;  // lift to (I-perp)_Q
  RatVec to_LI(const RatVec& u_coords) const;
  RatVec from_LI(const RatVec& li_coords) const;
};

TranslationLattice compute_U_I_Z(const Lattice& l, const GroupSpec& spec,
                                 const IsotropicLine& line, const SearchLimits& limits = {});

enum class CuspStatus { Regular, Irregular, Unknown };

struct CuspVerdict {
  CuspStatus status = CuspStatus::Unknown;
  std::string reason;
  IsotropicLine line;
  Int div = 0;
  IntVec disc_LI_factors;  // invariant factors of A_{L(I)}
  std::shared_ptr<const QuotientLattice> quotient;
  std::shared_ptr<const TranslationLattice> translations;  // absent on fast paths
  std::optional<RatVec> witness;                           // L(I)-coords, 2w in U(I)_Z
  std::optional<RatMat> u_prime_basis;                     // U(I)_Z' in L(I)-coords

  bool irregular() const { return status == CuspStatus::Irregular; }
};

// Brute-force coset sweep over (1/2) U(I)_Z / U(I)_Z.
CuspVerdict irregular_0dim(const Lattice& l, const GroupSpec& spec, const IsotropicLine& line,
                           const SearchLimits& limits = {});

// Same verdict through a mod-2 linear prefilter on the candidate sweep.
CuspVerdict search_pruned(const Lattice& l, const GroupSpec& spec, const IsotropicLine& line,
                          const SearchLimits& limits = {});

// Chooses brute or pruned from the rank guards.
CuspVerdict decide_0dim(const Lattice& l, const GroupSpec& spec, const IsotropicLine& line,
                        const SearchLimits& limits = {});

enum class UStarClass { MinusIdCase, TrivialCase, MinusEwCase };
UStarClass u_star_class(const Lattice& l, const GroupSpec& spec, const CuspVerdict& verdict);

struct RayClass {
  RatVec generator;  // primitive generator of (R sigma) cap U(I)_Z, L(I)-coordinates
  bool regular = true;
};

// sigma is given in L(I)-coordinates and must lie in the closed positive
// cone ((sigma, sigma) >= 0) unless assume_in_cone is set.
RayClass irregular_ray(const Lattice& l, const GroupSpec& spec, const CuspVerdict& verdict,
                       const RatVec& sigma, bool assume_in_cone = false);

struct OneDimVerdict {
  CuspStatus status = CuspStatus::Unknown;
  CuspVerdict zero_dim;               // verdict at the chosen I inside J
  RayClass ray;                       // the isotropic ray of J in L(I)
  std::optional<RatVec> u_J_generator;  // generator of U(J)_Z in L(I)-coords

  bool irregular() const { return status == CuspStatus::Irregular; }
};

OneDimVerdict irregular_1dim(const Lattice& l, const GroupSpec& spec, const IntVec& j1,
                             const IntVec& j2, const SearchLimits& limits = {});

}  // namespace latcusp
