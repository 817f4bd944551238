#pragma once

// Vanishing-order arithmetic on abstract finite Fourier supports over a
// hyperbolic index lattice: nu_sigma, its geometric half at irregular rays,
// the parity law, the pluricanonical-order relation and the low-slope
// checker. No analytic modular forms appear; supports are finite by fiat.

#include <optional>
#include <string>

#include "latcusp/lattice.hpp"

namespace latcusp {

struct FourierTerm {
  RatVec l;            // dual vector, rational coords in the index-lattice basis
  bool active = true;  // coefficient-nonzero flag
};

struct FourierSupport {
  Lattice index_lattice;  // U(I)_Z with its hyperbolic form, signature (1, b-1)
  std::vector<FourierTerm> terms;
  long weight = 0;
  std::optional<int> chi_sign;  // value of chi(-E_w) at an irregular cusp
};

// Validates: signature (1, b-1); every active term lies in the dual lattice
// and in a common closed positive cone (pairwise pairings >= 0, norms >= 0).
FourierSupport make_support(const IntMat& gram, std::vector<FourierTerm> terms, long weight,
                            std::optional<int> chi_sign = std::nullopt);

bool in_common_closed_cone(const Lattice& hyp, const RatVec& x, const RatVec& y);

struct RayData {
  IntVec w_sigma;  // generator of (ray) cap U(I)_Z, primitive
  bool regular = true;

  // Generator of (ray) cap U(I)_Z'; equals w_sigma when regular and
  // w_sigma / 2 when irregular.
  RatVec w_sigma_prime() const;
};

// Saturates the generator and checks it pairs nonnegatively with every
// active support term (common cone).
RayData make_ray_data(const FourierSupport& f, const IntVec& generator, bool regular);

// min (l, w_sigma) over the active support; throws SpecError when the
// support is empty (the zero form has no vanishing order).
Int nu_sigma(const FourierSupport& f, const RayData& ray);

// nu_sigma for a regular ray, nu_sigma / 2 for an irregular one. Also
// computed through w_sigma_prime; the two routes must agree exactly.
Rat nu_geom(const FourierSupport& f, const RayData& ray);
Rat nu_geom_via_prime(const FourierSupport& f, const RayData& ray);

// combined_sign = chi(-E_w) * (-1)^k. With sign -1 every support pairing
// against w_sigma must be odd; with sign +1 every pairing must be even.
struct ParityReport {
  bool consistent = true;
  std::vector<size_t> violations;  // indices of offending terms
};
ParityReport parity_check(const FourierSupport& f, const RayData& ray, int combined_sign);

// nu_geom - m; negative values mean the m-canonical form has a pole.
Rat pluricanonical_order(const Rat& nu_geom_value, long m);

// nu_sigma >= m at a regular ray, nu_sigma >= 2m at an irregular one.
bool extends_over_boundary(const Int& nu_sigma_value, bool ray_regular, long m);

// True iff no active support vector is isotropic.
bool is_cusp_support(const FourierSupport& f);

// Strict slope conditions: interior and regular slopes > 1/b, irregular
// slopes > 2/b, and the form must be a cusp form. Slopes are the ratios
// nu/k supplied by the caller. The criterion assumes b >= 9; smaller b
// only produces a warning.
struct SlopeCheckResult {
  bool pass = false;
  std::vector<std::string> failures;
  std::string warning;
};
SlopeCheckResult low_slope_check(long k, long b, const RatVec& interior_slopes,
                                 const RatVec& regular_ray_slopes,
                                 const RatVec& irregular_ray_slopes, bool cusp_flag);

}  // namespace latcusp
