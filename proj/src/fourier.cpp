#include "latcusp/fourier.hpp"

namespace latcusp {

namespace {

bool vec_is_zero(const RatVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

// Both vectors already have norm >= 0. In Lorentzian signature two nonzero
// causal vectors share a closed cone iff their pairing is positive, or zero
// with both isotropic and positively proportional.
bool in_common_closed_cone(const Lattice& hyp, const RatVec& x, const RatVec& y) {
  if (vec_is_zero(x) || vec_is_zero(y)) return true;
  Rat p = hyp.pair(x, y);
  if (p > 0) return true;
  if (p < 0) return false;
  if (hyp.norm(x) != 0 || hyp.norm(y) != 0) return false;  // timelike _|_ causal is impossible
  // isotropic and orthogonal: proportional; same cone means a positive ratio
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0 && y[i] == 0) continue;
    if (x[i] == 0 || y[i] == 0) return false;
    return (x[i] > 0) == (y[i] > 0);
  }
  return true;
}

FourierSupport make_support(const IntMat& gram, std::vector<FourierTerm> terms, long weight,
                            std::optional<int> chi_sign) {
  if (!gram.is_symmetric()) throw SpecError("support: index lattice gram must be symmetric");
  Summand s;
  s.kind = Summand::Kind::Gram;
  s.custom = gram;
  FourierSupport f;
  f.index_lattice = build_lattice({s});
  if (f.index_lattice.sig_pos != 1)
    throw SpecError("support: index lattice must have signature (1, b-1)");
  if (weight < 0) throw SpecError("support: weight must be nonnegative");
  if (chi_sign && *chi_sign != 1 && *chi_sign != -1)
    throw SpecError("support: chi sign must be +1 or -1");
  f.weight = weight;
  f.chi_sign = chi_sign;

  const size_t n = gram.rows();
  for (const FourierTerm& t : terms) {
    if (t.l.size() != n) throw SpecError("support: term has wrong dimension");
    if (!t.active) continue;
    RatVec gl = to_rat(gram) * t.l;
    if (!all_integral(gl)) throw SpecError("support: term is not in the dual lattice");
    if (f.index_lattice.norm(t.l) < 0)
      throw SpecError("support: term has negative norm, outside the closed cone");
  }
  for (size_t i = 0; i < terms.size(); ++i)
    for (size_t j = i + 1; j < terms.size(); ++j) {
      if (!terms[i].active || !terms[j].active) continue;
      if (!in_common_closed_cone(f.index_lattice, terms[i].l, terms[j].l))
        throw SpecError("support: terms lie in opposite cones");
    }
  f.terms = std::move(terms);
  return f;
}

RatVec RayData::w_sigma_prime() const {
  RatVec out(w_sigma.size());
  for (size_t i = 0; i < w_sigma.size(); ++i) {
    out[i] = Rat(w_sigma[i]);
    if (!regular) out[i] /= 2;
  }
  return out;
}

RayData make_ray_data(const FourierSupport& f, const IntVec& generator, bool regular) {
  if (generator.size() != f.index_lattice.rank())
    throw SpecError("ray: generator has wrong dimension");
  Int g = vec_gcd(generator);
  if (g == 0) throw SpecError("ray: generator is zero");
  RayData r;
  r.w_sigma = generator;
  for (Int& x : r.w_sigma) x /= g;
  r.regular = regular;
  if (f.index_lattice.norm(r.w_sigma) < 0)
    throw SpecError("ray: generator lies outside the closed positive cone");
  RatVec wq = to_rat_vec(r.w_sigma);
  for (const FourierTerm& t : f.terms) {
    if (!t.active) continue;
    if (!in_common_closed_cone(f.index_lattice, t.l, wq))
      throw SpecError("ray: generator lies outside the support cone");
  }
  return r;
}

namespace {

std::optional<Rat> min_pairing(const FourierSupport& f, const RatVec& w) {
  std::optional<Rat> best;
  for (const FourierTerm& t : f.terms) {
    if (!t.active) continue;
    Rat p = f.index_lattice.pair(t.l, w);
    if (!best || p < *best) best = p;
  }
  return best;
}

}  // namespace

Int nu_sigma(const FourierSupport& f, const RayData& ray) {
  auto m = min_pairing(f, to_rat_vec(ray.w_sigma));
  if (!m) throw SpecError("nu_sigma: empty support (identically zero form)");
  return to_int(*m);
}

Rat nu_geom(const FourierSupport& f, const RayData& ray) {
  Rat by_case = Rat(nu_sigma(f, ray));
  if (!ray.regular) by_case /= 2;
  Rat by_prime = nu_geom_via_prime(f, ray);
  if (by_case != by_prime) throw SpecError("internal: nu_geom route disagreement");
  return by_case;
}

Rat nu_geom_via_prime(const FourierSupport& f, const RayData& ray) {
  auto m = min_pairing(f, ray.w_sigma_prime());
  if (!m) throw SpecError("nu_geom: empty support (identically zero form)");
  return *m;
}

ParityReport parity_check(const FourierSupport& f, const RayData& ray, int combined_sign) {
  if (ray.regular) throw SpecError("parity_check applies to irregular rays");
  if (combined_sign != 1 && combined_sign != -1)
    throw SpecError("parity_check: sign must be +1 or -1");
  ParityReport rep;
  RatVec wq = to_rat_vec(ray.w_sigma);
  for (size_t i = 0; i < f.terms.size(); ++i) {
    if (!f.terms[i].active) continue;
    Int p = to_int(f.index_lattice.pair(f.terms[i].l, wq));
    bool even = p % 2 == 0;
    // sign +1: coefficients survive only on (U')-dual, i.e. even pairings;
    // sign -1: only off (U')-dual, i.e. odd pairings.
    bool ok = combined_sign == 1 ? even : !even;
    if (!ok) {
      rep.consistent = false;
      rep.violations.push_back(i);
    }
  }
  return rep;
}

Rat pluricanonical_order(const Rat& nu_geom_value, long m) { return nu_geom_value - Rat(m); }

bool extends_over_boundary(const Int& nu_sigma_value, bool ray_regular, long m) {
  return ray_regular ? nu_sigma_value >= m : nu_sigma_value >= 2 * m;
}

bool is_cusp_support(const FourierSupport& f) {
  for (const FourierTerm& t : f.terms) {
    if (!t.active) continue;
    if (f.index_lattice.norm(t.l) == 0) return false;
  }
  return true;
}

SlopeCheckResult low_slope_check(long k, long b, const RatVec& interior_slopes,
                                 const RatVec& regular_ray_slopes,
                                 const RatVec& irregular_ray_slopes, bool cusp_flag) {
  if (k <= 0 || b <= 0) throw SpecError("low_slope_check: k and b must be positive");
  SlopeCheckResult res;
  if (b < 9) res.warning = "b < 9 is outside the hypothesis of the low-slope criterion";
  if (!cusp_flag) res.failures.push_back("the form is not a cusp form");
  Rat one_over_b = frac(1, b), two_over_b = frac(2, b);
  for (size_t i = 0; i < interior_slopes.size(); ++i)
    if (!(interior_slopes[i] > one_over_b))
      res.failures.push_back("interior slope #" + std::to_string(i) + " = " +
                             rat_to_string(interior_slopes[i]) + " is not > 1/" +
                             std::to_string(b));
  for (size_t i = 0; i < regular_ray_slopes.size(); ++i)
    if (!(regular_ray_slopes[i] > one_over_b))
      res.failures.push_back("regular ray slope #" + std::to_string(i) + " = " +
                             rat_to_string(regular_ray_slopes[i]) + " is not > 1/" +
                             std::to_string(b));
  for (size_t i = 0; i < irregular_ray_slopes.size(); ++i)
    if (!(irregular_ray_slopes[i] > two_over_b))
      res.failures.push_back("irregular ray slope #" + std::to_string(i) + " = " +
                             rat_to_string(irregular_ray_slopes[i]) + " is not > 2/" +
                             std::to_string(b));
  res.pass = res.failures.empty();
  return res;
}

}  // namespace latcusp
