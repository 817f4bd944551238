#include "latcusp/cusps.hpp"

#include <algorithm>
#include <cstdint>

namespace latcusp {

namespace {

// Basis and index of Z^b + sum_k Z*gens[k] over Z^b.
std::pair<RatMat, Int> lattice_from_generators(size_t b, const std::vector<RatVec>& gens) {
  Int d = 1;
  for (const RatVec& g : gens) d = lcm(d, common_denominator(g));
  IntMat m(b, b + gens.size());
  for (size_t i = 0; i < b; ++i) m(i, i) = d;
  for (size_t k = 0; k < gens.size(); ++k)
    for (size_t i = 0; i < b; ++i) {
      Rat scaled = Rat(d) * gens[k][i];
      m(i, b + k) = to_int(scaled);
    }
  SnfDecomposition s = snf(m);
  Int prod = 1;
  for (size_t i = 0; i < b; ++i) {
    if (s.diag[i] == 0) throw SpecError("internal: generator lattice lost full rank");
    prod *= s.diag[i];
  }
  IntMat uinv = to_int(inverse(to_rat(s.left)));
  RatMat basis(b, b);
  for (size_t j = 0; j < b; ++j)
    for (size_t i = 0; i < b; ++i) basis(i, j) = frac(uinv(i, j) * s.diag[j], d);
  Int dpow = 1;
  for (size_t i = 0; i < b; ++i) dpow *= d;
  if (dpow % prod != 0) throw SpecError("internal: non-integral lattice index");
  return {basis, dpow / prod};
}

}  // namespace

RatVec TranslationLattice::to_LI(const RatVec& u_coords) const { return basis * u_coords; }

RatVec TranslationLattice::from_LI(const RatVec& li_coords) const { return basis_inv * li_coords; }

RatVec TranslationLattice::to_ambient_lift(const RatVec& u_coords) const {
  return quotient->lift_vec(to_LI(u_coords));
}

TranslationLattice compute_U_I_Z(const Lattice& l, const GroupSpec& spec,
                                 const IsotropicLine& line, const SearchLimits& limits) {
  TranslationLattice t;
  t.quotient = std::make_shared<QuotientLattice>(quotient_L_I(l, line));
  const size_t b = t.quotient->quotient_rank();

  if (spec.kind == GroupSpec::Kind::Stable) {
    t.basis = RatMat::identity(b);
    t.basis_inv = RatMat::identity(b);
    t.index = 1;
    return t;
  }

  // A transvection in the group pairs integrally with L(I), so U(I)_Z sits
  // between L(I) and its dual: sweep the finite quotient.
  DiscGroup dg = disc_group(t.quotient->base);
  if (dg.order > limits.disc_enum_limit)
    throw BudgetError("translation lattice: |A_{L(I)}| = " + dg.order.get_str() +
                      " exceeds disc_enum_limit = " + std::to_string(limits.disc_enum_limit));

  GroupEvaluator ev(l, spec);
  std::vector<RatVec> members;
  IntVec e(dg.factors.size(), Int(0));
  auto bump = [&]() -> bool {
    for (size_t k = e.size(); k-- > 0;) {
      e[k] += 1;
      if (e[k] < dg.factors[k]) return true;
      e[k] = 0;
    }
    return false;
  };
  if (!dg.trivial()) {
    while (bump()) {
      RatVec w = dg.element(e);
      RatVec lift = t.quotient->lift_vec(w);
      Isometry trans = eichler(l, line.generator, lift);
      if (ev.contains(trans)) members.push_back(w);
    }
  }

  auto [basis, index] = lattice_from_generators(b, members);
  t.basis = std::move(basis);
  t.basis_inv = inverse(t.basis);
  t.index = index;
  return t;
}

namespace {

// Shared preamble: certificates that avoid any candidate sweep. Returns a
// verdict with status Unknown when the sweep is still required.
CuspVerdict preamble(const Lattice& l, const GroupSpec& spec, const IsotropicLine& line,
                     const GroupEvaluator& ev) {
  CuspVerdict v;
  v.line = line;
  v.div = line.div;
  v.quotient = std::make_shared<QuotientLattice>(quotient_L_I(l, line));
  v.disc_LI_factors = disc_group(v.quotient->base).factors;

  if (ev.contains_minus_id()) {
    v.status = CuspStatus::Regular;
    v.reason = "minus identity lies in the group";
    return v;
  }
  // div(I) = 1: a witness would force its translation part into L(I), whose
  // transvections always belong to the group, putting -id in the group.
  if (line.div == 1) {
    v.status = CuspStatus::Regular;
    v.reason = "divisibility one";
    return v;
  }
  if (spec.kind == GroupSpec::Kind::Stable) {
    bool two_elem = true;
    for (const Int& f : v.disc_LI_factors)
      if (f != 2) two_elem = false;
    if (line.div != 2 || !two_elem) {
      v.status = CuspStatus::Regular;
      v.reason = "stable-group constraint: div(I) = 2 and 2-elementary A_{L(I)} required";
      return v;
    }
  }
  v.status = CuspStatus::Unknown;
  return v;
}

struct SweepResult {
  bool found = false;
  RatVec witness_u;  // U(I)_Z-coordinates, entries in {0, 1/2}
};

void finish_verdict(CuspVerdict& v, const TranslationLattice& t, const SweepResult& r) {
  if (!r.found) {
    v.status = CuspStatus::Regular;
    v.reason = "candidate sweep exhausted";
    return;
  }
  v.status = CuspStatus::Irregular;
  v.reason.clear();
  RatVec w = t.to_LI(r.witness_u);
  // U(I)_Z' = U(I)_Z + Z w, expressed over L(I).
  std::vector<RatVec> gens;
  for (size_t j = 0; j < t.rank(); ++j) gens.push_back(t.basis.col(j));
  gens.push_back(w);
  auto [pbasis, pindex] = lattice_from_generators(t.rank(), gens);
  if (pindex != 2 * t.index) throw SpecError("internal: U(I)_Z' is not an index-2 overlattice");
  v.witness = std::move(w);
  v.u_prime_basis = std::move(pbasis);
}

using Mask = std::uint64_t;

RatVec mask_to_u_coords(Mask mask, size_t b) {
  RatVec u(b, Rat(0));
  for (size_t i = 0; i < b; ++i)
    if (mask & (Mask(1) << (b - 1 - i))) u[i] = Rat(1, 2);
  return u;
}

bool test_candidate(const Lattice& l, const GroupEvaluator& ev, const IsotropicLine& line,
                    const TranslationLattice& t, const RatVec& u_coords) {
  RatVec lift = t.to_ambient_lift(u_coords);
  Isometry e = eichler(l, line.generator, lift);
  Isometry cand = negate(l, e);
  return ev.contains(cand);
}

}  // namespace

CuspVerdict irregular_0dim(const Lattice& l, const GroupSpec& spec, const IsotropicLine& line,
                           const SearchLimits& limits) {
  GroupEvaluator ev(l, spec);
  CuspVerdict v = preamble(l, spec, line, ev);
  if (v.status != CuspStatus::Unknown) return v;

  std::shared_ptr<const TranslationLattice> t;
  try {
    t = std::make_shared<TranslationLattice>(compute_U_I_Z(l, spec, line, limits));
  } catch (const BudgetError& e) {
    v.status = CuspStatus::Unknown;
    v.reason = e.what();
    return v;
  }
  v.translations = t;
  v.quotient = t->quotient;
  const size_t b = t->rank();
  if (static_cast<int>(b) > limits.brute_rank_limit) {
    v.status = CuspStatus::Unknown;
    v.reason = "candidate space 2^" + std::to_string(b) + " exceeds brute_rank_limit = " +
               std::to_string(limits.brute_rank_limit);
    return v;
  }

  SweepResult r;
  size_t hits = 0;
  for (Mask mask = 1; mask < (Mask(1) << b); ++mask) {
    RatVec u = mask_to_u_coords(mask, b);
    if (test_candidate(l, ev, line, *t, u)) {
      ++hits;
      if (!r.found) {
        r.found = true;
        r.witness_u = u;
      }
    }
  }
  if (hits > 1) throw SpecError("internal: irregular witness coset is not unique");
  finish_verdict(v, *t, r);
  return v;
}

namespace {

// Nullspace basis of the F2 system rows * c = 0, c in F2^b.
std::vector<Mask> f2_nullspace(std::vector<Mask> rows, size_t b) {
  std::vector<int> pivot_of_col(b, -1);
  size_t rank = 0;
  for (size_t col = 0; col < b && rank < rows.size(); ++col) {
    Mask bit = Mask(1) << (b - 1 - col);
    size_t p = rank;
    while (p < rows.size() && !(rows[p] & bit)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (size_t i = 0; i < rows.size(); ++i)
      if (i != rank && (rows[i] & bit)) rows[i] ^= rows[rank];
    pivot_of_col[col] = static_cast<int>(rank);
    ++rank;
  }
  std::vector<Mask> basis;
  for (size_t col = 0; col < b; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    Mask v = Mask(1) << (b - 1 - col);
    for (size_t pc = 0; pc < b; ++pc) {
      if (pivot_of_col[pc] < 0) continue;
      if (rows[pivot_of_col[pc]] & (Mask(1) << (b - 1 - col))) v |= Mask(1) << (b - 1 - pc);
    }
    basis.push_back(v);
  }
  return basis;
}

}  // namespace

CuspVerdict search_pruned(const Lattice& l, const GroupSpec& spec, const IsotropicLine& line,
                          const SearchLimits& limits) {
  GroupEvaluator ev(l, spec);
  CuspVerdict v = preamble(l, spec, line, ev);
  if (v.status != CuspStatus::Unknown) return v;

  std::shared_ptr<const TranslationLattice> t;
  try {
    t = std::make_shared<TranslationLattice>(compute_U_I_Z(l, spec, line, limits));
  } catch (const BudgetError& e) {
    v.status = CuspStatus::Unknown;
    v.reason = e.what();
    return v;
  }
  v.translations = t;
  v.quotient = t->quotient;
  const size_t b = t->rank();
  if (static_cast<int>(b) > limits.pruned_rank_limit) {
    v.status = CuspStatus::Unknown;
    v.reason = "candidate space 2^" + std::to_string(b) + " exceeds pruned_rank_limit = " +
               std::to_string(limits.pruned_rank_limit);
    return v;
  }

  // Necessary mod-2 conditions: a member -E_w maps each x in I-perp cap L
  // into L, which forces (lift(w), x) integral. With w = sum c_i u_i / 2
  // this is an F2-linear system in the bits c_i.
  const QuotientLattice& q = *t->quotient;
  std::vector<RatVec> lifts;
  for (size_t i = 0; i < b; ++i) {
    RatVec unit(b, Rat(0));
    unit[i] = 1;
    lifts.push_back(t->to_ambient_lift(unit));
  }
  std::vector<Mask> rows;
  for (size_t j = 0; j < q.perp_basis.cols(); ++j) {
    RatVec x = to_rat_vec(q.perp_basis.col(j));
    Mask row = 0;
    for (size_t i = 0; i < b; ++i) {
      Rat p = l.pair(lifts[i], x);
      Int pi = to_int(p);  // integral by construction of U(I)_Z
      if (pi % 2 != 0) row |= Mask(1) << (b - 1 - i);
    }
    rows.push_back(row);
  }

  std::vector<Mask> null_basis = f2_nullspace(std::move(rows), b);
  if (null_basis.size() > 62 ||
      (Mask(1) << null_basis.size()) > static_cast<Mask>(limits.pruned_survivor_limit)) {
    v.status = CuspStatus::Unknown;
    v.reason = "pruned survivor space 2^" + std::to_string(null_basis.size()) +
               " exceeds pruned_survivor_limit = " + std::to_string(limits.pruned_survivor_limit);
    return v;
  }

  SweepResult r;
  size_t hits = 0;
  for (Mask combo = 1; combo < (Mask(1) << null_basis.size()); ++combo) {
    Mask c = 0;
    for (size_t j = 0; j < null_basis.size(); ++j)
      if (combo & (Mask(1) << j)) c ^= null_basis[j];
    if (c == 0) continue;
    RatVec u = mask_to_u_coords(c, b);
    if (test_candidate(l, ev, line, *t, u)) {
      ++hits;
      if (!r.found) {
        r.found = true;
        r.witness_u = u;
      }
    }
  }
  if (hits > 1) throw SpecError("internal: irregular witness coset is not unique");
  finish_verdict(v, *t, r);
  return v;
}

CuspVerdict decide_0dim(const Lattice& l, const GroupSpec& spec, const IsotropicLine& line,
                        const SearchLimits& limits) {
  if (static_cast<long>(l.rank()) - 2 <= limits.brute_rank_limit)
    return irregular_0dim(l, spec, line, limits);
  return search_pruned(l, spec, line, limits);
}

UStarClass u_star_class(const Lattice& l, const GroupSpec& spec, const CuspVerdict& verdict) {
  if (verdict.status == CuspStatus::Unknown)
    throw SpecError("u_star_class needs a decided verdict");
  if (contains_minus_id(spec, l)) return UStarClass::MinusIdCase;
  return verdict.irregular() ? UStarClass::MinusEwCase : UStarClass::TrivialCase;
}

namespace {

// Scale a nonzero rational vector to a primitive integer vector.
IntVec primitive_scale(const RatVec& v) {
  Int den = common_denominator(v);
  IntVec w(v.size());
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    Rat s = Rat(den) * v[i];
    w[i] = to_int(s);
    g = gcd(g, w[i]);
  }
  if (g == 0) throw SpecError("ray generator is zero");
  for (Int& x : w) x /= g;
  return w;
}

}  // namespace

RayClass irregular_ray(const Lattice& l, const GroupSpec& spec, const CuspVerdict& verdict,
                       const RatVec& sigma, bool assume_in_cone) {
  if (verdict.status == CuspStatus::Unknown)
    throw SpecError("irregular_ray needs a decided verdict");
  if (!verdict.quotient) throw SpecError("verdict carries no quotient data");
  const QuotientLattice& q = *verdict.quotient;
  if (sigma.size() != q.quotient_rank()) throw SpecError("ray generator has wrong dimension");
  bool zero = true;
  for (const Rat& x : sigma)
    if (x != 0) zero = false;
  if (zero) throw SpecError("ray generator is zero");
  if (!assume_in_cone && q.base.norm(sigma) < 0)
    throw SpecError("ray generator lies outside the closed positive cone");

  std::shared_ptr<const TranslationLattice> t = verdict.translations;
  if (!t) {
    SearchLimits limits;
    t = std::make_shared<TranslationLattice>(compute_U_I_Z(l, spec, verdict.line, limits));
  }

  // Primitive generator of (R sigma) cap U(I)_Z, in U(I)_Z coordinates.
  IntVec gen_u = primitive_scale(t->from_LI(sigma));
  RatVec gen_li = t->to_LI(to_rat_vec(gen_u));

  RayClass out;
  out.generator = gen_li;
  if (!verdict.irregular()) {
    out.regular = true;
    return out;
  }

  // Irregular iff the witness lands in U(I)_Z + Q*sigma. The witness has
  // half-integral coordinates and sigma is primitive, so the only possible
  // rational shift is sigma/2: compare modulo 2.
  RatVec wu = t->from_LI(*verdict.witness);
  IntVec doubled(wu.size());
  for (size_t i = 0; i < wu.size(); ++i) {
    Rat d = wu[i] * 2;
    doubled[i] = to_int(d);
  }
  bool matches = true;
  for (size_t i = 0; i < doubled.size(); ++i) {
    Int diff = doubled[i] - gen_u[i];
    if (diff % 2 != 0) matches = false;
  }
  out.regular = !matches;
  return out;
}

OneDimVerdict irregular_1dim(const Lattice& l, const GroupSpec& spec, const IntVec& j1,
                             const IntVec& j2, const SearchLimits& limits) {
  const size_t n = l.rank();
  if (j1.size() != n || j2.size() != n) throw SpecError("J basis has wrong dimension");
  IntVec c1 = j1, c2 = j2;
  Int g1 = vec_gcd(c1);
  if (g1 == 0) throw SpecError("J basis vector is zero");
  for (Int& x : c1) x /= g1;
  if (l.norm(c1) != 0 || l.norm(c2) != 0 || l.pair(c1, c2) != 0)
    throw SpecError("J is not isotropic of rank 2");

  // Primitivity of the rank-2 sublattice: row span must have SNF (1, 1).
  IntMat rows(2, n);
  for (size_t j = 0; j < n; ++j) {
    rows(0, j) = c1[j];
    rows(1, j) = c2[j];
  }
  SnfDecomposition s = snf(rows);
  if (s.diag.size() != 2 || s.diag[0] != 1 || s.diag[1] != 1)
    throw SpecError("J is not a primitive rank-2 sublattice");

  OneDimVerdict out;
  IsotropicLine line = make_isotropic_line(l, c1);
  out.zero_dim = decide_0dim(l, spec, line, limits);
  if (out.zero_dim.status == CuspStatus::Unknown) {
    out.status = CuspStatus::Unknown;
    return out;
  }

  RatVec sigma = out.zero_dim.quotient->project_vec(to_rat_vec(c2));
  try {
    out.ray = irregular_ray(l, spec, out.zero_dim, sigma);
    out.u_J_generator = out.ray.generator;
  } catch (const BudgetError&) {
    out.status = CuspStatus::Unknown;
    return out;
  }
  bool irregular = out.zero_dim.irregular() && !out.ray.regular;
  out.status = irregular ? CuspStatus::Irregular : CuspStatus::Regular;
  return out;
}

}  // namespace latcusp
