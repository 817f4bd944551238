#include "latcusp/discriminant.hpp"

namespace latcusp {

namespace {

Rat rat_mod(const Rat& q, const Int& modulus) {
  // representative in [0, modulus)
  Rat m(modulus);
  Rat r = q;
  Int fl;
  // floor(r / m)
  Rat ratio = r / m;
  mpz_fdiv_q(fl.get_mpz_t(), ratio.get_num().get_mpz_t(), ratio.get_den().get_mpz_t());
  r -= Rat(fl) * m;
  return r;
}

}  // namespace

IntVec DiscGroup::decompose(const RatVec& dual_vec) const {
  if (!can_decompose) throw SpecError("decompose: group lacks whole-lattice data");
  if (dual_vec.size() != gram.rows()) throw SpecError("decompose: wrong dimension");
  RatVec y(gram.rows(), Rat(0));
  for (size_t i = 0; i < gram.rows(); ++i)
    for (size_t j = 0; j < gram.cols(); ++j) y[i] += Rat(gram(i, j)) * dual_vec[j];
  if (!all_integral(y)) throw SpecError("decompose: vector is not in the dual lattice");
  IntVec yi(y.size());
  for (size_t i = 0; i < y.size(); ++i) yi[i] = y[i].get_num();
  IntVec e_full = snf_left * yi;
  IntVec out(live.size());
  for (size_t k = 0; k < live.size(); ++k) {
    Int m = snf_diag[live[k]];
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), e_full[live[k]].get_mpz_t(), m.get_mpz_t());
    out[k] = r;
  }
  return out;
}

RatVec DiscGroup::element(const IntVec& exponents) const {
  if (exponents.size() != factors.size()) throw SpecError("element: wrong exponent count");
  RatVec out(gram.rows(), Rat(0));
  for (size_t k = 0; k < exponents.size(); ++k)
    for (size_t i = 0; i < out.size(); ++i) out[i] += Rat(exponents[k]) * generators[k][i];
  return out;
}

DiscGroup disc_group(const Lattice& l) {
  DiscGroup a;
  a.can_decompose = true;
  a.gram = l.gram;
  a.even = l.even;
  SnfDecomposition s = snf(l.gram);
  a.snf_left = s.left;
  a.snf_diag = s.diag;
  RatMat ginv_uinv = inverse(to_rat(l.gram)) * inverse(to_rat(s.left));
  for (size_t i = 0; i < s.diag.size(); ++i) {
    if (s.diag[i] == 0) throw SpecError("disc_group: degenerate lattice");
    if (s.diag[i] == 1) continue;
    a.live.push_back(i);
    a.factors.push_back(s.diag[i]);
    a.generators.push_back(ginv_uinv.col(i));
    a.order *= s.diag[i];
  }
  return a;
}

DiscGroup sub_disc_group(const Lattice& l, const std::vector<size_t>& summand_indices) {
  // Gather the block's coordinates.
  std::vector<size_t> coords;
  for (size_t si : summand_indices) {
    if (si >= l.summands.size()) throw SpecError("sub_disc_group: bad summand index");
    auto [lo, hi] = l.summand_span(si);
    for (size_t c = lo; c < hi; ++c) coords.push_back(c);
  }
  IntMat block(coords.size(), coords.size());
  for (size_t i = 0; i < coords.size(); ++i)
    for (size_t j = 0; j < coords.size(); ++j) block(i, j) = l.gram(coords[i], coords[j]);

  Summand s;
  s.kind = Summand::Kind::Gram;
  s.custom = block;
  Lattice bl = build_lattice({s});
  DiscGroup sub = disc_group(bl);

  // Re-embed generator lifts into full coordinates; decomposition data keeps
  // working against the block gram, so remember the coordinate positions by
  // padding the gram with the identity outside the block.
  DiscGroup a;
  a.factors = sub.factors;
  a.order = sub.order;
  a.even = l.even;
  const size_t n = l.rank();
  for (const RatVec& g : sub.generators) {
    RatVec full(n, Rat(0));
    for (size_t i = 0; i < coords.size(); ++i) full[coords[i]] = g[i];
    a.generators.push_back(full);
  }
  // Sub-groups support generator-based scalar-action tests only.
  a.can_decompose = false;
  a.gram = l.gram;
  return a;
}

Rat disc_q(const Lattice& l, const DiscGroup& a, const IntVec& exponents) {
  if (!l.even) throw SpecError("discriminant form requires an even lattice");
  RatVec x = a.element(exponents);
  return rat_mod(l.pair(x, x), 2);
}

Rat disc_b(const Lattice& l, const DiscGroup& a, const IntVec& x, const IntVec& y) {
  if (!l.even) throw SpecError("discriminant form requires an even lattice");
  RatVec xv = a.element(x);
  RatVec yv = a.element(y);
  return rat_mod(l.pair(xv, yv), 1);
}

DiscFormValue disc_form(const Lattice& l, const DiscGroup& a, const IntVec& exponents) {
  DiscFormValue v;
  v.q = disc_q(l, a, exponents);
  v.b = disc_b(l, a, exponents, exponents);
  return v;
}

bool disc_form_is_anisotropic(const Lattice& l, const DiscGroup& a, long enum_limit) {
  if (!l.even) throw SpecError("discriminant form requires an even lattice");
  if (a.order > enum_limit)
    throw BudgetError("anisotropy check: discriminant group order exceeds the guard");
  IntVec e(a.factors.size(), Int(0));
  auto bump = [&]() -> bool {
    for (size_t k = e.size(); k-- > 0;) {
      e[k] += 1;
      if (e[k] < a.factors[k]) return true;
      e[k] = 0;
    }
    return false;
  };
  if (a.trivial()) return true;
  while (bump()) {
    if (disc_q(l, a, e) == 0) return false;
  }
  return true;
}

bool matches_pattern(const DiscGroup& a, DiscPattern p) {
  const IntVec& f = a.factors;
  switch (p) {
    case DiscPattern::TwoElementary:
      return a.two_elementary();
    case DiscPattern::Z8Plus2s: {
      if (f.empty() || f.back() != 8) return false;
      for (size_t i = 0; i + 1 < f.size(); ++i)
        if (f[i] != 2) return false;
      return true;
    }
    case DiscPattern::Z4SqPlus2s: {
      if (f.size() < 2) return false;
      if (f[f.size() - 1] != 4 || f[f.size() - 2] != 4) return false;
      for (size_t i = 0; i + 2 < f.size(); ++i)
        if (f[i] != 2) return false;
      return true;
    }
  }
  return false;
}

bool matches_irregular_shape(const DiscGroup& a) {
  return matches_pattern(a, DiscPattern::Z8Plus2s) || matches_pattern(a, DiscPattern::Z4SqPlus2s);
}

DiscAction induced_disc_action(const Lattice& l, const DiscGroup& a, const RatMat& gamma) {
  if (!is_integral(gamma)) throw SpecError("induced action requires an integral isometry");
  DiscAction act;
  act.is_id = true;
  act.is_minus_id = true;
  for (size_t k = 0; k < a.generators.size(); ++k) {
    RatVec img = gamma * a.generators[k];
    if (a.can_decompose) act.images.push_back(a.decompose(img));
    RatVec plus(img.size()), minus(img.size());
    for (size_t i = 0; i < img.size(); ++i) {
      plus[i] = img[i] - a.generators[k][i];
      minus[i] = img[i] + a.generators[k][i];
    }
    if (!all_integral(plus)) act.is_id = false;
    if (!all_integral(minus)) act.is_minus_id = false;
  }
  (void)l;
  return act;
}

DiscActionClass classify_disc_action(const DiscAction& act) {
  if (act.is_id) return DiscActionClass::Id;
  if (act.is_minus_id) return DiscActionClass::MinusId;
  return DiscActionClass::Other;
}

bool acts_as_scalar(const Lattice& l, const DiscGroup& a, const RatMat& gamma, int sign) {
  (void)l;
  for (const RatVec& g : a.generators) {
    RatVec img = gamma * g;
    for (size_t i = 0; i < img.size(); ++i) img[i] -= Rat(sign) * g[i];
    if (!all_integral(img)) return false;
  }
  return true;
}

}  // namespace latcusp
