#include "latcusp/lattice.hpp"

#include <cstdint>
#include <numeric>

namespace latcusp {

IntMat gram_U() {
  return IntMat(2, 2, {0, 1, 1, 0});
}

IntMat gram_E8(int sign) {
  if (sign != 1 && sign != -1) throw SpecError("E8 requires an explicit sign +1 or -1");
  // Chain 1..7 with node 8 attached to node 5; even unimodular of rank 8.
  IntMat g(8, 8);
  for (size_t i = 0; i < 8; ++i) g(i, i) = 2;
  for (size_t i = 0; i + 1 < 7; ++i) {
    g(i, i + 1) = -1;
    g(i + 1, i) = -1;
  }
  g(4, 7) = -1;
  g(7, 4) = -1;
  if (sign < 0)
    for (size_t i = 0; i < 8; ++i)
      for (size_t j = 0; j < 8; ++j) g(i, j) = -g(i, j);
  return g;
}

IntMat gram_A2(int sign) {
  if (sign != 1 && sign != -1) throw SpecError("A2 requires an explicit sign +1 or -1");
  IntMat g(2, 2, {2, -1, -1, 2});
  if (sign < 0)
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j) g(i, j) = -g(i, j);
  return g;
}

namespace {

IntMat summand_gram(const Summand& s) {
  switch (s.kind) {
    case Summand::Kind::U:
      return gram_U();
    case Summand::Kind::E8:
      return gram_E8(s.sign);
    case Summand::Kind::A2:
      return gram_A2(s.sign);
    case Summand::Kind::Diag: {
      if (s.entries.empty()) throw SpecError("diag summand needs at least one entry");
      IntMat g(s.entries.size(), s.entries.size());
      for (size_t i = 0; i < s.entries.size(); ++i) {
        if (s.entries[i] == 0) throw SpecError("diag summand entry must be nonzero");
        g(i, i) = s.entries[i];
      }
      return g;
    }
    case Summand::Kind::Gram:
      if (s.custom.rows() == 0) throw SpecError("gram summand needs a matrix");
      if (!s.custom.is_symmetric()) throw SpecError("gram summand must be symmetric");
      return s.custom;
  }
  throw SpecError("unknown summand kind");
}

}  // namespace

Lattice build_lattice(const std::vector<Summand>& spec) {
  if (spec.empty()) throw SpecError("lattice needs at least one summand");
  Lattice l;
  l.summands = spec;
  size_t n = 0;
  std::vector<IntMat> blocks;
  for (auto& s : l.summands) {
    IntMat g = summand_gram(s);
    s.offset = n;
    s.rank = g.rows();
    n += g.rows();
    blocks.push_back(std::move(g));
  }
  l.gram = IntMat(n, n);
  for (size_t k = 0; k < blocks.size(); ++k) {
    size_t off = l.summands[k].offset;
    for (size_t i = 0; i < blocks[k].rows(); ++i)
      for (size_t j = 0; j < blocks[k].cols(); ++j) l.gram(off + i, off + j) = blocks[k](i, j);
  }
  if (det(l.gram) == 0) throw SpecError("lattice form is degenerate");
  auto sig = signature(to_rat(l.gram));
  l.sig_pos = sig.first;
  l.sig_neg = sig.second;
  l.even = true;
  for (size_t i = 0; i < n; ++i)
    if (l.gram(i, i) % 2 != 0) l.even = false;
  return l;
}

RatMat dual_coords(const Lattice& l) { return inverse(to_rat(l.gram)); }

bool is_primitive_isotropic(const Lattice& l, const IntVec& v) {
  if (v.size() != l.rank()) throw SpecError("vector has wrong dimension");
  if (vec_gcd(v) != 1) return false;
  return l.norm(v) == 0;
}

Int divisibility(const Lattice& l, const IntVec& v) {
  if (v.size() != l.rank()) throw SpecError("vector has wrong dimension");
  if (vec_gcd(v) != 1) throw SpecError("divisibility requires a primitive vector");
  IntVec pairings = l.gram * v;
  return vec_gcd(pairings);
}

IsotropicLine make_isotropic_line(const Lattice& l, const IntVec& generator) {
  if (!is_primitive_isotropic(l, generator))
    throw SpecError("vector is not primitive isotropic");
  return IsotropicLine{generator, divisibility(l, generator)};
}

RatVec QuotientLattice::lift_vec(const RatVec& quotient_coords) const {
  if (quotient_coords.size() != quotient_rank())
    throw SpecError("lift: wrong quotient dimension");
  RatVec out(lift.rows(), Rat(0));
  for (size_t i = 0; i < lift.rows(); ++i)
    for (size_t j = 0; j < lift.cols(); ++j) out[i] += Rat(lift(i, j)) * quotient_coords[j];
  return out;
}

RatVec QuotientLattice::project_vec(const RatVec& ambient) const {
  if (ambient.size() != project.cols()) throw SpecError("project: wrong ambient dimension");
  return project * ambient;
}

QuotientLattice quotient_L_I(const Lattice& l, const IsotropicLine& line) {
  const size_t n = l.rank();
  if (l.sig_pos < 1) throw SpecError("quotient_L_I needs an isotropic-capable signature");

  // Basis of I-perp cap L: integer kernel of the pairing functional with l.
  IntMat pairing_row(1, n);
  IntVec gl = l.gram * line.generator;
  for (size_t j = 0; j < n; ++j) pairing_row(0, j) = gl[j];
  IntMat perp = integer_kernel(pairing_row);  // n x (n-1)

  // Coordinates of l inside that basis; l is primitive in the kernel.
  auto c = solve_in_lattice(perp, line.generator);
  if (!c) throw SpecError("internal: generator not inside its own perp");

  // Unimodular u with u * c = e_1, so the remaining columns of u^{-1}
  // descend to a basis of the quotient.
  IntMat cmat(n - 1, 1);
  for (size_t i = 0; i + 1 < n; ++i) cmat(i, 0) = (*c)[i];
  SnfDecomposition s = snf(cmat);
  if (s.diag.size() != 1 || s.diag[0] != 1)
    throw SpecError("internal: isotropic generator is not primitive in its perp");
  IntMat u = s.left;  // u * c = e_1
  IntMat uinv = to_int(inverse(to_rat(u)));

  QuotientLattice q;
  q.line = line;
  q.perp_basis = perp;

  const size_t b = n - 2;
  q.lift = IntMat(n, b);
  for (size_t j = 0; j < b; ++j) {
    IntVec col(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) col[i] = uinv(i, j + 1);
    IntVec amb = perp * col;
    q.lift.set_col(j, amb);
  }

  // project = drop_first(u * pinv(perp)) with pinv = (B^T B)^{-1} B^T.
  RatMat bt = to_rat(perp.transpose());
  RatMat pinv = inverse(to_rat(perp.transpose() * perp)) * bt;
  RatMat up = to_rat(u) * pinv;  // (n-1) x n
  q.project = RatMat(b, n);
  for (size_t i = 0; i < b; ++i)
    for (size_t j = 0; j < n; ++j) q.project(i, j) = up(i + 1, j);

  // Induced form on the quotient.
  IntMat qgram = q.lift.transpose() * l.gram * q.lift;
  Summand s_block;
  s_block.kind = Summand::Kind::Gram;
  s_block.custom = qgram;
  q.base = build_lattice({s_block});
  if (q.base.sig_pos != l.sig_pos - 1 || q.base.sig_neg != l.sig_neg - 1)
    throw SpecError("internal: quotient form has unexpected signature");
  if (l.even && !q.base.even) throw SpecError("internal: quotient of an even lattice is odd");
  return q;
}

std::vector<IsotropicLine> enumerate_isotropic(const Lattice& l, long box,
                                               std::optional<Int> div_filter,
                                               long max_candidates) {
  if (box < 1) throw SpecError("enumeration box must be >= 1");
  const size_t n = l.rank();

  double points = 1;
  for (size_t i = 0; i < n; ++i) points *= static_cast<double>(2 * box + 1);
  if (points > static_cast<double>(max_candidates))
    throw BudgetError("isotropic enumeration: box " + std::to_string(box) +
                      " exceeds the candidate budget");

  // Entries and boxes stay far inside int64 at desk scale; verify and fall
  // back to exact arithmetic if not.
  Int abs_sum = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) abs_sum += abs(l.gram(i, j));
  bool fast = (abs_sum * box * box) < Int("4000000000000000000");

  std::vector<IsotropicLine> out;
  std::vector<long> c(n, -box);
  auto visit = [&](const std::vector<long>& v) {
    long g = 0;
    size_t first_nonzero = n;
    for (size_t i = 0; i < n; ++i) {
      long a = v[i] < 0 ? -v[i] : v[i];
      if (a != 0 && first_nonzero == n) first_nonzero = i;
      g = std::gcd(g, a);
    }
    if (g != 1) return;                     // zero or imprimitive
    if (v[first_nonzero] < 0) return;       // sign representative
    IntVec w(n);
    for (size_t i = 0; i < n; ++i) w[i] = v[i];
    if (fast) {
      long long norm = 0;
      for (size_t i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        long long line = 0;
        for (size_t j = 0; j < n; ++j) line += l.gram(i, j).get_si() * v[j];
        norm += v[i] * line;
      }
      if (norm != 0) return;
    } else if (l.norm(w) != 0) {
      return;
    }
    Int d = divisibility(l, w);
    if (div_filter && d != *div_filter) return;
    out.push_back(IsotropicLine{std::move(w), std::move(d)});
  };

  for (;;) {
    visit(c);
    size_t k = n;
    while (k > 0) {
      --k;
      if (c[k] < box) {
        ++c[k];
        for (size_t i = k + 1; i < n; ++i) c[i] = -box;
        break;
      }
      if (k == 0) return out;
    }
  }
}

}  // namespace latcusp
