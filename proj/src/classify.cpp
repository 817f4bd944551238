#include "latcusp/classify.hpp"

#include <chrono>

namespace latcusp {

namespace {

std::vector<Summand> append_summands(std::vector<Summand> base, const Lattice& m) {
  for (const Summand& s : m.summands) base.push_back(s);
  return base;
}

GroupSpec pm_id_group(size_t pm_count_front, const std::vector<size_t>& id_blocks,
                      size_t total) {
  // Block 1: everything except the id summands, condition +-id.
  GroupSpec::Block pm, id;
  pm.cond = GroupSpec::Cond::PlusMinusId;
  id.cond = GroupSpec::Cond::Id;
  (void)pm_count_front;
  std::vector<char> is_id(total, 0);
  for (size_t s : id_blocks) is_id[s] = 1;
  for (size_t s = 0; s < total; ++s)
    (is_id[s] ? id : pm).summands.push_back(s);
  return GroupSpec::pattern({pm, id});
}

}  // namespace

WitnessConstruction build_named_example(NamedExample which, const Lattice& m) {
  if (m.sig_pos != 1)
    throw SpecError("named example: the companion block must be hyperbolic (signature (1, *))");
  if (!m.even) throw SpecError("named example: the companion block must be even");

  WitnessConstruction out;
  Summand u;
  u.kind = Summand::Kind::U;

  if (which == NamedExample::Minus8) {
    Summand d8;
    d8.kind = Summand::Kind::Diag;
    d8.entries = {Int(-8)};
    out.ambient = build_lattice(append_summands({u, d8}, m));
    out.group = pm_id_group(1, {1}, out.ambient.summands.size());
    const size_t n = out.ambient.rank();
    out.l = IntVec(n, Int(0));
    out.l[0] = 2;  // e
    out.l[1] = 2;  // f
    out.l[2] = 1;  // the <-8> vector
    out.m_lift = RatVec(n, Rat(0));
    out.m_lift[0] = Rat(1, 2);
    out.m_lift[1] = Rat(-1, 2);
  } else {
    Summand d4;
    d4.kind = Summand::Kind::Diag;
    d4.entries = {Int(-4)};
    out.ambient = build_lattice(append_summands({u, d4, d4}, m));
    out.group = pm_id_group(1, {1, 2}, out.ambient.summands.size());
    const size_t n = out.ambient.rank();
    out.l = IntVec(n, Int(0));
    out.l[0] = 2;
    out.l[1] = 2;
    out.l[2] = 1;  // v1
    out.l[3] = 1;  // v2
    out.m_lift = RatVec(n, Rat(0));
    out.m_lift[0] = 1;         // e
    out.m_lift[2] = Rat(1, 2);  // v1 / 2
  }
  return out;
}

namespace {

struct ShapeCandidate {
  IntVec l;
  RatVec m;
};

bool coordinate_isolated(const Lattice& l, size_t c, const Int& diag_value) {
  if (l.gram(c, c) != diag_value) return false;
  for (size_t j = 0; j < l.rank(); ++j)
    if (j != c && l.gram(c, j) != 0) return false;
  return true;
}

// Candidate witness vectors built from a U summand plus an isolated <-8>
// coordinate, or a U summand plus two isolated <-4> coordinates.
std::vector<ShapeCandidate> shape_candidates(const Lattice& l) {
  const size_t n = l.rank();
  std::vector<size_t> u_offsets;
  for (const Summand& s : l.summands)
    if (s.kind == Summand::Kind::U) u_offsets.push_back(s.offset);
  std::vector<size_t> m8, m4;
  for (size_t c = 0; c < n; ++c) {
    if (coordinate_isolated(l, c, Int(-8))) m8.push_back(c);
    if (coordinate_isolated(l, c, Int(-4))) m4.push_back(c);
  }

  std::vector<ShapeCandidate> out;
  for (size_t u : u_offsets) {
    for (size_t c : m8) {
      ShapeCandidate cand;
      cand.l = IntVec(n, Int(0));
      cand.l[u] = 2;
      cand.l[u + 1] = 2;
      cand.l[c] = 1;
      cand.m = RatVec(n, Rat(0));
      cand.m[u] = Rat(1, 2);
      cand.m[u + 1] = Rat(-1, 2);
      out.push_back(std::move(cand));
    }
    for (size_t i = 0; i < m4.size(); ++i)
      for (size_t j = 0; j < m4.size(); ++j) {
        if (i == j) continue;
        ShapeCandidate cand;
        cand.l = IntVec(n, Int(0));
        cand.l[u] = 2;
        cand.l[u + 1] = 2;
        cand.l[m4[i]] = 1;
        cand.l[m4[j]] = 1;
        cand.m = RatVec(n, Rat(0));
        cand.m[u] = 1;
        cand.m[m4[i]] = Rat(1, 2);
        out.push_back(std::move(cand));
      }
  }
  return out;
}

bool is_squarefree(Int n) {
  n = abs(n);
  for (Int p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

bool exponent_divides_8(const DiscGroup& a) {
  Int e = a.exponent();
  return e == 1 || e == 2 || e == 4 || e == 8;
}

}  // namespace

ExistenceReport has_irregular_cusp(const Lattice& l, const GroupSpec& spec,
                                   const SearchBudget& budget) {
  if (!l.even) throw SpecError("has_irregular_cusp requires an even lattice");
  if (l.sig_pos != 2) throw SpecError("has_irregular_cusp requires signature (2, b)");
  GroupEvaluator ev(l, spec);
  const long b = static_cast<long>(l.rank()) - 2;

  ExistenceReport rep;

  if (ev.contains_minus_id()) {
    rep.status = ExistStatus::No;
    rep.certificate = "minus identity lies in the group";
    return rep;
  }
  if (b % 2 == 1 && spec.det == GroupSpec::DetRestrict::Plus) {
    rep.status = ExistStatus::No;
    rep.certificate = "witness elements have determinant -1 when b is odd";
    return rep;
  }

  DiscGroup whole = disc_group(l);
  if (spec.kind == GroupSpec::Kind::Stable && !matches_irregular_shape(whole)) {
    rep.status = ExistStatus::No;
    rep.certificate = "discriminant group matches neither admissible shape";
    return rep;
  }
  if (spec.kind == GroupSpec::Kind::Pattern) {
    for (const auto& blk : spec.blocks) {
      bool acts_like_id = blk.cond == GroupSpec::Cond::Id ||
                          (blk.cond == GroupSpec::Cond::DetId && l.rank() % 2 == 0);
      if (!acts_like_id) continue;
      DiscGroup a = sub_disc_group(l, blk.summands);
      if (!exponent_divides_8(a)) {
        rep.status = ExistStatus::No;
        rep.certificate =
            "an identity-condition block has discriminant exponent " + a.exponent().get_str() +
            ", which does not divide 8";
        return rep;
      }
    }
    if (b % 2 == 0 && !spec.has_cond(GroupSpec::Cond::PlusMinusId) &&
        !matches_irregular_shape(whole)) {
      rep.status = ExistStatus::No;
      rep.certificate =
          "for even b the group meets SO+ in the stable kernel and the "
          "discriminant group matches neither admissible shape";
      return rep;
    }
  }
  try {
    if (disc_form_is_anisotropic(l, whole, budget.limits.disc_enum_limit)) {
      rep.status = ExistStatus::No;
      rep.certificate = "anisotropic discriminant form forces divisibility one at every cusp";
      return rep;
    }
  } catch (const BudgetError&) {
    // certificate skipped; fall through
  }

  // Explicit constructions from the lattice shape, verified by membership.
  for (const ShapeCandidate& cand : shape_candidates(l)) {
    Isometry e = eichler(l, cand.l, cand.m);
    Isometry neg = negate(l, e);
    if (!ev.contains(neg)) continue;
    IsotropicLine line = make_isotropic_line(l, cand.l);
    if (line.div != 2) throw SpecError("internal: constructed witness cusp has div != 2");
    QuotientLattice q = quotient_L_I(l, line);
    rep.status = ExistStatus::Yes;
    rep.certificate = "explicit witness from a U + <-8> or U + 2<-4> block";
    rep.cusp = cand.l;
    rep.witness_m = cand.m;
    rep.witness_w = q.project_vec(cand.m);
    return rep;
  }

  // Bounded search over div-2 isotropic lines.
  bool saw_unknown = false;
  try {
    std::vector<IsotropicLine> lines =
        enumerate_isotropic(l, budget.iso_box, Int(2), budget.iso_candidates);
    for (const IsotropicLine& line : lines) {
      CuspVerdict v = decide_0dim(l, spec, line, budget.limits);
      if (v.irregular()) {
        rep.status = ExistStatus::Yes;
        rep.certificate = "bounded search over div-2 isotropic lines";
        rep.cusp = line.generator;
        rep.witness_w = *v.witness;
        rep.witness_m = v.translations->quotient->lift_vec(*v.witness);
        return rep;
      }
      if (v.status == CuspStatus::Unknown) saw_unknown = true;
    }
  } catch (const BudgetError& e) {
    rep.status = ExistStatus::Unknown;
    rep.certificate = e.what();
    return rep;
  }
  rep.status = ExistStatus::Unknown;
  rep.certificate = saw_unknown ? "search budget exhausted with undecided cusps"
                                : "bounded search found no irregular cusp; no exclusion applies";
  return rep;
}

namespace {

Summand diag1(long entry) {
  Summand s;
  s.kind = Summand::Kind::Diag;
  s.entries = {Int(entry)};
  return s;
}

Summand e8_minus() {
  Summand s;
  s.kind = Summand::Kind::E8;
  s.sign = -1;
  return s;
}

Summand a2_minus() {
  Summand s;
  s.kind = Summand::Kind::A2;
  s.sign = -1;
  return s;
}

Summand u_summand() {
  Summand s;
  s.kind = Summand::Kind::U;
  return s;
}

bool has_u_summand(const Lattice& l) {
  for (const Summand& s : l.summands)
    if (s.kind == Summand::Kind::U) return true;
  return false;
}

std::string verdict_word(ExistStatus s) {
  switch (s) {
    case ExistStatus::Yes:
      return "irregular";
    case ExistStatus::No:
      return "regular";
    case ExistStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

FamilyPoint run_point(const Lattice& l, const GroupSpec& spec, const SearchBudget& budget,
                      std::map<std::string, long> params, const std::string& expected) {
  FamilyPoint p;
  p.params = std::move(params);
  p.expected = expected;
  auto start = std::chrono::steady_clock::now();
  p.report = has_irregular_cusp(l, spec, budget);
  p.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                 .count();
  p.match = expected == "any" || verdict_word(p.report.status) == expected;
  return p;
}

std::string summarize(const Lattice& l) {
  DiscGroup a = disc_group(l);
  std::string s = "rank " + std::to_string(l.rank()) + ", signature (" +
                  std::to_string(l.sig_pos) + ", " + std::to_string(l.sig_neg) + "), A_L = [";
  for (size_t i = 0; i < a.factors.size(); ++i) {
    if (i) s += ", ";
    s += a.factors[i].get_str();
  }
  s += "]";
  return s;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::K3:
      return "K3";
    case Family::K3n:
      return "K3n";
    case Family::OG10:
      return "OG10";
    case Family::Kummer:
      return "Kummer";
    case Family::CubicTVA:
      return "CubicTVA";
    case Family::Pe:
      return "Pe";
    case Family::FM:
      return "FM";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "K3") return Family::K3;
  if (s == "K3n") return Family::K3n;
  if (s == "OG10") return Family::OG10;
  if (s == "Kummer") return Family::Kummer;
  if (s == "CubicTVA") return Family::CubicTVA;
  if (s == "Pe") return Family::Pe;
  if (s == "FM") return Family::FM;
  throw SpecError("unknown family '" + s + "'");
}

FamilyReport replicate_table(const FamilyRequest& req) {
  FamilyReport rep;
  rep.family = family_name(req.family);
  const auto [d_lo, d_hi] = req.d_range;
  const auto [t_lo, t_hi] = req.t_range;

  switch (req.family) {
    case Family::K3: {
      rep.fixed_params["m"] = req.m;
      for (long d = d_lo; d <= d_hi; ++d) {
        std::vector<Summand> sp{u_summand(), u_summand()};
        for (long k = 0; k < req.m; ++k) sp.push_back(e8_minus());
        sp.push_back(diag1(-2 * d));
        Lattice l = build_lattice(sp);
        if (d == d_lo) rep.lattice_summary = summarize(l);
        rep.points.push_back(run_point(l, GroupSpec::stable(), req.budget, {{"d", d}},
                                       d == 4 ? "irregular" : "regular"));
      }
      break;
    }
    case Family::K3n: {
      rep.fixed_params["m"] = req.m;
      for (long t = t_lo; t <= t_hi; ++t)
        for (long d = d_lo; d <= d_hi; ++d) {
          std::vector<Summand> sp{u_summand(), u_summand()};
          for (long k = 0; k < req.m; ++k) sp.push_back(e8_minus());
          sp.push_back(diag1(-2 * t));
          sp.push_back(diag1(-2 * d));
          Lattice l = build_lattice(sp);
          if (rep.lattice_summary.empty()) rep.lattice_summary = summarize(l);
          bool exceptional = (t == 1 && d == 4) || (t == 2 && d == 2) || (t == 4 && d == 1);
          rep.points.push_back(run_point(l, GroupSpec::stable(), req.budget,
                                         {{"t", t}, {"d", d}},
                                         exceptional ? "irregular" : "regular"));
        }
      break;
    }
    case Family::OG10: {
      Lattice m_block = req.big_block
                            ? *req.big_block
                            : build_lattice({u_summand(), u_summand(), a2_minus()});
      if (m_block.sig_pos != 2) throw SpecError("OG10 block must have signature (2, *)");
      bool m_has_u = has_u_summand(m_block);
      bool m_squarefree = is_squarefree(disc_group(m_block).order);
      for (long d = d_lo; d <= d_hi; ++d) {
        std::vector<Summand> sp = m_block.summands;
        sp.push_back(diag1(-2 * d));
        Lattice l = build_lattice(sp);
        if (rep.lattice_summary.empty()) rep.lattice_summary = summarize(l);
        GroupSpec::Block pm, id;
        pm.cond = GroupSpec::Cond::PlusMinusId;
        id.cond = GroupSpec::Cond::Id;
        for (size_t s = 0; s + 1 < l.summands.size(); ++s) pm.summands.push_back(s);
        id.summands.push_back(l.summands.size() - 1);
        GroupSpec spec = GroupSpec::pattern({pm, id});
        std::string expected = "regular";
        if (d == 4) expected = m_has_u ? "irregular" : "any";
        if (d == 2) expected = m_squarefree ? "regular" : "any";
        rep.points.push_back(run_point(l, spec, req.budget, {{"d", d}}, expected));
      }
      break;
    }
    case Family::Kummer: {
      for (long t = t_lo; t <= t_hi; ++t)
        for (long d = d_lo; d <= d_hi; ++d) {
          Lattice l = build_lattice(
              {u_summand(), u_summand(), diag1(-2 * t), diag1(-2 * d)});
          if (rep.lattice_summary.empty()) rep.lattice_summary = summarize(l);
          GroupSpec::Block detb, id;
          detb.cond = GroupSpec::Cond::DetId;
          detb.summands = {0, 1, 2};
          id.cond = GroupSpec::Cond::Id;
          id.summands = {3};
          GroupSpec spec = GroupSpec::pattern({detb, id});
          bool exceptional = (t == 4 && d == 1) || (t == 2 && d == 2) || (t == 1 && d == 4);
          rep.points.push_back(run_point(l, spec, req.budget, {{"t", t}, {"d", d}},
                                         exceptional ? "irregular" : "regular"));
        }
      break;
    }
    case Family::CubicTVA: {
      for (long n = d_lo; n <= d_hi; ++n) {
        Lattice l = build_lattice({diag1(2 * n), u_summand(), a2_minus()});
        if (rep.lattice_summary.empty()) rep.lattice_summary = summarize(l);
        GroupSpec::Block pm, id;
        pm.cond = GroupSpec::Cond::PlusMinusId;
        pm.summands = {0, 1};
        id.cond = GroupSpec::Cond::Id;
        id.summands = {2};
        GroupSpec spec = GroupSpec::pattern({pm, id});
        rep.points.push_back(run_point(l, spec, req.budget, {{"n", n}}, "regular"));
      }
      break;
    }
    case Family::Pe: {
      for (long d = d_lo; d <= d_hi; ++d) {
        std::vector<Summand> sp{u_summand(), e8_minus(), e8_minus()};
        if (req.big_block) {
          sp = append_summands(sp, *req.big_block);
        } else {
          sp.push_back(diag1(2));
          sp.push_back(diag1(-2));
          sp.push_back(diag1(-2 * d));
        }
        Lattice l = build_lattice(sp);
        if (rep.lattice_summary.empty()) rep.lattice_summary = summarize(l);
        std::string expected = matches_irregular_shape(disc_group(l)) ? "any" : "regular";
        rep.points.push_back(run_point(l, GroupSpec::stable(), req.budget, {{"d", d}}, expected));
        if (req.big_block) break;  // a supplied block is a single point
      }
      break;
    }
    case Family::FM: {
      for (long d = d_lo; d <= d_hi; ++d) {
        Lattice l = build_lattice({u_summand(), e8_minus(), e8_minus(), diag1(2 * d)});
        if (rep.lattice_summary.empty()) rep.lattice_summary = summarize(l);
        std::string expected = d == 4 ? "any" : "regular";
        rep.points.push_back(run_point(l, GroupSpec::stable(), req.budget, {{"d", d}}, expected));
      }
      break;
    }
  }

  for (const FamilyPoint& p : rep.points)
    if (!p.match) rep.all_match = false;
  return rep;
}

}  // namespace latcusp
