#include "latcusp/groups.hpp"

#include <algorithm>

namespace latcusp {

void validate_group_spec(const GroupSpec& spec, const Lattice& l) {
  if (spec.kind != GroupSpec::Kind::Pattern) return;
  std::vector<char> seen(l.summands.size(), 0);
  for (const auto& b : spec.blocks) {
    if (b.summands.empty()) throw SpecError("pattern block lists no summands");
    for (size_t s : b.summands) {
      if (s >= l.summands.size()) throw SpecError("pattern block names a missing summand");
      if (seen[s]) throw SpecError("pattern blocks overlap");
      seen[s] = 1;
    }
  }
  for (char c : seen)
    if (!c) throw SpecError("pattern blocks must partition the summand list");
}

GroupEvaluator::GroupEvaluator(const Lattice& l, const GroupSpec& spec) : l_(&l), spec_(spec) {
  validate_group_spec(spec, l);
  if (spec.kind == GroupSpec::Kind::Stable) {
    whole_ = disc_group(l);
  } else if (spec.kind == GroupSpec::Kind::Pattern) {
    for (const auto& b : spec_.blocks) block_disc_.push_back(sub_disc_group(l, b.summands));
  }
}

bool GroupEvaluator::disc_conditions(const Isometry& g) const {
  switch (spec_.kind) {
    case GroupSpec::Kind::FullOPlus:
      return true;
    case GroupSpec::Kind::Stable:
      return acts_as_scalar(*l_, whole_, g.mat, +1);
    case GroupSpec::Kind::Pattern: {
      for (size_t k = 0; k < spec_.blocks.size(); ++k) {
        const DiscGroup& a = block_disc_[k];
        switch (spec_.blocks[k].cond) {
          case GroupSpec::Cond::Id:
            if (!acts_as_scalar(*l_, a, g.mat, +1)) return false;
            break;
          case GroupSpec::Cond::PlusMinusId:
            if (!acts_as_scalar(*l_, a, g.mat, +1) && !acts_as_scalar(*l_, a, g.mat, -1))
              return false;
            break;
          case GroupSpec::Cond::DetId:
            if (!acts_as_scalar(*l_, a, g.mat, g.det_sign)) return false;
            break;
        }
      }
      return true;
    }
  }
  return false;
}

bool GroupEvaluator::contains(const Isometry& g) const {
  if (!preserves_lattice(*l_, g)) return false;
  if (!in_O_plus(*l_, g)) return false;
  if (!disc_conditions(g)) return false;
  if (spec_.det == GroupSpec::DetRestrict::Plus && g.det_sign != 1) return false;
  return true;
}

bool GroupEvaluator::contains_minus_id() const {
  const int rank_parity_det = l_->rank() % 2 == 0 ? 1 : -1;
  bool conds = true;
  switch (spec_.kind) {
    case GroupSpec::Kind::FullOPlus:
      break;
    case GroupSpec::Kind::Stable:
      conds = whole_.two_elementary();
      break;
    case GroupSpec::Kind::Pattern:
      for (size_t k = 0; k < spec_.blocks.size() && conds; ++k) {
        const DiscGroup& a = block_disc_[k];
        switch (spec_.blocks[k].cond) {
          case GroupSpec::Cond::Id:
            conds = a.two_elementary();
            break;
          case GroupSpec::Cond::PlusMinusId:
            break;
          case GroupSpec::Cond::DetId:
            // -id acts as -1; det(-id)*id matches iff rank is odd or the
            // block is 2-elementary.
            conds = rank_parity_det == -1 || a.two_elementary();
            break;
        }
      }
      break;
  }
  if (!conds) return false;
  if (spec_.det == GroupSpec::DetRestrict::Plus && rank_parity_det != 1) return false;
  return true;
}

bool contains(const GroupSpec& spec, const Lattice& l, const Isometry& g) {
  return GroupEvaluator(l, spec).contains(g);
}

bool contains_minus_id(const GroupSpec& spec, const Lattice& l) {
  return GroupEvaluator(l, spec).contains_minus_id();
}

bool pattern_equals_stable(const GroupSpec& spec, const Lattice& l) {
  if (spec.kind != GroupSpec::Kind::Pattern) return spec.kind == GroupSpec::Kind::Stable;
  for (const auto& b : spec.blocks) {
    if (b.cond == GroupSpec::Cond::Id) continue;
    DiscGroup a = sub_disc_group(l, b.summands);
    if (!a.two_elementary()) return false;
  }
  return spec.det == GroupSpec::DetRestrict::Any;
}

}  // namespace latcusp
