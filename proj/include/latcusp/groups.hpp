#pragma once

// Arithmetic subgroups of O+(L) cut out by discriminant conditions, with
// exact membership tests.

#include "latcusp/discriminant.hpp"
#include "latcusp/isometry.hpp"

namespace latcusp {

struct GroupSpec {
  enum class Kind { FullOPlus, Stable, Pattern };
  enum class Cond { Id, PlusMinusId, DetId };
  enum class DetRestrict { Any, Plus };

  struct Block {
    std::vector<size_t> summands;
    Cond cond = Cond::Id;
  };

  Kind kind = Kind::Stable;
  std::vector<Block> blocks;  // Pattern only; must partition the summand list
  DetRestrict det = DetRestrict::Any;

  static GroupSpec full_o_plus() { return GroupSpec{Kind::FullOPlus, {}, DetRestrict::Any}; }
  static GroupSpec stable() { return GroupSpec{Kind::Stable, {}, DetRestrict::Any}; }
  static GroupSpec pattern(std::vector<Block> blocks, DetRestrict det = DetRestrict::Any) {
    return GroupSpec{Kind::Pattern, std::move(blocks), det};
  }

  bool has_cond(Cond c) const {
    for (const Block& b : blocks)
      if (b.cond == c) return true;
    return false;
  }
  // Structurally contains the stable orthogonal group.
  bool contains_stable() const {
    if (kind == Kind::FullOPlus || kind == Kind::Stable) return det == DetRestrict::Any;
    return det == DetRestrict::Any && !has_cond(Cond::DetId);
  }
};

void validate_group_spec(const GroupSpec& spec, const Lattice& l);

// Precomputed per-(lattice, group) evaluator; membership tests are called
// in tight candidate sweeps.
class GroupEvaluator {
 public:
  GroupEvaluator(const Lattice& l, const GroupSpec& spec);

  const Lattice& lattice() const { return *l_; }
  const GroupSpec& spec() const { return spec_; }

  bool contains(const Isometry& g) const;
  bool contains_minus_id() const;

  // Discriminant conditions only; caller guarantees g preserves L and
  // lies in O+ (used for Eichler-type elements where both are forced).
  bool disc_conditions(const Isometry& g) const;

 private:
  const Lattice* l_;
  GroupSpec spec_;
  DiscGroup whole_;                   // Stable
  std::vector<DiscGroup> block_disc_;  // Pattern
};

bool contains(const GroupSpec& spec, const Lattice& l, const Isometry& g);
bool contains_minus_id(const GroupSpec& spec, const Lattice& l);

// True iff the pattern conditions collapse to the stable group, i.e. every
// PlusMinusId or DetId block has 2-elementary discriminant.
bool pattern_equals_stable(const GroupSpec& spec, const Lattice& l);

}  // namespace latcusp
