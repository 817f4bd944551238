#include <doctest.h>

#include "test_util.hpp"

using namespace latcusp;
using namespace latcusp::testutil;

namespace {

// The group acting as +-id on A_M and id on the distinguished block, for a
// lattice whose last summand is the distinguished one.
GroupSpec pm_then_id(const Lattice& l) {
  GroupSpec::Block pm, id;
  pm.cond = GroupSpec::Cond::PlusMinusId;
  for (size_t s = 0; s + 1 < l.summands.size(); ++s) pm.summands.push_back(s);
  id.cond = GroupSpec::Cond::Id;
  id.summands.push_back(l.summands.size() - 1);
  return GroupSpec::pattern({pm, id});
}

}  // namespace

TEST_CASE("stable group contains every integral transvection from L(I)") {
  Rng rng(20240841);
  for (int it = 0; it < 40; ++it) {
    Lattice l = random_even_lattice(rng, rand_in(rng, 3, 6));
    GroupEvaluator stable(l, GroupSpec::stable());
    IntVec iso(l.rank(), Int(0));
    iso[0] = 1;
    // integral lift from the perp
    IntMat row(1, l.rank());
    IntVec gl = l.gram * iso;
    for (size_t j = 0; j < l.rank(); ++j) row(0, j) = gl[j];
    IntMat kernel = integer_kernel(row);
    RatVec m(l.rank(), Rat(0));
    for (size_t c = 0; c < kernel.cols(); ++c) {
      long coeff = rand_in(rng, -2, 2);
      for (size_t i = 0; i < l.rank(); ++i) m[i] += Rat(coeff) * Rat(kernel(i, c));
    }
    CHECK(stable.contains(eichler(l, iso, m)));
  }
}

TEST_CASE("witness membership in the pattern group") {
  // On U + <-8> + <6>, -E lies in the group (pm on M, id on <-8>) while E
  // itself does not.
  Lattice l = lattice_from_shorthand("U+diag:-8+diag:6");
  GroupSpec::Block pm, id;
  pm.cond = GroupSpec::Cond::PlusMinusId;
  pm.summands = {0, 2};
  id.cond = GroupSpec::Cond::Id;
  id.summands = {1};
  GroupSpec spec = GroupSpec::pattern({pm, id});

  Isometry e = eichler(l, {2, 2, 1, 0}, {Rat(1, 2), Rat(-1, 2), Rat(0), Rat(0)});
  CHECK_FALSE(contains(spec, l, e));
  CHECK(contains(spec, l, negate(l, e)));
  // -E acts as -id on A_M = Z/6, so it is not stable
  CHECK_FALSE(contains(GroupSpec::stable(), l, negate(l, e)));

  // With a 2-elementary companion block the pattern group collapses to the
  // stable group and -E becomes stable.
  Lattice l2 = lattice_from_shorthand("U+diag:-8+diag:2");
  Isometry e2 = eichler(l2, {2, 2, 1, 0}, {Rat(1, 2), Rat(-1, 2), Rat(0), Rat(0)});
  CHECK(contains(GroupSpec::stable(), l2, negate(l2, e2)));
}

TEST_CASE("minus identity membership") {
  // A_L = Z/2: 2-elementary, so -id is stable
  Lattice l1 = lattice_from_shorthand("2U+diag:-2");
  CHECK(contains_minus_id(GroupSpec::stable(), l1));
  CHECK(contains(GroupSpec::stable(), l1, minus_identity(l1)));

  // A_L = Z/8: -1 is not 1 mod 8
  Lattice l8 = lattice_from_shorthand("2U+diag:-8");
  CHECK_FALSE(contains_minus_id(GroupSpec::stable(), l8));
  CHECK_FALSE(contains(GroupSpec::stable(), l8, minus_identity(l8)));

  // pattern group with id on <-2d>: -id belongs iff d = 1
  for (long d : {1L, 2L, 3L, 4L}) {
    Lattice l = lattice_from_shorthand("2U+diag:" + std::to_string(-2 * d));
    GroupSpec spec = pm_then_id(l);
    CHECK(contains_minus_id(spec, l) == (d == 1));
    CHECK(contains(spec, l, minus_identity(l)) == (d == 1));
  }
}

TEST_CASE("contains_minus_id agrees with contains(-id) on random specs") {
  Rng rng(20240842);
  for (int it = 0; it < 60; ++it) {
    Lattice l = random_even_lattice(rng, rand_in(rng, 3, 6));
    GroupSpec spec;
    switch (rand_in(rng, 0, 3)) {
      case 0:
        spec = GroupSpec::stable();
        break;
      case 1:
        spec = GroupSpec::full_o_plus();
        break;
      default: {
        GroupSpec::Block a, b;
        a.cond = rand_in(rng, 0, 1) ? GroupSpec::Cond::PlusMinusId : GroupSpec::Cond::DetId;
        b.cond = GroupSpec::Cond::Id;
        size_t cut = rand_in(rng, 1, l.summands.size() - 1);
        for (size_t s = 0; s < cut; ++s) a.summands.push_back(s);
        for (size_t s = cut; s < l.summands.size(); ++s) b.summands.push_back(s);
        spec = GroupSpec::pattern({a, b});
        if (rand_in(rng, 0, 3) == 0) spec.det = GroupSpec::DetRestrict::Plus;
        break;
      }
    }
    CHECK(contains_minus_id(spec, l) == contains(spec, l, minus_identity(l)));
  }
}

TEST_CASE("membership is closed under composition and inverse") {
  Rng rng(20240843);
  Lattice l = lattice_from_shorthand("U+diag:-8+diag:2");
  GroupSpec::Block pm, id;
  pm.cond = GroupSpec::Cond::PlusMinusId;
  pm.summands = {0, 2};
  id.cond = GroupSpec::Cond::Id;
  id.summands = {1};
  GroupSpec spec = GroupSpec::pattern({pm, id});
  GroupEvaluator ev(l, spec);

  std::vector<Isometry> members;
  Isometry e = eichler(l, {2, 2, 1, 0}, {Rat(1, 2), Rat(-1, 2), Rat(0), Rat(0)});
  members.push_back(negate(l, e));
  for (int it = 0; it < 30; ++it) {
    Isometry g = random_integral_isometry(rng, l);
    if (ev.contains(g)) members.push_back(g);
  }
  for (size_t i = 0; i < members.size(); ++i) {
    CHECK(ev.contains(inverse(l, members[i])));
    for (size_t j = 0; j < members.size(); ++j)
      CHECK(ev.contains(compose(l, members[i], members[j])));
  }
}

TEST_CASE("stable membership implies pattern membership (monotonicity)") {
  Rng rng(20240844);
  for (int it = 0; it < 30; ++it) {
    Lattice l = random_even_lattice(rng, rand_in(rng, 3, 5));
    GroupSpec spec = pm_then_id(l);
    GroupEvaluator stable(l, GroupSpec::stable());
    GroupEvaluator pattern(l, spec);
    Isometry g = random_integral_isometry(rng, l);
    if (stable.contains(g)) CHECK(pattern.contains(g));
  }
}

TEST_CASE("pattern validation") {
  Lattice l = lattice_from_shorthand("2U+diag:-2");
  GroupSpec::Block only;
  only.cond = GroupSpec::Cond::Id;
  only.summands = {0};
  GroupSpec incomplete = GroupSpec::pattern({only});
  Isometry id = identity_isometry(l);
  CHECK_THROWS_AS(contains(incomplete, l, id), SpecError);

  GroupSpec::Block dup1, dup2;
  dup1.summands = {0, 1, 2};
  dup2.summands = {2};
  GroupSpec overlapping = GroupSpec::pattern({dup1, dup2});
  CHECK_THROWS_AS(contains(overlapping, l, id), SpecError);
}

TEST_CASE("pattern_equals_stable reflects 2-elementary companion blocks") {
  auto witness_spec = [] {
    GroupSpec::Block pm, id;
    pm.cond = GroupSpec::Cond::PlusMinusId;
    pm.summands = {0, 2};
    id.cond = GroupSpec::Cond::Id;
    id.summands = {1};
    return GroupSpec::pattern({pm, id});
  }();
  Lattice l2 = lattice_from_shorthand("U+diag:-8+diag:-2");  // A_M = Z/2
  CHECK(pattern_equals_stable(witness_spec, l2));
  Lattice l6 = lattice_from_shorthand("U+diag:-8+diag:-6");  // A_M = Z/6
  CHECK_FALSE(pattern_equals_stable(witness_spec, l6));
}
