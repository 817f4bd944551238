#pragma once

// Existence decider with certificates, the two explicit witness
// constructions, and the replication harness for the named lattice
// families.

#include <map>
#include <string>

#include "latcusp/cusps.hpp"

namespace latcusp {

enum class NamedExample { Minus8, Minus4Sq };

// The ambient lattice U + <-8> + M (resp. U + <-4>^2 + M), the group acting
// as +-id on A_M and id on the distinguished block, and the explicit
// witness vectors l, m-lift in that basis.
struct WitnessConstruction {
  Lattice ambient;
  GroupSpec group;
  IntVec l;
  RatVec m_lift;
};

WitnessConstruction build_named_example(NamedExample which, const Lattice& m);

enum class ExistStatus { Yes, No, Unknown };

struct ExistenceReport {
  ExistStatus status = ExistStatus::Unknown;
  std::string certificate;            // why No / why Unknown / how Yes was found
  std::optional<IntVec> cusp;         // isotropic l of the irregular cusp (Yes)
  std::optional<RatVec> witness_m;    // ambient lift of the witness translation (Yes)
  std::optional<RatVec> witness_w;    // witness coset rep in L(I)-coordinates (Yes)
};

struct SearchBudget {
  long iso_box = 2;
  long iso_candidates = 2000000;
  SearchLimits limits;
};

// Certificate pipeline; only even lattices of signature (2, b).
ExistenceReport has_irregular_cusp(const Lattice& l, const GroupSpec& spec,
                                   const SearchBudget& budget = {});

// Families. Verdicts are compared against the published classification;
// "any" marks parameter points the classification leaves open.
enum class Family { K3, K3n, OG10, Kummer, CubicTVA, Pe, FM };

struct FamilyPoint {
  std::map<std::string, long> params;
  ExistenceReport report;
  std::string expected;  // "irregular" | "regular" | "any"
  bool match = false;
  double millis = 0.0;
};

struct FamilyReport {
  std::string family;
  std::map<std::string, long> fixed_params;
  std::string lattice_summary;
  std::vector<FamilyPoint> points;
  bool all_match = true;
};

struct FamilyRequest {
  Family family = Family::K3;
  long m = 1;                    // E8 copies (K3, K3n)
  std::pair<long, long> d_range{1, 12};
  std::pair<long, long> t_range{1, 5};
  std::optional<Lattice> big_block;  // M for OG10 / Pe
  SearchBudget budget;
};

FamilyReport replicate_table(const FamilyRequest& req);

std::string family_name(Family f);
Family family_from_name(const std::string& s);

}  // namespace latcusp
