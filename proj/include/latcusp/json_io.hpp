#pragma once

// JSON forms of the spec files and reports. Rationals travel as "p/q"
// strings; keys are emitted in sorted order so identical inputs produce
// byte-identical output.

#include <json.hpp>

#include "latcusp/classify.hpp"
#include "latcusp/fourier.hpp"

namespace latcusp {

using nlohmann::json;

json rat_vec_to_json(const RatVec& v);
RatVec rat_vec_from_json(const json& j);
json int_vec_to_json(const IntVec& v);
IntVec int_vec_from_json(const json& j);
json rat_mat_to_json(const RatMat& m);
json int_mat_to_json(const IntMat& m);
IntMat int_mat_from_json(const json& j);

Lattice lattice_from_json(const json& j);
json lattice_to_json(const Lattice& l);

GroupSpec group_from_json(const json& j);
json group_to_json(const GroupSpec& g);

FourierSupport support_from_json(const json& j);
json support_to_json(const FourierSupport& f);

json verdict_to_json(const CuspVerdict& v);
json one_dim_to_json(const OneDimVerdict& v);
json existence_to_json(const ExistenceReport& r);
json family_report_to_json(const FamilyReport& r, bool with_timing = false);

// Parse helpers for CLI flag values like "2,0,-1,0".
IntVec int_vec_from_csv(const std::string& s);
RatVec rat_vec_from_csv(const std::string& s);

// Shorthand lattice syntax: summands joined by '+', each one of
//   U | 2U | E8(-1) | A2(+1) | diag:-8,-2
// e.g. "2U+E8(-1)+diag:-8".
Lattice lattice_from_shorthand(const std::string& s);

}  // namespace latcusp
