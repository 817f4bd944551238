#include "latcusp/json_io.hpp"

#include <sstream>

namespace latcusp {

json rat_vec_to_json(const RatVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(rat_to_string(x));
  return a;
}

RatVec rat_vec_from_json(const json& j) {
  if (!j.is_array()) throw SpecError("expected an array of rationals");
  RatVec v;
  for (const auto& e : j) {
    if (e.is_string())
      v.push_back(rat_from_string(e.get<std::string>()));
    else if (e.is_number_integer())
      v.push_back(Rat(e.get<long>()));
    else
      throw SpecError("expected a rational as \"p/q\" or integer");
  }
  return v;
}

json int_vec_to_json(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(x.get_str());
  return a;
}

IntVec int_vec_from_json(const json& j) {
  RatVec r = rat_vec_from_json(j);
  IntVec v;
  for (const Rat& x : r) v.push_back(to_int(x));
  return v;
}

json rat_mat_to_json(const RatMat& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json int_mat_to_json(const IntMat& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

IntMat int_mat_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw SpecError("expected a nonempty matrix");
  size_t rows = j.size();
  IntVec first = int_vec_from_json(j[0]);
  IntMat m(rows, first.size());
  for (size_t i = 0; i < rows; ++i) {
    IntVec r = int_vec_from_json(j[i]);
    if (r.size() != first.size()) throw SpecError("ragged matrix rows");
    for (size_t c = 0; c < r.size(); ++c) m(i, c) = r[c];
  }
  return m;
}

Lattice lattice_from_json(const json& j) {
  if (!j.contains("summands")) throw SpecError("lattice spec needs a \"summands\" array");
  std::vector<Summand> sp;
  for (const auto& e : j["summands"]) {
    std::string type = e.at("type").get<std::string>();
    Summand s;
    if (type == "U") {
      s.kind = Summand::Kind::U;
    } else if (type == "E8") {
      s.kind = Summand::Kind::E8;
      if (!e.contains("sign")) throw SpecError("E8 summand requires \"sign\"");
      s.sign = e["sign"].get<int>();
    } else if (type == "A2") {
      s.kind = Summand::Kind::A2;
      if (!e.contains("sign")) throw SpecError("A2 summand requires \"sign\"");
      s.sign = e["sign"].get<int>();
    } else if (type == "diag") {
      s.kind = Summand::Kind::Diag;
      s.entries = int_vec_from_json(e.at("entries"));
    } else if (type == "gram") {
      s.kind = Summand::Kind::Gram;
      s.custom = int_mat_from_json(e.at("matrix"));
    } else {
      throw SpecError("unknown summand type '" + type + "'");
    }
    sp.push_back(std::move(s));
  }
  return build_lattice(sp);
}

json lattice_to_json(const Lattice& l) {
  json out;
  json arr = json::array();
  for (const Summand& s : l.summands) {
    json e;
    switch (s.kind) {
      case Summand::Kind::U:
        e["type"] = "U";
        break;
      case Summand::Kind::E8:
        e["type"] = "E8";
        e["sign"] = s.sign;
        break;
      case Summand::Kind::A2:
        e["type"] = "A2";
        e["sign"] = s.sign;
        break;
      case Summand::Kind::Diag:
        e["type"] = "diag";
        e["entries"] = int_vec_to_json(s.entries);
        break;
      case Summand::Kind::Gram:
        e["type"] = "gram";
        e["matrix"] = int_mat_to_json(s.custom);
        break;
    }
    arr.push_back(e);
  }
  out["summands"] = arr;
  return out;
}

GroupSpec group_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "full") return GroupSpec::full_o_plus();
  if (kind == "stable") return GroupSpec::stable();
  if (kind != "pattern") throw SpecError("group kind must be full | stable | pattern");
  std::vector<GroupSpec::Block> blocks;
  for (const auto& b : j.at("blocks")) {
    GroupSpec::Block blk;
    for (const auto& s : b.at("summands")) blk.summands.push_back(s.get<size_t>());
    std::string cond = b.at("condition").get<std::string>();
    if (cond == "id")
      blk.cond = GroupSpec::Cond::Id;
    else if (cond == "pm_id")
      blk.cond = GroupSpec::Cond::PlusMinusId;
    else if (cond == "det_id")
      blk.cond = GroupSpec::Cond::DetId;
    else
      throw SpecError("block condition must be id | pm_id | det_id");
    blocks.push_back(std::move(blk));
  }
  GroupSpec::DetRestrict det = GroupSpec::DetRestrict::Any;
  if (j.contains("det")) {
    std::string d = j["det"].get<std::string>();
    if (d == "plus")
      det = GroupSpec::DetRestrict::Plus;
    else if (d != "any")
      throw SpecError("det restriction must be any | plus");
  }
  return GroupSpec::pattern(std::move(blocks), det);
}

json group_to_json(const GroupSpec& g) {
  json out;
  switch (g.kind) {
    case GroupSpec::Kind::FullOPlus:
      out["kind"] = "full";
      return out;
    case GroupSpec::Kind::Stable:
      out["kind"] = "stable";
      return out;
    case GroupSpec::Kind::Pattern:
      break;
  }
  out["kind"] = "pattern";
  json blocks = json::array();
  for (const auto& b : g.blocks) {
    json blk;
    blk["summands"] = b.summands;
    blk["condition"] = b.cond == GroupSpec::Cond::Id         ? "id"
                       : b.cond == GroupSpec::Cond::PlusMinusId ? "pm_id"
                                                                : "det_id";
    blocks.push_back(blk);
  }
  out["blocks"] = blocks;
  out["det"] = g.det == GroupSpec::DetRestrict::Plus ? "plus" : "any";
  return out;
}

FourierSupport support_from_json(const json& j) {
  IntMat gram = int_mat_from_json(j.at("index_lattice_gram"));
  std::vector<FourierTerm> terms;
  for (const auto& t : j.at("terms")) {
    FourierTerm term;
    term.l = rat_vec_from_json(t.at("l"));
    if (t.contains("active")) term.active = t["active"].get<bool>();
    terms.push_back(std::move(term));
  }
  long k = j.at("k").get<long>();
  std::optional<int> chi;
  if (j.contains("chi_sign")) chi = j["chi_sign"].get<int>();
  return make_support(gram, std::move(terms), k, chi);
}

json support_to_json(const FourierSupport& f) {
  json out;
  out["index_lattice_gram"] = int_mat_to_json(f.index_lattice.gram);
  json terms = json::array();
  for (const FourierTerm& t : f.terms) {
    json e;
    e["l"] = rat_vec_to_json(t.l);
    if (!t.active) e["active"] = false;
    terms.push_back(e);
  }
  out["terms"] = terms;
  out["k"] = f.weight;
  if (f.chi_sign) out["chi_sign"] = *f.chi_sign;
  return out;
}

namespace {

std::string status_word(CuspStatus s) {
  switch (s) {
    case CuspStatus::Regular:
      return "regular";
    case CuspStatus::Irregular:
      return "irregular";
    case CuspStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace

json verdict_to_json(const CuspVerdict& v) {
  json out;
  out["schema"] = "1";
  out["status"] = status_word(v.status);
  if (!v.reason.empty()) out["reason"] = v.reason;
  out["isotropic"] = int_vec_to_json(v.line.generator);
  out["div"] = v.div.get_str();
  out["disc_LI"] = int_vec_to_json(v.disc_LI_factors);
  if (v.quotient) out["LI_gram"] = int_mat_to_json(v.quotient->base.gram);
  if (v.translations) {
    out["U_basis"] = rat_mat_to_json(v.translations->basis);
    out["U_index"] = v.translations->index.get_str();
  }
  if (v.witness) out["witness"] = rat_vec_to_json(*v.witness);
  if (v.u_prime_basis) out["U_prime_basis"] = rat_mat_to_json(*v.u_prime_basis);
  return out;
}

json one_dim_to_json(const OneDimVerdict& v) {
  json out;
  out["schema"] = "1";
  out["status"] = status_word(v.status);
  out["zero_dim"] = verdict_to_json(v.zero_dim);
  if (v.status != CuspStatus::Unknown) {
    out["ray_regular"] = v.ray.regular;
    out["sigma_generator"] = rat_vec_to_json(v.ray.generator);
  }
  if (v.u_J_generator) out["U_J_generator"] = rat_vec_to_json(*v.u_J_generator);
  return out;
}

json existence_to_json(const ExistenceReport& r) {
  json out;
  out["schema"] = "1";
  switch (r.status) {
    case ExistStatus::Yes:
      out["status"] = "irregular";
      break;
    case ExistStatus::No:
      out["status"] = "regular";
      break;
    case ExistStatus::Unknown:
      out["status"] = "unknown";
      break;
  }
  out["certificate"] = r.certificate;
  if (r.cusp) {
    json w;
    w["l"] = int_vec_to_json(*r.cusp);
    if (r.witness_m) w["m"] = rat_vec_to_json(*r.witness_m);
    if (r.witness_w) w["w"] = rat_vec_to_json(*r.witness_w);
    out["witness"] = w;
  }
  return out;
}

json family_report_to_json(const FamilyReport& r, bool with_timing) {
  json out;
  out["schema"] = "1";
  out["family"] = r.family;
  for (const auto& [k, v] : r.fixed_params) out[k] = v;
  out["lattice"] = r.lattice_summary;
  out["match"] = r.all_match;
  json pts = json::array();
  for (const FamilyPoint& p : r.points) {
    json e;
    for (const auto& [k, v] : p.params) e[k] = v;
    e["verdict"] = existence_to_json(p.report)["status"];
    e["expected"] = p.expected;
    e["match"] = p.match;
    if (p.report.cusp) {
      json w;
      w["l"] = int_vec_to_json(*p.report.cusp);
      if (p.report.witness_m) w["m"] = rat_vec_to_json(*p.report.witness_m);
      e["witness"] = w;
    }
    if (!p.report.certificate.empty()) e["certificate"] = p.report.certificate;
    if (with_timing) e["millis"] = p.millis;
    pts.push_back(e);
  }
  out["points"] = pts;
  return out;
}

IntVec int_vec_from_csv(const std::string& s) {
  RatVec r = rat_vec_from_csv(s);
  IntVec v;
  for (const Rat& x : r) v.push_back(to_int(x));
  return v;
}

RatVec rat_vec_from_csv(const std::string& s) {
  RatVec v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    // trim spaces
    size_t a = item.find_first_not_of(" \t");
    size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw SpecError("empty vector component");
    v.push_back(rat_from_string(item.substr(a, b - a + 1)));
  }
  if (v.empty()) throw SpecError("empty vector");
  return v;
}

Lattice lattice_from_shorthand(const std::string& s) {
  std::vector<Summand> sp;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, '+')) {
    size_t a = part.find_first_not_of(" \t");
    size_t b = part.find_last_not_of(" \t");
    if (a == std::string::npos) throw SpecError("empty summand in shorthand");
    part = part.substr(a, b - a + 1);

    long count = 1;
    size_t pos = 0;
    while (pos < part.size() && isdigit(static_cast<unsigned char>(part[pos]))) ++pos;
    if (pos > 0) {
      count = std::stol(part.substr(0, pos));
      part = part.substr(pos);
    }
    if (count < 1) throw SpecError("summand multiplicity must be positive");

    Summand su;
    if (part == "U") {
      su.kind = Summand::Kind::U;
    } else if (part.rfind("E8", 0) == 0 || part.rfind("A2", 0) == 0) {
      su.kind = part[0] == 'E' ? Summand::Kind::E8 : Summand::Kind::A2;
      std::string rest = part.substr(2);
      if (rest == "(-1)")
        su.sign = -1;
      else if (rest == "(+1)" || rest == "(1)")
        su.sign = 1;
      else
        throw SpecError("E8/A2 shorthand needs an explicit sign, e.g. E8(-1)");
    } else if (part.rfind("diag:", 0) == 0) {
      su.kind = Summand::Kind::Diag;
      su.entries = int_vec_from_csv(part.substr(5));
    } else {
      throw SpecError("cannot parse summand shorthand '" + part + "'");
    }
    for (long k = 0; k < count; ++k) sp.push_back(su);
  }
  return build_lattice(sp);
}

}  // namespace latcusp
