// Command-line front end: parse lattice/group/support specs, dispatch the
// library operations, emit deterministic JSON on stdout.
//
// Exit codes: 0 success, 1 verdict mismatch (replicate / verify-example),
// 2 malformed spec, 3 budget exhausted or Unknown verdict.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "latcusp/json_io.hpp"

using namespace latcusp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitSpec = 2;
constexpr int kExitBudget = 3;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("malformed JSON in '") + path + "': " + e.what());
  }
}

Lattice load_lattice(const std::string& arg) {
  std::ifstream probe(arg);
  if (probe) return lattice_from_json(read_json_file(arg));
  return lattice_from_shorthand(arg);
}

GroupSpec load_group(const std::string& arg) {
  if (arg == "stable") return GroupSpec::stable();
  if (arg == "full") return GroupSpec::full_o_plus();
  return group_from_json(read_json_file(arg));
}

std::pair<long, long> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    long v = std::stol(s);
    return {v, v};
  }
  return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
  std::string lattice;
  std::string group = "stable";
  std::string isotropic;
  std::string ray;
  std::string div_filter;
  std::string j1, j2;
  std::string m_block;
  std::string support_path;
  std::string slope_path;
  std::string family;
  std::string d_range = "1..12";
  std::string t_range = "1..5";
  long m_copies = 1;
  long box = 2;
  long max_candidates = 2000000;
  long denominator_bound = 1 << 16;
  int brute_limit = 14;
  int pruned_limit = 26;
  long pluri_m = -1;
  bool pruned = false;
  bool assume_in_cone = false;
  bool timings = false;
  bool ray_irregular = false;
};

SearchLimits limits_from(const Options& o) {
  SearchLimits lim;
  lim.disc_enum_limit = o.denominator_bound;
  lim.brute_rank_limit = o.brute_limit;
  lim.pruned_rank_limit = o.pruned_limit;
  return lim;
}

SearchBudget budget_from(const Options& o) {
  SearchBudget b;
  b.iso_box = o.box;
  b.iso_candidates = o.max_candidates;
  b.limits = limits_from(o);
  return b;
}

int cmd_disc(const Options& o) {
  Lattice l = load_lattice(o.lattice);
  DiscGroup a = disc_group(l);
  json out;
  out["schema"] = "1";
  out["invariant_factors"] = int_vec_to_json(a.factors);
  out["order"] = a.order.get_str();
  json gens = json::array();
  for (const RatVec& g : a.generators) gens.push_back(rat_vec_to_json(g));
  out["generators"] = gens;
  out["even"] = l.even;
  out["signature"] = {l.sig_pos, l.sig_neg};
  emit(out);
  return kExitOk;
}

int cmd_isotropic(const Options& o) {
  Lattice l = load_lattice(o.lattice);
  std::optional<Int> div;
  if (!o.div_filter.empty()) div = Int(o.div_filter);
  auto lines = enumerate_isotropic(l, o.box, div, o.max_candidates);
  json out;
  out["schema"] = "1";
  json arr = json::array();
  for (const auto& line : lines) {
    json e;
    e["l"] = int_vec_to_json(line.generator);
    e["div"] = line.div.get_str();
    arr.push_back(e);
  }
  out["lines"] = arr;
  emit(out);
  return kExitOk;
}

int cmd_irregular(const Options& o) {
  Lattice l = load_lattice(o.lattice);
  GroupSpec g = load_group(o.group);
  IsotropicLine line = make_isotropic_line(l, int_vec_from_csv(o.isotropic));
  SearchLimits lim = limits_from(o);
  CuspVerdict v = o.pruned ? search_pruned(l, g, line, lim) : irregular_0dim(l, g, line, lim);
  json out = verdict_to_json(v);
  if (v.status != CuspStatus::Unknown) {
    switch (u_star_class(l, g, v)) {
      case UStarClass::MinusIdCase:
        out["u_star"] = "minus_id";
        break;
      case UStarClass::TrivialCase:
        out["u_star"] = "trivial";
        break;
      case UStarClass::MinusEwCase:
        out["u_star"] = "minus_Ew";
        break;
    }
  }
  emit(out);
  return v.status == CuspStatus::Unknown ? kExitBudget : kExitOk;
}

int cmd_ray(const Options& o) {
  Lattice l = load_lattice(o.lattice);
  GroupSpec g = load_group(o.group);
  IsotropicLine line = make_isotropic_line(l, int_vec_from_csv(o.isotropic));
  SearchLimits lim = limits_from(o);
  CuspVerdict v = decide_0dim(l, g, line, lim);
  if (v.status == CuspStatus::Unknown) {
    emit(verdict_to_json(v));
    return kExitBudget;
  }
  RayClass rc = irregular_ray(l, g, v, rat_vec_from_csv(o.ray), o.assume_in_cone);
  json out;
  out["schema"] = "1";
  out["cusp"] = verdict_to_json(v)["status"];
  out["ray_regular"] = rc.regular;
  out["sigma_generator"] = rat_vec_to_json(rc.generator);
  emit(out);
  return kExitOk;
}

int cmd_onedim(const Options& o) {
  Lattice l = load_lattice(o.lattice);
  GroupSpec g = load_group(o.group);
  OneDimVerdict v =
      irregular_1dim(l, g, int_vec_from_csv(o.j1), int_vec_from_csv(o.j2), limits_from(o));
  emit(one_dim_to_json(v));
  return v.status == CuspStatus::Unknown ? kExitBudget : kExitOk;
}

int cmd_replicate(const Options& o) {
  FamilyRequest req;
  req.family = family_from_name(o.family);
  req.m = o.m_copies;
  req.d_range = parse_range(o.d_range);
  req.t_range = parse_range(o.t_range);
  if (!o.m_block.empty()) req.big_block = load_lattice(o.m_block);
  req.budget = budget_from(o);
  FamilyReport rep = replicate_table(req);
  emit(family_report_to_json(rep, o.timings));
  if (!rep.all_match) return kExitMismatch;
  for (const FamilyPoint& p : rep.points)
    if (p.report.status == ExistStatus::Unknown) return kExitBudget;
  return kExitOk;
}

int cmd_fourier(const Options& o) {
  json out;
  out["schema"] = "1";
  if (!o.support_path.empty()) {
    FourierSupport f = support_from_json(read_json_file(o.support_path));
    out["is_cusp_support"] = is_cusp_support(f);
    if (!o.ray.empty()) {
      RayData ray = make_ray_data(f, int_vec_from_csv(o.ray), !o.ray_irregular);
      Int nu = nu_sigma(f, ray);
      Rat ng = nu_geom(f, ray);
      out["nu_sigma"] = nu.get_str();
      out["nu_geom"] = rat_to_string(ng);
      if (o.ray_irregular && f.chi_sign) {
        int combined = *f.chi_sign * (f.weight % 2 == 0 ? 1 : -1);
        ParityReport pr = parity_check(f, ray, combined);
        json p;
        p["consistent"] = pr.consistent;
        p["violations"] = pr.violations;
        out["parity"] = p;
      }
      if (o.pluri_m >= 0) {
        out["pluricanonical_order"] = rat_to_string(pluricanonical_order(ng, o.pluri_m));
        out["extends"] = extends_over_boundary(nu, !o.ray_irregular, o.pluri_m);
      }
    }
  }
  if (!o.slope_path.empty()) {
    json spec = read_json_file(o.slope_path);
    SlopeCheckResult r = low_slope_check(
        spec.at("k").get<long>(), spec.at("b").get<long>(),
        rat_vec_from_json(spec.value("interior", json::array())),
        rat_vec_from_json(spec.value("regular", json::array())),
        rat_vec_from_json(spec.value("irregular", json::array())), spec.value("cusp", false));
    json sc;
    sc["pass"] = r.pass;
    sc["failures"] = r.failures;
    if (!r.warning.empty()) sc["warning"] = r.warning;
    out["slope_check"] = sc;
  }
  if (o.support_path.empty() && o.slope_path.empty())
    throw SpecError("fourier: provide --support and/or --slope-check");
  emit(out);
  return kExitOk;
}

int cmd_verify_example(const Options& o, const std::string& which) {
  NamedExample ex;
  if (which == "minus8")
    ex = NamedExample::Minus8;
  else if (which == "minus4sq")
    ex = NamedExample::Minus4Sq;
  else
    throw SpecError("verify-example expects minus8 | minus4sq");
  Lattice m = load_lattice(o.m_block.empty() ? "diag:2" : o.m_block);
  WitnessConstruction wc = build_named_example(ex, m);
  Isometry e = eichler(wc.ambient, wc.l, wc.m_lift);
  Isometry neg = negate(wc.ambient, e);

  json out;
  out["schema"] = "1";
  out["lattice"] = lattice_to_json(wc.ambient);
  out["l"] = int_vec_to_json(wc.l);
  out["m"] = rat_vec_to_json(wc.m_lift);
  json images;
  images["e"] = rat_vec_to_json(e.mat.col(0));
  images["f"] = rat_vec_to_json(e.mat.col(1));
  images["v"] = rat_vec_to_json(e.mat.col(2));
  out["images"] = images;
  bool prim_iso = is_primitive_isotropic(wc.ambient, wc.l);
  bool div2 = divisibility(wc.ambient, wc.l) == 2;
  bool member = contains(wc.group, wc.ambient, neg);
  out["primitive_isotropic"] = prim_iso;
  out["div_two"] = div2;
  out["neg_E_in_group"] = member;
  emit(out);
  return prim_iso && div2 && member ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for cusps of orthogonal modular varieties"};
  app.require_subcommand(1);
  Options o;

  auto* disc = app.add_subcommand("disc", "discriminant group of a lattice");
  disc->add_option("--lattice", o.lattice, "lattice spec (JSON file or shorthand)")->required();

  auto* iso = app.add_subcommand("isotropic", "enumerate primitive isotropic lines");
  iso->add_option("--lattice", o.lattice)->required();
  iso->add_option("--box", o.box, "coordinate bound");
  iso->add_option("--div", o.div_filter, "keep only lines with this divisibility");
  iso->add_option("--max-candidates", o.max_candidates);

  auto* irr = app.add_subcommand("irregular", "decide irregularity of a 0-dimensional cusp");
  irr->add_option("--lattice", o.lattice)->required();
  irr->add_option("--group", o.group, "stable | full | JSON file");
  irr->add_option("--isotropic", o.isotropic, "generator of I, e.g. \"2,2,1\"")->required();
  irr->add_flag("--pruned", o.pruned, "use the linear-prefilter search");
  irr->add_option("--brute-limit", o.brute_limit);
  irr->add_option("--pruned-limit", o.pruned_limit);
  irr->add_option("--denominator-bound", o.denominator_bound,
                  "guard on |A_{L(I)}| for the translation lattice sweep");

  auto* ray = app.add_subcommand("ray", "classify a ray at a cusp");
  ray->add_option("--lattice", o.lattice)->required();
  ray->add_option("--group", o.group);
  ray->add_option("--isotropic", o.isotropic)->required();
  ray->add_option("--ray", o.ray, "ray generator in L(I) coordinates")->required();
  ray->add_flag("--assume-in-cone", o.assume_in_cone);

  auto* onedim = app.add_subcommand("onedim", "decide irregularity of a 1-dimensional cusp");
  onedim->add_option("--lattice", o.lattice)->required();
  onedim->add_option("--group", o.group);
  onedim->add_option("--j1", o.j1, "first basis vector of J")->required();
  onedim->add_option("--j2", o.j2, "second basis vector of J")->required();

  auto* rep = app.add_subcommand("replicate", "run a named family table");
  rep->add_option("family", o.family, "K3 | K3n | OG10 | Kummer | CubicTVA | Pe | FM")
      ->required();
  rep->add_option("--m", o.m_copies, "number of E8(-1) copies");
  rep->add_option("--d", o.d_range, "d range, e.g. 1..12");
  rep->add_option("--t", o.t_range, "t range, e.g. 1..5");
  rep->add_option("--M", o.m_block, "companion block (JSON file or shorthand)");
  rep->add_option("--box", o.box);
  rep->add_option("--budget", o.max_candidates, "isotropic enumeration candidate budget");
  rep->add_flag("--timings", o.timings, "include per-point timings (non-deterministic)");

  auto* fou = app.add_subcommand("fourier", "vanishing-order arithmetic on a support");
  fou->add_option("--support", o.support_path, "support JSON file");
  fou->add_option("--ray", o.ray, "ray generator in index-lattice coordinates");
  fou->add_flag("--ray-irregular", o.ray_irregular);
  fou->add_option("--pluri-m", o.pluri_m, "pluricanonical degree for the order relation");
  fou->add_option("--slope-check", o.slope_path, "low-slope criterion JSON file");

  auto* ver = app.add_subcommand("verify-example", "check a named witness construction");
  std::string which;
  ver->add_option("which", which, "minus8 | minus4sq")->required();
  ver->add_option("--M", o.m_block, "hyperbolic companion block");

  try {
    app.parse(argc, argv);
    if (disc->parsed()) return cmd_disc(o);
    if (iso->parsed()) return cmd_isotropic(o);
    if (irr->parsed()) return cmd_irregular(o);
    if (ray->parsed()) return cmd_ray(o);
    if (onedim->parsed()) return cmd_onedim(o);
    if (rep->parsed()) return cmd_replicate(o);
    if (fou->parsed()) return cmd_fourier(o);
    if (ver->parsed()) return cmd_verify_example(o, which);
    return kExitSpec;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const BudgetError& e) {
    json out;
    out["schema"] = "1";
    out["error"] = e.what();
    emit(out);
    return kExitBudget;
  } catch (const SpecError& e) {
    json out;
    out["schema"] = "1";
    out["error"] = e.what();
    emit(out);
    return kExitSpec;
  } catch (const std::exception& e) {
    json out;
    out["schema"] = "1";
    out["error"] = e.what();
    emit(out);
    return kExitSpec;
  }
}
