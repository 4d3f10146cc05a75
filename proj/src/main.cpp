#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "regal/catalog.hpp"
#include "regal/embed.hpp"
#include "regal/errors.hpp"
#include "regal/expr.hpp"
#include "regal/gadget.hpp"
#include "regal/pipeline.hpp"
#include "regal/special.hpp"
#include "regal/tower.hpp"

namespace {

using nlohmann::json;
using namespace regal;

struct Output {
  std::string path;  // empty: stdout
  bool pretty = false;

  void emit(const json& j) const {
    std::string text = pretty ? j.dump(2) : j.dump();
    text += "\n";
    if (path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(path, std::ios::binary);
      if (!f) fail("IOError", "cannot write " + path);
      f << text;
    }
  }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--out", out.path, "write the JSON report to a file");
  cmd->add_flag("--pretty", out.pretty, "indented JSON");
}

FiniteGroup parse_group(const std::string& spec) {
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
    std::ifstream f(spec);
    if (!f) fail("IOError", "cannot read " + spec);
    std::stringstream ss;
    ss << f.rdbuf();
    return FiniteGroup::from_json_text(ss.str());
  }
  return FiniteGroup::from_literal(spec);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail("IOError", "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

json report_json(const VerificationReport& rep) {
  json j;
  j["pass"] = rep.pass;
  if (!rep.failing.empty()) j["failing"] = rep.failing;
  j["checks"] = json::array();
  for (const auto& c : rep.checks)
    j["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return j;
}

json rats_json(const std::vector<Rat>& v) {
  json j = json::array();
  for (const Rat& r : v) j.push_back(rat_str(r));
  return j;
}

int cmd_realize(const std::string& group_spec, const std::string& l_spec,
                const std::string& alpha_spec, const std::string& y_spec,
                int budget, const std::string& point_spec, const Output& out) {
  PipelineRequest req;
  req.g = parse_group(group_spec);
  if (!l_spec.empty()) req.l_minpoly = parse_qpoly(l_spec, "Y");
  if (!alpha_spec.empty()) req.alpha_map = parse_int_list(alpha_spec);
  req.y = parse_rat(y_spec);
  req.budget = budget;
  if (!point_spec.empty()) {
    auto comma = point_spec.find(',');
    if (comma == std::string::npos)
      fail("ParseError", "--point expects z,t");
    req.forced_point = {parse_rat(point_spec.substr(0, comma)),
                        parse_rat(point_spec.substr(comma + 1))};
  }
  PipelineCertificate cert = realize_aut(req);
  VerificationReport rep = verify_certificate(cert);
  json j = json::parse(pipeline_to_json_text(cert));
  j["verification"] = report_json(rep);
  out.emit(j);
  return rep.pass ? 0 : 1;
}

int cmd_verify(const std::string& path, const Output& out) {
  PipelineCertificate cert = pipeline_from_json_text(read_file(path));
  VerificationReport rep = verify_certificate(cert);
  out.emit(report_json(rep));
  return rep.pass ? 0 : 1;
}

int cmd_gadget_check(const std::string& y_spec, const Output& out) {
  TrinomialGadget g = make_gadget(parse_rat(y_spec));
  json j;
  j["y"] = rat_str(g.y);
  j["poly"] = g.poly.str("T", "X");
  j["disc"] = g.disc.str("T");
  j["irreducibility_witness"] = rat_str(g.irreducibility_witness);
  j["s3_certified"] = g.s3_certified;
  j["branch_points"] = rats_json(branch_points(g));
  out.emit(j);
  return g.s3_certified ? 0 : 1;
}

int cmd_gadget_distinct(const std::string& y1, const std::string& y2,
                        const Output& out) {
  DistinctnessCertificate c = gadget_distinctness(parse_rat(y1), parse_rat(y2));
  json j;
  j["distinct"] = c.distinct;
  j["method"] = c.method;
  j["loci1"] = rats_json(c.loci1);
  j["loci2"] = rats_json(c.loci2);
  if (c.witness_t) j["witness_t"] = rat_str(*c.witness_t);
  out.emit(j);
  return c.distinct ? 0 : 1;
}

int cmd_catalog_check(const std::string& entry_name, const Output& out) {
  auto cat = builtin_catalog();
  json table = json::array();
  bool all = true;
  for (const auto& e : cat) {
    if (!entry_name.empty() && e.name != entry_name) continue;
    CatalogVerdict v = catalog_self_check(e);
    all = all && v.pass;
    json je;
    je["entry"] = v.entry;
    je["pass"] = v.pass;
    je["checks"] = json::array();
    for (const auto& c : v.checks)
      je["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    table.push_back(std::move(je));
  }
  if (table.empty()) fail("CatalogMiss", "no entry named " + entry_name);
  out.emit(json{{"entries", table}, {"pass", all}});
  return all ? 0 : 1;
}

int cmd_specialize(const std::string& poly_spec, const std::string& point_spec,
                   int expected, int budget, const Output& out) {
  BiPoly f = parse_bipoly(poly_spec, "T", "X");
  json j;
  Rat t;
  if (!point_spec.empty()) {
    t = parse_rat(point_spec);
  } else {
    HilbertResult hr = hilbert_search({f}, budget);
    t = hr.t;
    j["rejections"] = json::array();
    for (const auto& rej : hr.rejections)
      j["rejections"].push_back({{"t", rat_str(rej.t)}, {"reason", rej.reason}});
  }
  SpecializationReport rep =
      specialize(f, t, expected > 0 ? std::optional<int>(expected) : std::nullopt);
  j["t"] = rat_str(rep.t);
  j["specialized"] = rep.specialized.str("X");
  j["full_degree"] = rep.full_degree;
  j["separable"] = rep.separable;
  j["irreducible"] = rep.irreducible;
  j["accepted"] = rep.accepted;
  if (rep.accepted) {
    j["closure_degree"] = rep.closure_degree;
    j["closure_minpoly"] = rep.ehat_t->minpoly.str("Y");
    j["degree_preserved"] = rep.degree_preserved;
  } else if (!rep.specialized.is_zero()) {
    json fs = json::array();
    for (const auto& [p, m] : rep.factorization.factors)
      fs.push_back({{"factor", p.str("X")}, {"multiplicity", m}});
    j["factorization"] = fs;
  }
  out.emit(j);
  return rep.accepted ? 0 : 1;
}

int cmd_fiber_product(const std::string& group_spec, const std::string& l_spec,
                      const std::string& alpha_spec,
                      const std::string& lprime_spec, const Output& out) {
  FiniteGroup g = parse_group(group_spec);
  std::shared_ptr<const AbsField> l =
      l_spec.empty() ? AbsField::rationals()
                     : AbsField::make(parse_qpoly(l_spec, "Y"), "r");
  std::vector<int> amap = alpha_spec.empty()
                              ? std::vector<int>(static_cast<std::size_t>(g.order), 0)
                              : parse_int_list(alpha_spec);
  EmbeddingProblem ep = make_problem(g, l, amap);
  auto lprime = AbsField::make(parse_qpoly(lprime_spec, "Y"), "rp");
  FElem l_in_lprime = FElem::from_rat(lprime, 0);
  if (!l->is_rational()) {
    auto roots = roots_in_field(lprime, kp_from_qpoly(lprime, l->minpoly));
    if (roots.empty()) fail("InclusionNotProvided", "L does not embed into L'");
    l_in_lprime = roots.front();
  }
  ReductionPackage pkg = reduce_via_fiber_product(ep, lprime, l_in_lprime);
  json j;
  j["g_order"] = ep.g.order;
  j["gal_lprime_order"] = pkg.gal_lprime.order();
  j["fiber_order"] = pkg.fp.group.order;
  j["gamma_prime"] = pkg.gamma_prime.map;
  j["delta"] = pkg.delta.map;
  j["alpha_prime_surjective"] = pkg.alpha_prime.is_surjective();
  j["kernel_first_projection"] = kernel_of_first_projection(pkg.fp).size();
  out.emit(j);
  return 0;
}

int cmd_restriction(const std::string& minpoly_spec, const Output& out) {
  QPoly mp = parse_qpoly(minpoly_spec, "Y");
  auto l = AbsField::make(mp, "r");
  SplittingField sf = splitting_field(mp);
  AutGroup gal = galois_group(sf);
  AutGroup aut_l = automorphism_group(l);
  RestrictionMap rm = restriction_map(gal, Subfield{l, sf.roots.front()}, aut_l);
  json j;
  j["closure_degree"] = sf.field->degree();
  j["galois_order"] = gal.order();
  j["aut_order"] = aut_l.order();
  j["domain"] = rm.domain;
  j["map"] = rm.map;
  j["normalizer_model"] = normalizer_model_check(l);
  out.emit(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic workbench for realizing finite groups as "
               "automorphism groups of number fields"};
  app.require_subcommand(1);

  Output out;
  std::string group_spec, l_spec, alpha_spec, point_spec, y_spec = "0";
  std::string y1_spec, y2_spec, entry_name, poly_spec, lprime_spec, path;
  int budget = 25, expected = 0;

  auto* realize = app.add_subcommand("realize-aut",
                                     "run the full construction pipeline");
  realize->add_option("--group", group_spec,
                      "group literal (C1..C6, V4, S3, S4, D4) or Cayley-table "
                      "JSON file")->required();
  realize->add_option("--l", l_spec, "minimal polynomial of L over Q (in Y)");
  realize->add_option("--alpha", alpha_spec, "comma-separated images of G in Aut(L/Q)");
  realize->add_option("--y", y_spec, "trinomial-family parameter");
  realize->add_option("--budget", budget, "specialization search bound");
  realize->add_option("--point", point_spec, "force the point z,t");
  add_output_flags(realize, out);

  auto* verify = app.add_subcommand("verify", "re-verify a certificate file");
  verify->add_option("certificate", path, "certificate JSON file")->required();
  add_output_flags(verify, out);

  auto* gadget = app.add_subcommand("gadget", "trinomial family operations");
  gadget->require_subcommand(1);
  auto* gcheck = gadget->add_subcommand("check", "certify one family member");
  gcheck->add_option("--y", y_spec, "family parameter");
  add_output_flags(gcheck, out);
  auto* gdist = gadget->add_subcommand("distinct",
                                       "certify two family members differ");
  gdist->add_option("--y1", y1_spec, "first parameter")->required();
  gdist->add_option("--y2", y2_spec, "second parameter")->required();
  add_output_flags(gdist, out);

  auto* catalog = app.add_subcommand("catalog", "realization catalog");
  catalog->require_subcommand(1);
  auto* ccheck = catalog->add_subcommand("check", "run all self-checks");
  ccheck->add_option("--entry", entry_name, "check a single entry");
  add_output_flags(ccheck, out);

  auto* spec = app.add_subcommand("specialize",
                                  "specialize a parametric polynomial");
  spec->add_option("--poly", poly_spec, "polynomial in T and X")->required();
  spec->add_option("--point", point_spec, "force t (default: search)");
  spec->add_option("--expected-degree", expected, "expected closure degree");
  spec->add_option("--budget", budget, "search bound");
  add_output_flags(spec, out);

  auto* fiber = app.add_subcommand("fiber-product",
                                   "reduce a problem through a fiber product");
  fiber->add_option("--group", group_spec, "group literal or JSON file")->required();
  fiber->add_option("--l", l_spec, "minimal polynomial of L (default Q)");
  fiber->add_option("--alpha", alpha_spec, "comma-separated alpha images");
  fiber->add_option("--lprime", lprime_spec,
                    "minimal polynomial of the Galois dominator L'")->required();
  add_output_flags(fiber, out);

  auto* restr = app.add_subcommand("restriction",
                                   "restriction map from the Galois closure");
  restr->add_option("--minpoly", poly_spec, "minimal polynomial of L (in Y)")
      ->required();
  add_output_flags(restr, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (realize->parsed())
      return cmd_realize(group_spec, l_spec, alpha_spec, y_spec, budget,
                         point_spec, out);
    if (verify->parsed()) return cmd_verify(path, out);
    if (gcheck->parsed()) return cmd_gadget_check(y_spec, out);
    if (gdist->parsed()) return cmd_gadget_distinct(y1_spec, y2_spec, out);
    if (ccheck->parsed()) return cmd_catalog_check(entry_name, out);
    if (spec->parsed())
      return cmd_specialize(poly_spec, point_spec, expected, budget, out);
    if (fiber->parsed())
      return cmd_fiber_product(group_spec, l_spec, alpha_spec, lprime_spec, out);
    if (restr->parsed()) return cmd_restriction(poly_spec, out);
  } catch (const regal::Error& e) {
    json err;
    err["error"] = {{"code", e.code()}, {"message", e.what()}};
    std::cout << err.dump() << "\n";
    return 1;
  }
  return 2;
}
