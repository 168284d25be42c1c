// Command-line front end for the semiloop library.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "semiloop/autgroup.hpp"
#include "semiloop/census.hpp"
#include "semiloop/error.hpp"
#include "semiloop/loops.hpp"
#include "semiloop/semifield.hpp"
#include "verify.hpp"

using namespace semiloop;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitInvariant = 4;

struct Common {
  std::string field = "2^2";
  std::string mod;
  unsigned sigma_r = 1;
  std::string f;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::size_t cap_degree = perm::Bsgs::kDegreeCap;
};

/// Raised for failures that must exit with a specific status and a JSON body.
struct ExitWith {
  int code;
  json body;
};

std::string num(const BigInt& v) { return nt::to_string(v); }
std::string num(std::uint64_t v) { return std::to_string(v); }

gf::Tower tower_of(const Common& c) {
  auto d = gf::parse_field_descriptor(c.mod.empty() ? c.field : c.field + " mod=" + c.mod);
  if (c.sigma_r == 0 || d.l % c.sigma_r != 0 || c.sigma_r == d.l) {
    throw Error(ErrorCode::InvalidArgument, "--sigma-r must be a proper divisor of l");
  }
  gf::Field::Options o;
  o.modulus = d.modulus;
  return gf::make_tower(d.p, c.sigma_r, d.l / c.sigma_r, o);
}

Semifield semifield_of(const Common& c) {
  if (c.f.empty()) throw Error(ErrorCode::InvalidArgument, "--f is required");
  auto tw = tower_of(c);
  const auto f = skew::parse(tw, c.f);
  return Semifield(std::move(tw), f);
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& v : j) flatten(v, prefix + "[" + std::to_string(i++) + "]", out);
  } else {
    out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

void emit(const json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  if (format == "csv") std::cout << "key,value\n";
  for (const auto& [k, v] : rows) std::cout << k << (format == "csv" ? "," : ": ") << v << "\n";
}

json nucleus_json(const NucleusInfo& n) {
  json j;
  j["size"] = num(n.size);
  j["closed"] = n.closed;
  if (!n.tag.empty()) j["field"] = n.tag;
  return j;
}

json sandwich_json(const Semifield& s) {
  // Mlt acts F-linearly on S_f, so it sits inside GL(nm, q).
  const unsigned d = s.tower().n() * s.m();
  json j;
  j["dimension_over_F"] = num(std::uint64_t{d});
  j["sl_order"] = num(nt::sl_order(d, s.tower().q()));
  j["gl_order"] = num(nt::gl_order(d, s.tower().q()));
  return j;
}

void check_degree_cap(const Semifield& s, const Common& c) {
  const std::uint64_t degree = s.size() - 1;
  if (degree <= c.cap_degree && degree <= Loop::kTableCap) return;
  json j;
  j["error"] = "DegreeCapExceeded";
  j["degree"] = num(degree);
  j["cap"] = num(std::uint64_t{std::min<std::size_t>(c.cap_degree, Loop::kTableCap)});
  // One transversal pair per base point, each up to `degree` permutations of
  // `degree` two-byte points.
  const double bytes = 4.0 * static_cast<double>(degree) * static_cast<double>(degree) * (s.tower().n() * s.m());
  j["estimated_transversal_bytes"] = num(static_cast<std::uint64_t>(bytes));
  j["sandwich"] = sandwich_json(s);
  throw ExitWith{kExitCap, j};
}

int cmd_field_info(const Common& c) {
  const auto tw = tower_of(c);
  const auto& K = tw.field();
  json j;
  j["p"] = num(std::uint64_t{K.characteristic()});
  j["l"] = num(std::uint64_t{K.degree()});
  j["order"] = num(K.order());
  j["modulus"] = K.modulus();
  j["primitive"] = K.format(K.primitive());
  j["r"] = num(std::uint64_t{tw.r()});
  j["n"] = num(std::uint64_t{tw.n()});
  j["q"] = num(tw.q());
  j["norm_kernel_order"] = num(tw.norm_kernel().order);
  json autos = json::array();
  for (const auto& a : tw.automorphisms()) autos.push_back({{"exponent", num(std::uint64_t{a.exponent})}, {"fixes_F", a.fixes_base}});
  j["automorphisms"] = autos;
  emit(j, c.format);
  return 0;
}

int cmd_skew_irreducible(const Common& c) {
  const auto tw = tower_of(c);
  const auto f = skew::make_monic(tw, skew::parse(tw, c.f));
  const bool irr = skew::is_irreducible(tw, f);
  const bool inv = skew::is_right_invariant(tw, f);
  json j;
  j["f"] = skew::format(tw, f);
  j["degree"] = num(std::uint64_t(f.degree()));
  j["irreducible"] = irr;
  j["right_invariant"] = inv;
  j["in_fixed_ring"] = skew::in_fixed_ring(tw, f);
  j["admissible"] = irr && !inv && f.degree() >= 2;
  j["divisor_candidates"] = num(static_cast<std::uint64_t>(skew::irreducibility_cost(tw, f.degree())));
  emit(j, c.format);
  return 0;
}

int cmd_skew_divmod(const Common& c, const std::string& g_text) {
  const auto tw = tower_of(c);
  const auto f = skew::parse(tw, c.f);
  const auto g = skew::parse(tw, g_text);
  const auto d = skew::right_divmod(tw, g, f);
  json j;
  j["g"] = skew::format(tw, g);
  j["f"] = skew::format(tw, f);
  j["quotient"] = skew::format(tw, d.quotient);
  j["remainder"] = skew::format(tw, d.remainder);
  emit(j, c.format);
  return 0;
}

int cmd_semifield_analyze(const Common& c) {
  const Semifield s = semifield_of(c);
  const auto nuc = s.nuclei();
  const auto tp = s.t_power_diagnostics();
  json j;
  j["field"] = s.field().descriptor();
  j["sigma_r"] = num(std::uint64_t{s.tower().r()});
  j["f"] = skew::format(s.tower(), s.f());
  j["order"] = num(s.size());
  j["m"] = num(std::uint64_t{s.m()});
  json nj;
  nj["left"] = nucleus_json(nuc.left);
  nj["middle"] = nucleus_json(nuc.middle);
  nj["right"] = nucleus_json(nuc.right);
  nj["nucleus"] = nucleus_json(nuc.nucleus);
  nj["center"] = nucleus_json(nuc.center);
  nj["right_by_membership"] = nucleus_json(nuc.right_by_membership);
  nj["right_formula_agrees"] = nuc.right_formula_agrees;
  j["nuclei"] = nj;
  json tj;
  tj["ft_in_Rf"] = tp.ft_in_rf;
  tj["t_cross_check"] = tp.t_cross_check;
  tj["power_associative_m_plus_1"] = tp.power_associative_m1;
  tj["powers_closed"] = tp.powers_closed;
  if (tp.powers_form_group) tj["powers_form_group"] = *tp.powers_form_group;
  tj["powers_count"] = num(tp.powers_count);
  if (tp.generated_order) tj["generated_order"] = num(*tp.generated_order);
  tj["f_in_fixed_ring"] = tp.f_in_fixed_ring;
  j["t_powers"] = tj;
  emit(j, c.format);
  return nuc.right_formula_agrees ? 0 : kExitInvariant;
}

int cmd_loop_mlt(const Common& c) {
  const Semifield s = semifield_of(c);
  check_degree_cap(s, c);
  const Loop L = Loop::from_semifield(s);
  MltOptions o;
  o.seed = c.seed;
  o.degree_cap = c.cap_degree;
  const auto G = mlt_group(L, o);
  const BigInt order = G.order();
  const BigInt inn = G.stabilizer_order(0);
  json j;
  j["loop_order"] = num(std::uint64_t{L.size()});
  j["mlt_order"] = num(order);
  j["inn_order"] = num(inn);
  json base = json::array(), orbits = json::array();
  for (auto b : G.base()) base.push_back(num(std::uint64_t{b}));
  for (auto o2 : G.orbit_lengths()) orbits.push_back(num(std::uint64_t{o2}));
  j["base"] = base;
  j["orbit_lengths"] = orbits;
  j["mlt_equals_L_times_inn"] = order == inn * L.size();
  const auto sw = sandwich_json(s);
  j["sandwich"] = sw;
  const unsigned d = s.tower().n() * s.m();
  j["within_sandwich"] = nt::sl_order(d, s.tower().q()) <= order && order <= nt::gl_order(d, s.tower().q());
  emit(j, c.format);
  return 0;
}

int cmd_loop_inn(const Common& c) {
  const Semifield s = semifield_of(c);
  check_degree_cap(s, c);
  const Loop L = Loop::from_semifield(s);
  MltOptions o;
  o.seed = c.seed;
  o.degree_cap = c.cap_degree;
  const auto G = mlt_group(L, o);
  const auto r = inn_group(L, G, c.seed);
  json j;
  j["inn_order"] = num(r.order);
  j["sampled_maps"] = num(std::uint64_t{r.sampled});
  j["samples_in_inn"] = r.samples_in_inn;
  if (r.generated_order) {
    j["generated_order"] = num(*r.generated_order);
    j["generated_matches"] = *r.generated_order == r.order;
  }
  emit(j, c.format);
  return r.samples_in_inn ? 0 : kExitInvariant;
}

int cmd_loop_aut(const Common& c, bool exhaustive) {
  const Semifield s = semifield_of(c);
  const auto sol = aut::solve_aut_conditions(s);
  const auto g = aut::aut_group_structure(s, sol);
  bool mult = true, scales = true;
  json params = json::array();
  for (const auto& h : sol) {
    mult = mult && aut::verify_multiplicative(s, h, c.seed).ok;
    scales = scales && aut::scales_f(s, h);
    params.push_back({{"tau_exponent", num(std::uint64_t{h.tau})}, {"k", s.field().format(h.k)}});
  }
  json j;
  j["parameters"] = params;
  j["group_order"] = num(std::uint64_t{sol.size()});
  j["group"] = g.id.tag();
  j["full_ring_automorphism_group"] = aut::solutions_are_full_group(s);
  j["all_multiplicative"] = mult;
  j["all_scale_f"] = scales;
  j["composition_law_matches"] = g.law_matches_maps;
  if (exhaustive) {
    if (s.size() - 1 > 80) throw Error(ErrorCode::SizeCapExceeded, "exhaustive loop automorphism search needs |L| <= 80");
    j["loop_automorphisms"] = num(loop_automorphism_count(Loop::from_semifield(s)));
  }
  emit(j, c.format);
  return mult && scales && g.law_matches_maps ? 0 : kExitInvariant;
}

int cmd_loop_inner(const Common& c) {
  const Semifield s = semifield_of(c);
  const auto r = aut::inner_automorphisms(s, c.seed);
  json j;
  j["count"] = num(std::uint64_t{r.maps.size()});
  if (r.expected_count) j["expected_count"] = num(*r.expected_count);
  j["count_matches"] = r.count_matches;
  j["nucleus_order"] = num(r.nucleus_size);
  j["nucleus_is_K"] = r.nucleus_is_K;
  j["all_multiplicative"] = r.all_multiplicative;
  if (r.nucleus_is_K) j["all_equal_H_id_k_norm_one"] = r.all_match_norm_one;
  j["norm_kernel_order"] = num(r.norm_kernel_order);
  if (r.structure) j["group"] = r.structure->tag();
  json cs = json::array();
  for (const auto& g : r.maps) cs.push_back(s.format(g.c));
  j["representatives"] = cs;
  bool ok = r.all_multiplicative && r.count_matches;
  if (s.size() - 1 <= Loop::kTableCap) {
    // Each G_c is the middle inner mapping T_c.
    const Loop L = Loop::from_semifield(s);
    bool equal = true;
    for (const auto& g : r.maps) {
      const auto T = inner_mapping(L, InnerKind::T, Loop::point_of(g.c));
      for (Loop::Pt x = 0; x < L.size() && equal; ++x) {
        equal = Loop::element_of(T(x)) == g.images[Loop::element_of(x)];
      }
    }
    j["equal_T_c"] = equal;
    ok = ok && equal;
  }
  emit(j, c.format);
  return ok ? 0 : kExitInvariant;
}

int cmd_loop_cyclic(const Common& c) {
  const Semifield s = semifield_of(c);
  check_degree_cap(s, c);
  const Loop L = Loop::from_semifield(s);
  const auto cy = cyclicity(L);
  json j;
  j["left_cyclic"] = cy.left_cyclic;
  j["right_cyclic"] = cy.right_cyclic;
  if (cy.left_witness) j["left_witness"] = s.format(Loop::element_of(*cy.left_witness));
  if (cy.right_witness) j["right_witness"] = s.format(Loop::element_of(*cy.right_witness));
  j["left_generators"] = num(std::uint64_t{cy.left_generators});
  j["right_generators"] = num(std::uint64_t{cy.right_generators});
  emit(j, c.format);
  return 0;
}

int cmd_loop_lagrange(const Common& c) {
  const Semifield s = semifield_of(c);
  check_degree_cap(s, c);
  const auto r = subloops_and_lagrange(Loop::from_semifield(s));
  json j;
  j["subloops"] = num(std::uint64_t{r.subloops.size()});
  json orders = json::array();
  for (auto o : r.orders) orders.push_back(num(std::uint64_t{o}));
  j["orders"] = orders;
  j["weak_lagrange"] = r.weak;
  j["strong_lagrange"] = r.strong;
  emit(j, c.format);
  return 0;
}

int cmd_loop_latin(const Common& c, const std::string& out_path) {
  const Semifield s = semifield_of(c);
  check_degree_cap(s, c);
  const Loop L = Loop::from_semifield(s);
  std::vector<std::string> legend;
  for (Loop::Pt x = 0; x < L.size(); ++x) legend.push_back(s.format(Loop::element_of(x)));
  if (out_path.empty()) {
    write_latin_csv(std::cout, L, legend);
  } else {
    std::ofstream os(out_path);
    if (!os) throw Error(ErrorCode::InvalidArgument, "cannot open " + out_path);
    write_latin_csv(os, L, legend);
  }
  return 0;
}

int cmd_census_count(const Common& c, std::uint64_t q, unsigned m) {
  const auto n = census::count_central_irreducible(q, m);
  json j;
  j["q"] = num(q);
  j["m"] = num(std::uint64_t{m});
  j["theta"] = num(census::theta(q, m));
  j["N_mobius"] = num(n.mobius);
  j["N_theta"] = num(n.via_theta);
  if (n.enumerated) j["N_enumerated"] = num(*n.enumerated);
  if (nt::checked_pow(q, m) <= (1ULL << 16)) {
    const auto o = census::gammaL_orbit_count(q, m);
    j["M"] = num(o.orbits);
    j["M_sandwich_holds"] = o.sandwich_ok;
  }
  emit(j, c.format);
  return 0;
}

int cmd_census_classify(const Common& c, unsigned m) {
  const auto tw = tower_of(c);
  if (m == 0) m = tw.n();
  const auto cl = census::cyclic_algebra_classes(tw, m);
  const auto& K = tw.field();

  struct Row {
    std::string rep;
    std::uint64_t size;
    census::Signature sig;
    SkewPoly f;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < cl.representatives.size(); ++i) {
    std::vector<gf::Elem> co(m + 1, K.zero());
    co[0] = K.neg(cl.representatives[i]);
    co[m] = K.one();
    const SkewPoly f(co);
    const auto nuc = Semifield(tw, f).nuclei();
    rows.push_back({K.format(cl.representatives[i]), cl.class_sizes[i],
                    {nuc.center.size, nuc.left.size, nuc.middle.size, nuc.right.size}, f});
  }

  // Isotopy between classes: merged by similarity, separated by signature,
  // otherwise undecided.
  json pairs = json::array();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < m && total <= (1ULL << 16); ++i) total *= K.order();
  const bool scan = total <= (1ULL << 16);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = i + 1; k < rows.size(); ++k) {
      std::string verdict = "undecided";
      if (rows[i].sig != rows[k].sig) {
        verdict = "separated";
      } else if (scan && census::similarity_witness(tw, rows[i].f, rows[k].f)) {
        verdict = "similar";
      }
      pairs.push_back({{"a", rows[i].rep}, {"b", rows[k].rep}, {"isotopy", verdict}});
    }
  }

  if (c.format == "csv") {
    std::cout << "representative,class_size,center,left,middle,right,numb_bound\n";
    for (const auto& r : rows) {
      std::cout << '"' << r.rep << "\"," << r.size << ',' << r.sig.center << ',' << r.sig.left << ','
                << r.sig.middle << ',' << r.sig.right << ',' << (cl.bound ? std::to_string(cl.bound->value) : "")
                << "\n";
    }
    return cl.within_bound ? 0 : kExitInvariant;
  }
  json j;
  j["q"] = num(tw.q());
  j["m"] = num(std::uint64_t{m});
  j["candidates"] = num(std::uint64_t{cl.candidates.size()});
  j["subfield_criterion_agrees"] = cl.subfield_criterion_agrees;
  j["class_count"] = num(std::uint64_t{rows.size()});
  if (cl.bound) j["numb_bound"] = {{"formula", cl.bound->kind}, {"value", num(cl.bound->value)}};
  j["within_bound"] = cl.within_bound;
  json cls = json::array();
  for (const auto& r : rows) {
    cls.push_back({{"representative", r.rep},
                   {"class_size", num(r.size)},
                   {"signature", {num(r.sig.center), num(r.sig.left), num(r.sig.middle), num(r.sig.right)}}});
  }
  j["classes"] = cls;
  j["isotopy_pairs"] = pairs;
  emit(j, c.format);
  return cl.within_bound ? 0 : kExitInvariant;
}

int cmd_census_bounds(const Common& c, std::uint64_t q, unsigned n, unsigned m) {
  const auto r = census::bounds_report(q, n, m);
  json j;
  j["q"] = num(r.q);
  j["n"] = num(std::uint64_t{r.n});
  j["m"] = num(std::uint64_t{r.m});
  j["theta"] = num(r.theta);
  j["N"] = num(r.N.mobius);
  if (r.M) j["M"] = num(*r.M);
  std::ostringstream lo;
  lo.precision(6);
  lo << r.M_lower;
  j["M_lower"] = lo.str();
  j["M_upper"] = num(r.M_upper);
  if (r.numb) j["numb_bound"] = {{"formula", r.numb->kind}, {"value", num(r.numb->value)}};
  std::ostringstream kb;
  kb.precision(10);
  kb << r.kantor;
  j["kantor_bound"] = kb.str();
  if (r.admissible_f) j["admissible_f"] = num(*r.admissible_f);
  if (r.observed_classes) j["observed_classes"] = num(*r.observed_classes);
  const auto& e = r.expected_signature;
  j["signature"] = {num(e.center), num(e.left), num(e.middle), num(e.right)};
  if (r.isotopy_lower) j["isotopy_lower_bound"] = num(*r.isotopy_lower);
  json checks = json::array();
  for (const auto& ch : r.checks) checks.push_back({{"check", ch.name}, {"holds", ch.holds}});
  j["checks"] = checks;
  emit(j, c.format);
  return r.all_hold() ? 0 : kExitInvariant;
}

int cmd_verify(const Common& c, int tier) {
  const auto lines = tool::run_verify(tier, c.seed);
  bool all = true;
  for (const auto& l : lines) all = all && l.pass;
  if (c.format == "json") {
    json arr = json::array();
    for (const auto& l : lines) {
      arr.push_back({{"tier", num(std::uint64_t(l.tier))}, {"check", l.name}, {"expected", l.expected}, {"got", l.got}, {"pass", l.pass}});
    }
    std::cout << json{{"checks", arr}, {"all_pass", all}}.dump(2) << "\n";
  } else {
    for (const auto& l : lines) {
      std::cout << (l.pass ? "PASS" : "FAIL") << "  [tier " << l.tier << "] " << l.name << "  expected " << l.expected
                << "  got " << l.got << "\n";
    }
  }
  return all ? 0 : 1;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooLarge:
    case ErrorCode::DegreeCapExceeded:
    case ErrorCode::SizeCapExceeded:
      return kExitCap;
    case ErrorCode::InvariantViolation:
    case ErrorCode::FormulaMismatch:
    case ErrorCode::NotClosed:
      return kExitInvariant;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semifields K[t;sigma]/K[t;sigma]f, their multiplicative loops and census tools"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App* sub, bool poly) {
    sub->add_option("--field", c.field, "Field descriptor p^l");
    sub->add_option("--mod", c.mod, "Modulus coefficients, constant term first, e.g. [1,0,1]");
    sub->add_option("--sigma-r", c.sigma_r, "sigma = x -> x^(p^r)");
    if (poly) sub->add_option("--f", c.f, "Polynomial literal, e.g. \"t^2 - g\"");
    sub->add_option("--format", c.format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
    sub->add_option("--seed", c.seed, "Seed for randomized group computations");
    sub->add_option("--cap-degree", c.cap_degree, "Largest permutation degree attempted");
  };

  int rc = 0;
  auto* field = app.add_subcommand("field", "Finite field information")->require_subcommand(1);
  auto* field_info = field->add_subcommand("info", "Field and tower data");
  common(field_info, false);
  field_info->callback([&] { rc = cmd_field_info(c); });

  auto* skew_cmd = app.add_subcommand("skew", "Twisted polynomial arithmetic")->require_subcommand(1);
  auto* irr = skew_cmd->add_subcommand("irreducible", "Irreducibility and right-invariance of f");
  common(irr, true);
  irr->callback([&] { rc = cmd_skew_irreducible(c); });
  std::string g_text;
  auto* dm = skew_cmd->add_subcommand("divmod", "Right division g = q f + r");
  common(dm, true);
  dm->add_option("--g", g_text, "Dividend")->required();
  dm->callback([&] { rc = cmd_skew_divmod(c, g_text); });

  auto* sf = app.add_subcommand("semifield", "Semifield S_f")->require_subcommand(1);
  auto* analyze = sf->add_subcommand("analyze", "Nuclei, center and powers of t");
  common(analyze, true);
  analyze->callback([&] { rc = cmd_semifield_analyze(c); });

  auto* loop = app.add_subcommand("loop", "Multiplicative loop of S_f")->require_subcommand(1);
  bool exhaustive = false;
  std::string latin_out;
  auto* mlt = loop->add_subcommand("mlt", "Multiplication group");
  auto* inn = loop->add_subcommand("inn", "Inner mapping group");
  auto* autc = loop->add_subcommand("aut", "Automorphisms H_{tau,k}");
  auto* inner = loop->add_subcommand("inner", "Inner automorphisms G_c");
  auto* cyc = loop->add_subcommand("cyclic", "Left and right cyclicity");
  auto* lag = loop->add_subcommand("lagrange", "Subloops and Lagrange properties");
  auto* latin = loop->add_subcommand("latin", "Multiplication table as CSV");
  for (auto* s : {mlt, inn, autc, inner, cyc, lag, latin}) common(s, true);
  autc->add_flag("--exhaustive", exhaustive, "Also count all loop automorphisms (|L| <= 80)");
  latin->add_option("--out", latin_out, "Output file instead of stdout");
  mlt->callback([&] { rc = cmd_loop_mlt(c); });
  inn->callback([&] { rc = cmd_loop_inn(c); });
  autc->callback([&] { rc = cmd_loop_aut(c, exhaustive); });
  inner->callback([&] { rc = cmd_loop_inner(c); });
  cyc->callback([&] { rc = cmd_loop_cyclic(c); });
  lag->callback([&] { rc = cmd_loop_lagrange(c); });
  latin->callback([&] { rc = cmd_loop_latin(c, latin_out); });

  auto* census_cmd = app.add_subcommand("census", "Counting and classification")->require_subcommand(1);
  std::uint64_t q = 2;
  unsigned n = 2, m = 2, class_m = 0;
  auto* count = census_cmd->add_subcommand("count", "theta, N(q,m) and M(q,m)");
  common(count, false);
  count->add_option("--q", q)->required();
  count->add_option("--m", m)->required();
  count->callback([&] { rc = cmd_census_count(c, q, m); });
  auto* classify = census_cmd->add_subcommand("classify", "Classes of nonassociative cyclic algebras");
  common(classify, false);
  classify->add_option("--m", class_m, "Degree (defaults to [K:F])");
  classify->callback([&] { rc = cmd_census_classify(c, class_m); });
  auto* bounds = census_cmd->add_subcommand("bounds", "Bound report for (q, n, m)");
  common(bounds, false);
  bounds->add_option("--q", q)->required();
  bounds->add_option("--n", n)->required();
  bounds->add_option("--m", m)->required();
  bounds->callback([&] { rc = cmd_census_bounds(c, q, n, m); });

  int tier = 1;
  auto* verify = app.add_subcommand("verify", "Worked-example regression matrix");
  common(verify, false);
  verify->add_option("--tier", tier, "1 (seconds) or 2 (minutes)")->check(CLI::Range(1, 2));
  verify->callback([&] { rc = cmd_verify(c, tier); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const ExitWith& e) {
    std::cout << e.body.dump(2) << "\n";
    return e.code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return rc;
}
