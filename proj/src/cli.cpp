#include "logdiv/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <json.hpp>
#include <ostream>

#include "logdiv/arrangements.hpp"
#include "logdiv/logder.hpp"
#include "logdiv/selftest.hpp"
#include "logdiv/symalg.hpp"
#include "logdiv/vfilt.hpp"

namespace logdiv::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- rendering

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

void render_text(const Json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_scalar(v)) {
        os << pad << k << ": " << scalar_text(v) << "\n";
      } else if (v.empty()) {
        os << pad << k << ": " << (v.is_array() ? "[]" : "{}") << "\n";
      } else {
        os << pad << k << ":\n";
        render_text(v, os, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_scalar(v)) {
        os << pad << "- " << scalar_text(v) << "\n";
      } else {
        os << pad << "-\n";
        render_text(v, os, indent + 2);
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

// ---------------------------------------------------------------- conversions

Json ops_json(const std::vector<WeylOperator>& ops) {
  Json a = Json::array();
  for (const auto& o : ops) a.push_back(o.to_string());
  return a;
}

Json fields_json(const std::vector<FreeModuleVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(WeylOperator::vector_field(v).to_string());
  return a;
}

Json vector_json(const FreeModuleVector& v) {
  Json a = Json::array();
  for (const auto& c : v.components()) a.push_back(c.to_string());
  return a;
}

Json vectors_json(const std::vector<FreeModuleVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(vector_json(v));
  return a;
}

Json polys_json(const std::vector<Polynomial>& ps, std::span<const std::string> names) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string(names));
  return a;
}

Json grade_json(int g) { return g == kUnitIdealCodim ? Json("unit-ideal") : Json(g); }

std::string euler_status(EulerStatus s) {
  switch (s) {
    case EulerStatus::Found:
      return "found";
    case EulerStatus::LocalOnly:
      return "local-only";
    case EulerStatus::NotEulerHomogeneous:
      break;
  }
  return "not-euler-homogeneous";
}

std::string freeness_name(Freeness f) {
  switch (f) {
    case Freeness::FreeWithBasis:
      return "free";
    case Freeness::NotFreeAtOrigin:
      return "not-free-at-origin";
    case Freeness::Inconclusive:
      break;
  }
  return "inconclusive";
}

// ---------------------------------------------------------------- inputs

struct DivisorInput {
  std::string positional;
  std::string flag;
  std::size_t vars = 0;

  void attach(CLI::App* app) {
    app->add_option("divisor", positional, "Polynomial f defining the divisor");
    app->add_option("-f", flag, "Polynomial f (alternative to the positional form)");
    app->add_option("-n,--vars", vars, "Number of variables (default: inferred)");
  }
  Polynomial get() const {
    if (positional.empty() == flag.empty()) throw UsageError("give the divisor exactly once (positional or -f)");
    return parse_polynomial(positional.empty() ? flag : positional, vars);
  }
  std::string text() const { return positional.empty() ? flag : positional; }
};

Json header(const std::string& command, const Polynomial& f) {
  Json j;
  j["schema"] = "logdiv/1";
  j["command"] = command;
  j["f"] = f.to_string();
  j["variables"] = default_variable_names(f.ring_dim());
  return j;
}

// ---------------------------------------------------------------- commands

Json symalg_json(const DerivationModule& dm, int max_k) {
  const SymPresentation sp = sym_presentation(dm);
  const auto names = sp.variable_names();
  Json j;
  j["generators"] = fields_json(dm.generators);
  j["ring"] = names;
  j["relations"] = polys_json(sp.relations, names);
  const ReesKernel rk = rees_kernel(dm);
  j["rees_kernel"] = polys_json(rk.relations, names);
  j["injective"] = pi_injectivity_test(sp, rk);
  Json tors = Json::array();
  for (int k = 1; k <= max_k; ++k) {
    const auto t = torsion_test_symk(sp, k);
    Json tk;
    tk["k"] = k;
    tk["torsion_free"] = t.torsion_free;
    Json ws = Json::array();
    for (const auto& w : t.witnesses) {
      Json wj;
      wj["variable"] = default_variable_names(sp.base_dim)[w.variable];
      wj["element"] = w.element.to_string(names);
      ws.push_back(wj);
    }
    tk["witnesses"] = ws;
    tors.push_back(tk);
  }
  j["torsion"] = tors;
  return j;
}

Json route_json(const RouteReport& r, std::size_t ring_dim, std::span<const std::string> sym_names) {
  Json j;
  j["route"] = r.name;
  j["module"] = fields_json(r.module);
  j["split"] = r.split;
  j["resolution_shape"] = r.grade.shape_ok ? "ok" : "na";
  j["syzygy"] = r.grade.syzygy ? vector_json(*r.grade.syzygy) : Json(nullptr);
  j["grade"] = r.grade.shape_ok ? grade_json(r.grade.grade) : Json(nullptr);
  j["required"] = r.grade.required;
  j["certified"] = r.certified;
  Json tors = Json::array();
  for (const auto& [k, t] : r.torsion) {
    Json tk;
    tk["k"] = k;
    tk["torsion_free"] = t.torsion_free;
    Json ws = Json::array();
    for (const auto& w : t.witnesses) {
      Json wj;
      wj["variable"] = default_variable_names(ring_dim)[w.variable];
      std::vector<std::string> names(sym_names.begin(), sym_names.end());
      for (std::size_t i = names.size(); i < w.element.ring_dim(); ++i)
        names.push_back("T" + std::to_string(i - ring_dim + 1));
      wj["element"] = w.element.to_string(names);
      ws.push_back(wj);
    }
    tk["witnesses"] = ws;
    tors.push_back(tk);
  }
  j["torsion"] = tors;
  Json depth = Json::array();
  for (const auto& [k, d] : r.depth) {
    Json dk;
    dk["k"] = k;
    dk["depth"] = d ? Json(*d) : Json(nullptr);
    depth.push_back(dk);
  }
  j["depth"] = depth;
  return j;
}

Json criterion_json(const Polynomial& f, const CriterionOptions& opts) {
  const auto rep = criterion(f, opts);
  Json j = header("criterion", f);
  j["dimZ"] = opts.dim_z;
  j["verdict"] = to_string(rep.verdict);
  j["basis"] = rep.basis;
  j["claim"] = rep.claim;
  j["euler"] = rep.euler.field ? Json(WeylOperator::vector_field(*rep.euler.field).to_string()) : Json(nullptr);
  j["euler_status"] = euler_status(rep.euler.status);
  j["homogeneous"] = rep.homogeneous;
  j["free"] = rep.freeness.verdict == Freeness::FreeWithBasis;

  const RouteReport* primary = nullptr;
  for (const auto& r : rep.routes)
    if (!primary || (r.certified && !primary->certified)) primary = &r;
  const std::vector<std::string> xnames = default_variable_names(f.ring_dim());
  j["split"] = primary ? Json(primary->split) : Json(nullptr);
  j["resolution_shape"] = primary && primary->grade.shape_ok ? "ok" : "na";
  j["grade"] = primary && primary->grade.shape_ok ? grade_json(primary->grade.grade) : Json(nullptr);
  j["required"] = opts.dim_z + 3;
  j["certified"] = rep.verdict == Verdict::Certified;
  Json witnesses = Json::array();
  if (primary) {
    const Json pr = route_json(*primary, f.ring_dim(), xnames);
    for (const auto& tk : pr["torsion"])
      for (const auto& w : tk["witnesses"]) {
        Json wj = w;
        wj["k"] = tk["k"];
        witnesses.push_back(wj);
      }
  }
  j["torsion_witnesses"] = witnesses;

  Json hyp;
  hyp["euler_field"] = rep.euler.status == EulerStatus::Found;
  hyp["split"] = primary ? Json(primary->split) : Json(nullptr);
  hyp["resolution_shape"] = j["resolution_shape"];
  hyp["homogeneous"] = rep.homogeneous;
  hyp["assumed"] = Json::array({"V0 = O[Der(log D)] off the singular locus Z"});
  hyp["all_k"] = primary && primary->certified ? "grade criterion gives every symmetric power"
                                                : "symmetric powers checked up to k = " + std::to_string(opts.max_sym_degree);
  j["hypotheses"] = hyp;
  Json routes = Json::array();
  for (const auto& r : rep.routes) routes.push_back(route_json(r, f.ring_dim(), xnames));
  j["routes"] = routes;
  return j;
}

Json arrangement_json(const std::string& kind, std::size_t n, const std::vector<std::string>& checks) {
  Json j;
  j["schema"] = "logdiv/1";
  j["command"] = "arrangement";
  if (kind == "dn") {
    if (n == 0) throw UsageError("arrangement dn needs --n");
    const auto dn = generic_dn(n);
    j["kind"] = "generic";
    j["n"] = n;
    j["f"] = dn.arrangement.f.to_string();
    j["hyperplanes"] = polys_json(dn.arrangement.hyperplanes, default_variable_names(n));
    j["chi"] = WeylOperator::vector_field(dn.chi).to_string();
    Json etas = Json::array();
    for (const auto& e : dn.etas) {
      Json ej;
      ej["i"] = e.i + 1;
      ej["j"] = e.j + 1;
      ej["field"] = WeylOperator::vector_field(e.field).to_string();
      etas.push_back(ej);
    }
    j["etas"] = etas;
    Json sigmas = Json::array();
    for (const auto& s : dn.sigmas) {
      Json sj;
      sj["i"] = s.i + 1;
      sj["j"] = s.j + 1;
      sj["k"] = s.k + 1;
      sj["relation"] = vector_json(s.relation);
      sigmas.push_back(sj);
    }
    j["sigmas"] = sigmas;
    Json cj;
    for (const auto& c : checks) {
      if (c == "standard-basis")
        cj[c] = eta_standard_basis_check(dn);
      else if (c == "euler-split")
        cj[c] = euler_splitting_check(n);
      else
        throw UsageError("unknown check '" + c + "' (standard-basis, euler-split)");
    }
    if (!checks.empty()) j["checks"] = cj;
  } else if (kind == "quintic") {
    const auto ex = quintic_example();
    const auto& f = ex.arrangement.f;
    j["kind"] = "quintic";
    j["f"] = f.to_string();
    j["hyperplanes"] = polys_json(ex.arrangement.hyperplanes, default_variable_names(3));
    j["q"] = ex.q.to_string();
    j["q_corrected"] = ex.q_corrected.to_string();
    j["q_order"] = ex.q.order();
    j["q_weight"] = *ex.q.weight();
    j["q_in_v0"] = v_membership(f, ex.q, 0);
    j["q_corrected_in_v0"] = v_membership(f, ex.q_corrected, 0);
    const auto der = log_derivations(f, true);
    j["symbol_q"] = symbol(ex.q).to_string(symbol_variable_names(3));
    j["symbol_outside_sym2"] = !symbol_residue(der, symbol(ex.q), 2).is_zero();
    j["sym_to_rees_injective"] = pi_injectivity_test(sym_presentation(der), rees_kernel(der));
    const auto c = compare_v0(f, 2, 3);
    j["v0_dimension"] = c.v0_dimension;
    j["generated_dimension"] = c.generated_dimension;
    j["gap_witness"] = c.witness ? Json(c.witness->to_string()) : Json(nullptr);
  } else {
    throw UsageError("unknown arrangement '" + kind + "' (dn, quintic)");
  }
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logarithmic derivations, V-filtrations and symmetric algebras of divisors", "logdiv"};
  app.set_config("--config", "", "Read options from a key=value file");
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false, timing = false;
  app.add_flag("--json", as_json, "Machine-readable output");
  app.add_flag("--timing", timing, "Report wall-clock time");

  std::function<Json()> action;

  // logder
  DivisorInput ld_f;
  bool ld_minimal = false, ld_ann = false;
  auto* ld = app.add_subcommand("logder", "Generators of Der(log f)");
  ld_f.attach(ld);
  ld->add_flag("--minimal", ld_minimal, "Graded minimal generators");
  ld->add_flag("--ann", ld_ann, "Vector fields annihilating f instead");
  ld->callback([&] {
    action = [&] {
      const auto f = ld_f.get();
      const auto dm = ld_ann ? ann_theta(f, ld_minimal) : log_derivations(f, ld_minimal);
      Json j = header("logder", f);
      j["module"] = ld_ann ? "annihilator" : "logarithmic";
      j["weights"] = dm.grading ? Json(dm.grading->weights) : Json(nullptr);
      j["generators"] = fields_json(dm.generators);
      j["cofactors"] = polys_json(dm.cofactors, default_variable_names(f.ring_dim()));
      j["syzygies"] = vectors_json(dm.first_syzygies);
      j["logarithmic"] = verify_logarithmic(dm);
      return j;
    };
  });

  // euler
  DivisorInput eu_f;
  auto* eu = app.add_subcommand("euler", "Euler vector field chi with chi(f) = f");
  eu_f.attach(eu);
  eu->callback([&] {
    action = [&] {
      const auto f = eu_f.get();
      const auto e = euler_field(f);
      Json j = header("euler", f);
      j["status"] = euler_status(e.status);
      j["field"] = e.field ? Json(WeylOperator::vector_field(*e.field).to_string()) : Json(nullptr);
      return j;
    };
  });

  // freeness
  DivisorInput fr_f;
  auto* fr = app.add_subcommand("freeness", "Saito freeness test");
  fr_f.attach(fr);
  fr->callback([&] {
    action = [&] {
      const auto f = fr_f.get();
      const auto v = saito_freeness_test(log_derivations(f));
      Json j = header("freeness", f);
      j["verdict"] = freeness_name(v.verdict);
      j["basis"] = fields_json(v.basis);
      j["determinant"] = v.determinant.is_zero() && v.basis.empty() ? Json(nullptr) : Json(v.determinant.to_string());
      j["minimal_generators"] = v.minimal_generators;
      return j;
    };
  });

  // v0-member
  DivisorInput vm_f;
  std::string vm_p, vm_mode = "auto";
  int vm_k = 0;
  auto* vm = app.add_subcommand("v0-member", "Is P in V_k along f?");
  vm_f.attach(vm);
  vm->add_option("-P,--operator", vm_p, "Differential operator")->required();
  vm->add_option("-k,--level", vm_k, "Filtration level");
  vm->add_option("--mode", vm_mode, "auto, global or local")->check(CLI::IsMember({"auto", "global", "local"}));
  vm->callback([&] {
    action = [&] {
      const auto f = vm_f.get();
      const auto p = parse_operator(vm_p, f.ring_dim());
      const MembershipMode mode = vm_mode == "global"  ? MembershipMode::Global
                                  : vm_mode == "local" ? MembershipMode::LocalAtOrigin
                                                       : MembershipMode::Auto;
      Json j = header("v0-member", f);
      j["operator"] = p.to_string();
      j["k"] = vm_k;
      j["order"] = p.order();
      j["mode"] = vm_mode;
      j["member"] = v_membership(f, p, vm_k, mode);
      return j;
    };
  });

  // v0-basis
  DivisorInput vb_f;
  int vb_d = 1;
  std::optional<int> vb_w, vb_wmin, vb_wmax;
  bool vb_compare = false;
  auto* vb = app.add_subcommand("v0-basis", "Graded piece of V_0 (and comparison with O[Der(log f)])");
  vb_f.attach(vb);
  vb->add_option("-d,--order", vb_d, "Order bound")->check(CLI::NonNegativeNumber);
  vb->add_option("-w,--weight", vb_w, "Weight");
  vb->add_flag("--compare", vb_compare, "Compare with the algebra generated by Der(log f)");
  vb->add_option("--w-min", vb_wmin, "Lowest weight scanned by --compare without -w");
  vb->add_option("--w-max", vb_wmax, "Highest weight scanned by --compare without -w");
  vb->callback([&] {
    action = [&] {
      const auto f = vb_f.get();
      Json j = header("v0-basis", f);
      j["order"] = vb_d;
      if (!vb_compare) {
        if (!vb_w) throw UsageError("v0-basis needs -w (or --compare to scan weights)");
        const auto s = v0_graded_basis(f, vb_d, *vb_w);
        j["weight"] = *vb_w;
        j["weights"] = s.weights;
        j["dimension"] = s.dimension();
        j["basis"] = ops_json(s.basis);
        return j;
      }
      std::vector<int> ws;
      if (vb_w) {
        ws.push_back(*vb_w);
      } else {
        const auto q = quasi_homogeneity(f);
        if (!q) throw std::invalid_argument("graded operator spaces need a quasi-homogeneous divisor");
        const int lo = vb_wmin.value_or(-vb_d * *std::max_element(q->weights.begin(), q->weights.end()));
        const int hi = vb_wmax.value_or(vb_d * (q->degree - *std::min_element(q->weights.begin(), q->weights.end())));
        for (int w = lo; w <= hi; ++w) ws.push_back(w);
      }
      Json cmp = Json::array();
      bool all_equal = true;
      for (int w : ws) {
        const auto c = compare_v0(f, vb_d, w);
        Json cj;
        cj["weight"] = w;
        cj["v0_dimension"] = c.v0_dimension;
        cj["generated_dimension"] = c.generated_dimension;
        cj["equal"] = c.equal;
        cj["witness"] = c.witness ? Json(c.witness->to_string()) : Json(nullptr);
        all_equal = all_equal && c.equal;
        cmp.push_back(cj);
      }
      j["comparisons"] = cmp;
      j["equal"] = all_equal;
      return j;
    };
  });

  // vk-basis
  DivisorInput vk_f;
  int vk_k = 0, vk_d = 1, vk_w = 0;
  auto* vk = app.add_subcommand("vk-basis", "Graded piece of V_k");
  vk_f.attach(vk);
  vk->add_option("-k,--level", vk_k, "Filtration level");
  vk->add_option("-d,--order", vk_d, "Order bound")->check(CLI::NonNegativeNumber);
  vk->add_option("-w,--weight", vk_w, "Weight")->required();
  vk->callback([&] {
    action = [&] {
      const auto f = vk_f.get();
      const auto s = vk_graded_basis(f, vk_k, vk_d, vk_w);
      Json j = header("vk-basis", f);
      j["k"] = vk_k;
      j["order"] = vk_d;
      j["weight"] = vk_w;
      j["dimension"] = s.dimension();
      j["basis"] = ops_json(s.basis);
      return j;
    };
  });

  // symalg
  DivisorInput sa_f;
  std::string sa_module = "ann";
  int sa_k = 2;
  auto* sa = app.add_subcommand("symalg", "Symmetric algebra, Rees kernel and torsion of a derivation module");
  sa_f.attach(sa);
  sa->add_option("--module", sa_module, "ann (vector fields killing f) or der (Der(log f))")
      ->check(CLI::IsMember({"ann", "der"}));
  sa->add_option("--max-k", sa_k, "Highest symmetric power tested for torsion")->check(CLI::PositiveNumber);
  sa->callback([&] {
    action = [&] {
      const auto f = sa_f.get();
      const auto dm = sa_module == "der" ? log_derivations(f, true) : ann_theta(f, true);
      Json j = header("symalg", f);
      j["module"] = sa_module;
      j.update(symalg_json(dm, sa_k));
      return j;
    };
  });

  // criterion
  DivisorInput cr_f;
  CriterionOptions cr_opts;
  bool cr_no_depth = false;
  auto* cr = app.add_subcommand("criterion", "Certify or refute V_0 = O[Der(log f)]");
  cr_f.attach(cr);
  cr->add_option("--dimZ", cr_opts.dim_z, "Dimension of the locus Z at the origin")->check(CLI::NonNegativeNumber);
  cr->add_option("--max-k", cr_opts.max_sym_degree, "Highest symmetric power checked")->check(CLI::PositiveNumber);
  cr->add_flag("--no-depth", cr_no_depth, "Skip depth computations");
  cr->callback([&] {
    action = [&] {
      cr_opts.depth_checks = !cr_no_depth;
      return criterion_json(cr_f.get(), cr_opts);
    };
  });

  // arrangement
  std::string ar_kind;
  std::size_t ar_n = 0;
  std::vector<std::string> ar_checks;
  auto* ar = app.add_subcommand("arrangement", "Generic arrangements x_1...x_n(x_1+...+x_n) and the quintic example");
  ar->add_option("kind", ar_kind, "dn or quintic")->required();
  ar->add_option("--n", ar_n, "Dimension for dn");
  ar->add_option("--check", ar_checks, "standard-basis and/or euler-split");
  ar->callback([&] { action = [&] { return arrangement_json(ar_kind, ar_n, ar_checks); }; });

  // selftest
  std::string st_inject;
  bool st_failed = false;
  auto* st = app.add_subcommand("selftest", "Run the golden suite");
  st->add_option("--inject", st_inject, "Fault injection: eta-sign")->check(CLI::IsMember({"eta-sign"}));
  st->callback([&] {
    action = [&] {
      const auto results = run_selftest(st_inject == "eta-sign" ? SelftestFault::EtaSign : SelftestFault::None);
      Json j;
      j["schema"] = "logdiv/1";
      j["command"] = "selftest";
      Json cases = Json::array();
      std::size_t passed = 0;
      for (const auto& r : results) {
        Json c;
        c["name"] = r.name;
        c["passed"] = r.passed;
        if (!r.passed) c["detail"] = r.detail;
        c["seconds"] = std::round(r.seconds * 1000) / 1000;
        cases.push_back(c);
        passed += r.passed ? 1 : 0;
      }
      j["cases"] = cases;
      j["passed"] = passed;
      j["failed"] = results.size() - passed;
      st_failed = passed != results.size();
      return j;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Json j = action();
    if (timing) j["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (as_json)
      out << j.dump(2) << "\n";
    else
      render_text(j, out, 0);
    return st_failed ? kExitSelftestFailed : kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "unsupported input: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::out_of_range& e) {
    err << "unsupported input: " << e.what() << "\n";
    return kExitUnsupported;
  }
}

}  // namespace logdiv::cli
