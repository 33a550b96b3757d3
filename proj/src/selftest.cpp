#include "logdiv/selftest.hpp"

#include <chrono>
#include <functional>

#include "logdiv/arrangements.hpp"
#include "logdiv/logder.hpp"
#include "logdiv/symalg.hpp"
#include "logdiv/vfilt.hpp"

namespace logdiv {

namespace {

using Check = std::function<std::string()>;  // empty string = pass

std::vector<FreeModuleVector> fields(std::initializer_list<const char*> ops, std::size_t n) {
  std::vector<FreeModuleVector> out;
  for (const char* o : ops) out.push_back(field_coefficients(parse_operator(o, n)));
  return out;
}

std::string expect(bool ok, const std::string& what) { return ok ? std::string() : what; }

GenericArrangement arrangement_with_fault(std::size_t n, SelftestFault fault) {
  auto dn = generic_dn(n);
  if (fault == SelftestFault::EtaSign) {
    auto& e = dn.etas.front();
    e.field[e.j] = -e.field[e.j];
  }
  return dn;
}

std::vector<std::pair<std::string, Check>> golden_cases(SelftestFault fault) {
  std::vector<std::pair<std::string, Check>> cases;

  cases.emplace_back("normal-crossings-logder", [] {
    struct C {
      const char* f;
      std::size_t n;
      std::initializer_list<const char*> gens;
    };
    const C cs[] = {{"x*y", 2, {"x*dx", "y*dy"}}, {"y*z", 3, {"dx", "y*dy", "z*dz"}}, {"x*y*z", 3, {"x*dx", "y*dy", "z*dz"}}};
    for (const auto& c : cs)
      if (!same_module(log_derivations(parse_polynomial(c.f, c.n)).generators, fields(c.gens, c.n)))
        return std::string("module mismatch for ") + c.f;
    return std::string();
  });

  cases.emplace_back("normal-crossings-v-filtration", [] {
    const auto f = parse_polynomial("x*y", 2);
    const bool ok = v_membership(f, parse_operator("x*dx", 2), 0) && !v_membership(f, parse_operator("dx", 2), 0) &&
                    v_membership(f, parse_operator("dx", 2), 1);
    return expect(ok, "membership of x*dx / dx");
  });

  cases.emplace_back("plane-curves-free", [] {
    for (const char* s : {"x^2-y^3", "x*y*(x+y)", "x*y*(x-y)*(x+2*y)"})
      if (saito_freeness_test(log_derivations(parse_polynomial(s, 2))).verdict != Freeness::FreeWithBasis)
        return std::string("not certified free: ") + s;
    return std::string();
  });

  cases.emplace_back("quintic-operator-membership", [] {
    const auto ex = quintic_example();
    if (!v_membership(ex.arrangement.f, ex.q_corrected, 0)) return std::string("corrected operator not in V_0");
    if (v_membership(ex.arrangement.f, ex.q, 0)) return std::string("operator with + mixed sign unexpectedly in V_0");
    return std::string();
  });

  cases.emplace_back("quintic-symbol-outside-sym2", [] {
    const auto ex = quintic_example();
    const auto der = log_derivations(ex.arrangement.f, true);
    return expect(!symbol_residue(der, symbol(ex.q), 2).is_zero() &&
                      !symbol_residue(der, symbol(ex.q_corrected), 2).is_zero(),
                  "symbol lies in the degree-two symbol module");
  });

  cases.emplace_back("quintic-linear-type", [] {
    const auto der = log_derivations(quintic_example().arrangement.f, true);
    return expect(pi_injectivity_test(sym_presentation(der), rees_kernel(der)), "Sym -> Rees not injective");
  });

  cases.emplace_back("quintic-v0-gap", [] {
    const auto ex = quintic_example();
    const auto c = compare_v0(ex.arrangement.f, 2, 3);
    return expect(!c.equal && c.witness && v_membership(ex.arrangement.f, *c.witness, 0), "no gap at order 2, weight 3");
  });

  for (std::size_t n = 3; n <= 5; ++n) {
    cases.emplace_back("eta-standard-basis-n" + std::to_string(n), [n, fault] {
      return expect(eta_standard_basis_check(arrangement_with_fault(n, fault)), "etas/sigmas check failed");
    });
    cases.emplace_back("euler-split-n" + std::to_string(n),
                       [n] { return expect(euler_splitting_check(n), "a syzygy involves the Euler field"); });
  }

  cases.emplace_back("generic-arrangement-minimal-generators", [] {
    for (std::size_t n = 2; n <= 5; ++n) {
      const auto der = log_derivations(generic_dn(n).arrangement.f, true);
      if (der.generators.size() != 1 + n * (n - 1) / 2) return "wrong count for n=" + std::to_string(n);
    }
    return std::string();
  });

  cases.emplace_back("a3-sym-relation", [] {
    const auto dn = generic_dn(3);
    const auto sp = sym_presentation(derivation_module(dn.arrangement.f, dn.eta_fields()));
    const std::vector<std::string> names{"x1", "x2", "x3", "T1", "T2", "T3"};
    const auto j = parse_polynomial("x3*T1 - x2*T2 + x1*T3", names);
    return expect(sp.relations.size() == 1 && (sp.relations[0] == j || sp.relations[0] == -j), "relation differs");
  });

  cases.emplace_back("d3-certified", [] {
    const auto r = criterion(generic_dn(3).arrangement.f);
    return expect(r.verdict == Verdict::Certified && r.basis == "grade-criterion", "verdict " + to_string(r.verdict));
  });

  cases.emplace_back("isolated-singularities-certified", [] {
    for (const char* s : {"x^3+y^3+z^3", "x^2+y^2+z^2", "x^5+y^3+z^2"}) {
      const auto r = criterion(parse_polynomial(s, 3));
      if (r.verdict != Verdict::Certified) return std::string("not certified: ") + s;
    }
    return std::string();
  });

  cases.emplace_back("quadric-torsion", [] {
    const auto a = ann_theta(parse_polynomial("x1^2+x2^2+x3^2+x4^2", 4), true);
    const auto sp = sym_presentation(a);
    const auto t = torsion_test_symk(sp, 2);
    return expect(t.witnesses.size() == 4 && !pi_injectivity_test(sp, rees_kernel(a)), "missing witnesses");
  });

  cases.emplace_back("d4-torsion", [] {
    const auto a = ann_theta(generic_dn(4).arrangement.f, true);
    const auto t = torsion_test_symk(sym_presentation(a), 2);
    return expect(t.witnesses.size() == 4, "missing witnesses");
  });

  cases.emplace_back("free-divisor-v0-equality", [] {
    const auto f = parse_polynomial("x*y*(x+y)", 2);
    for (int d = 0; d <= 2; ++d)
      for (int w = -d; w <= 2 * d; ++w)
        if (!compare_v0(f, d, w).equal) return "gap at d=" + std::to_string(d) + " w=" + std::to_string(w);
    return std::string();
  });

  return cases;
}

}  // namespace

std::vector<SelftestCase> run_selftest(SelftestFault fault) {
  std::vector<SelftestCase> out;
  for (auto& [name, check] : golden_cases(fault)) {
    SelftestCase c;
    c.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.detail = check();
      c.passed = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace logdiv
