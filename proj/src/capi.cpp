#include "apkappa.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "bordism.hpp"
#include "bundle.hpp"
#include "constraints.hpp"
#include "hopf.hpp"
#include "json_io.hpp"
#include "poly.hpp"
#include "primitives.hpp"

using namespace apkappa;

struct apk_poly {
  GradedPolynomial value;
};

struct apk_bordism {
  BordismClassQ value;
};

namespace {

thread_local std::string g_last_error;

apk_status fail(apk_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

// Parse and validation failures surface as APK_ERROR_PARSE /
// APK_ERROR_INVALID_ARGUMENT; anything else is internal.
template <typename Fn>
apk_status guarded(apk_status failure_code, Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail(failure_code, e.what());
  } catch (const std::exception& e) {
    return fail(APK_ERROR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

apk_status emit(const Json& j, char** out) {
  *out = copy_string(j.dump());
  return APK_OK;
}

apk_status check_degree_cap(int degree) {
  if (degree > apk_max_degree())
    return fail(APK_ERROR_LIMIT, "degree " + std::to_string(degree) +
                                     " exceeds APKAPPA_MAX_DEGREE = " +
                                     std::to_string(apk_max_degree()));
  return APK_OK;
}

Json subspace_to_json(int d, int degree, const Subspace& s) {
  Json j;
  j["d"] = d;
  j["degree"] = degree;
  j["dim"] = s.dim();
  Json basis = Json::array();
  for (const GradedPolynomial& x : s.basis) basis.push_back(poly_term_strings(x));
  j["basis"] = std::move(basis);
  return j;
}

}  // namespace

extern "C" {

const char* apk_version(void) { return "0.1.0"; }

const char* apk_last_error(void) { return g_last_error.c_str(); }

void apk_string_free(char* s) { std::free(s); }
void apk_poly_free(apk_poly* p) { delete p; }
void apk_bordism_free(apk_bordism* b) { delete b; }

int apk_max_degree(void) {
  const char* env = std::getenv("APKAPPA_MAX_DEGREE");
  if (!env || !*env) return 32;
  int v = std::atoi(env);
  return v > 0 ? v : 32;
}

apk_status apk_poly_parse(const char* system, const char* expr, apk_poly** out) {
  if (!system || !expr || !out) return fail(APK_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded(APK_ERROR_PARSE, [&] {
    GeneratorSystem sys = GeneratorSystem::from_string(system);
    *out = new apk_poly{poly_from_expression(sys, expr)};
    return APK_OK;
  });
}

apk_status apk_poly_from_json(const char* json, apk_poly** out) {
  if (!json || !out) return fail(APK_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded(APK_ERROR_PARSE, [&] {
    *out = new apk_poly{poly_from_json(parse_json(json))};
    return APK_OK;
  });
}

apk_status apk_poly_to_json(const apk_poly* p, char** out) {
  if (!p || !out) return fail(APK_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded(APK_ERROR_INTERNAL, [&] { return emit(poly_to_json(p->value), out); });
}

apk_status apk_poly_to_expression(const apk_poly* p, char** out) {
  if (!p || !out) return fail(APK_ERROR_INVALID_ARGUMENT, "null argument");
  *out = copy_string(p->value.to_string());
  return APK_OK;
}

apk_status apk_monomial_basis_json(const char* system, int degree, char** out) {
  if (!system || !out) return fail(APK_ERROR_INVALID_ARGUMENT, "null argument");
  if (apk_status s = check_degree_cap(degree); s != APK_OK) return s;
  return guarded(APK_ERROR_INVALID_ARGUMENT, [&] {
    GeneratorSystem sys = GeneratorSystem::from_string(system);
    Json j;
    j["system"] = sys.to_string();
    Json basis = Json::array();
    for (const ExponentVector& m : monomial_basis(sys, degree))
      basis.push_back(monomial_to_string(sys, m));
    j["basis"] = std::move(basis);
    return emit(j, out);
  });
}

apk_status apk_poly_coproduct_json(const apk_poly* p, char** out) {
  if (!p || !out) return fail(APK_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded(APK_ERROR_INVALID_ARGUMENT,
                 [&] { return emit(tensor_to_json(coproduct(p->value)), out); });
}

apk_status apk_poly_ph_to_p(const apk_poly* p, apk_poly** out) {
  if (!p || !out) return fail(APK_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded(APK_ERROR_INVALID_ARGUMENT, [&] {
    *out = new apk_poly{ph_to_p(p->value)};
    return APK_OK;
  });
}

apk_status apk_poly_p_to_ph(const apk_poly* p, apk_poly** out) {
  if (!p || !out) return fail(APK_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded(APK_ERROR_INVALID_ARGUMENT, [&] {
    *out = new apk_poly{p_to_ph(p->value)};
    return APK_OK;
  });
}

apk_status apk_poly_restrict(const apk_poly* p, int d, apk_poly** out) {
  if (!p || !out) return fail(APK_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded(APK_ERROR_INVALID_ARGUMENT, [&] {
    *out = new apk_poly{restrict_to_bso(p->value, d)};
    return APK_OK;
  });
}

apk_status apk_bordism_cp(int n, apk_bordism** out) {
  if (!out) return fail(APK_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded(APK_ERROR_INVALID_ARGUMENT, [&] {
    if (apk_status s = check_degree_cap(2 * n); s != APK_OK) return s;
    *out = new apk_bordism{cp_class(n)};
    return APK_OK;
  });
}

apk_status apk_bordism_product(const apk_bordism* a, const apk_bordism* b, apk_bordism** out) {
  if (!a || !b || !out) return fail(APK_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded(APK_ERROR_INVALID_ARGUMENT, [&] {
    *out = new apk_bordism{product(a->value, b->value)};
    return APK_OK;
  });
}

apk_status apk_bordism_parse(const char* text, apk_bordism** out) {
  if (!text || !out) return fail(APK_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded(APK_ERROR_PARSE, [&] {
    std::string s(text);
    if (!s.empty() && s.front() == '{')
      *out = new apk_bordism{bordism_from_json(parse_json(s))};
    else
      *out = new apk_bordism{bordism_from_shortcut(s)};
    return APK_OK;
  });
}

apk_status apk_bordism_to_json(const apk_bordism* b, char** out) {
  if (!b || !out) return fail(APK_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded(APK_ERROR_INTERNAL, [&] { return emit(bordism_to_json(b->value), out); });
}

apk_status apk_pair(const apk_poly* x, const apk_bordism* b, char** out) {
  if (!x || !b || !out) return fail(APK_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded(APK_ERROR_INVALID_ARGUMENT, [&] {
    *out = copy_string(rational_to_string(pair(x->value, b->value)));
    return APK_OK;
  });
}

apk_status apk_ap_basis_json(int d, int degree, int method, char** out) {
  if (!out) return fail(APK_ERROR_INVALID_ARGUMENT, "null argument");
  if (apk_status s = check_degree_cap(degree); s != APK_OK) return s;
  return guarded(APK_ERROR_INVALID_ARGUMENT, [&] {
    Subspace s = method == 0 ? ap_basis_monomial(d, degree) : ap_basis_definitional(d, degree);
    return emit(subspace_to_json(d, degree, s), out);
  });
}

apk_status apk_np_basis_json(int d, int degree, char** out) {
  if (!out) return fail(APK_ERROR_INVALID_ARGUMENT, "null argument");
  if (apk_status s = check_degree_cap(degree); s != APK_OK) return s;
  return guarded(APK_ERROR_INVALID_ARGUMENT,
                 [&] { return emit(subspace_to_json(d, degree, np_basis(d, degree)), out); });
}

apk_status apk_equations_json(int d, int p, const apk_bordism* fibre, char** out) {
  if (!fibre || !out) return fail(APK_ERROR_INVALID_ARGUMENT, "null argument");
  if (apk_status s = check_degree_cap(d + p); s != APK_OK) return s;
  return guarded(APK_ERROR_INVALID_ARGUMENT, [&] {
    std::vector<LinearConstraint> system = build_system(d, p, fibre->value);
    return emit(system_to_json(d, p, fibre->value, system), out);
  });
}

apk_status apk_check_json(const char* problem, char** verdict, int* satisfied) {
  if (!problem || !verdict || !satisfied)
    return fail(APK_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded(APK_ERROR_PARSE, [&] {
    FeasibilityProblem fp = problem_from_json(parse_json(problem));
    if (apk_status s = check_degree_cap(fp.d + fp.p); s != APK_OK) return s;
    Verdict v = check_feasibility(fp);
    *satisfied = v.satisfied ? 1 : 0;
    return emit(verdict_to_json(v), verdict);
  });
}

apk_status apk_solve_json(const char* problem, char** solution, int* solvable) {
  if (!problem || !solution || !solvable)
    return fail(APK_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded(APK_ERROR_PARSE, [&] {
    ProblemWithHoles ph = problem_with_holes_from_json(parse_json(problem));
    if (apk_status s = check_degree_cap(ph.d + ph.p); s != APK_OK) return s;
    SolveOutcome outcome = solve_for(ph);
    *solvable = outcome.solvable ? 1 : 0;
    return emit(solve_outcome_to_json(outcome), solution);
  });
}

apk_status apk_verify_bundle_json(int m, const int* twists, size_t n_twists, const char* x_expr,
                                  char** report, int* all_equal) {
  if (!twists || !report || !all_equal || n_twists == 0)
    return fail(APK_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded(APK_ERROR_INVALID_ARGUMENT, [&] {
    ProjectiveBundleSpec spec{m, std::vector<int>(twists, twists + n_twists)};
    if (apk_status s = check_degree_cap(spec.total_dim()); s != APK_OK) return s;

    const GeneratorSystem ph_sys = GeneratorSystem::ph();
    std::vector<GradedPolynomial> xs;
    if (x_expr) {
      xs.push_back(poly_from_expression(ph_sys, x_expr));
    } else {
      for (const GradedPolynomial& x : ap_basis_monomial(spec.fibre_dim(), spec.total_dim()).basis)
        xs.push_back(x);
    }

    Json j;
    j["m"] = spec.m;
    j["twists"] = spec.twists;
    j["d"] = spec.fibre_dim();
    j["p"] = spec.base_dim();
    Json reports = Json::array();
    bool ok = true;
    for (const GradedPolynomial& x : xs) {
      Eq3Report rep = verify_eq3(spec, x);
      ok = ok && rep.equal;
      reports.push_back({{"x", x.to_string()},
                         {"lhs", rational_to_string(rep.lhs)},
                         {"kappa_term", rational_to_string(rep.kappa_term)},
                         {"middle_term", rational_to_string(rep.middle_term)},
                         {"equal", rep.equal}});
    }
    j["reports"] = std::move(reports);
    j["all_equal"] = ok;
    *all_equal = ok ? 1 : 0;
    return emit(j, report);
  });
}

}  // extern "C"
