#include "constraints.hpp"

#include <algorithm>
#include <stdexcept>

namespace apkappa {

namespace {

void require_even_fibre_dim(int d) {
  if (d < 2 || d % 2 != 0)
    throw std::invalid_argument("fibre dimension d must be even and >= 2");
}

}  // namespace

std::vector<ExponentVector> kappa_candidates(int d, int p) {
  require_even_fibre_dim(d);
  if (p <= 0) throw std::invalid_argument("base dimension p must be positive");
  const GeneratorSystem bso = GeneratorSystem::bso(d);
  std::vector<ExponentVector> out;
  for (int deg = d + 1; deg <= d + p; ++deg)
    for (const ExponentVector& m : monomial_basis(bso, deg)) out.push_back(m);
  return out;
}

std::vector<KappaSequence> kappa_sequences(int d, int p) {
  std::vector<ExponentVector> cand = kappa_candidates(d, p);
  const GeneratorSystem bso = GeneratorSystem::bso(d);
  std::vector<int> weight(cand.size());
  for (std::size_t i = 0; i < cand.size(); ++i) weight[i] = cand[i].degree(bso) - d;

  std::vector<KappaSequence> out;
  std::vector<std::size_t> picks;
  // Non-decreasing candidate indices, grouped by sequence length.
  auto extend = [&](auto&& self, std::size_t from, int remaining, std::size_t len) -> void {
    if (remaining == 0) {
      if (picks.size() == len) {
        KappaSequence c;
        for (std::size_t i : picks) c.push_back(cand[i]);
        out.push_back(std::move(c));
      }
      return;
    }
    if (picks.size() >= len) return;
    for (std::size_t i = from; i < cand.size(); ++i)
      if (weight[i] <= remaining) {
        picks.push_back(i);
        self(self, i, remaining - weight[i], len);
        picks.pop_back();
      }
  };
  // Weights are >= 2, so length p/2 is the most a sequence can have.
  for (std::size_t len = 1; 2 * len <= static_cast<std::size_t>(p); ++len)
    extend(extend, 0, p, len);
  return out;
}

std::string kappa_sequence_label(int d, const KappaSequence& c) {
  const GeneratorSystem bso = GeneratorSystem::bso(d);
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += monomial_to_string(bso, c[i]);
  }
  return s;
}

std::map<ExponentVector, Rational> expand_kappa(const GradedPolynomial& x, int d) {
  require_even_fibre_dim(d);
  if (!x.is_homogeneous() || (!x.is_zero() && x.degree() <= d))
    throw std::invalid_argument("expand_kappa: x must be homogeneous of degree > d");
  std::map<ExponentVector, Rational> out;
  for (const auto& [c, coef] : restrict_to_bso(x, d).terms()) out.emplace(c, coef);
  return out;
}

std::vector<LinearConstraint> build_system(int d, int p, const BordismClassQ& f) {
  require_even_fibre_dim(d);
  if (p <= 0) throw std::invalid_argument("base dimension p must be positive");
  if (f.dimension != d)
    throw std::invalid_argument("fibre class dimension must equal d");

  const GeneratorSystem ph = GeneratorSystem::ph();
  const int m = d + p;
  std::vector<LinearConstraint> out;
  for (const GradedPolynomial& x : ap_basis_monomial(d, m).basis) {
    LinearConstraint con;
    con.x = x.terms().begin()->first;

    for (const auto& [mono, coef] : ph_to_p(x).terms()) con.e_coeffs[mono] = coef;
    con.kappa_coeffs = expand_kappa(x, d);

    // Middle coproduct terms, right factor paired with the fibre.
    for (const auto& [key, coef] : middle_terms(x, p, d).terms()) {
      Rational fibre_value = coef * pair(GradedPolynomial::monomial(ph, key.second), f);
      if (fibre_value == 0) continue;
      for (const auto& [mono, bc] :
           ph_to_p(GradedPolynomial::monomial(ph, key.first)).terms()) {
        auto [it, inserted] = con.b_coeffs.emplace(mono, bc * fibre_value);
        if (!inserted) {
          it->second += bc * fibre_value;
          if (it->second == 0) con.b_coeffs.erase(it);
        }
      }
    }
    out.push_back(std::move(con));
  }
  return out;
}

Rational KappaFunctional::value(const KappaSequence& c) const {
  auto it = values.find(c);
  return it == values.end() ? Rational(0) : it->second;
}

Verdict check_feasibility(const FeasibilityProblem& problem) {
  if (problem.e.dimension != problem.d + problem.p)
    throw std::invalid_argument("total space class must have dimension d + p");
  if (problem.b.dimension != problem.p)
    throw std::invalid_argument("base class must have dimension p");

  Verdict v;
  for (const LinearConstraint& con : build_system(problem.d, problem.p, problem.f)) {
    Rational lhs(0), rhs = con.constant;
    for (const auto& [mono, c] : con.e_coeffs) lhs += c * problem.e.number(mono);
    for (const auto& [mono, c] : con.b_coeffs) rhs += c * problem.b.number(mono);
    for (const auto& [mono, c] : con.kappa_coeffs) rhs += c * problem.kappa.value({mono});
    if (lhs != rhs) v.violations.push_back({con.x, lhs, rhs});
  }
  v.satisfied = v.violations.empty();
  return v;
}

SolveOutcome solve_for(const ProblemWithHoles& problem) {
  std::vector<LinearConstraint> system = build_system(problem.d, problem.p, problem.f);

  // Column bookkeeping: e unknowns, then b, then K, each in canonical order.
  const GeneratorSystem p_sys = GeneratorSystem::p();
  std::map<ExponentVector, std::size_t> e_col, b_col;
  std::map<KappaSequence, std::size_t> k_col;
  SolveOutcome out;
  for (const ExponentVector& m : problem.e_unknown) {
    e_col.emplace(m, out.unknowns.size());
    out.unknowns.push_back("e:" + monomial_to_string(p_sys, m));
  }
  for (const ExponentVector& m : problem.b_unknown) {
    b_col.emplace(m, out.unknowns.size());
    out.unknowns.push_back("b:" + monomial_to_string(p_sys, m));
  }
  for (const KappaSequence& c : problem.kappa_unknown) {
    k_col.emplace(c, out.unknowns.size());
    out.unknowns.push_back("K:" + kappa_sequence_label(problem.d, c));
  }

  auto known = [](const std::map<ExponentVector, Rational>& values, const ExponentVector& m) {
    auto it = values.find(m);
    return it == values.end() ? Rational(0) : it->second;
  };

  // Each constraint reads sum_e - sum_kappa - sum_b - constant = 0; unknown
  // coordinates keep their signed coefficients on the left, known
  // contributions accumulate into the right-hand side.
  QMatrix a(system.size(), out.unknowns.size());
  QVector rhs(system.size(), Rational(0));
  for (std::size_t row = 0; row < system.size(); ++row) {
    const LinearConstraint& con = system[row];
    Rational c0 = con.constant;
    for (const auto& [mono, c] : con.e_coeffs) {
      auto it = e_col.find(mono);
      if (it != e_col.end()) a.at(row, it->second) += c;
      else c0 -= c * known(problem.e_known, mono);
    }
    for (const auto& [mono, c] : con.b_coeffs) {
      auto it = b_col.find(mono);
      if (it != b_col.end()) a.at(row, it->second) -= c;
      else c0 += c * known(problem.b_known, mono);
    }
    for (const auto& [mono, c] : con.kappa_coeffs) {
      auto it = k_col.find(KappaSequence{mono});
      if (it != k_col.end()) a.at(row, it->second) -= c;
      else {
        auto kit = problem.kappa_known.find(KappaSequence{mono});
        c0 += c * (kit == problem.kappa_known.end() ? Rational(0) : kit->second);
      }
    }
    rhs[row] = c0;
  }

  std::optional<AffineSolution> sol = solve_affine(a, rhs);
  if (!sol) return out;
  out.solvable = true;
  out.particular = std::move(sol->particular);
  out.kernel = std::move(sol->kernel);
  return out;
}

namespace {

BordismClassQ bordism_from_json_or_shortcut(const Json& j) {
  if (j.is_string()) return bordism_from_shortcut(j.get<std::string>());
  return bordism_from_json(j);
}

ExponentVector p_monomial_from_json(const Json& mono) {
  const GeneratorSystem p_sys = GeneratorSystem::p();
  if (mono.is_string()) return monomial_from_string(p_sys, mono.get<std::string>());
  if (!mono.is_array()) throw std::invalid_argument("bad bordism monomial");
  ExponentVector m;
  for (const Json& f : mono) {
    if (!f.is_array() || f.size() != 2) throw std::invalid_argument("bad bordism monomial");
    int i = f[0].is_string() ? p_sys.generator_id(f[0].get<std::string>()) : f[0].get<int>();
    int e = f[1].get<int>();
    if (i < 1 || e < 0) throw std::invalid_argument("bad bordism monomial entry");
    if (e > 0) m = m.times(ExponentVector::generator(i, e));
  }
  return m;
}

KappaSequence sequence_from_json(const GeneratorSystem& bso, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("kappa sequence \"C\" must be an array");
  KappaSequence c;
  for (const Json& m : j) c.push_back(monomial_from_string(bso, m.get<std::string>()));
  std::sort(c.begin(), c.end(), [&](const ExponentVector& a, const ExponentVector& b) {
    return monomial_order(bso, a, b);
  });
  return c;
}

void read_header(const Json& j, int& d, int& p, BordismClassQ& f) {
  if (!j.is_object() || !j.contains("d") || !j.contains("p") || !j.contains("f"))
    throw std::invalid_argument("problem JSON needs \"d\", \"p\", \"f\"");
  d = j["d"].get<int>();
  p = j["p"].get<int>();
  f = bordism_from_json_or_shortcut(j["f"]);
  if (f.dimension != d) throw std::invalid_argument("fibre class dimension must equal d");
}

}  // namespace

FeasibilityProblem problem_from_json(const Json& j) {
  FeasibilityProblem problem;
  read_header(j, problem.d, problem.p, problem.f);
  if (!j.contains("e") || !j.contains("b"))
    throw std::invalid_argument("feasibility check needs fully specified \"e\" and \"b\"");
  problem.e = bordism_from_json_or_shortcut(j["e"]);
  problem.b = bordism_from_json_or_shortcut(j["b"]);
  problem.kappa.d = problem.d;
  problem.kappa.p = problem.p;
  const GeneratorSystem bso = GeneratorSystem::bso(problem.d);
  if (j.contains("K")) {
    if (!j["K"].is_array())
      throw std::invalid_argument("feasibility check needs a fully specified \"K\" array");
    for (const Json& entry : j["K"]) {
      if (!entry.contains("C") || !entry.contains("value"))
        throw std::invalid_argument("kappa entry needs \"C\" and \"value\"");
      Rational v = rational_from_string(entry["value"].get<std::string>());
      problem.kappa.values[sequence_from_json(bso, entry["C"])] = v;
    }
  }
  return problem;
}

ProblemWithHoles problem_with_holes_from_json(const Json& j) {
  ProblemWithHoles problem;
  read_header(j, problem.d, problem.p, problem.f);
  const GeneratorSystem p_sys = GeneratorSystem::p();
  const GeneratorSystem bso = GeneratorSystem::bso(problem.d);

  auto read_side = [&](const char* key, int dim, std::map<ExponentVector, Rational>& known,
                       std::vector<ExponentVector>& unknown) {
    std::vector<ExponentVector> coords =
        dim % 4 == 0 ? monomial_basis(p_sys, dim) : std::vector<ExponentVector>{};
    if (!j.contains(key) || (j[key].is_string() && j[key].get<std::string>() == "?")) {
      unknown = coords;
      return;
    }
    const Json& side = j[key];
    if (side.is_string()) {
      BordismClassQ c = bordism_from_shortcut(side.get<std::string>());
      if (c.dimension != dim) throw std::invalid_argument("bordism dimension mismatch");
      known = c.numbers;
      return;
    }
    if (!side.is_object() || !side.contains("dim") || side["dim"].get<int>() != dim ||
        !side.contains("numbers"))
      throw std::invalid_argument(std::string("bad \"") + key + "\" block");
    std::map<ExponentVector, bool> open;
    for (const Json& entry : side["numbers"]) {
      if (!entry.contains("monomial") || !entry.contains("value"))
        throw std::invalid_argument("bordism entry needs \"monomial\" and \"value\"");
      ExponentVector m = p_monomial_from_json(entry["monomial"]);
      if (m.degree(p_sys) != dim)
        throw std::invalid_argument("bordism monomial degree does not match dim");
      if (entry["value"].is_string() && entry["value"].get<std::string>() == "?") {
        open[m] = true;
      } else {
        Rational v = rational_from_string(entry["value"].get<std::string>());
        if (v != 0) known[m] = v;
      }
    }
    for (const ExponentVector& m : coords)
      if (open.count(m)) unknown.push_back(m);
  };

  read_side("e", problem.d + problem.p, problem.e_known, problem.e_unknown);
  read_side("b", problem.p, problem.b_known, problem.b_unknown);

  std::vector<KappaSequence> all = kappa_sequences(problem.d, problem.p);
  if (!j.contains("K") || (j["K"].is_string() && j["K"].get<std::string>() == "?")) {
    problem.kappa_unknown = all;
    return problem;
  }
  if (!j["K"].is_array()) throw std::invalid_argument("\"K\" must be an array or \"?\"");
  std::map<KappaSequence, bool> open;
  for (const Json& entry : j["K"]) {
    if (!entry.contains("C") || !entry.contains("value"))
      throw std::invalid_argument("kappa entry needs \"C\" and \"value\"");
    KappaSequence c = sequence_from_json(bso, entry["C"]);
    if (entry["value"].is_string() && entry["value"].get<std::string>() == "?")
      open[c] = true;
    else
      problem.kappa_known[c] = rational_from_string(entry["value"].get<std::string>());
  }
  for (const KappaSequence& c : all)
    if (open.count(c)) problem.kappa_unknown.push_back(c);
  return problem;
}

namespace {

Json coeff_map_to_json(const GeneratorSystem& sys,
                       const std::map<ExponentVector, Rational>& coeffs) {
  std::vector<std::pair<ExponentVector, Rational>> sorted(coeffs.begin(), coeffs.end());
  std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
    return monomial_order(sys, a.first, b.first);
  });
  Json j = Json::object();
  for (const auto& [m, c] : sorted) j[monomial_to_string(sys, m)] = rational_to_string(c);
  return j;
}

}  // namespace

Json system_to_json(int d, int p, const BordismClassQ& f,
                    const std::vector<LinearConstraint>& constraints) {
  const GeneratorSystem ph = GeneratorSystem::ph();
  const GeneratorSystem p_sys = GeneratorSystem::p();
  const GeneratorSystem bso = GeneratorSystem::bso(d);
  Json j;
  j["d"] = d;
  j["p"] = p;
  j["fibre"] = bordism_to_json(f);
  Json cons = Json::array();
  for (const LinearConstraint& con : constraints)
    cons.push_back({{"x", monomial_to_string(ph, con.x)},
                    {"e_coeffs", coeff_map_to_json(p_sys, con.e_coeffs)},
                    {"b_coeffs", coeff_map_to_json(p_sys, con.b_coeffs)},
                    {"kappa_coeffs", coeff_map_to_json(bso, con.kappa_coeffs)},
                    {"constant", rational_to_string(con.constant)}});
  j["constraints"] = std::move(cons);
  return j;
}

Json verdict_to_json(const Verdict& v) {
  const GeneratorSystem ph = GeneratorSystem::ph();
  Json j;
  j["satisfied"] = v.satisfied;
  Json viols = Json::array();
  for (const Violation& viol : v.violations)
    viols.push_back({{"x", monomial_to_string(ph, viol.x)},
                     {"lhs", rational_to_string(viol.lhs)},
                     {"rhs", rational_to_string(viol.rhs)}});
  j["violations"] = std::move(viols);
  return j;
}

Json solve_outcome_to_json(const SolveOutcome& s) {
  Json j;
  j["solvable"] = s.solvable;
  if (!s.solvable) return j;
  j["unknowns"] = s.unknowns;
  Json part = Json::array();
  for (const Rational& r : s.particular) part.push_back(rational_to_string(r));
  j["particular"] = std::move(part);
  Json ker = Json::array();
  for (const QVector& v : s.kernel) {
    Json row = Json::array();
    for (const Rational& r : v) row.push_back(rational_to_string(r));
    ker.push_back(std::move(row));
  }
  j["kernel"] = std::move(ker);
  return j;
}

}  // namespace apkappa
