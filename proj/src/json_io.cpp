#include "json_io.hpp"

#include <stdexcept>

namespace apkappa {

namespace {

Json exps_to_json(const GeneratorSystem& sys, const ExponentVector& m) {
  Json exps = Json::array();
  // p/ph ascending, euler class last, matching monomial_to_string.
  for (const auto& [g, e] : m.factors)
    if (g != 0) exps.push_back(Json::array({sys.generator_name(g), e}));
  if (int ee = m.exponent(0); ee > 0) exps.push_back(Json::array({"e", ee}));
  return exps;
}

ExponentVector exps_from_json(const GeneratorSystem& sys, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("exps must be an array of [generator, exponent]");
  ExponentVector m;
  for (const Json& f : j) {
    if (!f.is_array() || f.size() != 2 || !f[0].is_string() || !f[1].is_number_integer())
      throw std::invalid_argument("bad exps entry; expected [\"name\", exponent]");
    int id = sys.generator_id(f[0].get<std::string>());
    if (id < 0)
      throw std::invalid_argument("unknown generator '" + f[0].get<std::string>() +
                                  "' for system " + sys.to_string());
    int e = f[1].get<int>();
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e > 0) m = m.times(ExponentVector::generator(id, e));
  }
  return m;
}

}  // namespace

Json poly_to_json(const GradedPolynomial& p) {
  Json j;
  j["system"] = p.system().to_string();
  Json terms = Json::array();
  for (const auto& [m, c] : p.sorted_terms())
    terms.push_back({{"exps", exps_to_json(p.system(), m)}, {"coef", rational_to_string(c)}});
  j["terms"] = std::move(terms);
  return j;
}

GradedPolynomial poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("system") || !j.contains("terms"))
    throw std::invalid_argument("polynomial JSON needs \"system\" and \"terms\"");
  GeneratorSystem sys = GeneratorSystem::from_string(j["system"].get<std::string>());
  GradedPolynomial p(sys);
  for (const Json& t : j["terms"]) {
    if (!t.contains("exps") || !t.contains("coef"))
      throw std::invalid_argument("polynomial term needs \"exps\" and \"coef\"");
    p.add_term(exps_from_json(sys, t["exps"]),
               rational_from_string(t["coef"].get<std::string>()));
  }
  return p;
}

Json tensor_to_json(const TensorPolynomial& t) {
  Json j;
  j["left_system"] = t.left_system().to_string();
  j["right_system"] = t.right_system().to_string();
  Json terms = Json::array();
  for (const auto& [key, c] : t.sorted_terms())
    terms.push_back({{"left", exps_to_json(t.left_system(), key.first)},
                     {"right", exps_to_json(t.right_system(), key.second)},
                     {"coef", rational_to_string(c)}});
  j["terms"] = std::move(terms);
  return j;
}

TensorPolynomial tensor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("left_system") || !j.contains("right_system") ||
      !j.contains("terms"))
    throw std::invalid_argument("tensor JSON needs \"left_system\", \"right_system\", \"terms\"");
  GeneratorSystem l = GeneratorSystem::from_string(j["left_system"].get<std::string>());
  GeneratorSystem r = GeneratorSystem::from_string(j["right_system"].get<std::string>());
  TensorPolynomial t(l, r);
  for (const Json& term : j["terms"]) {
    if (!term.contains("left") || !term.contains("right") || !term.contains("coef"))
      throw std::invalid_argument("tensor term needs \"left\", \"right\", \"coef\"");
    t.add_term(exps_from_json(l, term["left"]), exps_from_json(r, term["right"]),
               rational_from_string(term["coef"].get<std::string>()));
  }
  return t;
}

Json bordism_to_json(const BordismClassQ& c) {
  const GeneratorSystem p = GeneratorSystem::p();
  Json j;
  j["dim"] = c.dimension;
  Json numbers = Json::array();
  if (c.dimension >= 0 && c.dimension % 4 == 0)
    for (const ExponentVector& m : monomial_basis(p, c.dimension)) {
      Json mono = Json::array();
      for (const auto& [i, e] : m.factors) mono.push_back(Json::array({i, e}));
      numbers.push_back({{"monomial", mono}, {"value", rational_to_string(c.number(m))}});
    }
  j["numbers"] = std::move(numbers);
  return j;
}

BordismClassQ bordism_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("numbers"))
    throw std::invalid_argument("bordism JSON needs \"dim\" and \"numbers\"");
  const GeneratorSystem p = GeneratorSystem::p();
  BordismClassQ c = BordismClassQ::zero(j["dim"].get<int>());
  if (c.dimension < 0) throw std::invalid_argument("negative bordism dimension");
  for (const Json& entry : j["numbers"]) {
    if (!entry.contains("monomial") || !entry.contains("value"))
      throw std::invalid_argument("bordism entry needs \"monomial\" and \"value\"");
    ExponentVector m;
    for (const Json& f : entry["monomial"]) {
      if (!f.is_array() || f.size() != 2)
        throw std::invalid_argument("bordism monomial entries are [index, exponent] pairs");
      int i = f[0].is_string() ? p.generator_id(f[0].get<std::string>()) : f[0].get<int>();
      int e = f[1].get<int>();
      if (i < 1 || e < 0) throw std::invalid_argument("bad bordism monomial entry");
      if (e > 0) m = m.times(ExponentVector::generator(i, e));
    }
    if (m.degree(p) != c.dimension)
      throw std::invalid_argument("bordism monomial degree " + std::to_string(m.degree(p)) +
                                  " does not match dim " + std::to_string(c.dimension));
    Rational v = rational_from_string(entry["value"].get<std::string>());
    if (v != 0) c.numbers[m] = v;
  }
  return c;
}

BordismClassQ bordism_from_shortcut(const std::string& name) {
  BordismClassQ out = cp_class(0);
  std::size_t pos = 0;
  bool first = true;
  while (pos < name.size()) {
    std::size_t next = name.find('x', pos);
    std::string part = name.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (part.size() < 3 || part.compare(0, 2, "cp") != 0)
      throw std::invalid_argument("bad bordism shortcut: '" + name + "' (expected cpN[xcpM...])");
    int n = 0;
    for (std::size_t i = 2; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw std::invalid_argument("bad bordism shortcut: '" + name + "'");
      n = n * 10 + (part[i] - '0');
    }
    out = first ? cp_class(n) : product(out, cp_class(n));
    first = false;
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (first) throw std::invalid_argument("empty bordism shortcut");
  return out;
}

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON input");
  return j;
}

}  // namespace apkappa
