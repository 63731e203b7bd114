#include "generators.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace apkappa {

GeneratorSystem GeneratorSystem::bso(int d) {
  if (d < 2) throw std::invalid_argument("BSO(d) requires d >= 2");
  return {SystemKind::BSO, d};
}

int GeneratorSystem::max_p_index() const {
  switch (kind) {
    case SystemKind::PH:
    case SystemKind::P:
      return -1;
    case SystemKind::BSO:
      return d % 2 == 0 ? d / 2 - 1 : d / 2;
  }
  return -1;
}

int GeneratorSystem::generator_degree(int id) const {
  if (!valid_generator(id)) throw std::invalid_argument("invalid generator id");
  if (id == 0) return d;  // euler class, deg 2n = d
  return 4 * id;
}

bool GeneratorSystem::valid_generator(int id) const {
  if (id == 0) return has_euler();
  if (id < 0) return false;
  int maxp = max_p_index();
  return maxp < 0 || id <= maxp;
}

std::string GeneratorSystem::generator_name(int id) const {
  if (!valid_generator(id)) throw std::invalid_argument("invalid generator id");
  if (id == 0) return "e";
  return (kind == SystemKind::PH ? "ph" : "p") + std::to_string(id);
}

int GeneratorSystem::generator_id(const std::string& name) const {
  if (name == "e") return has_euler() ? 0 : -1;
  const std::string prefix = kind == SystemKind::PH ? "ph" : "p";
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return -1;
  int id = 0;
  for (std::size_t i = prefix.size(); i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
    id = id * 10 + (name[i] - '0');
  }
  return id >= 1 && valid_generator(id) ? id : -1;
}

std::string GeneratorSystem::to_string() const {
  switch (kind) {
    case SystemKind::PH:
      return "ph";
    case SystemKind::P:
      return "p";
    case SystemKind::BSO:
      return "bso" + std::to_string(d);
  }
  return "?";
}

GeneratorSystem GeneratorSystem::from_string(const std::string& s) {
  if (s == "ph") return ph();
  if (s == "p") return p();
  if (s.compare(0, 3, "bso") == 0 && s.size() > 3) {
    int d = 0;
    for (std::size_t i = 3; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("bad generator system: '" + s + "'");
      d = d * 10 + (s[i] - '0');
    }
    return bso(d);
  }
  throw std::invalid_argument("bad generator system: '" + s + "'");
}

ExponentVector ExponentVector::generator(int id, int exp) {
  ExponentVector v;
  if (exp > 0) v.factors.emplace_back(id, exp);
  return v;
}

int ExponentVector::exponent(int id) const {
  for (const auto& [g, e] : factors)
    if (g == id) return e;
  return 0;
}

int ExponentVector::degree(const GeneratorSystem& sys) const {
  int deg = 0;
  for (const auto& [g, e] : factors) deg += sys.generator_degree(g) * e;
  return deg;
}

ExponentVector ExponentVector::times(const ExponentVector& other) const {
  ExponentVector out;
  auto a = factors.begin();
  auto b = other.factors.begin();
  while (a != factors.end() && b != other.factors.end()) {
    if (a->first < b->first)
      out.factors.push_back(*a++);
    else if (a->first > b->first)
      out.factors.push_back(*b++);
    else {
      out.factors.emplace_back(a->first, a->second + b->second);
      ++a, ++b;
    }
  }
  out.factors.insert(out.factors.end(), a, factors.end());
  out.factors.insert(out.factors.end(), b, other.factors.end());
  return out;
}

Rational binomial_product(const ExponentVector& m, const ExponentVector& sub) {
  Rational r(1);
  for (const auto& [g, e] : sub.factors) {
    int me = m.exponent(g);
    if (e > me) return Rational(0);
    r *= binomial(me, e);
  }
  return r;
}

std::vector<std::pair<ExponentVector, Rational>> divisors_with_binomials(const ExponentVector& m) {
  std::vector<std::pair<ExponentVector, Rational>> out;
  out.emplace_back(ExponentVector::one(), Rational(1));
  for (const auto& [g, e] : m.factors) {
    std::vector<std::pair<ExponentVector, Rational>> next;
    next.reserve(out.size() * (e + 1));
    for (const auto& [div, coef] : out)
      for (int k = 0; k <= e; ++k) {
        ExponentVector d = div;
        if (k > 0) d.factors.emplace_back(g, k);
        next.emplace_back(std::move(d), coef * binomial(e, k));
      }
    out = std::move(next);
  }
  return out;
}

bool monomial_order(const GeneratorSystem& sys, const ExponentVector& a, const ExponentVector& b) {
  int da = a.degree(sys), db = b.degree(sys);
  if (da != db) return da < db;
  int max_id = 0;
  if (!a.factors.empty()) max_id = std::max(max_id, a.factors.back().first);
  if (!b.factors.empty()) max_id = std::max(max_id, b.factors.back().first);
  for (int id = max_id; id >= 0; --id) {
    int ea = a.exponent(id), eb = b.exponent(id);
    if (ea != eb) return ea > eb;
  }
  return false;
}

namespace {

// Recursion from the highest-degree generator down yields monomial_order
// directly.
void enumerate(const GeneratorSystem& sys, const std::vector<int>& ids, std::size_t pos,
               int remaining, ExponentVector& acc, std::vector<ExponentVector>& out) {
  if (remaining == 0) {
    ExponentVector m = acc;
    std::sort(m.factors.begin(), m.factors.end());
    out.push_back(std::move(m));
    return;
  }
  if (pos == ids.size()) return;
  int id = ids[pos];
  int gd = sys.generator_degree(id);
  for (int e = remaining / gd; e >= 0; --e) {
    if (e > 0) acc.factors.emplace_back(id, e);
    enumerate(sys, ids, pos + 1, remaining - e * gd, acc, out);
    if (e > 0) acc.factors.pop_back();
  }
}

}  // namespace

std::vector<ExponentVector> monomial_basis(const GeneratorSystem& sys, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial_basis: negative degree");
  if (degree == 0) return {ExponentVector::one()};

  // Recursing over ids in decreasing order (euler class last) makes the
  // enumeration come out in monomial_order.
  std::vector<int> ids;
  int maxp = sys.max_p_index();
  int top = maxp < 0 ? degree / 4 : maxp;
  for (int i = top; i >= 1; --i) ids.push_back(i);
  if (sys.has_euler()) ids.push_back(0);

  std::vector<ExponentVector> out;
  ExponentVector acc;
  enumerate(sys, ids, 0, degree, acc, out);
  return out;
}

std::string monomial_to_string(const GeneratorSystem& sys, const ExponentVector& m) {
  if (m.is_one()) return "1";
  // p/ph factors ascending; the euler class prints last (p1^2*e^4).
  std::vector<std::pair<int, int>> fs(m.factors.begin(), m.factors.end());
  std::stable_partition(fs.begin(), fs.end(), [](const auto& f) { return f.first != 0; });
  std::string s;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) s += "*";
    s += sys.generator_name(fs[i].first);
    if (fs[i].second > 1) s += "^" + std::to_string(fs[i].second);
  }
  return s;
}

ExponentVector monomial_from_string(const GeneratorSystem& sys, const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty monomial");
  if (t == "1") return ExponentVector::one();

  ExponentVector m;
  std::size_t pos = 0;
  while (pos < t.size()) {
    std::size_t star = t.find('*', pos);
    std::string factor = t.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    std::size_t caret = factor.find('^');
    std::string name = factor.substr(0, caret);
    int exp = 1;
    if (caret != std::string::npos) {
      std::string es = factor.substr(caret + 1);
      if (es.empty()) throw std::invalid_argument("bad monomial: '" + s + "'");
      exp = 0;
      for (char c : es) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw std::invalid_argument("bad exponent in monomial: '" + s + "'");
        exp = exp * 10 + (c - '0');
      }
    }
    int id = sys.generator_id(name);
    if (id < 0)
      throw std::invalid_argument("unknown generator '" + name + "' for system " + sys.to_string());
    if (exp > 0) m = m.times(ExponentVector::generator(id, exp));
    if (star == std::string::npos) break;
    pos = star + 1;
    if (pos == t.size()) throw std::invalid_argument("bad monomial: '" + s + "'");
  }
  return m;
}

}  // namespace apkappa
