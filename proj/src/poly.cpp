#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace apkappa {

GradedPolynomial GradedPolynomial::constant(GeneratorSystem sys, const Rational& c) {
  GradedPolynomial p(sys);
  p.add_term(ExponentVector::one(), c);
  return p;
}

GradedPolynomial GradedPolynomial::monomial(GeneratorSystem sys, ExponentVector m, Rational coef) {
  GradedPolynomial p(sys);
  p.add_term(m, coef);
  return p;
}

Rational GradedPolynomial::coefficient(const ExponentVector& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GradedPolynomial::add_term(const ExponentVector& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void GradedPolynomial::check_same_system(const GradedPolynomial& o) const {
  if (!(system_ == o.system_))
    throw std::invalid_argument("generator system mismatch: " + system_.to_string() + " vs " +
                                o.system_.to_string());
}

GradedPolynomial GradedPolynomial::operator+(const GradedPolynomial& o) const {
  check_same_system(o);
  GradedPolynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

GradedPolynomial GradedPolynomial::operator-(const GradedPolynomial& o) const {
  check_same_system(o);
  GradedPolynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

GradedPolynomial GradedPolynomial::operator*(const GradedPolynomial& o) const {
  check_same_system(o);
  GradedPolynomial out(system_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add_term(m1.times(m2), c1 * c2);
  return out;
}

GradedPolynomial GradedPolynomial::operator*(const Rational& c) const {
  GradedPolynomial out(system_);
  if (c == 0) return out;
  for (const auto& [m, k] : terms_) out.add_term(m, k * c);
  return out;
}

GradedPolynomial operator*(const Rational& c, const GradedPolynomial& p) { return p * c; }

GradedPolynomial GradedPolynomial::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power");
  GradedPolynomial out = constant(system_, Rational(1));
  for (int i = 0; i < n; ++i) out = out * *this;
  return out;
}

int GradedPolynomial::degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.degree(system_));
  return deg;
}

bool GradedPolynomial::is_homogeneous() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) {
    int d = m.degree(system_);
    if (deg < 0) deg = d;
    if (d != deg) return false;
  }
  return true;
}

GradedPolynomial GradedPolynomial::homogeneous_component(int degree) const {
  GradedPolynomial out(system_);
  for (const auto& [m, c] : terms_)
    if (m.degree(system_) == degree) out.add_term(m, c);
  return out;
}

std::vector<std::pair<ExponentVector, Rational>> GradedPolynomial::sorted_terms() const {
  std::vector<std::pair<ExponentVector, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return monomial_order(system_, a.first, b.first);
  });
  return out;
}

std::string GradedPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const std::string& t : poly_term_strings(*this)) {
    if (!s.empty()) s += t[0] == '-' ? " - " + t.substr(1) : " + " + t;
    else s = t;
  }
  return s;
}

GradedPolynomial apply_ring_map(const GradedPolynomial& x, const GeneratorSystem& target,
                                const std::function<GradedPolynomial(int)>& image) {
  GradedPolynomial out(target);
  for (const auto& [m, c] : x.terms()) {
    GradedPolynomial term = GradedPolynomial::constant(target, c);
    for (const auto& [g, e] : m.factors) term = term * image(g).pow(e);
    out = out + term;
  }
  return out;
}

Rational TensorPolynomial::coefficient(const ExponentVector& l, const ExponentVector& r) const {
  auto it = terms_.find({l, r});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorPolynomial::add_term(const ExponentVector& l, const ExponentVector& r,
                                const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Key{l, r}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorPolynomial TensorPolynomial::operator+(const TensorPolynomial& o) const {
  if (!(left_ == o.left_) || !(right_ == o.right_))
    throw std::invalid_argument("tensor system mismatch");
  TensorPolynomial out = *this;
  for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, c);
  return out;
}

TensorPolynomial TensorPolynomial::operator*(const TensorPolynomial& o) const {
  if (!(left_ == o.left_) || !(right_ == o.right_))
    throw std::invalid_argument("tensor system mismatch");
  TensorPolynomial out(left_, right_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_)
      out.add_term(k1.first.times(k2.first), k1.second.times(k2.second), c1 * c2);
  return out;
}

TensorPolynomial TensorPolynomial::operator*(const Rational& c) const {
  TensorPolynomial out(left_, right_);
  if (c == 0) return out;
  for (const auto& [k, k2] : terms_) out.add_term(k.first, k.second, k2 * c);
  return out;
}

TensorPolynomial TensorPolynomial::bidegree_component(int p, int q) const {
  TensorPolynomial out(left_, right_);
  for (const auto& [k, c] : terms_)
    if (k.first.degree(left_) == p && k.second.degree(right_) == q)
      out.add_term(k.first, k.second, c);
  return out;
}

std::vector<std::pair<TensorPolynomial::Key, Rational>> TensorPolynomial::sorted_terms() const {
  std::vector<std::pair<Key, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    if (!(a.first.first == b.first.first))
      return monomial_order(left_, a.first.first, b.first.first);
    return monomial_order(right_, a.first.second, b.first.second);
  });
  return out;
}

std::string TensorPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : sorted_terms()) {
    if (!s.empty()) s += " + ";
    s += rational_to_string(c) + "*(" + monomial_to_string(left_, k.first) + " (x) " +
         monomial_to_string(right_, k.second) + ")";
  }
  return s;
}

GradedPolynomial poly_from_expression(const GeneratorSystem& sys, const std::string& expr) {
  std::string t;
  for (char c : expr)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty polynomial expression");

  GradedPolynomial out(sys);
  std::size_t pos = 0;
  while (pos < t.size()) {
    int sign = 1;
    while (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
      if (t[pos] == '-') sign = -sign;
      ++pos;
    }
    std::size_t end = pos;
    while (end < t.size() && t[end] != '+' && t[end] != '-') ++end;
    std::string term = t.substr(pos, end - pos);
    if (term.empty()) throw std::invalid_argument("bad polynomial expression: '" + expr + "'");

    // Optional leading rational: digits optionally followed by /digits, then
    // '*' before the monomial (or nothing: a bare constant).
    Rational coef(sign);
    std::size_t mstart = 0;
    if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      std::size_t i = 0;
      while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
      if (i < term.size() && term[i] == '/') {
        ++i;
        while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
      }
      coef = coef * rational_from_string(term.substr(0, i));
      if (i == term.size()) {
        out.add_term(ExponentVector::one(), coef);
        pos = end;
        continue;
      }
      if (term[i] != '*') throw std::invalid_argument("bad term '" + term + "' in '" + expr + "'");
      mstart = i + 1;
    }
    out.add_term(monomial_from_string(sys, term.substr(mstart)), coef);
    pos = end;
  }
  return out;
}

std::vector<std::string> poly_term_strings(const GradedPolynomial& p) {
  std::vector<std::string> out;
  for (const auto& [m, c] : p.sorted_terms()) {
    std::string s;
    Rational a = c < 0 ? Rational(-c) : c;
    if (c < 0) s += "-";
    if (m.is_one()) {
      s += a.get_den() == 1 ? a.get_num().get_str() : rational_to_string(a);
    } else {
      if (a != 1)
        s += (a.get_den() == 1 ? a.get_num().get_str() : rational_to_string(a)) + "*";
      s += monomial_to_string(p.system(), m);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace apkappa
