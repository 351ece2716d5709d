#include "qfl/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "qfl/errors.hpp"

namespace qfl {

MPoly::MPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MPoly::MPoly(std::initializer_list<std::pair<const Monomial, Rational>> terms) {
  for (const auto& [m, c] : terms) add_term(m, c);
}

MPoly MPoly::monomial(Monomial m, const Rational& c) {
  MPoly p;
  p.add_term(m, c);
  return p;
}

Rational MPoly::coeff(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::degree_x() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.ex);
  return d;
}

int MPoly::degree_s() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.es);
  return d;
}

int MPoly::min_eq() const {
  int d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    d = first ? m.eq : std::min(d, m.eq);
    first = false;
  }
  return d;
}

int MPoly::max_eq() const {
  int d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    d = first ? m.eq : std::max(d, m.eq);
    first = false;
  }
  return d;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

MPoly MPoly::shift_q(int shift) const {
  MPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.ex, m.es, m.eq + shift}, c);
  return r;
}

MPoly MPoly::pow(int exponent) const {
  if (exponent < 0) throw std::domain_error("MPoly::pow: negative exponent");
  MPoly result(1);
  MPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational MPoly::eval(const Rational& x, const Rational& s, const Rational& q) const {
  if (q.is_zero() && min_eq() < 0) {
    throw ZeroBase("evaluation at q = 0 of a polynomial with negative q-powers");
  }
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    total += c * x.pow(m.ex) * s.pow(m.es) * (m.eq == 0 ? Rational(1) : q.pow(m.eq));
  }
  return total;
}

double MPoly::eval_double(double x, double s, double q) const {
  auto ipow = [](double b, int e) {
    double r = 1.0;
    const bool neg = e < 0;
    for (int i = 0; i < (neg ? -e : e); ++i) r *= b;
    return neg ? 1.0 / r : r;
  };
  double total = 0.0;
  for (const auto& [m, c] : terms_) {
    total += c.to_double() * ipow(x, m.ex) * ipow(s, m.es) * ipow(q, m.eq);
  }
  return total;
}

MPoly MPoly::substitute_q(const Rational& q) const {
  if (q.is_zero() && min_eq() < 0) {
    throw ZeroBase("substitution q = 0 into a polynomial with negative q-powers");
  }
  MPoly r;
  for (const auto& [m, c] : terms_) r.add_term({m.ex, m.es, 0}, c * (m.eq == 0 ? Rational(1) : q.pow(m.eq)));
  return r;
}

MPoly MPoly::substitute_s(const Rational& s) const {
  MPoly r;
  for (const auto& [m, c] : terms_) r.add_term({m.ex, 0, m.eq}, c * s.pow(m.es));
  return r;
}

MPoly MPoly::derivative_x() const {
  MPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.ex > 0) r.add_term({m.ex - 1, m.es, m.eq}, c * Rational(m.ex));
  }
  return r;
}

namespace {

std::string power(const char* var, int e) {
  if (e == 0) return {};
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::vector<std::string> factors;
    for (const auto& f : {power("q", m.eq), power("s", m.es), power("x", m.ex)}) {
      if (!f.empty()) factors.push_back(f);
    }
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (!unit || factors.empty()) os << mag.str();
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0 || !unit) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

std::string MPoly::latex() const {
  if (terms_.empty()) return "0";
  auto tex_power = [](const char* var, int e) -> std::string {
    if (e == 0) return {};
    if (e == 1) return var;
    return std::string(var) + "^{" + std::to_string(e) + "}";
  };
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const std::string mono = tex_power("q", m.eq) + tex_power("s", m.es) + tex_power("x", m.ex);
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (!(mag == Rational(1)) || mono.empty()) {
      if (mag.is_integer()) {
        os << mag.str();
      } else {
        os << "\\frac{" << mag.numerator().get_str() << "}{" << mag.denominator().get_str() << "}";
      }
    }
    os << mono;
  }
  return os.str();
}

nlohmann::json to_json(const MPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    arr.push_back({{"ex", m.ex},
                   {"es", m.es},
                   {"eq", m.eq},
                   {"num", c.numerator().get_str()},
                   {"den", c.denominator().get_str()}});
  }
  return arr;
}

MPoly mpoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("MPoly JSON must be an array");
  MPoly p;
  for (const auto& t : j) {
    const Monomial m{t.at("ex").get<int>(), t.at("es").get<int>(), t.at("eq").get<int>()};
    if (m.ex < 0 || m.es < 0) throw ParseError("negative x or s exponent in MPoly JSON");
    p.add_term(m, Rational::parse(t.at("num").get<std::string>() + "/" + t.at("den").get<std::string>()));
  }
  return p;
}

Rational mpoly_eval(const MPoly& p, const Rational& x, const Rational& s, const Rational& q) {
  return p.eval(x, s, q);
}

}  // namespace qfl
