#include "adjrep/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "adjrep/error.hpp"
#include "adjrep/kernels.hpp"

namespace adjrep {

// ---------------------------------------------------------------- registry

namespace {

bool valid_var_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

VarRegistry::VarRegistry(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_var_name(n)) throw InputError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> VarRegistry::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t VarRegistry::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw InputError("unknown variable '" + std::string(name) + "'");
  return *i;
}

RegistryPtr make_registry(std::vector<std::string> names) {
  return std::make_shared<const VarRegistry>(std::move(names));
}

RegistryPtr numbered_registry(const std::string& prefix, std::size_t count, std::size_t start) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(prefix + std::to_string(start + i));
  return make_registry(std::move(names));
}

bool same_registry(const RegistryPtr& a, const RegistryPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------- ordering

std::uint32_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

// ---------------------------------------------------------------- Poly basics

Poly::Poly(RegistryPtr reg) : reg_(std::move(reg)) {
  if (!reg_) throw InputError("polynomial without registry");
}

Poly::Poly(RegistryPtr reg, TermMap terms) : Poly(std::move(reg)) {
  for (auto& [e, c] : terms) {
    if (e.size() != reg_->size()) throw InputError("exponent vector length does not match registry");
    if (!c.is_zero()) terms_.emplace(e, c);
  }
}

Poly Poly::constant(RegistryPtr reg, const Rational& c) {
  Poly p(std::move(reg));
  p.add_term(Exponents(p.num_vars(), 0), c);
  return p;
}

Poly Poly::variable(RegistryPtr reg, std::size_t i) {
  Poly p(std::move(reg));
  if (i >= p.num_vars()) throw InputError("variable index out of range");
  Exponents e(p.num_vars(), 0);
  e[i] = 1;
  p.add_term(e, Rational(1));
  return p;
}

Poly Poly::variable(RegistryPtr reg, std::string_view name) {
  auto i = reg->index(name);
  return variable(std::move(reg), i);
}

Poly Poly::monomial(RegistryPtr reg, Exponents exps, const Rational& c) {
  Poly p(std::move(reg));
  if (exps.size() != p.num_vars()) throw InputError("exponent vector length does not match registry");
  p.add_term(exps, c);
  return p;
}

Poly Poly::linear(RegistryPtr reg, const std::vector<Rational>& coeffs) {
  Poly p(std::move(reg));
  if (coeffs.size() != p.num_vars()) throw InputError("linear form length does not match registry");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coefficient(Exponents(num_vars(), 0)); }

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.begin()->first));
}

int Poly::degree_in(std::size_t v) const {
  if (terms_.empty()) return -1;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(v));
  return static_cast<int>(d);
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  auto d = total_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return total_degree(t.first) == d; });
}

bool Poly::is_multiaffine() const {
  for (const auto& [e, c] : terms_) {
    for (auto x : e) {
      if (x > 1) return false;
    }
  }
  return true;
}

std::vector<std::size_t> Poly::variables_used() const {
  std::vector<bool> used(num_vars(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] > 0;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (used[i]) out.push_back(i);
  }
  return out;
}

const std::pair<const Exponents, Rational>& Poly::leading_term() const {
  if (terms_.empty()) throw PreconditionError("leading term of zero polynomial");
  return *terms_.begin();
}

std::vector<Rational> Poly::linear_coefficients() const {
  if (degree() > 1) throw PreconditionError("linear_coefficients of a non-linear polynomial");
  std::vector<Rational> out(num_vars());
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 1) out[i] = c;
    }
  }
  return out;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_registry(const Poly& o) const {
  if (!same_registry(reg_, o.reg_)) throw InputError("polynomials over different registries");
}

Poly& Poly::operator+=(const Poly& o) {
  check_registry(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_registry(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_registry(b);
  Poly out(a.reg_);
  out.terms_ = kernels::multiply(a.terms_, b.terms_);
  return out;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(reg_, Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  return same_registry(a.reg_, b.reg_) && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------- calculus

Poly Poly::derivative(std::size_t v) const {
  if (v >= num_vars()) throw InputError("derivative variable out of range");
  Poly out(reg_);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponents d = e;
    d[v] -= 1;
    out.add_term(d, c * Rational(static_cast<long>(e[v])));
  }
  return out;
}

Poly Poly::substitute(const std::map<std::size_t, Poly>& assignment) const {
  RegistryPtr target = assignment.empty() ? reg_ : assignment.begin()->second.reg_;
  for (const auto& [v, img] : assignment) {
    if (v >= num_vars()) throw InputError("substitution variable out of range");
    if (!same_registry(img.reg_, target)) throw InputError("substitution images over different registries");
  }

  std::vector<Poly> images;
  images.reserve(num_vars());
  for (std::size_t i = 0; i < num_vars(); ++i) {
    auto it = assignment.find(i);
    if (it != assignment.end()) {
      images.push_back(it->second);
    } else {
      images.push_back(variable(target, target->index(reg_->name(i))));
    }
  }

  std::map<std::pair<std::size_t, std::uint32_t>, Poly> power_cache;
  auto power = [&](std::size_t v, std::uint32_t k) -> const Poly& {
    auto key = std::make_pair(v, k);
    auto it = power_cache.find(key);
    if (it != power_cache.end()) return it->second;
    return power_cache.emplace(key, images[v].pow(k)).first->second;
  };

  Poly out(target);
  for (const auto& [e, c] : terms_) {
    Poly term = constant(target, c);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] > 0) term *= power(v, e[v]);
    }
    out += term;
  }
  return out;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != num_vars()) throw InputError("evaluation point has wrong dimension");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] > 0) t *= adjrep::pow(point[v], e[v]);
    }
    sum += t;
  }
  return sum;
}

Poly Poly::coefficient_of(std::size_t v, unsigned k) const {
  Poly out(reg_);
  for (const auto& [e, c] : terms_) {
    if (e.at(v) != k) continue;
    Exponents d = e;
    d[v] = 0;
    out.add_term(d, c);
  }
  return out;
}

Poly Poly::homogenize(std::size_t v, int d) const {
  if (degree() > d) throw PreconditionError("homogenization degree below polynomial degree");
  Poly out(reg_);
  for (const auto& [e, c] : terms_) {
    Exponents h = e;
    h.at(v) += static_cast<std::uint32_t>(d - static_cast<int>(total_degree(e)));
    out.add_term(h, c);
  }
  return out;
}

Poly Poly::remap(const RegistryPtr& target) const {
  std::vector<std::size_t> where(num_vars());
  std::vector<bool> used(num_vars(), false);
  for (std::size_t v : variables_used()) used[v] = true;
  for (std::size_t i = 0; i < num_vars(); ++i) {
    auto j = target->find(reg_->name(i));
    if (j) {
      where[i] = *j;
    } else if (used[i]) {
      throw InputError("variable '" + reg_->name(i) + "' missing from target registry");
    }
  }
  Poly out(target);
  for (const auto& [e, c] : terms_) {
    Exponents f(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) f[where[i]] = e[i];
    }
    out.add_term(f, c);
  }
  return out;
}

Rational Poly::content() const {
  if (terms_.empty()) return Rational(1);
  Rational g(0);
  for (const auto& [e, c] : terms_) g = rational_gcd(g, c);
  return g;
}

Poly Poly::canonical() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (leading_term().second.sign() < 0) c = -c;
  Poly out(*this);
  for (auto& [e, v] : out.terms_) v /= c;
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool is_const = total_degree(e) == 0;
    Rational a = c.abs();
    if (c.sign() < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    first = false;
    if (is_const || !a.is_one()) os << a.str();
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      os << reg_->name(v);
      if (e[v] > 1) os << "^" << e[v];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(RegistryPtr reg, std::string_view text) : reg_(std::move(reg)), s_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial parse error at offset " + std::to_string(pos_) + " (" + what +
                     ") in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Poly expr() {
    Poly acc(reg_);
    bool first = true;
    while (true) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      Poly t = term();
      if (sign < 0) {
        acc -= t;
      } else {
        acc += t;
      }
      first = false;
      c = peek();
      if (c != '+' && c != '-') break;
    }
    return acc;
  }

  bool starts_factor(char c) const {
    return std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) ||
           c == '(';
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      char c = peek();
      if (c == '*' && !(pos_ + 1 < s_.size() && s_[pos_ + 1] == '*')) {
        ++pos_;
        acc *= factor();
      } else if (c == '/') {
        ++pos_;
        Poly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= d.constant_term().inverse();
      } else if (starts_factor(c)) {
        acc *= factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly factor() {
    Poly b = base();
    char c = peek();
    bool power = false;
    if (c == '^') {
      ++pos_;
      power = true;
    } else if (c == '*' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '*') {
      pos_ += 2;
      power = true;
    }
    if (power) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      b = b.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return b;
  }

  Poly base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly::constant(reg_, Rational::parse(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_++;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      auto name = s_.substr(start, pos_ - start);
      auto idx = reg_->find(name);
      if (!idx) fail("unknown variable '" + std::string(name) + "'");
      return Poly::variable(reg_, *idx);
    }
    fail("expected a number, variable or '('");
  }

  RegistryPtr reg_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(RegistryPtr reg, std::string_view text) { return Parser(std::move(reg), text).parse(); }

// ---------------------------------------------------------------- free functions

std::optional<Rational> equal_up_to_scalar(const Poly& f, const Poly& g) {
  if (!same_registry(f.registry(), g.registry())) throw InputError("polynomials over different registries");
  if (f.is_zero() && g.is_zero()) return Rational(1);
  if (f.is_zero() || g.is_zero() || f.num_terms() != g.num_terms()) return std::nullopt;
  const auto& [ef, cf] = f.leading_term();
  const auto& [eg, cg] = g.leading_term();
  if (ef != eg) return std::nullopt;
  Rational c = cf / cg;
  auto it = g.terms().begin();
  for (const auto& [e, v] : f.terms()) {
    if (it->first != e || it->second * c != v) return std::nullopt;
    ++it;
  }
  return c;
}

std::optional<std::pair<Rational, Poly>> perfect_square_up_to_scalar(const Poly& f) {
  if (f.is_zero()) throw PreconditionError("perfect square test of the zero polynomial");
  const auto& reg = f.registry();
  const auto& [lead_e, lead_c] = f.leading_term();
  Exponents half(lead_e.size());
  for (std::size_t i = 0; i < lead_e.size(); ++i) {
    if (lead_e[i] % 2 != 0) return std::nullopt;
    half[i] = lead_e[i] / 2;
  }
  Poly g = f * lead_c.inverse();
  Poly root = Poly::monomial(reg, half, Rational(1));
  Exponents last = half;
  GrlexGreater greater;
  while (true) {
    Poly r = g - root * root;
    if (r.is_zero()) break;
    const auto& [re, rc] = r.leading_term();
    Exponents next(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      if (re[i] < half[i]) return std::nullopt;
      next[i] = re[i] - half[i];
    }
    if (!greater(last, next)) return std::nullopt;
    root.add_term(next, rc / Rational(2));
    last = next;
  }
  Poly t = root.canonical();
  Rational lambda = lead_c / adjrep::pow(t.leading_term().second, 2);
  return std::make_pair(lambda, t);
}

std::vector<Rational> gradient_at(const Poly& f, const std::vector<Rational>& point) {
  if (!f.is_homogeneous()) throw PreconditionError("projective gradient of a non-homogeneous polynomial");
  if (point.size() != f.num_vars()) throw InputError("point has wrong dimension");
  if (std::all_of(point.begin(), point.end(), [](const Rational& r) { return r.is_zero(); })) {
    throw InputError("zero vector is not a projective point");
  }
  std::vector<Rational> g;
  g.reserve(point.size());
  for (std::size_t v = 0; v < point.size(); ++v) g.push_back(f.derivative(v).evaluate(point));
  return g;
}

std::optional<Poly> exact_divide(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (!same_registry(f.registry(), g.registry())) throw InputError("polynomials over different registries");
  const auto& [ge, gc] = g.leading_term();
  Poly q(f.registry());
  Poly r = f;
  while (!r.is_zero()) {
    const auto& [re, rc] = r.leading_term();
    Exponents d(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      if (re[i] < ge[i]) return std::nullopt;
      d[i] = re[i] - ge[i];
    }
    Poly step = Poly::monomial(f.registry(), d, rc / gc);
    q += step;
    r -= step * g;
  }
  return q;
}

}  // namespace adjrep
