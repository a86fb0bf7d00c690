#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adjrep/rational.hpp"

namespace adjrep {

/// Ordered, immutable list of variable names. Index of a name is stable.
class VarRegistry {
 public:
  explicit VarRegistry(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws InputError for unknown names.
  std::size_t index(std::string_view name) const;

  friend bool operator==(const VarRegistry& a, const VarRegistry& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using RegistryPtr = std::shared_ptr<const VarRegistry>;

RegistryPtr make_registry(std::vector<std::string> names);
/// prefix+start, prefix+(start+1), ... (e.g. x0..x3).
RegistryPtr numbered_registry(const std::string& prefix, std::size_t count, std::size_t start = 0);
bool same_registry(const RegistryPtr& a, const RegistryPtr& b);

using Exponents = std::vector<std::uint32_t>;

/// Graded lex, larger first: total degree, then exponent of x0, x1, ...
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

std::uint32_t total_degree(const Exponents& e);

/// Sparse polynomial over the rationals. Terms are kept in graded-lex order,
/// leading term first; zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  explicit Poly(RegistryPtr reg);
  Poly(RegistryPtr reg, TermMap terms);

  static Poly constant(RegistryPtr reg, const Rational& c);
  static Poly variable(RegistryPtr reg, std::size_t i);
  static Poly variable(RegistryPtr reg, std::string_view name);
  static Poly monomial(RegistryPtr reg, Exponents exps, const Rational& c);
  /// sum_i coeffs[i] * x_i; coeffs.size() must equal the registry size.
  static Poly linear(RegistryPtr reg, const std::vector<Rational>& coeffs);
  /// Parses text like "2x1^3x2-3/49x0x2+(x1+1)^2". Throws InputError.
  static Poly parse(RegistryPtr reg, std::string_view text);

  const RegistryPtr& registry() const { return reg_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  std::size_t num_vars() const { return reg_->size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const Exponents& e) const;
  Rational constant_term() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(std::size_t v) const;
  bool is_homogeneous() const;
  bool is_multiaffine() const;
  std::vector<std::size_t> variables_used() const;

  /// Leading term in graded-lex order. Precondition: non-zero.
  const std::pair<const Exponents, Rational>& leading_term() const;
  /// Coefficients of the linear part, one per variable (degree <= 1 input).
  std::vector<Rational> linear_coefficients() const;

  void add_term(const Exponents& e, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;
  Poly pow(unsigned e) const;

  friend bool operator==(const Poly& a, const Poly& b);

  Poly derivative(std::size_t v) const;
  /// Replaces x_v by assignment[v]; other variables pass through. All images
  /// must share one registry, which becomes the result's registry; unassigned
  /// variables are matched into it by name.
  Poly substitute(const std::map<std::size_t, Poly>& assignment) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  /// Coefficient of x_v^k, as a polynomial free of x_v.
  Poly coefficient_of(std::size_t v, unsigned k) const;
  /// Multiplies each term by x_v^(d - deg) so the result is homogeneous of degree d.
  Poly homogenize(std::size_t v, int d) const;
  /// Same polynomial over another registry, matching variables by name.
  Poly remap(const RegistryPtr& target) const;

  /// Positive rational c such that f/c has coprime integer coefficients.
  Rational content() const;
  /// f / content, with positive leading coefficient.
  Poly canonical() const;

  std::string str() const;

 private:
  void check_registry(const Poly& o) const;

  RegistryPtr reg_;
  TermMap terms_;
};

/// c with f = c*g (c != 0), or empty. zero vs zero gives 1.
std::optional<Rational> equal_up_to_scalar(const Poly& f, const Poly& g);

/// (lambda, t) with f = lambda * t^2, t primitive with positive leading
/// coefficient, or empty when no rational square root exists.
std::optional<std::pair<Rational, Poly>> perfect_square_up_to_scalar(const Poly& f);

/// Gradient of homogeneous f at a projective point.
std::vector<Rational> gradient_at(const Poly& f, const std::vector<Rational>& point);

/// q with f = q*g when g divides f exactly, else empty.
std::optional<Poly> exact_divide(const Poly& f, const Poly& g);

}  // namespace adjrep
