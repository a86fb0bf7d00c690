#include <doctest.h>

#include <random>

#include "adjrep/error.hpp"
#include "adjrep/fixtures.hpp"
#include "adjrep/kernels.hpp"
#include "adjrep/poly.hpp"
#include "adjrep/poly_matrix.hpp"
#include "oracles.hpp"

using namespace adjrep;

namespace {

RegistryPtr xyzw() { return make_registry({"x", "y", "z", "w"}); }

Poly random_poly(const RegistryPtr& reg, std::mt19937_64& rng, int terms, unsigned max_deg) {
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, static_cast<int>(max_deg));
  Poly p(reg);
  for (int t = 0; t < terms; ++t) {
    Exponents e(reg->size());
    for (auto& x : e) x = static_cast<std::uint32_t>(deg(rng));
    p += Poly::monomial(reg, e, Rational(coef(rng), 1 + std::abs(coef(rng))));
  }
  return p;
}

Poly random_linear(const RegistryPtr& reg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  QVector v;
  for (std::size_t i = 0; i < reg->size(); ++i) v.push_back(Rational(c(rng)));
  return Poly::linear(reg, v) + Poly::constant(reg, Rational(c(rng)));
}

}  // namespace

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("7").str() == "7");
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational::parse("x"), InputError);
  CHECK(rational_gcd(Rational(6, 5), Rational(4, 15)) == Rational(2, 15));
}

TEST_CASE("poly parse, print and canonical form") {
  auto reg = xyzw();
  Poly p = Poly::parse(reg, "(x+y)^2 - 2x*y");
  CHECK(p == Poly::parse(reg, "x^2+y^2"));
  CHECK(p.str() == "x^2+y^2");
  CHECK(Poly::parse(reg, "-6x+4/3y").canonical() == Poly::parse(reg, "9x-2y"));
  CHECK(Poly::parse(reg, "-6x+4/3y").content() == Rational(2, 3));
  CHECK_THROWS_AS(Poly::parse(reg, "x+q"), InputError);
  CHECK_THROWS_AS(Poly::parse(reg, "x+"), InputError);
  CHECK(Poly::parse(reg, "0").is_zero());
  CHECK(Poly::parse(reg, "0").degree() == -1);
}

TEST_CASE("derivative") {
  auto reg = xyzw();
  CHECK(Poly::parse(reg, "x^2y").derivative(0) == Poly::parse(reg, "2xy"));
  CHECK(Poly::parse(reg, "5").derivative(1).is_zero());
}

TEST_CASE("substitute") {
  auto reg = xyzw();
  Poly f = Poly::parse(reg, "x+y");
  CHECK(f.substitute({{0, Poly::constant(reg, Rational(1))}}) == Poly::parse(reg, "1+y"));
}

TEST_CASE("equal_up_to_scalar") {
  auto reg = xyzw();
  CHECK(equal_up_to_scalar(Poly::parse(reg, "2x+2y"), Poly::parse(reg, "x+y")) == Rational(2));
  CHECK_FALSE(equal_up_to_scalar(Poly::parse(reg, "x+y"), Poly::parse(reg, "x-y")));
  CHECK(equal_up_to_scalar(Poly(reg), Poly(reg)) == Rational(1));
}

TEST_CASE("perfect_square_up_to_scalar") {
  auto reg = xyzw();
  auto a = perfect_square_up_to_scalar(Poly::parse(reg, "x^2+2xy+y^2"));
  REQUIRE(a);
  CHECK(a->first == Rational(1));
  CHECK(a->second == Poly::parse(reg, "x+y"));
  auto b = perfect_square_up_to_scalar(Poly::parse(reg, "8x^2"));
  REQUIRE(b);
  CHECK(b->first == Rational(8));
  CHECK(b->second == Poly::parse(reg, "x"));
  CHECK_FALSE(perfect_square_up_to_scalar(Poly::parse(reg, "x^2+y^2")));
}

TEST_CASE("gradient_at") {
  auto p2 = make_registry({"x0", "x1", "x2"});
  CHECK(gradient_at(Poly::parse(p2, "x0x1"), {Rational(0), Rational(0), Rational(1)}) ==
        QVector{Rational(0), Rational(0), Rational(0)});
  auto p3 = make_registry({"x0", "x1", "x2", "x3"});
  CHECK(gradient_at(Poly::parse(p3, "x0^2+x1^2-x2^2-x3^2"), {Rational(1), Rational(0), Rational(1), Rational(0)}) ==
        QVector{Rational(2), Rational(0), Rational(-2), Rational(0)});
}

TEST_CASE("exact_divide") {
  auto reg = xyzw();
  auto q = exact_divide(Poly::parse(reg, "x^2-y^2"), Poly::parse(reg, "x-y"));
  REQUIRE(q);
  CHECK(*q == Poly::parse(reg, "x+y"));
  CHECK_FALSE(exact_divide(Poly::parse(reg, "x^2+y^2"), Poly::parse(reg, "x-y")));
}

TEST_CASE("det examples") {
  auto p3 = make_registry({"x0", "x1", "x2", "x3"});
  CHECK(det(PolyMatrix::identity(p3, 3)) == Poly::constant(p3, Rational(1)));
  auto m = PolyMatrix::parse(p3, {{"x0+x2", "x1+x3"}, {"-x1+x3", "x0-x2"}});
  CHECK(det(m) == Poly::parse(p3, "x0^2+x1^2-x2^2-x3^2"));

  auto reg = fixture_registry("assoc-n6");
  auto M = fixture_matrix("assoc-n6", "matrix");
  Poly a3 = fixture_poly("assoc-n6", "adj3");
  CHECK(a3.num_terms() == 14);
  CHECK(det(M) == a3);
  CHECK(oracle::leibniz_det(M) == a3);
}

TEST_CASE("property: ring axioms") {
  std::mt19937_64 rng(11);
  auto reg = xyzw();
  for (int it = 0; it < 30; ++it) {
    Poly a = random_poly(reg, rng, 4, 2), b = random_poly(reg, rng, 4, 2), c = random_poly(reg, rng, 4, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
  }
}

TEST_CASE("property: serial and parallel multiplication agree") {
  std::mt19937_64 rng(12);
  auto reg = xyzw();
  for (int it = 0; it < 5; ++it) {
    Poly a = random_poly(reg, rng, 90, 4), b = random_poly(reg, rng, 90, 4);
    CHECK(kernels::multiply_serial(a.terms(), b.terms()) == kernels::multiply_parallel(a.terms(), b.terms()));
  }
}

TEST_CASE("property: det multiplicative on scalar matrices, triangular det") {
  std::mt19937_64 rng(13);
  auto reg = xyzw();
  std::uniform_int_distribution<int> c(-4, 4);
  for (int it = 0; it < 10; ++it) {
    PolyMatrix a(reg, 3), b(reg, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        a.set(i, j, Poly::constant(reg, Rational(c(rng))));
        b.set(i, j, Poly::constant(reg, Rational(c(rng))));
      }
    CHECK(det(a * b) == det(a) * det(b));
  }
  for (int it = 0; it < 10; ++it) {
    PolyMatrix t(reg, 4);
    Poly prod = Poly::constant(reg, Rational(1));
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i; j < 4; ++j) t.set(i, j, random_linear(reg, rng));
      prod = prod * t(i, i);
    }
    CHECK(det(t) == prod);
  }
}

TEST_CASE("property: cofactor, parallel cofactor and Bareiss agree") {
  std::mt19937_64 rng(14);
  auto reg = xyzw();
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int it = 0; it < (n <= 4 ? 4 : 1); ++it) {
      PolyMatrix m(reg, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, random_linear(reg, rng));
      Poly d = det_cofactor(m);
      CHECK(d == det_bareiss(m));
      CHECK(d == det_cofactor_parallel(m));
      if (n <= 5) CHECK(d == oracle::leibniz_det(m));
    }
  }
}

TEST_CASE("property: chain rule for substitution") {
  std::mt19937_64 rng(15);
  auto reg = xyzw();
  for (int it = 0; it < 10; ++it) {
    Poly f = random_poly(reg, rng, 5, 2);
    std::map<std::size_t, Poly> sigma;
    for (std::size_t w = 0; w < 4; ++w) sigma.emplace(w, random_poly(reg, rng, 3, 1));
    for (std::size_t v = 0; v < 4; ++v) {
      Poly lhs = f.substitute(sigma).derivative(v);
      Poly rhs(reg);
      for (std::size_t w = 0; w < 4; ++w) rhs += f.derivative(w).substitute(sigma) * sigma.at(w).derivative(v);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("property: perfect square recovery") {
  std::mt19937_64 rng(16);
  auto reg = xyzw();
  std::uniform_int_distribution<int> c(1, 9);
  for (int it = 0; it < 20; ++it) {
    Poly t = random_poly(reg, rng, 3, 2);
    if (t.is_zero()) continue;
    Rational lambda(c(rng) * (it % 2 ? -1 : 1), c(rng));
    Poly f = lambda * t * t;
    auto r = perfect_square_up_to_scalar(f);
    REQUIRE(r);
    CHECK(r->first * r->second * r->second == f);
  }
}
