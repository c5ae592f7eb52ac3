#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homlink/random.hpp"
#include "oracle.hpp"

using namespace homlink;

namespace {

std::vector<RingPtr> test_rings() {
  return {oracle::qq_ring(), make_ring({"x", "y", "z"}, Field::prime(32003)), make_ring({"x", "y", "z"}, Field::prime(7))};
}

}  // namespace

TEST_CASE("field arithmetic") {
  Field F = Field::prime(32003);
  CHECK(F.is_one(F.mul(F.from_int(5), F.inv(F.from_int(5)))));
  CHECK(F.equal(F.from_int(-1), F.from_int(32002)));
  CHECK(F.name() == "GF:32003");
  Field Q = Field::rationals();
  CHECK(Q.equal(Q.div(Q.from_int(3), Q.from_int(6)), Q.from_mpq(mpq_class(1, 2))));
  CHECK(Q.name() == "QQ");
  CHECK_THROWS(Field::prime(32004));
  CHECK_THROWS(F.inv(F.zero()));
}

TEST_CASE("ring axioms on random triples") {
  for (const auto& R : test_rings()) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 1000; ++i) {
      auto a = oracle::random_poly(R, rng), b = oracle::random_poly(R, rng), c = oracle::random_poly(R, rng);
      REQUIRE((a + b) == (b + a));
      REQUIRE((a * b) == (b * a));
      REQUIRE(((a + b) + c) == (a + (b + c)));
      REQUIRE(((a * b) * c) == (a * (b * c)));
      REQUIRE((a * (b + c)) == (a * b + a * c));
      REQUIRE((a - a).is_zero());
      REQUIRE((a + (-a)).is_zero());
      REQUIRE((a * Polynomial::constant(R, 1)) == a);
      if (!a.is_zero() && !b.is_zero()) REQUIRE((a * b).degree() == a.degree() + b.degree());
    }
  }
}

TEST_CASE("printing then parsing is the identity") {
  for (const auto& R : test_rings()) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
      auto f = oracle::random_poly(R, rng, 5, 6);
      INFO(f.to_string());
      REQUIRE(parse_polynomial(f.to_string(), R) == f);
    }
  }
}

TEST_CASE("parser") {
  auto R = oracle::qq_ring();
  auto f = parse_polynomial("x^2*y + y^3 - y*z^2 - z^3", R);
  CHECK(f.size() == 4);
  CHECK(f.degree() == 3);
  CHECK(f.is_homogeneous());
  CHECK(f.to_string() == "x^2*y + y^3 - y*z^2 - z^3");
  CHECK(parse_polynomial("(x+y)^2", R) == parse_polynomial("x^2 + 2*x*y + y^2", R));
  CHECK(parse_polynomial("x/2 + 3/4*y", R) == parse_polynomial("(2*x + 3*y)/4", R));
  CHECK(parse_polynomial_list(" ", R).empty());
  CHECK(parse_polynomial_list("x, (y+z)*x, z^2", R).size() == 3);

  auto position = [&](const std::string& s) {
    try {
      parse_polynomial(s, R);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(position("x + w") == 4);
  CHECK(position("x^") >= 2);
  CHECK(position("x + ") >= 3);
  CHECK(position("(x + y") >= 0);
  CHECK(position("x/0") >= 0);
  CHECK(parse_variable_list("x0, x1,x2") == std::vector<std::string>{"x0", "x1", "x2"});
}

TEST_CASE("homogeneity is preserved by ring operations") {
  auto R = oracle::qq_ring();
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    auto a = oracle::random_poly(R, rng, 4, 5), b = oracle::random_poly(R, rng, 4, 5);
    if (!a.is_homogeneous() || !b.is_homogeneous() || a.is_zero() || b.is_zero()) continue;
    ++checked;
    CHECK((a * b).is_homogeneous());
    CHECK(a.pow(3).is_homogeneous());
    if (a.degree() == b.degree()) CHECK((a + b).is_homogeneous());
  }
  CHECK(checked > 20);
  CHECK_FALSE(parse_polynomial("x^2 + y", R).is_homogeneous());
}

TEST_CASE("freshman's dream in characteristic 2") {
  auto R = make_ring({"x", "y"}, Field::prime(2));
  auto x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
  CHECK((x + y).pow(2) == x * x + y * y);
  CHECK((x + y).pow(4) == x.pow(4) + y.pow(4));
}

TEST_CASE("random forms") {
  auto R = make_ring({"x", "y", "z"}, Field::prime(32003));
  auto f = random_form(R, 3, 17);
  CHECK(f == random_form(R, 3, 17));
  CHECK(f.is_homogeneous());
  CHECK(f.degree() == 3);
  CHECK_THROWS_AS(random_form(oracle::qq_ring(), 2, 1), std::logic_error);

  // Two quadrics from different seeds are never proportional: rank of the
  // two coefficient vectors is 2.
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto a = random_form(R, 2, 2 * s), b = random_form(R, 2, 2 * s + 1);
    REQUIRE(oracle::rank(R->field(), oracle::coordinates(R, {a, b}, 2)) == 2);
  }

  auto Q = oracle::qq_ring();
  std::vector<Polynomial> basis{parse_polynomial("x^2", Q), parse_polynomial("y^2", Q)};
  auto c = random_combination(Q, basis, 4);
  CHECK(c == random_combination(Q, basis, 4));
  CHECK(c.degree() == 2);
  for (const auto& t : c.terms()) {
    auto q = std::get<mpq_class>(t.coeff);
    CHECK(q.get_den() == 1);
    CHECK(abs(q) <= 7);
  }
}

TEST_CASE("monomial helpers") {
  CHECK(count_monomials(3, 7) == 36);
  CHECK(monomials_of_degree(4, 2).size() == 10);
  auto a = Monomial::from_exponents({2, 0, 1}), b = Monomial::from_exponents({1, 3, 0});
  CHECK(lcm(a, b) == Monomial::from_exponents({2, 3, 1}));
  CHECK(gcd(a, b) == Monomial::from_exponents({1, 0, 0}));
  CHECK(divides(gcd(a, b), a));
  CHECK_FALSE(divides(a, b));
}
