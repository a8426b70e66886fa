#include "flowpoly/errors.hpp"
#include "flowpoly/polynomial.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace flowpoly;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long long> coef(-50, 50);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return IntPoly(c);
}

}  // namespace

TEST_CASE("construction trims zeros and reports degree") {
  CHECK(IntPoly{}.is_zero());
  CHECK(IntPoly{0, 0, 0}.is_zero());
  CHECK(IntPoly{}.degree() == IntPoly::kZeroDegree);
  CHECK(IntPoly{1, 2, 0, 0}.degree() == 1);
  CHECK(IntPoly::linear(-3) == IntPoly{-3, 1});
  CHECK(IntPoly::monomial(3, 2) == IntPoly{0, 0, 0, 2});
  CHECK(IntPoly{5, 7}.coeff(9) == 0);
  CHECK_THROWS_AS((void)IntPoly{}.leading(), DomainError);
}

TEST_CASE("ring laws hold on random polynomials") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 6);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == IntPoly{});
    CHECK(-(-a) == a);
    CHECK(add(a, b) == a + b);
    CHECK(mul(a, b) == a * b);
  }
}

TEST_CASE("pow and evaluation agree with repeated products") {
  const IntPoly p{-1, 1};
  CHECK(pow(p, 0) == IntPoly{1});
  CHECK(pow(p, 3) == p * p * p);
  CHECK(pow(p, 3).eval(BigInt(4)) == 27);
  CHECK(IntPoly{2, -3, 1}.eval(Rational(1, 2)) == Rational(3, 4));
  CHECK(IntPoly{2, -3, 1}.derivative() == IntPoly{-3, 2});
  CHECK(IntPoly{2, -3, 1}.reflect() == IntPoly{2, 3, 1});
}

TEST_CASE("exact division recovers factors and rejects remainders") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(rng, 5);
    auto b = random_poly(rng, 4);
    if (b.is_zero()) continue;
    CHECK(exact_div(a * b, b) == a);
  }
  CHECK_THROWS_AS(exact_div(IntPoly{1, 0, 1}, IntPoly{-1, 1}), InexactDivision);
  CHECK_THROWS_AS(exact_div(IntPoly{1, 2}, IntPoly{1, 2, 3}), InexactDivision);
  CHECK_THROWS_AS(exact_div(IntPoly{1, 1}, IntPoly{0, 2}), InexactDivision);
  CHECK_THROWS_AS(exact_div(IntPoly{1, 1}, IntPoly{}), DomainError);
  CHECK(exact_div(IntPoly{}, IntPoly{3}) == IntPoly{});
}

TEST_CASE("arithmetic stays exact past 64 bits") {
  IntPoly p = pow(IntPoly::linear(1000), 12);
  CHECK(p.coeff(0) == BigInt("1000000000000000000000000000000000000"));
  CHECK(exact_div(p, pow(IntPoly::linear(1000), 11)) == IntPoly::linear(1000));
}

TEST_CASE("tau transform") {
  // (t-1)(t-2) with m - n + 1 = 2
  CHECK(tau_transform(IntPoly{2, -3, 1}, 3, 2) == IntPoly{2, 3, 1});
  // (t-1)(t-2)^2 with m - n + 1 = 3
  CHECK(tau_transform(IntPoly{-4, 8, -5, 1}, 6, 4) == IntPoly{4, 8, 5, 1});
  CHECK(tau_transform(IntPoly{}, 5, 4) == IntPoly{});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_poly(rng, 6);
    CHECK(tau_transform(tau_transform(p, 9, 4), 9, 4) == p);
  }
}

TEST_CASE("coefficient-wise order pads the shorter polynomial") {
  CHECK(leq_c(IntPoly{1, 2}, IntPoly{1, 2, 3}));
  CHECK_FALSE(leq_c(IntPoly{1, 2, 3}, IntPoly{1, 2}));
  CHECK(leq_c(IntPoly{}, IntPoly{0, 1}));
  CHECK_FALSE(leq_c(IntPoly{}, IntPoly{0, -1}));
  CHECK(leq_c(IntPoly{2, 3, 1}, IntPoly{2, 3, 1}));
}

TEST_CASE("bound specs expand and print") {
  BoundSpec s{{{1, 1}, {2, 1}, {3, 2}}, false};
  CHECK(expand(s) == IntPoly::linear(1) * IntPoly::linear(2) * pow(IntPoly::linear(3), 2));
  CHECK(s.to_string() == "(t+1)(t+2)(t+3)^2");
  CHECK(BoundSpec{{{4, 0}}, false}.to_string() == "1");
  CHECK(expand(BoundSpec{}) == IntPoly{1});
}

TEST_CASE("text forms round-trip") {
  const IntPoly p{2, -3, 1};
  CHECK(p.to_string() == "2 -3 1");
  CHECK(IntPoly{}.to_string() == "0");
  CHECK(IntPoly::parse("2 -3 1") == p);
  CHECK(IntPoly::parse("0") == IntPoly{});
  CHECK(p.pretty() == "t^2 - 3*t + 2");
  CHECK(IntPoly{-1}.pretty() == "-1");
  CHECK(IntPoly{0, -1}.pretty() == "-t");
  CHECK_THROWS_AS(IntPoly::parse("1 x"), ParseError);
  CHECK_THROWS_AS(IntPoly::parse(""), ParseError);
  CHECK(p.to_decimal_strings() == std::vector<std::string>{"2", "-3", "1"});
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("32/27") == Rational(32, 27));
  CHECK(parse_rational("2.54") == Rational(127, 50));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-2)) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("exact signs") {
  const IntPoly p = oracle::from_roots({1, 2, 2});
  CHECK(sign_at(p, Rational(3, 2)) == 1);
  CHECK(sign_at(p, Rational(1, 2)) == -1);
  CHECK(sign_at(p, Rational(2)) == 0);
  CHECK(sign_at(IntPoly{}, Rational(5)) == 0);
}

TEST_CASE("sturm counts match planted roots") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long long> root(-6, 6);
  std::uniform_int_distribution<int> count(1, 7);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<long long> roots(static_cast<std::size_t>(count(rng)));
    for (auto& r : roots) r = root(rng);
    // An irreducible quadratic adds no real roots.
    const IntPoly p = oracle::from_roots(roots) * IntPoly{5, 2, 1};
    const long long lo = root(rng), hi = lo + std::uniform_int_distribution<long long>(0, 6)(rng);
    std::set<long long> distinct;
    std::size_t with_mult = 0;
    for (auto r : roots) {
      if (r > lo && r < hi) {
        distinct.insert(r);
        ++with_mult;
      }
    }
    const Interval iv{Rational(lo), Rational(hi)};
    CHECK(sturm_real_root_count(p, iv) == distinct.size());
    CHECK(real_root_count_with_multiplicity(p, iv) == with_mult);
    CHECK(sturm_real_root_count(p) == std::set<long long>(roots.begin(), roots.end()).size());
    CHECK(real_root_count_with_multiplicity(p) == roots.size());
  }
}

TEST_CASE("sturm counts with half-open and infinite ends") {
  const IntPoly p = oracle::from_roots({-5, 0, 3});
  CHECK(sturm_real_root_count(p, Interval{std::nullopt, Rational(1)}) == 2);
  CHECK(sturm_real_root_count(p, Interval{Rational(0), std::nullopt}) == 1);
  CHECK(sturm_real_root_count(IntPoly{10, -6, 1}) == 0);
  const IntPoly irr{-2, 0, 1};  // roots +-sqrt(2)
  CHECK(sturm_real_root_count(irr, Interval{Rational(1), Rational(3, 2)}) == 1);
  CHECK(sturm_real_root_count(irr, Interval{Rational(3, 2), Rational(2)}) == 0);
}

TEST_CASE("square-free decomposition") {
  const IntPoly p = oracle::from_roots({1, 2, 2, 3, 3, 3}) * IntPoly{4};
  const auto parts = square_free_decomposition(p);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == std::pair{IntPoly{-1, 1}, 1u});
  CHECK(parts[1] == std::pair{IntPoly{-2, 1}, 2u});
  CHECK(parts[2] == std::pair{IntPoly{-3, 1}, 3u});
}

TEST_CASE("rational roots with multiplicity") {
  const IntPoly p = IntPoly{-1, 2} * pow(IntPoly::linear(-3), 2) * IntPoly{10, -6, 1};
  const auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == RationalRoot{Rational(1, 2), 1});
  CHECK(roots[1] == RationalRoot{Rational(3), 2});
  CHECK(root_multiplicity(p, Rational(3)) == 2);
  CHECK(root_multiplicity(p, Rational(4)) == 0);
  CHECK(rational_roots(IntPoly{0, 0, 1}) == std::vector<RationalRoot>{{Rational(0), 2}});
}

TEST_CASE("elementary symmetric consistency") {
  const IntPoly p = oracle::from_roots({1, 2, 3});
  const std::vector<Rational> good{1, 2, 3};
  const std::vector<Rational> bad{1, 2, 4};
  CHECK(vieta_check(p, good));
  CHECK_FALSE(vieta_check(p, bad));
  CHECK(vieta_check(IntPoly{-6, 2} * oracle::from_roots({1, 1}), std::vector<Rational>{1, 1, 3}));
  CHECK_THROWS_AS(vieta_check(p, std::vector<Rational>{1, 2}), DomainError);
}

TEST_CASE("root summary") {
  const auto s = summarize_roots(oracle::from_roots({1, 2, 3, 3}));
  CHECK(s.degree == 4);
  CHECK(s.distinct_real == 3);
  CHECK(s.real_with_multiplicity == 4);
  CHECK(s.rational.size() == 3);
}
