#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ospkw/errors.hpp"
#include "ospkw/laurent.hpp"

#include <random>

using namespace ospkw;

namespace {

LaurentPolynomial mono(std::vector<std::int64_t> dd, std::vector<std::int64_t> de, long c) {
  return LaurentPolynomial::monomial(Weight::from_doubled(dd, de), c);
}

LaurentPolynomial random_poly(std::mt19937& rng, std::size_t n, std::size_t m, int terms, int span) {
  std::uniform_int_distribution<int> coef(-5, 5), ex(-span, span);
  std::vector<LaurentPolynomial::Term> t;
  for (int k = 0; k < terms; ++k) {
    Exponent e(n + m);
    for (std::size_t i = 0; i < n + m; ++i) e[i] = ex(rng);
    t.emplace_back(e, coef(rng));
  }
  return LaurentPolynomial::from_terms(n, m, t);
}

}  // namespace

TEST_CASE("half integers") {
  HalfInt h = HalfInt::from_doubled(11);
  CHECK(to_string(h) == "11/2");
  CHECK(to_string(-h) == "-11/2");
  CHECK(to_string(HalfInt::from_int(3)) == "3");
  CHECK(h + HalfInt::half() == HalfInt::from_int(6));
  CHECK(h * 2 == HalfInt::from_int(11));
  CHECK(!h.is_integer());
  CHECK_THROWS_AS(h.to_int(), Error);
  CHECK(product(h, HalfInt::half()) == Rational(11) / 4);
}

TEST_CASE("weights") {
  Weight w = Weight::from_doubled({11, 9}, {1});
  CHECK(display(w) == "(11/2, 9/2 | 1/2)");
  CHECK(to_linear_string(Weight::from_ints({10, 9}, {0, 2})) == "10d1+9d2+2e2");
  CHECK(to_linear_string(Weight(2, 2)) == "0");
  CHECK((w - w).is_zero());
  CHECK((2 * w).is_integral());
  CHECK_THROWS_AS(w + Weight(1, 1), Error);
}

TEST_CASE("monomial") {
  auto one = LaurentPolynomial::monomial(Weight(1, 1), 1);
  CHECK(one.size() == 1);
  CHECK(one.evaluate_at_one() == 1);
  auto m = LaurentPolynomial::monomial(Weight::from_ints({1}, {0}), -1);
  CHECK(m.leading_term().second == -1);
  CHECK(m.leading_term().first[0] == 2);
  auto h = LaurentPolynomial::monomial(Weight::from_doubled({1}, {-1}), 2);
  CHECK(h.leading_term().first[0] == 1);
  CHECK(h.leading_term().first[1] == -1);
  CHECK(h.leading_term().first.to_weight(1) == Weight::from_doubled({1}, {-1}));
  CHECK(LaurentPolynomial::monomial(Weight(1, 1), 0).is_zero());
}

TEST_CASE("exact division examples") {
  auto num = mono({2}, {}, 1) - mono({-2}, {}, 1);
  auto den = mono({1}, {}, 1) - mono({-1}, {}, 1);
  CHECK(exact_divide(num, den) == mono({1}, {}, 1) + mono({-1}, {}, 1));
  CHECK(exact_divide(LaurentPolynomial(1, 0), den).is_zero());

  // (e^{3d}-e^{-3d}) / (e^{d}-e^{-d}) = e^{2d} + 1 + e^{-2d}, expanded by hand.
  auto weyl = mono({6}, {}, 1) - mono({-6}, {}, 1);
  auto d1 = mono({2}, {}, 1) - mono({-2}, {}, 1);
  auto q = exact_divide(weyl, d1);
  CHECK(q == mono({4}, {}, 1) + mono({0}, {}, 1) + mono({-4}, {}, 1));
  CHECK(q.evaluate_at_one() == 3);

  CHECK_THROWS_AS(exact_divide(mono({2}, {}, 1) + mono({0}, {}, 1), d1), Error);
  CHECK_THROWS_AS(exact_divide(mono({0}, {}, 1), mono({0}, {}, 2)), Error);
  try {
    exact_divide(mono({4}, {}, 1), d1);
    FAIL("expected NotDivisible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDivisible);
  }
}

TEST_CASE("evaluate at one") {
  CHECK((mono({2}, {}, 1) + mono({-2}, {}, 1)).evaluate_at_one() == 2);
  CHECK(LaurentPolynomial(2, 2).evaluate_at_one() == 0);
}

TEST_CASE("ring axioms and round trip on random polynomials") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_poly(rng, 2, 1, 4, 3);
    auto b = random_poly(rng, 2, 1, 3, 3);
    auto c = random_poly(rng, 2, 1, 3, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(-(-a) == a);
    if (!b.is_zero()) CHECK(exact_divide(a * b, b) == a);
    CHECK((a * b).size() <= a.size() * b.size());
    CHECK((a * b).evaluate_at_one() == a.evaluate_at_one() * b.evaluate_at_one());
  }
}

TEST_CASE("canonical form does not depend on construction order") {
  std::mt19937 rng(7);
  auto a = random_poly(rng, 1, 2, 6, 3);
  std::vector<LaurentPolynomial::Term> rev(a.terms().rbegin(), a.terms().rend());
  CHECK(LaurentPolynomial::from_terms(1, 2, rev) == a);
  PolynomialAccumulator acc(1, 2);
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) acc.add(it->first, it->second);
  acc.add(a.terms().front().first, 5);
  acc.add(a.terms().front().first, -5);
  CHECK(std::move(acc).finish() == a);
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a.terms()[i - 1].first > a.terms()[i].first);
}

TEST_CASE("big coefficients") {
  auto p = mono({1}, {}, 1) + mono({0}, {}, 1);
  LaurentPolynomial q = LaurentPolynomial::constant(1, 0, 1);
  for (int i = 0; i < 80; ++i) q = q * p;
  CHECK(q.evaluate_at_one() == BigInt(1) << 80);
  auto r = exact_divide_by_factors(q, std::vector<LaurentPolynomial>(80, p));
  CHECK(r == LaurentPolynomial::constant(1, 0, 1));
  auto s = q.scaled(6);
  CHECK(s.try_divide_scalar(3));
  CHECK(!s.try_divide_scalar(BigInt(1) << 90));
  CHECK(s == q.scaled(2));
}

TEST_CASE("monomial strings") {
  auto p = mono({4}, {-1}, 3) - mono({0}, {0}, 1) + mono({2}, {2}, 1);
  CHECK(to_monomial_string(p) == "3*y1^2*x1^(-1/2) + y1*x1 - 1");
}
