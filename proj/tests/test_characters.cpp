#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ospkw/blocks.hpp"
#include "ospkw/characters.hpp"
#include "ospkw/errors.hpp"

using namespace ospkw;

namespace {

std::vector<Algebra> small_algebras() {
  return {Algebra::make(Family::B, 1, 1), Algebra::make(Family::B, 1, 2), Algebra::make(Family::B, 2, 1),
          Algebra::make(Family::B, 2, 2), Algebra::make(Family::D, 2, 1), Algebra::make(Family::D, 2, 2)};
}

LaurentPolynomial one(const Algebra& alg) { return LaurentPolynomial::constant(alg.n, alg.m, 1); }

// 2^{#odd positive roots} times the Weyl dimension product at the shifted weight
// x: the dimension of a typical module. The even factor alone may be a half.
BigInt typical_dimension(const Weight& shifted, const Algebra& alg) {
  const BorelData b = b_st(alg);
  Rational d = 1;
  for (const Root& a : b.pos_even) d *= pairing(shifted, a.weight) / pairing(b.rho_even, a.weight);
  d *= Rational(BigInt(1) << b.pos_odd.size());
  REQUIRE(denominator(d) == 1);
  return numerator(d);
}

// The defining representation: e^{+-delta_i} + e^{+-eps_j} (+ 1 in family B).
LaurentPolynomial natural_module(const Algebra& alg) {
  const std::size_t n = alg.n, m = alg.m;
  LaurentPolynomial p(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (int s : {1, -1}) p += LaurentPolynomial::monomial(Weight::delta_unit(n, m, i, s), 1);
  for (std::size_t j = 0; j < m; ++j)
    for (int s : {1, -1}) p += LaurentPolynomial::monomial(Weight::eps_unit(n, m, j, s), 1);
  if (alg.is_b()) p += one(alg);
  return p;
}

// The adjoint representation: all roots plus the Cartan subalgebra.
LaurentPolynomial adjoint_module(const Algebra& alg) {
  const BorelData b = b_st(alg);
  LaurentPolynomial p = one(alg).scaled(static_cast<long>(alg.rank()));
  for (const auto* roots : {&b.pos_even, &b.pos_odd})
    for (const Root& r : *roots) {
      p += LaurentPolynomial::monomial(r.weight, 1);
      p += LaurentPolynomial::monomial(-r.weight, 1);
    }
  return p;
}

bool nonnegative(const LaurentPolynomial& p) {
  for (const auto& t : p.terms())
    if (t.second < 0) return false;
  return true;
}

}  // namespace

TEST_CASE("denominators") {
  auto b11 = Algebra::make(Family::B, 1, 1);
  auto [d0, d1] = denominators(b_st(b11));
  // (e^{d1} - e^{-d1})(e^{e1/2} - e^{-e1/2})
  LaurentPolynomial f1 = LaurentPolynomial::monomial(Weight::from_ints({1}, {0}), 1) -
                         LaurentPolynomial::monomial(Weight::from_ints({-1}, {0}), 1);
  LaurentPolynomial f2 = LaurentPolynomial::monomial(Weight::from_doubled({0}, {1}), 1) -
                         LaurentPolynomial::monomial(Weight::from_doubled({0}, {-1}), 1);
  CHECK(d0 == f1 * f2);
  // three odd roots d1-e1, d1+e1, d1
  CHECK(d1.size() == 8);

  for (const Algebra& alg : {Algebra::make(Family::B, 2, 2), Algebra::make(Family::D, 2, 2),
                             Algebra::make(Family::D, 3, 1)}) {
    auto [e0, e1] = denominators(b_st(alg));
    for (const auto& seq : all_sequences(alg)) {
      auto [x0, x1] = denominators(borel_from_sequence(alg, seq));
      CHECK(x1 == e1);
      CHECK((x0 == e0 || x0 == -e0));
    }
    for (const auto& w : weyl_elements(alg)) {
      CHECK(apply_weyl(w, e1) == e1);
      CHECK(apply_weyl(w, e0) == e0.scaled(w.sign()));
    }
  }
}

TEST_CASE("trivial modules have character 1") {
  struct Case {
    Family f;
    std::size_t m, n;
    std::uint64_t j;
  };
  for (const Case& c : {Case{Family::B, 1, 1, 2}, Case{Family::B, 2, 2, 8}, Case{Family::D, 2, 1, 2},
                        Case{Family::D, 2, 2, 4}, Case{Family::D, 3, 2, 8}}) {
    auto alg = Algebra::make(c.f, c.m, c.n);
    auto cr = kw_character(HookPartition::make({}, c.n, c.m), alg);
    CAPTURE(alg.name());
    CHECK(cr.character == one(alg));
    CHECK(cr.j_used == c.j);
    CHECK(cr.dimension == 1);
  }
  auto cr = kw_character(HookPartition::make({}, 1, 1), Algebra::make(Family::B, 1, 1));
  REQUIRE(cr.T_used.size() == 1);
  CHECK(root_string(cr.T_used[0]) == "e1-d1");
}

TEST_CASE("a wrong j is caught") {
  auto alg = Algebra::make(Family::B, 2, 2);
  auto r = is_tame(HookPartition::make({}, 2, 2), alg);
  try {
    kw_formula(*r.witness_borel, r.highest_weight, r.distinguished_T, 16);
    FAIL("expected JDivisibilityFailure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::JDivisibilityFailure);
  }
  CHECK(kw_formula(*r.witness_borel, r.highest_weight, r.distinguished_T, 4) == one(alg).scaled(2));
}

TEST_CASE("Euler characteristic constants") {
  for (std::size_t k = 1; k <= 2; ++k) {
    for (Family f : {Family::B, Family::D}) {
      auto alg = Algebra::make(f, k, k, true);
      BorelData b = b_odd(alg);
      std::vector<Weight> levi;
      for (std::size_t i = 0; i + 1 < b.simple_roots.size(); ++i) levi.push_back(b.simple_roots[i].weight);
      const long expect = f == Family::B ? 1L << k : 1L << (k - 1);
      CAPTURE(alg.name());
      CHECK(euler_char_character(levi, Weight::zero(k, k), b) == one(alg).scaled(expect));
    }
  }
  // osp(4|2) with a gl(2|1) Levi
  auto d21 = Algebra::make(Family::D, 2, 1);
  BorelData b = b_odd(d21);
  CHECK(euler_char_character({b.simple_roots[0].weight, b.simple_roots[1].weight}, Weight::zero(1, 2), b) ==
        one(d21).scaled(2));
}

TEST_CASE("natural and adjoint modules") {
  std::size_t natural = 0, adjoint = 0;
  for (const Algebra& alg : small_algebras()) {
    CAPTURE(alg.name());
    auto nat = HookPartition::make({1}, alg.n, alg.m);
    if (is_tame(nat, alg).tame) {
      CHECK(kw_character(nat, alg).character == natural_module(alg));
      ++natural;
    }
    auto adj = HookPartition::make({2}, alg.n, alg.m);
    if (is_tame(adj, alg).tame) {
      CHECK(kw_character(adj, alg).character == adjoint_module(alg));
      ++adjoint;
    }
  }
  CHECK(natural > 0);
  CHECK(adjoint > 0);
}

TEST_CASE("typical dimensions match the Weyl dimension formula") {
  auto b11 = Algebra::make(Family::B, 1, 1);
  auto cr = kw_character(HookPartition::make({2}, 1, 1), b11);
  CHECK(cr.atypicality_k == 0);
  CHECK(cr.dimension == typical_dimension(shifted_natural(cr.lambda, b11), b11));
  std::size_t checked = 0;
  for (const Algebra& alg : small_algebras())
    for (const auto& lam : hook_partitions(alg.n, alg.m, 5)) {
      const Weight s = shifted_natural(lam, alg);
      if (atypicality_degree(s, alg) != 0) continue;
      CAPTURE(alg.name());
      CAPTURE(lam.str());
      CHECK(kw_character(lam, alg).dimension == typical_dimension(s, alg));
      ++checked;
    }
  CHECK(checked > 20);
}

TEST_CASE("Weyl sum strategies and thread counts agree") {
  for (const Algebra& alg : {Algebra::make(Family::B, 2, 2), Algebra::make(Family::D, 2, 2)}) {
    for (const auto& lam : hook_partitions(alg.n, alg.m, 4)) {
      auto r = is_tame(lam, alg);
      if (!r.tame) continue;
      const auto base = kw_character_on(r);
      CHECK(kw_character_on(r, {4, WeylSum::Naive}) == base);
      CHECK(kw_character_on(r, {1, WeylSum::Orbit}) == base);
      CHECK(kw_character_on(r, {3, WeylSum::Orbit}) == base);
    }
  }
}

TEST_CASE("Euler characteristic equals the KW character") {
  std::size_t compared = 0;
  for (const Algebra& alg : small_algebras())
    for (const auto& lam : hook_partitions(alg.n, alg.m, 6))
      for (bool minus : {false, true}) {
        if (minus && alg.is_b()) continue;
        auto r = is_tame(lam, alg, minus);
        if (!r.tame) continue;
        CAPTURE(alg.name());
        CAPTURE(lam.str());
        CAPTURE(minus);
        const BorelData b = r.witness_borel ? *r.witness_borel : b_st(alg);
        CHECK(euler_char_character(r.levi_simple_roots, r.highest_weight, b, {1, WeylSum::Orbit}) ==
              kw_character(lam, alg, minus, {1, WeylSum::Orbit}).character);
        ++compared;
      }
  CHECK(compared > 100);
}

TEST_CASE("character properties") {
  std::size_t checked = 0;
  for (const Algebra& alg : small_algebras()) {
    const auto ws = weyl_elements(alg);
    const BorelData bst = b_st(alg);
    const auto d0 = even_denominator_factors(bst);
    for (const auto& lam : hook_partitions(alg.n, alg.m, 6)) {
      if (!is_tame(lam, alg).tame) continue;
      for (bool minus : {false, true}) {
        if (minus && alg.is_b()) continue;
        CAPTURE(alg.name());
        CAPTURE(lam.str());
        CAPTURE(minus);
        const CharacterOptions opt{1, WeylSum::Orbit};
        auto cr = kw_character(lam, alg, minus, opt);
        const auto& ch = cr.character;
        CHECK(nonnegative(ch));
        CHECK(ch.coefficient(cr.natural_highest_weight) == 1);
        CHECK(ch.coefficient(cr.highest_weight) == 1);
        CHECK(cr.dimension >= 1);
        for (const auto& w : ws) REQUIRE(apply_weyl(w, ch) == ch);
        for (const auto& [e, c] : ch.terms()) REQUIRE(preceq(e.to_weight(alg.n), cr.natural_highest_weight, bst));
        // round trip: ch * D_0 * j is the alternating sum
        const auto r = is_tame(lam, alg, minus);
        const BorelData b = r.witness_borel ? *r.witness_borel : bst;
        std::vector<Weight> rest;
        for (const Root& x : b.pos_odd)
          if (std::find(r.distinguished_T.begin(), r.distinguished_T.end(), x) == r.distinguished_T.end())
            rest.push_back(x.weight);
        LaurentPolynomial seed = LaurentPolynomial::monomial(r.highest_weight + b.rho_even, 1);
        for (const Weight& x : rest) seed += seed.shifted(Exponent::from_weight(-x));
        CHECK(product(d0, alg.n, alg.m) * ch.scaled(BigInt(r.j_lambda)) == alternating_sum(seed, alg, opt));
        if (minus) {
          CHECK(kw_character_on(r, opt) == ch);
          CHECK(sigma_twist(kw_character(lam, alg, false, opt).character) == ch);
        }
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("typical characters do not depend on the Borel") {
  std::size_t checked = 0;
  for (const Algebra& alg : small_algebras())
    for (const auto& lam : hook_partitions(alg.n, alg.m, 6)) {
      if (atypicality_degree(shifted_natural(lam, alg), alg) != 0) continue;
      const auto ch = kw_character(lam, alg, false, {1, WeylSum::Orbit}).character;
      for (const auto& seq : all_sequences(alg)) {
        const BorelData b = borel_from_sequence(alg, seq);
        const Weight hw = highest_weight_via_reflections(lam, b, false);
        CAPTURE(alg.name());
        CAPTURE(lam.str());
        CAPTURE(seq.str());
        CHECK(kw_formula(b, hw, {}, 1, {1, WeylSum::Orbit}) == ch);
      }
      ++checked;
    }
  CHECK(checked > 20);
}

TEST_CASE("supercharacter and errors") {
  auto b11 = Algebra::make(Family::B, 1, 1);
  auto triv = kw_character(HookPartition::make({}, 1, 1), b11);
  CHECK(supercharacter(triv) == one(b11));
  auto hw_only = LaurentPolynomial::monomial(Weight::from_ints({2}, {1}), 1);
  CHECK(supercharacter(hw_only, Weight::from_ints({2}, {1})) == hw_only);
  // bottom of the block of (1) in osp(3|2) is the trivial module
  auto bottom = bottom_of_block(HookPartition::make({1}, 1, 1), b11).result;
  CHECK(supercharacter(kw_character(bottom, b11)).evaluate_at_one() == 1);
  // natural module: 2 even and 2 odd dimensions
  auto nat = kw_character(HookPartition::make({1}, 2, 2), Algebra::make(Family::D, 2, 2));
  CHECK(supercharacter(nat).evaluate_at_one() == 0);

  auto b33 = Algebra::make(Family::B, 3, 3);
  CHECK_THROWS_AS(kw_character(HookPartition::make({6, 6, 5, 2, 1, 1}, 3, 3), b33), Error);
  CHECK_THROWS_AS(kw_character(HookPartition::make({1}, 1, 1), b11, true), Error);
}
