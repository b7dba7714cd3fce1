#include "ospkw/characters.hpp"

#include "ospkw/errors.hpp"

#include <algorithm>
#include <thread>

namespace ospkw {

namespace {

Exponent half_exponent(const Weight& w) {
  Exponent e = Exponent::from_weight(w);
  for (std::size_t i = 0; i < e.rank(); ++i) {
    if (e[i] % 2 != 0) fail(ErrorCode::InternalError, "root " + root_string(w) + " has odd doubled coordinates");
    e[i] /= 2;
  }
  return e;
}

// e^{a/2} - e^{-a/2}
LaurentPolynomial even_binomial(const Weight& a) {
  const Exponent h = half_exponent(a);
  return LaurentPolynomial::from_terms(a.n(), a.m(), {{h, BigInt(1)}, {-h, BigInt(-1)}});
}

// e^{a/2} + e^{-a/2}
LaurentPolynomial odd_binomial(const Weight& a) {
  const Exponent h = half_exponent(a);
  return LaurentPolynomial::from_terms(a.n(), a.m(), {{h, BigInt(1)}, {-h, BigInt(1)}});
}

// p * prod (1 + e^{-beta})
LaurentPolynomial times_one_plus(LaurentPolynomial p, const std::vector<Weight>& betas) {
  for (const Weight& b : betas) p += p.shifted(Exponent::from_weight(-b));
  return p;
}

unsigned worker_count(unsigned requested, std::size_t jobs) {
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(std::max(1u, requested), jobs)));
}

// Runs body(t, begin, end) over contiguous slices of [0, jobs).
template <class F>
void parallel_slices(unsigned threads, std::size_t jobs, F&& body) {
  const unsigned t = worker_count(threads, jobs);
  if (t == 1) {
    body(0u, std::size_t{0}, jobs);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (unsigned k = 0; k < t; ++k)
    pool.emplace_back([&, k] { body(k, jobs * k / t, jobs * (k + 1) / t); });
  for (auto& th : pool) th.join();
}

LaurentPolynomial naive_sum(const LaurentPolynomial& p, const Algebra& alg, unsigned threads) {
  const auto ws = weyl_elements(alg);
  const unsigned t = worker_count(threads, ws.size());
  std::vector<PolynomialAccumulator> parts(t, PolynomialAccumulator(p.n(), p.m()));
  parallel_slices(t, ws.size(), [&](unsigned k, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const bool neg = ws[i].sign() < 0;
      for (const auto& [e, c] : p.terms()) parts[k].add(ws[i].apply(e), neg ? BigInt(-c) : c);
    }
  });
  for (unsigned k = 1; k < t; ++k) parts[0].merge(std::move(parts[k]));
  return std::move(parts[0]).finish();
}

// Sorts v[lo, hi) by absolute value, descending. Returns the permutation sign,
// or 0 when two absolute values coincide.
int sort_by_abs(Exponent& v, std::size_t lo, std::size_t hi) {
  int sign = 1;
  for (std::size_t i = lo + 1; i < hi; ++i)
    for (std::size_t j = i; j > lo; --j) {
      const std::int64_t a = v[j - 1] < 0 ? -v[j - 1] : v[j - 1];
      const std::int64_t b = v[j] < 0 ? -v[j] : v[j];
      if (a == b) return 0;
      if (a > b) break;
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  return sign;
}

// Moves v into the dominant chamber of W. Returns det of the moving element,
// or 0 when v is fixed by a reflection.
int fold_dominant(Exponent& v, std::size_t n, std::size_t m, bool d_type) {
  int det = sort_by_abs(v, 0, n);
  if (det == 0) return 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0) return 0;
    if (v[i] < 0) v[i] = -v[i], det = -det;
  }
  const int pdet = sort_by_abs(v, n, n + m);
  if (pdet == 0) return 0;
  det *= pdet;
  if (!d_type) {
    for (std::size_t j = n; j < n + m; ++j) {
      if (v[j] == 0) return 0;
      if (v[j] < 0) v[j] = -v[j], det = -det;
    }
    return det;
  }
  // even number of sign changes only; a zero entry absorbs an odd one
  std::size_t negatives = 0;
  for (std::size_t j = n; j < n + m; ++j)
    if (v[j] < 0) v[j] = -v[j], ++negatives;
  if (negatives % 2 == 1 && m > 0 && v[n + m - 1] != 0) v[n + m - 1] = -v[n + m - 1];
  return det;
}

LaurentPolynomial orbit_sum(const LaurentPolynomial& p, const Algebra& alg, unsigned threads) {
  const std::size_t n = p.n(), m = p.m();
  PolynomialAccumulator folded(n, m);
  for (const auto& [e, c] : p.terms()) {
    Exponent v = e;
    const int det = fold_dominant(v, n, m, alg.is_d());
    if (det != 0) folded.add(v, det > 0 ? c : BigInt(-c));
  }
  const LaurentPolynomial dom = std::move(folded).finish();
  const auto ws = weyl_elements(alg);
  std::vector<int> signs;
  for (const auto& w : ws) signs.push_back(w.sign());
  const unsigned t = worker_count(threads, dom.size());
  std::vector<std::vector<LaurentPolynomial::Term>> parts(t);
  parallel_slices(t, dom.size(), [&](unsigned k, std::size_t lo, std::size_t hi) {
    auto& out = parts[k];
    out.reserve((hi - lo) * ws.size());
    for (std::size_t i = lo; i < hi; ++i) {
      const auto& [e, c] = dom.terms()[i];
      const BigInt nc = -c;
      for (std::size_t w = 0; w < ws.size(); ++w) out.emplace_back(ws[w].apply(e), signs[w] > 0 ? c : nc);
    }
  });
  std::vector<LaurentPolynomial::Term> all;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(all));
  return LaurentPolynomial::from_terms(n, m, std::move(all));
}

LaurentPolynomial divide_by_j(LaurentPolynomial p, std::uint64_t j) {
  if (!p.try_divide_scalar(BigInt(j)))
    fail(ErrorCode::JDivisibilityFailure, "alternating sum is not divisible by j = " + std::to_string(j));
  return p;
}

}  // namespace

std::vector<LaurentPolynomial> even_denominator_factors(const BorelData& b) {
  std::vector<LaurentPolynomial> out;
  for (const Root& r : b.pos_even) out.push_back(even_binomial(r.weight));
  return out;
}

std::pair<LaurentPolynomial, LaurentPolynomial> denominators(const BorelData& b) {
  std::vector<LaurentPolynomial> odd;
  for (const Root& r : b.pos_odd) odd.push_back(odd_binomial(r.weight));
  return {product(even_denominator_factors(b), b.n(), b.m()), product(odd, b.n(), b.m())};
}

LaurentPolynomial alternating_sum(const LaurentPolynomial& p, const Algebra& alg, const CharacterOptions& opt) {
  if (p.n() != alg.n || p.m() != alg.m) fail(ErrorCode::RankMismatch, "polynomial and algebra ranks differ");
  return opt.weyl_sum == WeylSum::Orbit ? orbit_sum(p, alg, opt.threads) : naive_sum(p, alg, opt.threads);
}

LaurentPolynomial kw_formula(const BorelData& b, const Weight& lam_b, const std::vector<Root>& T, std::uint64_t j,
                             const CharacterOptions& opt) {
  if (j == 0) fail(ErrorCode::InternalError, "j must be positive");
  std::vector<Weight> rest;
  for (const Root& r : b.pos_odd)
    if (std::find(T.begin(), T.end(), r) == T.end()) rest.push_back(r.weight);
  if (rest.size() + T.size() != b.pos_odd.size())
    fail(ErrorCode::InternalError, "T is not a subset of the positive odd roots");
  // rho^b + rho^b_1 = rho_0 for every Borel
  const LaurentPolynomial seed = times_one_plus(LaurentPolynomial::monomial(lam_b + b.rho_even, 1), rest);
  const LaurentPolynomial num = alternating_sum(seed, b.algebra, opt);
  return divide_by_j(exact_divide_by_factors(num, even_denominator_factors(b)), j);
}

LaurentPolynomial kw_character_on(const TamenessReport& r, const CharacterOptions& opt) {
  if (!r.tame) fail(ErrorCode::NotTame, "lambda = (" + r.lambda.str() + ") is not tame");
  if (r.atypicality_k == 0) return kw_formula(b_st(r.algebra), r.highest_weight, {}, 1, opt);
  return kw_formula(*r.witness_borel, r.highest_weight, r.distinguished_T, r.j_lambda, opt);
}

CharacterResult kw_character(const HookPartition& lam, const Algebra& alg, bool minus, const CharacterOptions& opt) {
  if (minus && !alg.is_d()) fail(ErrorCode::FamilyMismatch, "the minus twin exists only in family D");
  const TamenessReport report = is_tame(lam, alg, minus);
  if (!report.tame) fail(ErrorCode::NotTame, "lambda = (" + lam.str() + ") is not tame");
  CharacterResult cr;
  cr.algebra = alg;
  cr.lambda = lam;
  cr.minus = minus;
  cr.atypicality_k = report.atypicality_k;
  cr.highest_weight = report.highest_weight;
  cr.natural_highest_weight = natural_weight(lam).first;
  if (minus) cr.natural_highest_weight = sigma_twist(cr.natural_highest_weight);
  cr.borel_used = report.witness_borel ? *report.witness_borel : b_st(alg);
  cr.T_used = report.distinguished_T;
  cr.j_used = report.j_lambda;
  cr.character = minus ? sigma_twist(kw_character_on(is_tame(lam, alg, false), opt)) : kw_character_on(report, opt);
  cr.dimension = cr.character.evaluate_at_one();
  return cr;
}

LaurentPolynomial euler_char_character(const std::vector<Weight>& levi_simple_roots, const Weight& lam_b,
                                       const BorelData& b, const CharacterOptions& opt) {
  for (const Weight& a : levi_simple_roots)
    if (!b.has_simple_root(a)) fail(ErrorCode::NotSimpleIsotropic, root_string(a) + " is not a simple root");
  const auto levi = positive_roots_in_span(b, levi_simple_roots);
  std::vector<Weight> u_odd;
  for (const Root& r : b.pos_odd)
    if (std::find(levi.begin(), levi.end(), r) == levi.end()) u_odd.push_back(r.weight);
  const LaurentPolynomial seed = times_one_plus(LaurentPolynomial::monomial(lam_b + b.rho_even, 1), u_odd);
  return exact_divide_by_factors(alternating_sum(seed, b.algebra, opt), even_denominator_factors(b));
}

LaurentPolynomial supercharacter(const LaurentPolynomial& ch, const Weight& highest_weight) {
  const std::size_t n = ch.n();
  std::int64_t top = 0;
  for (HalfInt a : highest_weight.delta) top += a.doubled();
  std::vector<LaurentPolynomial::Term> terms;
  terms.reserve(ch.size());
  for (const auto& [e, c] : ch.terms()) {
    std::int64_t d = -top;  // twice the delta-degree difference
    for (std::size_t i = 0; i < n; ++i) d += e[i];
    if (d % 2 != 0) fail(ErrorCode::InternalError, "weight outside the root lattice coset of the highest weight");
    terms.emplace_back(e, (d / 2) % 2 == 0 ? c : BigInt(-c));
  }
  return LaurentPolynomial::from_terms(n, ch.m(), std::move(terms));
}

LaurentPolynomial supercharacter(const CharacterResult& cr) {
  return supercharacter(cr.character, cr.natural_highest_weight);
}

BigInt dimension(const CharacterResult& cr) { return cr.character.evaluate_at_one(); }

}  // namespace ospkw
