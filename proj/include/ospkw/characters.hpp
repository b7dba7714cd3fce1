#pragma once

#include "ospkw/atyp.hpp"
#include "ospkw/hook.hpp"
#include "ospkw/laurent.hpp"
#include "ospkw/rootdata.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace ospkw {

enum class WeylSum {
  Naive,  // transform the seed by every element of W
  Orbit,  // fold the seed into the dominant chamber, then expand each orbit once
};

struct CharacterOptions {
  unsigned threads = 1;
  WeylSum weyl_sum = WeylSum::Naive;
};

struct CharacterResult {
  Algebra algebra;
  HookPartition lambda;
  bool minus = false;
  std::size_t atypicality_k = 0;
  LaurentPolynomial character;
  Weight highest_weight;  // with respect to borel_used
  Weight natural_highest_weight;
  BorelData borel_used;
  std::vector<Root> T_used;
  std::uint64_t j_used = 1;
  BigInt dimension;
};

/// Expanded D_0 and D_1 of b.
std::pair<LaurentPolynomial, LaurentPolynomial> denominators(const BorelData& b);

/// The binomials e^{a/2} - e^{-a/2}, one per even positive root.
std::vector<LaurentPolynomial> even_denominator_factors(const BorelData& b);

/// Sum over W of det(w) w(p).
LaurentPolynomial alternating_sum(const LaurentPolynomial& p, const Algebra& alg, const CharacterOptions& opt = {});

/// (1/j) D_b^{-1} sum_w det(w) w(e^{lam_b + rho^b} / prod_T (1 + e^{-beta})),
/// with the odd denominator cleared against D_1.
LaurentPolynomial kw_formula(const BorelData& b, const Weight& lam_b, const std::vector<Root>& T, std::uint64_t j,
                             const CharacterOptions& opt = {});

/// Evaluates the formula on the witness data of a tame report (b^st with T
/// empty for typical weights).
LaurentPolynomial kw_character_on(const TamenessReport& report, const CharacterOptions& opt = {});

/// For minus the plain character is computed and twisted by sigma.
CharacterResult kw_character(const HookPartition& lam, const Algebra& alg, bool minus = false,
                             const CharacterOptions& opt = {});

/// Euler characteristic of the module induced from the one-dimensional Levi
/// module of weight lam_b; the Levi is spanned by levi_simple_roots.
LaurentPolynomial euler_char_character(const std::vector<Weight>& levi_simple_roots, const Weight& lam_b,
                                       const BorelData& b, const CharacterOptions& opt = {});

/// Signs each weight space by the parity of its delta-degree relative to the
/// highest weight.
LaurentPolynomial supercharacter(const CharacterResult& cr);
LaurentPolynomial supercharacter(const LaurentPolynomial& ch, const Weight& highest_weight);

BigInt dimension(const CharacterResult& cr);

}  // namespace ospkw
