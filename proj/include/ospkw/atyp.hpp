#pragma once

#include "ospkw/hook.hpp"
#include "ospkw/rootdata.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ospkw {

/// lambda^natural + rho^st, or lambda^natural_- + rho^st when minus is set.
Weight shifted_natural(const HookPartition& lam, const Algebra& alg, bool minus = false);

/// Index pairs (i, j) of a maximum set of mutually orthogonal isotropic roots
/// delta_i +- eps_j orthogonal to shifted. With delta_minus_eps_only, only
/// roots delta_i - eps_j are admitted.
std::vector<std::pair<std::size_t, std::size_t>> atypical_matching(const Weight& shifted,
                                                                   bool delta_minus_eps_only = false);

std::size_t atypicality_degree(const Weight& shifted, const Algebra& alg);

struct TamenessReport {
  Algebra algebra;
  HookPartition lambda;
  bool minus = false;
  std::size_t atypicality_k = 0;
  bool tame = false;
  std::optional<BorelData> witness_borel;  // set when tame and k >= 1
  Weight highest_weight;                   // with respect to the witness Borel
  std::vector<Root> distinguished_T;
  std::vector<Weight> levi_simple_roots;
  std::optional<int> e_lambda;  // family D with lambda_{n+1} < m
  std::uint64_t j_lambda = 1;

  /// Family D with lambda_{n+1} = m.
  bool top_row() const { return algebra.is_d() && lambda.part(lambda.n + 1) == static_cast<std::int64_t>(lambda.m); }
};

TamenessReport is_tame(const HookPartition& lam, const Algebra& alg, bool minus = false);

int e_of_lambda(const HookPartition& lam);

/// Distinguished set on the canonical witness Borel (b^odd, or the Borel with
/// eps_m moved next to delta_i in family D when lambda_{n+1} = m).
std::vector<Root> distinguished_T_bodd(const HookPartition& lam, const Algebra& alg);

std::uint64_t j_lambda(const TamenessReport& report, const Algebra& alg, const HookPartition& lam);

}  // namespace ospkw
