#pragma once

#include "ospkw/atyp.hpp"
#include "ospkw/hook.hpp"
#include "ospkw/rootdata.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace ospkw {

/// Entries of a shifted weight that survive removal of matched atypical
/// pairs, as sorted absolute values.
struct CentralCharFingerprint {
  std::size_t k = 0;
  std::vector<HalfInt> reduced_delta;
  std::vector<HalfInt> reduced_eps;
  /// Family D, typical, no zero eps entry: product of the eps signs.
  int eps_sign = 0;

  friend bool operator==(const CentralCharFingerprint&, const CentralCharFingerprint&) = default;
  friend auto operator<=>(const CentralCharFingerprint&, const CentralCharFingerprint&) = default;
};

CentralCharFingerprint fingerprint(const Weight& shifted, const Algebra& alg);
bool same_central_character(const Weight& x, const Weight& y, const Algebra& alg);

/// a <= b: b - a is a nonnegative integer combination of positive roots of
/// borel (equivalently of its simple roots).
bool preceq(const Weight& a, const Weight& b, const BorelData& borel);

/// Inverse of shifted_natural for lambda^natural: throws HookViolation or
/// ParseError when the weight is not of that form.
HookPartition partition_from_shifted(const Weight& shifted, const Algebra& alg);

struct BottomStep {
  Weight before;  // shifted
  HalfInt b_j;
  HalfInt b_tilde;
  Weight after;  // shifted
  HookPartition partition;
};

struct BottomTrace {
  HookPartition start;
  std::vector<BottomStep> steps;
  HookPartition result;
};

BottomTrace bottom_of_block(const HookPartition& lam, const Algebra& alg);

/// Family D, tame, atypicality 1, lambda_n >= m - 1: all lambda(x), x in X,
/// ordered by x. Throws WrongRegime otherwise.
std::vector<std::pair<std::int64_t, HookPartition>> lambda_x_family(const HookPartition& lam, const Algebra& alg);

/// Even positive roots outside the canonical Levi of a tame lambda (k >= 1).
std::vector<Root> levi_complement_even(const TamenessReport& report);

struct AdmissibilityResult {
  bool positive = true;     // strict inequality on every root
  bool nonnegative = true;  // weak inequality on every root
  std::optional<Root> violation;  // first root with a value <= 0
  Rational violation_value;
  std::size_t checked = 0;
};

/// Strict positivity of (lambda^b + rho^b, beta / (beta, beta)) over the even
/// roots of the nilradical, on the canonical witness Borel.
AdmissibilityResult admissibility_positivity(const HookPartition& lam, const Algebra& alg);

}  // namespace ospkw
