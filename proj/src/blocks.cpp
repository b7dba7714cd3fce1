#include "ospkw/blocks.hpp"

#include "ospkw/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ospkw {

namespace {

void sort_desc(std::vector<HalfInt>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

bool contains(const std::vector<HalfInt>& v, HalfInt x) { return std::find(v.begin(), v.end(), x) != v.end(); }

Root even_root(Weight w) { return Root{std::move(w), false}; }

}  // namespace

CentralCharFingerprint fingerprint(const Weight& shifted, const Algebra& alg) {
  if (shifted.n() != alg.n || shifted.m() != alg.m) fail(ErrorCode::RankMismatch, "weight and algebra ranks differ");
  std::map<HalfInt, std::size_t> cd, ce;
  for (HalfInt a : shifted.delta) ++cd[a.abs()];
  for (HalfInt b : shifted.eps) ++ce[b.abs()];
  CentralCharFingerprint f;
  for (auto& [v, c] : cd) {
    auto it = ce.find(v);
    if (it == ce.end()) continue;
    const std::size_t r = std::min(c, it->second);
    f.k += r;
    c -= r;
    it->second -= r;
  }
  for (const auto& [v, c] : cd) f.reduced_delta.insert(f.reduced_delta.end(), c, v);
  for (const auto& [v, c] : ce) f.reduced_eps.insert(f.reduced_eps.end(), c, v);
  sort_desc(f.reduced_delta);
  sort_desc(f.reduced_eps);
  if (alg.is_d() && f.k == 0) {
    int sign = 1;
    for (HalfInt b : shifted.eps) {
      if (b == HalfInt{}) {
        sign = 0;
        break;
      }
      if (b < HalfInt{}) sign = -sign;
    }
    f.eps_sign = sign;
  }
  return f;
}

bool same_central_character(const Weight& x, const Weight& y, const Algebra& alg) {
  return fingerprint(x, alg) == fingerprint(y, alg);
}

bool preceq(const Weight& a, const Weight& b, const BorelData& borel) {
  const auto coords = simple_root_coordinates(borel, b - a);
  if (!coords) return false;
  for (const Rational& c : *coords)
    if (denominator(c) != 1 || c < 0) return false;
  return true;
}

HookPartition partition_from_shifted(const Weight& shifted, const Algebra& alg) {
  if (shifted.n() != alg.n || shifted.m() != alg.m) fail(ErrorCode::RankMismatch, "weight and algebra ranks differ");
  const Weight nat = shifted - b_st(alg).rho;
  if (!nat.is_integral()) fail(ErrorCode::HookViolation, "non-integral weight " + display(nat));
  Partition parts;
  for (HalfInt a : nat.delta) parts.push_back(a.to_int());
  std::vector<std::int64_t> kappa;
  for (HalfInt b : nat.eps) kappa.push_back(b.to_int());
  for (std::int64_t x : kappa)
    if (x < 0) fail(ErrorCode::HookViolation, "negative eps coefficient in " + display(nat));
  const std::int64_t rows = kappa.empty() ? 0 : *std::max_element(kappa.begin(), kappa.end());
  for (std::int64_t r = 1; r <= rows; ++r)
    parts.push_back(std::count_if(kappa.begin(), kappa.end(), [&](std::int64_t x) { return x >= r; }));
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1]))
      fail(ErrorCode::HookViolation, display(nat) + " is not the weight of a hook partition");
  HookPartition p = HookPartition::make(parts, alg.n, alg.m);
  if (natural_weight(p).first != nat)
    fail(ErrorCode::HookViolation, display(nat) + " is not the weight of a hook partition");
  return p;
}

BottomTrace bottom_of_block(const HookPartition& lam, const Algebra& alg) {
  BottomTrace trace;
  trace.start = lam;
  HookPartition cur = lam;
  const std::int64_t cap = lam.size() + static_cast<std::int64_t>(alg.m + alg.n);
  const HalfInt lowest = alg.is_b() ? HalfInt::half() : HalfInt{};
  const HalfInt one = HalfInt::from_int(1);
  for (std::int64_t iter = 0; !is_tame(cur, alg).tame; ++iter) {
    if (iter >= cap) fail(ErrorCode::InternalError, "bottom algorithm exceeded its iteration bound");
    const Weight s = shifted_natural(cur, alg);
    const std::vector<HalfInt>& a = s.delta;
    const std::vector<HalfInt>& b = s.eps;
    // minimal b_j > 0 with a_i = b_j for some i and -b_j not among the a's
    std::optional<std::size_t> jpick;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] <= HalfInt{} || !contains(a, b[j]) || contains(a, -b[j])) continue;
      if (!jpick || b[j] < b[*jpick]) jpick = j;
    }
    if (!jpick) fail(ErrorCode::InternalError, "no admissible b_j in " + display(s));
    const std::size_t j = *jpick;
    const HalfInt bj = b[j];
    HalfInt x = lowest;
    for (;; x += one) {
      if (x > bj) fail(ErrorCode::InternalError, "no b-tilde below " + to_string(bj));
      bool ok = !contains(a, -x);
      for (std::size_t t = j + 1; t < b.size() && ok; ++t) ok = b[t] != x;
      if (ok) break;
    }
    Weight next = s;
    const std::size_t i = static_cast<std::size_t>(std::find(a.begin(), a.end(), bj) - a.begin());
    next.delta[i] = -x;
    next.eps[j] = x;
    sort_desc(next.delta);
    sort_desc(next.eps);
    HookPartition p;
    try {
      p = partition_from_shifted(next, alg);
    } catch (const Error& e) {
      fail(ErrorCode::InternalError, std::string("bottom step left the hook partitions: ") + e.what());
    }
    trace.steps.push_back(BottomStep{s, bj, x, next, p});
    cur = p;
  }
  trace.result = cur;
  return trace;
}

std::vector<std::pair<std::int64_t, HookPartition>> lambda_x_family(const HookPartition& lam, const Algebra& alg) {
  if (!alg.is_d()) fail(ErrorCode::WrongRegime, "the lambda(x) family is defined for family D");
  const auto report = is_tame(lam, alg);
  if (!report.tame || report.atypicality_k != 1 || lam.part(alg.n) < static_cast<std::int64_t>(alg.m) - 1)
    fail(ErrorCode::WrongRegime, "requires a tame lambda of atypicality 1 with lambda_n >= m - 1");
  const Weight s = shifted_natural(lam, alg);
  const std::size_t m = alg.m;
  auto it = std::find(s.delta.begin(), s.delta.end(), s.eps[m - 1]);
  if (it == s.delta.end()) fail(ErrorCode::InternalError, "no a_i equal to b_m in " + display(s));
  std::vector<HalfInt> rest_a(s.delta.begin(), s.delta.end());
  rest_a.erase(rest_a.begin() + (it - s.delta.begin()));

  std::vector<std::pair<std::int64_t, HookPartition>> out;
  const std::int64_t bound = s.eps[m - 2].to_int();
  const CentralCharFingerprint target = fingerprint(s, alg);
  for (std::int64_t xv = 0; xv < bound; ++xv) {
    const HalfInt x = HalfInt::from_int(xv);
    if (contains(rest_a, x)) continue;
    Weight w = s;
    w.delta = rest_a;
    w.delta.push_back(x);
    w.eps[m - 1] = x;
    sort_desc(w.delta);
    sort_desc(w.eps);
    HookPartition p = partition_from_shifted(w, alg);
    if (!is_tame(p, alg).tame || fingerprint(w, alg) != target)
      fail(ErrorCode::InternalError, "lambda(" + std::to_string(xv) + ") leaves the block");
    out.emplace_back(xv, std::move(p));
  }
  return out;
}

std::vector<Root> levi_complement_even(const TamenessReport& report) {
  if (!report.tame || report.atypicality_k == 0 || !report.witness_borel)
    fail(ErrorCode::NotTame, "requires an atypical tame module");
  const Algebra& alg = report.algebra;
  const std::size_t n = alg.n, m = alg.m, k = report.atypicality_k;
  std::vector<Root> out;
  if (report.top_row()) {
    out = report.witness_borel->pos_even;
  } else {
    auto d = [&](std::size_t i) { return Weight::delta_unit(n, m, i - 1); };
    auto e = [&](std::size_t j) { return Weight::eps_unit(n, m, j - 1); };
    for (std::size_t i = 1; i <= n - k; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        out.push_back(even_root(d(i) - d(j)));
        out.push_back(even_root(d(i) + d(j)));
      }
      out.push_back(even_root(2 * d(i)));
    }
    const std::size_t e_shift = alg.is_d() && report.e_lambda ? static_cast<std::size_t>(*report.e_lambda) : 0;
    const std::size_t s_max = m >= k + e_shift ? m - k - e_shift : 0;
    for (std::size_t s = 1; s <= s_max; ++s)
      for (std::size_t t = s + 1; t <= m; ++t) {
        out.push_back(even_root(e(s) - e(t)));
        out.push_back(even_root(e(s) + e(t)));
      }
    if (alg.is_b())
      for (std::size_t q = 1; q + k <= m; ++q) out.push_back(even_root(e(q)));
    if (report.minus)
      for (Root& r : out) r = sigma_twist(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AdmissibilityResult admissibility_positivity(const HookPartition& lam, const Algebra& alg) {
  const auto report = is_tame(lam, alg);
  if (!report.tame) fail(ErrorCode::NotTame, "lambda = (" + lam.str() + ") is not tame");
  if (report.atypicality_k == 0) fail(ErrorCode::WrongRegime, "admissibility is checked for atypical modules");
  const Weight x = report.highest_weight + report.witness_borel->rho;
  AdmissibilityResult res;
  for (const Root& beta : levi_complement_even(report)) {
    ++res.checked;
    const Rational v = pairing(x, beta.weight) / pairing(beta.weight, beta.weight);
    if (v < 0) res.nonnegative = false;
    if (v <= 0 && res.positive) {
      res.positive = false;
      res.violation = beta;
      res.violation_value = v;
    }
  }
  return res;
}

}  // namespace ospkw
