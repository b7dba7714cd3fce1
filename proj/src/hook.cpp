#include "ospkw/hook.hpp"

#include "ospkw/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ospkw {

Partition transpose(const Partition& lam) {
  Partition t;
  if (lam.empty()) return t;
  t.assign(static_cast<std::size_t>(lam.front()), 0);
  for (std::int64_t part : lam)
    for (std::int64_t c = 0; c < part; ++c) ++t[c];
  return t;
}

HookPartition HookPartition::make(Partition parts, std::size_t n, std::size_t m) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) fail(ErrorCode::ParseError, "partition parts must be nonnegative");
    if (i > 0 && parts[i] > parts[i - 1]) fail(ErrorCode::ParseError, "partition parts must be weakly decreasing");
  }
  HookPartition h{std::move(parts), n, m};
  if (h.part(n + 1) > static_cast<std::int64_t>(m))
    fail(ErrorCode::HookViolation, "partition (" + h.str() + ") violates lambda_" + std::to_string(n + 1) + " <= " +
                                       std::to_string(m));
  return h;
}

HookPartition HookPartition::parse(const std::string& text, std::size_t n, std::size_t m) {
  Partition parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty() && text.find_first_not_of(" \t") == std::string::npos) break;
    if (item.empty() || item.size() > 9 || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
      fail(ErrorCode::ParseError, "cannot parse partition '" + text + "'");
    parts.push_back(std::stoll(item));
  }
  return make(std::move(parts), n, m);
}

std::int64_t HookPartition::size() const {
  std::int64_t s = 0;
  for (auto x : parts) s += x;
  return s;
}

std::string HookPartition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s;
}

std::vector<HookPartition> hook_partitions(std::size_t n, std::size_t m, std::int64_t max_size) {
  std::vector<HookPartition> out;
  Partition cur;
  std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t left, std::int64_t cap) {
    if (left == 0) {
      HookPartition h{cur, n, m};
      if (h.part(n + 1) <= static_cast<std::int64_t>(m)) out.push_back(std::move(h));
      return;
    }
    for (std::int64_t x = std::min(left, cap); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  for (std::int64_t s = 0; s <= max_size; ++s) rec(s, s);
  return out;
}

std::pair<Weight, Weight> natural_weight(const HookPartition& lam) {
  const std::size_t n = lam.n, m = lam.m;
  Weight w(n, m);
  for (std::size_t i = 0; i < n; ++i) w.delta[i] = HalfInt::from_int(lam.part(i + 1));
  Partition tail;
  for (std::size_t i = n; i < lam.parts.size(); ++i) tail.push_back(lam.parts[i]);
  Partition kappa = transpose(tail);
  if (kappa.size() > m) fail(ErrorCode::HookViolation, "partition (" + lam.str() + ") is not an (n|m)-hook partition");
  for (std::size_t j = 0; j < kappa.size(); ++j) w.eps[j] = HalfInt::from_int(kappa[j]);
  return {w, sigma_twist(w)};
}

FrobeniusData frobenius_coordinates(const HookPartition& lam, const EpsDeltaSequence& seq) {
  FrobeniusData f;
  f.d_breaks.push_back(0);
  f.e_breaks.push_back(0);
  // Blocks d^{d_1} e^{e_1} ... d^{d_r} e^{e_r} with d_1 or e_r possibly 0.
  std::size_t k = 0;
  const auto& L = seq.letters;
  while (k < L.size()) {
    std::size_t d = 0, e = 0;
    while (k < L.size() && L[k] == 'd') ++d, ++k;
    while (k < L.size() && L[k] == 'e') ++e, ++k;
    f.d_breaks.push_back(f.d_breaks.back() + d);
    f.e_breaks.push_back(f.e_breaks.back() + e);
  }
  Partition lt = transpose(lam.parts);
  auto lt_at = [&](std::size_t j) { return j >= 1 && j <= lt.size() ? lt[j - 1] : 0; };
  const std::size_t r = f.d_breaks.size() - 1;
  for (std::size_t u = 0; u < r; ++u) {
    for (std::size_t i = f.d_breaks[u] + 1; i <= f.d_breaks[u + 1]; ++i)
      f.p.push_back(std::max<std::int64_t>(lam.part(i) - static_cast<std::int64_t>(f.e_breaks[u]), 0));
    for (std::size_t j = f.e_breaks[u] + 1; j <= f.e_breaks[u + 1]; ++j)
      f.q.push_back(std::max<std::int64_t>(lt_at(j) - static_cast<std::int64_t>(f.d_breaks[u + 1]), 0));
  }
  return f;
}

Weight frobenius_weight(const HookPartition& lam, const BorelData& b, bool minus) {
  const Algebra& alg = b.algebra;
  if (lam.n != alg.n || lam.m != alg.m) fail(ErrorCode::RankMismatch, "partition and algebra ranks differ");
  if (minus && alg.is_b()) fail(ErrorCode::FamilyMismatch, "lambda_- exists only in family D");
  HookPartition checked = HookPartition::make(lam.parts, lam.n, lam.m);
  if (alg.is_d() && b.sequence.ends_with_delta() && minus != (b.sequence.sign < 0))
    fail(ErrorCode::UnsupportedCase, "no closed Frobenius formula for this signed sequence; use the reflection walk");
  FrobeniusData f = frobenius_coordinates(checked, b.sequence);
  std::vector<std::int64_t> q = f.q;
  if (minus) q.back() = -q.back();
  return Weight::from_ints(f.p, q);
}

Weight frobenius_weight(const HookPartition& lam, const BorelData& b) {
  return frobenius_weight(lam, b, b.sequence.sign < 0);
}

Weight highest_weight_via_reflections(const HookPartition& lam, const BorelData& b, bool minus) {
  const Algebra& alg = b.algebra;
  if (lam.n != alg.n || lam.m != alg.m) fail(ErrorCode::RankMismatch, "partition and algebra ranks differ");
  if (minus && alg.is_b()) fail(ErrorCode::FamilyMismatch, "lambda_- exists only in family D");
  auto [plus_w, minus_w] = natural_weight(HookPartition::make(lam.parts, lam.n, lam.m));
  return walk_to(b_st(alg), b.sequence, minus ? minus_w : plus_w).highest_weight;
}

}  // namespace ospkw
