#include "ospkw/atyp.hpp"

#include "ospkw/errors.hpp"

#include <algorithm>
#include <string>

namespace ospkw {

namespace {

// Kuhn's augmenting paths; deterministic in index order.
bool augment(std::size_t i, const std::vector<std::vector<std::size_t>>& adj, std::vector<bool>& seen,
             std::vector<long>& owner) {
  for (std::size_t j : adj[i]) {
    if (seen[j]) continue;
    seen[j] = true;
    if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]), adj, seen, owner)) {
      owner[j] = static_cast<long>(i);
      return true;
    }
  }
  return false;
}

void check_ranks(const HookPartition& lam, const Algebra& alg) {
  if (lam.n != alg.n || lam.m != alg.m) fail(ErrorCode::RankMismatch, "partition and algebra ranks differ");
}

Root odd_root(Weight w) { return Root{std::move(w), true}; }

struct Classification {
  std::size_t k = 0;
  bool tame = false;
  bool top = false;          // family D, lambda_{n+1} = m
  std::size_t top_index = 0;  // 1-based i with a_i = b_m
};

Classification classify(const HookPartition& lam, const Algebra& alg) {
  check_ranks(lam, alg);
  Classification c;
  const Weight s = shifted_natural(lam, alg, false);
  c.k = atypicality_degree(s, alg);
  c.top = alg.is_d() && lam.part(alg.n + 1) == static_cast<std::int64_t>(alg.m);
  if (c.k == 0) {
    c.tame = true;
    return c;
  }
  const std::size_t dme = atypical_matching(s, true).size();
  if (!c.top) {
    c.tame = dme == c.k;
    return c;
  }
  if (dme != 0) fail(ErrorCode::InternalError, "delta - eps atypicality with lambda_{n+1} = m");
  for (std::size_t i = 0; i < alg.n; ++i) {
    if (s.delta[i] == s.eps[alg.m - 1]) {
      c.top_index = i + 1;
      break;
    }
  }
  c.tame = c.k == 1 && c.top_index != 0;
  return c;
}

std::uint64_t factorial(std::size_t k) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

EpsDeltaSequence top_row_sequence(const Algebra& alg, std::size_t i) {
  EpsDeltaSequence seq;
  seq.letters = std::string(i - 1, 'd') + std::string(alg.m - 1, 'e') + "de" + std::string(alg.n - i, 'd');
  seq.sign = i < alg.n ? -1 : 1;
  return seq;
}

}  // namespace

Weight shifted_natural(const HookPartition& lam, const Algebra& alg, bool minus) {
  check_ranks(lam, alg);
  if (minus && alg.is_b()) fail(ErrorCode::FamilyMismatch, "lambda_- exists only in family D");
  auto [plus_w, minus_w] = natural_weight(lam);
  return (minus ? minus_w : plus_w) + b_st(alg).rho;
}

std::vector<std::pair<std::size_t, std::size_t>> atypical_matching(const Weight& shifted, bool delta_minus_eps_only) {
  const std::size_t n = shifted.n(), m = shifted.m();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      // (x, delta_i - eps_j) = -a_i - b_j, (x, delta_i + eps_j) = -a_i + b_j
      const bool minus_root = shifted.delta[i] == -shifted.eps[j];
      const bool plus_root = shifted.delta[i] == shifted.eps[j];
      if (minus_root || (!delta_minus_eps_only && plus_root)) adj[i].push_back(j);
    }
  }
  std::vector<long> owner(m, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> seen(m, false);
    augment(i, adj, seen, owner);
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < m; ++j)
    if (owner[j] >= 0) out.emplace_back(static_cast<std::size_t>(owner[j]), j);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t atypicality_degree(const Weight& shifted, const Algebra& alg) {
  if (shifted.n() != alg.n || shifted.m() != alg.m) fail(ErrorCode::RankMismatch, "weight and algebra ranks differ");
  return atypical_matching(shifted).size();
}

int e_of_lambda(const HookPartition& lam) {
  const Partition conj = transpose(lam.parts);
  const auto m = static_cast<std::int64_t>(lam.m), n = static_cast<std::int64_t>(lam.n);
  std::int64_t i_max = 0, i_star = 0;
  for (std::int64_t i = 1; i <= m; ++i) {
    const std::int64_t part = i <= static_cast<std::int64_t>(conj.size()) ? conj[i - 1] : 0;
    const std::int64_t v = part - i + m - n;
    if (v >= 0) i_max = i;
    if (v > 0) i_star = i;
  }
  const std::int64_t e = i_max - i_star;
  if (e != 0 && e != 1) fail(ErrorCode::InternalError, "e(lambda) outside {0, 1}");
  return static_cast<int>(e);
}

std::vector<Root> distinguished_T_bodd(const HookPartition& lam, const Algebra& alg) {
  const Classification c = classify(lam, alg);
  if (!c.tame) fail(ErrorCode::NotTame, "lambda = (" + lam.str() + ") is not tame over " + alg.name());
  std::vector<Root> t;
  const std::size_t n = alg.n, m = alg.m;
  if (c.k == 0) return t;
  if (c.top) {
    t.push_back(odd_root(Weight::delta_unit(n, m, c.top_index - 1) + Weight::eps_unit(n, m, m - 1)));
    return t;
  }
  for (std::size_t i = 1; i <= c.k; ++i) {
    Weight d = Weight::delta_unit(n, m, n - c.k + i - 1);
    Weight e = Weight::eps_unit(n, m, m - c.k + i - 1);
    t.push_back(odd_root(alg.is_b() ? e - d : d - e));
  }
  return t;
}

std::uint64_t j_lambda(const TamenessReport& report, const Algebra& alg, const HookPartition& lam) {
  if (!report.tame) fail(ErrorCode::NotTame, "j is defined for tame modules only");
  const std::size_t k = report.atypicality_k;
  if (k == 0) return 1;
  if (alg.is_b()) return factorial(k) << k;
  if (lam.part(alg.n + 1) == static_cast<std::int64_t>(alg.m)) return 1;
  return factorial(k) << (k - 1 + static_cast<std::size_t>(e_of_lambda(lam)));
}

TamenessReport is_tame(const HookPartition& lam, const Algebra& alg, bool minus) {
  check_ranks(lam, alg);
  if (minus && alg.is_b()) fail(ErrorCode::FamilyMismatch, "lambda_- exists only in family D");
  const Classification c = classify(lam, alg);

  TamenessReport r;
  r.algebra = alg;
  r.lambda = lam;
  r.minus = minus;
  r.atypicality_k = c.k;
  r.tame = c.tame;
  if (alg.is_d() && !c.top) r.e_lambda = e_of_lambda(lam);
  if (!c.tame) return r;

  if (c.k == 0) {
    auto [plus_w, minus_w] = natural_weight(lam);
    r.highest_weight = minus ? minus_w : plus_w;
    r.j_lambda = 1;
    return r;
  }

  BorelData b = c.top ? borel_from_sequence(alg, top_row_sequence(alg, c.top_index)) : b_odd(alg);
  std::vector<Root> t = distinguished_T_bodd(lam, alg);
  std::vector<Weight> levi;
  if (c.top) {
    levi.push_back(t.front().weight);
  } else {
    const std::size_t count = 2 * c.k + (r.e_lambda ? static_cast<std::size_t>(*r.e_lambda) : 0);
    if (count > b.simple_roots.size()) fail(ErrorCode::InternalError, "Levi larger than the Dynkin diagram");
    for (std::size_t i = b.simple_roots.size() - count; i < b.simple_roots.size(); ++i)
      levi.push_back(b.simple_roots[i].weight);
  }
  if (minus) {
    b = sigma_twist(b);
    for (Root& x : t) x = sigma_twist(x);
    for (Weight& x : levi) x = sigma_twist(x);
  }
  r.highest_weight = highest_weight_via_reflections(lam, b, minus);

  const Weight shifted = r.highest_weight + b.rho;
  for (std::size_t a = 0; a < t.size(); ++a) {
    const Root& x = t[a];
    if (!b.has_simple_root(x.weight) || !x.isotropic() || pairing(shifted, x.weight) != 0)
      fail(ErrorCode::InternalError, "distinguished root " + root_string(x) + " fails on " + b.sequence.str());
    for (std::size_t z = a + 1; z < t.size(); ++z)
      if (pairing(x.weight, t[z].weight) != 0) fail(ErrorCode::InternalError, "distinguished roots not orthogonal");
  }
  for (const Weight& x : levi)
    if (!b.has_simple_root(x)) fail(ErrorCode::InternalError, "Levi root " + root_string(x) + " is not simple");

  r.witness_borel = std::move(b);
  r.distinguished_T = std::move(t);
  r.levi_simple_roots = std::move(levi);
  r.j_lambda = j_lambda(r, alg, lam);
  return r;
}

}  // namespace ospkw
