#include "ospkw/rootdata.hpp"

#include "ospkw/errors.hpp"

#include <algorithm>
#include <numeric>

namespace ospkw {

Algebra Algebra::make(Family family, std::size_t m, std::size_t n, bool allow_d_rank_one) {
  if (m < 1 || n < 1) fail(ErrorCode::InvalidAlgebra, "ranks m and n must be positive");
  if (family == Family::D && m < 2 && !allow_d_rank_one)
    fail(ErrorCode::InvalidAlgebra, "family D requires m >= 2");
  if (m + n > kMaxRank) fail(ErrorCode::RankTooLarge, "total rank m+n exceeds " + std::to_string(kMaxRank));
  return Algebra{family, m, n};
}

Algebra Algebra::parse(const std::string& text) {
  auto bad = [&]() { fail(ErrorCode::ParseError, "algebra must look like B:m:n or D:m:n, got '" + text + "'"); };
  if (text.size() < 5 || text[1] != ':') bad();
  Family f;
  if (text[0] == 'B' || text[0] == 'b') f = Family::B;
  else if (text[0] == 'D' || text[0] == 'd') f = Family::D;
  else bad();
  auto colon = text.find(':', 2);
  if (colon == std::string::npos) bad();
  std::string ms = text.substr(2, colon - 2), ns = text.substr(colon + 1);
  auto digits = [](const std::string& s) {
    return !s.empty() && s.size() < 4 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!digits(ms) || !digits(ns)) bad();
  return make(f, std::stoul(ms), std::stoul(ns));
}

std::string Algebra::name() const {
  return std::string(is_b() ? "B" : "D") + ":" + std::to_string(m) + ":" + std::to_string(n);
}

Rational pairing(const Weight& x, const Weight& y) {
  if (x.n() != y.n() || x.m() != y.m()) fail(ErrorCode::RankMismatch, "pairing of weights of different rank");
  std::int64_t s = 0;  // four times the value
  for (std::size_t j = 0; j < x.m(); ++j) s += x.eps[j].doubled() * y.eps[j].doubled();
  for (std::size_t i = 0; i < x.n(); ++i) s -= x.delta[i].doubled() * y.delta[i].doubled();
  return Rational(s) / 4;
}

std::string root_string(const Weight& w) {
  std::string pos, neg;
  auto term = [](HalfInt a, const std::string& var) {
    std::string t;
    if (a != HalfInt::from_int(1)) t += to_string(a);
    return t + var;
  };
  auto collect = [&](HalfInt c, const std::string& var) {
    if (c.doubled() > 0) pos += (pos.empty() ? "" : "+") + term(c, var);
    if (c.doubled() < 0) neg += "-" + term(c.abs(), var);
  };
  for (std::size_t i = 0; i < w.n(); ++i) collect(w.delta[i], "d" + std::to_string(i + 1));
  for (std::size_t j = 0; j < w.m(); ++j) collect(w.eps[j], "e" + std::to_string(j + 1));
  if (pos.empty() && neg.empty()) return "0";
  return pos + neg;
}

EpsDeltaSequence EpsDeltaSequence::parse(const std::string& text) {
  EpsDeltaSequence s;
  std::string body = text;
  if (!body.empty() && body.back() == '-') {
    s.sign = -1;
    body.pop_back();
  }
  for (char c : body) {
    if (c != 'd' && c != 'e') fail(ErrorCode::ParseError, "sequence letters must be 'd' or 'e', got '" + text + "'");
  }
  s.letters = body;
  return s;
}

std::string EpsDeltaSequence::str() const { return letters + (sign < 0 ? "-" : ""); }

void validate_sequence(const Algebra& alg, const EpsDeltaSequence& seq) {
  auto nd = static_cast<std::size_t>(std::count(seq.letters.begin(), seq.letters.end(), 'd'));
  auto ne = static_cast<std::size_t>(std::count(seq.letters.begin(), seq.letters.end(), 'e'));
  if (nd + ne != seq.letters.size() || nd != alg.n || ne != alg.m)
    fail(ErrorCode::InvalidSequence, "sequence '" + seq.str() + "' does not have " + std::to_string(alg.n) +
                                         " d's and " + std::to_string(alg.m) + " e's");
  if (seq.sign != 1 && seq.sign != -1) fail(ErrorCode::InvalidSequence, "sign must be +1 or -1");
  if (seq.sign < 0 && alg.is_b()) fail(ErrorCode::InvalidSequence, "signed sequences exist only in family D");
  if (seq.sign < 0 && !seq.ends_with_delta())
    fail(ErrorCode::InvalidSequence, "a sign is only attached to sequences ending with d");
}

namespace {

// Entries delta_i / eps_j in sequence order; a signed sequence carries -eps_m.
std::vector<Weight> numbered(const Algebra& alg, const EpsDeltaSequence& seq) {
  std::vector<Weight> x;
  std::size_t i = 0, j = 0;
  for (char c : seq.letters) {
    if (c == 'd') {
      x.push_back(Weight::delta_unit(alg.n, alg.m, i++));
    } else {
      int s = (seq.sign < 0 && j + 1 == alg.m) ? -1 : 1;
      x.push_back(Weight::eps_unit(alg.n, alg.m, j++, s));
    }
  }
  return x;
}

Weight half_sum(const std::vector<Root>& roots, std::size_t n, std::size_t m) {
  Weight s(n, m);
  for (const auto& r : roots) s += r.weight;
  for (auto& x : s.delta) x = HalfInt::from_doubled(x.doubled() / 2);
  for (auto& x : s.eps) x = HalfInt::from_doubled(x.doubled() / 2);
  return s;
}

bool same_root_set(std::vector<Weight> a, std::vector<Weight> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

bool BorelData::has_simple_root(const Weight& w) const {
  return std::any_of(simple_roots.begin(), simple_roots.end(), [&](const Root& r) { return r.weight == w; });
}

bool BorelData::has_positive_root(const Weight& w) const {
  auto eq = [&](const Root& r) { return r.weight == w; };
  return std::any_of(pos_even.begin(), pos_even.end(), eq) || std::any_of(pos_odd.begin(), pos_odd.end(), eq);
}

BorelData borel_from_sequence(const Algebra& alg, const EpsDeltaSequence& seq) {
  validate_sequence(alg, seq);
  const std::size_t n = alg.n, m = alg.m;
  EpsDeltaSequence plain{seq.letters, 1};
  std::vector<Weight> x = numbered(alg, plain);
  auto d = [&](std::size_t i) { return Weight::delta_unit(n, m, i); };
  auto e = [&](std::size_t j) { return Weight::eps_unit(n, m, j); };

  BorelData b;
  b.algebra = alg;
  b.sequence = seq;
  const auto& L = seq.letters;
  for (std::size_t k = 0; k + 1 < L.size(); ++k) b.simple_roots.push_back({x[k] - x[k + 1], L[k] != L[k + 1]});
  const std::size_t last = L.size() - 1;
  if (alg.is_b()) {
    if (L[last] == 'e') b.simple_roots.push_back({e(m - 1), false});
    else b.simple_roots.push_back({d(n - 1), true});
  } else if (L[last] == 'd') {
    b.simple_roots.push_back({2 * d(n - 1), false});
  } else if (L[last - 1] == 'e') {
    b.simple_roots.push_back({e(m - 2) + e(m - 1), false});
  } else {
    b.simple_roots.push_back({d(n - 1) + e(m - 1), true});
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      b.pos_even.push_back({d(i) - d(k), false});
      b.pos_even.push_back({d(i) + d(k), false});
    }
    b.pos_even.push_back({2 * d(i), false});
  }
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t l = j + 1; l < m; ++l) {
      b.pos_even.push_back({e(j) - e(l), false});
      b.pos_even.push_back({e(j) + e(l), false});
    }
    if (alg.is_b()) b.pos_even.push_back({e(j), false});
  }

  std::vector<std::size_t> dpos, epos;
  for (std::size_t k = 0; k < L.size(); ++k) (L[k] == 'd' ? dpos : epos).push_back(k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      b.pos_odd.push_back({d(i) + e(j), true});
      b.pos_odd.push_back({dpos[i] < epos[j] ? d(i) - e(j) : e(j) - d(i), true});
    }
    if (alg.is_b()) b.pos_odd.push_back({d(i), true});
  }

  if (seq.sign < 0) {
    for (auto& r : b.simple_roots) r.weight = sigma_twist(r.weight);
    for (auto& r : b.pos_odd) r.weight = sigma_twist(r.weight);
  }
  std::sort(b.pos_even.begin(), b.pos_even.end());
  std::sort(b.pos_odd.begin(), b.pos_odd.end());
  b.rho_even = half_sum(b.pos_even, n, m);
  b.rho_odd = half_sum(b.pos_odd, n, m);
  b.rho = b.rho_even - b.rho_odd;
  return b;
}

BorelData b_st(const Algebra& alg) {
  return borel_from_sequence(alg, EpsDeltaSequence{std::string(alg.n, 'd') + std::string(alg.m, 'e'), 1});
}

EpsDeltaSequence b_odd_sequence(const Algebra& alg) {
  const std::size_t k = std::min(alg.m, alg.n);
  std::string prefix = alg.m > alg.n ? std::string(alg.m - alg.n, 'e') : std::string(alg.n - alg.m, 'd');
  std::string unit = alg.is_b() ? "ed" : "de";
  std::string s = prefix;
  for (std::size_t i = 0; i < k; ++i) s += unit;
  return EpsDeltaSequence{s, 1};
}

BorelData b_odd(const Algebra& alg) { return borel_from_sequence(alg, b_odd_sequence(alg)); }

std::vector<EpsDeltaSequence> all_sequences(const Algebra& alg) {
  std::vector<EpsDeltaSequence> out;
  std::string s = std::string(alg.n, 'd') + std::string(alg.m, 'e');
  do {
    out.push_back({s, 1});
    if (alg.is_d() && s.back() == 'd') out.push_back({s, -1});
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

std::pair<BorelData, Weight> odd_reflection(const BorelData& b, const Weight& alpha, const Weight& gamma) {
  if (!b.has_simple_root(alpha) || pairing(alpha, alpha) != 0)
    fail(ErrorCode::NotSimpleIsotropic, root_string(alpha) + " is not an isotropic simple root of " + b.sequence.str());
  const Algebra& alg = b.algebra;
  std::vector<Weight> x = numbered(alg, b.sequence);
  EpsDeltaSequence next = b.sequence;
  bool found = false;
  for (std::size_t k = 0; k + 1 < x.size(); ++k) {
    if (x[k] - x[k + 1] == alpha) {
      std::swap(next.letters[k], next.letters[k + 1]);
      found = true;
      break;
    }
  }
  if (!found) {
    // Terminal delta_n + eps_m of a sequence ending "de".
    const std::size_t s = next.letters.size();
    std::swap(next.letters[s - 2], next.letters[s - 1]);
    next.sign = -1;
  }
  if (!next.ends_with_delta()) next.sign = 1;
  BorelData nb = borel_from_sequence(alg, next);

  std::vector<Weight> expected, got;
  for (const auto& r : b.simple_roots) {
    if (r.weight == alpha) expected.push_back(-alpha);
    else if (pairing(r.weight, alpha) != 0) expected.push_back(r.weight + alpha);
    else expected.push_back(r.weight);
  }
  for (const auto& r : nb.simple_roots) got.push_back(r.weight);
  if (!same_root_set(expected, got))
    fail(ErrorCode::InternalError, "odd reflection at " + root_string(alpha) + " produced an unexpected Borel");

  Weight g = pairing(gamma, alpha) != 0 ? gamma - alpha : gamma;
  return {std::move(nb), std::move(g)};
}

namespace {

// Number of d's preceding the j-th e.
std::vector<std::size_t> eps_depths(const std::string& letters) {
  std::vector<std::size_t> out;
  std::size_t d = 0;
  for (char c : letters) {
    if (c == 'd') ++d;
    else out.push_back(d);
  }
  return out;
}

std::size_t eps_position(const std::string& letters, std::size_t j) {
  std::size_t seen = 0;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (letters[k] == 'e' && seen++ == j) return k;
  }
  fail(ErrorCode::InternalError, "eps marker not found");
}

}  // namespace

ReflectionWalk walk_to(const BorelData& start, const EpsDeltaSequence& target, const Weight& gamma) {
  const Algebra& alg = start.algebra;
  validate_sequence(alg, target);
  ReflectionWalk w{start, gamma, {}};
  auto reflect_pair = [&](std::size_t k) {
    std::vector<Weight> x = numbered(alg, w.borel.sequence);
    Weight alpha = x[k] - x[k + 1];
    auto [nb, g] = odd_reflection(w.borel, alpha, w.highest_weight);
    w.borel = std::move(nb);
    w.highest_weight = std::move(g);
    w.roots.push_back(alpha);
  };
  auto move_eps = [&](std::size_t j, std::size_t depth) {
    for (;;) {
      std::size_t cur = eps_depths(w.borel.sequence.letters)[j];
      if (cur == depth) return;
      std::size_t p = eps_position(w.borel.sequence.letters, j);
      reflect_pair(cur > depth ? p - 1 : p);
    }
  };
  const std::size_t m = alg.m, n = alg.n;

  // A negated eps_m first returns to the right end.
  if (w.borel.sequence.sign < 0) move_eps(m - 1, n);

  std::vector<std::size_t> want = eps_depths(target.letters);
  const bool signed_target = target.sign < 0;
  if (signed_target) want[m - 1] = n;
  for (std::size_t j = m; j-- > 0;)
    if (eps_depths(w.borel.sequence.letters)[j] < want[j]) move_eps(j, want[j]);
  for (std::size_t j = 0; j < m; ++j)
    if (eps_depths(w.borel.sequence.letters)[j] > want[j]) move_eps(j, want[j]);

  if (signed_target) {
    Weight alpha = Weight::delta_unit(n, m, n - 1) + Weight::eps_unit(n, m, m - 1);
    auto [nb, g] = odd_reflection(w.borel, alpha, w.highest_weight);
    w.borel = std::move(nb);
    w.highest_weight = std::move(g);
    w.roots.push_back(alpha);
    move_eps(m - 1, eps_depths(target.letters)[m - 1]);
  }
  if (!(w.borel.sequence == target))
    fail(ErrorCode::InternalError, "reflection walk ended at " + w.borel.sequence.str() + " instead of " + target.str());
  return w;
}

std::optional<std::vector<Rational>> simple_root_coordinates(const BorelData& b, const Weight& w) {
  const std::size_t n = b.n(), m = b.m(), r = n + m, k = b.simple_roots.size();
  // Augmented system: rows are coordinates, columns are simple roots.
  std::vector<std::vector<Rational>> a(r, std::vector<Rational>(k + 1));
  auto coord = [&](const Weight& x, std::size_t row) {
    return row < n ? x.delta[row].to_rational() : x.eps[row - n].to_rational();
  };
  for (std::size_t row = 0; row < r; ++row) {
    for (std::size_t c = 0; c < k; ++c) a[row][c] = coord(b.simple_roots[c].weight, row);
    a[row][k] = coord(w, row);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < r; ++c) {
    std::size_t p = row;
    while (p < r && a[p][c] == 0) ++p;
    if (p == r) continue;
    std::swap(a[p], a[row]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[row][c];
      for (std::size_t cc = c; cc <= k; ++cc) a[i][cc] -= f * a[row][cc];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t i = row; i < r; ++i)
    if (a[i][k] != 0) return std::nullopt;
  std::vector<Rational> out(k, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) out[pivot_col[i]] = a[i][k] / a[i][pivot_col[i]];
  return out;
}

std::vector<Root> positive_roots_in_span(const BorelData& b, const std::vector<Weight>& simple_subset) {
  std::vector<bool> allowed(b.simple_roots.size(), false);
  for (const auto& s : simple_subset) {
    bool hit = false;
    for (std::size_t i = 0; i < b.simple_roots.size(); ++i) {
      if (b.simple_roots[i].weight == s) allowed[i] = hit = true;
    }
    if (!hit) fail(ErrorCode::InternalError, root_string(s) + " is not a simple root of " + b.sequence.str());
  }
  std::vector<Root> out;
  auto consider = [&](const Root& r) {
    auto c = simple_root_coordinates(b, r.weight);
    if (!c) fail(ErrorCode::InternalError, "positive root outside the span of simple roots");
    for (std::size_t i = 0; i < c->size(); ++i) {
      if (!allowed[i] && (*c)[i] != 0) return;
    }
    out.push_back(r);
  };
  for (const auto& r : b.pos_even) consider(r);
  for (const auto& r : b.pos_odd) consider(r);
  std::sort(out.begin(), out.end());
  return out;
}

WeylElement WeylElement::identity(std::size_t n, std::size_t m) {
  WeylElement w;
  w.delta_perm.resize(n);
  w.eps_perm.resize(m);
  std::iota(w.delta_perm.begin(), w.delta_perm.end(), 0);
  std::iota(w.eps_perm.begin(), w.eps_perm.end(), 0);
  w.delta_signs.assign(n, 1);
  w.eps_signs.assign(m, 1);
  return w;
}

namespace {

int perm_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true, ++len;
    if (len % 2 == 0) s = -s;
  }
  return s;
}

}  // namespace

int WeylElement::sign() const {
  int s = perm_sign(delta_perm) * perm_sign(eps_perm);
  for (int x : delta_signs) s *= x;
  for (int x : eps_signs) s *= x;
  return s;
}

Weight WeylElement::apply(const Weight& x) const {
  Weight y(x.n(), x.m());
  for (std::size_t i = 0; i < x.n(); ++i) y.delta[delta_perm[i]] = x.delta[i] * delta_signs[i];
  for (std::size_t j = 0; j < x.m(); ++j) y.eps[eps_perm[j]] = x.eps[j] * eps_signs[j];
  return y;
}

Exponent WeylElement::apply(const Exponent& x) const {
  const std::size_t n = delta_perm.size(), m = eps_perm.size();
  Exponent y(n + m);
  for (std::size_t i = 0; i < n; ++i) y[delta_perm[i]] = delta_signs[i] * x[i];
  for (std::size_t j = 0; j < m; ++j) y[n + eps_perm[j]] = eps_signs[j] * x[n + j];
  return y;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  WeylElement c = b;
  for (std::size_t i = 0; i < b.delta_perm.size(); ++i) {
    c.delta_perm[i] = a.delta_perm[b.delta_perm[i]];
    c.delta_signs[i] = a.delta_signs[b.delta_perm[i]] * b.delta_signs[i];
  }
  for (std::size_t j = 0; j < b.eps_perm.size(); ++j) {
    c.eps_perm[j] = a.eps_perm[b.eps_perm[j]];
    c.eps_signs[j] = a.eps_signs[b.eps_perm[j]] * b.eps_signs[j];
  }
  return c;
}

namespace {

std::vector<std::pair<std::vector<std::size_t>, std::vector<int>>> signed_perms(std::size_t k, bool even_only) {
  std::vector<std::pair<std::vector<std::size_t>, std::vector<int>>> out;
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      if (even_only && __builtin_popcountll(mask) % 2 != 0) continue;
      std::vector<int> s(k);
      for (std::size_t i = 0; i < k; ++i) s[i] = (mask >> i) & 1 ? -1 : 1;
      out.emplace_back(p, s);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::vector<WeylElement> weyl_elements(const Algebra& alg) {
  auto dpart = signed_perms(alg.n, false);
  auto epart = signed_perms(alg.m, alg.is_d());
  std::vector<WeylElement> out;
  out.reserve(dpart.size() * epart.size());
  for (const auto& [dp, ds] : dpart)
    for (const auto& [ep, es] : epart) out.push_back(WeylElement{dp, ds, ep, es});
  return out;
}

std::size_t weyl_order(const Algebra& alg) {
  auto part = [](std::size_t k) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= i;
    return f << k;
  };
  return part(alg.n) * (alg.is_d() ? part(alg.m) / 2 : part(alg.m));
}

LaurentPolynomial apply_weyl(const WeylElement& w, const LaurentPolynomial& p) {
  return p.map_exponents([&](const Exponent& e) { return w.apply(e); });
}

Weight sigma_twist(const Weight& x) {
  Weight y = x;
  if (y.m() > 0) y.eps.back() = -y.eps.back();
  return y;
}

Root sigma_twist(const Root& r) { return Root{sigma_twist(r.weight), r.odd}; }

EpsDeltaSequence sigma_twist(const EpsDeltaSequence& seq) {
  EpsDeltaSequence s = seq;
  if (s.ends_with_delta()) s.sign = -s.sign;
  return s;
}

BorelData sigma_twist(const BorelData& b) {
  if (!b.algebra.is_d()) fail(ErrorCode::FamilyMismatch, "the automorphism sigma is defined for family D only");
  return borel_from_sequence(b.algebra, sigma_twist(b.sequence));
}

LaurentPolynomial sigma_twist(const LaurentPolynomial& p) {
  const std::size_t last = p.rank() - 1;
  if (p.m() == 0) return p;
  return p.map_exponents([&](const Exponent& e) {
    Exponent f = e;
    f[last] = -f[last];
    return f;
  });
}

}  // namespace ospkw
