#include "ospkw/laurent.hpp"

#include "ospkw/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ospkw {

Exponent::Exponent(std::size_t rank) {
  if (rank > kMaxRank) fail(ErrorCode::RankTooLarge, "rank " + std::to_string(rank) + " exceeds " + std::to_string(kMaxRank));
  rank_ = static_cast<std::uint8_t>(rank);
}

Exponent Exponent::from_weight(const Weight& w) {
  Exponent e(w.n() + w.m());
  for (std::size_t i = 0; i < w.n(); ++i) e.v_[i] = w.delta[i].doubled();
  for (std::size_t j = 0; j < w.m(); ++j) e.v_[w.n() + j] = w.eps[j].doubled();
  return e;
}

Weight Exponent::to_weight(std::size_t n) const {
  Weight w(n, rank_ - n);
  for (std::size_t i = 0; i < n; ++i) w.delta[i] = HalfInt::from_doubled(v_[i]);
  for (std::size_t j = n; j < rank_; ++j) w.eps[j - n] = HalfInt::from_doubled(v_[j]);
  return w;
}

Exponent& Exponent::operator+=(const Exponent& o) {
  for (std::size_t i = 0; i < rank_; ++i) v_[i] += o.v_[i];
  return *this;
}

Exponent& Exponent::operator-=(const Exponent& o) {
  for (std::size_t i = 0; i < rank_; ++i) v_[i] -= o.v_[i];
  return *this;
}

Exponent Exponent::operator-() const {
  Exponent e = *this;
  for (std::size_t i = 0; i < rank_; ++i) e.v_[i] = -e.v_[i];
  return e;
}

std::size_t Exponent::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ rank_;
  for (std::size_t i = 0; i < rank_; ++i) {
    h ^= static_cast<std::uint64_t>(v_[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

LaurentPolynomial::LaurentPolynomial(std::size_t n, std::size_t m) : n_(n), m_(m) {
  if (n + m > kMaxRank) fail(ErrorCode::RankTooLarge, "rank exceeds " + std::to_string(kMaxRank));
}

LaurentPolynomial LaurentPolynomial::monomial(const Weight& w, const BigInt& c) {
  LaurentPolynomial p(w.n(), w.m());
  if (c != 0) p.terms_.emplace_back(Exponent::from_weight(w), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t n, std::size_t m, const BigInt& c) {
  return monomial(Weight(n, m), c);
}

LaurentPolynomial LaurentPolynomial::from_terms(std::size_t n, std::size_t m, std::vector<Term> terms) {
  LaurentPolynomial p(n, m);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
  for (auto& t : terms) {
    if (t.first.rank() != n + m) fail(ErrorCode::RankMismatch, "exponent rank mismatch");
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  return p;
}

void LaurentPolynomial::check_compatible(const LaurentPolynomial& o) const {
  if (n_ != o.n_ || m_ != o.m_) fail(ErrorCode::RankMismatch, "polynomials of different rank");
}

BigInt LaurentPolynomial::coefficient(const Exponent& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponent& x) { return t.first > x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

BigInt LaurentPolynomial::evaluate_at_one() const {
  BigInt s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

namespace {

// Merge of two descending term lists; sign = +1 or -1 applied to b.
std::vector<LaurentPolynomial::Term> merge_terms(const std::vector<LaurentPolynomial::Term>& a,
                                                 const std::vector<LaurentPolynomial::Term>& b, int sign) {
  std::vector<LaurentPolynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : BigInt(-b[j].second));
      ++j;
    } else {
      BigInt c = a[i].second;
      if (sign > 0) c += b[j].second;
      else c -= b[j].second;
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  check_compatible(o);
  terms_ = merge_terms(terms_, o.terms_, 1);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  check_compatible(o);
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.check_compatible(b);
  PolynomialAccumulator acc(a.n_, a.m_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc.add(ea + eb, ca * cb);
  return std::move(acc).finish();
}

LaurentPolynomial LaurentPolynomial::scaled(const BigInt& c) const {
  if (c == 0) return LaurentPolynomial(n_, m_);
  LaurentPolynomial p = *this;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponent& shift) const {
  LaurentPolynomial p = *this;
  for (auto& t : p.terms_) t.first += shift;
  return p;
}

bool LaurentPolynomial::try_divide_scalar(const BigInt& d) {
  if (d == 0) return false;
  std::vector<BigInt> q;
  q.reserve(terms_.size());
  for (const auto& t : terms_) {
    BigInt quo, rem;
    boost::multiprecision::divide_qr(t.second, d, quo, rem);
    if (rem != 0) return false;
    q.push_back(std::move(quo));
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) terms_[i].second = std::move(q[i]);
  return true;
}

void PolynomialAccumulator::add(const Exponent& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = acc_.try_emplace(e, c);
  if (!inserted) it->second += c;
}

void PolynomialAccumulator::add(const LaurentPolynomial& p) {
  for (const auto& [e, c] : p.terms()) add(e, c);
}

void PolynomialAccumulator::add_scaled(const LaurentPolynomial& p, const BigInt& c) {
  if (c == 0) return;
  for (const auto& [e, x] : p.terms()) add(e, x * c);
}

void PolynomialAccumulator::merge(PolynomialAccumulator&& other) {
  for (auto& [e, c] : other.acc_) add(e, c);
  other.acc_.clear();
}

LaurentPolynomial PolynomialAccumulator::finish() && {
  LaurentPolynomial p(n_, m_);
  p.terms_.reserve(acc_.size());
  for (auto& [e, c] : acc_)
    if (c != 0) p.terms_.emplace_back(e, std::move(c));
  acc_.clear();
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const LaurentPolynomial::Term& a, const LaurentPolynomial::Term& b) { return a.first > b.first; });
  return p;
}

LaurentPolynomial exact_divide(const LaurentPolynomial& num, const LaurentPolynomial& den) {
  if (num.n() != den.n() || num.m() != den.m()) fail(ErrorCode::RankMismatch, "polynomials of different rank");
  if (den.is_zero()) fail(ErrorCode::NotDivisible, "division by the zero polynomial");
  LaurentPolynomial quotient(num.n(), num.m());
  if (num.is_zero()) return quotient;
  const std::size_t r = num.rank();

  // Degree in each variable is additive, which bounds every quotient exponent.
  Exponent lo(r), hi(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::int64_t nmin = num.terms().front().first[i], nmax = nmin, dmin = den.terms().front().first[i], dmax = dmin;
    for (const auto& t : num.terms()) nmin = std::min(nmin, t.first[i]), nmax = std::max(nmax, t.first[i]);
    for (const auto& t : den.terms()) dmin = std::min(dmin, t.first[i]), dmax = std::max(dmax, t.first[i]);
    lo[i] = nmin - dmin;
    hi[i] = nmax - dmax;
  }
  const Exponent lowest = num.lowest_term().first - den.lowest_term().first;
  const auto& [dlead, dcoef] = den.leading_term();

  std::map<Exponent, BigInt, std::greater<>> rem;
  for (const auto& t : num.terms()) rem.emplace_hint(rem.end(), t.first, t.second);

  std::vector<LaurentPolynomial::Term> q;
  while (!rem.empty()) {
    auto it = rem.begin();
    Exponent qe = it->first - dlead;
    bool in_box = qe >= lowest;
    for (std::size_t i = 0; in_box && i < r; ++i) in_box = lo[i] <= qe[i] && qe[i] <= hi[i];
    if (!in_box) fail(ErrorCode::NotDivisible, "nonzero remainder in exact division");
    BigInt qc, rc;
    boost::multiprecision::divide_qr(it->second, dcoef, qc, rc);
    if (rc != 0) fail(ErrorCode::NotDivisible, "leading coefficient not divisible in exact division");
    for (const auto& [de, dc] : den.terms()) {
      Exponent e = qe + de;
      auto [pos, inserted] = rem.try_emplace(e, 0);
      pos->second -= qc * dc;
      if (pos->second == 0) rem.erase(pos);
    }
    q.emplace_back(qe, std::move(qc));
  }
  return LaurentPolynomial::from_terms(num.n(), num.m(), std::move(q));
}

LaurentPolynomial exact_divide_by_factors(LaurentPolynomial num, const std::vector<LaurentPolynomial>& factors) {
  for (const auto& f : factors) num = exact_divide(num, f);
  return num;
}

LaurentPolynomial product(const std::vector<LaurentPolynomial>& factors, std::size_t n, std::size_t m) {
  LaurentPolynomial p = LaurentPolynomial::constant(n, m, 1);
  for (const auto& f : factors) p = p * f;
  return p;
}

std::string to_monomial_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : p.terms()) {
    std::string mono;
    auto factor = [&](std::int64_t doubled, const std::string& var) {
      if (doubled == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (doubled == 2) return;
      HalfInt h = HalfInt::from_doubled(doubled);
      if (h.is_integer() && doubled > 0) mono += "^" + to_string(h);
      else mono += "^(" + to_string(h) + ")";
    };
    for (std::size_t i = 0; i < p.n(); ++i) factor(e[i], "y" + std::to_string(i + 1));
    for (std::size_t j = 0; j < p.m(); ++j) factor(e[p.n() + j], "x" + std::to_string(j + 1));
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (s.empty()) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    if (mono.empty()) s += a.str();
    else if (a == 1) s += mono;
    else s += a.str() + "*" + mono;
  }
  return s;
}

}  // namespace ospkw
