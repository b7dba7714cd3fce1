#pragma once

#include "ospkw/weight.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ospkw {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kMaxRank = 16;

/// A point of the doubled exponent lattice: delta axes first, then eps axes.
/// Entries beyond rank() are always zero, so the defaulted comparison is the
/// lexicographic order on the first rank() entries.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t rank);
  static Exponent from_weight(const Weight& w);

  std::size_t rank() const { return rank_; }
  std::int64_t operator[](std::size_t i) const { return v_[i]; }
  std::int64_t& operator[](std::size_t i) { return v_[i]; }

  Weight to_weight(std::size_t n) const;

  Exponent& operator+=(const Exponent& o);
  Exponent& operator-=(const Exponent& o);
  friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
  friend Exponent operator-(Exponent a, const Exponent& b) { return a -= b; }
  Exponent operator-() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend std::strong_ordering operator<=>(const Exponent&, const Exponent&) = default;

  std::size_t hash() const;

 private:
  std::array<std::int64_t, kMaxRank> v_{};
  std::uint8_t rank_ = 0;
};

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const { return e.hash(); }
};

/// Finitely supported Z-valued function on the doubled exponent lattice of
/// rank n+m. Terms are stored in canonical form: strictly descending in the
/// lexicographic order, no zero coefficients.
class LaurentPolynomial {
 public:
  using Term = std::pair<Exponent, BigInt>;

  LaurentPolynomial() = default;
  LaurentPolynomial(std::size_t n, std::size_t m);

  static LaurentPolynomial monomial(const Weight& w, const BigInt& c);
  static LaurentPolynomial constant(std::size_t n, std::size_t m, const BigInt& c);
  /// Combines duplicate exponents and sorts.
  static LaurentPolynomial from_terms(std::size_t n, std::size_t m, std::vector<Term> terms);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t rank() const { return n_ + m_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Requires !is_zero().
  const Term& leading_term() const { return terms_.front(); }
  const Term& lowest_term() const { return terms_.back(); }

  BigInt coefficient(const Exponent& e) const;
  BigInt coefficient(const Weight& w) const { return coefficient(Exponent::from_weight(w)); }

  /// Substitutes e^gamma -> 1.
  BigInt evaluate_at_one() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial scaled(const BigInt& c) const;
  /// Multiplies by the monomial e^shift.
  LaurentPolynomial shifted(const Exponent& shift) const;

  /// Applies an exponent map term by term and re-canonicalizes.
  template <class F>
  LaurentPolynomial map_exponents(F&& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.emplace_back(f(e), c);
    return from_terms(n_, m_, std::move(out));
  }

  /// Divides every coefficient by d. Returns false (leaving *this untouched)
  /// when some coefficient is not divisible.
  bool try_divide_scalar(const BigInt& d);

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.terms_ == b.terms_;
  }

 private:
  friend class PolynomialAccumulator;
  void check_compatible(const LaurentPolynomial& o) const;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<Term> terms_;
};

/// Hash-based sum of many terms; finish() yields the canonical form. The
/// result does not depend on insertion order.
class PolynomialAccumulator {
 public:
  PolynomialAccumulator(std::size_t n, std::size_t m) : n_(n), m_(m) {}

  void add(const Exponent& e, const BigInt& c);
  void add(const LaurentPolynomial& p);
  void add_scaled(const LaurentPolynomial& p, const BigInt& c);
  void merge(PolynomialAccumulator&& other);
  std::size_t size() const { return acc_.size(); }
  LaurentPolynomial finish() &&;

 private:
  std::size_t n_;
  std::size_t m_;
  std::unordered_map<Exponent, BigInt, ExponentHash> acc_;
};

/// Exact quotient q with q * den == num, by long division along the
/// lexicographic leading-term order. Throws NotDivisible otherwise.
LaurentPolynomial exact_divide(const LaurentPolynomial& num, const LaurentPolynomial& den);

/// Divides successively by each factor of a product-form denominator.
LaurentPolynomial exact_divide_by_factors(LaurentPolynomial num, const std::vector<LaurentPolynomial>& factors);

LaurentPolynomial product(const std::vector<LaurentPolynomial>& factors, std::size_t n, std::size_t m);

/// Monomial form with x_j = e^{eps_j}, y_i = e^{delta_i}, e.g. "y1^2*x1^(-1/2)".
std::string to_monomial_string(const LaurentPolynomial& p);

}  // namespace ospkw
