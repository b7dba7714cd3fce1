#pragma once

#include "ospkw/laurent.hpp"
#include "ospkw/weight.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ospkw {

enum class Family { B, D };

/// osp(2m+1|2n) for family B, osp(2m|2n) for family D.
struct Algebra {
  Family family = Family::B;
  std::size_t m = 1;
  std::size_t n = 1;

  /// Family D normally requires m >= 2; allow_d_rank_one admits D(1,n) for
  /// root-data and Euler characteristic computations.
  static Algebra make(Family family, std::size_t m, std::size_t n, bool allow_d_rank_one = false);
  /// Parses "B:m:n" or "D:m:n".
  static Algebra parse(const std::string& text);

  std::size_t rank() const { return m + n; }
  bool is_b() const { return family == Family::B; }
  bool is_d() const { return family == Family::D; }
  std::string name() const;

  friend bool operator==(const Algebra&, const Algebra&) = default;
};

Rational pairing(const Weight& x, const Weight& y);

struct Root {
  Weight weight;
  bool odd = false;

  bool isotropic() const { return pairing(weight, weight) == 0; }
  friend bool operator==(const Root& a, const Root& b) { return a.weight == b.weight && a.odd == b.odd; }
  friend auto operator<=>(const Root& a, const Root& b) { return a.weight <=> b.weight; }
};

/// Compact form such as "d3-e1", "d2+e4", "e1-d1", "2d1".
std::string root_string(const Weight& w);
inline std::string root_string(const Root& r) { return root_string(r.weight); }

/// Letters 'd' (delta) and 'e' (eps); sign -1 marks a negated eps_m.
struct EpsDeltaSequence {
  std::string letters;
  int sign = 1;

  /// Parses strings like "ddeeddeed" with an optional trailing '-'.
  static EpsDeltaSequence parse(const std::string& text);
  std::string str() const;
  bool ends_with_delta() const { return !letters.empty() && letters.back() == 'd'; }

  friend bool operator==(const EpsDeltaSequence&, const EpsDeltaSequence&) = default;
};

/// Throws InvalidSequence if seq does not fit alg.
void validate_sequence(const Algebra& alg, const EpsDeltaSequence& seq);

struct BorelData {
  Algebra algebra;
  EpsDeltaSequence sequence;
  std::vector<Root> simple_roots;
  std::vector<Root> pos_even;  // sorted
  std::vector<Root> pos_odd;   // sorted
  Weight rho;
  Weight rho_even;
  Weight rho_odd;

  std::size_t n() const { return algebra.n; }
  std::size_t m() const { return algebra.m; }
  bool has_simple_root(const Weight& w) const;
  bool has_positive_root(const Weight& w) const;
};

BorelData borel_from_sequence(const Algebra& alg, const EpsDeltaSequence& seq);
BorelData b_st(const Algebra& alg);
EpsDeltaSequence b_odd_sequence(const Algebra& alg);
BorelData b_odd(const Algebra& alg);

/// Every sequence Borel of alg: all arrangements, plus for family D the
/// signed versions of sequences ending in delta.
std::vector<EpsDeltaSequence> all_sequences(const Algebra& alg);

/// Reflection at an isotropic simple root. Returns the new Borel and the new
/// highest weight of the same module.
std::pair<BorelData, Weight> odd_reflection(const BorelData& b, const Weight& alpha, const Weight& gamma);

struct ReflectionWalk {
  BorelData borel;
  Weight highest_weight;
  std::vector<Weight> roots;  // reflected roots, in order
};

/// Walks odd reflections from start to the Borel of target, carrying gamma.
/// Within one conjugacy class the moves bubble eps markers leftwards; a signed
/// target goes through the terminal root delta_n + eps_m.
ReflectionWalk walk_to(const BorelData& start, const EpsDeltaSequence& target, const Weight& gamma);

/// Coordinates of w in the basis of simple roots of b, or nullopt when w is
/// outside their rational span.
std::optional<std::vector<Rational>> simple_root_coordinates(const BorelData& b, const Weight& w);

/// Roots of pos_even/pos_odd lying in the Z-span of the given simple roots.
std::vector<Root> positive_roots_in_span(const BorelData& b, const std::vector<Weight>& simple_subset);

struct WeylElement {
  std::vector<std::size_t> delta_perm;
  std::vector<int> delta_signs;
  std::vector<std::size_t> eps_perm;
  std::vector<int> eps_signs;

  static WeylElement identity(std::size_t n, std::size_t m);
  /// Determinant of the action; equals (-1)^length.
  int sign() const;
  Weight apply(const Weight& x) const;
  Exponent apply(const Exponent& x) const;
  /// (a * b)(x) = a(b(x)).
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

std::vector<WeylElement> weyl_elements(const Algebra& alg);
std::size_t weyl_order(const Algebra& alg);
LaurentPolynomial apply_weyl(const WeylElement& w, const LaurentPolynomial& p);

Weight sigma_twist(const Weight& x);
Root sigma_twist(const Root& r);
EpsDeltaSequence sigma_twist(const EpsDeltaSequence& seq);
BorelData sigma_twist(const BorelData& b);
LaurentPolynomial sigma_twist(const LaurentPolynomial& p);

}  // namespace ospkw
