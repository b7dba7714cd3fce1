#pragma once

#include "ospkw/halfint.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ospkw {

/// Coefficients of a weight in the basis delta_1..delta_n, eps_1..eps_m.
struct Weight {
  std::vector<HalfInt> delta;
  std::vector<HalfInt> eps;

  Weight() = default;
  Weight(std::size_t n, std::size_t m) : delta(n), eps(m) {}
  Weight(std::vector<HalfInt> d, std::vector<HalfInt> e) : delta(std::move(d)), eps(std::move(e)) {}

  static Weight zero(std::size_t n, std::size_t m) { return Weight(n, m); }
  static Weight delta_unit(std::size_t n, std::size_t m, std::size_t i, std::int64_t c = 1);
  static Weight eps_unit(std::size_t n, std::size_t m, std::size_t j, std::int64_t c = 1);
  /// Integer coordinates, e.g. from_ints({2,1}, {7,5,1}).
  static Weight from_ints(const std::vector<std::int64_t>& d, const std::vector<std::int64_t>& e);
  static Weight from_doubled(const std::vector<std::int64_t>& d, const std::vector<std::int64_t>& e);

  std::size_t n() const { return delta.size(); }
  std::size_t m() const { return eps.size(); }
  bool is_zero() const;
  bool is_integral() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight operator-() const;
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(std::int64_t k, Weight a);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) {
    if (auto c = a.delta <=> b.delta; c != 0) return c;
    return a.eps <=> b.eps;
  }
};

/// "(a_1,...,a_n | b_1,...,b_m)" with halves rendered as "p/2".
std::string display(const Weight& w);

/// Linear-combination form such as "10d1+9d2+2e4"; "0" for the zero weight.
std::string to_linear_string(const Weight& w);

}  // namespace ospkw
