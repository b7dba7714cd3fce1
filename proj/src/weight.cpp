#include "ospkw/weight.hpp"

#include "ospkw/errors.hpp"

#include <algorithm>

namespace ospkw {

namespace {

void check_same_rank(const Weight& a, const Weight& b) {
  if (a.n() != b.n() || a.m() != b.m()) fail(ErrorCode::RankMismatch, "weights of different rank");
}

}  // namespace

Weight Weight::delta_unit(std::size_t n, std::size_t m, std::size_t i, std::int64_t c) {
  Weight w(n, m);
  w.delta.at(i) = HalfInt::from_int(c);
  return w;
}

Weight Weight::eps_unit(std::size_t n, std::size_t m, std::size_t j, std::int64_t c) {
  Weight w(n, m);
  w.eps.at(j) = HalfInt::from_int(c);
  return w;
}

Weight Weight::from_ints(const std::vector<std::int64_t>& d, const std::vector<std::int64_t>& e) {
  Weight w(d.size(), e.size());
  for (std::size_t i = 0; i < d.size(); ++i) w.delta[i] = HalfInt::from_int(d[i]);
  for (std::size_t j = 0; j < e.size(); ++j) w.eps[j] = HalfInt::from_int(e[j]);
  return w;
}

Weight Weight::from_doubled(const std::vector<std::int64_t>& d, const std::vector<std::int64_t>& e) {
  Weight w(d.size(), e.size());
  for (std::size_t i = 0; i < d.size(); ++i) w.delta[i] = HalfInt::from_doubled(d[i]);
  for (std::size_t j = 0; j < e.size(); ++j) w.eps[j] = HalfInt::from_doubled(e[j]);
  return w;
}

bool Weight::is_zero() const {
  auto z = [](HalfInt h) { return h.doubled() == 0; };
  return std::all_of(delta.begin(), delta.end(), z) && std::all_of(eps.begin(), eps.end(), z);
}

bool Weight::is_integral() const {
  auto integral = [](HalfInt h) { return h.is_integer(); };
  return std::all_of(delta.begin(), delta.end(), integral) && std::all_of(eps.begin(), eps.end(), integral);
}

Weight& Weight::operator+=(const Weight& o) {
  check_same_rank(*this, o);
  for (std::size_t i = 0; i < delta.size(); ++i) delta[i] += o.delta[i];
  for (std::size_t j = 0; j < eps.size(); ++j) eps[j] += o.eps[j];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  check_same_rank(*this, o);
  for (std::size_t i = 0; i < delta.size(); ++i) delta[i] -= o.delta[i];
  for (std::size_t j = 0; j < eps.size(); ++j) eps[j] -= o.eps[j];
  return *this;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (auto& x : w.delta) x = -x;
  for (auto& x : w.eps) x = -x;
  return w;
}

Weight operator*(std::int64_t k, Weight a) {
  for (auto& x : a.delta) x = x * k;
  for (auto& x : a.eps) x = x * k;
  return a;
}

std::string display(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.delta.size(); ++i) {
    if (i) s += ", ";
    s += to_string(w.delta[i]);
  }
  s += " | ";
  for (std::size_t j = 0; j < w.eps.size(); ++j) {
    if (j) s += ", ";
    s += to_string(w.eps[j]);
  }
  return s + ")";
}

std::string to_linear_string(const Weight& w) {
  std::string s;
  auto emit = [&](HalfInt c, const std::string& var) {
    if (c.doubled() == 0) return;
    bool neg = c.doubled() < 0;
    HalfInt a = c.abs();
    if (neg) s += "-";
    else if (!s.empty()) s += "+";
    if (a != HalfInt::from_int(1)) s += to_string(a);
    s += var;
  };
  for (std::size_t i = 0; i < w.delta.size(); ++i) emit(w.delta[i], "d" + std::to_string(i + 1));
  for (std::size_t j = 0; j < w.eps.size(); ++j) emit(w.eps[j], "e" + std::to_string(j + 1));
  return s.empty() ? "0" : s;
}

}  // namespace ospkw
