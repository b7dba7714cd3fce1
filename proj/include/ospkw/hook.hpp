#pragma once

#include "ospkw/rootdata.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ospkw {

using Partition = std::vector<std::int64_t>;

/// Conjugate partition.
Partition transpose(const Partition& lam);

/// An (n|m)-hook partition: lambda_{n+1} <= m. Trailing zeros are trimmed.
struct HookPartition {
  Partition parts;
  std::size_t n = 0;
  std::size_t m = 0;

  /// Throws ParseError for a non-partition and HookViolation outside H(n|m).
  static HookPartition make(Partition parts, std::size_t n, std::size_t m);
  /// Comma-separated decimal list; the empty string is the empty partition.
  static HookPartition parse(const std::string& text, std::size_t n, std::size_t m);

  /// 1-based part, 0 beyond the end.
  std::int64_t part(std::size_t i) const { return i >= 1 && i <= parts.size() ? parts[i - 1] : 0; }
  std::int64_t size() const;
  std::string str() const;

  friend bool operator==(const HookPartition&, const HookPartition&) = default;
};

/// All (n|m)-hook partitions of size at most max_size, by size then reverse lex.
std::vector<HookPartition> hook_partitions(std::size_t n, std::size_t m, std::int64_t max_size);

/// (lambda^natural, lambda^natural_-).
std::pair<Weight, Weight> natural_weight(const HookPartition& lam);

struct FrobeniusData {
  std::vector<std::int64_t> p;
  std::vector<std::int64_t> q;
  std::vector<std::size_t> d_breaks;  // cumulative delta counts d_0 = 0, d_1, ..., d_r
  std::vector<std::size_t> e_breaks;  // cumulative eps counts
};

/// Block Frobenius coordinates with respect to the letters of seq (sign ignored).
FrobeniusData frobenius_coordinates(const HookPartition& lam, const EpsDeltaSequence& seq);

/// Highest weight of L(lambda^natural) (minus = false) or L(lambda^natural_-)
/// (minus = true) with respect to b, from Frobenius coordinates. Throws
/// UnsupportedCase where no closed form is available: family D, sequence
/// ending in d, with minus differing from the sign of b.
Weight frobenius_weight(const HookPartition& lam, const BorelData& b, bool minus);
/// minus defaults to the sign of b.
Weight frobenius_weight(const HookPartition& lam, const BorelData& b);

/// Same highest weight, computed by walking odd reflections from the
/// standard Borel. Total.
Weight highest_weight_via_reflections(const HookPartition& lam, const BorelData& b, bool minus);

}  // namespace ospkw
