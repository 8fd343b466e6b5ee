#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "ncsym/alphabet.hpp"
#include "ncsym/partition.hpp"
#include "ncsym/rg_word.hpp"

namespace ncsym {

using Block = std::vector<int>;

/// A set partition of a finite set of positive integers. Blocks are sorted
/// internally and ordered by increasing minimum element.
class SetPartition {
 public:
  SetPartition() = default;
  /// Normalizes block order; throws PreconditionError on empty or
  /// overlapping blocks or non-positive elements.
  explicit SetPartition(std::vector<Block> blocks);
  SetPartition(std::initializer_list<Block> blocks) : SetPartition(std::vector<Block>(blocks)) {}

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t length() const noexcept { return blocks_.size(); }
  bool empty() const noexcept { return blocks_.empty(); }
  /// Size of the ground set.
  int size() const noexcept;
  /// Sorted ground set.
  std::vector<int> ground_set() const;
  /// True when the ground set is {1..size()}.
  bool is_standard() const;

  IntPartition shape() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  std::vector<Block> blocks_;
};

SetPartition shift(const SetPartition& a, int k);
/// Pullback along the increasing bijection {1..d} -> ground set.
SetPartition standardize(const SetPartition& a);

/// Quasi-shuffles of A |- [c] with B |- [d] (B is shifted by c), as set
/// partitions of [c+d]; duplicate-free and sorted by word order.
std::vector<SetPartition> quasi_shuffle(const SetPartition& a, const SetPartition& b);

/// Requires a standard ground set.
RGWord to_rgword(const SetPartition& a);
SetPartition from_rgword(const RGWord& w);

bool is_atomic(const SetPartition& a);
/// Unique maximal splitting A = A'|A''|..., each factor standardized.
std::vector<SetPartition> atomic_splitting(const SetPartition& a);
/// A | B = A u shift(B, |A|).
SetPartition splice(const SetPartition& a, const SetPartition& b);

std::vector<SetPartition> enumerate_setpartitions(int d, const Alphabet& n);
/// B_d^{(n)}: set partitions of [d] with at most n blocks.
std::uint64_t bell_restricted(int d, const Alphabet& n);
/// Standard set partitions of the given shape, in word order.
std::vector<SetPartition> setpartitions_of_shape(const IntPartition& mu);

/// "1,3/2"; the empty partition is "".
std::string to_string(const SetPartition& a);
/// Accepts "1,3/2" and the dotted shorthand "13.2" (single-digit elements).
SetPartition parse_setpartition(std::string_view text);

}  // namespace ncsym
