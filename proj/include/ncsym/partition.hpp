#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncsym {

/// An integer partition, stored with weakly decreasing positive parts.
/// The empty partition is the partition 0 of weight 0.
class IntPartition {
 public:
  IntPartition() = default;
  /// Accepts the parts in any order; zeros are rejected.
  explicit IntPartition(std::vector<int> parts);
  IntPartition(std::initializer_list<int> parts)
      : IntPartition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int weight() const noexcept { return weight_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// a_i = number of parts equal to i, indexed 0..largest part (a_0 = 0).
  std::vector<int> multiplicities() const;

  friend bool operator==(const IntPartition& a, const IntPartition& b) {
    return a.parts_ == b.parts_;
  }
  /// Weight first, then decreasing lexicographic order on parts, so that
  /// 4 < 31 < 22 < 211 < 1111 within a weight.
  friend std::strong_ordering operator<=>(const IntPartition& a, const IntPartition& b);

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Prefix-sum dominance. Throws PreconditionError ("incomparable weights")
/// when the weights differ.
bool dominance_leq(const IntPartition& lambda, const IntPartition& mu);

/// Multiset union of the parts.
IntPartition union_of(const IntPartition& mu, const IntPartition& nu);

/// Componentwise sum, the shorter operand padded with zeros.
IntPartition part_sum(const IntPartition& mu, const IntPartition& nu);

/// mu^! = a_1! a_2! ... for mu = 1^{a_1} 2^{a_2} ...
std::uint64_t mu_factorial(const IntPartition& mu);

/// z_mu = prod i^{a_i} a_i!, the centralizer order of a permutation of cycle type mu.
std::uint64_t z_constant(const IntPartition& mu);

/// All partitions of d with at most max_len parts (nullopt: unbounded), in
/// decreasing lexicographic order.
std::vector<IntPartition> enumerate_partitions(int d, std::optional<std::size_t> max_len = {});

/// "3,2,1"; the empty partition is "".
std::string to_string(const IntPartition& mu);
/// Inverse of to_string; also accepts parts in any order.
IntPartition parse_partition(std::string_view text);

}  // namespace ncsym
