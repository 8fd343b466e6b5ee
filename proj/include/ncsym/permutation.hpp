#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "ncsym/partition.hpp"

namespace ncsym {

/// A bijection of {1..d}, stored as the image list (sigma(1), ..., sigma(d)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

  static Permutation identity(std::size_t d);

  std::size_t size() const noexcept { return images_.size(); }
  /// sigma(i) for 1 <= i <= d.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Product compatible with the place action: (rho * sigma)(i) = rho(sigma(i)),
/// so that (m . rho) . sigma = m . (rho * sigma).
Permutation operator*(const Permutation& rho, const Permutation& sigma);

IntPartition cycle_type(const Permutation& sigma);

/// The canonical permutation (1..mu_1)(mu_1+1..mu_1+mu_2)... of cycle type mu.
Permutation representative_of_type(const IntPartition& mu);

/// Every permutation of {1..d} in lexicographic order of image lists.
std::vector<Permutation> all_permutations(std::size_t d);

/// "2,1,3" (image list).
std::string to_string(const Permutation& sigma);
Permutation parse_permutation(std::string_view text);

}  // namespace ncsym
