#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncsym/alphabet.hpp"
#include "ncsym/partition.hpp"

namespace ncsym {

/// A restricted growth word: w_1 = 1 and w_i <= 1 + max(w_1..w_{i-1}).
/// The empty word is allowed.
class RGWord {
 public:
  RGWord() = default;
  /// Throws PreconditionError if the growth condition fails.
  explicit RGWord(std::vector<int> letters);
  RGWord(std::initializer_list<int> letters) : RGWord(std::vector<int>(letters)) {}

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  /// Number of distinct letters (the number of blocks of the set partition).
  int max_letter() const noexcept;

  friend bool operator==(const RGWord&, const RGWord&) = default;
  /// Length first, then lexicographic: the order used for leading terms.
  friend std::strong_ordering operator<=>(const RGWord& u, const RGWord& v);

 private:
  std::vector<int> letters_;
};

/// True when the letters satisfy the restricted growth condition.
bool is_rgword(std::span<const int> letters);

std::strong_ordering prec_compare(const RGWord& u, const RGWord& v);

RGWord concat(const RGWord& u, const RGWord& v);
RGWord concat(std::span<const RGWord> parts);

/// 1^{mu_1} 2^{mu_2} ... k^{mu_k}.
RGWord convex_word(const IntPartition& mu);
bool is_convex(const RGWord& w);

/// Sorted letter multiplicities.
IntPartition word_shape(const RGWord& w);

/// No proper suffix w_i..w_d (i > 1) is a restricted growth word.
bool is_primary(const RGWord& w);
/// Maximal deconcatenation into primary words (cut wherever the suffix is a
/// restricted growth word).
std::vector<RGWord> primary_splitting(const RGWord& w);

struct BimodalDecomposition {
  std::vector<RGWord> factors;
  RGWord tail;  // convex, possibly empty
};

/// Greedy left-to-right recombination of the primary factors: the
/// accumulated prefix absorbs the next primary factor while the result stays
/// convex; otherwise the two close a bimodal factor.
BimodalDecomposition bimodal_decompose(const RGWord& w);
bool is_bimodal(const RGWord& w);
bool is_tail_free(const RGWord& w);

/// All restricted growth words of length d with max letter <= n, in
/// lexicographic order.
std::vector<RGWord> enumerate_rgwords(int d, const Alphabet& n);

/// "1,2,1"; the empty word is "".
std::string to_string(const RGWord& w);
/// Accepts "1,2,1" or the compact "121" (single-digit letters).
RGWord parse_rgword(std::string_view text);

}  // namespace ncsym
