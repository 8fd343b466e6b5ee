#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace ncsym {

/// Number of variables n, either a positive integer or unbounded.
class Alphabet {
 public:
  static Alphabet infinite() { return Alphabet{}; }
  static Alphabet finite(std::size_t n);

  bool is_infinite() const noexcept { return !size_; }
  /// Only meaningful for finite alphabets.
  std::size_t size() const;

  /// True when an index with `parts` blocks (or parts) survives, i.e. parts <= n.
  bool admits(std::size_t parts) const noexcept { return !size_ || parts <= *size_; }

  /// min(n, bound); used to cap products over 1..n at a finite degree.
  std::size_t cap(std::size_t bound) const noexcept {
    return size_ && *size_ < bound ? *size_ : bound;
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  Alphabet() = default;
  explicit Alphabet(std::size_t n) : size_(n) {}

  std::optional<std::size_t> size_;
};

/// "inf" or a positive decimal integer.
std::string to_string(const Alphabet& n);
Alphabet parse_alphabet(std::string_view text);

/// Throws AlphabetMismatch unless both alphabets agree.
void require_same_alphabet(const Alphabet& a, const Alphabet& b);

}  // namespace ncsym
