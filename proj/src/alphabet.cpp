#include "ncsym/alphabet.hpp"

#include <charconv>

#include "ncsym/error.hpp"

namespace ncsym {

Alphabet Alphabet::finite(std::size_t n) {
  if (n == 0) throw PreconditionError("alphabet size must be positive");
  return Alphabet(n);
}

std::size_t Alphabet::size() const {
  if (!size_) throw PreconditionError("unbounded alphabet has no finite size");
  return *size_;
}

std::string to_string(const Alphabet& n) {
  return n.is_infinite() ? "inf" : std::to_string(n.size());
}

Alphabet parse_alphabet(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo") return Alphabet::infinite();
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
    throw ParseError("alphabet must be a positive integer or 'inf', got '" + std::string(text) + "'");
  return Alphabet::finite(value);
}

void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
  if (!(a == b))
    throw AlphabetMismatch("alphabet mismatch: " + to_string(a) + " vs " + to_string(b));
}

}  // namespace ncsym
