#include "ncsym/rg_word.hpp"

#include <algorithm>
#include <charconv>

#include "ncsym/error.hpp"

namespace ncsym {

bool is_rgword(std::span<const int> letters) {
  int max_so_far = 0;
  for (int c : letters) {
    if (c < 1 || c > max_so_far + 1) return false;
    max_so_far = std::max(max_so_far, c);
  }
  return true;
}

RGWord::RGWord(std::vector<int> letters) : letters_(std::move(letters)) {
  if (!is_rgword(letters_)) throw PreconditionError("not a restricted growth word");
}

int RGWord::max_letter() const noexcept {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

std::strong_ordering operator<=>(const RGWord& u, const RGWord& v) {
  if (auto c = u.size() <=> v.size(); c != 0) return c;
  return u.letters_ <=> v.letters_;
}

std::strong_ordering prec_compare(const RGWord& u, const RGWord& v) { return u <=> v; }

RGWord concat(const RGWord& u, const RGWord& v) {
  std::vector<int> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return RGWord(std::move(letters));
}

RGWord concat(std::span<const RGWord> parts) {
  std::vector<int> letters;
  for (const auto& p : parts) letters.insert(letters.end(), p.letters().begin(), p.letters().end());
  return RGWord(std::move(letters));
}

RGWord convex_word(const IntPartition& mu) {
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(mu.weight()));
  for (std::size_t i = 0; i < mu.length(); ++i)
    letters.insert(letters.end(), static_cast<std::size_t>(mu[i]), static_cast<int>(i + 1));
  return RGWord(std::move(letters));
}

bool is_convex(const RGWord& w) {
  const auto& x = w.letters();
  std::size_t prev_run = x.size() + 1;
  std::size_t i = 0;
  int expected = 1;
  while (i < x.size()) {
    if (x[i] != expected) return false;
    std::size_t j = i;
    while (j < x.size() && x[j] == expected) ++j;
    if (j - i > prev_run) return false;
    prev_run = j - i;
    i = j;
    ++expected;
  }
  return true;
}

IntPartition word_shape(const RGWord& w) {
  std::vector<int> counts(static_cast<std::size_t>(w.max_letter()), 0);
  for (int c : w.letters()) ++counts[static_cast<std::size_t>(c - 1)];
  return IntPartition(std::move(counts));
}

namespace {

bool suffix_is_rgword(const std::vector<int>& x, std::size_t from) {
  return is_rgword(std::span<const int>(x).subspan(from));
}

}  // namespace

bool is_primary(const RGWord& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (suffix_is_rgword(w.letters(), i)) return false;
  return true;
}

std::vector<RGWord> primary_splitting(const RGWord& w) {
  std::vector<RGWord> out;
  const auto& x = w.letters();
  std::size_t start = 0;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    if (i == x.size() || suffix_is_rgword(x, i)) {
      out.emplace_back(std::vector<int>(x.begin() + static_cast<std::ptrdiff_t>(start),
                                        x.begin() + static_cast<std::ptrdiff_t>(i)));
      start = i;
    }
  }
  return out;
}

BimodalDecomposition bimodal_decompose(const RGWord& w) {
  BimodalDecomposition out;
  RGWord prefix;
  for (const auto& q : primary_splitting(w)) {
    RGWord joined = concat(prefix, q);
    if (is_convex(joined)) {
      prefix = std::move(joined);
    } else {
      out.factors.push_back(std::move(joined));
      prefix = RGWord{};
    }
  }
  out.tail = std::move(prefix);
  return out;
}

bool is_bimodal(const RGWord& w) {
  auto dec = bimodal_decompose(w);
  return dec.tail.empty() && dec.factors.size() == 1;
}

bool is_tail_free(const RGWord& w) { return bimodal_decompose(w).tail.empty(); }

namespace {

void rgwords_rec(std::size_t d, int limit, int max_so_far, std::vector<int>& current,
                 std::vector<RGWord>& out) {
  if (current.size() == d) {
    out.emplace_back(current);
    return;
  }
  int top = std::min(max_so_far + 1, limit);
  for (int c = 1; c <= top; ++c) {
    current.push_back(c);
    rgwords_rec(d, limit, std::max(max_so_far, c), current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<RGWord> enumerate_rgwords(int d, const Alphabet& n) {
  std::vector<RGWord> out;
  if (d < 0) return out;
  std::vector<int> current;
  int limit = static_cast<int>(n.cap(static_cast<std::size_t>(d)));
  if (d > 0 && limit == 0) return out;
  rgwords_rec(static_cast<std::size_t>(d), limit, 0, current, out);
  return out;
}

std::string to_string(const RGWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

RGWord parse_rgword(std::string_view text) {
  std::vector<int> letters;
  auto fail = [&] { return ParseError("malformed restricted growth word '" + std::string(text) + "'"); };
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw fail();
      letters.push_back(ch - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view tok = text.substr(pos, comma - pos);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) throw fail();
      letters.push_back(v);
      pos = comma + 1;
    }
  }
  if (!is_rgword(letters)) throw fail();
  return RGWord(std::move(letters));
}

}  // namespace ncsym
