#include "ncsym/set_partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <set>

#include "ncsym/error.hpp"

namespace ncsym {

SetPartition::SetPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  std::set<int> seen;
  for (auto& b : blocks_) {
    if (b.empty()) throw PreconditionError("set partition blocks must be nonempty");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x <= 0) throw PreconditionError("set partition elements must be positive");
      if (!seen.insert(x).second) throw PreconditionError("set partition blocks must be disjoint");
    }
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

int SetPartition::size() const noexcept {
  std::size_t n = 0;
  for (const auto& b : blocks_) n += b.size();
  return static_cast<int>(n);
}

std::vector<int> SetPartition::ground_set() const {
  std::vector<int> g;
  for (const auto& b : blocks_) g.insert(g.end(), b.begin(), b.end());
  std::sort(g.begin(), g.end());
  return g;
}

bool SetPartition::is_standard() const {
  auto g = ground_set();
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != static_cast<int>(i + 1)) return false;
  return true;
}

IntPartition SetPartition::shape() const {
  std::vector<int> sizes;
  for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
  return IntPartition(std::move(sizes));
}

SetPartition shift(const SetPartition& a, int k) {
  if (k < 0) throw PreconditionError("shift amount must be nonnegative");
  std::vector<Block> blocks = a.blocks();
  for (auto& b : blocks)
    for (int& x : b) x += k;
  return SetPartition(std::move(blocks));
}

SetPartition standardize(const SetPartition& a) {
  auto g = a.ground_set();
  std::vector<Block> blocks = a.blocks();
  for (auto& b : blocks)
    for (int& x : b)
      x = static_cast<int>(std::lower_bound(g.begin(), g.end(), x) - g.begin()) + 1;
  return SetPartition(std::move(blocks));
}

namespace {

void require_standard(const SetPartition& a, const char* what) {
  if (!a.is_standard())
    throw PreconditionError(std::string(what) + ": set partition must have ground set {1..d}");
}

// A_1 is merged with B_0 = {} or with one block B_i, and the remaining
// blocks are shuffled recursively.
std::vector<std::vector<Block>> shuffle_blocks(std::span<const Block> as, std::vector<Block> bs) {
  if (as.empty()) return {std::move(bs)};
  if (bs.empty()) return {std::vector<Block>(as.begin(), as.end())};
  std::vector<std::vector<Block>> out;
  for (std::size_t i = 0; i <= bs.size(); ++i) {
    Block merged = as.front();
    std::vector<Block> rest_b;
    rest_b.reserve(bs.size());
    for (std::size_t j = 0; j < bs.size(); ++j) {
      if (i > 0 && j == i - 1)
        merged.insert(merged.end(), bs[j].begin(), bs[j].end());
      else
        rest_b.push_back(bs[j]);
    }
    for (auto& tail : shuffle_blocks(as.subspan(1), std::move(rest_b))) {
      tail.push_back(merged);
      out.push_back(std::move(tail));
    }
  }
  return out;
}

}  // namespace

std::vector<SetPartition> quasi_shuffle(const SetPartition& a, const SetPartition& b) {
  require_standard(a, "quasi_shuffle");
  require_standard(b, "quasi_shuffle");
  auto shifted = shift(b, a.size());
  std::set<RGWord> words;
  for (auto& blocks : shuffle_blocks(a.blocks(), shifted.blocks()))
    words.insert(to_rgword(SetPartition(std::move(blocks))));
  std::vector<SetPartition> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(from_rgword(w));
  return out;
}

RGWord to_rgword(const SetPartition& a) {
  require_standard(a, "to_rgword");
  std::vector<int> letters(static_cast<std::size_t>(a.size()));
  for (std::size_t k = 0; k < a.length(); ++k)
    for (int x : a.blocks()[k]) letters[static_cast<std::size_t>(x - 1)] = static_cast<int>(k + 1);
  return RGWord(std::move(letters));
}

SetPartition from_rgword(const RGWord& w) {
  std::vector<Block> blocks(static_cast<std::size_t>(w.max_letter()));
  for (std::size_t i = 0; i < w.size(); ++i)
    blocks[static_cast<std::size_t>(w[i] - 1)].push_back(static_cast<int>(i + 1));
  return SetPartition(std::move(blocks));
}

namespace {

// Positions c (0 < c < d) where the first c letters are exactly the blocks
// partitioning [c].
std::vector<std::size_t> atomic_cuts(const RGWord& w) {
  std::vector<std::size_t> cuts;
  const auto& x = w.letters();
  std::vector<int> suffix_min(x.size() + 1, 0);
  for (std::size_t i = x.size(); i-- > 0;)
    suffix_min[i] = i + 1 == x.size() ? x[i] : std::min(x[i], suffix_min[i + 1]);
  int prefix_max = 0;
  for (std::size_t c = 1; c < x.size(); ++c) {
    prefix_max = std::max(prefix_max, x[c - 1]);
    if (prefix_max < suffix_min[c]) cuts.push_back(c);
  }
  return cuts;
}

}  // namespace

bool is_atomic(const SetPartition& a) {
  if (a.empty()) return false;
  return atomic_cuts(to_rgword(a)).empty();
}

std::vector<SetPartition> atomic_splitting(const SetPartition& a) {
  auto w = to_rgword(a);
  auto cuts = atomic_cuts(w);
  cuts.push_back(w.size());
  std::vector<SetPartition> out;
  std::size_t start = 0;
  int offset = 0;
  for (std::size_t cut : cuts) {
    if (cut == 0) break;
    std::vector<int> letters;
    int local_max = 0;
    for (std::size_t i = start; i < cut; ++i) {
      letters.push_back(w[i] - offset);
      local_max = std::max(local_max, w[i]);
    }
    out.push_back(from_rgword(RGWord(std::move(letters))));
    offset = local_max;
    start = cut;
  }
  return out;
}

SetPartition splice(const SetPartition& a, const SetPartition& b) {
  std::vector<Block> blocks = a.blocks();
  SetPartition shifted = shift(b, a.size());
  for (const auto& blk : shifted.blocks()) blocks.push_back(blk);
  return SetPartition(std::move(blocks));
}

std::vector<SetPartition> enumerate_setpartitions(int d, const Alphabet& n) {
  std::vector<SetPartition> out;
  for (const auto& w : enumerate_rgwords(d, n)) out.push_back(from_rgword(w));
  return out;
}

std::uint64_t bell_restricted(int d, const Alphabet& n) {
  if (d < 0) return 0;
  // Stirling numbers of the second kind, S(i, k) = k S(i-1, k) + S(i-1, k-1).
  std::size_t dd = static_cast<std::size_t>(d);
  std::vector<std::vector<std::uint64_t>> s(dd + 1, std::vector<std::uint64_t>(dd + 1, 0));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= dd; ++i)
    for (std::size_t k = 1; k <= i; ++k) s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= n.cap(dd); ++k) total += s[dd][k];
  return total;
}

std::vector<SetPartition> setpartitions_of_shape(const IntPartition& mu) {
  static std::mutex mutex;
  static std::map<IntPartition, std::vector<SetPartition>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(mu); it != cache.end()) return it->second;
  std::vector<SetPartition> out;
  for (const auto& w : enumerate_rgwords(mu.weight(), Alphabet::infinite()))
    if (word_shape(w) == mu) out.push_back(from_rgword(w));
  cache.emplace(mu, out);
  return out;
}

std::string to_string(const SetPartition& a) {
  std::string s;
  for (std::size_t k = 0; k < a.length(); ++k) {
    if (k) s += '/';
    const auto& b = a.blocks()[k];
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(b[i]);
    }
  }
  return s;
}

SetPartition parse_setpartition(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return ParseError("malformed set partition '" + std::string(text) + "': " + why);
  };
  std::vector<Block> blocks;
  if (text.empty()) return SetPartition{};
  bool slash_form = text.find('/') != std::string_view::npos || text.find(',') != std::string_view::npos;
  char block_sep = slash_form ? '/' : '.';
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t sep = text.find(block_sep, pos);
    if (sep == std::string_view::npos) sep = text.size();
    std::string_view tok = text.substr(pos, sep - pos);
    if (tok.empty()) throw fail("empty block");
    Block block;
    if (slash_form) {
      std::size_t p = 0;
      while (p <= tok.size()) {
        std::size_t comma = tok.find(',', p);
        if (comma == std::string_view::npos) comma = tok.size();
        std::string_view num = tok.substr(p, comma - p);
        int v = 0;
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
        if (num.empty() || ec != std::errc{} || ptr != num.data() + num.size())
          throw fail("bad element");
        block.push_back(v);
        p = comma + 1;
      }
    } else {
      for (char ch : tok) {
        if (ch < '1' || ch > '9') throw fail("dotted form takes single nonzero digits");
        block.push_back(ch - '0');
      }
    }
    blocks.push_back(std::move(block));
    pos = sep + 1;
  }
  try {
    return SetPartition(std::move(blocks));
  } catch (const PreconditionError& e) {
    throw fail(e.what());
  }
}

}  // namespace ncsym
