#include "ncsym/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "ncsym/error.hpp"

namespace ncsym {

IntPartition::IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw PreconditionError("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> IntPartition::multiplicities() const {
  std::vector<int> a(parts_.empty() ? 1 : static_cast<std::size_t>(parts_.front()) + 1, 0);
  for (int p : parts_) ++a[static_cast<std::size_t>(p)];
  return a;
}

std::strong_ordering operator<=>(const IntPartition& a, const IntPartition& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  return b.parts_ <=> a.parts_;
}

bool dominance_leq(const IntPartition& lambda, const IntPartition& mu) {
  if (lambda.weight() != mu.weight()) throw PreconditionError("incomparable weights");
  int sl = 0, sm = 0;
  std::size_t len = std::max(lambda.length(), mu.length());
  for (std::size_t k = 0; k < len; ++k) {
    sl += k < lambda.length() ? lambda[k] : 0;
    sm += k < mu.length() ? mu[k] : 0;
    if (sl > sm) return false;
  }
  return true;
}

IntPartition union_of(const IntPartition& mu, const IntPartition& nu) {
  std::vector<int> parts = mu.parts();
  parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
  return IntPartition(std::move(parts));
}

IntPartition part_sum(const IntPartition& mu, const IntPartition& nu) {
  std::vector<int> parts(std::max(mu.length(), nu.length()), 0);
  for (std::size_t i = 0; i < mu.length(); ++i) parts[i] += mu[i];
  for (std::size_t i = 0; i < nu.length(); ++i) parts[i] += nu[i];
  return IntPartition(std::move(parts));
}

namespace {

std::uint64_t small_factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

std::uint64_t mu_factorial(const IntPartition& mu) {
  std::uint64_t r = 1;
  for (int a : mu.multiplicities()) r *= small_factorial(a);
  return r;
}

std::uint64_t z_constant(const IntPartition& mu) {
  std::uint64_t r = 1;
  auto a = mu.multiplicities();
  for (std::size_t i = 1; i < a.size(); ++i) {
    for (int j = 0; j < a[i]; ++j) r *= i;
    r *= small_factorial(a[i]);
  }
  return r;
}

namespace {

void partitions_rec(int remaining, int max_part, std::size_t max_len, std::vector<int>& current,
                    std::vector<IntPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (current.size() == max_len) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, max_len, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<IntPartition> enumerate_partitions(int d, std::optional<std::size_t> max_len) {
  std::vector<IntPartition> out;
  if (d < 0) return out;
  std::vector<int> current;
  partitions_rec(d, d, max_len.value_or(static_cast<std::size_t>(d)), current, out);
  return out;
}

std::string to_string(const IntPartition& mu) {
  std::string s;
  for (std::size_t i = 0; i < mu.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(mu[i]);
  }
  return s;
}

IntPartition parse_partition(std::string_view text) {
  std::vector<int> parts;
  if (text.empty() || text == "0") return IntPartition{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || v <= 0)
      throw ParseError("malformed partition '" + std::string(text) + "'");
    parts.push_back(v);
    pos = comma + 1;
  }
  return IntPartition(std::move(parts));
}

}  // namespace ncsym
