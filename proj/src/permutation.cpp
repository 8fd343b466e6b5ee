#include "ncsym/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "ncsym/error.hpp"

namespace ncsym {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || static_cast<std::size_t>(v) > images_.size() || seen[static_cast<std::size_t>(v)])
      throw PreconditionError("not a permutation of 1..d");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t d) {
  std::vector<int> images(d);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& rho, const Permutation& sigma) {
  if (rho.size() != sigma.size()) throw PreconditionError("permutations of different degrees");
  std::vector<int> images(rho.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = rho(sigma(static_cast<int>(i + 1)));
  return Permutation(std::move(images));
}

IntPartition cycle_type(const Permutation& sigma) {
  std::vector<bool> seen(sigma.size() + 1, false);
  std::vector<int> lengths;
  for (int i = 1; i <= static_cast<int>(sigma.size()); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = sigma(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return IntPartition(std::move(lengths));
}

Permutation representative_of_type(const IntPartition& mu) {
  std::vector<int> images;
  int start = 1;
  for (int part : mu.parts()) {
    for (int j = 0; j < part - 1; ++j) images.push_back(start + j + 1);
    images.push_back(start);
    start += part;
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(std::size_t d) {
  std::vector<Permutation> out;
  std::vector<int> images(d);
  std::iota(images.begin(), images.end(), 1);
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::string to_string(const Permutation& sigma) {
  std::string s;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(sigma.images()[i]);
  }
  return s;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> images;
  if (text.empty()) return Permutation{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError("malformed permutation '" + std::string(text) + "'");
    images.push_back(v);
    pos = comma + 1;
  }
  try {
    return Permutation(std::move(images));
  } catch (const PreconditionError&) {
    throw ParseError("'" + std::string(text) + "' is not a permutation");
  }
}

}  // namespace ncsym
