#include "ncsym/oracle.hpp"

#include <map>

#include "ncsym/error.hpp"

namespace ncsym::oracle {

namespace {

// Assigns distinct variables to the blocks of A in every possible way.
void assign(const SetPartition& a, int k, std::size_t block, std::vector<int>& letters, std::vector<bool>& used,
            std::vector<std::vector<int>>& out) {
  if (block == a.length()) {
    out.push_back(letters);
    return;
  }
  for (int x = 1; x <= k; ++x) {
    if (used[static_cast<std::size_t>(x)]) continue;
    used[static_cast<std::size_t>(x)] = true;
    for (int i : a.blocks()[block]) letters[static_cast<std::size_t>(i - 1)] = x;
    assign(a, k, block + 1, letters, used, out);
    used[static_cast<std::size_t>(x)] = false;
  }
}

SetPartition type_of(const std::vector<int>& word) {
  std::map<int, Block> by_letter;
  for (std::size_t i = 0; i < word.size(); ++i) by_letter[word[i]].push_back(static_cast<int>(i + 1));
  std::vector<Block> blocks;
  for (auto& [x, b] : by_letter) blocks.push_back(std::move(b));
  return SetPartition(std::move(blocks));
}

using WordSum = std::map<std::vector<int>, Rational>;

WordSum expand(const NCSymElement& f, int k) {
  WordSum out;
  for (const auto& [w, c] : f.terms())
    for (auto& word : words_of_type(from_rgword(w), k)) out[std::move(word)] += c;
  return out;
}

}  // namespace

std::vector<std::vector<int>> words_of_type(const SetPartition& a, int k) {
  if (!a.is_standard()) throw PreconditionError("words_of_type: ground set must be {1..d}");
  std::vector<std::vector<int>> out;
  std::vector<int> letters(static_cast<std::size_t>(a.size()));
  std::vector<bool> used(static_cast<std::size_t>(k) + 1);
  assign(a, k, 0, letters, used, out);
  return out;
}

NCSymElement word_product(const NCSymElement& f, const NCSymElement& g, int k) {
  const Alphabet n = Alphabet::finite(static_cast<std::size_t>(k));
  WordSum product;
  for (const auto& [u, cu] : expand(f, k))
    for (const auto& [v, cv] : expand(g, k)) {
      std::vector<int> uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      product[uv] += cu * cv;
    }
  std::map<SetPartition, Rational> by_type;
  for (const auto& [word, c] : product) {
    if (c == 0) continue;
    auto [it, fresh] = by_type.emplace(type_of(word), c);
    if (!fresh && it->second != c) throw InternalError("word product is not constant on types");
  }
  NCSymElement out(n);
  for (const auto& [a, c] : by_type) {
    // Each type must be hit by all of its words, not just some.
    std::size_t hits = 0;
    for (const auto& word : words_of_type(a, k)) hits += product.count(word) && product.at(word) != 0;
    if (hits != words_of_type(a, k).size()) throw InternalError("word product is not constant on types");
    out.add_term(to_rgword(a), c);
  }
  return out;
}

Tensor block_coproduct(const SetPartition& a, const Alphabet& n) {
  Tensor out(n, 2);
  std::size_t r = a.length();
  for (unsigned long subset = 0; subset < (1UL << r); ++subset) {
    std::vector<Block> left, right;
    for (std::size_t i = 0; i < r; ++i) ((subset >> i) & 1 ? left : right).push_back(a.blocks()[i]);
    out.add_term({to_rgword(standardize(SetPartition(left))), to_rgword(standardize(SetPartition(right)))}, 1);
  }
  return out;
}

SetPartition permute_blocks(const SetPartition& a, const Permutation& rho) {
  Permutation inv = rho.inverse();
  std::vector<Block> blocks;
  for (const auto& b : a.blocks()) {
    Block moved;
    for (int i : b) moved.push_back(inv(i));
    blocks.push_back(std::move(moved));
  }
  return SetPartition(std::move(blocks));
}

}  // namespace ncsym::oracle
