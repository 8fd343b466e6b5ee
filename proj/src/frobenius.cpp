#include "ncsym/frobenius.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "ncsym/error.hpp"
#include "ncsym/permutation.hpp"
#include "ncsym/rg_word.hpp"
#include "ncsym/set_partition.hpp"
#include "ncsym/sparse.hpp"

namespace ncsym {

PExpansion PExpansion::constant(const Rational& c) {
  PExpansion f;
  f.add_term(IntPartition{}, c);
  return f;
}

PExpansion PExpansion::power_sum(const IntPartition& mu) {
  PExpansion f;
  f.add_term(mu, 1);
  return f;
}

Rational PExpansion::coefficient(const IntPartition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PExpansion::add_term(const IntPartition& mu, const Rational& c) { accumulate(terms_, mu, c); }

PExpansion PExpansion::homogeneous_component(int d) const {
  PExpansion out;
  for (const auto& [mu, c] : terms_)
    if (mu.weight() == d) out.terms_.emplace(mu, c);
  return out;
}

PExpansion& PExpansion::operator+=(const PExpansion& other) {
  for (const auto& [mu, c] : other.terms_) accumulate(terms_, mu, c);
  return *this;
}

PExpansion& PExpansion::operator-=(const PExpansion& other) {
  for (const auto& [mu, c] : other.terms_) accumulate(terms_, mu, Rational(-c));
  return *this;
}

PExpansion& PExpansion::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mu, x] : terms_) x *= c;
  return *this;
}

PExpansion operator+(PExpansion a, const PExpansion& b) { return a += b; }
PExpansion operator-(PExpansion a, const PExpansion& b) { return a -= b; }
PExpansion operator*(const Rational& c, PExpansion a) { return a *= c; }

PExpansion operator*(const PExpansion& f, const PExpansion& g) {
  PExpansion out;
  for (const auto& [a, x] : f.terms())
    for (const auto& [b, y] : g.terms()) out.add_term(union_of(a, b), x * y);
  return out;
}

PExpansion h_in_p(int k) {
  if (k < 0) throw PreconditionError("h_k needs k >= 0");
  PExpansion out;
  for (const auto& lambda : enumerate_partitions(k))
    out.add_term(lambda, Rational(BigInt(1), to_bigint(z_constant(lambda))));
  return out;
}

namespace {

// p_k[g]: every p_j in g becomes p_{jk}; rational coefficients are constants.
PExpansion adams(int k, const PExpansion& g) {
  PExpansion out;
  for (const auto& [nu, c] : g.terms()) {
    std::vector<int> parts = nu.parts();
    for (int& p : parts) p *= k;
    out.add_term(IntPartition(std::move(parts)), c);
  }
  return out;
}

}  // namespace

PExpansion plethysm(const PExpansion& f, const PExpansion& g) {
  PExpansion out;
  std::map<int, PExpansion> adams_cache;
  for (const auto& [lambda, c] : f.terms()) {
    PExpansion term = PExpansion::constant(c);
    for (int part : lambda.parts()) {
      auto it = adams_cache.find(part);
      if (it == adams_cache.end()) it = adams_cache.emplace(part, adams(part, g)).first;
      term = term * it->second;
    }
    out += term;
  }
  return out;
}

PExpansion frob_shape(const IntPartition& mu) {
  PExpansion out = PExpansion::constant(1);
  auto a = mu.multiplicities();
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    out = out * plethysm(h_in_p(a[i]), h_in_p(static_cast<int>(i)));
  }
  return out;
}

namespace {

IntPartition from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  std::vector<int> parts;
  int len = static_cast<int>(beta.size());
  for (int i = 0; i < len; ++i) {
    int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return IntPartition(std::move(parts));
}

BigInt mn_character(const IntPartition& lambda, const IntPartition& mu);

BigInt cached_character(const IntPartition& lambda, const IntPartition& mu) {
  static std::mutex mutex;
  static std::map<std::pair<IntPartition, IntPartition>, BigInt> cache;
  auto key = std::make_pair(lambda, mu);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  BigInt value = mn_character(lambda, mu);
  std::lock_guard lock(mutex);
  cache.emplace(std::move(key), value);
  return value;
}

// Removes border strips of size mu_1 by sliding a bead of the beta-set down
// by mu_1; the sign counts the beads jumped over.
BigInt mn_character(const IntPartition& lambda, const IntPartition& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  int k = mu[0];
  IntPartition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
  int len = static_cast<int>(lambda.length());
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i)
    beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);
  BigInt total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i];
    int target = b - k;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int x : beta)
      if (x > target && x < b) ++between;
    std::vector<int> moved = beta;
    moved[i] = target;
    BigInt chi = cached_character(from_beta(std::move(moved)), rest);
    if (between % 2)
      total -= chi;
    else
      total += chi;
  }
  return total;
}

}  // namespace

BigInt character(const IntPartition& lambda, const IntPartition& mu) {
  if (lambda.weight() != mu.weight()) throw PreconditionError("character: weights differ");
  return cached_character(lambda, mu);
}

SchurExpansion p_to_schur(const PExpansion& f) {
  SchurExpansion out;
  if (f.is_zero()) return out;
  int d = f.terms().begin()->first.weight();
  for (const auto& [mu, c] : f.terms())
    if (mu.weight() != d) throw PreconditionError("p_to_schur needs a homogeneous input");
  for (const auto& lambda : enumerate_partitions(d)) {
    Rational coeff = 0;
    for (const auto& [mu, c] : f.terms()) coeff += c * Rational(character(lambda, mu));
    accumulate(out, lambda, coeff);
  }
  return out;
}

BigInt schur_dim(const IntPartition& lambda) {
  std::vector<int> conj(lambda.empty() ? 0 : static_cast<std::size_t>(lambda[0]), 0);
  for (int p : lambda.parts())
    for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  BigInt hooks = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      int arm = lambda[i] - j - 1;
      int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      hooks *= arm + leg + 1;
    }
  return factorial(static_cast<unsigned>(lambda.weight())) / hooks;
}

namespace {

bool is_fixed(const RGWord& w, const Permutation& sigma_inv) {
  // Positions of sigma(A_k) are the j with sigma^{-1}(j) in A_k.
  std::vector<int> image(w.size());
  for (std::size_t j = 0; j < w.size(); ++j)
    image[j] = w[static_cast<std::size_t>(sigma_inv(static_cast<int>(j + 1)) - 1)];
  std::map<int, int> label;
  for (std::size_t j = 0; j < image.size(); ++j) {
    auto [it, inserted] = label.try_emplace(image[j], static_cast<int>(label.size()) + 1);
    if (it->second != w[j]) return false;
  }
  return true;
}

}  // namespace

std::uint64_t fixed_points(int d, const IntPartition& mu, const Alphabet& n) {
  if (mu.weight() != d) throw PreconditionError("fixed_points: mu must be a partition of d");
  Permutation sigma_inv = representative_of_type(mu).inverse();
  std::uint64_t count = 0;
  for (const auto& w : enumerate_rgwords(d, n))
    if (is_fixed(w, sigma_inv)) ++count;
  return count;
}

std::uint64_t fixed_points_of_shape(const IntPartition& lambda, const IntPartition& mu) {
  if (lambda.weight() != mu.weight()) throw PreconditionError("fixed_points_of_shape: weights differ");
  Permutation sigma_inv = representative_of_type(mu).inverse();
  std::uint64_t count = 0;
  for (const auto& a : setpartitions_of_shape(lambda))
    if (is_fixed(to_rgword(a), sigma_inv)) ++count;
  return count;
}

}  // namespace ncsym
