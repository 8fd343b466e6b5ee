#include "ncsym/sym.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ncsym/error.hpp"
#include "ncsym/sparse.hpp"

namespace ncsym {

SymElement multiply(const SymElement& f, const SymElement& g) {
  require_same_alphabet(f.alphabet(), g.alphabet());
  // Lift over the unbounded alphabet: truncating the factors first would
  // lose nothing, but truncating the product must happen last.
  auto lift = iota(f.truncated(Alphabet::infinite()));
  auto lift_g = iota(g.truncated(Alphabet::infinite()));
  return abelianize(multiply(lift, lift_g)).truncated(f.alphabet());
}

SymElement operator*(const SymElement& f, const SymElement& g) { return multiply(f, g); }

namespace {

// Distinct sub-multisets theta of mu, paired with their complements.
void split_multiset(const std::vector<int>& parts, std::size_t i, std::vector<int>& left,
                    std::vector<int>& right, SymTensor& out, const Rational& c) {
  if (i == parts.size()) {
    accumulate(out, std::make_pair(IntPartition(left), IntPartition(right)), c);
    return;
  }
  std::size_t j = i;
  while (j < parts.size() && parts[j] == parts[i]) ++j;
  std::size_t run = j - i;
  for (std::size_t k = 0; k <= run; ++k) {
    left.insert(left.end(), k, parts[i]);
    right.insert(right.end(), run - k, parts[i]);
    split_multiset(parts, j, left, right, out, c);
    left.resize(left.size() - k);
    right.resize(right.size() - (run - k));
  }
}

}  // namespace

SymTensor coproduct(const SymElement& f) {
  SymTensor out;
  for (const auto& [mu, c] : f.terms()) {
    std::vector<int> left, right;
    split_multiset(mu.parts(), 0, left, right, out, c);
  }
  return out;
}

Rational counit(const SymElement& f) { return f.coefficient(IntPartition{}); }

SymTensor abelianize(const Tensor& t) {
  if (t.arity() != 2) throw PreconditionError("abelianize expects a 2-tensor");
  SymTensor out;
  for (const auto& [key, c] : t.terms()) {
    IntPartition a = word_shape(key[0]);
    IntPartition b = word_shape(key[1]);
    Rational scale = c * Rational(to_bigint(mu_factorial(a)) * to_bigint(mu_factorial(b)));
    accumulate(out, std::make_pair(a, b), scale);
  }
  return out;
}

Polynomial expand_oracle(const SymElement& f, int k) {
  Polynomial out;
  for (const auto& [mu, c] : f.terms()) {
    if (mu.length() > static_cast<std::size_t>(k)) continue;
    std::vector<int> exps(static_cast<std::size_t>(k), 0);
    std::copy(mu.parts().begin(), mu.parts().end(), exps.begin());
    std::sort(exps.begin(), exps.end());
    do {
      accumulate(out, exps, c);
    } while (std::next_permutation(exps.begin(), exps.end()));
  }
  return out;
}

Polynomial multiply(const Polynomial& p, const Polynomial& q, int k) {
  Polynomial out;
  std::vector<int> e(static_cast<std::size_t>(k));
  for (const auto& [a, x] : p)
    for (const auto& [b, y] : q) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
      accumulate(out, e, x * y);
    }
  return out;
}

SymElement collect_symmetric(const Polynomial& p, int k, Alphabet n) {
  SymElement out(n);
  std::map<std::vector<int>, std::size_t> orbit_sizes;
  for (const auto& [e, c] : p) {
    if (e.size() != static_cast<std::size_t>(k)) throw PreconditionError("exponent vector length");
    std::vector<int> sorted = e;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    auto it = p.find(sorted);
    if (it == p.end() || it->second != c) throw InternalError("polynomial is not symmetric");
    ++orbit_sizes[sorted];
    if (sorted != e) continue;
    std::vector<int> parts;
    for (int x : sorted)
      if (x > 0) parts.push_back(x);
    out.add_term(IntPartition(std::move(parts)), c);
  }
  for (const auto& [key, seen] : orbit_sizes) {
    std::vector<int> e = key;
    std::size_t orbit = 0;
    std::sort(e.begin(), e.end());
    do ++orbit;
    while (std::next_permutation(e.begin(), e.end()));
    if (orbit != seen) throw InternalError("polynomial is not symmetric");
  }
  return out;
}

}  // namespace ncsym
