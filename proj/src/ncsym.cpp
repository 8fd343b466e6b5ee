#include "ncsym/ncsym.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "ncsym/error.hpp"
#include "ncsym/sparse.hpp"

namespace ncsym {

NCSymElement NCSymElement::monomial(const RGWord& w, Alphabet n) {
  NCSymElement f(n);
  f.add_term(w, 1);
  return f;
}

NCSymElement NCSymElement::monomial(const SetPartition& a, Alphabet n) {
  return monomial(to_rgword(a), n);
}

Rational NCSymElement::coefficient(const RGWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NCSymElement::add_term(const RGWord& w, const Rational& c) {
  if (!alphabet_.admits(static_cast<std::size_t>(w.max_letter()))) return;
  accumulate(terms_, w, c);
}

std::optional<int> NCSymElement::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  // Word order sorts by length first.
  auto first = terms_.begin()->first.size();
  auto last = terms_.rbegin()->first.size();
  if (first != last) return std::nullopt;
  return static_cast<int>(first);
}

NCSymElement NCSymElement::degree_component(int d) const {
  NCSymElement out(alphabet_);
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) == d) out.terms_.emplace(w, c);
  return out;
}

NCSymElement NCSymElement::shape_component(const IntPartition& mu) const {
  NCSymElement out(alphabet_);
  for (const auto& [w, c] : terms_)
    if (word_shape(w) == mu) out.terms_.emplace(w, c);
  return out;
}

NCSymElement& NCSymElement::operator+=(const NCSymElement& other) {
  require_same_alphabet(alphabet_, other.alphabet_);
  for (const auto& [w, c] : other.terms_) accumulate(terms_, w, c);
  return *this;
}

NCSymElement& NCSymElement::operator-=(const NCSymElement& other) {
  require_same_alphabet(alphabet_, other.alphabet_);
  for (const auto& [w, c] : other.terms_) accumulate(terms_, w, Rational(-c));
  return *this;
}

NCSymElement& NCSymElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

NCSymElement operator+(NCSymElement a, const NCSymElement& b) { return a += b; }
NCSymElement operator-(NCSymElement a, const NCSymElement& b) { return a -= b; }
NCSymElement operator*(const Rational& c, NCSymElement a) { return a *= c; }

namespace {

// Quasi-shuffles at the level of words, memoized: products are dominated by
// repeated shuffles of the same small index pairs.
std::vector<RGWord> shuffle_words(const RGWord& u, const RGWord& v) {
  static std::shared_mutex mutex;
  static std::map<std::pair<RGWord, RGWord>, std::vector<RGWord>> cache;
  auto key = std::make_pair(u, v);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::vector<RGWord> words;
  for (const auto& c : quasi_shuffle(from_rgword(u), from_rgword(v))) words.push_back(to_rgword(c));
  std::unique_lock lock(mutex);
  cache.emplace(std::move(key), words);
  return words;
}

// Letters relabelled by order of first appearance: standardization of the
// sub-partition they describe.
RGWord relabel(const std::vector<int>& letters) {
  std::map<int, int> label;
  std::vector<int> out;
  out.reserve(letters.size());
  for (int c : letters) {
    auto [it, inserted] = label.try_emplace(c, static_cast<int>(label.size()) + 1);
    out.push_back(it->second);
  }
  return RGWord(std::move(out));
}

// Sub-partitions selected by a block mask: (std(B), std(C)).
std::pair<RGWord, RGWord> split_by_mask(const RGWord& w, unsigned mask) {
  std::vector<int> left, right;
  for (int c : w.letters()) {
    if (mask & (1u << (c - 1)))
      left.push_back(c);
    else
      right.push_back(c);
  }
  return {relabel(left), relabel(right)};
}

// Delta(m_w), restricted to proper nonempty block subsets when `reduced`.
std::vector<std::pair<RGWord, RGWord>> coproduct_terms(const RGWord& w, bool reduced) {
  int r = w.max_letter();
  if (r >= 32) throw PreconditionError("coproduct: too many blocks");
  unsigned full = (1u << r) - 1;
  std::vector<std::pair<RGWord, RGWord>> out;
  for (unsigned mask = 0; mask <= full; ++mask) {
    if (reduced && (mask == 0 || mask == full)) continue;
    out.push_back(split_by_mask(w, mask));
  }
  return out;
}

Tensor coproduct_at_impl(const Tensor& t, std::size_t slot, bool reduced) {
  if (slot >= t.arity()) throw PreconditionError("coproduct_at: slot out of range");
  Tensor out(t.alphabet(), t.arity() + 1);
  for (const auto& [key, c] : t.terms()) {
    if (reduced && key[slot].empty())
      throw PreconditionError("reduced coproduct needs a factor with zero counit");
    for (auto& [left, right] : coproduct_terms(key[slot], reduced)) {
      Tensor::Key k;
      k.reserve(key.size() + 1);
      k.insert(k.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(slot));
      k.push_back(std::move(left));
      k.push_back(std::move(right));
      k.insert(k.end(), key.begin() + static_cast<std::ptrdiff_t>(slot) + 1, key.end());
      out.add_term(k, c);
    }
  }
  return out;
}

Tensor as_tensor(const NCSymElement& f) {
  Tensor t(f.alphabet(), 1);
  for (const auto& [w, c] : f.terms()) t.add_term({w}, c);
  return t;
}

}  // namespace

NCSymElement multiply(const NCSymElement& f, const NCSymElement& g) {
  require_same_alphabet(f.alphabet(), g.alphabet());
  NCSymElement out(f.alphabet());
  for (const auto& [u, a] : f.terms())
    for (const auto& [v, b] : g.terms()) {
      Rational ab = a * b;
      for (const auto& w : shuffle_words(u, v)) out.add_term(w, ab);
    }
  return out;
}

NCSymElement operator*(const NCSymElement& f, const NCSymElement& g) { return multiply(f, g); }

NCSymElement lie_bracket(const NCSymElement& f, const NCSymElement& g) {
  return multiply(f, g) - multiply(g, f);
}

Rational counit(const NCSymElement& f) { return f.coefficient(RGWord{}); }

Rational Tensor::coefficient(const Key& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Tensor::add_term(const Key& key, const Rational& c) {
  if (key.size() != arity_) throw PreconditionError("tensor key has the wrong arity");
  for (const auto& w : key)
    if (!alphabet_.admits(static_cast<std::size_t>(w.max_letter()))) return;
  accumulate(terms_, key, c);
}

Tensor& Tensor::operator+=(const Tensor& other) {
  require_same_alphabet(alphabet_, other.alphabet_);
  if (arity_ != other.arity_) throw PreconditionError("tensor arity mismatch");
  for (const auto& [k, c] : other.terms_) accumulate(terms_, k, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  require_same_alphabet(alphabet_, other.alphabet_);
  if (arity_ != other.arity_) throw PreconditionError("tensor arity mismatch");
  for (const auto& [k, c] : other.terms_) accumulate(terms_, k, Rational(-c));
  return *this;
}

Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }

Tensor tensor_product(const std::vector<NCSymElement>& factors) {
  if (factors.empty()) throw PreconditionError("tensor_product needs at least one factor");
  Alphabet n = factors.front().alphabet();
  for (const auto& f : factors) require_same_alphabet(n, f.alphabet());
  Tensor out(n, factors.size());
  Tensor::Key key(factors.size());
  auto rec = [&](auto&& self, std::size_t slot, const Rational& c) -> void {
    if (slot == factors.size()) {
      out.add_term(key, c);
      return;
    }
    for (const auto& [w, x] : factors[slot].terms()) {
      key[slot] = w;
      self(self, slot + 1, c * x);
    }
  };
  rec(rec, 0, Rational(1));
  return out;
}

Tensor tensor_multiply(const Tensor& x, const Tensor& y) {
  require_same_alphabet(x.alphabet(), y.alphabet());
  if (x.arity() != y.arity()) throw PreconditionError("tensor arity mismatch");
  Tensor out(x.alphabet(), x.arity());
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      std::vector<NCSymElement> slots;
      for (std::size_t i = 0; i < kx.size(); ++i)
        slots.push_back(multiply(NCSymElement::monomial(kx[i], x.alphabet()),
                                 NCSymElement::monomial(ky[i], x.alphabet())));
      Tensor prod = tensor_product(slots);
      for (const auto& [k, c] : prod.terms()) out.add_term(k, c * cx * cy);
    }
  return out;
}

Tensor coproduct(const NCSymElement& f) { return coproduct_at_impl(as_tensor(f), 0, false); }

Tensor coproduct_at(const Tensor& t, std::size_t slot) { return coproduct_at_impl(t, slot, false); }

Tensor reduced_coproduct(const NCSymElement& f) {
  if (counit(f) != 0) throw PreconditionError("reduced coproduct requires counit zero");
  return coproduct_at_impl(as_tensor(f), 0, true);
}

Tensor iterate_reduced(const NCSymElement& f, std::size_t r) {
  if (r == 0) throw PreconditionError("iterate_reduced: r must be at least 1");
  if (counit(f) != 0) throw PreconditionError("reduced coproduct requires counit zero");
  Tensor t = as_tensor(f);
  for (std::size_t i = 1; i < r; ++i) t = coproduct_at_impl(t, 0, true);
  return t;
}

NCSymElement place_act(const NCSymElement& f, const Permutation& rho) {
  NCSymElement out(f.alphabet());
  for (const auto& [w, c] : f.terms()) {
    if (w.size() != rho.size())
      throw PreconditionError("place_act: degree " + std::to_string(w.size()) +
                              " does not match permutation of size " + std::to_string(rho.size()));
    std::vector<int> letters(w.size());
    for (std::size_t j = 0; j < w.size(); ++j)
      letters[j] = w[static_cast<std::size_t>(rho(static_cast<int>(j + 1)) - 1)];
    out.add_term(relabel(letters), c);
  }
  return out;
}

BigInt shape_dimension(const IntPartition& mu) {
  BigInt denom = 1;
  for (int p : mu.parts()) denom *= factorial(static_cast<unsigned>(p));
  denom *= to_bigint(mu_factorial(mu));
  return factorial(static_cast<unsigned>(mu.weight())) / denom;
}

NCSymElement m_bold(const IntPartition& mu, Alphabet n) {
  NCSymElement out(n);
  if (!n.admits(mu.length())) return out;
  Rational c(BigInt(1), shape_dimension(mu) * to_bigint(mu_factorial(mu)));
  c.canonicalize();
  for (const auto& a : setpartitions_of_shape(mu)) out.add_term(to_rgword(a), c);
  return out;
}

NCSymElement iota(const SymElement& f) {
  NCSymElement out(f.alphabet());
  for (const auto& [mu, c] : f.terms()) out += c * m_bold(mu, f.alphabet());
  return out;
}

SymElement abelianize(const NCSymElement& f) {
  SymElement out(f.alphabet());
  for (const auto& [w, c] : f.terms()) {
    IntPartition mu = word_shape(w);
    out.add_term(mu, c * Rational(to_bigint(mu_factorial(mu))));
  }
  return out;
}

LeadingTerm leading_term(const NCSymElement& f) {
  if (f.is_zero()) throw PreconditionError("leading_term of zero");
  if (!f.homogeneous_degree()) throw PreconditionError("leading_term needs a homogeneous element");
  const auto& [w, c] = *f.terms().begin();
  return LeadingTerm{w, c};
}

}  // namespace ncsym
