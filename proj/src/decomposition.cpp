#include "ncsym/decomposition.hpp"

#include <map>
#include <mutex>
#include <set>

#include "ncsym/error.hpp"
#include "ncsym/linalg.hpp"
#include "ncsym/series.hpp"
#include "ncsym/sparse.hpp"
#include "ncsym/sym.hpp"

namespace ncsym {

namespace {

// Columns of a matrix whose rows are indexed by arbitrary ordered keys.
template <class Key>
Matrix assemble(const std::vector<std::map<Key, Rational>>& columns) {
  std::map<Key, std::size_t> row_index;
  for (const auto& col : columns)
    for (const auto& [key, c] : col) row_index.try_emplace(key, 0);
  std::size_t r = 0;
  for (auto& [key, idx] : row_index) idx = r++;
  Matrix m(row_index.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [key, c] : columns[j]) m(row_index.at(key), j) = c;
  return m;
}

void require_unbounded(const NCSymElement& h, const char* what) {
  if (!h.alphabet().is_infinite())
    throw PreconditionError(std::string(what) + " is only defined over the unbounded alphabet");
}

using MixedTensor = std::map<std::pair<RGWord, IntPartition>, Rational>;

// (id (x) ab) Delta(h).
MixedTensor id_ab_coproduct(const NCSymElement& h) {
  MixedTensor out;
  Tensor t = coproduct(h);
  for (const auto& [key, c] : t.terms()) {
    IntPartition right = word_shape(key[1]);
    accumulate(out, std::make_pair(key[0], right), c * Rational(to_bigint(mu_factorial(right))));
  }
  return out;
}

}  // namespace

std::size_t rank_of(const std::vector<NCSymElement>& elements) {
  std::vector<std::map<RGWord, Rational>> rows;
  rows.reserve(elements.size());
  for (const auto& e : elements) rows.emplace_back(e.terms().begin(), e.terms().end());
  // Rank is invariant under transposition; elements become columns.
  return rank(assemble(rows));
}

DegreeBasis::DegreeBasis(int degree, std::vector<NCSymElement> elements, std::optional<IntPartition> shape)
    : degree_(degree), elements_(std::move(elements)), shape_(std::move(shape)) {
  for (const auto& e : elements_)
    if (e.homogeneous_degree() != degree_)
      throw PreconditionError("basis element is not homogeneous of degree " + std::to_string(degree_));
  if (rank_of(elements_) != elements_.size())
    throw InternalError("basis elements are linearly dependent");
}

bool is_in_hopf_kernel(const NCSymElement& h) {
  require_unbounded(h, "is_in_hopf_kernel");
  MixedTensor expected;
  for (const auto& [w, c] : h.terms()) expected.emplace(std::make_pair(w, IntPartition{}), c);
  return id_ab_coproduct(h) == expected;
}

DegreeBasis hopf_kernel_basis(const IntPartition& mu) {
  static std::mutex mutex;
  static std::map<IntPartition, DegreeBasis> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(mu); it != cache.end()) return it->second;
  }
  const Alphabet inf = Alphabet::infinite();
  std::vector<RGWord> words;
  for (const auto& a : setpartitions_of_shape(mu)) words.push_back(to_rgword(a));

  // The h (x) 1 part of (id (x) ab) Delta(h) is h itself; everything else
  // must cancel.
  std::vector<MixedTensor> columns;
  for (const auto& w : words) {
    MixedTensor col = id_ab_coproduct(NCSymElement::monomial(w, inf));
    col.erase(std::make_pair(w, IntPartition{}));
    columns.push_back(std::move(col));
  }
  std::vector<NCSymElement> elements;
  for (const auto& v : nullspace(assemble(columns))) {
    NCSymElement h(inf);
    for (std::size_t j = 0; j < v.size(); ++j) h.add_term(words[j], v[j]);
    elements.push_back(std::move(h));
  }
  DegreeBasis basis(mu.weight(), std::move(elements), mu);
  std::lock_guard lock(mutex);
  cache.emplace(mu, basis);
  return basis;
}

Primitive compute_primitive(const SetPartition& a) {
  if (!a.is_standard()) throw PreconditionError("compute_primitive: ground set must be {1..d}");
  if (!is_atomic(a)) throw PreconditionError("compute_primitive: " + to_string(a) + " is not atomic");
  const Alphabet inf = Alphabet::infinite();
  RGWord target = to_rgword(a);
  if (a.length() == 1) return Primitive{NCSymElement::monomial(target, inf), 0};

  std::vector<RGWord> words;
  for (const auto& b : setpartitions_of_shape(a.shape()))
    if (!is_atomic(b)) words.push_back(to_rgword(b));
  words.push_back(target);

  std::vector<std::map<Tensor::Key, Rational>> columns;
  for (const auto& w : words) columns.push_back(reduced_coproduct(NCSymElement::monomial(w, inf)).terms());
  EchelonForm e = row_reduce(assemble(columns));

  std::size_t last = words.size() - 1;
  if (e.free_columns.empty() || e.free_columns.back() != last)
    throw InternalError("no primitive with the required support exists for " + to_string(a));

  NCSymElement prim(inf);
  prim.add_term(target, 1);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) prim.add_term(words[e.pivots[r]], -e.reduced(r, last));

  if (!reduced_coproduct(prim).is_zero())
    throw InternalError("computed element for " + to_string(a) + " is not primitive");
  Rational alpha_sum = 0;
  for (const auto& [w, c] : prim.terms())
    if (w != target) alpha_sum -= c;
  if (alpha_sum != 1) throw InternalError("zero-sum property fails for " + to_string(a));
  return Primitive{std::move(prim), e.free_columns.size() - 1};
}

std::vector<RGWord> cosym_word_basis(int d, const Alphabet& n) {
  std::vector<RGWord> out;
  for (const auto& w : enumerate_rgwords(d, n))
    if (is_tail_free(w)) out.push_back(w);
  return out;
}

NCSymElement cosym_element(const RGWord& w, const Alphabet& n) {
  auto dec = bimodal_decompose(w);
  if (!dec.tail.empty()) throw PreconditionError("cosym_element: " + to_string(w) + " is not tail-free");
  NCSymElement out = NCSymElement::one(n);
  for (const auto& f : dec.factors) out = multiply(out, NCSymElement::monomial(f, n));
  return out;
}

SetPartition phi(const std::vector<RGWord>& factors, const IntPartition& mu, const Alphabet& n) {
  for (const auto& f : factors)
    if (!is_bimodal(f)) throw PreconditionError("phi: " + to_string(f) + " is not bimodal");
  RGWord head = concat(factors);
  auto dec = bimodal_decompose(head);
  if (!dec.tail.empty() || dec.factors != factors)
    throw PreconditionError("phi: factors do not form a tail-free bimodal decomposition");
  if (!n.admits(mu.length())) throw PreconditionError("phi: partition has more than n parts");
  if (!n.admits(static_cast<std::size_t>(head.max_letter())))
    throw PreconditionError("phi: a factor uses a letter larger than n");
  return from_rgword(concat(head, convex_word(mu)));
}

TensorIsoReport verify_tensor_iso(int d, const Alphabet& n) {
  if (d < 0) throw PreconditionError("degree must be nonnegative");
  TensorIsoReport report;
  report.degree = d;
  report.alphabet = n;
  report.expected_dim = bell_restricted(d, n);

  std::vector<NCSymElement> candidates;
  bool kernel_shapes_ok = true;
  if (n.is_infinite()) {
    // No set partition of [d] has more than d blocks, so the unbounded
    // alphabet never truncates here.
    ShapePoly expected = shape_hilb_cosym_inf(d);
    for (int k = 0; k <= d; ++k) {
      std::vector<NCSymElement> coinv;
      for (const auto& mu : enumerate_partitions(k)) {
        DegreeBasis b = hopf_kernel_basis(mu);
        std::size_t want = expected.coefficient(mu).get_ui();
        report.kernel_shapes.push_back({k, mu, want, b.dimension()});
        kernel_shapes_ok = kernel_shapes_ok && want == b.dimension();
        coinv.insert(coinv.end(), b.elements().begin(), b.elements().end());
      }
      for (const auto& nu : enumerate_partitions(d - k)) {
        NCSymElement lam = m_bold(nu, n);
        for (const auto& c : coinv) candidates.push_back(multiply(c, lam));
      }
    }
  } else {
    std::set<RGWord> images;
    std::size_t phi_count = 0;
    for (int k = 0; k <= d; ++k) {
      for (const auto& w : cosym_word_basis(k, n)) {
        NCSymElement c = cosym_element(w, n);
        auto factors = bimodal_decompose(w).factors;
        for (const auto& nu : enumerate_partitions(d - k, n.cap(static_cast<std::size_t>(d)))) {
          NCSymElement candidate = multiply(c, m_bold(nu, n));
          RGWord image = to_rgword(phi(factors, nu, n));
          images.insert(image);
          ++phi_count;
          if (candidate.is_zero() || leading_term(candidate).word != image) report.leading_terms_match = false;
          candidates.push_back(std::move(candidate));
        }
      }
    }
    report.phi_bijective = phi_count == report.expected_dim && images.size() == report.expected_dim;
  }
  report.candidate_count = candidates.size();
  report.rank = rank_of(candidates);
  report.passed = kernel_shapes_ok && report.phi_bijective && report.leading_terms_match &&
                  report.candidate_count == report.expected_dim && report.rank == report.expected_dim;
  return report;
}

}  // namespace ncsym
