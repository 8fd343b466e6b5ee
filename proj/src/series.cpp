#include "ncsym/series.hpp"

#include <map>

#include "ncsym/set_partition.hpp"
#include "ncsym/sparse.hpp"

namespace ncsym {

TruncSeries::TruncSeries(int precision) : precision_(precision) {
  if (precision < 0) throw PreconditionError("series precision must be nonnegative");
  coefficients_.resize(static_cast<std::size_t>(precision) + 1);
}

TruncSeries::TruncSeries(int precision, std::vector<Rational> coefficients) : TruncSeries(precision) {
  for (std::size_t i = 0; i < coefficients.size() && i < coefficients_.size(); ++i)
    coefficients_[i] = std::move(coefficients[i]);
}

TruncSeries TruncSeries::one(int precision) { return monomial(0, 1, precision); }

TruncSeries TruncSeries::monomial(int k, const Rational& c, int precision) {
  TruncSeries s(precision);
  if (k >= 0 && k <= precision) s[k] = c;
  return s;
}

TruncSeries TruncSeries::reciprocal() const {
  if (coefficients_[0] == 0) throw PreconditionError("reciprocal of a series without constant term");
  TruncSeries inv(precision_);
  inv[0] = 1 / coefficients_[0];
  for (int d = 1; d <= precision_; ++d) {
    Rational acc = 0;
    for (int i = 1; i <= d; ++i) acc += (*this)[i] * inv[d - i];
    inv[d] = -acc * inv[0];
  }
  return inv;
}

Rational TruncSeries::sum() const {
  Rational s = 0;
  for (const auto& c : coefficients_) s += c;
  return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
  if (other.precision_ < precision_) *this = TruncSeries(other.precision_, coefficients_);
  for (int d = 0; d <= precision_; ++d) (*this)[d] += other[d];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
  if (other.precision_ < precision_) *this = TruncSeries(other.precision_, coefficients_);
  for (int d = 0; d <= precision_; ++d) (*this)[d] -= other[d];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& other) {
  int prec = std::min(precision_, other.precision_);
  TruncSeries out(prec);
  for (int i = 0; i <= prec; ++i) {
    if ((*this)[i] == 0) continue;
    for (int j = 0; i + j <= prec; ++j) out[i + j] += (*this)[i] * other[j];
  }
  return *this = std::move(out);
}

TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
TruncSeries operator*(TruncSeries a, const TruncSeries& b) { return a *= b; }

BigInt ShapePoly::coefficient(const IntPartition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void ShapePoly::add_term(const IntPartition& mu, const BigInt& c) {
  if (mu.weight() > max_weight_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ShapePoly ShapePoly::weight_component(int d) const {
  ShapePoly out(max_weight_);
  for (const auto& [mu, c] : terms_)
    if (mu.weight() == d) out.terms_.emplace(mu, c);
  return out;
}

TruncSeries ShapePoly::specialize() const {
  TruncSeries s(max_weight_);
  for (const auto& [mu, c] : terms_) s[mu.weight()] += Rational(c);
  return s;
}

ShapePoly& ShapePoly::operator*=(const ShapePoly& other) {
  ShapePoly out(std::min(max_weight_, other.max_weight_));
  for (const auto& [a, x] : terms_)
    for (const auto& [b, y] : other.terms_)
      if (a.weight() + b.weight() <= out.max_weight_) out.add_term(union_of(a, b), x * y);
  return *this = std::move(out);
}

ShapePoly& ShapePoly::operator+=(const ShapePoly& other) {
  for (const auto& [mu, c] : other.terms_) add_term(mu, c);
  return *this;
}

ShapePoly operator*(ShapePoly a, const ShapePoly& b) { return a *= b; }

NegativeCoefficient::NegativeCoefficient(int degree, const Rational& value)
    : Error("negative_coefficient", "coinvariant Hilbert series has coefficient " + to_string(value) +
                                        " < 0 at degree " + std::to_string(degree)),
      degree_(degree) {}

TruncSeries hilb_sym(const Alphabet& n, int precision) {
  TruncSeries out = TruncSeries::one(precision);
  for (int i = 1; i <= static_cast<int>(n.cap(static_cast<std::size_t>(precision))); ++i)
    out *= (TruncSeries::one(precision) - TruncSeries::monomial(i, 1, precision)).reciprocal();
  return out;
}

TruncSeries coinvariant_poly(const Alphabet& n) {
  if (n.is_infinite()) throw PreconditionError("coinvariant polynomial needs a finite alphabet");
  int size = static_cast<int>(n.size());
  int degree = size * (size - 1) / 2;
  TruncSeries out = TruncSeries::one(degree);
  for (int i = 1; i <= size; ++i) {
    TruncSeries factor(degree);
    for (int j = 0; j < i; ++j) factor[j] = 1;
    out *= factor;
  }
  return out;
}

TruncSeries hilb_ncsym(const Alphabet& n, int precision) {
  TruncSeries out = TruncSeries::one(precision);
  TruncSeries denominators = TruncSeries::one(precision);
  for (int k = 1; k <= static_cast<int>(n.cap(static_cast<std::size_t>(precision))); ++k) {
    denominators *= (TruncSeries::one(precision) - TruncSeries::monomial(1, k, precision)).reciprocal();
    out += TruncSeries::monomial(k, 1, precision) * denominators;
  }
  return out;
}

TruncSeries hilb_cosym(const Alphabet& n, int precision) {
  TruncSeries out = hilb_ncsym(n, precision);
  for (int i = 1; i <= static_cast<int>(n.cap(static_cast<std::size_t>(precision))); ++i)
    out *= TruncSeries::one(precision) - TruncSeries::monomial(i, 1, precision);
  for (int d = 0; d <= precision; ++d)
    if (out[d] < 0) throw NegativeCoefficient(d, out[d]);
  return out;
}

namespace {

// Shape markers with rational coefficients, for exponential generating functions.
using RationalShapes = std::map<IntPartition, Rational>;

RationalShapes multiply(const RationalShapes& a, const RationalShapes& b, int max_weight) {
  RationalShapes out;
  for (const auto& [x, c] : a)
    for (const auto& [y, e] : b)
      if (x.weight() + y.weight() <= max_weight) accumulate(out, union_of(x, y), c * e);
  return out;
}

// sum_{m=0}^{max_terms} X^m / m! with X = sum_{k=1}^{D} q_k / k!.
RationalShapes egf_exponential(int max_weight, std::size_t max_terms) {
  RationalShapes x;
  for (int k = 1; k <= max_weight; ++k) x.emplace(IntPartition{k}, Rational(BigInt(1), factorial(static_cast<unsigned>(k))));
  RationalShapes power{{IntPartition{}, Rational(1)}};
  RationalShapes total = power;
  for (std::size_t m = 1; m <= max_terms && !power.empty(); ++m) {
    power = multiply(power, x, max_weight);
    for (auto& [mu, c] : power) c /= Rational(static_cast<unsigned long>(m));
    for (const auto& [mu, c] : power) accumulate(total, mu, c);
  }
  return total;
}

// Multiplies each weight-d coefficient by d!; every result must be integral.
ShapePoly to_ordinary(const RationalShapes& egf, int max_weight) {
  ShapePoly out(max_weight);
  for (const auto& [mu, c] : egf) {
    Rational v = c * Rational(factorial(static_cast<unsigned>(mu.weight())));
    v.canonicalize();
    if (v.get_den() != 1) throw InternalError("non-integral shape coefficient for q_" + to_string(mu));
    out.add_term(mu, v.get_num());
  }
  return out;
}

}  // namespace

ShapePoly shape_hilb_ncsym(int d, const Alphabet& n) {
  if (d < 0) throw PreconditionError("degree must be nonnegative");
  ShapePoly counted(d);
  for (const auto& a : enumerate_setpartitions(d, n)) counted.add_term(a.shape(), 1);

  ShapePoly from_egf =
      to_ordinary(egf_exponential(d, n.cap(static_cast<std::size_t>(d))), d).weight_component(d);
  if (!(from_egf == counted))
    throw InternalError("shape enumerator disagrees with its generating function at d = " +
                        std::to_string(d));
  return counted;
}

ShapePoly shape_hilb_cosym_inf(int max_weight) {
  ShapePoly ncsym = to_ordinary(egf_exponential(max_weight, static_cast<std::size_t>(max_weight)), max_weight);
  ShapePoly product(max_weight);
  product.add_term(IntPartition{}, 1);
  for (int i = 1; i <= max_weight; ++i) {
    ShapePoly factor(max_weight);
    factor.add_term(IntPartition{}, 1);
    factor.add_term(IntPartition{i}, -1);
    product *= factor;
  }
  return ncsym * product;
}

ShapePoly shape_hilb_sym(int max_weight) {
  ShapePoly out(max_weight);
  out.add_term(IntPartition{}, 1);
  for (int i = 1; i <= max_weight; ++i) {
    ShapePoly geometric(max_weight);
    std::vector<int> parts;
    for (int j = 0; j * i <= max_weight; ++j) {
      geometric.add_term(IntPartition(parts), 1);
      parts.push_back(i);
    }
    out *= geometric;
  }
  return out;
}

}  // namespace ncsym
