#include "ncsym/json_io.hpp"

#include <string>

#include "ncsym/error.hpp"

namespace ncsym {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string text(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

Alphabet alphabet_of(const Json& j) {
  const Json& v = field(j, "alphabet");
  if (v.is_number_unsigned()) return Alphabet::finite(v.get<std::size_t>());
  if (!v.is_string()) throw ParseError("field \"alphabet\" must be a string");
  return parse_alphabet(v.get<std::string>());
}

const Json& terms_of(const Json& j) {
  const Json& t = field(j, "terms");
  if (!t.is_array()) throw ParseError("field \"terms\" must be an array");
  return t;
}

// Coefficients may be given as strings or as JSON integers.
Rational coeff_of(const Json& term) {
  const Json& c = field(term, "coeff");
  if (c.is_number_integer()) return Rational(c.get<long>());
  if (!c.is_string()) throw ParseError("coefficient must be a string");
  return parse_rational(c.get<std::string>());
}

template <class Map>
Json partition_object(const Map& m) {
  Json out = Json::object();
  for (const auto& [mu, c] : m) out[to_string(mu)] = c.get_str();
  return out;
}

}  // namespace

Json to_json(const NCSymElement& f) {
  Json terms = Json::array();
  for (const auto& [w, c] : f.terms()) terms.push_back({{"sp", to_string(from_rgword(w))}, {"coeff", to_string(c)}});
  return {{"alphabet", to_string(f.alphabet())}, {"terms", std::move(terms)}};
}

NCSymElement ncsym_from_json(const Json& j) {
  NCSymElement f(alphabet_of(j));
  for (const auto& term : terms_of(j)) {
    SetPartition a = parse_setpartition(text(term, "sp"));
    if (!a.is_standard()) throw ParseError("set partition " + to_string(a) + " is not on {1..d}");
    f.add_term(to_rgword(a), coeff_of(term));
  }
  return f;
}

Json to_json(const SymElement& f) {
  Json terms = Json::array();
  for (const auto& [mu, c] : f.terms()) terms.push_back({{"partition", to_string(mu)}, {"coeff", to_string(c)}});
  return {{"alphabet", to_string(f.alphabet())}, {"terms", std::move(terms)}};
}

SymElement sym_from_json(const Json& j) {
  SymElement f(alphabet_of(j));
  for (const auto& term : terms_of(j)) f.add_term(parse_partition(text(term, "partition")), coeff_of(term));
  return f;
}

Json to_json(const Tensor& t) {
  Json terms = Json::array();
  for (const auto& [key, c] : t.terms()) {
    Json sps = Json::array();
    for (const auto& w : key) sps.push_back(to_string(from_rgword(w)));
    terms.push_back({{"sp", std::move(sps)}, {"coeff", to_string(c)}});
  }
  return {{"alphabet", to_string(t.alphabet())}, {"arity", t.arity()}, {"terms", std::move(terms)}};
}

Tensor tensor_from_json(const Json& j) {
  const Json& arity = field(j, "arity");
  if (!arity.is_number_unsigned()) throw ParseError("field \"arity\" must be a nonnegative integer");
  Tensor t(alphabet_of(j), arity.get<std::size_t>());
  for (const auto& term : terms_of(j)) {
    const Json& sps = field(term, "sp");
    if (!sps.is_array() || sps.size() != t.arity()) throw ParseError("tensor term has the wrong arity");
    Tensor::Key key;
    for (const auto& s : sps) {
      if (!s.is_string()) throw ParseError("tensor factor must be a string");
      SetPartition a = parse_setpartition(s.get<std::string>());
      if (!a.is_standard()) throw ParseError("set partition " + to_string(a) + " is not on {1..d}");
      key.push_back(to_rgword(a));
    }
    t.add_term(key, coeff_of(term));
  }
  return t;
}

Json to_json(const SymTensor& t, const Alphabet& n) {
  Json terms = Json::array();
  for (const auto& [key, c] : t)
    terms.push_back({{"left", to_string(key.first)}, {"right", to_string(key.second)}, {"coeff", to_string(c)}});
  return {{"alphabet", to_string(n)}, {"terms", std::move(terms)}};
}

Json to_json(const TruncSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coefficients()) out.push_back(to_string(c));
  return out;
}

Json to_json(const ShapePoly& p) { return partition_object(p.terms()); }

Json to_json(const SchurExpansion& s) {
  Json out = Json::object();
  for (const auto& [mu, c] : s) out[to_string(mu)] = to_string(c);
  return out;
}

Json to_json(const PExpansion& f) {
  Json out = Json::object();
  for (const auto& [mu, c] : f.terms()) out[to_string(mu)] = to_string(c);
  return out;
}

}  // namespace ncsym
