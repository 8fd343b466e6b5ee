#pragma once

#include <json.hpp>

#include "ncsym/frobenius.hpp"
#include "ncsym/ncsym.hpp"
#include "ncsym/series.hpp"
#include "ncsym/sym.hpp"

namespace ncsym {

/// Objects keep insertion order so that output follows the canonical term order.
using Json = nlohmann::ordered_json;

// {"alphabet": "3" | "inf", "terms": [{"sp": "1,3/2", "coeff": "1/2"}, ...]}
Json to_json(const NCSymElement& f);
NCSymElement ncsym_from_json(const Json& j);

// {"alphabet": ..., "terms": [{"partition": "2,1", "coeff": "3"}, ...]}
Json to_json(const SymElement& f);
SymElement sym_from_json(const Json& j);

// {"alphabet": ..., "arity": r, "terms": [{"sp": ["1", "1/2"], "coeff": "1"}, ...]}
Json to_json(const Tensor& t);
Tensor tensor_from_json(const Json& j);

// {"alphabet": ..., "terms": [{"left": "2", "right": "1", "coeff": "1"}, ...]}
Json to_json(const SymTensor& t, const Alphabet& n);

// ["1", "0", "0", "2", ...]
Json to_json(const TruncSeries& s);

// {"partition": "coeff", ...}
Json to_json(const ShapePoly& p);
Json to_json(const SchurExpansion& s);
Json to_json(const PExpansion& f);

}  // namespace ncsym
