#pragma once

#include <map>

#include "ncsym/rational.hpp"

namespace ncsym {

/// Adds c to terms[key], erasing the entry when it cancels to zero.
template <class Key, class Compare>
void accumulate(std::map<Key, Rational, Compare>& terms, const Key& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace ncsym
