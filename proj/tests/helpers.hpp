#pragma once

#include "ncsym/ncsym.hpp"
#include "ncsym/partition.hpp"
#include "ncsym/rg_word.hpp"
#include "ncsym/set_partition.hpp"
#include "ncsym/sym_element.hpp"

namespace testing {

inline ncsym::IntPartition P(const char* s) { return ncsym::parse_partition(s); }
inline ncsym::SetPartition SP(const char* s) { return ncsym::parse_setpartition(s); }
inline ncsym::RGWord W(const char* s) { return ncsym::parse_rgword(s); }

inline const ncsym::Alphabet kInf = ncsym::Alphabet::infinite();
inline ncsym::Alphabet fin(std::size_t n) { return ncsym::Alphabet::finite(n); }

inline ncsym::NCSymElement m(const char* sp, ncsym::Alphabet n = kInf) {
  return ncsym::NCSymElement::monomial(SP(sp), n);
}
inline ncsym::SymElement ms(const char* mu, ncsym::Alphabet n = kInf) {
  return ncsym::SymElement::monomial(P(mu), n);
}

}  // namespace testing
