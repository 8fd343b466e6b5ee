#include "ncsym/rational.hpp"

#include <string>

#include "ncsym/error.hpp"

namespace ncsym {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return ParseError("malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  auto check_int = [&](std::string_view part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
  };
  if (slash == std::string::npos) {
    check_int(s, true);
  } else {
    check_int(std::string_view(s).substr(0, slash), true);
    check_int(std::string_view(s).substr(slash + 1), false);
  }
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw bad();
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace ncsym
