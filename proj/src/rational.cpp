#include "polyzeta/rational.hpp"

#include "polyzeta/error.hpp"

namespace polyzeta {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = [&] {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool digits = false, slash = false, after_slash = false;
    for (; i < s.size(); ++i) {
      char c = s[i];
      if (c >= '0' && c <= '9') {
        (slash ? after_slash : digits) = true;
      } else if (c == '/' && !slash && digits) {
        slash = true;
      } else {
        return false;
      }
    }
    return digits && (!slash || after_slash);
  };
  if (!valid()) throw UsageError("malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw UsageError("malformed rational '" + s + "'");
  if (sgn(q.get_den()) == 0) throw UsageError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

}  // namespace polyzeta
