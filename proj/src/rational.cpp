#include "xlag/exact/rational.hpp"

#include <cctype>

#include "xlag/exact/modp.hpp"

namespace xlag {

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.find_first_of("+-") != std::string::npos)
    throw ParseError("malformed rational '" + text + "'");
  Integer d(strip_plus(den));
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  Rational q(Integer(strip_plus(num)), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

double to_double(const Rational& q) { return q.get_d(); }

ModP::ModP(const Rational& q) {
  static const Integer p(static_cast<unsigned long>(kPrime));
  Integer n, d;
  mpz_fdiv_r(n.get_mpz_t(), q.get_num_mpz_t(), p.get_mpz_t());
  mpz_fdiv_r(d.get_mpz_t(), q.get_den_mpz_t(), p.get_mpz_t());
  if (d == 0) throw std::domain_error("ModP: denominator divisible by p");
  *this = raw(mpz_get_ui(n.get_mpz_t())) / raw(mpz_get_ui(d.get_mpz_t()));
}

}  // namespace xlag
