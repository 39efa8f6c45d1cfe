#include "core/field.hpp"

namespace mk {

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw Error(ErrorKind::Invalid, "division by zero");
  if (p == 0) return Scalar(1) / a;
  mpz_class m(static_cast<long>(p));
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), Scalar(reduce(a)).get_num().get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error(ErrorKind::Invalid, "non-invertible residue");
  return Scalar(r);
}

Scalar Field::from_rational(const Scalar& q) const {
  if (p == 0) return q;
  // num * den^-1 mod p
  mpz_class m(static_cast<long>(p));
  mpz_class den = q.get_den() % m;
  if (den < 0) den += m;
  if (den == 0) throw Error(ErrorKind::Parse, "denominator divisible by the characteristic");
  Scalar d(den);
  return mul(reduce(Scalar(q.get_num())), inv(d));
}

void check_prime(unsigned long p) {
  mpz_class z(static_cast<long>(p));
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 32) == 0)
    throw Error(ErrorKind::Schema, "characteristic must be 0 or a prime");
}

Scalar parse_rational(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::Parse, "empty rational literal");
  auto slash = text.find('/');
  auto check_int = [&](const std::string& s) {
    if (s.empty()) throw Error(ErrorKind::Parse, "bad rational literal: " + text);
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw Error(ErrorKind::Parse, "bad rational literal: " + text);
    for (; i < s.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(s[i])))
        throw Error(ErrorKind::Parse, "bad rational literal: " + text);
  };
  try {
    if (slash == std::string::npos) {
      check_int(text);
      return Scalar(mpz_class(text));
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    mpz_class d(den);
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in rational literal: " + text);
    Scalar q(mpz_class(num), d);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::Parse, "bad rational literal: " + text);
  }
}

std::string scalar_str(const Scalar& x) { return x.get_str(); }

}  // namespace mk
