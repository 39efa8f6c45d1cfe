#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace mk {

// Error kinds surfaced through the C API as status codes.
enum class ErrorKind {
  Parse,        // malformed input file / bad rational literal
  Schema,       // structurally valid JSON, wrong content
  Unsupported,  // NotSplit, bad characteristic, non-commutative input, ...
  Internal,     // invariant violations (Lemma/Theorem disagreement, bugs)
  Invalid,      // bad arguments (dimension mismatch, unknown fixture, ...)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Scalars are always stored as canonical mpq_class values.  For a prime
// field the value is the least nonnegative residue with denominator 1;
// every arithmetic result goes through reduce().
using Scalar = mpq_class;

struct Field {
  // 0 = rationals, otherwise a prime.
  unsigned long p = 0;

  bool is_rational() const { return p == 0; }

  Scalar reduce(const Scalar& x) const {
    if (p == 0) return x;
    mpz_class r = x.get_num();  // denominators over F_p are cleared by inv()
    mpz_class m(static_cast<long>(p));
    mpz_class res = r % m;
    if (res < 0) res += m;
    return Scalar(res);
  }

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }

  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  // Lifts a rational literal into the field (mod-p image for prime fields).
  Scalar from_rational(const Scalar& q) const;

  bool operator==(const Field&) const = default;
};

void check_prime(unsigned long p);

// Parses "p/q" or an integer string, bit-exactly.  Throws Error(Parse).
Scalar parse_rational(const std::string& text);

std::string scalar_str(const Scalar& x);

}  // namespace mk
