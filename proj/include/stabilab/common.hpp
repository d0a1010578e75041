#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace stabilab {

using BigInt = mpz_class;
using Rational = mpq_class;

// Raised when a computation would exceed a configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when two routes that must agree do not, or when an exact quantity
// that must be integral is not. Always indicates a bug or a counterexample.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

BigInt factorial(int n);
BigInt binomial(int n, int k);

// Converts a rational known to be integral; throws ConsistencyError otherwise.
BigInt require_integer(const Rational& value, const std::string& what);

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace stabilab
