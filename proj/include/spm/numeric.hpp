#pragma once

// Exact scalar types shared by every module. Nothing in the core touches
// floating point.

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace spm {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Raised when a quantity that must be an integer (a count) is not.
/// Always indicates a bug upstream, never bad user input.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline bool is_integral(const BigRat& q) { return q.get_den() == 1; }

inline BigInt to_integer(const BigRat& q, const std::string& what) {
  if (!is_integral(q)) {
    throw IntegralityError(what + ": expected an integer, got " + q.get_str());
  }
  return q.get_num();
}

inline BigInt pow_int(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

/// base^exponent for any integer exponent. 0^0 = 1; 0 to a negative power
/// throws std::domain_error.
inline BigRat pow_rat(const BigRat& base, long exponent) {
  if (exponent >= 0) {
    BigRat out(pow_int(base.get_num(), static_cast<unsigned long>(exponent)),
               pow_int(base.get_den(), static_cast<unsigned long>(exponent)));
    out.canonicalize();
    return out;
  }
  if (base == 0) throw std::domain_error("pow_rat: zero to a negative power");
  const auto e = static_cast<unsigned long>(-exponent);
  BigRat out(pow_int(base.get_den(), e), pow_int(base.get_num(), e));
  out.canonicalize();
  return out;
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }
inline std::string to_string(const BigRat& q) { return q.get_str(); }

}  // namespace spm
