#ifndef BINFORM_RATIONAL_HPP
#define BINFORM_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace binform {

// Exact arbitrary-precision arithmetic. GMP guarantees canonical form
// (reduced, positive denominator) for all results of arithmetic operators;
// make_rat canonicalizes explicitly constructed fractions.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

inline BigRat make_rat(long num, long den = 1) {
  return make_rat(BigInt(num), BigInt(den));
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const BigRat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

// Parses "n" or "n/d"; throws std::invalid_argument on malformed input.
BigRat rat_from_string(const std::string& text);

// v mod p for 0 < p < 2^62, mapping the denominator through a modular
// inverse. Returns false if the denominator vanishes mod p.
bool mod_reduce(const BigRat& v, std::uint64_t p, std::uint64_t& out);

}  // namespace binform

#endif
