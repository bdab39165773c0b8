#include "binform/rational.hpp"

#include <stdexcept>

namespace binform {

BigRat rat_from_string(const std::string& text) {
  BigRat r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

bool mod_reduce(const BigRat& v, std::uint64_t p, std::uint64_t& out) {
  BigInt pz((unsigned long)p);
  BigInt num = v.get_num() % pz;
  if (num < 0) num += pz;
  BigInt den = v.get_den() % pz;
  if (den == 0) return false;
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
    return false;
  BigInt res = (num * inv) % pz;
  out = res.get_ui();
  return true;
}

}  // namespace binform
