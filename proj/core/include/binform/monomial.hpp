#ifndef BINFORM_MONOMIAL_HPP
#define BINFORM_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace binform {

// Variable ids are fixed once and for all: x = 0, y = 1, and the j-th
// coefficient of the form in slot s gets id 2 + 64*s + j. Stable ids give
// a canonical term order that does not depend on declaration order.
using VarId = std::uint32_t;

inline constexpr VarId kVarX = 0;
inline constexpr VarId kVarY = 1;
inline constexpr unsigned kMaxCoeffsPerSlot = 64;
// Slots at and above kAuxSlot are scratch (polarization parameters etc.).
inline constexpr unsigned kAuxSlot = 56;

constexpr VarId coeff_var(unsigned slot, unsigned j) {
  return 2 + kMaxCoeffsPerSlot * slot + j;
}

constexpr bool is_coeff_var(VarId v) { return v >= 2; }
constexpr unsigned slot_of(VarId v) { return (v - 2) / kMaxCoeffsPerSlot; }
constexpr unsigned coeff_index_of(VarId v) { return (v - 2) % kMaxCoeffsPerSlot; }

// A monomial: sorted (variable id, exponent) pairs, no zero exponents.
class Monomial {
 public:
  using Entry = std::pair<VarId, unsigned>;

  Monomial() = default;

  static Monomial one() { return Monomial(); }

  static Monomial var(VarId v, unsigned exp = 1) {
    Monomial m;
    if (exp > 0) m.entries_.emplace_back(v, exp);
    return m;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : entries_) d += e;
    return d;
  }

  unsigned exponent(VarId v) const {
    for (const auto& [w, e] : entries_)
      if (w == v) return e;
    return 0;
  }

  Monomial times(const Monomial& o) const;

  // Divides by v^k; exponent must be at least k.
  Monomial divided_by(VarId v, unsigned k) const;

  bool operator==(const Monomial& o) const { return entries_ == o.entries_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  // Graded lexicographic order: higher total degree first, ties broken
  // lexicographically with x > y > a(0,0) > a(0,1) > ...
  static bool grlex_less(const Monomial& a, const Monomial& b);

  struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
      return grlex_less(b, a);
    }
  };

 private:
  std::vector<Entry> entries_;
};

}  // namespace binform

#endif
