#ifndef BINFORM_FORMS_HPP
#define BINFORM_FORMS_HPP

#include <string>
#include <vector>

#include "binform/polynomial.hpp"

namespace binform {

// A direct sum of binary-form modules, given by the list of degrees.
struct ModuleSpec {
  std::vector<int> degrees;

  ModuleSpec() = default;
  explicit ModuleSpec(std::vector<int> d) : degrees(std::move(d)) {}

  int parts() const { return (int)degrees.size(); }

  // Number of parameters of the invariant ring: sum(n_i + 1) - 3.
  int param_count() const {
    int m = -3;
    for (int n : degrees) m += n + 1;
    return m;
  }

  // Canonical text form, e.g. "1,2,4".
  std::string canonical() const;

  // Accepts "12" (one form of degree 12) or "1,2,4".
  static ModuleSpec parse(const std::string& text);

  // Default one-letter symbols per slot: l,m,n for degree 1; q,r,s for
  // degree 2; c,d,e for degree 3; f,g,h for degree 4 and up. Catalog files
  // may override these.
  std::vector<std::string> default_symbols() const;

  bool operator==(const ModuleSpec& o) const { return degrees == o.degrees; }
};

// A binary form of fixed degree n, stored as the raw coefficients of
// x^(n-j) y^j (no binomial weights). Coefficients are polynomials so the
// same type carries numeric points and generic symbolic forms.
struct BinaryForm {
  int degree = 0;
  std::vector<Poly> coeffs;  // size degree+1

  static BinaryForm zero(int degree);
  static BinaryForm symbolic(int degree, unsigned slot);
  // Extracts coefficients from a polynomial homogeneous of the given degree
  // in x,y (or zero); throws on inhomogeneous input.
  static BinaryForm from_poly(const Poly& p, int degree);

  Poly to_poly() const;
  bool is_zero() const;
  bool is_numeric() const;
  BigRat numeric_coeff(int j) const;  // throws if symbolic
};

struct PointInV {
  ModuleSpec spec;
  std::vector<BinaryForm> forms;
};

// Element of SL2 over the rationals.
struct Mat2 {
  BigRat a, b, c, d;

  BigRat det() const { return a * d - b * c; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
            c * o.b + d * o.d};
  }
  static Mat2 identity() { return {BigRat(1), BigRat(0), BigRat(0), BigRat(1)}; }
};

// Substitution action g.x = dx - by, g.y = -cx + ay; rejects det != 1.
BinaryForm act(const Mat2& g, const BinaryForm& f);

// True iff both sl2 derivations annihilate I, which for a polynomial in the
// coefficient variables is equivalent to SL2 invariance. I must not involve
// x or y.
bool infinitesimal_invariance(const Poly& invariant, const ModuleSpec& spec);

// Multiplicity of the projective root (u:v) in a numeric form; the zero
// form reports its declared degree.
int root_multiplicity(const BinaryForm& f, const BigRat& u, const BigRat& v);

enum class NullconeStatus { Inside, Outside, Indeterminate };

// Hilbert-Mumford membership test: is there one common projective root of
// multiplicity > n_i/2 in every nonzero form? Exact for all degrees via
// gcd-based multiplicity loci; Indeterminate is never produced but remains
// part of the interface.
NullconeStatus in_nullcone(const PointInV& v);

// Parses "V(1,2,4): l=x; q=0; f=4*x*y^3". Every slot must be assigned,
// using the spec's default symbols.
PointInV parse_point(const std::string& text);

// Parses a polynomial in x and y with rational coefficients,
// e.g. "4*x*y^3 - 1/2*x^2".
Poly parse_xy_poly(const std::string& text);

}  // namespace binform

#endif
