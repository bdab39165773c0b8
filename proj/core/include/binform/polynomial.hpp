#ifndef BINFORM_POLYNOMIAL_HPP
#define BINFORM_POLYNOMIAL_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "binform/monomial.hpp"
#include "binform/rational.hpp"

namespace binform {

// Exact sparse multivariate polynomial over BigRat. Zero coefficients are
// never stored; equality is structural. Terms are kept in descending
// graded-lex order so that iteration, printing and hashing are canonical.
class Poly {
 public:
  using TermMap = std::map<Monomial, BigRat, Monomial::GrlexGreater>;

  Poly() = default;

  static Poly zero() { return Poly(); }
  static Poly constant(const BigRat& c);
  static Poly constant(long c) { return constant(BigRat(c)); }
  static Poly variable(VarId v, unsigned exp = 1);
  static Poly term(const Monomial& m, const BigRat& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  BigRat coefficient(const Monomial& m) const;
  // The constant term.
  BigRat constant_value() const { return coefficient(Monomial::one()); }

  // Total degree; -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(VarId v) const;

  // Degree in x,y jointly if every term has the same x+y degree, else -2.
  // Zero polynomial gives -1.
  int xy_degree_if_homogeneous() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator*=(const Poly& o);

  Poly scaled(const BigRat& c) const;
  Poly pow(unsigned k) const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // k-fold exact partial derivative with respect to v.
  Poly partial(VarId v, unsigned k = 1) const;

  // Substitutes a polynomial for one variable.
  Poly substituted(VarId v, const Poly& value) const;

  // Simultaneous substitution x -> nx, y -> ny (the group action needs the
  // pair replaced at once).
  Poly substituted_xy(const Poly& nx, const Poly& ny) const;

  // Replaces the given variables by constants; other variables remain.
  Poly evaluated(const std::vector<std::pair<VarId, BigRat>>& values) const;

  // Full evaluation; every variable that occurs must be bound.
  BigRat evaluated_fully(const std::function<BigRat(VarId)>& value_of) const;

  // Collects the variables that occur.
  std::vector<VarId> variables() const;

  std::string to_string(
      const std::function<std::string(VarId)>& name_of) const;
  std::string to_string() const;  // default names: x, y, a(s,j)

  void add_term(const Monomial& m, const BigRat& c);  // merges, prunes zeros

 private:
  TermMap terms_;
};

Poly operator*(const BigRat& c, const Poly& p);

}  // namespace binform

#endif
