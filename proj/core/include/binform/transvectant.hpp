#ifndef BINFORM_TRANSVECTANT_HPP
#define BINFORM_TRANSVECTANT_HPP

#include <utility>
#include <vector>

#include "binform/forms.hpp"
#include "binform/polynomial.hpp"

namespace binform {

// p-th transvectant of forms of orders m and n:
//   ((m-p)!(n-p)!)/(m!n!) * sum_i (-1)^i C(p,i) d^p g/dx^(p-i)dy^i
//                                            * d^p h/dx^i dy^(p-i).
// The explicit-order overload accepts zero polynomials (whose order cannot
// be inferred); both reject p outside [0, min(m,n)].
Poly transvectant(const Poly& g, int m, const Poly& h, int n, int p);
Poly transvectant(const Poly& g, const Poly& h, int p);

// Sylvester-matrix resultant, exact, also for symbolic coefficients.
// Layout: deg(g) rows of f-coefficients above deg(f) rows of
// g-coefficients; this orientation makes res(l,m) = (l,m)_1 hold on the
// nose and is the convention used throughout.
Poly form_resultant(const BinaryForm& f, const BinaryForm& g);

// Discriminants in the classical normalization on raw coefficients:
// degree 2: c1^2 - 4 c0 c2; degree 3: the standard cubic discriminant.
// Only these two degrees are needed.
Poly form_discriminant(const BinaryForm& f);

enum class ClassicalKind { Res11, Discr2, Res12, Res22, Discr3, Res13 };

// The transvectant side of the six classical identities, scaled by a fixed
// stored constant so that the result equals form_resultant/form_discriminant
// exactly (not merely up to a scalar).
Poly classical(ClassicalKind kind, const std::vector<BinaryForm>& args);

// Verifies dim(V_m (x) V_n) = sum of the summand dimensions and that the
// map g(x)h -> ((g,h)_0,...,(g,h)_n) is injective on the monomial basis.
bool clebsch_gordan_check(int m, int n);

// Polarization of an invariant of a single form: substitutes
// f -> sum_h lambda_h f_h and extracts the coefficient of each lambda
// monomial, exactly as the defining expansion produces them (no multinomial
// renormalization). Indices are returned in decreasing lexicographic order.
struct Polarization {
  std::vector<int> index;  // (i_1,...,i_s), sums to deg(I)
  Poly value;
};
std::vector<Polarization> polarize(const Poly& invariant, unsigned source_slot,
                                   const std::vector<unsigned>& target_slots);

}  // namespace binform

#endif
