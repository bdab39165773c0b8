#include "binform/forms.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace binform {

std::string ModuleSpec::canonical() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) os << ",";
    os << degrees[i];
  }
  return os.str();
}

ModuleSpec ModuleSpec::parse(const std::string& text) {
  ModuleSpec spec;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    std::size_t pos = 0;
    int n = 0;
    try {
      n = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad module spec: " + text);
    }
    while (pos < tok.size() && std::isspace((unsigned char)tok[pos])) ++pos;
    if (pos != tok.size() || n < 1)
      throw std::invalid_argument("bad module spec: " + text);
    spec.degrees.push_back(n);
  }
  if (spec.degrees.empty())
    throw std::invalid_argument("empty module spec: " + text);
  return spec;
}

std::vector<std::string> ModuleSpec::default_symbols() const {
  static const char* pool1[] = {"l", "m", "n"};
  static const char* pool2[] = {"q", "r", "s"};
  static const char* pool3[] = {"c", "d", "e"};
  static const char* pool4[] = {"f", "g", "h"};
  int used1 = 0, used2 = 0, used3 = 0, used4 = 0;
  std::vector<std::string> out;
  for (int n : degrees) {
    auto pick = [](const char** pool, int& used, const char* stem) {
      if (used < 3) return std::string(pool[used++]);
      return std::string(stem) + std::to_string(++used);
    };
    if (n == 1)
      out.push_back(pick(pool1, used1, "l"));
    else if (n == 2)
      out.push_back(pick(pool2, used2, "q"));
    else if (n == 3)
      out.push_back(pick(pool3, used3, "c"));
    else
      out.push_back(pick(pool4, used4, "f"));
  }
  return out;
}

BinaryForm BinaryForm::zero(int degree) {
  BinaryForm f;
  f.degree = degree;
  f.coeffs.assign(degree + 1, Poly::zero());
  return f;
}

BinaryForm BinaryForm::symbolic(int degree, unsigned slot) {
  if (degree + 1 > (int)kMaxCoeffsPerSlot)
    throw std::invalid_argument("form degree too large for variable registry");
  BinaryForm f;
  f.degree = degree;
  for (int j = 0; j <= degree; ++j)
    f.coeffs.push_back(Poly::variable(coeff_var(slot, j)));
  return f;
}

BinaryForm BinaryForm::from_poly(const Poly& p, int degree) {
  int d = p.xy_degree_if_homogeneous();
  if (d == -2 || (d >= 0 && d != degree))
    throw std::invalid_argument("polynomial is not homogeneous of degree " +
                                std::to_string(degree));
  BinaryForm f = BinaryForm::zero(degree);
  for (const auto& [m, c] : p.terms()) {
    unsigned ey = m.exponent(kVarY);
    Monomial rest = m.divided_by(kVarX, m.exponent(kVarX)).divided_by(kVarY, ey);
    f.coeffs[ey].add_term(rest, c);
  }
  return f;
}

Poly BinaryForm::to_poly() const {
  Poly p;
  for (int j = 0; j <= degree; ++j) {
    if (coeffs[j].is_zero()) continue;
    Poly xy = Poly::term(
        Monomial::var(kVarX, degree - j).times(Monomial::var(kVarY, j)),
        BigRat(1));
    p += coeffs[j] * xy;
  }
  return p;
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Poly& c) { return c.is_zero(); });
}

bool BinaryForm::is_numeric() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Poly& c) { return c.is_constant(); });
}

BigRat BinaryForm::numeric_coeff(int j) const {
  if (!coeffs[j].is_constant())
    throw std::invalid_argument("symbolic coefficient");
  return coeffs[j].constant_value();
}

BinaryForm act(const Mat2& g, const BinaryForm& f) {
  if (g.det() != 1)
    throw std::invalid_argument("group element must have determinant 1");
  Poly nx = g.d * Poly::variable(kVarX) - g.b * Poly::variable(kVarY);
  Poly ny = -g.c * Poly::variable(kVarX) + g.a * Poly::variable(kVarY);
  return BinaryForm::from_poly(f.to_poly().substituted_xy(nx, ny), f.degree);
}

bool infinitesimal_invariance(const Poly& invariant, const ModuleSpec& spec) {
  if (invariant.degree_in(kVarX) > 0 || invariant.degree_in(kVarY) > 0)
    throw std::invalid_argument(
        "invariance test expects a polynomial in coefficient variables only");
  // Derivations induced by the two nilpotent one-parameter subgroups:
  // raising sends a_{s,j} to -(n-j+1) a_{s,j-1}, lowering to -(j+1) a_{s,j+1}.
  Poly raise_img, lower_img;
  for (std::size_t s = 0; s < spec.degrees.size(); ++s) {
    int n = spec.degrees[s];
    for (int j = 0; j <= n; ++j) {
      Poly dI = invariant.partial(coeff_var(s, j));
      if (dI.is_zero()) continue;
      if (j >= 1) {
        raise_img += dI * Poly::variable(coeff_var(s, j - 1))
                             .scaled(BigRat(-(long)(n - j + 1)));
      }
      if (j <= n - 1) {
        lower_img += dI * Poly::variable(coeff_var(s, j + 1))
                             .scaled(BigRat(-(long)(j + 1)));
      }
    }
  }
  return raise_img.is_zero() && lower_img.is_zero();
}

namespace {

// Dense univariate polynomial over BigRat, ascending coefficients, no
// trailing zeros.
using UniPoly = std::vector<BigRat>;

void uni_trim(UniPoly& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

int uni_degree(const UniPoly& u) { return (int)u.size() - 1; }

UniPoly uni_derivative(const UniPoly& u) {
  UniPoly d;
  for (std::size_t k = 1; k < u.size(); ++k)
    d.push_back(u[k] * BigRat((long)k));
  uni_trim(d);
  return d;
}

void uni_make_monic(UniPoly& u) {
  if (u.empty()) return;
  BigRat lead = u.back();
  for (auto& c : u) c /= lead;
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  while (uni_degree(a) >= uni_degree(b) && !a.empty()) {
    BigRat f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    uni_trim(a);
  }
  return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  uni_trim(a);
  uni_trim(b);
  while (!b.empty()) {
    UniPoly r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  uni_make_monic(a);
  return a;
}

// f(t,1) for a numeric form.
UniPoly dehomogenize(const BinaryForm& f) {
  UniPoly u(f.degree + 1);
  for (int j = 0; j <= f.degree; ++j) u[f.degree - j] = f.numeric_coeff(j);
  uni_trim(u);
  return u;
}

}  // namespace

int root_multiplicity(const BinaryForm& f, const BigRat& u, const BigRat& v) {
  if (u == 0 && v == 0) throw std::invalid_argument("(0:0) is not a point");
  if (f.is_zero()) return f.degree;
  UniPoly p = dehomogenize(f);
  if (v == 0) return f.degree - uni_degree(p);
  BigRat t0 = u / v;
  // Count exact divisions by (t - t0).
  int mult = 0;
  while (!p.empty()) {
    // Synthetic division; remainder is p evaluated at t0.
    BigRat acc(0);
    UniPoly q(p.size() > 1 ? p.size() - 1 : 0);
    for (std::size_t k = p.size(); k-- > 1;) {
      acc = p[k] + acc * t0;
      q[k - 1] = acc;
    }
    BigRat rem = p[0] + acc * t0;
    if (rem != 0) break;
    ++mult;
    p = std::move(q);
    uni_trim(p);
  }
  return mult;
}

NullconeStatus in_nullcone(const PointInV& v) {
  bool all_zero = true;
  bool infinity_ok = true;
  UniPoly common;  // gcd of the multiplicity loci; empty means "everything"
  bool common_set = false;
  for (std::size_t i = 0; i < v.forms.size(); ++i) {
    const BinaryForm& f = v.forms[i];
    if (!f.is_numeric())
      throw std::invalid_argument("nullcone test needs a numeric point");
    if (f.is_zero()) continue;  // imposes no condition
    all_zero = false;
    int n = f.degree;
    int need = n / 2 + 1;  // multiplicity > n/2
    UniPoly u = dehomogenize(f);
    infinity_ok = infinity_ok && (n - uni_degree(u) >= need);
    UniPoly locus = u;
    UniPoly der = u;
    for (int k = 1; k < need && !locus.empty(); ++k) {
      der = uni_derivative(der);
      locus = uni_gcd(locus, der);
    }
    if (!common_set) {
      common = locus;
      common_set = true;
    } else {
      common = uni_gcd(common, locus);
    }
    if (uni_degree(common) < 1 && !infinity_ok) return NullconeStatus::Outside;
  }
  if (all_zero) return NullconeStatus::Inside;
  if (common_set && uni_degree(common) >= 1) return NullconeStatus::Inside;
  return infinity_ok ? NullconeStatus::Inside : NullconeStatus::Outside;
}

namespace {

// Minimal recursive-descent parser for rational polynomials in x, y.
class XyParser {
 public:
  explicit XyParser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = sum();
    skip_ws();
    if (pos_ != text_.size())
      throw std::invalid_argument("trailing input in polynomial at offset " +
                                  std::to_string(pos_));
    return p;
  }

 private:
  Poly sum() {
    Poly acc = product();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        acc += product();
      } else if (peek() == '-') {
        ++pos_;
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  Poly product() {
    Poly acc = power();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= power();
      } else if (c == 'x' || c == 'y' || c == '(') {
        acc *= power();  // implicit product, e.g. "4x*y"
      } else {
        return acc;
      }
    }
  }

  Poly power() {
    Poly base = primary();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      return base.pow(natural());
    }
    return base;
  }

  Poly primary() {
    skip_ws();
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (c == '(') {
      ++pos_;
      Poly inner = sum();
      skip_ws();
      expect(')');
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      return Poly::variable(kVarX);
    }
    if (c == 'y') {
      ++pos_;
      return Poly::variable(kVarY);
    }
    if (std::isdigit((unsigned char)c)) {
      long num = (long)natural();
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        long den = (long)natural();
        return Poly::constant(make_rat(num, den));
      }
      return Poly::constant(BigRat(num));
    }
    throw std::invalid_argument("unexpected character in polynomial at offset " +
                                std::to_string(pos_));
  }

  unsigned natural() {
    skip_ws();
    if (!std::isdigit((unsigned char)peek()))
      throw std::invalid_argument("expected number at offset " +
                                  std::to_string(pos_));
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return (unsigned)v;
  }

  void expect(char c) {
    if (peek() != c)
      throw std::invalid_argument(std::string("expected '") + c +
                                  "' at offset " + std::to_string(pos_));
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_]))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_xy_poly(const std::string& text) { return XyParser(text).parse(); }

PointInV parse_point(const std::string& text) {
  auto colon = text.find(':');
  auto open = text.find('(');
  auto close = text.find(')');
  if (text.substr(0, open) != "V" || open == std::string::npos ||
      close == std::string::npos || colon == std::string::npos ||
      close > colon)
    throw std::invalid_argument("point must look like \"V(1,2): l=x; q=0\"");
  PointInV pt;
  pt.spec = ModuleSpec::parse(text.substr(open + 1, close - open - 1));
  auto symbols = pt.spec.default_symbols();
  pt.forms.resize(symbols.size());
  std::vector<bool> assigned(symbols.size(), false);

  std::string rest = text.substr(colon + 1);
  std::istringstream is(rest);
  std::string field;
  while (std::getline(is, field, ';')) {
    auto eq = field.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("missing '=' in point component: " + field);
    std::string name = field.substr(0, eq);
    name.erase(std::remove_if(name.begin(), name.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               name.end());
    auto it = std::find(symbols.begin(), symbols.end(), name);
    if (it == symbols.end())
      throw std::invalid_argument("unknown form symbol: " + name);
    std::size_t slot = it - symbols.begin();
    pt.forms[slot] = BinaryForm::from_poly(parse_xy_poly(field.substr(eq + 1)),
                                           pt.spec.degrees[slot]);
    assigned[slot] = true;
  }
  for (std::size_t i = 0; i < assigned.size(); ++i) {
    if (!assigned[i])
      throw std::invalid_argument("form " + symbols[i] + " not assigned");
  }
  return pt;
}

}  // namespace binform
