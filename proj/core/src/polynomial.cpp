#include "binform/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace binform {

Monomial Monomial::times(const Monomial& o) const {
  Monomial out;
  out.entries_.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin(), ae = entries_.end();
  auto b = o.entries_.begin(), be = o.entries_.end();
  while (a != ae && b != be) {
    if (a->first < b->first) {
      out.entries_.push_back(*a++);
    } else if (b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      out.entries_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.entries_.insert(out.entries_.end(), a, ae);
  out.entries_.insert(out.entries_.end(), b, be);
  return out;
}

Monomial Monomial::divided_by(VarId v, unsigned k) const {
  Monomial out = *this;
  for (auto it = out.entries_.begin(); it != out.entries_.end(); ++it) {
    if (it->first == v) {
      if (it->second < k) throw std::invalid_argument("monomial division");
      it->second -= k;
      if (it->second == 0) out.entries_.erase(it);
      return out;
    }
  }
  if (k > 0) throw std::invalid_argument("monomial division");
  return out;
}

bool Monomial::grlex_less(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Lexicographic with smaller ids more significant: compare exponent runs.
  auto ia = a.entries_.begin(), ea = a.entries_.end();
  auto ib = b.entries_.begin(), eb = b.entries_.end();
  while (ia != ea && ib != eb) {
    if (ia->first != ib->first) {
      // The monomial owning the smaller id has a positive exponent where the
      // other has zero, so it is lex-greater.
      return ia->first > ib->first;
    }
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return ia == ea && ib != eb;
}

Poly Poly::constant(const BigRat& c) {
  Poly p;
  if (c != 0) p.terms_.emplace(Monomial::one(), c);
  return p;
}

Poly Poly::variable(VarId v, unsigned exp) {
  Poly p;
  p.terms_.emplace(Monomial::var(v, exp), BigRat(1));
  return p;
}

Poly Poly::term(const Monomial& m, const BigRat& c) {
  Poly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_one());
}

BigRat Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRat(0) : it->second;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, (int)m.degree());
  return d;
}

int Poly::degree_in(VarId v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, (int)m.exponent(v));
  return d;
}

int Poly::xy_degree_if_homogeneous() const {
  if (terms_.empty()) return -1;
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int dxy = (int)(m.exponent(kVarX) + m.exponent(kVarY));
    if (d == -1) {
      d = dxy;
    } else if (d != dxy) {
      return -2;
    }
  }
  return d;
}

void Poly::add_term(const Monomial& m, const BigRat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  if (terms_.empty() || o.terms_.empty()) return r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      r.add_term(ma.times(mb), ca * cb);
    }
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::scaled(const BigRat& c) const {
  Poly r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly r = Poly::constant(1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

Poly Poly::partial(VarId v, unsigned k) const {
  Poly cur = *this;
  for (unsigned step = 0; step < k; ++step) {
    Poly next;
    for (const auto& [m, c] : cur.terms_) {
      unsigned e = m.exponent(v);
      if (e == 0) continue;
      next.add_term(m.divided_by(v, 1), c * BigRat((long)e));
    }
    cur = std::move(next);
    if (cur.is_zero()) break;
  }
  return cur;
}

Poly Poly::substituted(VarId v, const Poly& value) const {
  // Cache powers of the replacement.
  std::vector<Poly> powers{Poly::constant(1)};
  Poly out;
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exponent(v);
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Poly rest = Poly::term(m.divided_by(v, e), c);
    out += rest * powers[e];
  }
  return out;
}

Poly Poly::substituted_xy(const Poly& nx, const Poly& ny) const {
  std::vector<Poly> px{Poly::constant(1)}, py{Poly::constant(1)};
  Poly out;
  for (const auto& [m, c] : terms_) {
    unsigned ex = m.exponent(kVarX), ey = m.exponent(kVarY);
    while (px.size() <= ex) px.push_back(px.back() * nx);
    while (py.size() <= ey) py.push_back(py.back() * ny);
    Poly rest = Poly::term(m.divided_by(kVarX, ex).divided_by(kVarY, ey), c);
    out += rest * px[ex] * py[ey];
  }
  return out;
}

Poly Poly::evaluated(
    const std::vector<std::pair<VarId, BigRat>>& values) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    BigRat scale = c;
    Monomial rest = m;
    for (const auto& [v, val] : values) {
      unsigned e = rest.exponent(v);
      if (e == 0) continue;
      BigRat pw(1);
      for (unsigned i = 0; i < e; ++i) pw *= val;
      scale *= pw;
      rest = rest.divided_by(v, e);
      if (scale == 0) break;
    }
    out.add_term(rest, scale);
  }
  return out;
}

BigRat Poly::evaluated_fully(
    const std::function<BigRat(VarId)>& value_of) const {
  BigRat sum(0);
  for (const auto& [m, c] : terms_) {
    BigRat t = c;
    for (const auto& [v, e] : m.entries()) {
      BigRat val = value_of(v);
      for (unsigned i = 0; i < e; ++i) t *= val;
    }
    sum += t;
  }
  return sum;
}

std::vector<VarId> Poly::variables() const {
  std::vector<VarId> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.entries()) {
      if (std::find(vars.begin(), vars.end(), v) == vars.end())
        vars.push_back(v);
    }
  }
  std::sort(vars.begin(), vars.end());
  return vars;
}

namespace {

std::string default_var_name(VarId v) {
  if (v == kVarX) return "x";
  if (v == kVarY) return "y";
  std::ostringstream os;
  os << "a(" << slot_of(v) << "," << coeff_index_of(v) << ")";
  return os.str();
}

}  // namespace

std::string Poly::to_string(
    const std::function<std::string(VarId)>& name_of) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigRat abs = c < 0 ? BigRat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool coeff_shown = !(abs == 1) || m.is_one();
    if (coeff_shown) os << binform::to_string(abs);
    bool need_star = coeff_shown;
    for (const auto& [v, e] : m.entries()) {
      if (need_star) os << "*";
      os << name_of(v);
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

std::string Poly::to_string() const { return to_string(default_var_name); }

Poly operator*(const BigRat& c, const Poly& p) { return p.scaled(c); }

}  // namespace binform
