#include "binform/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace binform {

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (std::uint64_t)((unsigned __int128)a * b % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  return mod_pow(a, p - 2, p);  // p prime
}

std::vector<std::uint64_t> modular_primes(std::size_t count, unsigned series) {
  // Walk downward from fixed anchors; deterministic across runs. Disjoint
  // anchors give disjoint sets for the two-set certification.
  std::vector<std::uint64_t> out;
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, 62);
  p -= 1 + (unsigned long)series * 4096;
  while (out.size() < count) {
    p -= 1;
    while (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) p -= 1;
    out.push_back(p.get_ui());
  }
  return out;
}

namespace {

// Clears denominators row by row, producing an integer matrix with the
// same rank.
std::vector<std::vector<BigInt>> to_integer_rows(const RatMatrix& m) {
  std::vector<std::vector<BigInt>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt lcm(1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      BigInt den = m.at(i, j).get_den();
      BigInt g;
      mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
      lcm = lcm / g * den;
    }
    rows[i].resize(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const BigRat& v = m.at(i, j);
      rows[i][j] = v.get_num() * (lcm / v.get_den());
    }
  }
  return rows;
}

}  // namespace

std::size_t rank_bareiss(const RatMatrix& m) {
  auto a = to_integer_rows(m);
  std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  BigInt prev(1);
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    // Find a pivot in this column.
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        BigInt t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t rank_modular(const RatMatrix& m,
                         const std::vector<std::uint64_t>& primes) {
  std::size_t best = 0;
  for (std::uint64_t p : primes) {
    ModRowSpace space(p, m.cols());
    bool usable = true;
    for (std::size_t i = 0; i < m.rows() && usable; ++i) {
      std::vector<std::uint64_t> row(m.cols());
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!mod_reduce(m.at(i, j), p, row[j])) {
          usable = false;  // denominator hit the prime; skip this prime
          break;
        }
      }
      if (usable) space.insert(std::move(row));
    }
    if (usable) best = std::max(best, space.rank());
  }
  return best;
}

std::size_t rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.rows() * m.cols() <= 256) return rank_bareiss(m);
  auto setA = modular_primes(2, 0);
  auto setB = modular_primes(2, 1);
  std::size_t ra = rank_modular(m, setA);
  std::size_t rb = rank_modular(m, setB);
  if (ra == rb && ra > 0) return ra;
  return rank_bareiss(m);
}

std::vector<std::vector<BigRat>> nullspace(const RatMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<BigRat>> a(rows, std::vector<BigRat>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

  std::vector<std::size_t> pivot_of_col(cols, SIZE_MAX);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    BigRat inv = a[rank][col];
    for (std::size_t j = col; j < cols; ++j) a[rank][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      BigRat f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    pivot_of_col[col] = rank;
    ++rank;
  }

  std::vector<std::vector<BigRat>> basis;
  for (std::size_t col = 0; col < cols; ++col) {
    if (pivot_of_col[col] != SIZE_MAX) continue;
    std::vector<BigRat> v(cols, BigRat(0));
    v[col] = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      if (pivot_of_col[c] == SIZE_MAX) continue;
      v[c] = -a[pivot_of_col[c]][col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

ModRowSpace::ModRowSpace(std::uint64_t prime, std::size_t cols)
    : prime_(prime), cols_(cols) {}

bool ModRowSpace::insert(std::vector<std::uint64_t> row) {
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    std::uint64_t f = row[pivot_col_[b]];
    if (f == 0) continue;
    const auto& base = basis_[b];
    for (std::size_t j = pivot_col_[b]; j < cols_; ++j) {
      if (base[j] == 0) continue;
      std::uint64_t sub = mod_mul(f, base[j], prime_);
      row[j] = row[j] >= sub ? row[j] - sub : row[j] + prime_ - sub;
    }
  }
  std::size_t piv = 0;
  while (piv < cols_ && row[piv] == 0) ++piv;
  if (piv == cols_) return false;
  std::uint64_t inv = mod_inv(row[piv], prime_);
  for (std::size_t j = piv; j < cols_; ++j)
    if (row[j]) row[j] = mod_mul(row[j], inv, prime_);
  basis_.push_back(std::move(row));
  pivot_col_.push_back(piv);
  return true;
}

}  // namespace binform
