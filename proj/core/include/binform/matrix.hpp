#ifndef BINFORM_MATRIX_HPP
#define BINFORM_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "binform/rational.hpp"

namespace binform {

// Dense matrix over the rationals. Sizes in this project stay modest
// (Jacobians, Clebsch-Gordan maps, small oracles); the large evaluation
// matrices of the generator search go through ModRowSpace instead and are
// never materialized.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const BigRat& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  BigRat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  RatMatrix transposed() const;

 private:
  std::size_t rows_, cols_;
  std::vector<BigRat> data_;
};

// Exact rank by fraction-free (Bareiss) elimination over the integers.
std::size_t rank_bareiss(const RatMatrix& m);

// Rank by elimination modulo each given prime; returns the maximum. A
// modular rank never exceeds the true rank.
std::size_t rank_modular(const RatMatrix& m,
                         const std::vector<std::uint64_t>& primes);

// Certified exact rank: two disjoint deterministic prime sets must agree,
// otherwise falls back to fraction-free elimination.
std::size_t rank(const RatMatrix& m);

// Basis of the right kernel, exact over the rationals.
std::vector<std::vector<BigRat>> nullspace(const RatMatrix& m);

// Deterministic primes just below 2^62, suitable for __int128-free modular
// arithmetic via 128-bit intermediate products.
std::vector<std::uint64_t> modular_primes(std::size_t count,
                                          unsigned series = 0);

// Incremental row-space rank modulo a prime: rows are reduced against a
// growing echelon basis, so memory stays at O(rank * cols).
class ModRowSpace {
 public:
  ModRowSpace(std::uint64_t prime, std::size_t cols);

  // Reduces the row (consumed) and absorbs it if independent.
  // Returns true when the rank grew.
  bool insert(std::vector<std::uint64_t> row);

  std::size_t rank() const { return basis_.size(); }
  std::uint64_t prime() const { return prime_; }
  std::size_t cols() const { return cols_; }

 private:
  std::uint64_t prime_;
  std::size_t cols_;
  std::vector<std::vector<std::uint64_t>> basis_;  // echelon rows
  std::vector<std::size_t> pivot_col_;
};

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);

}  // namespace binform

#endif
