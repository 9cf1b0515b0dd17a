#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "et/field.hpp"

namespace et {

// Incremental row-echelon basis over F_p. Rows are inserted one at a time,
// reduced against the current pivots, and kept pivot-normalized. rank() is
// the number of independent rows seen so far.
template <uint64_t P>
class RowBasis {
 public:
  explicit RowBasis(size_t cols) : cols_(cols), row_of_pivot_(cols, -1) {}

  size_t rank() const { return rows_.size(); }
  size_t cols() const { return cols_; }
  bool full() const { return rows_.size() == cols_; }

  // Returns true if the row was independent (rank grew).
  bool insert(std::vector<uint64_t> row) {
    for (size_t c = 0; c < cols_; ++c) {
      if (row[c] == 0) continue;
      int32_t r = row_of_pivot_[c];
      if (r < 0) {
        uint64_t inv = Fp<P>::inv(row[c]);
        for (size_t j = c; j < cols_; ++j) row[j] = Fp<P>::mul(row[j], inv);
        row_of_pivot_[c] = static_cast<int32_t>(rows_.size());
        rows_.push_back(std::move(row));
        return true;
      }
      const std::vector<uint64_t>& pr = rows_[static_cast<size_t>(r)];
      uint64_t f = row[c];
      for (size_t j = c; j < cols_; ++j) row[j] = Fp<P>::fmadd_neg(row[j], f, pr[j]);
    }
    return false;
  }

 private:
  size_t cols_;
  std::vector<std::vector<uint64_t>> rows_;
  std::vector<int32_t> row_of_pivot_;
};

// Exact rank of a dense row-major matrix over F_p.
template <uint64_t P>
size_t rank_mod(std::span<const uint64_t> data, size_t rows, size_t cols) {
  RowBasis<P> basis(cols);
  std::vector<uint64_t> row(cols);
  for (size_t i = 0; i < rows && !basis.full(); ++i) {
    for (size_t j = 0; j < cols; ++j) row[j] = data[i * cols + j] % P;
    basis.insert(row);
  }
  return basis.rank();
}

// Numerical rank of a dense complex matrix by Gaussian elimination with
// full pivoting, pivots counted above tau = rows*cols*eps*max|entry|.
// Heuristic; the exact prime-field path is authoritative.
inline size_t rank_threshold(std::vector<std::complex<double>> a, size_t rows, size_t cols) {
  double maxabs = 0.0;
  for (const auto& z : a) maxabs = std::max(maxabs, std::abs(z));
  const double tau = static_cast<double>(rows) * static_cast<double>(cols) *
                     std::numeric_limits<double>::epsilon() * maxabs;
  size_t rank = 0;
  std::vector<size_t> colperm(cols);
  for (size_t j = 0; j < cols; ++j) colperm[j] = j;
  for (size_t step = 0; step < std::min(rows, cols); ++step) {
    size_t pi = step, pj = step;
    double best = -1.0;
    for (size_t i = step; i < rows; ++i)
      for (size_t j = step; j < cols; ++j) {
        double v = std::abs(a[i * cols + colperm[j]]);
        if (v > best) { best = v; pi = i; pj = j; }
      }
    if (best <= tau) break;
    std::swap(colperm[step], colperm[pj]);
    if (pi != step)
      for (size_t j = 0; j < cols; ++j) std::swap(a[step * cols + j], a[pi * cols + j]);
    std::complex<double> piv = a[step * cols + colperm[step]];
    for (size_t i = step + 1; i < rows; ++i) {
      std::complex<double> f = a[i * cols + colperm[step]] / piv;
      if (f == std::complex<double>{}) continue;
      for (size_t j = step; j < cols; ++j) a[i * cols + colperm[j]] -= f * a[step * cols + colperm[j]];
    }
    ++rank;
  }
  return rank;
}

}  // namespace et
