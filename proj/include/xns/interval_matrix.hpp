#pragma once

#include <optional>
#include <vector>

#include "xns/interval.hpp"

namespace xns {

// Dense row-major matrix of real intervals.
class IntervalMatrix {
 public:
  IntervalMatrix(std::size_t rows, std::size_t cols, mpfr_prec_t prec);
  static IntervalMatrix identity(std::size_t n, mpfr_prec_t prec);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RealInterval& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const RealInterval& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntervalMatrix transpose() const;
  friend IntervalMatrix operator*(const IntervalMatrix& a, const IntervalMatrix& b);
  friend bool operator==(const IntervalMatrix& a, const IntervalMatrix& b);

 private:
  std::size_t rows_, cols_;
  std::vector<RealInterval> data_;
};

struct InverseResult {
  IntervalMatrix inverse;
  RealInterval determinant;
};

// Interval Gauss-Jordan elimination. Pivots are chosen among entries whose
// interval excludes 0 (largest midpoint magnitude first); if a column has no
// such entry the matrix is either singular or under-resolved at this
// precision and PrecisionExhausted is thrown.
InverseResult invert(const IntervalMatrix& m);

// Determinant enclosure by the same elimination, or nullopt when no pivot
// can be certified nonzero.
std::optional<RealInterval> try_determinant(const IntervalMatrix& m);

}  // namespace xns
