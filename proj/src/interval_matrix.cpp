#include "xns/interval_matrix.hpp"

#include <cmath>
#include <utility>

#include "xns/errors.hpp"

namespace xns {

IntervalMatrix::IntervalMatrix(std::size_t rows, std::size_t cols, mpfr_prec_t prec)
    : rows_(rows), cols_(cols), data_(rows * cols, RealInterval(prec)) {}

IntervalMatrix IntervalMatrix::identity(std::size_t n, mpfr_prec_t prec) {
  IntervalMatrix m(n, n, prec);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RealInterval(1, prec);
  return m;
}

IntervalMatrix IntervalMatrix::transpose() const {
  IntervalMatrix t(cols_, rows_, data_.empty() ? kDefaultPrecision : data_[0].precision());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntervalMatrix operator*(const IntervalMatrix& a, const IntervalMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch");
  mpfr_prec_t prec = a.data_.empty() ? kDefaultPrecision : a.data_[0].precision();
  IntervalMatrix out(a.rows_, b.cols_, prec);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      RealInterval acc(prec);
      for (std::size_t k = 0; k < a.cols_; ++k) acc += a(i, k) * b(k, j);
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

bool operator==(const IntervalMatrix& a, const IntervalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

struct Elimination {
  IntervalMatrix work;
  IntervalMatrix inverse;
  RealInterval determinant;
  bool complete = false;
};

// Gauss-Jordan on [m | I]; stops early (complete=false) if a column has no
// certified-nonzero pivot candidate.
Elimination eliminate(const IntervalMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("square matrix required");
  const std::size_t n = m.rows();
  mpfr_prec_t prec = n ? m(0, 0).precision() : kDefaultPrecision;
  Elimination e{m, IntervalMatrix::identity(n, prec), RealInterval(1, prec)};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    double best = -1;
    for (std::size_t r = col; r < n; ++r) {
      if (e.work(r, col).contains_zero()) continue;
      double mag = std::fabs(e.work(r, col).mid_double());
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (pivot == n) return e;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(e.work(pivot, c), e.work(col, c));
        std::swap(e.inverse(pivot, c), e.inverse(col, c));
      }
      e.determinant = -e.determinant;
    }
    RealInterval piv = e.work(col, col);
    e.determinant *= piv;
    for (std::size_t c = 0; c < n; ++c) {
      e.work(col, c) /= piv;
      e.inverse(col, c) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      RealInterval factor = e.work(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        e.work(r, c) -= factor * e.work(col, c);
        e.inverse(r, c) -= factor * e.inverse(col, c);
      }
    }
  }
  e.complete = true;
  return e;
}

}  // namespace

InverseResult invert(const IntervalMatrix& m) {
  Elimination e = eliminate(m);
  if (!e.complete) throw PrecisionExhausted("no certified nonzero pivot during inversion");
  return {std::move(e.inverse), std::move(e.determinant)};
}

std::optional<RealInterval> try_determinant(const IntervalMatrix& m) {
  Elimination e = eliminate(m);
  if (!e.complete) return std::nullopt;
  return e.determinant;
}

}  // namespace xns
