#pragma once

#include <mpfr.h>

#include <string>

namespace xns {

// Owning RAII handle for one MPFR float. Copies preserve precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double(mpfr_rnd_t rnd) const { return mpfr_get_d(value_, rnd); }
  int sign() const { return mpfr_sgn(value_); }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }

  // Exact C99 hexadecimal rendering ("0x1.8p+3"); parses back losslessly.
  std::string hex() const;
  static BigFloat from_hex(const std::string& text);

  // Decimal rendering with `digits` significant digits, rounded in `rnd`.
  std::string decimal(int digits, mpfr_rnd_t rnd) const;

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_less_p(a.value_, b.value_) != 0;
  }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) {
    return mpfr_lessequal_p(a.value_, b.value_) != 0;
  }

 private:
  mpfr_t value_;
};

}  // namespace xns
