#include "xns/bigfloat.hpp"

#include <cstdlib>
#include <stdexcept>

namespace xns {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::hex() const {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%Ra", value_) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

BigFloat BigFloat::from_hex(const std::string& text) {
  // Enough bits to hold every hex digit of the mantissa exactly.
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(4 * text.size() + 8);
  BigFloat out(prec);
  if (mpfr_set_str(out.value_, text.c_str(), 0, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a float literal: " + text);
  }
  return out;
}

std::string BigFloat::decimal(int digits, mpfr_rnd_t rnd) const {
  if (mpfr_zero_p(value_)) return "0";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  if (mpfr_nan_p(value_)) return "nan";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), value_, rnd);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  long e = static_cast<long>(exp10) - 1;
  out += (e < 0 ? "e-" : "e+") + std::to_string(std::labs(e));
  return out;
}

}  // namespace xns
