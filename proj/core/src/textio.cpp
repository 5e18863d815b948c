#include "sigma2/rational.hpp"

#include <cstdlib>

#include "sigma2/errors.hpp"

namespace sigma2 {

Int pow2(unsigned long e) {
  Int v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, e);
  return v;
}

Rat pow2_inv(unsigned long e) {
  Rat v(1, pow2(e));
  v.canonicalize();
  return v;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw ParseError(0, "empty rational");
  // validate shape: optional sign, digits, optional /digits
  std::size_t i = 0;
  if (text[i] == '+' || text[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    ++i;
    ++digits;
  }
  if (digits == 0) throw ParseError(i, "expected digits in rational");
  if (i < text.size()) {
    if (text[i] != '/') throw ParseError(i, "expected '/' in rational");
    ++i;
    std::size_t den_digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      ++i;
      ++den_digits;
    }
    if (den_digits == 0 || i != text.size()) {
      throw ParseError(i, "expected denominator digits");
    }
  }
  Rat v;
  if (mpq_set_str(v.get_mpq_t(), text.c_str(), 10) != 0) {
    throw ParseError(0, "bad rational: " + text);
  }
  if (mpz_sgn(mpq_denref(v.get_mpq_t())) == 0) {
    throw ParseError(0, "zero denominator: " + text);
  }
  v.canonicalize();
  return v;
}

std::string decimal_string(const Rat& value, unsigned digits) {
  if (digits == 0) digits = 1;
  if (value == 0) return "0";

  Int p = value.get_num();
  Int q = value.get_den();
  std::string sign;
  if (p < 0) {
    sign = "-";
    p = -p;
  }

  // Scale p/q to an integer with exactly `digits` significant digits:
  // find e with 10^(digits-1) <= p*10^shift/q < 10^digits, round half even.
  // exp10 tracks the position of the decimal point.
  long exp10 = 0;  // value ~ mant * 10^exp10 once normalized
  Int lo;          // 10^(digits-1)
  mpz_ui_pow_ui(lo.get_mpz_t(), 10, digits - 1);
  Int hi = lo * 10;

  Int scaled_num = p;
  Int scaled_den = q;
  // normalize into [lo, hi) by powers of ten
  while (scaled_num / scaled_den >= hi) {
    scaled_den *= 10;
    ++exp10;
  }
  while (scaled_num / scaled_den < lo) {
    scaled_num *= 10;
    --exp10;
  }
  Int mant, rem;
  mpz_fdiv_qr(mant.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(),
              scaled_den.get_mpz_t());
  // round half to even
  Int twice = rem * 2;
  if (twice > scaled_den || (twice == scaled_den && mpz_odd_p(mant.get_mpz_t()))) {
    mant += 1;
    if (mant == hi) {
      mant = lo;
      ++exp10;
    }
  }

  std::string m = mant.get_str();
  // mant has `digits` digits and value = mant * 10^exp10, so the count of
  // digits before the decimal point is digits + exp10
  long point = exp10 + static_cast<long>(digits);
  std::string out;
  if (point <= 0) {
    out = "0.";
    for (long i = 0; i < -point; ++i) out += '0';
    out += m;
  } else if (static_cast<std::size_t>(point) >= m.size()) {
    out = m;
    for (long i = 0; i < point - static_cast<long>(m.size()); ++i) out += '0';
  } else {
    out = m.substr(0, static_cast<std::size_t>(point)) + "." +
          m.substr(static_cast<std::size_t>(point));
  }
  // trim trailing zeros after a decimal point, keep at least one digit
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return sign + out;
}

}  // namespace sigma2
