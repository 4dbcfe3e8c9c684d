#include "isoball/exactmath.hpp"

#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace isoball {

Rational make_rational(Integer num, Integer den) {
  if (sgn(den) == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

namespace {

std::mutex g_binom_mutex;
// Rows are heap-allocated and never moved, so references handed out stay
// valid while other threads grow the table.
std::unordered_map<unsigned, std::unique_ptr<const std::vector<Natural>>>& binom_table() {
  static std::unordered_map<unsigned, std::unique_ptr<const std::vector<Natural>>> table;
  return table;
}

std::unique_ptr<const std::vector<Natural>> build_row(unsigned n) {
  auto row = std::make_unique<std::vector<Natural>>(n + 1);
  (*row)[0] = 1;
  for (unsigned k = 1; k <= n; ++k) {
    // C(n,k) = C(n,k-1) * (n-k+1) / k, the division is exact
    mpz_mul_ui((*row)[k].get_mpz_t(), (*row)[k - 1].get_mpz_t(), n - k + 1);
    mpz_divexact_ui((*row)[k].get_mpz_t(), (*row)[k].get_mpz_t(), k);
  }
  return row;
}

}  // namespace

const std::vector<Natural>& binom_row(unsigned n) {
  {
    std::lock_guard<std::mutex> lock(g_binom_mutex);
    auto it = binom_table().find(n);
    if (it != binom_table().end()) return *it->second;
  }
  auto row = build_row(n);
  std::lock_guard<std::mutex> lock(g_binom_mutex);
  auto [it, inserted] = binom_table().emplace(n, std::move(row));
  (void)inserted;  // a concurrent builder may have won; either row is identical
  return *it->second;
}

Natural binom(unsigned n, unsigned k) {
  if (k > n) return Natural(0);
  return binom_row(n)[k];
}

Natural ball_size(unsigned n, unsigned r) {
  const auto& row = binom_row(n);
  Natural total = 0;
  const unsigned top = std::min(r, n);
  for (unsigned k = 0; k <= top; ++k) total += row[k];
  return total;
}

Natural pow2(unsigned e) {
  Natural x;
  mpz_ui_pow_ui(x.get_mpz_t(), 2, e);
  return x;
}

Natural isqrt_floor(const Natural& x) {
  if (sgn(x) < 0) throw std::invalid_argument("isqrt_floor: negative argument");
  Natural r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

Natural floor_mul(const Rational& q, unsigned n) {
  if (sgn(q) < 0) throw std::invalid_argument("floor_mul: negative rational");
  Natural num = q.get_num() * n;
  Natural out;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

RatioMonotoneResult check_ratio_monotone(unsigned n) {
  if (n < 1) throw std::invalid_argument("check_ratio_monotone: n >= 1 required");
  RatioMonotoneResult res;
  res.n = n;
  res.all_hold = true;
  const auto& row = binom_row(n);
  Natural ball = row[0];
  Rational prev = make_rational(row[0], ball);  // r = 0: 1/1
  for (unsigned r = 0; r + 1 <= n; ++r) {
    Natural ball_next = ball + row[r + 1];
    Rational next = make_rational(row[r + 1], ball_next);
    RatioStep step;
    step.r = r;
    step.ratio_r = prev;
    step.ratio_r1 = next;
    step.holds = prev >= next;
    res.all_hold = res.all_hold && step.holds;
    res.steps.push_back(std::move(step));
    ball = std::move(ball_next);
    prev = std::move(next);
  }
  return res;
}

SliceLowerBoundResult check_slice_lower_bound(unsigned n, unsigned r) {
  if (n < 3 || 2 * r > n)
    throw std::invalid_argument("check_slice_lower_bound: requires n >= 3 and r <= n/2");
  SliceLowerBoundResult res;
  res.n = n;
  res.r = r;
  Natural slice = binom(n, r);
  Natural ball = ball_size(n, r);
  res.lhs = slice * slice * n;
  res.rhs = ball * ball;
  res.holds = res.lhs >= res.rhs;
  return res;
}

CentralBinomialResult check_central_binomial(unsigned m) {
  if (m < 1) throw std::invalid_argument("check_central_binomial: m >= 1 required");
  CentralBinomialResult res;
  res.m = m;
  Natural mid = binom(2 * m, m);
  res.lhs = mid * mid * (4 * m);
  res.rhs = pow2(4 * m);
  res.holds = res.lhs >= res.rhs;
  return res;
}

bool SqrtQuantity::is_zero() const { return radicand == 0 || sgn(coeff) == 0; }

int compare(const SqrtQuantity& q, const Rational& v) {
  const int sq = q.is_zero() ? 0 : sgn(q.coeff);
  const int sv = sgn(v);
  if (sq != sv) return sq < sv ? -1 : 1;
  if (sq == 0) return 0;
  Rational lhs = q.coeff * q.coeff * Rational(static_cast<unsigned long>(q.radicand));
  Rational rhs = v * v;
  const int c = cmp(lhs, rhs);
  const int cc = c < 0 ? -1 : (c > 0 ? 1 : 0);
  return sq > 0 ? cc : -cc;
}

namespace {

// Decimal rendering of num/den (both > 0) with `digits` significant digits,
// truncated toward zero.
std::string decimal_digits(const Natural& num, const Natural& den, int digits, long& exp10) {
  // smallest e with num*10^e >= den gives the magnitude
  Natural scaled = num;
  exp10 = 0;
  while (scaled < den) {
    scaled *= 10;
    --exp10;
  }
  Natural q = scaled / den;
  while (q >= 10) {
    ++exp10;
    q /= 10;
  }
  // now num/den is in [10^exp10, 10^(exp10+1)); extract digits
  Natural shifted = num;
  long shift = digits - 1 - exp10;
  if (shift > 0) {
    Natural p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    shifted *= p;
  } else if (shift < 0) {
    Natural p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
    shifted /= p;
  }
  Natural d = shifted / den;
  return d.get_str();
}

std::string format_decimal(int sign, const Natural& num, const Natural& den, int digits) {
  if (sign == 0 || sgn(num) == 0) return "0";
  long exp10 = 0;
  std::string ds = decimal_digits(num, den, digits, exp10);
  std::ostringstream out;
  if (sign < 0) out << '-';
  if (exp10 >= 0 && exp10 < digits) {
    out << ds.substr(0, exp10 + 1);
    std::string frac = ds.substr(exp10 + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out << '.' << frac;
  } else if (exp10 < 0 && exp10 >= -4) {
    out << "0.";
    for (long i = 1; i < -exp10; ++i) out << '0';
    std::string frac = ds;
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    out << frac;
  } else {
    out << ds.substr(0, 1);
    std::string frac = ds.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out << '.' << frac;
    out << 'e' << exp10;
  }
  return out.str();
}

}  // namespace

std::string to_decimal_string(const Rational& q, int significant_digits) {
  Natural num = abs(q.get_num());
  return format_decimal(sgn(q), num, q.get_den(), significant_digits);
}

std::string to_decimal_string(const SqrtQuantity& q, int significant_digits) {
  if (q.is_zero()) return "0";
  // coeff * sqrt(rad) = num * isqrt(rad * 10^(2p)) / (den * 10^p), p guard digits
  const int p = significant_digits + 10;
  Natural scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(2 * p));
  Natural root = isqrt_floor(Natural(static_cast<unsigned long>(q.radicand)) * scale);
  Natural pnum = abs(q.coeff.get_num()) * root;
  Natural pden = q.coeff.get_den();
  Natural tens;
  mpz_ui_pow_ui(tens.get_mpz_t(), 10, static_cast<unsigned long>(p));
  pden *= tens;
  return format_decimal(sgn(q.coeff), pnum, pden, significant_digits);
}

}  // namespace isoball
