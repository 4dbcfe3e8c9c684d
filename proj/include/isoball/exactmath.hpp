#ifndef ISOBALL_EXACTMATH_HPP
#define ISOBALL_EXACTMATH_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace isoball {

// All counting is done in arbitrary precision; verdicts never touch floating
// point. Natural is used where values are counts (callers keep them >= 0),
// Rational is always stored reduced with a positive denominator.
using Integer  = mpz_class;
using Natural  = mpz_class;
using Rational = mpq_class;

Rational make_rational(Integer num, Integer den);

// Row of binomial coefficients C(n,0..n), built once by the multiplicative
// recurrence and memoized. The returned reference stays valid for the
// lifetime of the process; safe to call from multiple threads.
const std::vector<Natural>& binom_row(unsigned n);

Natural binom(unsigned n, unsigned k);            // 0 when k > n
Natural ball_size(unsigned n, unsigned r);        // sum_{k<=min(r,n)} C(n,k)
Natural pow2(unsigned e);
Natural isqrt_floor(const Natural& x);

// floor(q * n) for a nonnegative rational q
Natural floor_mul(const Rational& q, unsigned n);

// slice/ball ratio monotonicity, checked as an exact rational comparison
// per step r -> r+1
struct RatioStep {
  unsigned r = 0;
  Rational ratio_r;      // |S_n(r)|   / |B_n(r)|
  Rational ratio_r1;     // |S_n(r+1)| / |B_n(r+1)|
  bool holds = false;
};

struct RatioMonotoneResult {
  unsigned n = 0;
  std::vector<RatioStep> steps;
  bool all_hold = false;
};

RatioMonotoneResult check_ratio_monotone(unsigned n);  // pre: n >= 1

// n*|S_n(r)|^2 >= |B_n(r)|^2, the squared form of the sqrt(n) lower bound
struct SliceLowerBoundResult {
  unsigned n = 0, r = 0;
  Natural lhs;   // n * C(n,r)^2
  Natural rhs;   // ball_size(n,r)^2
  bool holds = false;
};

// pre: n >= 3 and 2r <= n; throws std::invalid_argument otherwise
SliceLowerBoundResult check_slice_lower_bound(unsigned n, unsigned r);

// C(2m,m)^2 * 4m >= 4^(2m), the squared form of the central binomial bound
struct CentralBinomialResult {
  unsigned m = 0;
  Natural lhs, rhs;
  bool holds = false;
};

CentralBinomialResult check_central_binomial(unsigned m);  // pre: m >= 1

// An exact value of the form coeff * sqrt(radicand). Comparisons against
// rationals are done in squared form, never through floating point.
struct SqrtQuantity {
  Rational coeff;
  unsigned long radicand = 0;

  bool is_zero() const;
};

// -1, 0, +1 for q < v, q == v, q > v
int compare(const SqrtQuantity& q, const Rational& v);

// Decimal renderings for reports only; verdicts never depend on these.
std::string to_decimal_string(const Rational& q, int significant_digits = 30);
std::string to_decimal_string(const SqrtQuantity& q, int significant_digits = 30);

}  // namespace isoball

#endif
