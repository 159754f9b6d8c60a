#pragma once
#include <mpfr.h>

#include <stdexcept>

#include "golomb/base.hpp"

namespace golomb::precise {

// Certified evaluations of the quantities the formula depends on. Every
// function brackets the true value between directed-rounding bounds and
// widens the working precision until the decision is unambiguous. The
// compared quantities are never exactly equal (e^(k+1/2) is irrational,
// and ln n is irrational for every integer n >= 2), so the loops terminate.

namespace detail {

class Real {
public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Real() { mpfr_clear(v_); }
    Real(const Real&) = delete;
    Real& operator=(const Real&) = delete;
    operator mpfr_ptr() { return v_; }
    operator mpfr_srcptr() const { return v_; }

private:
    mpfr_t v_;
};

inline constexpr mpfr_prec_t kStartPrec = 128;
inline constexpr mpfr_prec_t kMaxPrec = 8192;

[[noreturn]] inline void unstable()
{
    throw std::runtime_error("precise: comparison did not stabilize");
}

// ln(n) - shift/2 with directed rounding, shift in {1, 3}.
inline void log_shifted(mpfr_ptr out, u64 n, unsigned shift, mpfr_rnd_t rnd)
{
    mpfr_set_ui(out, n, MPFR_RNDZ); // exact: precision >= 128
    mpfr_log(out, out, rnd);
    mpfr_sub_d(out, out, shift * 0.5, rnd); // shift/2 is exact in binary
}

inline bool fits_u64(mpfr_srcptr v)
{
    return mpfr_fits_ulong_p(v, MPFR_RNDZ) != 0;
}

} // namespace detail

// floor(e^(k + 1/2)); throws overflow_error once the value leaves 64-bit range.
inline u64 floor_exp_half(u64 k)
{
    using namespace detail;
    for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
        Real x(prec), lo(prec), hi(prec), flo(prec), fhi(prec);
        mpfr_set_ui(x, k, MPFR_RNDZ);
        mpfr_add_d(x, x, 0.5, MPFR_RNDZ);
        mpfr_exp(lo, x, MPFR_RNDD);
        mpfr_exp(hi, x, MPFR_RNDU);
        mpfr_floor(flo, lo);
        mpfr_floor(fhi, hi);
        if (mpfr_cmp(flo, fhi) != 0)
            continue;
        if (mpfr_equal_p(flo, lo))
            continue; // cannot certify e^(k+1/2) > floor yet
        if (!fits_u64(flo))
            throw std::overflow_error("floor_exp_half: result exceeds 64-bit range");
        return mpfr_get_ui(flo, MPFR_RNDZ);
    }
    unstable();
}

// Sign of (ln n - 1/2) - k. Never zero for integers n >= 1.
inline int cmp_log_shift(u64 n, u64 k)
{
    using namespace detail;
    if (n == 0)
        throw std::invalid_argument("cmp_log_shift: n must be positive");
    for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
        Real lo(prec), hi(prec);
        log_shifted(lo, n, 1, MPFR_RNDD);
        log_shifted(hi, n, 1, MPFR_RNDU);
        if (mpfr_cmp_ui(lo, k) > 0)
            return 1;
        if (mpfr_cmp_ui(hi, k) < 0)
            return -1;
    }
    unstable();
}

// floor(ln n - 1/2) for n >= 2.
inline u64 floor_log_shift_exact(u64 n)
{
    using namespace detail;
    if (n < 2)
        throw std::invalid_argument("floor_log_shift_exact: n must be at least 2");
    for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
        Real lo(prec), hi(prec);
        log_shifted(lo, n, 1, MPFR_RNDD);
        log_shifted(hi, n, 1, MPFR_RNDU);
        mpfr_floor(lo, lo);
        mpfr_floor(hi, hi);
        if (mpfr_cmp(lo, hi) == 0 && fits_u64(lo))
            return mpfr_get_ui(lo, MPFR_RNDZ);
    }
    unstable();
}

// floor(n / (ln n - 1/2)) for n >= 2, certified against precision widening.
inline u64 floor_quotient_log(u64 n)
{
    using namespace detail;
    if (n < 2)
        throw std::invalid_argument("floor_quotient_log: n must be at least 2");
    for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
        Real dlo(prec), dhi(prec), qlo(prec), qhi(prec);
        log_shifted(dlo, n, 1, MPFR_RNDD);
        log_shifted(dhi, n, 1, MPFR_RNDU);
        if (mpfr_cmp_ui(dlo, 0) <= 0)
            continue; // denominator interval not yet positive
        // lower quotient bound divides by the upper denominator bound
        mpfr_ui_div(qlo, n, dhi, MPFR_RNDD);
        mpfr_ui_div(qhi, n, dlo, MPFR_RNDU);
        Real flo(prec), fhi(prec);
        mpfr_floor(flo, qlo);
        mpfr_floor(fhi, qhi);
        if (mpfr_cmp(flo, fhi) != 0)
            continue;
        if (mpfr_equal_p(flo, qlo))
            continue;
        if (!fits_u64(flo))
            throw std::overflow_error("floor_quotient_log: result exceeds 64-bit range");
        return mpfr_get_ui(flo, MPFR_RNDZ);
    }
    unstable();
}

// Sign of pi_n - n/(ln n - shift/2), shift in {1, 3}. Never zero.
inline int cmp_count_vs_bound(u64 pi_n, u64 n, unsigned shift)
{
    using namespace detail;
    if (n < 2 || (shift != 1 && shift != 3))
        throw std::invalid_argument("cmp_count_vs_bound: bad arguments");
    for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
        Real dlo(prec), dhi(prec), blo(prec), bhi(prec);
        log_shifted(dlo, n, shift, MPFR_RNDD);
        log_shifted(dhi, n, shift, MPFR_RNDU);
        if (mpfr_cmp_ui(dlo, 0) <= 0)
            continue;
        mpfr_ui_div(blo, n, dhi, MPFR_RNDD);
        mpfr_ui_div(bhi, n, dlo, MPFR_RNDU);
        if (mpfr_cmp_ui(bhi, pi_n) < 0)
            return 1;
        if (mpfr_cmp_ui(blo, pi_n) > 0)
            return -1;
    }
    unstable();
}

// Sign of n/pi_n - (ln n - shift/2), shift in {1, 3}. Never zero.
inline int cmp_ratio_vs_bound(u64 n, u64 pi_n, unsigned shift)
{
    using namespace detail;
    if (n < 2 || pi_n == 0 || (shift != 1 && shift != 3))
        throw std::invalid_argument("cmp_ratio_vs_bound: bad arguments");
    for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
        Real rlo(prec), rhi(prec), slo(prec), shi(prec);
        mpfr_set_ui(rlo, n, MPFR_RNDZ);
        mpfr_div_ui(rhi, rlo, pi_n, MPFR_RNDU);
        mpfr_div_ui(rlo, rlo, pi_n, MPFR_RNDD);
        log_shifted(slo, n, shift, MPFR_RNDD);
        log_shifted(shi, n, shift, MPFR_RNDU);
        if (mpfr_cmp(rlo, shi) > 0)
            return 1;
        if (mpfr_cmp(rhi, slo) < 0)
            return -1;
    }
    unstable();
}

} // namespace golomb::precise
