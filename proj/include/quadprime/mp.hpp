#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace quadprime {

// Thin RAII wrapper around mpfr_t. Binary operations round to nearest and
// carry the larger precision of the two operands; directed-rounding variants
// back the interval layer below.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(long long n, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_sj(r.v_, n, MPFR_RNDN);
        return r;
    }
    static Real of_d(double d, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_d(r.v_, d, MPFR_RNDN);
        return r;
    }
    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static Real e(mpfr_prec_t prec) {
        Real one = of(1, prec);
        Real r(prec);
        mpfr_exp(r.v_, one.v_, MPFR_RNDN);
        return r;
    }
    // sqrt of a nonnegative integer
    static Real sqrt_of(long long n, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
        Real r(prec);
        mpfr_sqrt(r.v_, of(n, prec).v_, rnd);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return cmp(a, b) == 0; }

#define QP_REAL_BINOP(name, fn)                                              \
    friend Real name(const Real& a, const Real& b, mpfr_rnd_t rnd) {         \
        Real r(a.prec() > b.prec() ? a.prec() : b.prec());                   \
        fn(r.v_, a.v_, b.v_, rnd);                                           \
        return r;                                                            \
    }
    QP_REAL_BINOP(add, mpfr_add)
    QP_REAL_BINOP(sub, mpfr_sub)
    QP_REAL_BINOP(mul, mpfr_mul)
    QP_REAL_BINOP(div, mpfr_div)
    QP_REAL_BINOP(atan2r, mpfr_atan2)
    QP_REAL_BINOP(powr, mpfr_pow)
#undef QP_REAL_BINOP

    friend Real operator+(const Real& a, const Real& b) { return add(a, b, MPFR_RNDN); }
    friend Real operator-(const Real& a, const Real& b) { return sub(a, b, MPFR_RNDN); }
    friend Real operator*(const Real& a, const Real& b) { return mul(a, b, MPFR_RNDN); }
    friend Real operator/(const Real& a, const Real& b) { return div(a, b, MPFR_RNDN); }
    friend Real operator-(const Real& a) {
        Real r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

#define QP_REAL_UNOP(name, fn)                                               \
    friend Real name(const Real& a, mpfr_rnd_t rnd) {                        \
        Real r(a.prec());                                                    \
        fn(r.v_, a.v_, rnd);                                                 \
        return r;                                                            \
    }                                                                        \
    friend Real name(const Real& a) { return name(a, MPFR_RNDN); }
    QP_REAL_UNOP(sqrt_, mpfr_sqrt)
    QP_REAL_UNOP(log_, mpfr_log)
    QP_REAL_UNOP(exp_, mpfr_exp)
    QP_REAL_UNOP(sin_, mpfr_sin)
    QP_REAL_UNOP(cos_, mpfr_cos)
    QP_REAL_UNOP(abs_, mpfr_abs)
#undef QP_REAL_UNOP

    friend Real floor_(const Real& a) {
        Real r(a.prec());
        mpfr_floor(r.v_, a.v_);
        return r;
    }
    friend Real ceil_(const Real& a) {
        Real r(a.prec());
        mpfr_ceil(r.v_, a.v_);
        return r;
    }
    friend Real round_(const Real& a) {
        Real r(a.prec());
        mpfr_round(r.v_, a.v_);
        return r;
    }
    long long to_ll() const { return mpfr_get_sj(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

struct Complex {
    Real re, im;

    explicit Complex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    Real abs2() const { return re * re + im * im; }
    Real abs() const { return sqrt_(abs2()); }
};

// Closed interval with directed rounding, for certified inequality tests.
struct IReal {
    Real lo, hi;

    static IReal point(const Real& x) { return {x, x}; }
    static IReal of(long long n, mpfr_prec_t prec) { return point(Real::of(n, prec)); }

    friend IReal operator+(const IReal& a, const IReal& b) {
        return {add(a.lo, b.lo, MPFR_RNDD), add(a.hi, b.hi, MPFR_RNDU)};
    }
    friend IReal operator-(const IReal& a, const IReal& b) {
        return {sub(a.lo, b.hi, MPFR_RNDD), sub(a.hi, b.lo, MPFR_RNDU)};
    }
    friend IReal operator*(const IReal& a, const IReal& b) {
        Real cands_lo[4] = {mul(a.lo, b.lo, MPFR_RNDD), mul(a.lo, b.hi, MPFR_RNDD),
                            mul(a.hi, b.lo, MPFR_RNDD), mul(a.hi, b.hi, MPFR_RNDD)};
        Real cands_hi[4] = {mul(a.lo, b.lo, MPFR_RNDU), mul(a.lo, b.hi, MPFR_RNDU),
                            mul(a.hi, b.lo, MPFR_RNDU), mul(a.hi, b.hi, MPFR_RNDU)};
        IReal r{cands_lo[0], cands_hi[0]};
        for (int i = 1; i < 4; i++) {
            if (cands_lo[i] < r.lo) r.lo = cands_lo[i];
            if (cands_hi[i] > r.hi) r.hi = cands_hi[i];
        }
        return r;
    }
    // b must not contain zero
    friend IReal operator/(const IReal& a, const IReal& b) {
        Real cands_lo[4] = {div(a.lo, b.lo, MPFR_RNDD), div(a.lo, b.hi, MPFR_RNDD),
                            div(a.hi, b.lo, MPFR_RNDD), div(a.hi, b.hi, MPFR_RNDD)};
        Real cands_hi[4] = {div(a.lo, b.lo, MPFR_RNDU), div(a.lo, b.hi, MPFR_RNDU),
                            div(a.hi, b.lo, MPFR_RNDU), div(a.hi, b.hi, MPFR_RNDU)};
        IReal r{cands_lo[0], cands_hi[0]};
        for (int i = 1; i < 4; i++) {
            if (cands_lo[i] < r.lo) r.lo = cands_lo[i];
            if (cands_hi[i] > r.hi) r.hi = cands_hi[i];
        }
        return r;
    }
    friend IReal iabs(const IReal& a) {
        if (a.lo.sign() >= 0) return a;
        if (a.hi.sign() <= 0) return {-a.hi, -a.lo};
        Real zlo = Real::of(0, a.lo.prec());
        Real m = (-a.lo > a.hi) ? -a.lo : a.hi;
        return {zlo, m};
    }
    // requires lo >= 0
    friend IReal isqrt(const IReal& a) { return {sqrt_(a.lo, MPFR_RNDD), sqrt_(a.hi, MPFR_RNDU)}; }
    // requires lo > 0
    friend IReal ilog(const IReal& a) { return {log_(a.lo, MPFR_RNDD), log_(a.hi, MPFR_RNDU)}; }

    double mid() const { return (lo.to_double() + hi.to_double()) / 2; }
};

} // namespace quadprime
