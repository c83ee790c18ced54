#include "quadprime/field.hpp"

#include <gmp.h>

#include <cmath>
#include <cstdlib>
#include <limits>

namespace quadprime {

namespace {

using i128 = __int128;

long long chk(i128 v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw CapacityError("coordinate overflow in exact arithmetic");
    return static_cast<long long>(v);
}

unsigned long long isqrt_u128(unsigned __int128 n) {
    if (n == 0) return 0;
    auto r = static_cast<unsigned long long>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n) r--;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) r++;
    return r;
}

void mpz_set_i128(mpz_t z, i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_import(z, 1, 1, sizeof(u), 0, 0, &u);
    if (neg) mpz_neg(z, z);
}

// exact sign of (S + T*sqrt(d))/2, d > 1
int sign_st(i128 S, i128 T, long long d) {
    if (S >= 0 && T >= 0) return (S == 0 && T == 0) ? 0 : 1;
    if (S <= 0 && T <= 0) return -1;
    constexpr i128 kSafe = (i128{1} << 52);
    i128 aS = S < 0 ? -S : S, aT = T < 0 ? -T : T;
    if (aS < kSafe && aT < kSafe && d < (1LL << 20)) {
        i128 lhs = aS * aS, rhs = aT * aT * d;
        int c = lhs == rhs ? 0 : (lhs > rhs ? 1 : -1);
        return S > 0 ? c : -c; // S>0>T: sign(S^2 - T^2 d); T>0>S: opposite
    }
    mpz_t zs, zt;
    mpz_init(zs);
    mpz_init(zt);
    mpz_set_i128(zs, aS);
    mpz_mul(zs, zs, zs);
    mpz_set_i128(zt, aT);
    mpz_mul(zt, zt, zt);
    mpz_mul_si(zt, zt, d);
    int c = mpz_cmp(zs, zt);
    mpz_clear(zs);
    mpz_clear(zt);
    c = c == 0 ? 0 : (c > 0 ? 1 : -1);
    return S > 0 ? c : -c;
}

} // namespace

Field Field::make(long long d) {
    if (d == 0 || d == 1) throw RejectedInput("d must be a squarefree integer, not 0 or 1");
    long long ad = d < 0 ? -d : d;
    for (long long p = 2; p * p <= ad; p++)
        if (ad % (p * p) == 0) throw RejectedInput("d must be squarefree");

    Field f;
    f.d_ = d;
    f.sqrt_abs_d_ = std::sqrt(static_cast<double>(ad));
    long long dm4 = ((d % 4) + 4) % 4;
    f.half_ = (dm4 == 1);
    f.disc_ = f.half_ ? d : 4 * d;
    f.eta_t_ = f.half_ ? 1 : 0;
    f.eta_n_ = f.half_ ? (d - 1) / 4 : d;

    if (d < 0) {
        f.w_ = (d == -1) ? 4 : (d == -3) ? 6 : 2;
    } else {
        // Smallest unit > 1: ascend the sqrt(d)-coordinate and solve for the
        // rational coordinate; unit y-coordinates are strictly increasing with
        // the unit, so the first solution row holds the fundamental unit.
        long long DK = f.disc_; // t^2 + 4n
        const long long ymax = 100000000;
        bool found = false;
        for (long long y = 1; y <= ymax && !found; y++) {
            for (int sgn = -1; sgn <= 1; sgn += 2) {
                i128 disc = static_cast<i128>(DK) * y * y + 4 * sgn;
                if (disc < 0) continue;
                unsigned long long s = isqrt_u128(static_cast<unsigned __int128>(disc));
                if (static_cast<i128>(s) * s != disc) continue;
                for (int rs = -1; rs <= 1; rs += 2) {
                    i128 num = -static_cast<i128>(f.eta_t_) * y + rs * static_cast<i128>(s);
                    if (num % 2 != 0) continue;
                    AlgebraicInt u{chk(num / 2), y};
                    i128 n = static_cast<i128>(u.x) * u.x + static_cast<i128>(f.eta_t_) * u.x * u.y -
                             static_cast<i128>(f.eta_n_) * u.y * u.y;
                    if (n != 1 && n != -1) continue;
                    if (f.sign_sigma1(f.sub(u, {1, 0})) <= 0) continue; // need sigma1 > 1
                    if (!found || f.cmp_abs_sigma1(u, f.fund_unit_) < 0) {
                        f.fund_unit_ = u;
                        found = true;
                    }
                }
            }
        }
        if (!found) throw CapacityError("fundamental unit search exceeded coordinate bound");
        // inverse of a unit: conj(u) * N(u)
        AlgebraicInt c = f.conj(f.fund_unit_);
        i128 n = f.norm_signed(f.fund_unit_);
        f.fund_unit_inv_ = (n == 1) ? c : f.neg(c);
    }
    return f;
}

int Field::unit_order() const {
    if (!imaginary()) throw UnsupportedSignature("unit group is infinite for real fields");
    return w_;
}

AlgebraicInt Field::unit_generator() const {
    if (!imaginary()) throw UnsupportedSignature("unit generator defined for imaginary fields");
    if (d_ == -1 || d_ == -3) return {0, 1};
    return {-1, 0};
}

std::vector<AlgebraicInt> Field::units() const {
    AlgebraicInt xi = unit_generator();
    std::vector<AlgebraicInt> us;
    AlgebraicInt u{1, 0};
    do {
        us.push_back(u);
        u = mul(u, xi);
    } while (!(u == AlgebraicInt{1, 0}));
    return us;
}

AlgebraicInt Field::fundamental_unit() const {
    if (imaginary()) throw UnsupportedSignature("fundamental unit defined for real fields");
    return fund_unit_;
}

AlgebraicInt Field::fundamental_unit_inverse() const {
    if (imaginary()) throw UnsupportedSignature("fundamental unit defined for real fields");
    return fund_unit_inv_;
}

Real Field::fundamental_unit_value(long prec) const {
    return embed(fundamental_unit(), prec).v1;
}

Real Field::log_fundamental_unit(long prec) const { return log_(fundamental_unit_value(prec)); }

Real Field::im_eta(long prec) const {
    if (!imaginary()) throw UnsupportedSignature("im_eta defined for imaginary fields");
    Real s = Real::sqrt_of(-d_, prec);
    return half_ ? s / Real::of(2, prec) : s;
}

AlgebraicInt Field::add(AlgebraicInt a, AlgebraicInt b) const {
    return {chk(static_cast<i128>(a.x) + b.x), chk(static_cast<i128>(a.y) + b.y)};
}

AlgebraicInt Field::sub(AlgebraicInt a, AlgebraicInt b) const {
    return {chk(static_cast<i128>(a.x) - b.x), chk(static_cast<i128>(a.y) - b.y)};
}

AlgebraicInt Field::mul(AlgebraicInt a, AlgebraicInt b) const {
    i128 yy = static_cast<i128>(a.y) * b.y;
    i128 x = static_cast<i128>(a.x) * b.x + eta_n_ * yy;
    i128 y = static_cast<i128>(a.x) * b.y + static_cast<i128>(a.y) * b.x + eta_t_ * yy;
    return {chk(x), chk(y)};
}

AlgebraicInt Field::conj(AlgebraicInt a) const {
    return {chk(static_cast<i128>(a.x) + eta_t_ * static_cast<i128>(a.y)), -a.y};
}

AlgebraicInt Field::pow_unit(AlgebraicInt u, long long e) const {
    AlgebraicInt base = u;
    if (e < 0) {
        AlgebraicInt c = conj(u);
        base = (norm_signed(u) == 1) ? c : neg(c);
        e = -e;
    }
    AlgebraicInt r{1, 0};
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = (e >>= 1) ? mul(base, base) : base;
    }
    return r;
}

__int128 Field::norm_signed(AlgebraicInt a) const {
    return static_cast<i128>(a.x) * a.x + static_cast<i128>(eta_t_) * a.x * a.y -
           static_cast<i128>(eta_n_) * a.y * a.y;
}

unsigned long long Field::norm_abs(AlgebraicInt a) const {
    i128 n = norm_signed(a);
    if (n < 0) n = -n;
    if (n > std::numeric_limits<long long>::max()) throw CapacityError("norm exceeds 63 bits");
    return static_cast<unsigned long long>(n);
}

FieldElement Field::element(AlgebraicInt num, long long den) const {
    if (den == 0) throw RejectedInput("zero denominator");
    if (den < 0) {
        den = -den;
        num = neg(num);
    }
    long long g = std::llabs(num.x);
    auto gcd_ll = [](long long a, long long b) {
        while (b) { long long t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    };
    g = gcd_ll(g, num.y);
    g = gcd_ll(g, den);
    if (g > 1) { num.x /= g; num.y /= g; den /= g; }
    return {num, den};
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    AlgebraicInt n = Field::add(mul(a.num, AlgebraicInt{b.den, 0}), mul(b.num, AlgebraicInt{a.den, 0}));
    return element(n, chk(static_cast<i128>(a.den) * b.den));
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
    AlgebraicInt n = Field::sub(mul(a.num, AlgebraicInt{b.den, 0}), mul(b.num, AlgebraicInt{a.den, 0}));
    return element(n, chk(static_cast<i128>(a.den) * b.den));
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    return element(mul(a.num, b.num), chk(static_cast<i128>(a.den) * b.den));
}

FieldElement Field::mul(const FieldElement& a, AlgebraicInt b) const {
    return element(mul(a.num, b), a.den);
}

FieldElement Field::inv(const FieldElement& a) const {
    if (a.is_zero()) throw RejectedInput("inverse of zero");
    i128 n = norm_signed(a.num);
    AlgebraicInt c = mul(conj(a.num), AlgebraicInt{a.den, 0});
    if (n < 0) {
        n = -n;
        c = neg(c);
    }
    return element(c, chk(n));
}

std::optional<AlgebraicInt> Field::div_exact(AlgebraicInt a, AlgebraicInt b) const {
    if (b.is_zero()) return std::nullopt;
    i128 n = norm_signed(b);
    AlgebraicInt p = mul(a, conj(b));
    if (p.x % n != 0 || p.y % n != 0) return std::nullopt;
    return AlgebraicInt{chk(p.x / n), chk(p.y / n)};
}

EmbeddingValue Field::embed(AlgebraicInt a, long prec) const {
    return embed(FieldElement{a, 1}, prec);
}

EmbeddingValue Field::embed(const FieldElement& a, long prec) const {
    Real x = Real::of(a.num.x, prec), y = Real::of(a.num.y, prec), den = Real::of(a.den, prec);
    Real s = Real::sqrt_of(d_ < 0 ? -d_ : d_, prec);
    if (imaginary()) {
        Real re = half_ ? x + y / Real::of(2, prec) : x;
        Real im = half_ ? y * s / Real::of(2, prec) : y * s;
        return {re / den, im / den, prec};
    }
    Real e1 = half_ ? (Real::of(1, prec) + s) / Real::of(2, prec) : s;
    Real e2 = half_ ? (Real::of(1, prec) - s) / Real::of(2, prec) : -s;
    return {(x + y * e1) / den, (x + y * e2) / den, prec};
}

std::pair<double, double> Field::embed_d(AlgebraicInt a) const {
    return embed_d(FieldElement{a, 1});
}

std::pair<double, double> Field::embed_d(const FieldElement& a) const {
    auto x = static_cast<double>(a.num.x), y = static_cast<double>(a.num.y);
    auto den = static_cast<double>(a.den);
    if (imaginary()) {
        double re = half_ ? x + y / 2 : x;
        double im = half_ ? y * sqrt_abs_d_ / 2 : y * sqrt_abs_d_;
        return {re / den, im / den};
    }
    double e1 = half_ ? (1 + sqrt_abs_d_) / 2 : sqrt_abs_d_;
    double e2 = half_ ? (1 - sqrt_abs_d_) / 2 : -sqrt_abs_d_;
    return {(x + y * e1) / den, (x + y * e2) / den};
}

std::pair<IReal, IReal> Field::embed_interval(AlgebraicInt a, long prec) const {
    return embed_interval(FieldElement{a, 1}, prec);
}

std::pair<IReal, IReal> Field::embed_interval(const FieldElement& a, long prec) const {
    IReal x = IReal::of(a.num.x, prec), y = IReal::of(a.num.y, prec), den = IReal::of(a.den, prec);
    IReal s{Real::sqrt_of(d_ < 0 ? -d_ : d_, prec, MPFR_RNDD),
            Real::sqrt_of(d_ < 0 ? -d_ : d_, prec, MPFR_RNDU)};
    IReal half = IReal::of(1, prec) / IReal::of(2, prec);
    if (imaginary()) {
        IReal re = half_ ? x + y * half : x;
        IReal im = half_ ? y * s * half : y * s;
        return {re / den, im / den};
    }
    IReal one = IReal::of(1, prec);
    IReal e1 = half_ ? (one + s) * half : s;
    IReal e2 = half_ ? (one - s) * half : IReal{-s.hi, -s.lo};
    return {(x + y * e1) / den, (x + y * e2) / den};
}

int Field::sign_sigma1(AlgebraicInt a) const {
    i128 S = 2 * static_cast<i128>(a.x) + eta_t_ * static_cast<i128>(a.y);
    i128 T = static_cast<i128>(a.y) * (half_ ? 1 : 2);
    if (imaginary()) {
        // sign of the real part only has meaning componentwise; not used here
        throw UnsupportedSignature("sign_sigma1 defined for real fields");
    }
    return sign_st(S, T, d_);
}

int Field::cmp_abs_sigma1(AlgebraicInt a, AlgebraicInt b) const {
    // |sigma1(a)| vs |sigma1(b)| through sigma1(a^2 - b^2), coordinates in 128 bits
    auto sq = [&](AlgebraicInt v, i128& X, i128& Y) {
        constexpr long long kLim = 1'000'000'000'000'000LL;
        if (std::llabs(v.x) > kLim || std::llabs(v.y) > kLim)
            throw CapacityError("coordinates too large for exact embedding comparison");
        X = static_cast<i128>(v.x) * v.x + eta_n_ * (static_cast<i128>(v.y) * v.y);
        Y = 2 * static_cast<i128>(v.x) * v.y + eta_t_ * (static_cast<i128>(v.y) * v.y);
    };
    i128 Xa, Ya, Xb, Yb;
    sq(a, Xa, Ya);
    sq(b, Xb, Yb);
    i128 S = 2 * (Xa - Xb) + eta_t_ * (Ya - Yb);
    i128 T = (Ya - Yb) * (half_ ? 1 : 2);
    return sign_st(S, T, d_);
}

bool Field::in_unit_window(AlgebraicInt a) const {
    if (imaginary()) throw UnsupportedSignature("unit window defined for real fields");
    if (a.is_zero()) return false;
    AlgebraicInt ca = conj(a);
    // eps^-1 |sigma1(a)| < |sigma2(a)|  <=>  |sigma1(eps^-1 a)| < |sigma1(conj a)|
    if (cmp_abs_sigma1(mul(fund_unit_inv_, a), ca) >= 0) return false;
    // |sigma2(a)| <= eps |sigma1(a)|
    return cmp_abs_sigma1(ca, mul(fund_unit_, a)) <= 0;
}

AlgebraicInt Field::canonical_generator(AlgebraicInt a0) const {
    if (imaginary()) throw UnsupportedSignature("canonical generator defined for real fields");
    if (a0.is_zero()) throw RejectedInput("canonical generator of zero");

    double sd = std::sqrt(static_cast<double>(d_));
    double e1 = half_ ? (1 + sd) / 2 : sd;
    double e2 = half_ ? (1 - sd) / 2 : -sd;
    double s1 = std::abs(static_cast<double>(a0.x) + static_cast<double>(a0.y) * e1);
    double s2 = std::abs(static_cast<double>(a0.x) + static_cast<double>(a0.y) * e2);
    double an = std::abs(static_cast<double>(norm_signed(a0)));
    double h = std::max(std::abs(static_cast<double>(a0.x)), std::abs(static_cast<double>(a0.y)) * sd) + 1;
    // recover the cancelled embedding from the exact norm
    if (s1 < h * 1e-9) s1 = an / s2;
    if (s2 < h * 1e-9) s2 = an / s1;
    double log_eps = std::log(std::abs(static_cast<double>(fund_unit_.x) +
                                       static_cast<double>(fund_unit_.y) * e1));
    double nu = (std::log(s2) - std::log(s1)) / (2 * log_eps);
    auto m = static_cast<long long>(std::ceil(nu - 0.5));

    AlgebraicInt a = mul(a0, pow_unit(fund_unit_, m));
    for (int guard = 0; guard < 64 && !in_unit_window(a); guard++) {
        // ratio |sigma2/sigma1| too large -> multiply by the unit, else divide
        if (cmp_abs_sigma1(conj(a), mul(fund_unit_, a)) > 0)
            a = mul(a, fund_unit_);
        else
            a = mul(a, fund_unit_inv_);
    }
    if (!in_unit_window(a)) throw CapacityError("unit window reduction did not converge");
    if (sign_sigma1(a) < 0) a = neg(a);
    return a;
}

AlgebraicInt Field::canonical_associate(AlgebraicInt a) const {
    if (!imaginary()) throw UnsupportedSignature("canonical associate defined for imaginary fields");
    if (a.is_zero()) throw RejectedInput("canonical associate of zero");
    auto in_sector = [&](const AlgebraicInt& v) {
        if (w_ == 2) return v.y > 0 || (v.y == 0 && v.x > 0);
        return v.x > 0 && v.y >= 0; // angle in [0, 2*pi/w) for w = 4, 6
    };
    for (const AlgebraicInt& u : units()) {
        AlgebraicInt c = mul(a, u);
        if (in_sector(c)) return c;
    }
    throw Error("no associate in canonical sector"); // unreachable
}

AlgebraicInt Field::canonical_rep(AlgebraicInt a) const {
    return imaginary() ? canonical_associate(a) : canonical_generator(a);
}

AlgebraicInt Field::nearest_lattice_point(const Complex& z) const {
    if (!imaginary()) throw UnsupportedSignature("lattice rounding defined for imaginary fields");
    long prec = z.re.prec();
    Real ims = im_eta(prec);
    Real t = z.im / ims;
    Real s = half_ ? z.re - t / Real::of(2, prec) : z.re;
    long long tf = floor_(t).to_ll(), sf = floor_(s).to_ll();
    AlgebraicInt best{};
    Real bestd(prec);
    bool first = true;
    for (long long dy = 0; dy <= 1; dy++)
        for (long long dx = 0; dx <= 1; dx++) {
            AlgebraicInt cand{sf + dx, tf + dy};
            EmbeddingValue e = embed(cand, prec);
            Real dist = (z.re - e.v1) * (z.re - e.v1) + (z.im - e.v2) * (z.im - e.v2);
            if (first || dist < bestd) {
                bestd = dist;
                best = cand;
                first = false;
            }
        }
    return best;
}

Real Field::lattice_distance(const Complex& z, long prec) const {
    if (!imaginary()) throw UnsupportedSignature("lattice distance defined for imaginary fields");
    Complex zz{z.re, z.im};
    AlgebraicInt n = nearest_lattice_point(zz);
    EmbeddingValue e = embed(n, prec);
    return sqrt_((z.re - e.v1) * (z.re - e.v1) + (z.im - e.v2) * (z.im - e.v2));
}

std::string Field::describe_eta() const {
    std::string rad = "sqrt(" + std::to_string(d_) + ")";
    return half_ ? "(1+" + rad + ")/2" : rad;
}

} // namespace quadprime
