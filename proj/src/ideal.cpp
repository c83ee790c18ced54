#include "quadprime/ideal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "smallmat.hpp"

namespace quadprime {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

long long chk(i128 v) {
    if (v > 0x7fffffffffffffffLL || v < -0x7fffffffffffffffLL - 1)
        throw CapacityError("coordinate overflow in ideal arithmetic");
    return static_cast<long long>(v);
}

long long gcd_ll(long long a, long long b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// g = s*a + t*b
long long extgcd(long long a, long long b, long long& s, long long& t) {
    long long s0 = 1, t0 = 0, s1 = 0, t1 = 1;
    while (b) {
        long long q = a / b;
        long long r = a - q * b;
        a = b;
        b = r;
        long long s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = s1;
        t0 = t1;
        s1 = s2;
        t1 = t2;
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    s = s0;
    t = t0;
    return a;
}

i128 floordiv(i128 a, i128 b) { // b > 0
    i128 q = a / b;
    if (a % b != 0 && a < 0) q--;
    return q;
}

unsigned long long mulmod(unsigned long long a, unsigned long long b, unsigned long long m) {
    return static_cast<unsigned long long>(static_cast<u128>(a) * b % m);
}

unsigned long long powmod(unsigned long long a, unsigned long long e, unsigned long long m) {
    unsigned long long r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

const std::vector<long long>& base_primes() {
    static const std::vector<long long> primes = [] {
        const int n = 1'000'000;
        std::vector<bool> comp(n + 1, false);
        std::vector<long long> ps;
        for (long long i = 2; i <= n; i++) {
            if (!comp[i]) {
                ps.push_back(i);
                for (long long j = i * i; j <= n; j += i) comp[j] = true;
            }
        }
        return ps;
    }();
    return primes;
}

unsigned long long isqrt_u64(unsigned long long n) {
    if (n == 0) return 0;
    auto r = static_cast<unsigned long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) r--;
    while ((r + 1) * (r + 1) <= n) r++;
    return r;
}

unsigned long long pollard_brent(unsigned long long n) {
    if (n % 2 == 0) return 2;
    unsigned long long x0 = 2, c = 1;
    while (true) {
        unsigned long long x = x0, y = x0, d = 1;
        unsigned long long q = 1;
        int lam = 1;
        while (d == 1) {
            y = x;
            for (int i = 0; i < lam; i++) x = (mulmod(x, x, n) + c) % n;
            int k = 0;
            while (k < lam && d == 1) {
                unsigned long long ys = x;
                int lim = std::min(128, lam - k);
                for (int i = 0; i < lim; i++) {
                    x = (mulmod(x, x, n) + c) % n;
                    unsigned long long diff = x > y ? x - y : y - x;
                    q = mulmod(q, diff == 0 ? 1 : diff, n);
                }
                d = std::gcd(q, n);
                if (d == n) { // back off and redo one by one
                    x = ys;
                    d = 1;
                    for (int i = 0; i < lim && d == 1; i++) {
                        x = (mulmod(x, x, n) + c) % n;
                        unsigned long long diff = x > y ? x - y : y - x;
                        d = std::gcd(diff == 0 ? n : diff, n);
                    }
                    if (d == 1 || d == n) { d = 0; break; }
                }
                k += lim;
            }
            lam *= 2;
            if (d == 0) break;
        }
        if (d != 0 && d != n) return d;
        c++;
        x0++;
    }
}

// sqrt mod odd prime p, a a quadratic residue
unsigned long long tonelli_shanks(unsigned long long a, unsigned long long p) {
    a %= p;
    if (a == 0) return 0;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    unsigned long long q = p - 1, s = 0;
    while (q % 2 == 0) { q /= 2; s++; }
    unsigned long long z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) z++;
    unsigned long long m = s, cc = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        unsigned long long i = 0, tt = t;
        while (tt != 1) { tt = mulmod(tt, tt, p); i++; }
        unsigned long long b = cc;
        for (unsigned long long j = 0; j + i + 1 < m; j++) b = mulmod(b, b, p);
        m = i;
        cc = mulmod(b, b, p);
        t = mulmod(t, cc, p);
        r = mulmod(r, b, p);
    }
    return r;
}

IdealHNF hnf_from_vectors(const Field& f, const std::vector<AlgebraicInt>& vs) {
    long long c = 0;
    AlgebraicInt piv{0, 0};
    std::vector<long long> xs;
    for (AlgebraicInt v : vs) {
        if (v.x == 0 && v.y == 0) continue;
        if (v.y == 0) {
            xs.push_back(v.x);
            continue;
        }
        if (c == 0) {
            piv = v;
            c = v.y;
            continue;
        }
        long long s, t;
        long long g = extgcd(c, v.y, s, t);
        AlgebraicInt np{chk(static_cast<i128>(s) * piv.x + static_cast<i128>(t) * v.x), g};
        xs.push_back(chk(static_cast<i128>(v.x) - static_cast<i128>(v.y / g) * np.x));
        xs.push_back(chk(static_cast<i128>(piv.x) - static_cast<i128>(c / g) * np.x));
        piv = np;
        c = g;
    }
    if (c == 0) throw RejectedInput("module does not have full rank");
    if (c < 0) {
        c = -c;
        piv.x = -piv.x;
    }
    long long a = 0;
    for (long long x : xs) a = gcd_ll(a, x);
    if (a == 0) throw RejectedInput("module does not have full rank");
    long long b = ((piv.x % a) + a) % a;
    return make_ideal_checked(f, a, b, c);
}

std::vector<AlgebraicInt> basis_of(const IdealHNF& x) {
    return {AlgebraicInt{x.a, 0}, AlgebraicInt{x.b, x.c}};
}

} // namespace

IdealHNF make_ideal_checked(const Field& f, long long a, long long b, long long c) {
    if (a <= 0 || c <= 0 || b < 0 || b >= a) throw Error("HNF shape violated");
    if (a % c != 0 || b % c != 0) throw Error("HNF divisibility violated");
    i128 closure = static_cast<i128>(c) * f.eta_n() - (static_cast<i128>(b / c) + f.eta_t()) * b;
    if (closure % a != 0) throw Error("module not closed under multiplication by eta");
    return IdealHNF{a, b, c};
}

IdealHNF ideal_from_gens(const Field& f, const std::vector<AlgebraicInt>& gens) {
    std::vector<AlgebraicInt> vs;
    for (AlgebraicInt g : gens) {
        if (g.is_zero()) continue;
        vs.push_back(g);
        vs.push_back(f.mul(g, AlgebraicInt{0, 1}));
    }
    if (vs.empty()) throw RejectedInput("ideal generated by zero");
    return hnf_from_vectors(f, vs);
}

IdealHNF ideal_from_element(const Field& f, AlgebraicInt g) { return ideal_from_gens(f, {g}); }

IdealHNF ideal_from_int(const Field& f, long long n) {
    return ideal_from_element(f, {std::llabs(n), 0});
}

IdealHNF ideal_mul(const Field& f, const IdealHNF& x, const IdealHNF& y) {
    std::vector<AlgebraicInt> vs;
    for (AlgebraicInt u : basis_of(x))
        for (AlgebraicInt v : basis_of(y)) vs.push_back(f.mul(u, v));
    return hnf_from_vectors(f, vs);
}

IdealHNF ideal_gcd(const Field& f, const IdealHNF& x, const IdealHNF& y) {
    std::vector<AlgebraicInt> vs = basis_of(x);
    for (AlgebraicInt v : basis_of(y)) vs.push_back(v);
    return hnf_from_vectors(f, vs);
}

IdealHNF ideal_conj(const Field& f, const IdealHNF& x) {
    std::vector<AlgebraicInt> vs = {f.conj({x.a, 0}), f.conj({x.b, x.c})};
    return hnf_from_vectors(f, vs);
}

IdealHNF ideal_pow(const Field& f, const IdealHNF& x, long long e) {
    if (e < 0) throw RejectedInput("negative ideal power");
    IdealHNF r{1, 0, 1}, base = x;
    while (e > 0) {
        if (e & 1) r = ideal_mul(f, r, base);
        if (e >>= 1) base = ideal_mul(f, base, base);
    }
    return r;
}

std::optional<IdealHNF> ideal_div(const Field& f, const IdealHNF& x, const IdealHNF& y) {
    IdealHNF p = ideal_mul(f, x, ideal_conj(f, y));
    auto n = static_cast<long long>(y.norm());
    if (p.a % n != 0 || p.b % n != 0 || p.c % n != 0) return std::nullopt;
    return make_ideal_checked(f, p.a / n, p.b / n, p.c / n);
}

bool ideal_contains(const IdealHNF& x, AlgebraicInt g) {
    AlgebraicInt r = reduce_mod(x, g);
    return r.is_zero();
}

bool ideal_divides(const IdealHNF& x, const IdealHNF& y) {
    return ideal_contains(x, {y.a, 0}) && ideal_contains(x, {y.b, y.c});
}

AlgebraicInt reduce_mod(const IdealHNF& x, AlgebraicInt g) {
    long long y = ((g.y % x.c) + x.c) % x.c;
    i128 k = (static_cast<i128>(g.y) - y) / x.c;
    i128 xr = static_cast<i128>(g.x) - k * x.b;
    long long xa = static_cast<long long>(((xr % x.a) + x.a) % x.a);
    return {xa, y};
}

long long valuation(const Field& f, const IdealHNF& prime, const IdealHNF& x) {
    long long v = 0;
    IdealHNF cur = x;
    while (true) {
        auto q = ideal_div(f, cur, prime);
        if (!q) return v;
        cur = *q;
        v++;
    }
}

long long valuation(const Field& f, const IdealHNF& prime, const FieldElement& x) {
    if (x.is_zero()) throw RejectedInput("valuation of zero");
    long long vn = valuation(f, prime, ideal_from_element(f, x.num));
    long long vd = x.den == 1 ? 0 : valuation(f, prime, ideal_from_int(f, x.den));
    return vn - vd;
}

FracIdeal frac_reduce(const Field& f, IdealHNF num, long long den) {
    if (den <= 0) throw RejectedInput("fractional ideal denominator must be positive");
    long long content = gcd_ll(num.a, gcd_ll(num.b, num.c));
    long long g = gcd_ll(content, den);
    if (g > 1) {
        num = make_ideal_checked(f, num.a / g, num.b / g, num.c / g);
        den /= g;
    }
    return {num, den};
}

FracIdeal frac_of(const Field& f, const FieldElement& x) {
    if (x.is_zero()) throw RejectedInput("fractional ideal of zero");
    return frac_reduce(f, ideal_from_element(f, x.num), x.den);
}

FracIdeal frac_mul(const Field& f, const FracIdeal& x, const FracIdeal& y) {
    return frac_reduce(f, ideal_mul(f, x.num, y.num), chk(static_cast<i128>(x.den) * y.den));
}

bool is_prime_u64(unsigned long long n) {
    if (n < 2) return false;
    for (unsigned long long p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    unsigned long long d = n - 1, s = 0;
    while (d % 2 == 0) { d /= 2; s++; }
    for (unsigned long long a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        unsigned long long x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned long long r = 1; r < s; r++) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<std::pair<unsigned long long, int>> factor_u64(unsigned long long n, bool pollard_rho) {
    std::vector<std::pair<unsigned long long, int>> out;
    for (long long p : base_primes()) {
        if (static_cast<unsigned long long>(p) * p > n) break;
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; e++; }
            out.emplace_back(p, e);
        }
    }
    std::vector<unsigned long long> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        unsigned long long m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_prime_u64(m)) {
            bool merged = false;
            for (auto& [p, e] : out)
                if (p == m) { e++; merged = true; }
            if (!merged) out.emplace_back(m, 1);
            continue;
        }
        if (!pollard_rho) throw CapacityError("factorization beyond trial division disabled");
        unsigned long long d = pollard_brent(m);
        stack.push_back(d);
        stack.push_back(m / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> eta_roots_mod_p(const Field& f, long long p) {
    std::vector<long long> roots;
    long long t = f.eta_t(), n = f.eta_n();
    if (p < 60) {
        for (long long r = 0; r < p; r++) {
            long long v = ((r * r - t * r - n) % p + p) % p;
            if (v == 0) roots.push_back(r);
        }
        return roots;
    }
    auto up = static_cast<unsigned long long>(p);
    unsigned long long disc = ((static_cast<i128>(f.discriminant()) % p) + p) % p;
    if (disc == 0) {
        // double root t/2
        unsigned long long inv2 = powmod(2, up - 2, up);
        roots.push_back(static_cast<long long>(mulmod(((t % p) + p) % p, inv2, up)));
        return roots;
    }
    if (powmod(disc, (up - 1) / 2, up) != 1) return roots; // inert
    unsigned long long s = tonelli_shanks(disc, up);
    unsigned long long inv2 = powmod(2, up - 2, up);
    unsigned long long tt = ((t % p) + p) % p;
    unsigned long long r1 = mulmod((tt + s) % up, inv2, up);
    unsigned long long r2 = mulmod((tt + up - s) % up, inv2, up);
    roots.push_back(static_cast<long long>(r1));
    roots.push_back(static_cast<long long>(r2));
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<PrimeIdeal> primes_above(const Field& f, long long p) {
    std::vector<PrimeIdeal> out;
    auto roots = eta_roots_mod_p(f, p);
    bool ramified = f.discriminant() % p == 0;
    if (roots.empty()) {
        out.push_back({IdealHNF{p, 0, p}, p, SplitKind::inert, 2});
        return out;
    }
    if (ramified) {
        long long b = ((p - roots[0] % p) % p + p) % p;
        out.push_back({make_ideal_checked(f, p, b, 1), p, SplitKind::ramified, 1});
        return out;
    }
    for (long long r : roots) {
        long long b = ((p - r % p) % p + p) % p;
        out.push_back({make_ideal_checked(f, p, b, 1), p, SplitKind::split, 1});
    }
    std::sort(out.begin(), out.end(),
              [](const PrimeIdeal& x, const PrimeIdeal& y) { return x.ideal < y.ideal; });
    return out;
}

std::vector<long long> rational_primes_in(unsigned long long lo, unsigned long long hi) {
    std::vector<long long> out;
    if (hi <= lo) return out;
    unsigned long long start = lo + 1;
    if (start < 2) start = 2;
    if (start > hi) return out;
    unsigned long long len = hi - start + 1;
    std::vector<bool> comp(len, false);
    for (long long p : base_primes()) {
        auto up = static_cast<unsigned long long>(p);
        if (up * up > hi) break;
        unsigned long long first = std::max(up * up, (start + up - 1) / up * up);
        for (unsigned long long m = first; m <= hi; m += up) comp[m - start] = true;
    }
    if (isqrt_u64(hi) > 1'000'000ULL) throw CapacityError("sieve range beyond base prime table");
    for (unsigned long long v = start; v <= hi; v++)
        if (!comp[v - start]) out.push_back(static_cast<long long>(v));
    return out;
}

std::vector<PrimeIdeal> primes_in_norm_range(const Field& f, unsigned long long lo,
                                             unsigned long long hi, unsigned long long capacity) {
    if (lo >= hi) return {};
    if (hi > capacity) throw CapacityError("prime stream norm bound exceeds sieve capacity");
    std::vector<long long> deg1 = rational_primes_in(lo, hi);
    std::vector<long long> deg2 = rational_primes_in(isqrt_u64(lo), isqrt_u64(hi));
    std::vector<PrimeIdeal> out;
    size_t i = 0, j = 0;
    while (i < deg1.size() || j < deg2.size()) {
        unsigned long long n1 = i < deg1.size() ? static_cast<unsigned long long>(deg1[i])
                                                : ~0ULL;
        unsigned long long n2 = j < deg2.size()
                                    ? static_cast<unsigned long long>(deg2[j]) * deg2[j]
                                    : ~0ULL;
        if (n1 <= n2) {
            for (PrimeIdeal& pi : primes_above(f, deg1[i]))
                if (pi.residue_degree == 1) out.push_back(pi);
            i++;
        } else {
            auto above = primes_above(f, deg2[j]);
            if (above.size() == 1 && above[0].kind == SplitKind::inert) out.push_back(above[0]);
            j++;
        }
    }
    return out;
}

std::vector<std::pair<PrimeIdeal, int>> factor_ideal(const Field& f, const IdealHNF& x,
                                                     const FactorBudget& budget) {
    unsigned long long n = x.norm();
    if (n > budget.norm_bound) throw CapacityError("ideal norm exceeds factorization bound");
    std::vector<std::pair<PrimeIdeal, int>> out;
    if (n == 1) return out;
    for (auto [p, e] : factor_u64(n, budget.pollard_rho)) {
        (void)e;
        for (PrimeIdeal& pi : primes_above(f, static_cast<long long>(p))) {
            long long v = valuation(f, pi.ideal, x);
            if (v > 0) out.emplace_back(pi, static_cast<int>(v));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
        return l.first.ideal < r.first.ideal;
    });
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
        if (l.first.norm() != r.first.norm()) return l.first.norm() < r.first.norm();
        return l.first.ideal < r.first.ideal;
    });
    return out;
}

int moebius(const Field& f, const IdealHNF& x) {
    auto fac = factor_ideal(f, x);
    for (auto& [p, e] : fac)
        if (e >= 2) return 0;
    return fac.size() % 2 == 0 ? 1 : -1;
}

unsigned long long euler_phi(const Field& f, const IdealHNF& x) {
    u128 phi = 1;
    for (auto& [p, e] : factor_ideal(f, x)) {
        u128 q = p.norm();
        for (int i = 1; i < e; i++) phi *= q;
        phi *= q - 1;
    }
    if (phi > 0x7fffffffffffffffULL) throw CapacityError("phi exceeds 63 bits");
    return static_cast<unsigned long long>(phi);
}

std::vector<IdealHNF> divisors(const Field& f, const IdealHNF& x) {
    std::vector<IdealHNF> out{IdealHNF{1, 0, 1}};
    for (auto& [p, e] : factor_ideal(f, x)) {
        std::vector<IdealHNF> next;
        IdealHNF pe{1, 0, 1};
        for (int i = 0; i <= e; i++) {
            for (const IdealHNF& d : out) next.push_back(ideal_mul(f, d, pe));
            if (i < e) pe = ideal_mul(f, pe, p.ideal);
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<AlgebraicInt> is_principal_with_generator(const Field& f, const IdealHNF& x,
                                                        unsigned long long capacity) {
    AlgebraicInt v1{x.a, 0}, v2{x.b, x.c};
    auto N = static_cast<i128>(x.norm());

    if (f.imaginary()) {
        auto Q = [&](AlgebraicInt v) { return f.norm_signed(v); };
        // Lagrange reduction for the positive definite norm form
        for (int guard = 0; guard < 128; guard++) {
            if (Q(v2) < Q(v1)) std::swap(v1, v2);
            i128 d2 = Q(f.add(v1, v2)) - Q(v1) - Q(v2); // 2*B(v1,v2)
            i128 r = floordiv(d2 + Q(v1), 2 * Q(v1));
            if (r == 0) break;
            v2 = f.sub(v2, f.mul(v1, AlgebraicInt{chk(r), 0}));
        }
        if (Q(v2) < Q(v1)) std::swap(v1, v2);
        if (Q(v1) != N) return std::nullopt;
        return f.canonical_associate(v1);
    }

    // real: Euclidean square form over the two embeddings
    auto E = [&](AlgebraicInt v) {
        i128 xx = v.x, yy = v.y;
        return 2 * xx * xx + 2 * f.eta_t() * xx * yy +
               (f.eta_t() * f.eta_t() + 2 * f.eta_n()) * yy * yy;
    };
    for (int guard = 0; guard < 128; guard++) {
        if (E(v2) < E(v1)) std::swap(v1, v2);
        i128 d2 = E(f.add(v1, v2)) - E(v1) - E(v2); // 2*B12
        i128 r = floordiv(d2 + E(v1), 2 * E(v1));
        if (r == 0) break;
        v2 = f.sub(v2, f.mul(v1, AlgebraicInt{chk(r), 0}));
    }
    if (E(v2) < E(v1)) std::swap(v1, v2);

    double eps = f.embed(f.fundamental_unit(), 64).v1.to_double();
    double bnd_d = 2.0 * eps * static_cast<double>(N) * (1 + 1e-9) + 2;
    if (bnd_d > static_cast<double>(capacity)) throw CapacityError("generator window too large");
    auto bound = static_cast<i128>(bnd_d);

    i128 e11 = E(v1), e22 = E(v2);
    i128 b12 = (E(f.add(v1, v2)) - e11 - e22) / 2;
    i128 det = e11 * e22 - b12 * b12;
    double kmax_d = std::sqrt(static_cast<double>(bound) * static_cast<double>(e11) /
                              static_cast<double>(det));
    auto kmax = static_cast<long long>(kmax_d) + 2;
    for (long long k = -kmax; k <= kmax; k++) {
        i128 discq = e11 * bound - det * k * k;
        if (discq < 0) continue;
        double sq = std::sqrt(static_cast<double>(discq));
        double mid = -static_cast<double>(b12) * k;
        auto mlo = static_cast<long long>(std::floor((mid - sq) / static_cast<double>(e11))) - 2;
        auto mhi = static_cast<long long>(std::ceil((mid + sq) / static_cast<double>(e11))) + 2;
        for (long long m = mlo; m <= mhi; m++) {
            if (m == 0 && k == 0) continue;
            AlgebraicInt v = f.add(f.mul(v1, AlgebraicInt{m, 0}), f.mul(v2, AlgebraicInt{k, 0}));
            i128 nv = f.norm_signed(v);
            if (nv == N || nv == -N) return f.canonical_generator(v);
        }
    }
    return std::nullopt;
}

bool same_class(const Field& f, const IdealHNF& x, const IdealHNF& y) {
    return is_principal_with_generator(f, ideal_mul(f, x, ideal_conj(f, y))).has_value();
}

namespace {

// class-group representative of gen^e, conjugating for negative exponents
IdealHNF class_pow(const Field& f, const IdealHNF& g, long long e) {
    if (e >= 0) return ideal_pow(f, g, e);
    return ideal_pow(f, ideal_conj(f, g), -e);
}

} // namespace

ClassGroup class_group(const Field& f) {
    double mink = f.imaginary()
                      ? 2.0 / 3.141592653589793 * std::sqrt(static_cast<double>(-f.discriminant()))
                      : 0.5 * std::sqrt(static_cast<double>(f.discriminant()));
    auto bound = static_cast<unsigned long long>(mink);
    ClassGroup cg;
    if (bound < 2) return cg;

    std::vector<IdealHNF> reps{IdealHNF{1, 0, 1}};
    std::vector<std::vector<long long>> rep_vec{{}};
    std::vector<IdealHNF> gens;
    std::vector<std::vector<long long>> relations; // one per generator

    auto find_rep = [&](const IdealHNF& I) -> int {
        for (size_t i = 0; i < reps.size(); i++)
            if (same_class(f, I, reps[i])) return static_cast<int>(i);
        return -1;
    };

    for (const PrimeIdeal& pr : primes_in_norm_range(f, 1, bound)) {
        if (find_rep(pr.ideal) >= 0) continue;
        // relative order of the new class over the current subgroup
        long long m = 1;
        IdealHNF power = pr.ideal;
        int hit = -1;
        while ((hit = find_rep(power)) < 0) {
            power = ideal_mul(f, power, pr.ideal);
            m++;
        }
        std::vector<long long> rel(gens.size() + 1, 0);
        for (size_t i = 0; i < rep_vec[hit].size(); i++) rel[i] = -rep_vec[hit][i];
        rel[gens.size()] = m;
        for (auto& r : relations) r.push_back(0);
        relations.push_back(rel);
        gens.push_back(pr.ideal);
        // extend coset representatives
        std::vector<IdealHNF> new_reps = reps;
        std::vector<std::vector<long long>> new_vec = rep_vec;
        for (auto& v : new_vec) v.push_back(0);
        IdealHNF pe = pr.ideal;
        for (long long t = 1; t < m; t++) {
            for (size_t i = 0; i < reps.size(); i++) {
                new_reps.push_back(ideal_mul(f, reps[i], pe));
                auto v = rep_vec[i];
                v.push_back(t);
                new_vec.push_back(v);
            }
            if (t + 1 < m) pe = ideal_mul(f, pe, pr.ideal);
        }
        reps = std::move(new_reps);
        rep_vec = std::move(new_vec);
    }

    cg.h = static_cast<long long>(reps.size());
    if (gens.empty()) return cg;

    int n = static_cast<int>(gens.size());
    detail::Mat R(n, std::vector<long long>(n, 0));
    for (int j = 0; j < n; j++)
        for (int i = 0; i < n; i++) R[i][j] = relations[j][i]; // relations as columns
    auto s = detail::snf(R);
    long long prod = 1;
    for (int j = 0; j < n; j++) {
        long long d = std::llabs(s.diag[j]);
        if (d <= 1) continue;
        IdealHNF gj{1, 0, 1};
        for (int i = 0; i < n; i++)
            if (s.Uinv[i][j] != 0) gj = ideal_mul(f, gj, class_pow(f, gens[i], s.Uinv[i][j]));
        cg.generators.push_back(gj);
        cg.orders.push_back(d);
        prod *= d;
    }
    if (prod != cg.h) throw Error("class group decomposition inconsistent");
    return cg;
}

std::pair<std::vector<long long>, FieldElement> decompose_in_class_group(const Field& f,
                                                                         const FracIdeal& x,
                                                                         const ClassGroup& cg) {
    size_t k = cg.generators.size();
    std::vector<long long> j(k, 0);
    while (true) {
        IdealHNF adj = x.num;
        i128 den_scale = 1;
        for (size_t l = 0; l < k; l++)
            for (long long t = 0; t < j[l]; t++) {
                adj = ideal_mul(f, adj, ideal_conj(f, cg.generators[l]));
                den_scale *= cg.generators[l].norm();
            }
        if (auto g = is_principal_with_generator(f, adj)) {
            FieldElement gamma = f.element(*g, chk(den_scale * x.den));
            // round-trip check
            FracIdeal re = frac_of(f, gamma);
            for (size_t l = 0; l < k; l++)
                re = frac_mul(f, re, frac_reduce(f, ideal_pow(f, cg.generators[l], j[l]), 1));
            if (!(re == frac_reduce(f, x.num, x.den)))
                throw Error("class group decomposition failed to round-trip");
            return {j, gamma};
        }
        // next exponent vector
        size_t l = 0;
        while (l < k) {
            if (++j[l] < cg.orders[l]) break;
            j[l] = 0;
            l++;
        }
        if (l == k) throw Error("no class group decomposition found");
    }
}

} // namespace quadprime
