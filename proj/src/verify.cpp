#include "quadprime/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>

namespace quadprime {

namespace {

using Poly = std::vector<long long>; // coefficient list, ascending degree

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division assuming the divisor is monic and divides evenly
Poly poly_div_exact(Poly num, const Poly& den) {
    poly_trim(num);
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    while (num.size() >= den.size() && !num.empty()) {
        long long lead = num.back();
        size_t shift = num.size() - den.size();
        q[shift] = lead;
        for (size_t i = 0; i < den.size(); i++) num[shift + i] -= lead * den[i];
        poly_trim(num);
    }
    if (!num.empty()) throw Error("inexact polynomial division");
    return q;
}

Poly poly_mod_monic(Poly num, const Poly& den) {
    poly_trim(num);
    while (num.size() >= den.size() && !num.empty()) {
        long long lead = num.back();
        size_t shift = num.size() - den.size();
        for (size_t i = 0; i < den.size(); i++) num[shift + i] -= lead * den[i];
        poly_trim(num);
    }
    return num;
}

Poly cyclotomic(long long n, std::map<long long, Poly>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Poly num(n + 1, 0);
    num[0] = -1;
    num[n] = 1; // X^n - 1
    for (long long d = 1; d < n; d++)
        if (n % d == 0) num = poly_div_exact(std::move(num), cyclotomic(d, cache));
    cache[n] = num;
    return num;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

} // namespace

std::optional<long long> exact_root_of_unity_sum(const std::vector<RootOfUnity>& vals) {
    long long l = 1;
    for (const RootOfUnity& v : vals) {
        l = lcm_ll(l, v.den);
        if (l > 2'000'000) throw CapacityError("cyclotomic order too large for exact summation");
    }
    Poly p(l, 0);
    for (const RootOfUnity& v : vals) p[v.num * (l / v.den)] += 1;
    static thread_local std::map<long long, Poly> cache;
    Poly rem = poly_mod_monic(std::move(p), cyclotomic(l, cache));
    if (rem.empty()) return 0;
    if (rem.size() == 1) return rem[0];
    return std::nullopt;
}

std::vector<IdealHNF> ideals_up_to(const Field& f, unsigned long long bound) {
    auto primes = primes_in_norm_range(f, 1, bound);
    std::vector<IdealHNF> out{IdealHNF{1, 0, 1}};
    std::function<void(size_t, IdealHNF, unsigned long long)> rec =
        [&](size_t i, IdealHNF cur, unsigned long long n) {
            for (size_t k = i; k < primes.size(); k++) {
                unsigned long long pn = primes[k].norm();
                if (n * pn > bound) break; // primes ascend by norm
                IdealHNF nxt = ideal_mul(f, cur, primes[k].ideal);
                out.push_back(nxt);
                rec(k, nxt, n * pn);
            }
        };
    rec(0, IdealHNF{1, 0, 1}, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AlgebraicInt> canonical_elements_up_to(const Field& f, unsigned long long bound) {
    std::vector<AlgebraicInt> out;
    if (f.imaginary()) {
        auto bd = static_cast<double>(bound);
        double imeta = f.im_eta(64).to_double();
        auto ymax = static_cast<long long>(std::sqrt(bd) / imeta) + 2;
        auto xmax = static_cast<long long>(std::sqrt(bd)) + 2;
        for (long long y = -ymax; y <= ymax; y++)
            for (long long x = -xmax; x <= xmax; x++) {
                AlgebraicInt a{x, y};
                if (a.is_zero() || f.norm_abs(a) > bound) continue;
                if (f.canonical_associate(a) == a) out.push_back(a);
            }
    } else {
        double eps = f.embed(f.fundamental_unit(), 64).v1.to_double();
        double lim = std::sqrt(eps * static_cast<double>(bound)) + 1;
        double sd = std::sqrt(static_cast<double>(f.d()));
        auto xmax = static_cast<long long>(lim) + 2;
        auto ymax = static_cast<long long>(lim / (f.half_basis() ? sd / 2 : sd)) + 2;
        for (long long y = -ymax; y <= ymax; y++)
            for (long long x = -xmax; x <= xmax; x++) {
                AlgebraicInt a{x, y};
                if (a.is_zero() || f.norm_abs(a) > bound) continue;
                if (!f.in_unit_window(a) || f.sign_sigma1(a) < 0) continue;
                out.push_back(a);
            }
    }
    std::sort(out.begin(), out.end(), [&](AlgebraicInt a, AlgebraicInt b) {
        if (f.norm_abs(a) != f.norm_abs(b)) return f.norm_abs(a) < f.norm_abs(b);
        return a < b;
    });
    return out;
}

CheckResult check_orthogonality(const Field& f, unsigned long long modulus_bound,
                                unsigned long long brute_bound) {
    CheckResult r{"character orthogonality", true, 0, ""};
    for (const IdealHNF& m : ideals_up_to(f, modulus_bound)) {
        auto rug = residue_unit_group(f, m);
        unsigned long long prod = 1;
        for (long long d : rug->orders) prod *= static_cast<unsigned long long>(d);
        if (prod != rug->phi || rug->phi != euler_phi(f, m)) {
            r.pass = false;
            r.detail = "unit group order mismatch";
            return r;
        }
        AlgebraicInt one = reduce_mod(m, {1, 0});
        for (const AlgebraicInt& x : rug->unit_residues) {
            const auto* v = rug->find_dlog(x);
            // sum over all exponent vectors factors through each cyclic part
            long long expect = (x == one) ? static_cast<long long>(rug->phi) : 0;
            long long got = 1;
            for (size_t j = 0; j < rug->orders.size(); j++)
                got *= ((*v)[j] % rug->orders[j] == 0) ? rug->orders[j] : 0;
            if (got != expect) {
                r.pass = false;
                r.detail = "orthogonality failed at modulus norm " + std::to_string(m.norm());
                return r;
            }
            r.cases++;
        }
        if (m.norm() <= brute_bound) {
            auto chars = enumerate_characters(f, m);
            if (chars.size() != rug->phi) {
                r.pass = false;
                r.detail = "character count != phi";
                return r;
            }
            for (const AlgebraicInt& x : rug->unit_residues) {
                std::vector<RootOfUnity> vals;
                vals.reserve(chars.size());
                for (const HeckeCharacter& h : chars) vals.push_back(h.chi().at_residue(x));
                auto s = exact_root_of_unity_sum(vals);
                long long expect = (x == one) ? static_cast<long long>(rug->phi) : 0;
                if (!s || *s != expect) {
                    r.pass = false;
                    r.detail = "cyclotomic orthogonality sum failed";
                    return r;
                }
                r.cases++;
            }
        }
    }
    return r;
}

CheckResult check_moebius_identity(const Field& f, unsigned long long bound) {
    CheckResult r{"moebius divisor sum", true, 0, ""};
    for (const IdealHNF& x : ideals_up_to(f, bound)) {
        long long s = 0;
        for (const IdealHNF& d : divisors(f, x)) s += moebius(f, d);
        if (s != (x.is_unit() ? 1 : 0)) {
            r.pass = false;
            r.detail = "failed at norm " + std::to_string(x.norm());
            return r;
        }
        r.cases++;
    }
    return r;
}

CheckResult check_phi_divisor_identity(const Field& f, unsigned long long bound) {
    CheckResult r{"phi divisor identity", true, 0, ""};
    for (const AlgebraicInt& q : canonical_elements_up_to(f, bound)) {
        IdealHNF iq = ideal_from_element(f, q);
        long long lhs = 0;
        for (const IdealHNF& d : divisors(f, iq))
            lhs += moebius(f, d) * static_cast<long long>(iq.norm() / d.norm());
        if (lhs != static_cast<long long>(euler_phi(f, iq))) {
            r.pass = false;
            r.detail = "failed at norm " + std::to_string(iq.norm());
            return r;
        }
        r.cases++;
    }
    return r;
}

CheckResult check_window_uniqueness(const Field& f, int samples, unsigned long long seed) {
    CheckResult r{"unit window uniqueness", true, 0, ""};
    if (f.imaginary()) throw UnsupportedSignature("window uniqueness is a real-field check");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> coord(-1000000, 1000000);
    AlgebraicInt eps = f.fundamental_unit();
    while (r.cases < samples) {
        AlgebraicInt a0{coord(rng), coord(rng)};
        if (a0.is_zero()) continue;
        AlgebraicInt a = f.canonical_generator(a0);
        int hits = 0;
        for (long long n = -5; n <= 5; n++) {
            AlgebraicInt cand = f.mul(a, f.pow_unit(eps, n));
            for (AlgebraicInt s : {cand, f.neg(cand)})
                if (f.in_unit_window(s)) hits++;
        }
        bool ok = hits == 2 && f.in_unit_window(a) && f.sign_sigma1(a) > 0 &&
                  f.canonical_generator(a) == a;
        // exact window bound eps^{-1/2} N^{1/2} <= |sigma_i| <= eps^{1/2} N^{1/2}
        AlgebraicInt n_el{static_cast<long long>(f.norm_abs(a)), 0};
        for (AlgebraicInt v : {a, f.conj(a)}) {
            AlgebraicInt v2 = f.mul(v, v);
            ok = ok && f.sign_sigma1(f.sub(f.mul(eps, n_el), v2)) >= 0;
            ok = ok && f.sign_sigma1(f.sub(v2, f.mul(f.fundamental_unit_inverse(), n_el))) >= 0;
        }
        if (!ok) {
            r.pass = false;
            r.detail = "violated at a0";
            return r;
        }
        r.cases++;
    }
    return r;
}

CheckResult check_unit_orbit_cancellation(const Field& f, unsigned long long modulus_bound) {
    CheckResult r{"unit orbit cancellation", true, 0, ""};
    if (!f.imaginary()) throw UnsupportedSignature("unit orbit cancellation is imaginary-only");
    auto units = f.units();
    for (const IdealHNF& m : ideals_up_to(f, modulus_bound)) {
        for (const HeckeCharacter& h : enumerate_characters(f, m)) {
            std::vector<RootOfUnity> vals;
            bool trivial_on_units = true;
            for (AlgebraicInt u : units) {
                auto v = h.chi().at(u);
                if (!v) throw Error("unit not coprime to modulus");
                if (!v->is_one()) trivial_on_units = false;
                vals.push_back(*v);
            }
            if (trivial_on_units) continue;
            auto s = exact_root_of_unity_sum(vals);
            if (!s || *s != 0) {
                r.pass = false;
                r.detail = "nonzero unit sum at modulus norm " + std::to_string(m.norm());
                return r;
            }
            r.cases++;
        }
    }
    return r;
}

CheckResult check_unit_consistency(const Field& f, unsigned long long modulus_bound) {
    CheckResult r{"unit consistency chi*chi_inf(u)=1", true, 0, ""};
    const long prec = 192;
    const double tol = 1e-30;
    std::vector<FieldElement> test_units;
    if (f.imaginary()) {
        for (AlgebraicInt u : f.units()) test_units.push_back({u, 1});
    } else {
        for (long long n = -3; n <= 3; n++) {
            AlgebraicInt u = f.pow_unit(f.fundamental_unit(), n);
            test_units.push_back({u, 1});
            test_units.push_back({f.neg(u), 1});
        }
    }
    for (const IdealHNF& m : ideals_up_to(f, modulus_bound)) {
        for (const HeckeCharacter& h : enumerate_characters(f, m)) {
            for (const FieldElement& u : test_units) {
                Complex v = h.principal_part(u, prec);
                Real err = abs_(v.re - Real::of(1, prec)) + abs_(v.im);
                if (Real::of_d(tol, prec) < err) {
                    r.pass = false;
                    r.detail = "unit value off 1 at modulus norm " + std::to_string(m.norm());
                    return r;
                }
                r.cases++;
            }
        }
    }
    return r;
}

CheckResult check_generator_independence(const Field& f, unsigned long long modulus_bound,
                                         int samples, unsigned long long seed) {
    CheckResult r{"generator independence", true, 0, ""};
    const long prec = 192;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> coord(-60, 60);
    std::vector<FieldElement> units;
    if (f.imaginary()) {
        for (AlgebraicInt u : f.units()) units.push_back({u, 1});
    } else {
        for (long long n = -2; n <= 2; n++) {
            units.push_back({f.pow_unit(f.fundamental_unit(), n), 1});
            units.push_back({f.neg(f.pow_unit(f.fundamental_unit(), n)), 1});
        }
    }
    for (const IdealHNF& m : ideals_up_to(f, modulus_bound)) {
        for (const HeckeCharacter& h : enumerate_characters(f, m)) {
            int done = 0, attempts = 0;
            while (done < samples && attempts++ < 10000) {
                AlgebraicInt a{coord(rng), coord(rng)};
                if (a.is_zero()) continue;
                FieldElement alpha{a, 1};
                Complex base = h.principal_part(alpha, prec);
                if (base.re.is_zero() && base.im.is_zero()) continue; // not coprime
                done++;
                for (const FieldElement& u : units) {
                    Complex other = h.principal_part(f.mul(alpha, u.num), prec);
                    Real err = abs_(base.re - other.re) + abs_(base.im - other.im);
                    if (Real::of_d(1e-30, prec) < err) {
                        r.pass = false;
                        r.detail = "generator dependence at modulus norm " + std::to_string(m.norm());
                        return r;
                    }
                    r.cases++;
                }
            }
        }
    }
    return r;
}

CheckResult check_hecke_multiplicativity(const Field& f, unsigned long long modulus_bound,
                                         int samples, unsigned long long seed) {
    CheckResult r{"hecke multiplicativity", true, 0, ""};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> coord(-40, 40);
    std::shared_ptr<const ClassGroup> cg;
    ClassGroup cg_val = class_group(f);
    if (cg_val.h > 1) cg = std::make_shared<ClassGroup>(cg_val);
    for (const IdealHNF& m : ideals_up_to(f, modulus_bound)) {
        CharacterEnumOptions opt;
        opt.with_class_extensions = cg != nullptr;
        opt.cg = cg;
        for (const HeckeCharacter& h : enumerate_characters(f, m, opt)) {
            int done = 0;
            while (done < samples) {
                AlgebraicInt a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
                if (a.is_zero() || b.is_zero()) continue;
                IdealHNF ia = ideal_from_element(f, a), ib = ideal_from_element(f, b);
                if (!ideal_gcd(f, ia, m).is_unit() || !ideal_gcd(f, ib, m).is_unit()) {
                    done++;
                    continue;
                }
                done++;
                auto va = h.eval_d(ia), vb = h.eval_d(ib);
                auto vab = h.eval_d(ideal_mul(f, ia, ib));
                if (std::abs(vab - va * vb) > 1e-10) {
                    r.pass = false;
                    r.detail = "multiplicativity failed at modulus norm " + std::to_string(m.norm());
                    return r;
                }
                r.cases++;
            }
        }
    }
    return r;
}

std::vector<CheckResult> exact_algebra_suite(const Field& f, unsigned long long scale) {
    std::vector<CheckResult> out;
    out.push_back(check_orthogonality(f, scale / 5, 150));
    out.push_back(check_moebius_identity(f, scale));
    out.push_back(check_phi_divisor_identity(f, scale));
    if (!f.imaginary()) out.push_back(check_window_uniqueness(f, 1000));
    if (f.imaginary()) out.push_back(check_unit_orbit_cancellation(f, scale / 20));
    out.push_back(check_unit_consistency(f, 60));
    out.push_back(check_generator_independence(f, 40, 4));
    out.push_back(check_hecke_multiplicativity(f, 30, 4));
    return out;
}

} // namespace quadprime
