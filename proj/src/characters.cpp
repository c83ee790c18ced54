#include "quadprime/characters.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "smallmat.hpp"

namespace quadprime {

namespace {

using i128 = __int128;

long long chk(i128 v) {
    if (v > 0x7fffffffffffffffLL || v < -0x7fffffffffffffffLL - 1)
        throw CapacityError("overflow in character arithmetic");
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

long long lcm_ll(long long a, long long b) { return chk(static_cast<i128>(a) / gcd_ll(a, b) * b); }

long long extgcd(long long a, long long b, long long& s, long long& t) {
    long long s0 = 1, t0 = 0, s1 = 0, t1 = 1;
    while (b) {
        long long q = a / b, r = a - q * b;
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

struct Tracked {
    AlgebraicInt v;
    std::array<long long, 4> co{};
};

Tracked combine(const Field& f, const Tracked& a, long long s, const Tracked& b, long long t) {
    Tracked r;
    r.v = f.add(f.mul(a.v, AlgebraicInt{s, 0}), f.mul(b.v, AlgebraicInt{t, 0}));
    for (int i = 0; i < 4; i++)
        r.co[i] = chk(static_cast<i128>(s) * a.co[i] + static_cast<i128>(t) * b.co[i]);
    return r;
}

// u in A, v in B with u + v = 1, for coprime integral ideals A, B
std::pair<AlgebraicInt, AlgebraicInt> split_one(const Field& f, const IdealHNF& A, const IdealHNF& B) {
    std::vector<Tracked> cols(4);
    cols[0] = {AlgebraicInt{A.a, 0}, {1, 0, 0, 0}};
    cols[1] = {AlgebraicInt{A.b, A.c}, {0, 1, 0, 0}};
    cols[2] = {AlgebraicInt{B.a, 0}, {0, 0, 1, 0}};
    cols[3] = {AlgebraicInt{B.b, B.c}, {0, 0, 0, 1}};

    std::vector<Tracked> xonly;
    Tracked piv;
    bool have_piv = false;
    for (Tracked& col : cols) {
        if (col.v.y == 0) {
            xonly.push_back(col);
            continue;
        }
        if (!have_piv) {
            piv = col;
            have_piv = true;
            continue;
        }
        long long s, t;
        long long g = extgcd(piv.v.y, col.v.y, s, t);
        Tracked np = combine(f, piv, s, col, t);
        xonly.push_back(combine(f, col, 1, np, -(col.v.y / g)));
        xonly.push_back(combine(f, piv, 1, np, -(piv.v.y / g)));
        piv = np;
    }
    if (!have_piv) throw Error("split_one: degenerate ideals");

    Tracked cur;
    bool have_cur = false;
    for (Tracked& t : xonly) {
        if (t.v.x == 0) continue;
        if (!have_cur) {
            cur = t;
            have_cur = true;
            continue;
        }
        long long s, tt;
        extgcd(cur.v.x, t.v.x, s, tt);
        cur = combine(f, cur, s, t, tt);
    }
    if (!have_cur || std::llabs(cur.v.x) != 1 || cur.v.y != 0)
        throw Error("split_one: ideals are not coprime");
    if (cur.v.x == -1)
        for (auto& c : cur.co) c = -c;

    AlgebraicInt u = f.add(f.mul(AlgebraicInt{A.a, 0}, {cur.co[0], 0}),
                           f.mul(AlgebraicInt{A.b, A.c}, {cur.co[1], 0}));
    AlgebraicInt v = f.add(f.mul(AlgebraicInt{B.a, 0}, {cur.co[2], 0}),
                           f.mul(AlgebraicInt{B.b, B.c}, {cur.co[3], 0}));
    if (!(f.add(u, v) == AlgebraicInt{1, 0})) throw Error("split_one inconsistency");
    return {u, v};
}

struct FactorGroup {
    IdealHNF q;                             // the prime power
    std::vector<AlgebraicInt> gens;         // residues mod q
    std::vector<long long> orders;
    std::unordered_map<unsigned long long, std::vector<long long>> dlog;
    unsigned long long phi = 1;

    unsigned long long key(AlgebraicInt r) const {
        return static_cast<unsigned long long>(r.x) +
               static_cast<unsigned long long>(r.y) * static_cast<unsigned long long>(q.a);
    }
};

FactorGroup factor_group(const Field& f, const IdealHNF& q, const IdealHNF& prime) {
    FactorGroup fg;
    fg.q = q;

    auto mulq = [&](AlgebraicInt a, AlgebraicInt b) { return reduce_mod(q, f.mul(a, b)); };

    std::vector<AlgebraicInt> units;
    for (long long y = 0; y < q.c; y++)
        for (long long x = 0; x < q.a; x++) {
            AlgebraicInt r{x, y};
            if (!ideal_contains(prime, r)) units.push_back(r);
        }
    fg.phi = units.size();

    // polycyclic generating sequence with relations
    std::vector<AlgebraicInt> pc_gens;
    std::vector<std::pair<long long, std::vector<long long>>> pc_rels; // order, expression
    std::unordered_map<unsigned long long, std::vector<long long>> tbl;
    std::vector<std::pair<AlgebraicInt, std::vector<long long>>> entries;
    AlgebraicInt one = reduce_mod(q, {1, 0});
    tbl[fg.key(one)] = {};
    entries.push_back({one, {}});

    for (AlgebraicInt g : units) {
        if (tbl.count(fg.key(g))) continue;
        long long m = 1;
        AlgebraicInt pw = g;
        while (!tbl.count(fg.key(pw))) {
            pw = mulq(pw, g);
            m++;
        }
        std::vector<long long> expr = tbl[fg.key(pw)];
        size_t idx = pc_gens.size();
        pc_gens.push_back(g);
        pc_rels.push_back({m, expr});
        size_t old_count = entries.size();
        AlgebraicInt gt = g;
        for (long long t = 1; t < m; t++) {
            for (size_t i = 0; i < old_count; i++) {
                AlgebraicInt nr = mulq(gt, entries[i].first);
                std::vector<long long> v = entries[i].second;
                v.resize(idx, 0);
                v.push_back(t);
                tbl[fg.key(nr)] = v;
                entries.push_back({nr, std::move(v)});
            }
            if (t + 1 < m) gt = mulq(gt, g);
        }
        if (entries.size() == fg.phi) break;
    }
    if (entries.size() != fg.phi) throw Error("unit group enumeration incomplete");
    if (pc_gens.empty()) { // trivial group
        fg.dlog[fg.key(one)] = {};
        return fg;
    }

    int n = static_cast<int>(pc_gens.size());
    detail::Mat R(n, std::vector<long long>(n, 0));
    for (int j = 0; j < n; j++) {
        R[j][j] = pc_rels[j].first;
        const auto& expr = pc_rels[j].second;
        for (size_t i = 0; i < expr.size(); i++) R[i][j] -= expr[i];
    }
    auto s = detail::snf(R);

    auto powq = [&](AlgebraicInt a, long long e) {
        auto n_ord = static_cast<long long>(fg.phi);
        e %= n_ord;
        if (e < 0) e += n_ord;
        AlgebraicInt r = one, base = a;
        while (e > 0) {
            if (e & 1) r = mulq(r, base);
            if (e >>= 1) base = mulq(base, base);
        }
        return r;
    };

    std::vector<int> kept;
    for (int j = 0; j < n; j++) {
        long long d = std::llabs(s.diag[j]);
        if (d <= 1) continue;
        kept.push_back(j);
        AlgebraicInt gj = one;
        for (int i = 0; i < n; i++)
            if (s.Uinv[i][j] != 0) gj = mulq(gj, powq(pc_gens[i], s.Uinv[i][j]));
        fg.gens.push_back(gj);
        fg.orders.push_back(d);
    }
    unsigned long long prod = 1;
    for (long long d : fg.orders) prod *= static_cast<unsigned long long>(d);
    if (prod != fg.phi) throw Error("unit group decomposition inconsistent");

    for (auto& [res, pc] : entries) {
        std::vector<long long> full = pc;
        full.resize(n, 0);
        std::vector<long long> out;
        out.reserve(kept.size());
        for (int j : kept) {
            i128 acc = 0;
            for (int i = 0; i < n; i++) acc += static_cast<i128>(s.U[j][i]) * full[i];
            long long d = std::llabs(s.diag[j]);
            long long v = static_cast<long long>(((acc % d) + d) % d);
            out.push_back(v);
        }
        fg.dlog[fg.key(res)] = std::move(out);
    }
    return fg;
}

} // namespace

RootOfUnity RootOfUnity::make(long long num, long long den) {
    if (den <= 0) throw RejectedInput("root of unity with nonpositive order");
    num %= den;
    if (num < 0) num += den;
    long long g = gcd_ll(num, den);
    if (num == 0) return {0, 1};
    return {num / g, den / g};
}

RootOfUnity RootOfUnity::pow(long long e) const {
    return make(chk(static_cast<i128>(num) * (e % den)), den);
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    long long l = lcm_ll(a.den, b.den);
    return RootOfUnity::make(chk(static_cast<i128>(a.num) * (l / a.den) +
                                 static_cast<i128>(b.num) * (l / b.den)),
                             l);
}

std::complex<double> RootOfUnity::cd() const {
    double t = 2.0 * 3.14159265358979323846 * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(t), std::sin(t)};
}

Complex RootOfUnity::value(long prec) const {
    Real t = Real::pi(prec) * Real::of(2 * num, prec) / Real::of(den, prec);
    return {cos_(t), sin_(t)};
}

std::pair<long long, long long> RootOfUnity::centered() const {
    if (2 * num > den) return {num - den, den};
    return {num, den};
}

const std::vector<long long>* ResidueUnitGroup::find_dlog(AlgebraicInt residue) const {
    auto it = dlog.find(key(residue));
    return it == dlog.end() ? nullptr : &it->second;
}

AlgebraicInt ResidueUnitGroup::mul_mod(AlgebraicInt a, AlgebraicInt b) const {
    return reduce_mod(modulus, field.mul(a, b));
}

AlgebraicInt ResidueUnitGroup::pow_mod(AlgebraicInt a, long long e) const {
    auto n = static_cast<long long>(phi);
    e %= n;
    if (e < 0) e += n;
    AlgebraicInt r = reduce_mod(modulus, {1, 0}), base = a;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, base);
        if (e >>= 1) base = mul_mod(base, base);
    }
    return r;
}

std::shared_ptr<const ResidueUnitGroup> residue_unit_group(const Field& f, const IdealHNF& modulus,
                                                           unsigned long long capacity) {
    if (modulus.norm() > capacity) throw CapacityError("residue ring exceeds capacity");
    auto rug = std::make_shared<ResidueUnitGroup>();
    rug->field = f;
    rug->modulus = modulus;
    rug->modulus_factors = factor_ideal(f, modulus);

    struct Part {
        FactorGroup fg;
        AlgebraicInt v_one;   // == 1 mod q, == 0 mod complement
    };
    std::vector<Part> parts;
    for (auto& [p, e] : rug->modulus_factors) {
        IdealHNF q = ideal_pow(f, p.ideal, e);
        parts.push_back({factor_group(f, q, p.ideal), AlgebraicInt{1, 0}});
    }
    // CRT lifts: for each part, an element that is 1 mod its prime power and
    // 0 mod the product of the others
    for (size_t i = 0; i < parts.size(); i++) {
        IdealHNF rest{1, 0, 1};
        for (size_t j = 0; j < parts.size(); j++)
            if (j != i) rest = ideal_mul(f, rest, parts[j].fg.q);
        if (rest.is_unit()) {
            parts[i].v_one = {1, 0};
        } else {
            auto [u, v] = split_one(f, parts[i].fg.q, rest);
            parts[i].v_one = reduce_mod(modulus, v); // v == 1 mod q_i, v == 0 mod rest
        }
    }

    rug->phi = 1;
    for (auto& part : parts) {
        rug->phi *= part.fg.phi;
        for (size_t gi = 0; gi < part.fg.gens.size(); gi++) {
            // lift: g * v_one + (1 - v_one)
            AlgebraicInt g = part.fg.gens[gi];
            AlgebraicInt lifted = f.add(f.mul(g, part.v_one), f.sub({1, 0}, part.v_one));
            rug->generators.push_back(reduce_mod(modulus, lifted));
            rug->orders.push_back(part.fg.orders[gi]);
        }
    }

    for (long long y = 0; y < modulus.c; y++)
        for (long long x = 0; x < modulus.a; x++) {
            AlgebraicInt r{x, y};
            bool unit = true;
            std::vector<long long> vec;
            for (auto& part : parts) {
                AlgebraicInt rq = reduce_mod(part.fg.q, r);
                auto it = part.fg.dlog.find(part.fg.key(rq));
                if (it == part.fg.dlog.end()) {
                    unit = false;
                    break;
                }
                vec.insert(vec.end(), it->second.begin(), it->second.end());
            }
            if (!unit) continue;
            rug->unit_residues.push_back(r);
            rug->dlog[rug->key(r)] = std::move(vec);
        }
    if (rug->unit_residues.size() != rug->phi) throw Error("unit residue count mismatch");
    return rug;
}

bool DirichletCharacter::principal() const {
    for (size_t i = 0; i < exponents.size(); i++)
        if (exponents[i] % group->orders[i] != 0) return false;
    return true;
}

RootOfUnity DirichletCharacter::at_residue(AlgebraicInt reduced) const {
    const auto* vec = group->find_dlog(reduced);
    if (!vec) throw RejectedInput("residue is not a unit");
    long long l = 1;
    for (long long d : group->orders) l = lcm_ll(l, d);
    i128 num = 0;
    for (size_t i = 0; i < vec->size(); i++)
        num += static_cast<i128>(exponents[i] % group->orders[i]) * (*vec)[i] *
               (l / group->orders[i]);
    return RootOfUnity::make(chk(num % l), l);
}

std::optional<RootOfUnity> DirichletCharacter::at(AlgebraicInt x) const {
    AlgebraicInt r = reduce_mod(group->modulus, x);
    if (!group->find_dlog(r)) return std::nullopt;
    return at_residue(r);
}

std::optional<RootOfUnity> dirichlet_eval(const DirichletCharacter& chi, const FieldElement& x) {
    const ResidueUnitGroup& g = *chi.group;
    if (x.is_zero()) return std::nullopt;
    const Field& f = g.field;
    for (auto& [p, e] : g.modulus_factors) {
        (void)e;
        if (valuation(f, p.ideal, x) != 0) return std::nullopt;
    }
    if (x.den == 1) return chi.at_residue(reduce_mod(g.modulus, x.num));
    AlgebraicInt den_res = reduce_mod(g.modulus, {x.den, 0});
    if (g.find_dlog(den_res)) {
        RootOfUnity vn = chi.at_residue(reduce_mod(g.modulus, x.num));
        RootOfUnity vd = chi.at_residue(den_res);
        return vn * vd.conj();
    }
    // denominator shares primes with the modulus but the valuations cancel:
    // locate the unit residue a with x =* a by scanning
    IdealHNF m = g.modulus;
    for (auto& [p, e] : g.modulus_factors) {
        (void)e;
        long long v = valuation(f, p.ideal, ideal_from_int(f, x.den));
        for (long long i = 0; i < v; i++) m = ideal_mul(f, m, p.ideal);
    }
    for (AlgebraicInt a : g.unit_residues) {
        AlgebraicInt diff = f.sub(x.num, f.mul(a, AlgebraicInt{x.den, 0}));
        if (ideal_contains(m, diff)) return chi.at_residue(a);
    }
    throw Error("no multiplicatively congruent unit residue found");
}

bool mult_congruent(const Field& f, const FieldElement& x, const FieldElement& y,
                    const IdealHNF& modulus) {
    FieldElement z = f.sub(x, y);
    if (z.is_zero()) return true;
    for (auto& [p, e] : factor_ideal(f, modulus))
        if (valuation(f, p.ideal, z) < e) return false;
    return true;
}

bool InfinityType::trivial() const {
    return u == 0 && u1 == 0 && u2 == 0 && n == 0 && theta_num == 0;
}

InfinityType infinity_type_for(const DirichletCharacter& chi, const Field& f, long long n) {
    InfinityType inf;
    const ResidueUnitGroup& g = *chi.group;
    if (f.imaginary()) {
        long long w = f.unit_order();
        RootOfUnity val = chi.at_residue(reduce_mod(g.modulus, f.unit_generator()));
        // xi^{-k} = chi(xi) with xi = e(1/w): k = -val * w
        if ((static_cast<i128>(val.num) * w) % val.den != 0)
            throw Error("unit character value is not a w-th root of unity");
        long long k = chk(-(static_cast<i128>(val.num) * w / val.den));
        inf.u = ((k % w) + w) % w;
        return inf;
    }
    RootOfUnity val = chi.at_residue(reduce_mod(g.modulus, f.fundamental_unit()));
    auto [tn, td] = val.centered();
    inf.theta_num = tn;
    inf.theta_den = td;
    inf.n = n;
    inf.u2 = 0;
    RootOfUnity m1 = chi.at_residue(reduce_mod(g.modulus, {-1, 0}));
    inf.u1 = m1.is_one() ? 0 : 1;
    inf.gamma = -static_cast<double>(tn) / static_cast<double>(td);
    double log_eps = f.log_fundamental_unit(64).to_double();
    inf.v = 3.14159265358979323846 * (static_cast<double>(n) + inf.gamma) / log_eps;
    return inf;
}

HeckeCharacter HeckeCharacter::make(const Field& f, DirichletCharacter chi, InfinityType inf,
                                    std::shared_ptr<const ClassGroup> cg,
                                    std::vector<long long> psi) {
    HeckeCharacter h;
    h.field_ = f;
    h.chi_ = std::move(chi);
    h.inf_ = inf;
    if (cg && !cg->generators.empty()) {
        // generators must avoid the modulus
        auto adjusted = std::make_shared<ClassGroup>(*cg);
        const IdealHNF& m = h.chi_.group->modulus;
        if (!m.is_unit()) {
            for (IdealHNF& gen : adjusted->generators) {
                if (ideal_gcd(f, gen, m).is_unit()) continue;
                bool replaced = false;
                for (const PrimeIdeal& pr : primes_in_norm_range(f, 1, 5000)) {
                    if (!ideal_gcd(f, pr.ideal, m).is_unit()) continue;
                    if (same_class(f, pr.ideal, gen)) {
                        gen = pr.ideal;
                        replaced = true;
                        break;
                    }
                }
                if (!replaced) throw CapacityError("no modulus-coprime class representative found");
            }
        }
        h.cg_ = adjusted;
        h.psi_ = std::move(psi);
        if (h.psi_.size() != adjusted->generators.size())
            throw RejectedInput("class character exponent count mismatch");
        // fixed root choice per generator: principal branch of the value at
        // the generator's principal power
        const long kRootPrec = 256;
        for (size_t l = 0; l < adjusted->generators.size(); l++) {
            IdealHNF pw = ideal_pow(f, adjusted->generators[l], adjusted->orders[l]);
            auto gen = is_principal_with_generator(f, pw);
            if (!gen) throw Error("generator power is not principal");
            Complex val = h.principal_part(FieldElement{*gen, 1}, kRootPrec);
            Real ang = atan2r(val.im, val.re, MPFR_RNDN);
            if (ang.sign() < 0) ang = ang + Real::pi(kRootPrec) * Real::of(2, kRootPrec);
            Real root_ang = ang / Real::of(adjusted->orders[l], kRootPrec);
            Complex root{cos_(root_ang), sin_(root_ang)};
            h.roots_d_.push_back({root.re.to_double(), root.im.to_double()});
            h.roots_.push_back(std::move(root));
        }
    }
    return h;
}

HeckeCharacter HeckeCharacter::real_infinity_power(const Field& f, long long n) {
    if (f.imaginary()) throw UnsupportedSignature("infinity power defined for real fields");
    auto rug = residue_unit_group(f, IdealHNF{1, 0, 1});
    DirichletCharacter chi{rug, std::vector<long long>(rug->orders.size(), 0)};
    InfinityType inf = infinity_type_for(chi, f, n);
    return make(f, std::move(chi), inf);
}

HeckeCharacter HeckeCharacter::class_character(const Field& f, std::shared_ptr<const ClassGroup> cg,
                                               std::vector<long long> psi) {
    auto rug = residue_unit_group(f, IdealHNF{1, 0, 1});
    DirichletCharacter chi{rug, std::vector<long long>(rug->orders.size(), 0)};
    InfinityType inf;
    if (!f.imaginary()) inf = infinity_type_for(chi, f, 0);
    return make(f, std::move(chi), inf, std::move(cg), std::move(psi));
}

bool HeckeCharacter::principal() const {
    if (!chi_.principal() || !inf_.trivial()) return false;
    for (size_t l = 0; l < psi_.size(); l++)
        if (psi_[l] % cg_->orders[l] != 0) return false;
    return true;
}

std::complex<double> HeckeCharacter::principal_part_d(const FieldElement& gamma) const {
    auto chi_val = dirichlet_eval(chi_, gamma);
    if (!chi_val) return {0, 0};
    std::complex<double> v = chi_val->cd();
    auto [s1, s2] = field_.embed_d(gamma);
    if (field_.imaginary()) {
        if (inf_.u != 0) {
            double ang = std::atan2(s2, s1);
            double t = static_cast<double>(inf_.u) * ang;
            v *= std::complex<double>{std::cos(t), std::sin(t)};
        }
        return v;
    }
    double t = inf_.v * std::log(std::abs(s1 / s2));
    v *= std::complex<double>{std::cos(t), std::sin(t)};
    if (inf_.u1 && s1 < 0) v = -v;
    if (inf_.u2 && s2 < 0) v = -v;
    return v;
}

Complex HeckeCharacter::principal_part(const FieldElement& gamma, long prec) const {
    auto chi_val = dirichlet_eval(chi_, gamma);
    if (!chi_val) return Complex(prec);
    Complex v = chi_val->value(prec);
    EmbeddingValue emb = field_.embed(gamma, prec);
    if (field_.imaginary()) {
        if (inf_.u != 0) {
            Real ang = atan2r(emb.v2, emb.v1, MPFR_RNDN) * Real::of(inf_.u, prec);
            v = v * Complex{cos_(ang), sin_(ang)};
        }
        return v;
    }
    // v = pi*(n - theta)/log eps, theta exact
    Real pi = Real::pi(prec);
    Real theta = Real::of(inf_.theta_num, prec) / Real::of(inf_.theta_den, prec);
    Real vv = pi * (Real::of(inf_.n, prec) - theta) / field_.log_fundamental_unit(prec);
    Real t = vv * log_(abs_(emb.v1 / emb.v2));
    v = v * Complex{cos_(t), sin_(t)};
    int sign = 1;
    if (inf_.u1 && emb.v1.sign() < 0) sign = -sign;
    if (inf_.u2 && emb.v2.sign() < 0) sign = -sign;
    if (sign < 0) v = Complex{-v.re, -v.im};
    return v;
}

std::complex<double> HeckeCharacter::eval_decomposed_d(const std::vector<long long>& j,
                                                       const FieldElement& gamma) const {
    std::complex<double> v = principal_part_d(gamma);
    for (size_t l = 0; l < j.size(); l++) {
        RootOfUnity psi_val = RootOfUnity::make(psi_[l] * j[l], cg_->orders[l]);
        v *= psi_val.cd();
        std::complex<double> r = roots_d_[l];
        for (long long t = 0; t < j[l]; t++) v *= r;
    }
    return v;
}

Complex HeckeCharacter::eval_decomposed(const std::vector<long long>& j, const FieldElement& gamma,
                                        long prec) const {
    Complex v = principal_part(gamma, prec);
    for (size_t l = 0; l < j.size(); l++) {
        RootOfUnity psi_val = RootOfUnity::make(psi_[l] * j[l], cg_->orders[l]);
        v = v * psi_val.value(prec);
        for (long long t = 0; t < j[l]; t++) v = v * roots_[l];
    }
    return v;
}

std::complex<double> HeckeCharacter::eval_d(const FracIdeal& x) const {
    const IdealHNF& m = chi_.group->modulus;
    for (auto& [p, e] : chi_.group->modulus_factors) {
        (void)e;
        long long vn = valuation(field_, p.ideal, x.num);
        long long vd = x.den == 1 ? 0 : valuation(field_, p.ideal, ideal_from_int(field_, x.den));
        if (vn != vd) return {0, 0};
    }
    (void)m;
    if (!cg_ || cg_->generators.empty()) {
        auto g = is_principal_with_generator(field_, x.num);
        if (!g) throw Error("ideal is not principal and no class extension is attached");
        return eval_decomposed_d({}, field_.element(*g, x.den));
    }
    auto [j, gamma] = decompose_in_class_group(field_, x, *cg_);
    return eval_decomposed_d(j, gamma);
}

std::complex<double> HeckeCharacter::eval_d(const IdealHNF& x) const {
    return eval_d(FracIdeal{x, 1});
}

Complex HeckeCharacter::eval(const FracIdeal& x, long prec) const {
    for (auto& [p, e] : chi_.group->modulus_factors) {
        (void)e;
        long long vn = valuation(field_, p.ideal, x.num);
        long long vd = x.den == 1 ? 0 : valuation(field_, p.ideal, ideal_from_int(field_, x.den));
        if (vn != vd) return Complex(prec);
    }
    if (!cg_ || cg_->generators.empty()) {
        auto g = is_principal_with_generator(field_, x.num);
        if (!g) throw Error("ideal is not principal and no class extension is attached");
        return eval_decomposed({}, field_.element(*g, x.den), prec);
    }
    auto [j, gamma] = decompose_in_class_group(field_, x, *cg_);
    return eval_decomposed(j, gamma, prec);
}

std::vector<HeckeCharacter> enumerate_characters(const Field& f, const IdealHNF& modulus,
                                                 const CharacterEnumOptions& options) {
    auto rug = residue_unit_group(f, modulus);
    std::vector<HeckeCharacter> out;
    std::vector<long long> e(rug->orders.size(), 0);
    auto emit = [&](const std::vector<long long>& exps) {
        DirichletCharacter chi{rug, exps};
        InfinityType inf = infinity_type_for(chi, f, 0);
        if (options.with_class_extensions && options.cg && !options.cg->generators.empty()) {
            std::vector<long long> psi(options.cg->generators.size(), 0);
            while (true) {
                out.push_back(HeckeCharacter::make(f, chi, inf, options.cg, psi));
                size_t l = 0;
                while (l < psi.size()) {
                    if (++psi[l] < options.cg->orders[l]) break;
                    psi[l] = 0;
                    l++;
                }
                if (l == psi.size()) break;
            }
        } else {
            out.push_back(HeckeCharacter::make(f, chi, inf));
        }
    };
    while (true) {
        emit(e);
        size_t i = 0;
        while (i < e.size()) {
            if (++e[i] < rug->orders[i]) break;
            e[i] = 0;
            i++;
        }
        if (i == e.size() || e.empty()) break;
    }
    return out;
}

IdealHNF conductor(const DirichletCharacter& chi) {
    const ResidueUnitGroup& g = *chi.group;
    const Field& f = g.field;
    for (const IdealHNF& div : divisors(f, g.modulus)) {
        bool trivial_on_kernel = true;
        for (AlgebraicInt u : g.unit_residues) {
            AlgebraicInt um1 = f.sub(u, {1, 0});
            if (!ideal_contains(div, um1)) continue;
            if (!chi.at_residue(u).is_one()) {
                trivial_on_kernel = false;
                break;
            }
        }
        if (trivial_on_kernel) return div;
    }
    return g.modulus;
}

} // namespace quadprime
