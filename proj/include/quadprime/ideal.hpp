#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "quadprime/field.hpp"

namespace quadprime {

// Integral ideal as the Z-module with basis (a, b + c*eta); c | a, c | b,
// 0 <= b < a, norm = a*c. HNF equality is ideal equality.
struct IdealHNF {
    long long a = 1, b = 0, c = 1;

    unsigned long long norm() const {
        return static_cast<unsigned long long>(a) * static_cast<unsigned long long>(c);
    }
    bool is_unit() const { return a == 1 && c == 1; }
    friend bool operator==(const IdealHNF&, const IdealHNF&) = default;
    friend auto operator<=>(const IdealHNF& x, const IdealHNF& y) {
        if (auto r = x.norm() <=> y.norm(); r != 0) return r;
        if (auto r = x.a <=> y.a; r != 0) return r;
        if (auto r = x.b <=> y.b; r != 0) return r;
        return x.c <=> y.c;
    }
};

struct FracIdeal {
    IdealHNF num;
    long long den = 1; // minimal positive

    friend bool operator==(const FracIdeal&, const FracIdeal&) = default;
};

enum class SplitKind { split, inert, ramified };

struct PrimeIdeal {
    IdealHNF ideal;
    long long p = 0;
    SplitKind kind = SplitKind::split;
    int residue_degree = 1;

    unsigned long long norm() const { return ideal.norm(); }
};

struct ClassGroup {
    long long h = 1;
    std::vector<IdealHNF> generators;    // one per cyclic factor
    std::vector<long long> orders;       // cycle orders, product == h
};

// --- construction and basic arithmetic ---
IdealHNF make_ideal_checked(const Field& f, long long a, long long b, long long c);
IdealHNF ideal_from_gens(const Field& f, const std::vector<AlgebraicInt>& gens);
IdealHNF ideal_from_element(const Field& f, AlgebraicInt g);
IdealHNF ideal_from_int(const Field& f, long long n);
IdealHNF ideal_mul(const Field& f, const IdealHNF& x, const IdealHNF& y);
IdealHNF ideal_gcd(const Field& f, const IdealHNF& x, const IdealHNF& y);
IdealHNF ideal_conj(const Field& f, const IdealHNF& x);
IdealHNF ideal_pow(const Field& f, const IdealHNF& x, long long e);
std::optional<IdealHNF> ideal_div(const Field& f, const IdealHNF& x, const IdealHNF& y);
bool ideal_contains(const IdealHNF& x, AlgebraicInt g);
bool ideal_divides(const IdealHNF& x, const IdealHNF& y); // x | y
AlgebraicInt reduce_mod(const IdealHNF& x, AlgebraicInt g); // canonical residue
long long valuation(const Field& f, const IdealHNF& prime, const IdealHNF& x);
// valuation of a field element (may be negative)
long long valuation(const Field& f, const IdealHNF& prime, const FieldElement& x);

FracIdeal frac_reduce(const Field& f, IdealHNF num, long long den);
FracIdeal frac_of(const Field& f, const FieldElement& x);
FracIdeal frac_mul(const Field& f, const FracIdeal& x, const FracIdeal& y);

// --- factorization and arithmetic functions ---
struct FactorBudget {
    unsigned long long norm_bound = 1'000'000'000'000ULL; // capacity for factor_ideal
    bool pollard_rho = true;
};

std::vector<std::pair<PrimeIdeal, int>> factor_ideal(const Field& f, const IdealHNF& x,
                                                     const FactorBudget& budget = {});
int moebius(const Field& f, const IdealHNF& x);
unsigned long long euler_phi(const Field& f, const IdealHNF& x);
std::vector<IdealHNF> divisors(const Field& f, const IdealHNF& x);

// prime ideals above a rational prime, ordered by HNF
std::vector<PrimeIdeal> primes_above(const Field& f, long long p);

// every prime ideal with lo < norm <= hi, ascending by (norm, HNF)
std::vector<PrimeIdeal> primes_in_norm_range(const Field& f, unsigned long long lo,
                                             unsigned long long hi,
                                             unsigned long long capacity = 200'000'000ULL);
// chunk-friendly primitive: rational primes in (lo, hi]
std::vector<long long> rational_primes_in(unsigned long long lo, unsigned long long hi);

// --- principality and class group ---
std::optional<AlgebraicInt> is_principal_with_generator(const Field& f, const IdealHNF& x,
                                                        unsigned long long capacity = (1ULL << 62));
ClassGroup class_group(const Field& f);
// exponents 0 <= j_l < m_l and a generator of x * prod gens^{-j}; round-trips exactly
std::pair<std::vector<long long>, FieldElement> decompose_in_class_group(const Field& f,
                                                                         const FracIdeal& x,
                                                                         const ClassGroup& cg);
bool same_class(const Field& f, const IdealHNF& x, const IdealHNF& y);

// --- integer utilities shared by the sieving paths ---
bool is_prime_u64(unsigned long long n);
std::vector<std::pair<unsigned long long, int>> factor_u64(unsigned long long n,
                                                           bool pollard_rho = true);
// solutions of X^2 - t X - n = 0 mod p (the minimal polynomial of eta)
std::vector<long long> eta_roots_mod_p(const Field& f, long long p);

} // namespace quadprime
