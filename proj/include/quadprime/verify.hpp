#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadprime/characters.hpp"

namespace quadprime {

struct CheckResult {
    std::string name;
    bool pass = false;
    long long cases = 0;
    std::string detail;
};

// Exact value of a sum of roots of unity when it is a rational integer
// (reduction modulo the cyclotomic polynomial); nullopt when it is not.
std::optional<long long> exact_root_of_unity_sum(const std::vector<RootOfUnity>& vals);

// all integral ideals with norm <= bound, ascending by (norm, HNF)
std::vector<IdealHNF> ideals_up_to(const Field& f, unsigned long long bound);
// one element generator per associate class, norm <= bound, ascending
std::vector<AlgebraicInt> canonical_elements_up_to(const Field& f, unsigned long long bound);

// character orthogonality over every modulus of norm <= modulus_bound;
// moduli of norm <= brute_bound are additionally summed value-by-value and
// reduced in the cyclotomic ring
CheckResult check_orthogonality(const Field& f, unsigned long long modulus_bound,
                                unsigned long long brute_bound);
// sum over divisors of the Moebius function vanishes away from (1)
CheckResult check_moebius_identity(const Field& f, unsigned long long bound);
// sum over divisors d of (q) of mu(d)/N(d) equals phi(q)/N(q)
CheckResult check_phi_divisor_identity(const Field& f, unsigned long long bound);
// unit-window generator is unique up to sign (real fields)
CheckResult check_window_uniqueness(const Field& f, int samples, unsigned long long seed = 20240501);
// characters nontrivial on the units sum to zero over the unit orbit
CheckResult check_unit_orbit_cancellation(const Field& f, unsigned long long modulus_bound);
// chi(u)*chi_inf(u) == 1 for units, to 1e-30 at 192 bits
CheckResult check_unit_consistency(const Field& f, unsigned long long modulus_bound);
// value on a principal ideal does not depend on the generator choice
CheckResult check_generator_independence(const Field& f, unsigned long long modulus_bound,
                                         int samples, unsigned long long seed = 987654);
// full multiplicativity of Hecke values on coprime ideals
CheckResult check_hecke_multiplicativity(const Field& f, unsigned long long modulus_bound,
                                         int samples, unsigned long long seed = 13579);

std::vector<CheckResult> exact_algebra_suite(const Field& f, unsigned long long scale);

} // namespace quadprime
