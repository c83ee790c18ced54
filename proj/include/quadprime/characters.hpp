#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "quadprime/field.hpp"
#include "quadprime/ideal.hpp"

namespace quadprime {

// exp(2*pi*i * num/den), kept reduced with 0 <= num < den
struct RootOfUnity {
    long long num = 0, den = 1;

    static RootOfUnity one() { return {0, 1}; }
    static RootOfUnity make(long long num, long long den);
    bool is_one() const { return num == 0; }
    RootOfUnity pow(long long e) const;
    RootOfUnity conj() const { return make(-num, den); }
    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

    std::complex<double> cd() const;
    Complex value(long prec) const;
    // argument/2pi shifted into (-1/2, 1/2]
    std::pair<long long, long long> centered() const;
};

// Structure of (O_K/f)^* computed per prime-power factor and glued by CRT.
struct ResidueUnitGroup {
    Field field;
    IdealHNF modulus;
    std::vector<std::pair<PrimeIdeal, int>> modulus_factors;
    unsigned long long phi = 1;
    std::vector<AlgebraicInt> generators; // canonical residues mod the modulus
    std::vector<long long> orders;        // product == phi
    std::vector<AlgebraicInt> unit_residues;
    std::unordered_map<unsigned long long, std::vector<long long>> dlog;

    unsigned long long key(AlgebraicInt reduced) const {
        return static_cast<unsigned long long>(reduced.x) +
               static_cast<unsigned long long>(reduced.y) * static_cast<unsigned long long>(modulus.a);
    }
    const std::vector<long long>* find_dlog(AlgebraicInt residue) const;
    AlgebraicInt mul_mod(AlgebraicInt a, AlgebraicInt b) const;
    AlgebraicInt pow_mod(AlgebraicInt a, long long e) const;
};

std::shared_ptr<const ResidueUnitGroup> residue_unit_group(const Field& f, const IdealHNF& modulus,
                                                           unsigned long long capacity = 100000);

struct DirichletCharacter {
    std::shared_ptr<const ResidueUnitGroup> group;
    std::vector<long long> exponents; // one per generator, mod its order

    bool principal() const;
    // value at a unit residue (must be coprime to the modulus)
    RootOfUnity at_residue(AlgebraicInt reduced) const;
    // value at an integral element; nullopt encodes 0
    std::optional<RootOfUnity> at(AlgebraicInt x) const;
};

// 0 (nullopt) off the coprime subgroup; otherwise the value at the unique unit
// residue multiplicatively congruent to x
std::optional<RootOfUnity> dirichlet_eval(const DirichletCharacter& chi, const FieldElement& x);

// v_P(x - y) >= v_P(modulus) for every prime P of the modulus; x == y counts as true
bool mult_congruent(const Field& f, const FieldElement& x, const FieldElement& y,
                    const IdealHNF& modulus);

struct InfinityType {
    // imaginary: (alpha/|alpha|)^u
    long long u = 0;
    // real: |s1/s2|^{iv} sgn(s1)^{u1} sgn(s2)^{u2}, v = pi*(n + gamma)/log eps
    int u1 = 0, u2 = 0;
    long long n = 0;
    long long theta_num = 0, theta_den = 1; // arg(chi(eps))/2pi in (-1/2, 1/2]
    double gamma = 0;
    double v = 0;

    bool trivial() const;
};

InfinityType infinity_type_for(const DirichletCharacter& chi, const Field& f, long long n = 0);

class HeckeCharacter {
public:
    // h_K = 1 or class extension by the character psi (exponents over cg orders)
    static HeckeCharacter make(const Field& f, DirichletCharacter chi, InfinityType inf,
                               std::shared_ptr<const ClassGroup> cg = nullptr,
                               std::vector<long long> psi = {});
    // |s1/s2|^{i pi n / log eps} on a real field (principal chi mod (1))
    static HeckeCharacter real_infinity_power(const Field& f, long long n);
    // class-group character as a character mod (1)
    static HeckeCharacter class_character(const Field& f, std::shared_ptr<const ClassGroup> cg,
                                          std::vector<long long> psi);

    const Field& field() const { return field_; }
    const DirichletCharacter& chi() const { return chi_; }
    const InfinityType& infinity() const { return inf_; }
    const ClassGroup* class_group_ptr() const { return cg_.get(); }
    const IdealHNF& modulus() const { return chi_.group->modulus; }
    const std::vector<long long>& psi() const { return psi_; }
    bool principal() const;

    // value on a fractional ideal; 0 off the coprime group
    std::complex<double> eval_d(const FracIdeal& x) const;
    Complex eval(const FracIdeal& x, long prec) const;
    std::complex<double> eval_d(const IdealHNF& x) const;

    // value given a known decomposition x = prod gens^j * (gamma)
    std::complex<double> eval_decomposed_d(const std::vector<long long>& j,
                                           const FieldElement& gamma) const;
    Complex eval_decomposed(const std::vector<long long>& j, const FieldElement& gamma,
                            long prec) const;
    // principal-part value chi(gamma) * chi_inf(gamma)
    std::complex<double> principal_part_d(const FieldElement& gamma) const;
    Complex principal_part(const FieldElement& gamma, long prec) const;

private:
    Field field_;
    DirichletCharacter chi_;
    InfinityType inf_;
    std::shared_ptr<const ClassGroup> cg_; // generators coprime to the modulus
    std::vector<long long> psi_;
    std::vector<Complex> roots_;           // fixed root choice per generator, 256-bit
    std::vector<std::complex<double>> roots_d_;
};

struct CharacterEnumOptions {
    bool with_class_extensions = false;
    std::shared_ptr<const ClassGroup> cg; // required when extensions are requested
};

std::vector<HeckeCharacter> enumerate_characters(const Field& f, const IdealHNF& modulus,
                                                 const CharacterEnumOptions& options = {});

// smallest divisor of the modulus through which chi factors
IdealHNF conductor(const DirichletCharacter& chi);

} // namespace quadprime
