#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <complex>

#include "quadprime/characters.hpp"
#include "quadprime/verify.hpp"

using namespace quadprime;

namespace {

std::complex<double> cval(const Complex& v) { return {v.re.to_double(), v.im.to_double()}; }

} // namespace

TEST_CASE("residue unit groups of small Gaussian moduli") {
    Field qi = Field::make(-1);

    auto g1 = residue_unit_group(qi, ideal_from_element(qi, {1, 1}));
    CHECK(g1->phi == 1);
    CHECK(g1->orders.empty());

    auto g3 = residue_unit_group(qi, ideal_from_int(qi, 3));
    CHECK(g3->phi == 8);
    REQUIRE(g3->orders.size() == 1); // F_9^* is cyclic
    CHECK(g3->orders[0] == 8);

    auto g5 = residue_unit_group(qi, ideal_from_element(qi, {2, 1}));
    CHECK(g5->phi == 4);
    REQUIRE(g5->orders.size() == 1);
    CHECK(g5->orders[0] == 4);
    // the class of i generates
    AlgebraicInt i_res = reduce_mod(g5->modulus, {0, 1});
    AlgebraicInt acc = i_res;
    int ord = 1;
    while (!(acc == reduce_mod(g5->modulus, {1, 0}))) {
        acc = g5->mul_mod(acc, i_res);
        ord++;
    }
    CHECK(ord == 4);
}

TEST_CASE("multiplicative congruence") {
    Field qi = Field::make(-1);
    IdealHNF m = ideal_from_element(qi, {2, 1});

    FieldElement x{{1, 0}, 3};
    CHECK(mult_congruent(qi, x, x, m));
    // 1/3 =* 2 mod (2+i) since 3*2 == 1 mod 5
    int matches = 0;
    for (long long y = 0; y < 5; y++) {
        if (mult_congruent(qi, x, FieldElement{{y, 0}, 1}, m)) {
            CHECK(y == 2);
            matches++;
        }
    }
    CHECK(matches == 1);
    // difference generating the modulus exactly
    CHECK(mult_congruent(qi, FieldElement{{2, 1}, 1}, FieldElement{{0, 0}, 1}, m));
}

TEST_CASE("dirichlet character evaluation") {
    Field qi = Field::make(-1);
    auto g5 = residue_unit_group(qi, ideal_from_element(qi, {2, 1}));

    DirichletCharacter principal{g5, {0}};
    CHECK(dirichlet_eval(principal, {{3, 2}, 1})->is_one());
    CHECK(!dirichlet_eval(principal, {{2, 1}, 1}).has_value()); // in the modulus

    // character with chi(i) = i
    DirichletCharacter chi{g5, {1}};
    for (long long e = 1; e < 4; e++) {
        DirichletCharacter c{g5, {e}};
        if (c.at({0, 1}) == RootOfUnity::make(1, 4)) chi = c;
    }
    REQUIRE(chi.at({0, 1}) == RootOfUnity::make(1, 4));
    auto v13 = dirichlet_eval(chi, {{1, 0}, 3});
    REQUIRE(v13.has_value());
    CHECK(*v13 == *chi.at({2, 0}));
}

TEST_CASE("infinity types") {
    Field qi = Field::make(-1);
    auto g5 = residue_unit_group(qi, ideal_from_element(qi, {2, 1}));
    DirichletCharacter principal{g5, {0}};
    CHECK(infinity_type_for(principal, qi).trivial());

    // chi(i) = -1 forces u = 2
    DirichletCharacter chi{g5, {2}};
    REQUIRE(chi.at({0, 1}) == RootOfUnity::make(1, 2));
    CHECK(infinity_type_for(chi, qi).u == 2);

    Field q2 = Field::make(2);
    HeckeCharacter psi = HeckeCharacter::real_infinity_power(q2, 1);
    double log_eps = std::log(1 + std::sqrt(2.0));
    CHECK(psi.infinity().v == doctest::Approx(3.14159265358979 / log_eps).epsilon(1e-12));
    CHECK(psi.infinity().u1 == 0);
}

TEST_CASE("hecke evaluation") {
    Field qi = Field::make(-1);
    IdealHNF m3 = ideal_from_int(qi, 3);
    auto chars = enumerate_characters(qi, m3);
    REQUIRE(chars.size() == 8);

    int principal_count = 0;
    for (const HeckeCharacter& h : chars) principal_count += h.principal() ? 1 : 0;
    CHECK(principal_count == 1);

    for (const HeckeCharacter& h : chars) {
        if (!h.principal()) continue;
        CHECK(std::abs(h.eval_d(ideal_from_element(qi, {2, 1})) - std::complex<double>{1, 0}) <
              1e-12);
        CHECK(std::abs(h.eval_d(m3)) == 0.0);
    }

    // h = 1: value on (p) equals chi(p) * chi_inf(p)
    for (const HeckeCharacter& h : chars) {
        FieldElement p{{1, 1}, 1};
        auto direct = h.principal_part_d(p);
        auto via_ideal = h.eval_d(ideal_from_element(qi, {1, 1}));
        CHECK(std::abs(direct - via_ideal) < 1e-12);
    }

    // class character of Q(sqrt(-5)) is -1 on the ramified prime over 2
    Field qm5 = Field::make(-5);
    auto cg = std::make_shared<ClassGroup>(class_group(qm5));
    HeckeCharacter psi = HeckeCharacter::class_character(qm5, cg, {1});
    IdealHNF p2 = ideal_from_gens(qm5, {{2, 0}, {1, 1}});
    CHECK(std::abs(psi.eval_d(p2) - std::complex<double>{-1, 0}) < 1e-12);
}

TEST_CASE("character enumeration counts") {
    Field qi = Field::make(-1);
    CHECK(enumerate_characters(qi, IdealHNF{1, 0, 1}).size() == 1);
    CHECK(enumerate_characters(qi, ideal_from_int(qi, 3)).size() == 8);

    Field qm5 = Field::make(-5);
    CharacterEnumOptions opt;
    opt.with_class_extensions = true;
    opt.cg = std::make_shared<ClassGroup>(class_group(qm5));
    CHECK(enumerate_characters(qm5, IdealHNF{1, 0, 1}, opt).size() == 2);
}

TEST_CASE("conductor computation") {
    Field qi = Field::make(-1);
    IdealHNF m5 = ideal_from_element(qi, {2, 1});
    auto g5 = residue_unit_group(qi, m5);

    DirichletCharacter principal{g5, {0}};
    CHECK(conductor(principal).is_unit());

    DirichletCharacter prim{g5, {1}};
    CHECK(conductor(prim) == m5);

    // inflate a primitive character mod (2+i) to modulus 3(2+i), recover (2+i)
    IdealHNF m15 = ideal_mul(qi, ideal_from_int(qi, 3), m5);
    auto g15 = residue_unit_group(qi, m15);
    bool found = false;
    for (const HeckeCharacter& h : enumerate_characters(qi, m15)) {
        bool matches = true;
        for (const AlgebraicInt& u : g15->unit_residues) {
            auto big = h.chi().at_residue(u);
            auto small = prim.at(u);
            if (!small || !(big == *small)) {
                matches = false;
                break;
            }
        }
        if (matches) {
            found = true;
            CHECK(conductor(h.chi()) == m5);
        }
    }
    CHECK(found);
}

TEST_CASE("exact root-of-unity summation oracle") {
    std::vector<RootOfUnity> thirds{RootOfUnity::make(0, 3), RootOfUnity::make(1, 3),
                                    RootOfUnity::make(2, 3)};
    CHECK(exact_root_of_unity_sum(thirds) == 0);
    std::vector<RootOfUnity> ones{RootOfUnity::one(), RootOfUnity::one()};
    CHECK(exact_root_of_unity_sum(ones) == 2);
    std::vector<RootOfUnity> mixed{RootOfUnity::make(1, 4)};
    CHECK(!exact_root_of_unity_sum(mixed).has_value());
    std::vector<RootOfUnity> i_pair{RootOfUnity::make(1, 4), RootOfUnity::make(3, 4)};
    CHECK(exact_root_of_unity_sum(i_pair) == 0);
}

TEST_CASE("exact algebra checks at reduced scale") {
    Field qi = Field::make(-1);
    CHECK(check_orthogonality(qi, 200, 60).pass);
    CHECK(check_unit_orbit_cancellation(qi, 60).pass);
    CHECK(check_unit_consistency(qi, 30).pass);
    CHECK(check_generator_independence(qi, 20, 3).pass);
    CHECK(check_hecke_multiplicativity(qi, 20, 3).pass);

    Field qm5 = Field::make(-5);
    CHECK(check_orthogonality(qm5, 100, 40).pass);
    CHECK(check_hecke_multiplicativity(qm5, 15, 3).pass);

    Field q2 = Field::make(2);
    CHECK(check_orthogonality(q2, 60, 30).pass);
    CHECK(check_window_uniqueness(q2, 100).pass);
    CHECK(check_unit_consistency(q2, 20).pass);
    CHECK(check_generator_independence(q2, 15, 3).pass);
}

TEST_CASE("hecke values have modulus one on coprime ideals") {
    Field q2 = Field::make(2);
    HeckeCharacter psi = HeckeCharacter::real_infinity_power(q2, 2);
    for (const PrimeIdeal& p : primes_in_norm_range(q2, 1, 200)) {
        double av = std::abs(psi.eval_d(p.ideal));
        CHECK(av == doctest::Approx(1.0).epsilon(1e-12));
    }
}
