#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "quadprime/field.hpp"

using namespace quadprime;

namespace {

double d2(const Real& r) { return r.to_double(); }

// exact test |sigma_i(a)|^2 <= eps^s * N(a) for s = +-1, via field arithmetic
bool window_bound_holds(const Field& f, AlgebraicInt a) {
    AlgebraicInt eps = f.fundamental_unit();
    AlgebraicInt eps_inv = f.fundamental_unit_inverse();
    auto nrm = static_cast<long long>(f.norm_abs(a));
    AlgebraicInt n_el{nrm, 0};
    for (AlgebraicInt v : {a, f.conj(a)}) {
        AlgebraicInt v2 = f.mul(v, v);
        // eps^{-1} N <= sigma1(v)^2 <= eps N
        if (f.sign_sigma1(f.sub(f.mul(eps, n_el), v2)) < 0) return false;
        if (f.sign_sigma1(f.sub(v2, f.mul(eps_inv, n_el))) < 0) return false;
    }
    return true;
}

} // namespace

TEST_CASE("field construction fixes basis, units and discriminant") {
    Field qi = Field::make(-1);
    CHECK(!qi.half_basis());
    CHECK(qi.unit_order() == 4);
    CHECK(qi.discriminant() == -4);
    CHECK(d2(qi.im_eta(96)) == doctest::Approx(1.0).epsilon(1e-12));

    Field q3 = Field::make(-3);
    CHECK(q3.half_basis());
    CHECK(q3.unit_order() == 6);
    CHECK(d2(q3.im_eta(96)) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));

    Field q5 = Field::make(5);
    CHECK(q5.half_basis());
    CHECK(q5.fundamental_unit() == AlgebraicInt{0, 1}); // (1+sqrt 5)/2

    Field qm5 = Field::make(-5);
    CHECK(qm5.unit_order() == 2);
    CHECK(d2(qm5.im_eta(96)) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));

    CHECK_THROWS_AS(Field::make(12), RejectedInput);
    CHECK_THROWS_AS(Field::make(0), RejectedInput);
    CHECK_THROWS_AS(Field::make(1), RejectedInput);
    CHECK_THROWS_AS(Field::make(-4), RejectedInput);
}

TEST_CASE("embeddings match closed forms") {
    Field q2 = Field::make(2);
    EmbeddingValue e = q2.embed(AlgebraicInt{1, 1}, 128);
    CHECK(d2(e.v1) == doctest::Approx(1 + std::sqrt(2.0)).epsilon(1e-15));
    CHECK(d2(e.v2) == doctest::Approx(1 - std::sqrt(2.0)).epsilon(1e-15));

    Field qi = Field::make(-1);
    EmbeddingValue ei = qi.embed(AlgebraicInt{3, 2}, 128);
    CHECK(d2(ei.v1) == doctest::Approx(3.0));
    CHECK(d2(ei.v2) == doctest::Approx(2.0));

    Field q5 = Field::make(5);
    EmbeddingValue e5 = q5.embed(AlgebraicInt{0, 1}, 128);
    CHECK(d2(e5.v1) == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-15));
    CHECK(d2(e5.v2) == doctest::Approx((1 - std::sqrt(5.0)) / 2).epsilon(1e-15));
}

TEST_CASE("norms") {
    Field q2 = Field::make(2);
    CHECK(q2.norm_abs({1, 1}) == 1);
    CHECK(q2.norm_abs({-1, 2}) == 7);
    Field qi = Field::make(-1);
    CHECK(qi.norm_abs({1, 1}) == 2);
}

TEST_CASE("fundamental units for small real fields") {
    CHECK(Field::make(2).fundamental_unit() == AlgebraicInt{1, 1});
    CHECK(Field::make(3).fundamental_unit() == AlgebraicInt{2, 1});
    CHECK(Field::make(5).fundamental_unit() == AlgebraicInt{0, 1});
    CHECK_THROWS_AS(Field::make(-1).fundamental_unit(), UnsupportedSignature);
}

TEST_CASE("canonical generator reduction") {
    Field q2 = Field::make(2);
    CHECK(q2.canonical_generator({1, 0}) == AlgebraicInt{1, 0});
    CHECK(q2.canonical_generator({3, 1}) == AlgebraicInt{-1, 2});
    // eps^3 = 7 + 5*sqrt(2) reduces to 1
    CHECK(q2.canonical_generator({7, 5}) == AlgebraicInt{1, 0});
    CHECK_THROWS_AS(q2.canonical_generator({0, 0}), RejectedInput);

    // ratio |sigma2/sigma1| of the reduced 3+sqrt(2) lies in (eps^-1, eps]
    auto e = q2.embed(AlgebraicInt{-1, 2}, 96);
    double ratio = std::abs(d2(e.v2) / d2(e.v1));
    CHECK(ratio == doctest::Approx(2.0943).epsilon(1e-3));
}

TEST_CASE("canonical generator: idempotence, uniqueness, window bound") {
    std::mt19937_64 rng(12345);
    for (long long d : {2LL, 5LL, 3LL, 10LL}) {
        Field f = Field::make(d);
        AlgebraicInt eps = f.fundamental_unit();
        std::uniform_int_distribution<long long> coord(-1000000, 1000000);
        int tested = 0;
        while (tested < 250) {
            AlgebraicInt a0{coord(rng), coord(rng)};
            if (a0.is_zero()) continue;
            tested++;
            AlgebraicInt a = f.canonical_generator(a0);
            CHECK(f.in_unit_window(a));
            CHECK(f.sign_sigma1(a) > 0);
            CHECK(f.canonical_generator(a) == a);
            CHECK(window_bound_holds(f, a));
            // exactly the pair +-a passes the window among eps-power multiples
            int hits = 0;
            for (long long n = -5; n <= 5; n++) {
                AlgebraicInt cand = f.mul(a, f.pow_unit(eps, n));
                for (AlgebraicInt s : {cand, f.neg(cand)})
                    if (f.in_unit_window(s)) hits++;
            }
            CHECK(hits == 2);
        }
    }
}

TEST_CASE("norm multiplicativity over random pairs") {
    std::mt19937_64 rng(777);
    for (long long d : {-1LL, -5LL, 2LL, 5LL}) {
        Field f = Field::make(d);
        std::uniform_int_distribution<long long> coord(-10000, 10000);
        for (int i = 0; i < 2500; i++) {
            AlgebraicInt a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
            CHECK(static_cast<unsigned long long>(f.norm_abs(a)) * f.norm_abs(b) ==
                  f.norm_abs(f.mul(a, b)));
        }
    }
}

TEST_CASE("embedding consistency with the exact norm") {
    std::mt19937_64 rng(4242);
    const long prec = 192;
    for (long long d : {-1LL, -3LL, -5LL, 2LL, 5LL}) {
        Field f = Field::make(d);
        std::uniform_int_distribution<long long> coord(-100000, 100000);
        for (int i = 0; i < 200; i++) {
            AlgebraicInt a{coord(rng), coord(rng)};
            if (a.is_zero()) continue;
            EmbeddingValue e = f.embed(a, prec);
            Real prod = f.imaginary() ? e.v1 * e.v1 + e.v2 * e.v2 : abs_(e.v1 * e.v2);
            Real nrm = Real::of(static_cast<long long>(f.norm_abs(a)), prec);
            Real rel = abs_(prod - nrm) / nrm;
            Real tol = Real::of(1, prec);
            for (int k = 0; k < prec - 8; k++) tol = tol / Real::of(2, prec);
            CHECK(rel < tol);
        }
    }
}

TEST_CASE("lattice distance") {
    Field qi = Field::make(-1);
    const long prec = 128;
    Complex z{Real::of_d(0.5, prec), Real::of_d(0.5, prec)};
    CHECK(d2(qi.lattice_distance(z, prec)) ==
          doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-12));
    Complex z2{Real::of(3, prec), Real::of(2, prec)};
    CHECK(d2(qi.lattice_distance(z2, prec)) == doctest::Approx(0.0));

    Field q3 = Field::make(-3);
    Complex z3{Real::of_d(0.5, prec), sqrt_(Real::of(3, prec)) / Real::of(4, prec)};
    // candidate minimization over nearby lattice points
    double best = 1e9;
    for (long long x = -2; x <= 2; x++)
        for (long long y = -2; y <= 2; y++) {
            EmbeddingValue e = q3.embed(AlgebraicInt{x, y}, prec);
            double dx = 0.5 - d2(e.v1), dy = std::sqrt(3.0) / 4 - d2(e.v2);
            best = std::min(best, std::hypot(dx, dy));
        }
    CHECK(d2(q3.lattice_distance(z3, prec)) == doctest::Approx(best).epsilon(1e-12));

    CHECK_THROWS_AS(Field::make(2).lattice_distance(z, prec), UnsupportedSignature);
}

TEST_CASE("canonical associate picks one representative per orbit") {
    for (long long d : {-1LL, -3LL, -5LL}) {
        Field f = Field::make(d);
        std::mt19937_64 rng(99);
        std::uniform_int_distribution<long long> coord(-50, 50);
        for (int i = 0; i < 200; i++) {
            AlgebraicInt a{coord(rng), coord(rng)};
            if (a.is_zero()) continue;
            AlgebraicInt c = f.canonical_associate(a);
            for (AlgebraicInt u : f.units())
                CHECK(f.canonical_associate(f.mul(a, u)) == c);
        }
    }
}
