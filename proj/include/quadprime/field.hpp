#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadprime/errors.hpp"
#include "quadprime/mp.hpp"

namespace quadprime {

enum class Signature { imaginary, real };

// x + y*eta with integer coordinates over the basis {1, eta} of the ring of
// integers. The owning Field supplies the multiplication rule.
struct AlgebraicInt {
    long long x = 0, y = 0;

    bool is_zero() const { return x == 0 && y == 0; }
    friend bool operator==(const AlgebraicInt&, const AlgebraicInt&) = default;
    // deterministic total order used for tie-breaking in streams
    friend auto operator<=>(const AlgebraicInt& a, const AlgebraicInt& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }
};

// num / den, reduced so that no rational prime divides den and both coordinates.
struct FieldElement {
    AlgebraicInt num;
    long long den = 1;

    bool is_zero() const { return num.is_zero(); }
    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

struct EmbeddingValue {
    Real v1, v2;
    long precision_bits;
};

// A quadratic field Q(sqrt(d)), d squarefree. Imaginary when d < 0; then the
// two components of an embedding are the real and imaginary part of the single
// complex embedding.
class Field {
public:
    Field() = default; // empty descriptor; use make() for a valid field
    static Field make(long long d);

    long long d() const { return d_; }
    bool half_basis() const { return half_; } // eta = (1+sqrt(d))/2
    long long discriminant() const { return disc_; }
    Signature signature() const { return d_ < 0 ? Signature::imaginary : Signature::real; }
    bool imaginary() const { return d_ < 0; }

    // eta^2 = eta_t * eta + eta_n
    long long eta_t() const { return eta_t_; }
    long long eta_n() const { return eta_n_; }

    // unit group order (imaginary only)
    int unit_order() const;
    std::vector<AlgebraicInt> units() const; // imaginary: all w units
    AlgebraicInt unit_generator() const;     // imaginary: primitive w-th root

    AlgebraicInt fundamental_unit() const;   // real only, > 1, minimal
    AlgebraicInt fundamental_unit_inverse() const;
    Real log_fundamental_unit(long prec) const;
    Real fundamental_unit_value(long prec) const; // sigma1 image

    Real im_eta(long prec) const; // imaginary: area of the fundamental cell

    // --- exact element arithmetic ---
    AlgebraicInt add(AlgebraicInt a, AlgebraicInt b) const;
    AlgebraicInt sub(AlgebraicInt a, AlgebraicInt b) const;
    AlgebraicInt mul(AlgebraicInt a, AlgebraicInt b) const;
    AlgebraicInt neg(AlgebraicInt a) const { return {-a.x, -a.y}; }
    AlgebraicInt conj(AlgebraicInt a) const;
    AlgebraicInt pow_unit(AlgebraicInt u, long long e) const; // unit^e, e may be negative
    __int128 norm_signed(AlgebraicInt a) const;
    unsigned long long norm_abs(AlgebraicInt a) const;

    FieldElement element(AlgebraicInt num, long long den) const; // reduces
    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, AlgebraicInt b) const;
    // exact quotient a/b in the ring; nullopt if b does not divide a
    std::optional<AlgebraicInt> div_exact(AlgebraicInt a, AlgebraicInt b) const;

    // --- embeddings ---
    EmbeddingValue embed(AlgebraicInt a, long prec) const;
    EmbeddingValue embed(const FieldElement& a, long prec) const;
    // fast double-precision embedding pair (re/im for imaginary signature)
    std::pair<double, double> embed_d(AlgebraicInt a) const;
    std::pair<double, double> embed_d(const FieldElement& a) const;
    // with outward-rounded enclosures
    std::pair<IReal, IReal> embed_interval(AlgebraicInt a, long prec) const;
    std::pair<IReal, IReal> embed_interval(const FieldElement& a, long prec) const;

    // exact sign of sigma1(a) (real field; also valid for the real part layout
    // of half-integer coordinates S + T sqrt(d) over 2)
    int sign_sigma1(AlgebraicInt a) const;
    // exact comparison |sigma_i(a)| vs |sigma_i(b)| through squared values
    int cmp_abs_sigma1(AlgebraicInt a, AlgebraicInt b) const;

    // real only: eps^-1 |sigma1(a)| < |sigma2(a)| <= eps |sigma1(a)|, exact
    bool in_unit_window(AlgebraicInt a) const;
    // real only: the window representative with sigma1 > 0
    AlgebraicInt canonical_generator(AlgebraicInt a0) const;
    // imaginary only: the associate in the canonical sector of angle 2*pi/w
    AlgebraicInt canonical_associate(AlgebraicInt a) const;
    // signature-dispatched canonical representative up to units
    AlgebraicInt canonical_rep(AlgebraicInt a) const;

    // imaginary only: distance from z to the nearest lattice point
    Real lattice_distance(const Complex& z, long prec) const;
    // nearest lattice point(s): the best of the four rounding candidates
    AlgebraicInt nearest_lattice_point(const Complex& z) const;

    std::string describe_eta() const; // "sqrt(d)" or "(1+sqrt(d))/2"

private:
    long long d_ = 0;        // signed squarefree radicand
    bool half_ = false;      // eta = (1+sqrt(d))/2
    double sqrt_abs_d_ = 0;  // cached for the double fast paths
    long long disc_ = 0;
    long long eta_t_ = 0, eta_n_ = 0;
    int w_ = 0;                      // imaginary
    AlgebraicInt fund_unit_{};       // real
    AlgebraicInt fund_unit_inv_{};   // real
};

// deterministic 64-bit key for hashing coordinates
inline unsigned long long coord_key(const AlgebraicInt& a) {
    auto mix = [](unsigned long long v) {
        v ^= v >> 33; v *= 0xff51afd7ed558ccdULL;
        v ^= v >> 33; v *= 0xc4ceb9fe1a85ec53ULL;
        return v ^ (v >> 33);
    };
    return mix(static_cast<unsigned long long>(a.x) * 0x9e3779b97f4a7c15ULL ^
               static_cast<unsigned long long>(a.y));
}

} // namespace quadprime
