#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "brt/rational.hpp"

namespace brt {

// An element of the cyclotomic field Q(zeta_e), stored as phi(e) rational
// coefficients in the power basis 1, zeta, ..., zeta^(phi(e)-1), reduced
// modulo the e-th cyclotomic polynomial. The conductor is kept as
// constructed; mixed-conductor arithmetic lifts to the lcm and never
// compresses back.
class Cyclotomic {
public:
    Cyclotomic();                         // zero at conductor 1
    Cyclotomic(const Rational& value);    // NOLINT: rationals embed implicitly
    Cyclotomic(long value) : Cyclotomic(Rational(value)) {}

    // zeta_e^k (k may be negative or exceed e).
    static Cyclotomic root_of_unity(std::uint64_t e, std::int64_t k);

    std::uint64_t conductor() const { return conductor_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // throws if not rational

    Cyclotomic operator+(const Cyclotomic& rhs) const;
    Cyclotomic operator-(const Cyclotomic& rhs) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& rhs) const;
    Cyclotomic operator/(const Cyclotomic& rhs) const;
    Cyclotomic& operator+=(const Cyclotomic& rhs) { return *this = *this + rhs; }
    Cyclotomic& operator-=(const Cyclotomic& rhs) { return *this = *this - rhs; }
    Cyclotomic& operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

    Cyclotomic inverse() const;  // throws on zero

    // The automorphism zeta_e -> zeta_e^k; requires gcd(k, e) = 1.
    Cyclotomic galois(std::int64_t k) const;
    Cyclotomic conjugate() const { return galois(-1); }

    // Same value expressed in Q(zeta_m); requires conductor | m.
    Cyclotomic lifted(std::uint64_t m) const;

    bool operator==(const Cyclotomic& rhs) const;

    // Deterministic total order: values lifted to the common conductor, then
    // coefficient vectors compared lexicographically. Returns <0, 0, >0.
    static int compare(const Cyclotomic& a, const Cyclotomic& b);

    // Numerical approximation at zeta_e = exp(2*pi*i/e); display only.
    std::complex<double> to_complex() const;

    // "a0 + a1*z(e)^1 + ..." with exact rationals; "0" for zero.
    std::string to_string() const;
    // Parses the same form.
    static Cyclotomic parse(const std::string& text);

private:
    Cyclotomic(std::uint64_t conductor, std::vector<Rational> coeffs);

    std::uint64_t conductor_;
    std::vector<Rational> coeffs_;
};

std::uint64_t euler_phi(std::uint64_t n);

// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(std::uint64_t n);

}  // namespace brt
