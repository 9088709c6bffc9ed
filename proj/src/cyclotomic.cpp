#include "brt/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace brt {

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Integer polynomial arithmetic, coefficients constant-term first.
using ZPoly = std::vector<Integer>;

ZPoly x_pow_minus_one(std::uint64_t n) {
    ZPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    return p;
}

// Exact division of integer polynomials (remainder must vanish).
ZPoly divide_exact(ZPoly num, const ZPoly& den) {
    ZPoly quot(num.size() - den.size() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
        Integer c = num[i + den.size() - 1] / den.back();
        quot[i] = c;
        if (c != 0)
            for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const Integer& c : num)
        if (c != 0) throw std::logic_error("inexact polynomial division");
    return quot;
}

ZPoly cyclotomic_poly_compute(std::uint64_t n);

std::mutex poly_cache_mutex;
std::map<std::uint64_t, std::unique_ptr<const ZPoly>>& poly_cache() {
    static std::map<std::uint64_t, std::unique_ptr<const ZPoly>> cache;
    return cache;
}

const ZPoly& cached_cyclotomic_poly(std::uint64_t n) {
    {
        std::lock_guard<std::mutex> lock(poly_cache_mutex);
        const auto it = poly_cache().find(n);
        if (it != poly_cache().end()) return *it->second;
    }
    // Compute outside the lock; the recursion re-enters for divisors.
    auto computed = std::make_unique<const ZPoly>(cyclotomic_poly_compute(n));
    std::lock_guard<std::mutex> lock(poly_cache_mutex);
    return *poly_cache().emplace(n, std::move(computed)).first->second;
}

// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
ZPoly cyclotomic_poly_compute(std::uint64_t n) {
    ZPoly result = x_pow_minus_one(n);
    for (std::uint64_t d = 1; d < n; ++d)
        if (n % d == 0) result = divide_exact(std::move(result), cached_cyclotomic_poly(d));
    return result;
}

// Reduce a rational polynomial modulo the (monic) conductor-e cyclotomic
// polynomial; result has exactly phi(e) coefficients.
std::vector<Rational> reduce_mod_cyclotomic(std::vector<Rational> poly, std::uint64_t e) {
    const ZPoly& phi = cached_cyclotomic_poly(e);
    const std::size_t deg = phi.size() - 1;  // = euler_phi(e)
    for (std::size_t i = poly.size(); i-- > deg;) {
        Rational c = poly[i];
        if (c == 0) continue;
        poly[i] = 0;
        for (std::size_t j = 0; j < deg; ++j) poly[i - deg + j] -= c * Rational(phi[j]);
    }
    poly.resize(deg);
    for (Rational& c : poly) c.canonicalize();
    return poly;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cyclotomic polynomial: n must be positive");
    return cached_cyclotomic_poly(n);
}

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(const Rational& value) : conductor_(1), coeffs_(1, value) {}

Cyclotomic::Cyclotomic(std::uint64_t conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::root_of_unity(std::uint64_t e, std::int64_t k) {
    if (e == 0) throw std::invalid_argument("root_of_unity: conductor must be positive");
    const std::uint64_t exp =
        static_cast<std::uint64_t>(((k % static_cast<std::int64_t>(e)) + static_cast<std::int64_t>(e))) % e;
    std::vector<Rational> poly(exp + 1, Rational(0));
    poly[exp] = 1;
    return Cyclotomic(e, reduce_mod_cyclotomic(std::move(poly), e));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::lifted(std::uint64_t m) const {
    if (m == conductor_) return *this;
    if (m % conductor_ != 0) throw std::invalid_argument("lift target is not a multiple");
    const std::uint64_t step = m / conductor_;
    std::vector<Rational> poly((coeffs_.size() - 1) * step + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
    return Cyclotomic(m, reduce_mod_cyclotomic(std::move(poly), m));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
    const std::uint64_t m = std::lcm(conductor_, rhs.conductor_);
    Cyclotomic a = lifted(m), b = rhs.lifted(m);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic a = *this;
    for (Rational& c : a.coeffs_) c = -c;
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const { return *this + (-rhs); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
    const std::uint64_t m = std::lcm(conductor_, rhs.conductor_);
    const Cyclotomic a = lifted(m), b = rhs.lifted(m);
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Cyclotomic(m, reduce_mod_cyclotomic(std::move(prod), m));
}

namespace {

using QPoly = std::vector<Rational>;

std::size_t poly_degree(const QPoly& p) {
    std::size_t d = p.size();
    while (d > 0 && p[d - 1] == 0) --d;
    return d;  // number of coefficients; 0 for the zero polynomial
}

// Extended Euclid over Q[x]: returns u with u*f == gcd (mod g), where the
// gcd of f and the conductor polynomial is a nonzero constant.
QPoly invert_mod(const QPoly& f, const ZPoly& modulus) {
    QPoly r0(modulus.begin(), modulus.end());
    QPoly r1 = f;
    QPoly u0{Rational(0)}, u1{Rational(1)};  // invariant: u_i * f == r_i (mod modulus)
    while (poly_degree(r1) > 1) {
        // divide r0 by r1
        QPoly q(std::max<std::size_t>(poly_degree(r0), 1), Rational(0));
        QPoly rem = r0;
        const std::size_t d1 = poly_degree(r1);
        while (poly_degree(rem) >= d1 && poly_degree(rem) > 0) {
            const std::size_t dr = poly_degree(rem);
            const Rational c = rem[dr - 1] / r1[d1 - 1];
            q[dr - d1] += c;
            for (std::size_t j = 0; j < d1; ++j) rem[dr - d1 + j] -= c * r1[j];
            rem[dr - 1] = 0;
        }
        // (r0, r1) <- (r1, rem); (u0, u1) <- (u1, u0 - q*u1)
        QPoly u2(std::max(u0.size(), q.size() + u1.size()), Rational(0));
        for (std::size_t i = 0; i < u0.size(); ++i) u2[i] = u0[i];
        for (std::size_t i = 0; i < q.size(); ++i)
            if (q[i] != 0)
                for (std::size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (poly_degree(r1) == 0) throw std::domain_error("division by zero cyclotomic");
    const Rational lead = r1[0];
    for (Rational& c : u1) c /= lead;
    return u1;
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero cyclotomic");
    QPoly u = invert_mod(coeffs_, cached_cyclotomic_poly(conductor_));
    return Cyclotomic(conductor_, reduce_mod_cyclotomic(std::move(u), conductor_));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& rhs) const { return *this * rhs.inverse(); }

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
    const std::int64_t e = static_cast<std::int64_t>(conductor_);
    const std::uint64_t kk = static_cast<std::uint64_t>(((k % e) + e) % e);
    if (std::gcd(kk, conductor_) != 1)
        throw std::invalid_argument("galois exponent not coprime to the conductor");
    std::vector<Rational> acc(conductor_, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) acc[(i * kk) % conductor_] += coeffs_[i];
    return Cyclotomic(conductor_, reduce_mod_cyclotomic(std::move(acc), conductor_));
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const { return compare(*this, rhs) == 0; }

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
    const std::uint64_t m = std::lcm(a.conductor_, b.conductor_);
    const Cyclotomic x = a.lifted(m), y = b.lifted(m);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        const int c = cmp(x.coeffs_[i], y.coeffs_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> result = 0;
    const double angle = 2.0 * std::numbers::pi / static_cast<double>(conductor_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const double c = coeffs_[i].get_d();
        result += c * std::polar(1.0, angle * static_cast<double>(i));
    }
    return result;
}

std::string Cyclotomic::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += brt::to_string(coeffs_[0]);
        } else {
            out += brt::to_string(coeffs_[i]) + "*z(" + std::to_string(conductor_) + ")^" +
                   std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

Cyclotomic Cyclotomic::parse(const std::string& text) {
    Cyclotomic result;
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size()) throw std::invalid_argument("empty cyclotomic literal");
    while (pos < text.size()) {
        // term: rational [*z(e)^i]
        std::size_t end = pos;
        while (end < text.size() && (std::isdigit(static_cast<unsigned char>(text[end])) ||
                                     text[end] == '-' || text[end] == '/'))
            ++end;
        const Rational coeff = rational_from_string(text.substr(pos, end - pos));
        pos = end;
        skip_ws();
        Cyclotomic term(coeff);
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            if (text.compare(pos, 2, "z(") != 0) throw std::invalid_argument("expected z(e)");
            pos += 2;
            std::uint64_t e = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                e = e * 10 + (text[pos++] - '0');
            if (pos >= text.size() || text[pos] != ')') throw std::invalid_argument("expected ')'");
            ++pos;
            std::int64_t k = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                k = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    k = k * 10 + (text[pos++] - '0');
            }
            term = term * root_of_unity(e, k);
        }
        result += term;
        skip_ws();
        if (pos < text.size()) {
            if (text[pos] != '+') throw std::invalid_argument("expected '+' between terms");
            ++pos;
            skip_ws();
        }
    }
    return result;
}

}  // namespace brt
