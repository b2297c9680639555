#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace wc {

inline bool poly_scalar_zero(const mpz_class& x) { return x == 0; }
inline bool poly_scalar_zero(const mpq_class& x) { return x == 0; }

/// Dense univariate polynomial, coefficients in ascending degree.
/// The zero polynomial has an empty coefficient vector and degree -1.
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
    static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }

    T coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : T(0);
    }
    const T& lead() const { return c_.back(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T{});
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T{});
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T{});
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const T& s) {
        std::vector<T> c(a.c_);
        for (auto& v : c) v *= s;
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a) { return a * T(-1); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly shifted(int k) const {  // multiply by x^k
        if (is_zero()) return Poly();
        std::vector<T> c(c_.size() + k, T{});
        std::copy(c_.begin(), c_.end(), c.begin() + k);
        return Poly(std::move(c));
    }

    template <class S>
    S eval(const S& x) const {
        S acc = S(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + S(*it);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * T(static_cast<int>(i));
        return Poly(std::move(c));
    }

    Poly reversed() const {  // reciprocal companion x^deg * p(1/x)
        std::vector<T> c(c_.rbegin(), c_.rend());
        return Poly(std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && poly_scalar_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPoly = Poly<mpz_class>;
using RatPoly = Poly<mpq_class>;

/// Quotient and remainder over a field (coefficient division required).
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    std::vector<T> rem(a.coeffs());
    const int db = b.degree();
    if (a.degree() < db) return {Poly<T>(), a};
    std::vector<T> quot(a.degree() - db + 1, T{});
    for (int k = a.degree() - db; k >= 0; --k) {
        T f = rem[k + db] / b.lead();
        quot[k] = f;
        for (int j = 0; j <= db; ++j) rem[k + j] -= f * b.coeff(j);
    }
    return {Poly<T>(std::move(quot)), Poly<T>(std::move(rem))};
}

/// Exact division in Z[x]; throws if b does not divide a.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

/// True iff b divides a in Z[x].
bool divides(const IntPoly& b, const IntPoly& a);

RatPoly to_rat(const IntPoly& p);
/// Converts to integer coefficients; throws if any coefficient is non-integral.
IntPoly to_int(const RatPoly& p);

/// Primitive part: coefficients divided by their gcd, sign-normalized so the
/// leading coefficient is positive.
IntPoly primitive_part(const IntPoly& p);

/// gcd over Q[x], returned monic (zero if both inputs are zero).
RatPoly poly_gcd(RatPoly a, RatPoly b);

/// The m-th cyclotomic polynomial, by the quotient recurrence
/// Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
IntPoly cyclotomic(int m);

/// Number of distinct real roots of p in the open interval (a, b) by a
/// Sturm sequence with exact rational arithmetic.
int sturm_count_interval(const IntPoly& p, const mpq_class& a, const mpq_class& b);

/// Number of distinct real roots in (a, +infinity).
int sturm_count_above(const IntPoly& p, const mpq_class& a);

/// All integer roots of a monic integer polynomial.
std::vector<mpz_class> integer_roots_monic(const IntPoly& p);

std::string to_string(const IntPoly& p, const std::string& var = "x");

}  // namespace wc
