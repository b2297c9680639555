#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wc/lattice.hpp"
#include "wc/polynomial.hpp"

namespace wc {

struct RationalInterval {
    mpq_class lo, hi;
    mpq_class width() const { return hi - lo; }
    bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
};

/// det(xI - M), monic of degree dim, by fraction-free Bareiss elimination
/// with entries in Z[x].
IntPoly char_poly(const WeylElement& w);
IntPoly char_poly(const Mat<mpz_class>& m);

/// Test oracle: cofactor expansion, exponential in the size.
IntPoly char_poly_cofactor(const Mat<mpz_class>& m);

struct CyclotomicFactor {
    int index;         // m of Phi_m
    int multiplicity;
};

struct CyclotomicSplit {
    std::vector<CyclotomicFactor> factors;
    IntPoly remainder;  // no cyclotomic factor of degree <= deg(input)
};

/// Trial division by Phi_m in ascending m.
CyclotomicSplit strip_cyclotomic(const IntPoly& poly);

struct SalemCheck {
    bool ok;
    std::string reason;  // names the first failed condition when !ok
};

/// Reciprocal, squarefree, exactly one real root in (1,inf) and one in (0,1),
/// no rational roots.  Monic input of degree >= 4 required.
SalemCheck is_salem(const IntPoly& poly);

/// Q(lambda) presented as Q[x] / (salem_poly), with a refinable isolating
/// interval for the unique real root lambda > 1.  Interval refinement is
/// internally synchronized; everything else is immutable.
class SalemField : public std::enable_shared_from_this<SalemField> {
public:
    explicit SalemField(IntPoly salem_poly);

    const IntPoly& poly() const { return poly_; }
    int degree() const { return poly_.degree(); }

    RationalInterval lambda_interval() const;
    /// Narrows the isolating interval to width <= `width` and returns it.
    RationalInterval refine_to(const mpq_class& width) const;

private:
    IntPoly poly_;
    RatPoly ratpoly_;
    int sign_at_lo_;
    mutable std::mutex mu_;
    mutable mpq_class lo_, hi_;
};

using FieldPtr = std::shared_ptr<const SalemField>;

FieldPtr make_salem_field(IntPoly salem_poly);

/// spectral_radius: the lambda interval refined to the requested width.
RationalInterval spectral_radius(const SalemField& field, const mpq_class& width);

/// A residue modulo salem_poly with rational coefficients.  An element with a
/// null field pointer is a plain rational constant; field pointers propagate
/// through arithmetic so constants like FieldElement(1) mix freely.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(int v) : c_(v == 0 ? std::vector<mpq_class>{} : std::vector<mpq_class>{mpq_class(v)}) {}
    FieldElement(const mpq_class& v)
        : c_(v == 0 ? std::vector<mpq_class>{} : std::vector<mpq_class>{v}) {}
    FieldElement(FieldPtr field, std::vector<mpq_class> coeffs);

    static FieldElement generator(FieldPtr field);  // the class of x, i.e. lambda

    const FieldPtr& field() const { return field_; }
    /// Canonical coefficients, ascending degree, trailing zeros removed.
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class coeff(int k) const {
        return k < static_cast<int>(c_.size()) ? c_[k] : mpq_class(0);
    }

    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return c_.size() <= 1; }
    mpq_class rational_value() const;  // throws if not rational

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    FieldElement inverse() const;  // extended Euclid mod salem_poly
    FieldElement pow(long k) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) {
        return !(a == b);
    }

private:
    static FieldPtr unify(const FieldPtr& a, const FieldPtr& b);
    void reduce();

    FieldPtr field_;
    std::vector<mpq_class> c_;
};

inline bool scalar_is_zero(const FieldElement& x) { return x.is_zero(); }

/// Encloses the real value of `elem` at lambda in an interval of width <=
/// `width`, refining the lambda interval as needed (exact interval Horner).
RationalInterval real_embed(const FieldElement& elem, const mpq_class& width);

/// -1, 0, +1; exact (zero is decided by canonical form, not numerically).
int field_sign(const FieldElement& elem);

/// Nonzero kernel vector of (M - lambda I) over Q(lambda), first nonzero
/// coordinate normalized to 1.  Requires salem_poly | char_poly(w); a kernel
/// of dimension != 1 is reported as a structural error.
Vec<FieldElement> leading_eigenvector(const WeylElement& w, const FieldPtr& field);

}  // namespace wc
