#include "wc/salem.hpp"

#include <algorithm>
#include <functional>

namespace wc {

namespace {

using PolyMat = Mat<IntPoly>;

IntPoly char_poly_bareiss(const Mat<mpz_class>& m) {
    const int n = m.rows();
    if (n == 0) return IntPoly::constant(1);
    PolyMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<mpz_class> c{-m(i, j)};
            if (i == j) c.push_back(1);
            a(i, j) = IntPoly(std::move(c));
        }
    IntPoly prev = IntPoly::constant(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k).is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a(i, k).is_zero()) { piv = i; break; }
            if (piv < 0) return IntPoly();  // det = 0: cannot happen for xI - M
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
        prev = a(k, k);
    }
    IntPoly det = a(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

}  // namespace

IntPoly char_poly(const Mat<mpz_class>& m) { return char_poly_bareiss(m); }

IntPoly char_poly(const WeylElement& w) { return char_poly_bareiss(w.matrix()); }

IntPoly char_poly_cofactor(const Mat<mpz_class>& m) {
    const int n = m.rows();
    PolyMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<mpz_class> c{-m(i, j)};
            if (i == j) c.push_back(1);
            a(i, j) = IntPoly(std::move(c));
        }
    // recursive first-row expansion
    std::function<IntPoly(std::vector<int>, std::vector<int>)> det =
        [&](std::vector<int> rows, std::vector<int> cols) -> IntPoly {
        if (rows.empty()) return IntPoly::constant(1);
        IntPoly acc;
        int row = rows.front();
        std::vector<int> subrows(rows.begin() + 1, rows.end());
        for (size_t ci = 0; ci < cols.size(); ++ci) {
            std::vector<int> subcols;
            for (size_t cj = 0; cj < cols.size(); ++cj)
                if (cj != ci) subcols.push_back(cols[cj]);
            IntPoly term = a(row, cols[ci]) * det(subrows, subcols);
            acc = (ci % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    return det(idx, idx);
}

CyclotomicSplit strip_cyclotomic(const IntPoly& poly) {
    CyclotomicSplit out;
    out.remainder = poly;
    const int d0 = poly.degree();
    // phi(m) >= sqrt(m/2), so phi(m) <= d0 forces m <= 2 d0^2.
    for (int m = 1; m <= 2 * d0 * d0 + 1; ++m) {
        IntPoly phi = cyclotomic(m);
        if (phi.degree() > out.remainder.degree()) continue;
        int mult = 0;
        while (out.remainder.degree() >= phi.degree() && divides(phi, out.remainder)) {
            out.remainder = exact_div(out.remainder, phi);
            ++mult;
        }
        if (mult > 0) out.factors.push_back({m, mult});
        if (out.remainder.degree() == 0) break;
    }
    return out;
}

SalemCheck is_salem(const IntPoly& poly) {
    if (poly.degree() < 4) throw std::domain_error("is_salem: degree must be >= 4");
    if (poly.lead() != 1) return {false, "not monic"};
    if (!(poly.reversed() == poly)) return {false, "not reciprocal"};
    RatPoly g = poly_gcd(to_rat(poly), to_rat(poly.derivative()));
    if (g.degree() > 0) return {false, "not squarefree"};
    if (!integer_roots_monic(poly).empty()) return {false, "has a rational root"};
    mpz_class bound = 1;
    for (const auto& c : poly.coeffs()) bound = std::max(bound, mpz_class(abs(c)));
    mpq_class cauchy = mpq_class(bound) + 1;
    if (sturm_count_interval(poly, 1, cauchy) != 1)
        return {false, "number of real roots in (1,inf) is not 1"};
    if (sturm_count_interval(poly, 0, 1) != 1)
        return {false, "number of real roots in (0,1) is not 1"};
    return {true, ""};
}

SalemField::SalemField(IntPoly salem_poly) : poly_(std::move(salem_poly)) {
    if (poly_.degree() < 2 || poly_.lead() != 1)
        throw std::invalid_argument("SalemField: need a monic polynomial of degree >= 2");
    if (!(poly_.reversed() == poly_))
        throw std::invalid_argument("SalemField: polynomial is not reciprocal");
    ratpoly_ = to_rat(poly_);
    mpz_class bound = 1;
    for (const auto& c : poly_.coeffs()) bound = std::max(bound, mpz_class(abs(c)));
    mpq_class hi = mpq_class(bound) + 1;
    if (sturm_count_interval(poly_, 1, hi) != 1)
        throw std::invalid_argument("SalemField: not exactly one real root > 1");
    int slo = sgn(ratpoly_.eval(mpq_class(1)));
    int shi = sgn(ratpoly_.eval(hi));
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::invalid_argument("SalemField: endpoints do not bracket a sign change");
    lo_ = 1;
    hi_ = hi;
    sign_at_lo_ = slo;
}

RationalInterval SalemField::lambda_interval() const {
    std::lock_guard<std::mutex> lock(mu_);
    return {lo_, hi_};
}

RationalInterval SalemField::refine_to(const mpq_class& width) const {
    if (width <= 0) throw std::invalid_argument("refine_to: width must be positive");
    std::lock_guard<std::mutex> lock(mu_);
    while (hi_ - lo_ > width) {
        mpq_class mid = (lo_ + hi_) / 2;
        int s = sgn(ratpoly_.eval(mid));
        if (s == 0) {  // cannot happen for an irreducible Salem polynomial
            lo_ = mid;
            hi_ = mid;
            break;
        }
        if (s == sign_at_lo_)
            lo_ = mid;
        else
            hi_ = mid;
    }
    return {lo_, hi_};
}

FieldPtr make_salem_field(IntPoly salem_poly) {
    return std::make_shared<SalemField>(std::move(salem_poly));
}

RationalInterval spectral_radius(const SalemField& field, const mpq_class& width) {
    return field.refine_to(width);
}

FieldElement::FieldElement(FieldPtr field, std::vector<mpq_class> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    reduce();
}

FieldElement FieldElement::generator(FieldPtr field) {
    return FieldElement(std::move(field), {0, 1});
}

mpq_class FieldElement::rational_value() const {
    if (c_.empty()) return 0;
    if (c_.size() == 1) return c_[0];
    throw std::domain_error("FieldElement: not a rational constant");
}

FieldPtr FieldElement::unify(const FieldPtr& a, const FieldPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (a != b && !(a->poly() == b->poly()))
        throw std::invalid_argument("FieldElement: mixing different Salem fields");
    return a;
}

void FieldElement::reduce() {
    if (field_ && static_cast<int>(c_.size()) > field_->degree()) {
        const auto& p = field_->poly();  // monic
        const int d = field_->degree();
        for (int k = static_cast<int>(c_.size()) - 1; k >= d; --k) {
            mpq_class f = c_[k];
            if (f == 0) continue;
            c_[k] = 0;
            for (int j = 0; j < d; ++j) c_[k - d + j] -= f * mpq_class(p.coeff(j));
        }
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FieldElement FieldElement::operator-() const {
    FieldElement out(*this);
    for (auto& v : out.c_) v = -v;
    return out;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    FieldElement out;
    out.field_ = FieldElement::unify(a.field_, b.field_);
    out.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) out.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) out.c_[i] += b.c_[i];
    out.reduce();
    return out;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    FieldElement out;
    out.field_ = FieldElement::unify(a.field_, b.field_);
    if (a.c_.empty() || b.c_.empty()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    out.reduce();
    return out;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("FieldElement: inversion of zero");
    if (is_rational()) {
        FieldElement out(*this);
        out.c_[0] = 1 / out.c_[0];
        return out;
    }
    // extended Euclid: s * this + t * salem_poly = gcd = constant
    RatPoly a{std::vector<mpq_class>(c_)};
    RatPoly b = to_rat(field_->poly());
    RatPoly s0(std::vector<mpq_class>{1}), s1;
    RatPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0)
        throw std::logic_error("FieldElement: residue not invertible (reducible modulus?)");
    mpq_class inv = 1 / r0.lead();
    return FieldElement(field_, (s0 * inv).coeffs());
}

FieldElement FieldElement::pow(long k) const {
    FieldElement base = k < 0 ? inverse() : *this;
    unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : k;
    FieldElement acc(1);
    acc = FieldElement(field_, acc.coeffs());
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

namespace {

RationalInterval interval_mul(const RationalInterval& a, const RationalInterval& b) {
    mpq_class p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

RationalInterval interval_eval(const std::vector<mpq_class>& coeffs,
                               const RationalInterval& x) {
    RationalInterval acc{0, 0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = interval_mul(acc, x);
        acc.lo += *it;
        acc.hi += *it;
    }
    return acc;
}

}  // namespace

RationalInterval real_embed(const FieldElement& elem, const mpq_class& width) {
    if (width <= 0) throw std::invalid_argument("real_embed: width must be positive");
    if (elem.is_rational()) {
        mpq_class v = elem.rational_value();
        return {v, v};
    }
    mpq_class lam_width = elem.field()->lambda_interval().width();
    for (;;) {
        RationalInterval lam = elem.field()->refine_to(lam_width);
        RationalInterval out = interval_eval(elem.coeffs(), lam);
        if (out.width() <= width) return out;
        lam_width /= 16;
    }
}

int field_sign(const FieldElement& elem) {
    if (elem.is_zero()) return 0;
    if (elem.is_rational()) return sgn(elem.rational_value());
    mpq_class width(1, 4);
    for (;;) {
        RationalInterval iv = real_embed(elem, width);
        if (iv.lo > 0) return 1;
        if (iv.hi < 0) return -1;
        width /= 256;
    }
}

Vec<FieldElement> leading_eigenvector(const WeylElement& w, const FieldPtr& field) {
    if (!divides(field->poly(), char_poly(w)))
        throw std::invalid_argument(
            "leading_eigenvector: salem_poly does not divide char_poly(w)");
    const int d = w.context()->dim;
    FieldElement lambda = FieldElement::generator(field);
    Mat<FieldElement> a(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            a(i, j) = FieldElement(mpq_class(w.matrix()(i, j)));
            if (i == j) a(i, j) -= lambda;
        }
    auto basis = kernel_basis(a);
    if (basis.size() != 1)
        throw std::logic_error("leading_eigenvector: kernel dimension is not 1");
    Vec<FieldElement> v = basis.front();
    FieldElement pivot;
    for (const auto& x : v)
        if (!x.is_zero()) { pivot = x; break; }
    FieldElement inv = pivot.inverse();
    for (auto& x : v) x = x * inv;
    // attach the field to every coordinate (zeros included) for uniformity
    for (auto& x : v) x = FieldElement(field, std::vector<mpq_class>(x.coeffs()));
    return v;
}

}  // namespace wc
