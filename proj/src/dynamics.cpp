#include "wc/dynamics.hpp"

#include <random>

namespace wc {

namespace {

/// Rational content (gcd of numerators over lcm of denominators) of all
/// coefficients of all field-element entries of a polynomial; 0 for zero.
mpq_class poly_content(const FPoly& p) {
    mpz_class num(0), den(1);
    for (const auto& fe : p.coeffs())
        for (const auto& q : fe.coeffs()) {
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num().get_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
        }
    if (num == 0) return 0;
    return mpq_class(num) / mpq_class(den);
}

FPoly scale_poly(const FPoly& p, const mpq_class& s) {
    return p * FieldElement(s);
}

/// Common rational content of a family of polynomials (gcd of numerators
/// over lcm of denominators); 0 when the family is identically zero.
mpq_class tuple_content(const std::vector<FPoly>& v) {
    mpq_class content(0);
    for (const auto& c : v) {
        mpq_class cc = poly_content(c);
        if (cc == 0) continue;
        if (content == 0) {
            content = cc;
            continue;
        }
        mpz_class n, d;
        mpz_gcd(n.get_mpz_t(), content.get_num().get_mpz_t(),
                cc.get_num().get_mpz_t());
        mpz_lcm(d.get_mpz_t(), content.get_den().get_mpz_t(),
                cc.get_den().get_mpz_t());
        content = mpq_class(n) / mpq_class(d);
    }
    return content;
}

/// p divided by its rational content: integral coefficients with unit content.
FPoly primitive(const FPoly& p) {
    mpq_class c = poly_content(p);
    if (c == 0 || c == 1) return p;
    return scale_poly(p, 1 / c);
}

/// divmod with a single leading-coefficient inversion (divmod itself would
/// invert once per quotient coefficient, which dominates the running time).
std::pair<FPoly, FPoly> divmod_once(const FPoly& a, const FPoly& b) {
    FieldElement binv = b.lead().inverse();
    auto [qm, rem] = divmod(a, b * binv);
    return {qm * binv, std::move(rem)};
}

/// Monicize (killing any algebraic unit factor), then strip the rational
/// content so the lambda-coordinates are integral and primitive.
FPoly normalized(const FPoly& p) {
    if (p.is_zero()) return p;
    return primitive(p * p.lead().inverse());
}

/// Euclidean gcd renormalized after every single elimination step.  The gcd
/// is invariant under scaling any intermediate, and renormalizing only
/// between full divisions still lets coefficients swell exponentially inside
/// one long division over Q(lambda).  Exact but slow: used as the fallback
/// behind the modular gcd below.
FPoly euclid_gcd(FPoly a, FPoly b) {
    a = normalized(a);
    b = normalized(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        while (!a.is_zero() && a.degree() >= b.degree()) {
            int d = a.degree() - b.degree();
            a = normalized(a * b.lead() - (b * a.lead()).shifted(d));
        }
        std::swap(a, b);
    }
    return a;
}

// ---------------------------------------------------------------------------
// Modular arithmetic over F_p[x]/(S mod p) for 60-bit primes p.
//
// Images computed here are reassembled by CRT and rational reconstruction
// and then certified over Q(lambda) itself, so a bad prime can only cost
// time, never correctness.  Any prime where a leading coefficient fails to
// be invertible is skipped.
// ---------------------------------------------------------------------------

using u64 = unsigned long long;

u64 mulmod(u64 a, u64 b, u64 p) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    for (; e; e >>= 1, a = mulmod(a, a, p))
        if (e & 1) r = mulmod(r, a, p);
    return r;
}

/// F_p[x]/(S mod p): elements are coordinate vectors of length deg S.
struct ModRing {
    u64 p = 0;
    std::vector<u64> S;     // monic, ascending, size d + 1
    std::vector<u64> Sneg;  // -S[j] mod p for j < d
    int d = 0;
};

using MElt = std::vector<u64>;

MElt m_zero(const ModRing& R) { return MElt(R.d, 0); }

bool m_is_zero(const MElt& a) {
    for (u64 x : a)
        if (x) return false;
    return true;
}

MElt m_add(const ModRing& R, const MElt& a, const MElt& b) {
    MElt c(R.d);
    for (int i = 0; i < R.d; ++i) {
        u64 s = a[i] + b[i];
        c[i] = s >= R.p ? s - R.p : s;
    }
    return c;
}

MElt m_sub(const ModRing& R, const MElt& a, const MElt& b) {
    MElt c(R.d);
    for (int i = 0; i < R.d; ++i) c[i] = (a[i] + R.p - b[i]) % R.p;
    return c;
}

MElt m_mul(const ModRing& R, const MElt& a, const MElt& b) {
    const int d = R.d;
    const u64 p = R.p;
    // accumulate in 128 bits: terms are < 2^122, so up to 63 may be summed
    // before a reduction is forced (d never approaches that here)
    static thread_local std::vector<unsigned __int128> t;
    t.assign(2 * d - 1, 0);
    for (int i = 0; i < d; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < d; ++j)
            if (b[j]) t[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
        if ((i & 31) == 31)
            for (auto& x : t) x %= p;
    }
    std::vector<u64> c(2 * d - 1);
    for (int i = 0; i < 2 * d - 1; ++i) c[i] = static_cast<u64>(t[i] % p);
    for (int i = 2 * d - 2; i >= d; --i) {
        u64 q = c[i];
        if (!q) continue;
        for (int j = 0; j < d; ++j)
            if (R.Sneg[j]) c[i - d + j] = (c[i - d + j] + mulmod(q, R.Sneg[j], p)) % p;
    }
    c.resize(d);
    return c;
}

/// Inverse by extended Euclid of the coordinate polynomial against S over
/// F_p; empty when the element is a zero divisor (S reducible mod p).
std::optional<MElt> m_inv(const ModRing& R, const MElt& a) {
    std::vector<u64> r0(R.S), r1(a), t0(1, 0), t1{1};
    auto deg = [](const std::vector<u64>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
            if (v[i]) return i;
        return -1;
    };
    while (deg(r1) >= 0) {
        int d0 = deg(r0), d1 = deg(r1);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(t0, t1);
            continue;
        }
        u64 q = mulmod(r0[d0], powmod(r1[d1], R.p - 2, R.p), R.p);
        int sh = d0 - d1;
        if (static_cast<int>(r0.size()) < d1 + sh + 1) r0.resize(d1 + sh + 1, 0);
        for (int j = 0; j <= d1; ++j)
            r0[j + sh] = (r0[j + sh] + R.p - mulmod(q, r1[j], R.p)) % R.p;
        if (static_cast<int>(t0.size()) < static_cast<int>(t1.size()) + sh)
            t0.resize(t1.size() + sh, 0);
        for (size_t j = 0; j < t1.size(); ++j)
            t0[j + sh] = (t0[j + sh] + R.p - mulmod(q, t1[j], R.p)) % R.p;
    }
    int dg = deg(r0);
    if (dg != 0) return std::nullopt;  // nontrivial common factor with S
    u64 c = powmod(r0[0], R.p - 2, R.p);
    MElt out(R.d, 0);
    for (size_t j = 0; j < t0.size() && j < out.size(); ++j)
        out[j] = mulmod(t0[j], c, R.p);
    return out;
}

using MPoly = std::vector<MElt>;  // ascending in t

int mp_degree(const MPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (!m_is_zero(f[i])) return i;
    return -1;
}

MPoly mp_mul(const ModRing& R, const MPoly& a, const MPoly& b) {
    int da = mp_degree(a), db = mp_degree(b);
    if (da < 0 || db < 0) return {};
    MPoly c(da + db + 1, m_zero(R));
    for (int i = 0; i <= da; ++i) {
        if (m_is_zero(a[i])) continue;
        for (int j = 0; j <= db; ++j) {
            if (m_is_zero(b[j])) continue;
            c[i + j] = m_add(R, c[i + j], m_mul(R, a[i], b[j]));
        }
    }
    return c;
}

/// Monic gcd of the images; empty when a leading coefficient is not
/// invertible (discard the prime in that case).
std::optional<MPoly> mp_gcd(const ModRing& R, MPoly a, MPoly b) {
    int da = mp_degree(a), db = mp_degree(b);
    if (da < db) {
        std::swap(a, b);
        std::swap(da, db);
    }
    while (db >= 0) {
        auto linv = m_inv(R, b[db]);
        if (!linv) return std::nullopt;
        for (int i = 0; i <= db; ++i) b[i] = m_mul(R, b[i], *linv);
        while (da >= db) {
            MElt lead = a[da];
            if (!m_is_zero(lead)) {
                for (int j = 0; j <= db; ++j)
                    a[da - db + j] = m_sub(R, a[da - db + j], m_mul(R, lead, b[j]));
            }
            --da;
            while (da >= 0 && m_is_zero(a[da])) --da;
        }
        a.resize(std::max(da + 1, 0));
        std::swap(a, b);
        std::swap(da, db);
    }
    a.resize(da + 1);
    if (da >= 0) {
        auto linv = m_inv(R, a[da]);
        if (!linv) return std::nullopt;
        for (auto& c : a) c = m_mul(R, c, *linv);
    }
    return a;
}

/// Quotient image of a by b mod p with the remainder-is-zero flag; empty
/// when the leading coefficient of b is not invertible.
std::optional<std::pair<MPoly, bool>> mp_div(const ModRing& R, MPoly a, const MPoly& b) {
    int da = mp_degree(a), db = mp_degree(b);
    if (db < 0) return std::nullopt;
    auto linv = m_inv(R, b[db]);
    if (!linv) return std::nullopt;
    MPoly bm(b.begin(), b.begin() + db + 1);
    for (auto& c : bm) c = m_mul(R, c, *linv);
    MPoly q(std::max(da - db + 1, 1), m_zero(R));
    for (int i = da; i >= db; --i) {
        MElt lead = a[i];
        if (m_is_zero(lead)) continue;
        for (int j = 0; j < db; ++j)
            a[i - db + j] = m_sub(R, a[i - db + j], m_mul(R, lead, bm[j]));
        q[i - db] = m_mul(R, lead, *linv);
        a[i] = m_zero(R);
    }
    bool zero = true;
    for (int i = 0; i < db && zero; ++i)
        if (!m_is_zero(a[i])) zero = false;
    return std::make_pair(std::move(q), zero);
}

/// Remainder of a modulo b; empty when the leading coefficient of b is not
/// invertible.
std::optional<MPoly> mp_rem(const ModRing& R, MPoly a, const MPoly& b) {
    int da = mp_degree(a), db = mp_degree(b);
    if (db < 0) return std::nullopt;
    auto linv = m_inv(R, b[db]);
    if (!linv) return std::nullopt;
    MPoly bm(b.begin(), b.begin() + db + 1);
    for (auto& c : bm) c = m_mul(R, c, *linv);
    for (int i = da; i >= db; --i) {
        MElt lead = a[i];
        if (m_is_zero(lead)) continue;
        for (int j = 0; j < db; ++j)
            a[i - db + j] = m_sub(R, a[i - db + j], m_mul(R, lead, bm[j]));
        a[i] = m_zero(R);
    }
    a.resize(std::max(db, 0));
    return a;
}

/// Resultant image of f and g via the Euclidean remainder sequence; empty
/// when an inversion fails.  A nonzero value proves (by the Sylvester
/// determinant, whose reduction mod p commutes with taking resultants as
/// long as the input degrees are preserved) that f and g are coprime over
/// Q(lambda).
std::optional<MElt> mp_resultant(const ModRing& R, MPoly f, MPoly g) {
    int df = mp_degree(f), dg = mp_degree(g);
    if (df < 0 || dg < 0) return m_zero(R);
    MElt res = m_zero(R);
    res[0] = 1;
    if (df < dg) {
        std::swap(f, g);
        std::swap(df, dg);
    }
    while (dg > 0) {
        auto r = mp_rem(R, f, g);
        if (!r) return std::nullopt;
        int dr = mp_degree(*r);
        const MElt lc = g[dg];
        for (int e = 0; e < df - dr; ++e) res = m_mul(R, res, lc);
        f = std::move(g);
        df = dg;
        g = std::move(*r);
        dg = dr;
    }
    if (dg < 0) return m_zero(R);  // common factor mod p
    for (int e = 0; e < df; ++e) res = m_mul(R, res, g[0]);
    return res;  // sign irrelevant for the nonzero test
}

u64 mpz_mod_u64(const mpz_class& z, u64 p) {
    return mpz_fdiv_ui(z.get_mpz_t(), p);
}

/// Image of a rational number mod p; empty when p divides the denominator.
std::optional<u64> mpq_mod_u64(const mpq_class& q, u64 p) {
    u64 den = mpz_mod_u64(q.get_den(), p);
    if (den == 0) return std::nullopt;
    return mulmod(mpz_mod_u64(q.get_num(), p), powmod(den, p - 2, p), p);
}

std::optional<ModRing> make_ring(const SalemField& field, u64 p) {
    ModRing R;
    R.p = p;
    R.d = field.degree();
    R.S.resize(R.d + 1);
    R.Sneg.resize(R.d);
    for (int i = 0; i <= R.d; ++i) R.S[i] = mpz_mod_u64(field.poly().coeff(i), p);
    if (R.S[R.d] != 1) return std::nullopt;
    for (int i = 0; i < R.d; ++i) R.Sneg[i] = R.S[i] ? p - R.S[i] : 0;
    return R;
}

/// Image of a field element; empty when a denominator vanishes mod p.
std::optional<MElt> reduce_elt(const ModRing& R, const FieldElement& e) {
    MElt out = m_zero(R);
    const auto& cs = e.coeffs();
    for (size_t j = 0; j < cs.size(); ++j) {
        auto v = mpq_mod_u64(cs[j], R.p);
        if (!v) return std::nullopt;
        out[j % R.d] = *v;
    }
    return out;
}

/// Image of f; empty if a denominator vanishes or the degree drops (the
/// leading coefficient must stay nonzero for the degree bound argument).
std::optional<MPoly> reduce_poly(const ModRing& R, const FPoly& f) {
    MPoly out(f.degree() + 1, m_zero(R));
    for (int i = 0; i <= f.degree(); ++i) {
        auto v = reduce_elt(R, f.coeffs()[i]);
        if (!v) return std::nullopt;
        out[i] = std::move(*v);
    }
    if (mp_degree(out) != f.degree()) return std::nullopt;
    return out;
}

std::vector<u64>& prime_pool() {
    static std::vector<u64> primes;
    if (primes.empty()) {
        mpz_class p = mpz_class(1) << 60;
        for (int i = 0; i < 192; ++i) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            primes.push_back(p.get_ui());
        }
    }
    return primes;
}

/// Rational reconstruction of r mod M with numerator and denominator below
/// sqrt(M/2); empty when no such fraction exists (add more primes).
std::optional<mpq_class> rat_recon(const mpz_class& r, const mpz_class& M) {
    mpz_class bound;
    mpz_class half = M / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = M, r1 = r % M, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += M;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    if (t1 < 0) {
        t1 = -t1;
        r1 = -r1;
    }
    if (t1 > bound) return std::nullopt;
    mpq_class out = mpq_class(r1) / mpq_class(t1);
    out.canonicalize();
    mpz_class check = out.get_num() - out.get_den() * r;
    if (check % M != 0) return std::nullopt;
    return out;
}

FieldPtr poly_field(const FPoly& f) {
    for (const auto& c : f.coeffs())
        if (c.field()) return c.field();
    return nullptr;
}

FPoly exact_div_f(const FPoly& a, const FPoly& b);

/// Incremental CRT accumulator for the lambda-coordinates of a polynomial
/// of fixed degree.
struct CrtAccum {
    int deg = -1, d = 0, count = 0;
    mpz_class M;
    std::vector<std::vector<mpz_class>> c;  // [t-degree][lambda-coordinate]

    void reset(int deg_, int d_) {
        deg = deg_;
        d = d_;
        count = 0;
        M = 1;
        c.assign(deg + 1, std::vector<mpz_class>(d, 0));
    }
    bool add(u64 p, const MPoly& img) {
        mpz_class pz(static_cast<unsigned long>(p));
        mpz_class Minv;
        if (count > 0 &&
            mpz_invert(Minv.get_mpz_t(), M.get_mpz_t(), pz.get_mpz_t()) == 0)
            return false;
        for (int i = 0; i <= deg; ++i)
            for (int j = 0; j < d; ++j) {
                mpz_class rj = i < static_cast<int>(img.size())
                                   ? mpz_class(static_cast<unsigned long>(img[i][j]))
                                   : mpz_class(0);
                if (count == 0) {
                    c[i][j] = rj;
                } else {
                    mpz_class delta = ((rj - c[i][j]) * Minv) % pz;
                    if (delta < 0) delta += pz;
                    c[i][j] += M * delta;
                }
            }
        M *= pz;
        ++count;
        return true;
    }
    /// Attempt reconstruction only at powers of two, so n primes cost
    /// O(n) CRT updates rather than O(n^2).
    bool worth_trying() const { return count >= 2 && (count & (count - 1)) == 0; }
};

/// Rational reconstruction of every coordinate; empty when the modulus is
/// still too small (add more primes).
std::optional<FPoly> reconstruct_poly(const CrtAccum& acc, const FieldPtr& field) {
    std::vector<FieldElement> out;
    for (int i = 0; i <= acc.deg; ++i) {
        std::vector<mpq_class> coords(acc.d);
        for (int j = 0; j < acc.d; ++j) {
            auto v = rat_recon(acc.c[i][j], acc.M);
            if (!v) return std::nullopt;
            coords[j] = *v;
        }
        out.emplace_back(field, std::move(coords));
    }
    return FPoly(std::move(out));
}

/// a / b presented as scale * q_int with q_int integral and primitive.
struct DivScaled {
    FPoly q_int;
    mpq_class scale;
};

/// Exact division via modular images, certified by the (cheap, integral)
/// multiplication q_int * b == (1/scale') * a; empty when b does not divide
/// a or when certification keeps failing (callers fall back to the direct
/// division).
std::optional<DivScaled> modular_div(const FPoly& a, const FPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return DivScaled{FPoly(), mpq_class(1)};
    if (a.degree() < b.degree()) return std::nullopt;
    mpq_class ca = poly_content(a), cb = poly_content(b);
    FPoly ap = scale_poly(a, 1 / ca), bp = scale_poly(b, 1 / cb);
    FieldPtr field = poly_field(ap);
    if (!field) field = poly_field(bp);
    if (!field) return std::nullopt;
    const int dq = ap.degree() - bp.degree();
    CrtAccum acc;
    acc.reset(dq, field->degree());
    // The exact quotient is a (potentially enormous) rational scalar times a
    // small primitive polynomial.  Normalizing every image against a fixed
    // reference coordinate cancels that scalar residue-by-residue, so only
    // the small ratios ever need to be reconstructed.
    int j0 = -1;
    for (u64 p : prime_pool()) {
        auto R = make_ring(*field, p);
        if (!R) continue;
        auto ia = reduce_poly(*R, ap), ib = reduce_poly(*R, bp);
        if (!ia || !ib) continue;
        auto qr = mp_div(*R, std::move(*ia), *ib);
        if (!qr) continue;
        if (!qr->second) return std::nullopt;  // nonzero remainder image
        MPoly& qi = qr->first;
        if (mp_degree(qi) != dq) continue;
        if (j0 < 0)
            for (int j = R->d - 1; j >= 0 && j0 < 0; --j)
                if (qi[dq][j]) j0 = j;
        if (j0 < 0 || !qi[dq][j0]) continue;  // reference vanishes: skip prime
        u64 rinv = powmod(qi[dq][j0], p - 2, p);
        for (auto& ce : qi)
            for (auto& x : ce) x = mulmod(x, rinv, p);
        if (!acc.add(p, qi)) continue;
        if (!acc.worth_trying()) continue;
        auto q = reconstruct_poly(acc, field);
        if (!q) continue;
        mpq_class c = poly_content(*q);
        if (c == 0) continue;
        FPoly q_int = scale_poly(*q, 1 / c);
        FPoly prod = q_int * bp;
        if (prod.degree() != ap.degree()) continue;
        // the exact scalar relating ap and q_int * bp, from one coordinate
        const auto& pl = prod.lead().coeffs();
        const auto& al = ap.lead().coeffs();
        if (pl.size() != al.size() || pl.empty()) continue;
        mpq_class cp = al.back() / pl.back();
        if (scale_poly(prod, cp) == ap) {
            mpq_class scale = cp;
            scale *= ca;
            scale /= cb;
            return DivScaled{std::move(q_int), std::move(scale)};
        }
    }
    return std::nullopt;
}

struct GcdResult {
    FPoly g;        // integral, primitive (or monic rational constant 1)
    FPoly ca, cb;   // cofactors: a = g * ca, b = g * cb up to a scalar
};

/// gcd over Q(lambda)[t]: modular images, CRT + rational reconstruction,
/// exact division certificates; falls back to exact Euclid if the primes
/// run out.  The certified cofactors come along for free.
GcdResult gcd_with_cofactors(FPoly a, FPoly b) {
    FPoly one = FPoly::constant(FieldElement(1));
    if (a.is_zero()) {
        FPoly g = normalized(b);
        return {g, FPoly(), b.is_zero() ? FPoly() : one};
    }
    if (b.is_zero()) return {normalized(a), one, FPoly()};
    a = primitive(a);
    b = primitive(b);
    FieldPtr field = poly_field(a);
    if (!field) field = poly_field(b);
    if (!field || std::min(a.degree(), b.degree()) == 0) {
        if (std::min(a.degree(), b.degree()) == 0) return {one, a, b};
        FPoly g = euclid_gcd(a, b);
        if (g.degree() == 0) return {one, std::move(a), std::move(b)};
        return {g, exact_div_f(a, g), exact_div_f(b, g)};
    }

    CrtAccum acc;
    int dmin = std::min(a.degree(), b.degree()) + 1;
    int coprime_images = 0;
    for (u64 p : prime_pool()) {
        auto R = make_ring(*field, p);
        if (!R) continue;
        auto ia = reduce_poly(*R, a), ib = reduce_poly(*R, b);
        if (!ia || !ib) continue;
        auto g = mp_gcd(*R, std::move(*ia), std::move(*ib));
        if (!g) continue;
        int dg = mp_degree(*g);
        if (dg < dmin) {
            dmin = dg;
            coprime_images = 0;
            acc.reset(dmin, field->degree());
        }
        if (dg > dmin) continue;  // unlucky prime
        if (dmin == 0) {
            if (++coprime_images >= 2) return {one, std::move(a), std::move(b)};
            continue;
        }
        if (!acc.add(p, *g)) continue;
        if (!acc.worth_trying()) continue;
        auto grec = reconstruct_poly(acc, field);
        if (grec) {
            FPoly g_cand = primitive(*grec);
            // certification: exact divisions, then coprime cofactors
            auto qa = modular_div(a, g_cand);
            if (qa) {
                auto qb = modular_div(b, g_cand);
                if (qb) {
                    FPoly cq = gcd_with_cofactors(qa->q_int, qb->q_int).g;
                    if (cq.degree() == 0)
                        return {std::move(g_cand), scale_poly(qa->q_int, qa->scale),
                                scale_poly(qb->q_int, qb->scale)};
                }
            }
        }
        // reconstruction or certification failed: keep adding primes
    }
    FPoly g = euclid_gcd(a, b);
    if (g.degree() == 0) return {one, std::move(a), std::move(b)};
    return {g, exact_div_f(a, g), exact_div_f(b, g)};
}

FPoly primitive_gcd(FPoly a, FPoly b) {
    return gcd_with_cofactors(std::move(a), std::move(b)).g;
}

/// a / b, which must be exact.
FPoly exact_div_f(const FPoly& a, const FPoly& b) {
    if (auto md = modular_div(a, b)) return scale_poly(md->q_int, md->scale);
    auto [q, r] = divmod_once(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_div_f: inexact division");
    return q;
}

}  // namespace

FPoly field_poly_gcd(FPoly a, FPoly b) {
    FPoly g = primitive_gcd(std::move(a), std::move(b));
    if (g.is_zero()) return g;
    return g * g.lead().inverse();
}

std::vector<Mat<mpz_class>> predicted_degrees(const WeylElement& w, int iters) {
    if (iters < 1) throw std::invalid_argument("predicted_degrees: iters >= 1 required");
    const auto& ctx = *w.context();
    const int nf = ctx.p - 1;
    std::vector<Mat<mpz_class>> out;
    Mat<mpz_class> pw = w.matrix();
    for (int k = 1; k <= iters; ++k) {
        Mat<mpz_class> d(nf, nf);
        for (int a = 0; a < nf; ++a) {
            Vec<mpz_class> img = pw * ctx.basis_vector(ctx.h_index(a + 1));
            for (int b = 0; b < nf; ++b) d(a, b) = img[ctx.h_index(b + 1)];
        }
        out.push_back(std::move(d));
        if (k < iters) pw = pw * w.matrix();
    }
    return out;
}

namespace {

/// Per-factor coordinate polynomials of a line (or its iterated image).
using LineState = std::vector<std::vector<FPoly>>;

/// Monicize by the first nonzero coordinate (killing the common algebraic
/// unit factor the iterates otherwise accumulate), then strip the common
/// rational content.  Both are common scalars on the factor, hence
/// projectively irrelevant.
void normalize_factor(std::vector<FPoly>& f) {
    for (const auto& c : f)
        if (!c.is_zero()) {
            FieldElement inv = c.lead().inverse();
            for (auto& cc : f) cc = cc * inv;
            break;
        }
    mpq_class content = tuple_content(f);
    if (content != 0 && content != 1)
        for (auto& c : f) c = scale_poly(c, 1 / content);
}

/// One application of the realized map A . Psi to polynomial coordinates
/// with the common factor removed from every output factor: the exact
/// fallback behind map_step_fast below.
///
/// For the first factor the cofactor products prod_{k != j} u_k have common
/// factor (prod u_k) / lcm(u_k), so the reduced coordinates are lcm(u) / u_j
/// directly: only gcds of single coordinates are ever needed, never gcds of
/// the large products.
LineState map_step(const LineState& s, const std::vector<Mat<FieldElement>>& A,
                   const std::vector<int>& tau) {
    const int nf = static_cast<int>(s.size());
    const int r = static_cast<int>(s[0].size());
    for (const auto& c : s[0])
        if (c.is_zero())
            throw std::domain_error("map_step: line hits indeterminacy; retry seed");

    // primitive rescalings u_j = q_j * up_j (projective consistency demands
    // the q_j be tracked, not dropped)
    std::vector<FPoly> up(r);
    std::vector<mpq_class> q(r);
    for (int j = 0; j < r; ++j) {
        q[j] = poly_content(s[0][j]);
        up[j] = scale_poly(s[0][j], 1 / q[j]);
    }
    // L is only ever used projectively (an overall scalar on L rescales the
    // whole output factor), so it is renormalized at every accumulation step
    FPoly L = up[0];
    for (int j = 1; j < r; ++j) {
        L = gcd_with_cofactors(L, up[j]).ca * up[j];
        L = primitive(L * L.lead().inverse());
    }
    mpq_class Q(1);
    for (int j = 0; j < r; ++j) Q *= q[j];

    // reduced Cremona factor: psi0_j proportional to (prod u_k) / u_j with a
    // common constant of proportionality across j
    LineState psi(nf, std::vector<FPoly>(r));
    for (int j = 0; j < r; ++j) psi[0][j] = scale_poly(exact_div_f(L, up[j]), Q / q[j]);
    for (int i = 1; i < nf; ++i) {
        for (int j = 0; j < r; ++j) psi[i][j] = s[i][j] * psi[0][j];
        FPoly g;
        for (int j = 0; j < r && g.degree() != 0; ++j) g = primitive_gcd(g, psi[i][j]);
        if (g.degree() > 0)
            for (auto& c : psi[i]) c = exact_div_f(c, g);
    }

    LineState out(nf, std::vector<FPoly>(r));
    for (int i = 0; i < nf; ++i) {
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) out[i][a] = out[i][a] + psi[tau[i]][b] * A[i](a, b);
        normalize_factor(out[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Fast verified step.
//
// The whole reduced output tuple is computed modulo many primes (lcm chain,
// cofactor divisions and the matrix application all in F_p[x]/(S)[t]),
// normalized against one reference coordinate per factor, reassembled by
// CRT and a shared-denominator rational reconstruction, and then the
// candidate is certified over Q(lambda):
//
//   (1) some pair of coordinates of each factor has a nonzero resultant
//       image mod a single prime, proving the tuple has no common factor;
//   (2) with w = A^{-1} . cand, the cross identities
//       w_b u_b s_{b'} == w_{b'} u_{b'} s_b (s == 1 for the first factor)
//       hold at more rational points than their degree, proving them as
//       polynomial identities.
//
// (2) forces w_b = mu * s_b prod_{k != b} u_k for one rational function mu,
// i.e. cand is proportional to the unreduced numerator tuple, and (1) pins
// the proportionality down to the full common factor, so cand is exactly
// the reduced image up to the free projective scalar.  A failed
// certification (never observed) falls back to the exact map_step.
// ---------------------------------------------------------------------------

/// All output images of one map step modulo p, or empty when the prime must
/// be discarded.
std::optional<std::vector<std::vector<MPoly>>> step_image(
    const ModRing& R, const LineState& s, const std::vector<Mat<FieldElement>>& A,
    const std::vector<int>& tau) {
    const int nf = static_cast<int>(s.size());
    const int r = static_cast<int>(s[0].size());
    std::vector<std::vector<MPoly>> S(nf, std::vector<MPoly>(r));
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < r; ++j) {
            if (s[i][j].is_zero()) continue;
            auto im = reduce_poly(R, s[i][j]);
            if (!im) return std::nullopt;
            S[i][j] = std::move(*im);
        }
    // lcm of the first-factor coordinates
    MPoly L = S[0][0];
    for (int j = 1; j < r; ++j) {
        auto g = mp_gcd(R, L, S[0][j]);
        if (!g) return std::nullopt;
        auto q = mp_div(R, std::move(L), *g);
        if (!q || !q->second) return std::nullopt;
        L = mp_mul(R, q->first, S[0][j]);
    }
    // monicize L: its exact counterpart then differs from the primitive lcm
    // by a rational scalar only, which the later ratio normalization against
    // a reference coordinate cancels.  Without this the chain's accumulated
    // algebraic scalar mixes lambda-coordinates and the ratios to be
    // reconstructed would be far larger than the honest tuple.
    {
        int dL = mp_degree(L);
        if (dL < 0) return std::nullopt;
        auto linv = m_inv(R, L[dL]);
        if (!linv) return std::nullopt;
        for (auto& c : L) c = m_mul(R, c, *linv);
    }
    std::vector<std::vector<MPoly>> psi(nf, std::vector<MPoly>(r));
    for (int j = 0; j < r; ++j) {
        auto q = mp_div(R, L, S[0][j]);
        if (!q || !q->second) return std::nullopt;
        psi[0][j] = std::move(q->first);
    }
    for (int i = 1; i < nf; ++i) {
        for (int j = 0; j < r; ++j) psi[i][j] = mp_mul(R, S[i][j], psi[0][j]);
        MPoly G;
        int first = -1;
        for (int j = 0; j < r; ++j)
            if (mp_degree(psi[i][j]) >= 0) {
                first = j;
                break;
            }
        if (first < 0) continue;  // whole factor vanished
        G = psi[i][first];
        for (int j = first + 1; j < r && mp_degree(G) != 0; ++j) {
            if (mp_degree(psi[i][j]) < 0) continue;
            auto g = mp_gcd(R, G, psi[i][j]);
            if (!g) return std::nullopt;
            G = std::move(*g);
        }
        if (mp_degree(G) > 0)
            for (auto& c : psi[i]) {
                if (mp_degree(c) < 0) continue;
                auto q = mp_div(R, std::move(c), G);
                if (!q || !q->second) return std::nullopt;
                c = std::move(q->first);
            }
    }
    std::vector<std::vector<MPoly>> out(nf, std::vector<MPoly>(r));
    for (int i = 0; i < nf; ++i)
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) {
                auto e = reduce_elt(R, A[i](a, b));
                if (!e) return std::nullopt;
                if (m_is_zero(*e)) continue;
                const MPoly& pb = psi[tau[i]][b];
                if (out[i][a].size() < pb.size()) out[i][a].resize(pb.size(), m_zero(R));
                for (size_t t = 0; t < pb.size(); ++t)
                    out[i][a][t] = m_add(R, out[i][a][t], m_mul(R, *e, pb[t]));
            }
    return out;
}

/// CRT lift of the accumulated, ratio-normalized images.  All coordinates
/// of a factor share (a divisor of) one denominator -- the reference
/// coordinate -- so after the first full rational reconstruction every
/// further coordinate costs a single multiply-and-reduce.  Errors here are
/// harmless: the candidate is certified afterwards.
std::optional<LineState> lift_candidate(const std::vector<std::vector<CrtAccum>>& acc,
                                        const std::vector<std::vector<int>>& consensus,
                                        const FieldPtr& field) {
    const int nf = static_cast<int>(acc.size());
    const int r = static_cast<int>(acc[0].size());
    const int d = field->degree();
    LineState cand(nf, std::vector<FPoly>(r));
    for (int i = 0; i < nf; ++i) {
        const mpz_class& M = acc[i][0].M;
        const size_t mbits = mpz_sizeinbase(M.get_mpz_t(), 2);
        mpz_class D(1);
        for (int j = 0; j < r; ++j) {
            if (consensus[i][j] < 0) continue;  // zero coordinate
            std::vector<FieldElement> cs;
            for (int t = 0; t <= consensus[i][j]; ++t) {
                std::vector<mpq_class> coords(d);
                for (int l = 0; l < d; ++l) {
                    const mpz_class& res = acc[i][j].c[t][l];
                    mpz_class n = (res * D) % M;
                    if (n * 2 > M) n -= M;
                    size_t nb = mpz_sizeinbase(n.get_mpz_t(), 2);
                    size_t db = mpz_sizeinbase(D.get_mpz_t(), 2);
                    if (n == 0 || nb + db + 20 <= mbits) {
                        coords[l] = mpq_class(n) / mpq_class(D);
                    } else {
                        auto v = rat_recon(res, M);
                        if (!v) return std::nullopt;
                        mpz_lcm(D.get_mpz_t(), D.get_mpz_t(),
                                v->get_den().get_mpz_t());
                        coords[l] = std::move(*v);
                    }
                }
                cs.emplace_back(field, std::move(coords));
            }
            cand[i][j] = FPoly(std::move(cs));
            if (cand[i][j].degree() != consensus[i][j]) return std::nullopt;
        }
        mpq_class content = tuple_content(cand[i]);
        if (content == 0) return std::nullopt;
        if (content != 1)
            for (auto& c : cand[i]) c = scale_poly(c, 1 / content);
    }
    return cand;
}

FieldElement eval_poly(const FPoly& f, const FieldElement& t) {
    FieldElement v(0);
    for (int i = f.degree(); i >= 0; --i) v = v * t + f.coeff(i);
    return v;
}

/// Rigorous certificate that cand is the reduced image of s (see the block
/// comment above).
bool verify_step(const LineState& s, const std::vector<Mat<FieldElement>>& Ainv,
                 const std::vector<int>& tau, const LineState& cand,
                 const FieldPtr& field) {
    const int nf = static_cast<int>(s.size());
    const int r = static_cast<int>(s[0].size());
    for (int i = 0; i < nf; ++i) {
        // (1) no common polynomial factor.  Pairs of coordinates share
        // factors structurally (that is exactly why lcm(u) != prod u), but
        // any divisor of the whole tuple divides both cand[pos0] and every
        // integer combination of the rest, so a nonzero resultant image of
        // that pair proves gcd(tuple) == 1.  The combination is formed
        // exactly first so its true degree is known when reducing.
        std::vector<int> pos;
        bool gcd_free = false;
        for (int j = 0; j < r; ++j)
            if (!cand[i][j].is_zero()) {
                if (cand[i][j].degree() == 0) gcd_free = true;
                pos.push_back(j);
            }
        if (pos.empty()) return false;
        if (pos.size() == 1 && !gcd_free) return false;
        for (int attempt = 0; attempt < 8 && !gcd_free; ++attempt) {
            std::mt19937 trng(0x9e3779b9u + attempt);
            std::uniform_int_distribution<int> th(1, 97);
            FPoly combo;
            for (size_t a = 1; a < pos.size(); ++a)
                combo = combo + cand[i][pos[a]] * FieldElement(th(trng));
            if (combo.is_zero()) continue;
            int tried = 0;
            for (u64 p : prime_pool()) {
                auto R = make_ring(*field, p);
                if (!R) continue;
                auto f = reduce_poly(*R, cand[i][pos[0]]);
                auto g = reduce_poly(*R, combo);
                if (f && g) {
                    auto res = mp_resultant(*R, std::move(*f), std::move(*g));
                    if (res && !m_is_zero(*res)) {
                        gcd_free = true;
                        break;
                    }
                }
                if (++tried >= 3) break;
            }
        }
        if (!gcd_free) return false;

        // (2) the cross identities, at more points than their degree
        std::vector<FPoly> w(r);
        for (int b = 0; b < r; ++b)
            for (int a = 0; a < r; ++a) w[b] = w[b] + cand[i][a] * Ainv[i](b, a);
        // a common rational rescaling keeps the evaluations denominator-free
        mpq_class wc_ = tuple_content(w);
        if (wc_ == 0) return false;
        if (wc_ != 1)
            for (auto& c : w) c = scale_poly(c, 1 / wc_);
        const bool with_s = tau[i] != 0;
        int b0 = -1;
        int maxw = 0, maxu = 0, maxs = 0;
        for (int b = 0; b < r; ++b) {
            maxw = std::max(maxw, w[b].degree());
            maxu = std::max(maxu, s[0][b].degree());
            if (with_s) maxs = std::max(maxs, s[tau[i]][b].degree());
            if (b0 < 0 && !w[b].is_zero() &&
                (!with_s || !s[tau[i]][b].is_zero()))
                b0 = b;
        }
        if (b0 < 0) return false;
        const long T = maxw + maxu + maxs + 1;
        for (long t = 0; t < T; ++t) {
            FieldElement tv(static_cast<int>(t));
            std::vector<FieldElement> wu(r), sv(r, FieldElement(1));
            for (int b = 0; b < r; ++b) {
                wu[b] = eval_poly(w[b], tv) * eval_poly(s[0][b], tv);
                if (with_s) sv[b] = eval_poly(s[tau[i]][b], tv);
            }
            for (int b = 0; b < r; ++b) {
                if (b == b0) continue;
                if (!(wu[b] * sv[b0] == wu[b0] * sv[b])) return false;
            }
        }
    }
    return true;
}

/// map_step through modular images with a certified reconstruction; falls
/// back to the exact path if the primes run out or certification fails.
LineState map_step_fast(const LineState& s, const std::vector<Mat<FieldElement>>& A,
                        const std::vector<Mat<FieldElement>>& Ainv,
                        const std::vector<int>& tau, const FieldPtr& field) {
    for (const auto& c : s[0])
        if (c.is_zero())
            throw std::domain_error("map_step: line hits indeterminacy; retry seed");
    if (!field) return map_step(s, A, tau);
    const int nf = static_cast<int>(s.size());
    const int r = static_cast<int>(s[0].size());
    const int d = field->degree();

    std::vector<std::vector<int>> consensus;
    std::vector<std::vector<CrtAccum>> acc;
    std::vector<int> refj(nf, -1), refl(nf, -1);
    int count = 0;
    for (u64 p : prime_pool()) {
        auto R = make_ring(*field, p);
        if (!R) continue;
        auto img = step_image(*R, s, A, tau);
        if (!img) continue;
        std::vector<std::vector<int>> degs(nf, std::vector<int>(r));
        for (int i = 0; i < nf; ++i)
            for (int j = 0; j < r; ++j) degs[i][j] = mp_degree((*img)[i][j]);
        // a good prime realizes the true degrees; unlucky primes only ever
        // see drops (leading coefficients vanishing, gcd images too big)
        bool better = consensus.empty(), worse = false;
        for (int i = 0; i < nf && !better && !worse; ++i)
            for (int j = 0; j < r; ++j) {
                if (degs[i][j] > consensus[i][j]) better = true;
                if (degs[i][j] < consensus[i][j]) worse = true;
            }
        if (worse && !better) continue;
        if (better) {
            consensus = std::move(degs);
            acc.assign(nf, std::vector<CrtAccum>(r));
            for (int i = 0; i < nf; ++i)
                for (int j = 0; j < r; ++j)
                    acc[i][j].reset(std::max(consensus[i][j], 0), d);
            for (int i = 0; i < nf; ++i) {
                refj[i] = 0;
                for (int j = 1; j < r; ++j)
                    if (consensus[i][j] > consensus[i][refj[i]]) refj[i] = j;
                refl[i] = -1;
            }
            count = 0;
        }
        bool usable = true;
        for (int i = 0; i < nf && usable; ++i) {
            if (consensus[i][refj[i]] < 0) {
                usable = false;
                break;
            }
            const MElt& lead = (*img)[i][refj[i]][consensus[i][refj[i]]];
            if (refl[i] < 0)
                for (int l = d - 1; l >= 0; --l)
                    if (lead[l]) {
                        refl[i] = l;
                        break;
                    }
            if (refl[i] < 0 || !lead[refl[i]]) usable = false;
        }
        if (!usable) continue;
        for (int i = 0; i < nf; ++i) {
            u64 rinv =
                powmod((*img)[i][refj[i]][consensus[i][refj[i]]][refl[i]], p - 2, p);
            for (auto& poly : (*img)[i])
                for (auto& ce : poly)
                    for (auto& x : ce) x = mulmod(x, rinv, p);
        }
        bool ok = true;
        for (int i = 0; i < nf && ok; ++i)
            for (int j = 0; j < r && ok; ++j) ok = acc[i][j].add(p, (*img)[i][j]);
        if (!ok) continue;
        ++count;
        if (count >= 4 && count % 4 == 0) {
            auto cand = lift_candidate(acc, consensus, field);
            if (cand && verify_step(s, Ainv, tau, *cand, field))
                return std::move(*cand);
        }
    }
    return map_step(s, A, tau);
}

int factor_degree(const std::vector<FPoly>& coords) {
    int d = 0;
    for (const auto& c : coords) d = std::max(d, c.degree());
    return d;
}

std::vector<Mat<FieldElement>> unpack_blocks(const RealizationCertificate& cert, int nf,
                                             int r) {
    std::vector<Mat<FieldElement>> A(nf, Mat<FieldElement>(r, r));
    if (nf == 1) {
        A[0] = cert.matrix;
        return A;
    }
    for (int i = 0; i < nf; ++i)
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b)
                A[i](a, b) = cert.matrix(i * r + a, cert.factor_map[i] * r + b);
    return A;
}

/// Gauss-Jordan inverse of each block (the realization matrix is invertible
/// whenever the certificate is valid).
std::vector<Mat<FieldElement>> invert_blocks(const std::vector<Mat<FieldElement>>& A) {
    std::vector<Mat<FieldElement>> inv;
    for (const auto& M0 : A) {
        const int n = M0.rows();
        Mat<FieldElement> M = M0, I(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) I(i, j) = FieldElement(i == j ? 1 : 0);
        for (int c = 0; c < n; ++c) {
            int piv = -1;
            for (int rw = c; rw < n && piv < 0; ++rw)
                if (!M(rw, c).is_zero()) piv = rw;
            if (piv < 0) throw std::domain_error("invert_blocks: singular block");
            if (piv != c)
                for (int j = 0; j < n; ++j) {
                    std::swap(M(piv, j), M(c, j));
                    std::swap(I(piv, j), I(c, j));
                }
            FieldElement sc = M(c, c).inverse();
            for (int j = 0; j < n; ++j) {
                M(c, j) = M(c, j) * sc;
                I(c, j) = I(c, j) * sc;
            }
            for (int rw = 0; rw < n; ++rw) {
                if (rw == c || M(rw, c).is_zero()) continue;
                FieldElement f = M(rw, c);
                for (int j = 0; j < n; ++j) {
                    M(rw, j) = M(rw, j) - f * M(c, j);
                    I(rw, j) = I(rw, j) - f * I(c, j);
                }
            }
        }
        inv.push_back(std::move(I));
    }
    return inv;
}

}  // namespace

std::vector<Mat<mpz_class>> measure_degrees(const RealizationCertificate& cert,
                                            const MarkedTuple& tuple, int iters,
                                            unsigned seed) {
    if (!cert.ok) throw std::domain_error("measure_degrees: invalid certificate");
    if (iters < 1) throw std::invalid_argument("measure_degrees: iters >= 1 required");
    const auto& ctx = *tuple.context;
    const int nf = ctx.p - 1, r = ctx.r;
    auto A = unpack_blocks(cert, nf, r);
    // clear the rational denominators block by block (an overall scalar on
    // an output factor is projectively irrelevant, and integral entries keep
    // the modular reductions and evaluations denominator-free)
    for (auto& Ai : A) {
        mpz_class den(1);
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b)
                for (const auto& q : Ai(a, b).coeffs())
                    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
        if (den != 1) {
            FieldElement f((mpq_class(den)));
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) Ai(a, b) = Ai(a, b) * f;
        }
    }
    auto Ainv = invert_blocks(A);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-19, 19);
    auto nonzero_coef = [&]() {
        int c = 0;
        while (c == 0) c = coef(rng);
        return c;
    };

    std::vector<Mat<mpz_class>> out(iters, Mat<mpz_class>(nf, nf));
    for (int b = 0; b < nf; ++b) {
        // a line varying only in factor b; the other factors held at a
        // generic constant point.  The linear coordinate forms of the moving
        // factor must be pairwise non-proportional, or the line already
        // meets a codimension-2 coordinate locus and measures low
        LineState s(nf, std::vector<FPoly>(r));
        for (int i = 0; i < nf; ++i)
            for (int j = 0; j < r; ++j) {
                if (i == b) {
                    bool fresh = false;
                    while (!fresh) {
                        int a0 = coef(rng), a1 = nonzero_coef();
                        fresh = true;
                        for (int k = 0; k < j && fresh; ++k)
                            if (s[i][k].coeff(0) * FieldElement(a1) ==
                                s[i][k].coeff(1) * FieldElement(a0))
                                fresh = false;
                        if (fresh)
                            s[i][j] = FPoly({FieldElement(a0), FieldElement(a1)});
                    }
                } else {
                    s[i][j] = FPoly::constant(FieldElement(nonzero_coef()));
                }
            }
        for (int k = 1; k <= iters; ++k) {
            s = map_step_fast(s, A, Ainv, cert.factor_map, tuple.field);
            for (int a = 0; a < nf; ++a) out[k - 1](a, b) = factor_degree(s[a]);
        }
    }
    return out;
}

DegreeReport compare_degree_growth(const WeylElement& w,
                                   const RealizationCertificate& cert,
                                   const MarkedTuple& tuple, int iters,
                                   unsigned seed, const mpq_class& tol) {
    DegreeReport rep;
    rep.iterations = iters;
    // two independent seeds must agree; a seed whose line hits indeterminacy
    // is replaced (bounded retries)
    std::vector<std::vector<Mat<mpz_class>>> runs;
    unsigned s = seed;
    for (int attempts = 0; runs.size() < 2 && attempts < 6; ++attempts, ++s) {
        try {
            runs.push_back(measure_degrees(cert, tuple, iters, s));
        } catch (const std::domain_error&) {
        }
    }
    if (runs.size() < 2) {
        rep.detail = "could not find two usable line seeds";
        return rep;
    }
    if (!(runs[0] == runs[1])) {
        rep.detail = "measurements with independent seeds disagree";
        return rep;
    }
    rep.measured = std::move(runs[0]);
    rep.predicted = predicted_degrees(w, iters);
    if (rep.predicted == rep.measured) {
        rep.match = true;
    } else {
        rep.predicted = predicted_degrees(w.inverse(), iters);
        if (rep.predicted == rep.measured) {
            rep.match = true;
            rep.inverse_direction = true;
        } else {
            rep.detail = "measured degrees match neither w nor w^{-1}";
            return rep;
        }
    }
    // growth: the iters-th root of the largest final degree is within tol of
    // lambda, checked as (lo - tol)^K <= d <= (hi + tol)^K in exact rationals
    mpz_class last(0);
    const auto& fin = rep.measured.back();
    for (int a = 0; a < fin.rows(); ++a)
        for (int b = 0; b < fin.cols(); ++b) last = std::max(last, fin(a, b));
    RationalInterval lam = tuple.field->refine_to(tol / 4);
    mpq_class lo = lam.lo - tol, hi = lam.hi + tol, plo = 1, phi = 1;
    for (int k = 0; k < iters; ++k) {
        plo *= lo;
        phi *= hi;
    }
    if (plo <= mpq_class(last) && mpq_class(last) <= phi) {
        rep.growth_ok = true;
    } else {
        rep.detail = "iterate-root of the final degree is not within tolerance of lambda";
    }
    return rep;
}

}  // namespace wc
