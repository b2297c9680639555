#include "wc/polynomial.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace wc {

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    const int db = b.degree();
    if (a.degree() < db) throw std::domain_error("exact_div: not divisible (degree)");
    std::vector<mpz_class> rem(a.coeffs());
    std::vector<mpz_class> quot(a.degree() - db + 1, 0);
    for (int k = a.degree() - db; k >= 0; --k) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[k + db].get_mpz_t(),
                    b.lead().get_mpz_t());
        if (r != 0) throw std::domain_error("exact_div: not divisible");
        quot[k] = q;
        for (int j = 0; j <= db; ++j) rem[k + j] -= q * b.coeff(j);
    }
    if (!IntPoly(rem).is_zero()) throw std::domain_error("exact_div: nonzero remainder");
    return IntPoly(std::move(quot));
}

bool divides(const IntPoly& b, const IntPoly& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (a.degree() < b.degree()) return false;
    auto [q, r] = divmod(to_rat(a), to_rat(b));
    if (!r.is_zero()) return false;
    for (const auto& c : q.coeffs())
        if (c.get_den() != 1) return false;
    return true;
}

RatPoly to_rat(const IntPoly& p) {
    std::vector<mpq_class> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return RatPoly(std::move(c));
}

IntPoly to_int(const RatPoly& p) {
    std::vector<mpz_class> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) {
        if (v.get_den() != 1) throw std::domain_error("to_int: non-integral coefficient");
        c.push_back(v.get_num());
    }
    return IntPoly(std::move(c));
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    std::vector<mpz_class> c;
    c.reserve(p.coeffs().size());
    const bool flip = p.lead() < 0;
    for (const auto& v : p.coeffs()) c.push_back(flip ? mpz_class(-v / g) : mpz_class(v / g));
    return IntPoly(std::move(c));
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    mpq_class inv = 1 / a.lead();
    return a * inv;
}

IntPoly cyclotomic(int m) {
    static std::map<int, IntPoly> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<mpz_class> xm1(m + 1, 0);
    xm1[0] = -1;
    xm1[m] = 1;
    IntPoly num(std::move(xm1));
    for (int d = 1; d < m; ++d)
        if (m % d == 0) num = exact_div(num, cyclotomic(d));
    cache[m] = num;
    return num;
}

namespace {

std::vector<RatPoly> sturm_sequence(const IntPoly& p) {
    std::vector<RatPoly> seq;
    seq.push_back(to_rat(p));
    seq.push_back(to_rat(p.derivative()));
    while (!seq.back().is_zero()) {
        auto [q, r] = divmod(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return seq;
}

int sign_of(const mpq_class& x) { return sgn(x); }

int variations_at(const std::vector<RatPoly>& seq, const mpq_class& a) {
    int var = 0, prev = 0;
    for (const auto& f : seq) {
        int s = sign_of(f.eval(a));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int variations_at_plus_inf(const std::vector<RatPoly>& seq) {
    int var = 0, prev = 0;
    for (const auto& f : seq) {
        if (f.is_zero()) continue;
        int s = sign_of(f.lead());
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace

int sturm_count_interval(const IntPoly& p, const mpq_class& a, const mpq_class& b) {
    if (p.is_zero()) throw std::domain_error("sturm: zero polynomial");
    auto seq = sturm_sequence(p);
    int count = variations_at(seq, a) - variations_at(seq, b);
    // Sturm counts roots in (a, b]; exclude b if it is a root.
    if (sign_of(to_rat(p).eval(b)) == 0) --count;
    return count;
}

int sturm_count_above(const IntPoly& p, const mpq_class& a) {
    if (p.is_zero()) throw std::domain_error("sturm: zero polynomial");
    auto seq = sturm_sequence(p);
    return variations_at(seq, a) - variations_at_plus_inf(seq);
}

std::vector<mpz_class> integer_roots_monic(const IntPoly& p) {
    std::vector<mpz_class> roots;
    if (p.is_zero()) return roots;
    mpz_class c0 = p.coeff(0);
    if (c0 == 0) {
        roots.push_back(0);
        // strip the factor x and recurse on the rest
        std::vector<mpz_class> rest(p.coeffs().begin() + 1, p.coeffs().end());
        for (auto& r : integer_roots_monic(IntPoly(std::move(rest))))
            if (r != 0) roots.push_back(r);
        return roots;
    }
    mpz_class a = abs(c0);
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        const mpz_class cands[] = {d, mpz_class(-d), mpz_class(a / d), mpz_class(-(a / d))};
        for (const mpz_class& cand : cands) {
            mpz_class val = p.eval(cand);
            if (val == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
                roots.push_back(cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string to_string(const IntPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        mpz_class c = p.coeff(k);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        mpz_class a = abs(c);
        if (k == 0 || a != 1) os << a.get_str();
        if (k > 0) {
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

}  // namespace wc
