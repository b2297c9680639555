#include "wc/marking.hpp"

namespace wc {

namespace {

Vec<FieldElement> to_field(const Vec<mpz_class>& u) {
    Vec<FieldElement> out;
    out.reserve(u.size());
    for (const auto& c : u) out.emplace_back(mpq_class(c));
    return out;
}

}  // namespace

MarkedTuple marking_from_vector(ContextPtr ctx, FieldPtr field,
                                const Vec<FieldElement>& v) {
    if (static_cast<int>(v.size()) != ctx->dim)
        throw std::invalid_argument("marking_from_vector: wrong vector length");
    Vec<FieldElement> kap = to_field(ctx->kappa);
    if (!inner(*ctx, v, kap).is_zero())
        throw std::invalid_argument("marking_from_vector: v.kappa != 0");

    const int p = ctx->p, r = ctx->r, ne = ctx->q + ctx->r;
    FieldElement rinv(mpq_class(1, r));
    // r t_0 = v . h_1
    FieldElement t0 = inner(*ctx, v, to_field(ctx->basis_vector(ctx->h_index(1)))) * rinv;

    MarkedTuple t;
    t.context = ctx;
    t.field = field;
    t.base_shifts.reserve(p - 1);
    for (int i = 1; i <= p - 1; ++i) {
        // s_i = (xi_1 - xi_i)/r in terms of coordinates of v
        FieldElement s = (v[ctx->h_index(1)] - v[ctx->h_index(i)]) * rinv;
        t.base_shifts.push_back(std::move(s));
    }
    t.point_params.reserve(ne);
    for (int j = 1; j <= ne; ++j) {
        // t_j = v . e_j = -v[e_j]
        FieldElement tj = -v[ctx->e_index(j)];
        t.point_params.push_back(tj - t0);
    }
    return t;
}

PicClass marking_pairing(const MarkedTuple& tuple, const Vec<mpz_class>& u) {
    const auto& ctx = *tuple.context;
    if (static_cast<int>(u.size()) != ctx.dim)
        throw std::invalid_argument("marking_pairing: wrong vector length");
    PicClass out{0, FieldElement(0)};
    for (int i = 1; i <= ctx.p - 1; ++i) {
        const mpz_class& a = u[ctx.h_index(i)];
        if (a == 0) continue;
        out.degree += a * ctx.r;
        out.moment += FieldElement(mpq_class(a * ctx.r)) * tuple.base_shifts[i - 1];
    }
    for (int j = 1; j <= ctx.q + ctx.r; ++j) {
        const mpz_class& b = u[ctx.e_index(j)];
        if (b == 0) continue;
        out.degree += b;
        out.moment += FieldElement(mpq_class(b)) * tuple.point_params[j - 1];
    }
    return out;
}

UCCertificate in_UC(const MarkedTuple& tuple, long bound) {
    UCCertificate cert;
    cert.bound = bound;
    cert.ok = true;
    auto roots = enumerate_roots(*tuple.context, bound);
    cert.roots_checked = roots.size();
    mpq_class coarse(1, 1024);
    for (const auto& alpha : roots) {
        FieldElement m = marking_pairing(tuple, alpha).moment;
        if (m.is_zero()) {
            cert.ok = false;
            cert.failing_root = alpha;
            cert.min_abs_lower = 0;
            return cert;
        }
        RationalInterval iv = real_embed(m, coarse);
        mpq_class lower = std::min(abs(iv.lo), abs(iv.hi));
        if (iv.contains_zero()) lower = 0;
        if (!cert.min_abs_lower || lower < *cert.min_abs_lower) cert.min_abs_lower = lower;
    }
    return cert;
}

MarkedTuple weyl_act_tuple(const WeylElement& w, const MarkedTuple& tuple) {
    const auto& ctx = *tuple.context;
    if (w.context().get() != &ctx && !(w.context()->gram == ctx.gram))
        throw std::invalid_argument("weyl_act_tuple: context mismatch");
    MarkedTuple out;
    out.context = tuple.context;
    out.field = tuple.field;
    FieldElement rinv(mpq_class(1, ctx.r));
    for (int i = 1; i <= ctx.p - 1; ++i) {
        PicClass c = marking_pairing(tuple, w.matrix().col(ctx.h_index(i)));
        if (c.degree != ctx.r)
            throw std::logic_error("weyl_act_tuple: image of h_i has degree != r");
        out.base_shifts.push_back(c.moment * rinv);
    }
    for (int j = 1; j <= ctx.q + ctx.r; ++j) {
        PicClass c = marking_pairing(tuple, w.matrix().col(ctx.e_index(j)));
        if (c.degree != 1)
            throw std::logic_error("weyl_act_tuple: image of e_j has degree != 1");
        out.point_params.push_back(c.moment);
    }
    return out;
}

std::optional<FieldElement> tuples_equivalent(const MarkedTuple& t1,
                                              const MarkedTuple& t2) {
    const auto& ctx = *t1.context;
    if (t2.context.get() != t1.context.get() && !(t2.context->gram == ctx.gram))
        throw std::invalid_argument("tuples_equivalent: context mismatch");
    std::optional<FieldElement> a;
    std::vector<std::pair<FieldElement, FieldElement>> pairs;
    for (const auto& gamma : ctx.simple_roots) {
        FieldElement m1 = marking_pairing(t1, gamma).moment;
        FieldElement m2 = marking_pairing(t2, gamma).moment;
        if (m1.is_zero()) {
            if (!m2.is_zero()) return std::nullopt;
            continue;
        }
        if (!a) a = m2 / m1;
        pairs.emplace_back(std::move(m1), std::move(m2));
    }
    if (!a) return FieldElement(1);  // all degree-0 pairings vanish on both sides
    for (const auto& [m1, m2] : pairs)
        if (!(m2 == *a * m1)) return std::nullopt;
    return a;
}

}  // namespace wc
