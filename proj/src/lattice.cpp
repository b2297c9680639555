#include "wc/lattice.hpp"

#include <algorithm>
#include <deque>

namespace wc {

Vec<mpz_class> LatticeContext::basis_vector(int idx) const {
    Vec<mpz_class> v(dim, 0);
    v[idx] = 1;
    return v;
}

ContextPtr build_lattice(int p, int q, int r) {
    if (r < 3 || p < 2 || q < 2)
        throw std::domain_error("build_lattice: requires r >= 3, p >= 2, q >= 2");
    auto ctx = std::make_shared<LatticeContext>();
    ctx->p = p;
    ctx->q = q;
    ctx->r = r;
    ctx->n = p + q + r - 2;
    ctx->dim = ctx->n + 1;
    const int nh = p - 1, ne = q + r;

    ctx->gram = Mat<mpz_class>(ctx->dim, ctx->dim);
    for (int i = 0; i < nh; ++i)
        for (int j = 0; j < nh; ++j) ctx->gram(i, j) = (i == j) ? r - 2 : r - 1;
    for (int j = 0; j < ne; ++j) ctx->gram(nh + j, nh + j) = -1;

    ctx->kappa = Vec<mpz_class>(ctx->dim, 0);
    for (int i = 0; i < nh; ++i) ctx->kappa[i] = r;
    for (int j = 0; j < ne; ++j) ctx->kappa[nh + j] = -((p - 1) * (r - 1) - 1);

    // beta_i = -h_i + h_{i+1}
    for (int i = 1; i <= p - 2; ++i) {
        Vec<mpz_class> v(ctx->dim, 0);
        v[ctx->h_index(i)] = -1;
        v[ctx->h_index(i + 1)] = 1;
        ctx->simple_roots.push_back(std::move(v));
    }
    // alpha_0 = h_1 - sum_{i<=r} e_i
    {
        Vec<mpz_class> v(ctx->dim, 0);
        v[ctx->h_index(1)] = 1;
        for (int i = 1; i <= r; ++i) v[ctx->e_index(i)] = -1;
        ctx->simple_roots.push_back(std::move(v));
    }
    // alpha_j = e_j - e_{j+1}
    for (int j = 1; j <= ne - 1; ++j) {
        Vec<mpz_class> v(ctx->dim, 0);
        v[ctx->e_index(j)] = 1;
        v[ctx->e_index(j + 1)] = -1;
        ctx->simple_roots.push_back(std::move(v));
    }
    return ctx;
}

WeylElement::WeylElement(ContextPtr ctx, Mat<mpz_class> matrix)
    : ctx_(std::move(ctx)), m_(std::move(matrix)) {
    if (m_.rows() != ctx_->dim || m_.cols() != ctx_->dim)
        throw std::invalid_argument("WeylElement: wrong matrix size");
    if (!(m_.transpose() * ctx_->gram * m_ == ctx_->gram))
        throw std::invalid_argument("WeylElement: not Gram-orthogonal");
    if (!(m_ * ctx_->kappa == ctx_->kappa))
        throw std::invalid_argument("WeylElement: does not fix kappa");
}

WeylElement WeylElement::inverse() const {
    const int d = ctx_->dim;
    Mat<mpq_class> a(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a(i, j) = mpq_class(m_(i, j));
    Mat<mpq_class> inv = wc::inverse(a);
    Mat<mpz_class> out(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (inv(i, j).get_den() != 1)
                throw std::logic_error("WeylElement::inverse: non-integral entry");
            out(i, j) = inv(i, j).get_num();
        }
    return WeylElement(ctx_, std::move(out));
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    return WeylElement(a.ctx_, a.m_ * b.m_);
}

WeylElement identity_element(ContextPtr ctx) {
    int d = ctx->dim;
    return WeylElement(std::move(ctx), Mat<mpz_class>::identity(d));
}

Vec<mpz_class> reflect(const LatticeContext& ctx, const Vec<mpz_class>& root,
                       const Vec<mpz_class>& x) {
    if (inner(ctx, root, root) != -2)
        throw std::invalid_argument("reflect: root is not a (-2)-vector");
    mpz_class c = inner(ctx, x, root);
    Vec<mpz_class> y(x);
    for (int i = 0; i < ctx.dim; ++i) y[i] += c * root[i];
    return y;
}

WeylElement reflection(ContextPtr ctx, const Vec<mpz_class>& root) {
    if (inner(*ctx, root, root) != -2)
        throw std::invalid_argument("reflection: root is not a (-2)-vector");
    const int d = ctx->dim;
    // R = I + root * (G root)^T
    Vec<mpz_class> groot(d, 0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) groot[i] += ctx->gram(i, j) * root[j];
    Mat<mpz_class> m = Mat<mpz_class>::identity(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) += root[i] * groot[j];
    return WeylElement(std::move(ctx), std::move(m));
}

WeylElement cremona_reflection(ContextPtr ctx, const std::vector<int>& I, int k) {
    const int r = ctx->r;
    if (static_cast<int>(I.size()) != r)
        throw std::invalid_argument("cremona_reflection: |I| must equal r");
    if (k < 1 || k > ctx->p - 1)
        throw std::invalid_argument("cremona_reflection: k out of range");
    std::set<int> iset(I.begin(), I.end());
    if (static_cast<int>(iset.size()) != r)
        throw std::invalid_argument("cremona_reflection: repeated index in I");
    for (int i : iset)
        if (i < 1 || i > ctx->q + ctx->r)
            throw std::invalid_argument("cremona_reflection: index out of range");

    const int d = ctx->dim;
    Mat<mpz_class> m(d, d);
    auto set_col = [&](int col, const Vec<mpz_class>& v) {
        for (int i = 0; i < d; ++i) m(i, col) = v[i];
    };
    // r_{I,k}(h_k) = (r-1) h_k - (r-2) sum_{i in I} e_i
    {
        Vec<mpz_class> v(d, 0);
        v[ctx->h_index(k)] = r - 1;
        for (int i : iset) v[ctx->e_index(i)] = -(r - 2);
        set_col(ctx->h_index(k), v);
    }
    // r_{I,k}(h_i) = (r-1) h_k + h_i - (r-1) sum_{j in I} e_j  (i != k)
    for (int i = 1; i <= ctx->p - 1; ++i) {
        if (i == k) continue;
        Vec<mpz_class> v(d, 0);
        v[ctx->h_index(k)] = r - 1;
        v[ctx->h_index(i)] += 1;
        for (int j : iset) v[ctx->e_index(j)] = -(r - 1);
        set_col(ctx->h_index(i), v);
    }
    // r_{I,k}(e_i) = e_i + alpha_{I,k} (i in I);  r_{I,k}(e_j) = e_j (j not in I)
    Vec<mpz_class> alpha(d, 0);
    alpha[ctx->h_index(k)] = 1;
    for (int i : iset) alpha[ctx->e_index(i)] = -1;
    for (int j = 1; j <= ctx->q + ctx->r; ++j) {
        Vec<mpz_class> v(d, 0);
        v[ctx->e_index(j)] = 1;
        if (iset.count(j))
            for (int i = 0; i < d; ++i) v[i] += alpha[i];
        set_col(ctx->e_index(j), v);
    }
    return WeylElement(std::move(ctx), std::move(m));
}

WeylElement coxeter_element(ContextPtr ctx, const std::vector<int>& order) {
    const int n = ctx->n;
    std::vector<int> sorted(order);
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (i >= static_cast<int>(sorted.size()) || sorted[i] != i)
            throw std::invalid_argument(
                "coxeter_element: order must be a permutation of the simple-root indices");
    WeylElement w = identity_element(ctx);
    for (int idx : order) w = w * reflection(ctx, ctx->simple_roots[idx]);
    return w;
}

std::vector<int> default_coxeter_order(const LatticeContext& ctx) {
    std::vector<int> order;
    for (int i = 1; i <= ctx.p - 2; ++i) order.push_back(ctx.beta_index(i));
    for (int j = 1; j <= ctx.q + ctx.r - 1; ++j) order.push_back(ctx.alpha_index(j));
    order.push_back(ctx.alpha_index(0));
    return order;
}

WeylElement coxeter_element(ContextPtr ctx) {
    return coxeter_element(ctx, default_coxeter_order(*ctx));
}

std::vector<Vec<mpz_class>> enumerate_roots(const LatticeContext& ctx, long bound) {
    if (bound <= 0) throw std::invalid_argument("enumerate_roots: bound must be positive");
    auto within = [&](const Vec<mpz_class>& v) {
        for (const auto& c : v)
            if (abs(c) > bound) return false;
        return true;
    };
    std::set<Vec<mpz_class>> seen;
    std::deque<Vec<mpz_class>> queue;
    for (const auto& s : ctx.simple_roots) {
        if (!within(s)) continue;
        if (seen.insert(s).second) queue.push_back(s);
    }
    while (!queue.empty()) {
        Vec<mpz_class> cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : ctx.simple_roots) {
            Vec<mpz_class> next = reflect(ctx, s, cur);
            if (!within(next)) continue;
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return {seen.begin(), seen.end()};
}

bool is_root(const LatticeContext& ctx, const Vec<mpz_class>& v) {
    return inner(ctx, v, v) == -2 && inner(ctx, v, ctx.kappa) == 0;
}

}  // namespace wc
