#pragma once

#include <memory>
#include <set>
#include <vector>

#include "wc/linalg.hpp"

namespace wc {

/// The rank-(n+1) lattice attached to the triple (p, q, r), n = p+q+r-2,
/// with basis (h_1, ..., h_{p-1}, e_1, ..., e_{q+r}).  For p = 2 the alias
/// e_0 = h_1 (coordinate index 0) is used throughout.
///
/// Matrices act on column coordinate vectors; compose(w1, w2) applies w2 first.
struct LatticeContext {
    int p, q, r;
    int n;    // p + q + r - 2
    int dim;  // n + 1
    Mat<mpz_class> gram;
    Vec<mpz_class> kappa;
    // ordered as beta_1..beta_{p-2}, alpha_0, alpha_1, ..., alpha_{q+r-1}
    std::vector<Vec<mpz_class>> simple_roots;

    int h_index(int i) const { return i - 1; }          // h_i, 1 <= i <= p-1
    int e_index(int j) const { return p - 2 + j; }      // e_j, 1 <= j <= q+r
    int beta_index(int i) const { return i - 1; }       // beta_i in simple_roots
    int alpha_index(int j) const { return p - 2 + j; }  // alpha_j in simple_roots

    Vec<mpz_class> basis_vector(int idx) const;
};

using ContextPtr = std::shared_ptr<const LatticeContext>;

/// Rejects parameters outside the domain r >= 3, p >= 2, q >= 2.
ContextPtr build_lattice(int p, int q, int r);

/// u^T G v; works for any coefficient type with mpz_class-compatible arithmetic.
template <class T>
T inner(const LatticeContext& ctx, const Vec<T>& u, const Vec<T>& v) {
    if (static_cast<int>(u.size()) != ctx.dim || static_cast<int>(v.size()) != ctx.dim)
        throw std::invalid_argument("inner: dimension mismatch");
    T acc{};
    for (int i = 0; i < ctx.dim; ++i)
        for (int j = 0; j < ctx.dim; ++j) {
            if (ctx.gram(i, j) == 0) continue;
            acc += u[i] * T(ctx.gram(i, j).get_si()) * v[j];
        }
    return acc;
}

/// An integer matrix acting on lattice coordinates, Gram-orthogonal and
/// fixing kappa.  Both properties are checked at construction.
class WeylElement {
public:
    WeylElement(ContextPtr ctx, Mat<mpz_class> matrix);

    const Mat<mpz_class>& matrix() const { return m_; }
    const ContextPtr& context() const { return ctx_; }

    Vec<mpz_class> apply(const Vec<mpz_class>& x) const { return m_ * x; }

    WeylElement inverse() const;

    /// compose: (a * b) applies b first.
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.m_ == b.m_;
    }

private:
    ContextPtr ctx_;
    Mat<mpz_class> m_;
};

WeylElement identity_element(ContextPtr ctx);

/// x + (x . root) root; requires root . root = -2.
Vec<mpz_class> reflect(const LatticeContext& ctx, const Vec<mpz_class>& root,
                       const Vec<mpz_class>& x);

/// The reflection r_root as a WeylElement (root must be a (-2)-vector in kappa^perp).
WeylElement reflection(ContextPtr ctx, const Vec<mpz_class>& root);

/// The Cremona involution r_{I,k} for |I| = r, 1 <= k <= p-1, built from the
/// four displayed action formulas (not via the generic reflection).
WeylElement cremona_reflection(ContextPtr ctx, const std::vector<int>& I, int k);

/// Product of the n simple reflections in the given order (indices into
/// simple_roots, rightmost applied first).
WeylElement coxeter_element(ContextPtr ctx, const std::vector<int>& order);

/// Order (beta_1..beta_{p-2}, alpha_1..alpha_{q+r-1}, alpha_0): for p = 2 this
/// yields w = (1 2 ... n) r_{I,1} with I = {1, ..., r}; for p >= 3 the product
/// (h-cycle)(e-cycle) r_{alpha_0}.
std::vector<int> default_coxeter_order(const LatticeContext& ctx);
WeylElement coxeter_element(ContextPtr ctx);

/// Breadth-first closure of the simple roots under all simple reflections,
/// pruned when any coordinate exceeds `bound` in absolute value.
/// Output is sorted lexicographically and duplicate-free.
std::vector<Vec<mpz_class>> enumerate_roots(const LatticeContext& ctx, long bound);

bool is_root(const LatticeContext& ctx, const Vec<mpz_class>& v);

}  // namespace wc
