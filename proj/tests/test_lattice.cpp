#include "doctest.h"

#include <random>

#include "wc/lattice.hpp"

using namespace wc;

namespace {

Vec<mpz_class> zv(const LatticeContext& ctx, std::initializer_list<long> v) {
    Vec<mpz_class> out(v.begin(), v.end());
    REQUIRE(static_cast<int>(out.size()) == ctx.dim);
    return out;
}

}  // namespace

TEST_CASE("build_lattice rejects bad parameters") {
    CHECK_THROWS_AS(build_lattice(1, 2, 3), std::domain_error);
    CHECK_THROWS_AS(build_lattice(2, 1, 3), std::domain_error);
    CHECK_THROWS_AS(build_lattice(2, 2, 2), std::domain_error);
    CHECK_NOTHROW(build_lattice(2, 2, 3));
}

TEST_CASE("gram form and kappa for (2,7,3)") {
    auto ctx = build_lattice(2, 7, 3);
    CHECK(ctx->dim == 11);
    // e_0 = h_1 has square r-2 = 1
    CHECK(ctx->gram(0, 0) == 1);
    for (int j = 1; j <= 10; ++j) CHECK(ctx->gram(j, j) == -1);
    // kappa = 3 e_0 - sum e_j
    CHECK(ctx->kappa[0] == 3);
    for (int j = 1; j <= 10; ++j) CHECK(ctx->kappa[j] == -1);
}

TEST_CASE("kappa self-intersections") {
    CHECK(inner(*build_lattice(2, 5, 4),
                build_lattice(2, 5, 4)->kappa, build_lattice(2, 5, 4)->kappa) == -4);
    auto c237 = build_lattice(2, 3, 7);
    CHECK(inner(*c237, c237->kappa, c237->kappa) == -5);
    auto c334 = build_lattice(3, 3, 4);
    CHECK(inner(*c334, c334->kappa, c334->kappa) == -15);
}

TEST_CASE("simple roots: square -2 and orthogonal to kappa") {
    for (auto [p, q, r] : {std::tuple{2, 7, 3}, {2, 5, 4}, {3, 3, 4}, {4, 3, 5}}) {
        auto ctx = build_lattice(p, q, r);
        CHECK(static_cast<int>(ctx->simple_roots.size()) == ctx->n);
        for (const auto& g : ctx->simple_roots) {
            CHECK(inner(*ctx, g, g) == -2);
            CHECK(inner(*ctx, g, ctx->kappa) == 0);
        }
    }
}

TEST_CASE("inner product dimension mismatch") {
    auto ctx = build_lattice(2, 2, 3);
    Vec<mpz_class> bad(3, 0);
    CHECK_THROWS_AS(inner(*ctx, bad, ctx->kappa), std::invalid_argument);
}

TEST_CASE("reflect basics") {
    auto ctx = build_lattice(2, 7, 3);
    const auto& alpha0 = ctx->simple_roots[0];  // h_1 - e_1 - e_2 - e_3
    CHECK(reflect(*ctx, alpha0, ctx->kappa) == ctx->kappa);
    Vec<mpz_class> neg(alpha0);
    for (auto& c : neg) c = -c;
    CHECK(reflect(*ctx, alpha0, alpha0) == neg);
    // r_{e_1 - e_2}(e_1) = e_2
    const auto& a1 = ctx->simple_roots[ctx->alpha_index(1)];
    CHECK(reflect(*ctx, a1, ctx->basis_vector(ctx->e_index(1))) ==
          ctx->basis_vector(ctx->e_index(2)));
    CHECK_THROWS_AS(reflect(*ctx, ctx->kappa, alpha0), std::invalid_argument);
}

TEST_CASE("cremona involution action formulas, p=2 r=3") {
    auto ctx = build_lattice(2, 7, 3);
    auto w = cremona_reflection(ctx, {1, 2, 3}, 1);
    // image of h_1 is 2 h_1 - (e_1 + e_2 + e_3)
    CHECK(w.apply(ctx->basis_vector(0)) == zv(*ctx, {2, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0}));
    // fixes e_j for j not in I
    for (int j = 4; j <= 10; ++j)
        CHECK(w.apply(ctx->basis_vector(ctx->e_index(j))) ==
              ctx->basis_vector(ctx->e_index(j)));
    CHECK(w * w == identity_element(ctx));
    CHECK_THROWS_AS(cremona_reflection(ctx, {1, 2}, 1), std::invalid_argument);
    CHECK_THROWS_AS(cremona_reflection(ctx, {1, 2, 3}, 2), std::invalid_argument);
}

TEST_CASE("cremona involution equals generic reflection at alpha_{I,k}") {
    for (auto [p, q, r] : {std::tuple{2, 5, 4}, {3, 3, 4}}) {
        auto ctx = build_lattice(p, q, r);
        std::vector<int> I;
        for (int i = 2; i <= r + 1; ++i) I.push_back(i);
        Vec<mpz_class> alpha(ctx->dim, 0);
        alpha[ctx->h_index(p - 1)] = 1;
        for (int i : I) alpha[ctx->e_index(i)] = -1;
        CHECK(cremona_reflection(ctx, I, p - 1) == reflection(ctx, alpha));
    }
}

TEST_CASE("coxeter element, p=2 shape") {
    auto ctx = build_lattice(2, 7, 3);
    auto w = coxeter_element(ctx);
    const int n = ctx->n, r = ctx->r;
    // w = (1 2 ... n) r_{I,1}: e_j -> e_{j+1} for r < j < n
    for (int j = r + 1; j < n; ++j)
        CHECK(w.apply(ctx->basis_vector(ctx->e_index(j))) ==
              ctx->basis_vector(ctx->e_index(j + 1)));
    // w(e_0) = (r-1) e_0 - (r-2)(e_2 + ... + e_{r+1})
    Vec<mpz_class> expect(ctx->dim, 0);
    expect[0] = r - 1;
    for (int j = 2; j <= r + 1; ++j) expect[ctx->e_index(j)] = -(r - 2);
    CHECK(w.apply(ctx->basis_vector(0)) == expect);
    CHECK(w.apply(ctx->kappa) == ctx->kappa);
    // equals cycle * cremona as matrices
    std::vector<int> I{1, 2, 3};
    auto cyc = identity_element(ctx);
    for (int j = 1; j <= n - 1; ++j)
        cyc = cyc * reflection(ctx, ctx->simple_roots[ctx->alpha_index(j)]);
    CHECK(w == cyc * cremona_reflection(ctx, I, 1));
}

TEST_CASE("coxeter element rejects non-permutations") {
    auto ctx = build_lattice(2, 2, 3);
    CHECK_THROWS_AS(coxeter_element(ctx, {0, 1, 2, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(coxeter_element(ctx, {0, 1}), std::invalid_argument);
}

TEST_CASE("weyl elements: random words are Gram-orthogonal and fix kappa") {
    auto ctx = build_lattice(3, 3, 4);
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, ctx->n - 1);
    for (int trial = 0; trial < 20; ++trial) {
        auto w = identity_element(ctx);
        int len = 1 + trial % 10;
        for (int i = 0; i < len; ++i)
            w = w * reflection(ctx, ctx->simple_roots[pick(rng)]);
        // WeylElement's constructor asserts both invariants; recheck explicitly
        CHECK(w.matrix().transpose() * ctx->gram * w.matrix() == ctx->gram);
        CHECK(w.apply(ctx->kappa) == ctx->kappa);
        CHECK(w * w.inverse() == identity_element(ctx));
    }
}

TEST_CASE("reflection involutivity on random integer vectors") {
    auto ctx = build_lattice(2, 5, 4);
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (const auto& root : ctx->simple_roots)
        for (int trial = 0; trial < 5; ++trial) {
            Vec<mpz_class> x(ctx->dim);
            for (auto& c : x) c = coef(rng);
            CHECK(reflect(*ctx, root, reflect(*ctx, root, x)) == x);
        }
}

TEST_CASE("enumerate_roots basics") {
    auto ctx = build_lattice(2, 7, 3);
    auto roots = enumerate_roots(*ctx, 5);
    CHECK(!roots.empty());
    for (const auto& a : roots) CHECK(is_root(*ctx, a));
    // simple roots are present
    for (const auto& s : ctx->simple_roots)
        CHECK(std::binary_search(roots.begin(), roots.end(), s));
    // alpha_{I,1} = e_0 - e_1 - e_2 - e_3 present
    CHECK(std::binary_search(roots.begin(), roots.end(),
                             zv(*ctx, {1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0})));
    // no duplicates, sorted
    CHECK(std::is_sorted(roots.begin(), roots.end()));
    CHECK(std::adjacent_find(roots.begin(), roots.end()) == roots.end());
    // closed under simple reflections within the bound
    for (const auto& a : roots)
        for (const auto& s : ctx->simple_roots) {
            auto b = reflect(*ctx, s, a);
            bool inside = true;
            for (const auto& c : b)
                if (abs(c) > 5) inside = false;
            if (inside) CHECK(std::binary_search(roots.begin(), roots.end(), b));
        }
    CHECK_THROWS_AS(enumerate_roots(*ctx, 0), std::invalid_argument);
}
