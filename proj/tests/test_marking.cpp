#include "doctest.h"

#include <random>

#include "wc/marking.hpp"

using namespace wc;

namespace {

struct Setup {
    ContextPtr ctx;
    FieldPtr field;
    WeylElement w;
    Vec<FieldElement> v;
    MarkedTuple tuple;
};

Setup leading_setup(int p, int q, int r) {
    auto ctx = build_lattice(p, q, r);
    auto w = coxeter_element(ctx);
    auto field = make_salem_field(strip_cyclotomic(char_poly(w)).remainder);
    auto v = leading_eigenvector(w, field);
    auto tuple = marking_from_vector(ctx, field, v);
    return {ctx, field, w, v, std::move(tuple)};
}

Vec<FieldElement> to_field(const Vec<mpz_class>& u) {
    Vec<FieldElement> out;
    for (const auto& c : u) out.emplace_back(mpq_class(c));
    return out;
}

}  // namespace

TEST_CASE("marking_from_vector rejects vectors outside kappa^perp") {
    auto s = leading_setup(2, 5, 4);
    CHECK_THROWS_AS(marking_from_vector(s.ctx, s.field, to_field(s.ctx->kappa)),
                    std::invalid_argument);
}

TEST_CASE("pairing law: moment(rho(alpha)) = alpha . v for enumerated roots") {
    for (auto [p, q, r] : {std::tuple{2, 7, 3}, {2, 5, 4}, {3, 3, 4}}) {
        auto s = leading_setup(p, q, r);
        for (const auto& alpha : enumerate_roots(*s.ctx, 3)) {
            FieldElement expect = inner(*s.ctx, to_field(alpha), s.v);
            CHECK(marking_pairing(s.tuple, alpha).moment == expect);
            CHECK(marking_pairing(s.tuple, alpha).degree == 0);
        }
    }
}

TEST_CASE("pairing on kappa: degree is kappa^2 over the normalization constant") {
    auto s = leading_setup(2, 5, 4);
    PicClass c = marking_pairing(s.tuple, s.ctx->kappa);
    // deg rho(kappa) = kappa . kappa / ((r-1)(p-1) - 1)
    CHECK(c.degree == inner(*s.ctx, s.ctx->kappa, s.ctx->kappa) /
                          ((s.ctx->r - 1) * (s.ctx->p - 1) - 1));
}

TEST_CASE("pairing linearity") {
    auto s = leading_setup(2, 5, 4);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        Vec<mpz_class> u(s.ctx->dim), up(s.ctx->dim), sum(s.ctx->dim);
        for (int i = 0; i < s.ctx->dim; ++i) {
            u[i] = coef(rng);
            up[i] = coef(rng);
            sum[i] = u[i] + up[i];
        }
        CHECK(marking_pairing(s.tuple, sum) ==
              marking_pairing(s.tuple, u) + marking_pairing(s.tuple, up));
    }
}

TEST_CASE("point parameters of a leading tuple are pairwise distinct") {
    auto s = leading_setup(2, 7, 3);
    const auto& u = s.tuple.point_params;
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = i + 1; j < u.size(); ++j) CHECK(!(u[i] == u[j]));
    CHECK(s.tuple.base_shifts.size() == 1);
    CHECK(s.tuple.base_shifts[0].is_zero());
}

TEST_CASE("in_UC: leading tuples pass, degenerate tuples fail") {
    for (auto [p, q, r] : {std::tuple{2, 7, 3}, {2, 5, 4}, {3, 3, 4}}) {
        auto s = leading_setup(p, q, r);
        auto cert = in_UC(s.tuple, 4);
        CHECK(cert.ok);
        CHECK(cert.roots_checked > 0);
        CHECK(cert.min_abs_lower.has_value());
        CHECK(*cert.min_abs_lower > 0);

        // u_1 = u_2 makes the root e_1 - e_2 pair to zero
        MarkedTuple bad = s.tuple;
        bad.point_params[1] = bad.point_params[0];
        auto bc = in_UC(bad, 4);
        CHECK(!bc.ok);
        REQUIRE(bc.failing_root.has_value());
        CHECK(marking_pairing(bad, *bc.failing_root).moment.is_zero());
    }
}

TEST_CASE("in_UC: r points summing to r s_1 fail via alpha_{I,1}") {
    auto s = leading_setup(2, 5, 4);
    MarkedTuple bad = s.tuple;
    // force u_1 + u_2 + u_3 + u_4 = 0 = r * s_1
    FieldElement sum3 = bad.point_params[1] + bad.point_params[2] + bad.point_params[3];
    bad.point_params[0] = -sum3;
    CHECK(!in_UC(bad, 4).ok);
}

TEST_CASE("weyl_act_tuple") {
    auto s = leading_setup(2, 5, 4);
    SUBCASE("identity fixes the tuple") {
        MarkedTuple t = weyl_act_tuple(identity_element(s.ctx), s.tuple);
        CHECK(t.point_params == s.tuple.point_params);
        CHECK(t.base_shifts == s.tuple.base_shifts);
    }
    SUBCASE("transposition swaps point parameters") {
        auto tr = reflection(s.ctx, s.ctx->simple_roots[s.ctx->alpha_index(1)]);
        MarkedTuple t = weyl_act_tuple(tr, s.tuple);
        CHECK(t.point_params[0] == s.tuple.point_params[1]);
        CHECK(t.point_params[1] == s.tuple.point_params[0]);
        for (size_t j = 2; j < t.point_params.size(); ++j)
            CHECK(t.point_params[j] == s.tuple.point_params[j]);
    }
    SUBCASE("acting by w^{-1} scales parameter differences by lambda") {
        // point parameters are only defined up to a common translation, so the
        // eigen-scaling shows up in the differences u_j - u_1
        MarkedTuple t = weyl_act_tuple(s.w.inverse(), s.tuple);
        FieldElement lam = FieldElement::generator(s.field);
        for (size_t j = 1; j < t.point_params.size(); ++j)
            CHECK(t.point_params[j] - t.point_params[0] ==
                  lam * (s.tuple.point_params[j] - s.tuple.point_params[0]));
    }
    SUBCASE("composition convention") {
        auto ctx = s.ctx;
        auto g1 = reflection(ctx, ctx->simple_roots[0]);
        auto g2 = reflection(ctx, ctx->simple_roots[ctx->alpha_index(2)]);
        MarkedTuple lhs = weyl_act_tuple(g1 * g2, s.tuple);
        MarkedTuple rhs = weyl_act_tuple(g2, weyl_act_tuple(g1, s.tuple));
        CHECK(lhs.point_params == rhs.point_params);
        CHECK(lhs.base_shifts == rhs.base_shifts);
    }
}

TEST_CASE("action compatibility on random generator words") {
    auto s = leading_setup(3, 3, 4);
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> pick(0, s.ctx->n - 1);
    for (int trial = 0; trial < 6; ++trial) {
        auto w1 = identity_element(s.ctx);
        auto w2 = identity_element(s.ctx);
        for (int i = 0; i < 3; ++i) {
            w1 = w1 * reflection(s.ctx, s.ctx->simple_roots[pick(rng)]);
            w2 = w2 * reflection(s.ctx, s.ctx->simple_roots[pick(rng)]);
        }
        MarkedTuple lhs = weyl_act_tuple(w1 * w2, s.tuple);
        MarkedTuple rhs = weyl_act_tuple(w2, weyl_act_tuple(w1, s.tuple));
        CHECK(lhs.point_params == rhs.point_params);
        CHECK(lhs.base_shifts == rhs.base_shifts);
    }
}

TEST_CASE("U_C stability under generators") {
    auto s = leading_setup(2, 5, 4);
    REQUIRE(in_UC(s.tuple, 3).ok);
    for (const auto& g : s.ctx->simple_roots) {
        MarkedTuple t = weyl_act_tuple(reflection(s.ctx, g), s.tuple);
        CHECK(in_UC(t, 3).ok);
    }
}

TEST_CASE("tuples_equivalent") {
    auto s = leading_setup(2, 7, 3);
    SUBCASE("identical tuples give a = 1") {
        auto a = tuples_equivalent(s.tuple, s.tuple);
        REQUIRE(a.has_value());
        CHECK(*a == FieldElement(1));
    }
    SUBCASE("eigen-periodicity: w^{-1}-acted tuple gives a = lambda") {
        auto a = tuples_equivalent(s.tuple, weyl_act_tuple(s.w.inverse(), s.tuple));
        REQUIRE(a.has_value());
        CHECK(*a == FieldElement::generator(s.field));
    }
    SUBCASE("scaling the vector scales the tuple") {
        Vec<FieldElement> scaled = s.v;
        for (auto& c : scaled) c = FieldElement(2) * c;
        MarkedTuple t2 = marking_from_vector(s.ctx, s.field, scaled);
        auto a = tuples_equivalent(s.tuple, t2);
        REQUIRE(a.has_value());
        CHECK(*a == FieldElement(2));
    }
    SUBCASE("inequivalent tuples give nullopt") {
        MarkedTuple t2 = s.tuple;
        t2.point_params[0] += FieldElement(1);
        CHECK(!tuples_equivalent(s.tuple, t2).has_value());
    }
}
