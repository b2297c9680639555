#include "doctest.h"

#include "wc/geometry.hpp"

using namespace wc;

namespace {

struct Setup {
    ContextPtr ctx;
    FieldPtr field;
    WeylElement w;
    MarkedTuple tuple;
};

Setup leading_setup(int p, int q, int r) {
    auto ctx = build_lattice(p, q, r);
    auto w = coxeter_element(ctx);
    auto field = make_salem_field(strip_cyclotomic(char_poly(w)).remainder);
    auto tuple = marking_from_vector(ctx, field, leading_eigenvector(w, field));
    return {ctx, field, w, std::move(tuple)};
}

ProjPoint pp(std::vector<int> c) {
    Vec<FieldElement> v;
    for (int x : c) v.emplace_back(x);
    return ProjPoint{std::move(v)};
}

}  // namespace

TEST_CASE("projective point equality is scale invariant") {
    CHECK(pp({1, 2, 3}) == pp({2, 4, 6}));
    CHECK(pp({-1, -2, -3}) == pp({1, 2, 3}));
    CHECK(!(pp({1, 2, 3}) == pp({1, 2, 4})));
    CHECK(!(pp({1, 0, 0}) == pp({0, 1, 0})));
    CHECK(!pp({0, 0, 0}).is_valid());
    CHECK(!(pp({0, 0, 0}) == pp({0, 0, 0})));  // the zero vector is not a point
}

TEST_CASE("embed_point structure") {
    // z = 2, r = 4: [1 : 2 : 4 : 16] (z^3 skipped)
    ProjPoint x = embed_point(4, FieldElement(2), FieldElement(0));
    CHECK(x == pp({1, 2, 4, 16}));
    // the shift is subtracted: u = 5, s = 3 gives z = 2 again
    CHECK(embed_point(4, FieldElement(5), FieldElement(3)) == x);
    CHECK_THROWS_AS(embed_point(2, FieldElement(1), FieldElement(0)),
                    std::invalid_argument);
}

TEST_CASE("hyperplane sections of the embedded curve have zero parameter sum") {
    // r = 3 embedding [1 : z : z^3]: three points are collinear iff their
    // parameters sum to zero
    auto at = [](int z) { return embed_point(3, FieldElement(z), FieldElement(0)); };
    CHECK(!hyperplane_rank_check({at(1), at(2), at(-3)}, 3));   // 1+2-3 = 0
    CHECK(hyperplane_rank_check({at(1), at(2), at(3)}, 3));
    CHECK(hyperplane_rank_check({at(1), at(2), at(-3), at(5)}, 3) == false);
    CHECK(hyperplane_rank_check({at(1), at(2), at(4), at(5)}, 3));
}

TEST_CASE("cremona_apply") {
    // squares on the involution's fixed locus and is an involution generally
    CHECK(cremona_apply(pp({1, 1, 1})) == pp({1, 1, 1}));
    ProjPoint x = pp({2, 3, 5});
    CHECK(cremona_apply(cremona_apply(x)) == x);
    CHECK(cremona_apply(x) == pp({15, 10, 6}));
    // one zero coordinate: contracted to the opposite vertex
    CHECK(cremona_apply(pp({0, 3, 5})) == pp({1, 0, 0}));
    CHECK_THROWS_AS(cremona_apply(pp({0, 0, 5})), std::domain_error);
}

TEST_CASE("multi_cremona_apply matches the displayed formula") {
    MultiProjPoint x{{pp({2, 3, 5}), pp({7, 11, 13})}};
    MultiProjPoint y = multi_cremona_apply(x);
    // factor 1: [1/2 : 1/3 : 1/5] ~ [15 : 10 : 6]
    CHECK(y.factors[0] == pp({15, 10, 6}));
    // factor 2: [7/2 : 11/3 : 13/5] ~ [105 : 110 : 78]
    CHECK(y.factors[1] == pp({105, 110, 78}));
    // involution away from the base locus
    CHECK(multi_cremona_apply(y) == x);
    CHECK_THROWS_AS(multi_cremona_apply(MultiProjPoint{{pp({0, 0, 5}), pp({1, 1, 1})}}),
                    std::domain_error);
    // one zero in the first factor and a matching zero in another factor
    CHECK_THROWS_AS(multi_cremona_apply(MultiProjPoint{{pp({0, 3, 5}), pp({0, 1, 1})}}),
                    std::domain_error);
}

TEST_CASE("pgl_from_correspondences") {
    // maps the standard frame to prescribed points and is projectively exact
    std::vector<ProjPoint> frame = {pp({1, 0, 0}), pp({0, 1, 0}), pp({0, 0, 1}),
                                    pp({1, 1, 1})};
    std::vector<ProjPoint> target = {pp({1, 2, 3}), pp({0, 1, 1}), pp({1, 0, 2}),
                                     pp({1, 2, 6})};
    ProjMatrix m = pgl_from_correspondences(frame, target);
    for (int i = 0; i < 4; ++i) CHECK(m.apply(frame[i]) == target[i]);
    // degenerate target (three collinear points) is rejected
    std::vector<ProjPoint> bad = {pp({1, 0, 0}), pp({0, 1, 0}), pp({1, 1, 0}),
                                  pp({1, 1, 1})};
    CHECK_THROWS_AS(pgl_from_correspondences(frame, bad), std::domain_error);
    CHECK_THROWS_AS(pgl_from_correspondences(frame, {target[0], target[1]}),
                    std::invalid_argument);
}

TEST_CASE("configurations of leading tuples are in general position") {
    for (auto [p, q, r] : {std::tuple{2, 7, 3}, {2, 5, 4}, {3, 3, 4}}) {
        auto s = leading_setup(p, q, r);
        Configuration cfg = build_configuration(s.tuple);
        CHECK(cfg.points.size() == s.tuple.point_params.size());
        for (int f = 0; f < p - 1; ++f) {
            std::vector<ProjPoint> factor_pts;
            for (const auto& pt : cfg.points) factor_pts.push_back(pt.factors[f]);
            CHECK(hyperplane_rank_check(factor_pts, r));
        }
    }
}

TEST_CASE("realize_coxeter closes for the p = 2 Salem examples") {
    for (auto [p, q, r] : {std::tuple{2, 7, 3}, {2, 5, 4}, {2, 3, 7}}) {
        CAPTURE(q);
        CAPTURE(r);
        auto s = leading_setup(p, q, r);
        auto cert = realize_coxeter(s.tuple);
        CHECK_MESSAGE(cert.ok, cert.detail);
        // the curve self-map scalar is lambda or its inverse
        FieldElement lam = FieldElement::generator(s.field);
        FieldElement mu = curve_selfmap_scalar(cert, s.tuple);
        CHECK((mu == lam || mu == lam.inverse()));
        CHECK(mu == cert.scaling);
    }
}

TEST_CASE("realize_coxeter fails for a perturbed tuple") {
    auto s = leading_setup(2, 7, 3);
    MarkedTuple bad = s.tuple;
    bad.point_params[s.ctx->q + s.ctx->r - 1] += FieldElement(1);
    auto cert = realize_coxeter(bad);
    CHECK(!cert.ok);
    CHECK(!cert.detail.empty());
}

TEST_CASE("realize_coxeter rejects p != 2") {
    auto s = leading_setup(3, 3, 4);
    CHECK_THROWS_AS(realize_coxeter(s.tuple), std::invalid_argument);
    CHECK_THROWS_AS(realize_multi(leading_setup(2, 7, 3).tuple), std::invalid_argument);
}

TEST_CASE("realize_multi closes for (3,3,4)") {
    auto s = leading_setup(3, 3, 4);
    auto cert = realize_multi(s.tuple);
    CHECK_MESSAGE(cert.ok, cert.detail);
    FieldElement lam = FieldElement::generator(s.field);
    FieldElement mu = curve_selfmap_scalar(cert, s.tuple);
    CHECK((mu == lam || mu == lam.inverse()));
    CHECK(cert.factor_map.size() == 2);
}

TEST_CASE("realize_multi fails for a perturbed tuple") {
    auto s = leading_setup(3, 3, 4);
    MarkedTuple bad = s.tuple;
    bad.point_params.back() += FieldElement(1);
    auto cert = realize_multi(bad);
    CHECK(!cert.ok);
}
