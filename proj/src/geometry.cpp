#include "wc/geometry.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace wc {

namespace {

bool proportional(const Vec<FieldElement>& a, const Vec<FieldElement>& b) {
    if (a.size() != b.size()) return false;
    bool a_zero = true, b_zero = true;
    for (const auto& c : a)
        if (!c.is_zero()) a_zero = false;
    for (const auto& c : b)
        if (!c.is_zero()) b_zero = false;
    if (a_zero || b_zero) return false;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (!(a[i] * b[j] == a[j] * b[i])) return false;
    return true;
}

ProjPoint vertex(int r, int j) {
    ProjPoint p{Vec<FieldElement>(r, FieldElement(0))};
    p.coords[j] = FieldElement(1);
    return p;
}

ProjPoint all_ones(int r) { return ProjPoint{Vec<FieldElement>(r, FieldElement(1))}; }

std::vector<ProjPoint> standard_frame(int r) {
    std::vector<ProjPoint> frame;
    for (int j = 0; j < r; ++j) frame.push_back(vertex(r, j));
    frame.push_back(all_ones(r));
    return frame;
}

/// The affine law u -> mu u + nu carrying each point parameter to the next
/// one in the cyclic order u_{r+1} -> ... -> u_{q+r} -> u_1.  The closure
/// condition forces the realized map to act this way on curve parameters.
struct CurveLaw {
    bool ok = false;
    std::string detail;
    FieldElement mu, nu;
};

CurveLaw affine_curve_law(const MarkedTuple& tuple) {
    const auto& ctx = *tuple.context;
    const int r = ctx.r, n = ctx.q + ctx.r;
    CurveLaw law;
    std::vector<FieldElement> seq;  // u_{r+1}, ..., u_n, u_1
    for (int j = r; j < n; ++j) seq.push_back(tuple.point_params[j]);
    seq.push_back(tuple.point_params[0]);
    FieldElement d0 = seq[1] - seq[0];
    if (d0.is_zero()) {
        law.detail = "curve law: repeated point parameters";
        return law;
    }
    law.mu = (seq[2] - seq[1]) / d0;
    law.nu = seq[1] - law.mu * seq[0];
    for (size_t k = 0; k + 1 < seq.size(); ++k)
        if (!(law.mu * seq[k] + law.nu == seq[k + 1])) {
            law.detail = "curve law: parameters do not follow a single affine map";
            return law;
        }
    FieldElement lam = FieldElement::generator(tuple.field);
    if (!(law.mu == lam) && !(law.mu == lam.inverse())) {
        law.detail = "curve law: multiplier is not lambda^{+-1}";
        return law;
    }
    law.ok = true;
    return law;
}

/// Sample parameters t = 2, 3, ... on the curve for which `usable` holds.
std::vector<FieldElement> collect_samples(int count,
                                          const std::function<bool(const FieldElement&)>& usable,
                                          int first = 2) {
    std::vector<FieldElement> out;
    for (int t = first; static_cast<int>(out.size()) < count && t < first + 64 * count; ++t) {
        FieldElement ft(t);
        if (usable(ft)) out.push_back(std::move(ft));
    }
    if (static_cast<int>(out.size()) < count)
        throw std::domain_error("collect_samples: not enough usable curve samples");
    return out;
}

}  // namespace

bool ProjPoint::is_valid() const {
    for (const auto& c : coords)
        if (!c.is_zero()) return true;
    return false;
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return proportional(a.coords, b.coords);
}

bool operator==(const MultiProjPoint& a, const MultiProjPoint& b) {
    if (a.factors.size() != b.factors.size()) return false;
    for (size_t i = 0; i < a.factors.size(); ++i)
        if (!(a.factors[i] == b.factors[i])) return false;
    return true;
}

ProjPoint ProjMatrix::apply(const ProjPoint& x) const {
    return ProjPoint{m * x.coords};
}

bool operator==(const ProjMatrix& a, const ProjMatrix& b) {
    if (a.m.rows() != b.m.rows() || a.m.cols() != b.m.cols()) return false;
    Vec<FieldElement> fa, fb;
    for (int i = 0; i < a.m.rows(); ++i)
        for (int j = 0; j < a.m.cols(); ++j) {
            fa.push_back(a.m(i, j));
            fb.push_back(b.m(i, j));
        }
    return proportional(fa, fb);
}

ProjPoint embed_point(int r, const FieldElement& u, const FieldElement& s) {
    if (r < 3) throw std::invalid_argument("embed_point: r >= 3 required");
    FieldElement z = u - s;
    Vec<FieldElement> c;
    c.reserve(r);
    FieldElement pw(1);
    for (int k = 0; k <= r - 2; ++k) {
        c.push_back(pw);
        pw *= z;
    }
    c.push_back(pw * z);  // z^r; the z^{r-1} term is skipped
    return ProjPoint{std::move(c)};
}

MultiProjPoint embed_multi(const MarkedTuple& tuple, const FieldElement& u) {
    MultiProjPoint out;
    for (const auto& s : tuple.base_shifts)
        out.factors.push_back(embed_point(tuple.context->r, u, s));
    return out;
}

Configuration build_configuration(const MarkedTuple& tuple) {
    Configuration cfg;
    cfg.tuple = tuple;
    for (const auto& u : tuple.point_params) cfg.points.push_back(embed_multi(tuple, u));
    return cfg;
}

bool hyperplane_rank_check(const std::vector<ProjPoint>& pts, int r) {
    const int n = static_cast<int>(pts.size());
    if (n < r) return true;
    for (const auto& p : pts)
        if (static_cast<int>(p.coords.size()) != r)
            throw std::invalid_argument("hyperplane_rank_check: wrong ambient dimension");
    std::vector<int> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        Mat<FieldElement> m(r, r);
        for (int c = 0; c < r; ++c)
            for (int i = 0; i < r; ++i) m(i, c) = pts[idx[c]].coords[i];
        if (determinant(m).is_zero()) return false;
        // next r-combination of {0..n-1}
        int k = r - 1;
        while (k >= 0 && idx[k] == n - r + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int i = k + 1; i < r; ++i) idx[i] = idx[i - 1] + 1;
    }
    return true;
}

ProjPoint cremona_apply(const ProjPoint& x) {
    const int r = static_cast<int>(x.coords.size());
    int zeros = 0;
    for (const auto& c : x.coords)
        if (c.is_zero()) ++zeros;
    if (zeros >= 2)
        throw std::domain_error("cremona_apply: point in the indeterminacy locus");
    Vec<FieldElement> out(r, FieldElement(1));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (j != i) out[i] *= x.coords[j];
    return ProjPoint{std::move(out)};
}

MultiProjPoint multi_cremona_apply(const MultiProjPoint& x) {
    if (x.factors.empty()) throw std::invalid_argument("multi_cremona_apply: empty point");
    const auto& X = x.factors[0].coords;
    const int r = static_cast<int>(X.size());
    // prod_{k != j} X_k for each j
    Vec<FieldElement> cofac(r, FieldElement(1));
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k)
            if (k != j) cofac[j] *= X[k];
    MultiProjPoint out;
    out.factors.push_back(ProjPoint{cofac});
    for (size_t i = 1; i < x.factors.size(); ++i) {
        const auto& Y = x.factors[i].coords;
        if (Y.size() != X.size())
            throw std::invalid_argument("multi_cremona_apply: mismatched factors");
        Vec<FieldElement> c(r);
        for (int j = 0; j < r; ++j) c[j] = Y[j] * cofac[j];
        out.factors.push_back(ProjPoint{std::move(c)});
    }
    for (const auto& f : out.factors)
        if (!f.is_valid())
            throw std::domain_error("multi_cremona_apply: point in the indeterminacy locus");
    return out;
}

namespace {

/// Columns mu_i * p_i with A * mu = p_{r+1}: the scaled frame whose inverse
/// sends the correspondences to the standard frame.
Mat<FieldElement> scaled_frame(const std::vector<ProjPoint>& pts) {
    const int r = static_cast<int>(pts[0].coords.size());
    Mat<FieldElement> a(r, r);
    for (int c = 0; c < r; ++c) {
        if (static_cast<int>(pts[c].coords.size()) != r)
            throw std::invalid_argument("pgl_from_correspondences: mixed dimensions");
        for (int i = 0; i < r; ++i) a(i, c) = pts[c].coords[i];
    }
    Vec<FieldElement> mu = solve(a, pts[r].coords);  // throws if degenerate
    for (const auto& m : mu)
        if (m.is_zero())
            throw std::domain_error("pgl_from_correspondences: frame not in general position");
    Mat<FieldElement> b(r, r);
    for (int c = 0; c < r; ++c)
        for (int i = 0; i < r; ++i) b(i, c) = mu[c] * a(i, c);
    return b;
}

}  // namespace

ProjMatrix pgl_from_correspondences(const std::vector<ProjPoint>& source,
                                    const std::vector<ProjPoint>& target) {
    if (source.empty() || source.size() != target.size())
        throw std::invalid_argument("pgl_from_correspondences: size mismatch");
    const int r = static_cast<int>(source[0].coords.size());
    if (static_cast<int>(source.size()) != r + 1)
        throw std::invalid_argument("pgl_from_correspondences: need r+1 correspondences");
    Mat<FieldElement> bs = scaled_frame(source);
    Mat<FieldElement> bt = scaled_frame(target);
    return ProjMatrix{bt * inverse(bs)};
}

RealizationCertificate realize_coxeter(const MarkedTuple& tuple) {
    const auto& ctx = *tuple.context;
    if (ctx.p != 2) throw std::invalid_argument("realize_coxeter: requires p = 2");
    const int r = ctx.r, n = ctx.q + ctx.r;
    RealizationCertificate cert;
    cert.ok = false;
    cert.factor_map = {0};

    CurveLaw law = affine_curve_law(tuple);
    if (!law.ok) {
        cert.detail = law.detail;
        return cert;
    }
    cert.scaling = law.mu;

    std::vector<ProjPoint> raw;
    for (const auto& u : tuple.point_params)
        raw.push_back(embed_point(r, u, tuple.base_shifts[0]));

    // normalize: P_1..P_r to the coordinate simplex, P_{r+1} to all-ones
    ProjMatrix N;
    try {
        N = pgl_from_correspondences({raw.begin(), raw.begin() + r + 1}, standard_frame(r));
    } catch (const std::domain_error& e) {
        cert.detail = std::string("normalization failed: ") + e.what();
        return cert;
    }
    std::vector<ProjPoint> P;
    for (const auto& x : raw) P.push_back(N.apply(x));

    // linear part g: P_1..P_{r+1} -> P_2..P_{r+2}
    ProjMatrix g;
    try {
        g = pgl_from_correspondences({P.begin(), P.begin() + r + 1},
                                     {P.begin() + 1, P.begin() + r + 2});
    } catch (const std::domain_error& e) {
        cert.detail = std::string("linear part not solvable: ") + e.what();
        return cert;
    }
    cert.matrix = g.m;

    // closure: (g . gamma)(P_j) = P_{j+1} cyclically for the non-center points
    for (int j = r; j < n; ++j) {
        ProjPoint img;
        try {
            img = g.apply(cremona_apply(P[j]));
        } catch (const std::domain_error&) {
            cert.detail = "closure failed: image point is indeterminate";
            return cert;
        }
        if (!(img == P[(j + 1) % n])) {
            cert.detail = "closure failed at point " + std::to_string(j + 1);
            return cert;
        }
    }

    // the realized map restricts to the curve as t -> mu t + nu; enough
    // exact samples to pin the identity between two maps of bounded degree
    auto phi = [&](const FieldElement& t) {
        return N.apply(embed_point(r, t, tuple.base_shifts[0]));
    };
    auto usable = [&](const FieldElement& t) {
        try {
            cremona_apply(phi(t));
        } catch (const std::domain_error&) {
            return false;
        }
        return true;
    };
    try {
        for (const auto& t : collect_samples(r * r + 2, usable))
            if (!(g.apply(cremona_apply(phi(t))) == phi(law.mu * t + law.nu))) {
                cert.detail = "curve self-map is not the expected scaling";
                return cert;
            }
    } catch (const std::domain_error& e) {
        cert.detail = e.what();
        return cert;
    }

    cert.ok = true;
    return cert;
}

RealizationCertificate realize_multi(const MarkedTuple& tuple) {
    const auto& ctx = *tuple.context;
    if (ctx.p < 3) throw std::invalid_argument("realize_multi: requires p >= 3");
    const int r = ctx.r, n = ctx.q + ctx.r, nf = ctx.p - 1;
    RealizationCertificate cert;
    cert.ok = false;

    CurveLaw law = affine_curve_law(tuple);
    if (!law.ok) {
        cert.detail = law.detail;
        return cert;
    }
    cert.scaling = law.mu;

    // per-factor normalization to standard coordinates: P_1..P_r at the
    // diagonal images of the simplex vertices, P_{r+1} at the diagonal ones
    std::vector<ProjMatrix> N(nf);
    for (int i = 0; i < nf; ++i) {
        std::vector<ProjPoint> src;
        for (int j = 0; j <= r; ++j)
            src.push_back(embed_point(r, tuple.point_params[j], tuple.base_shifts[i]));
        try {
            N[i] = pgl_from_correspondences(src, standard_frame(r));
        } catch (const std::domain_error& e) {
            cert.detail = std::string("normalization failed: ") + e.what();
            return cert;
        }
    }
    auto phi = [&](const FieldElement& t) {
        MultiProjPoint out;
        for (int i = 0; i < nf; ++i)
            out.factors.push_back(N[i].apply(embed_point(r, t, tuple.base_shifts[i])));
        return out;
    };
    std::vector<MultiProjPoint> P;
    for (const auto& u : tuple.point_params) P.push_back(phi(u));

    auto usable = [&](const FieldElement& t) {
        try {
            multi_cremona_apply(phi(t));
        } catch (const std::domain_error&) {
            return false;
        }
        return true;
    };
    std::vector<FieldElement> solve_samples, check_samples;
    try {
        auto all = collect_samples(2 * (r + 1) + r * r + r + 2, usable);
        solve_samples.assign(all.begin(), all.begin() + 2 * (r + 1));
        check_samples.assign(all.begin() + 2 * (r + 1), all.end());
    } catch (const std::domain_error& e) {
        cert.detail = e.what();
        return cert;
    }

    std::vector<int> tau(nf);
    std::iota(tau.begin(), tau.end(), 0);
    std::string last_detail = "no factor permutation closed the correspondences";
    do {
        // solve the per-factor linear parts from curve samples
        std::vector<ProjMatrix> A(nf);
        bool solved = true;
        for (int i = 0; i < nf && solved; ++i) {
            solved = false;
            // slide a window over the sample pool until the frame is generic
            for (size_t w = 0; w + r + 1 <= solve_samples.size(); ++w) {
                std::vector<ProjPoint> src, tgt;
                for (int s = 0; s <= r; ++s) {
                    const FieldElement& t = solve_samples[w + s];
                    src.push_back(multi_cremona_apply(phi(t)).factors[tau[i]]);
                    tgt.push_back(phi(law.mu * t + law.nu).factors[i]);
                }
                try {
                    A[i] = pgl_from_correspondences(src, tgt);
                    solved = true;
                    break;
                } catch (const std::domain_error&) {
                }
            }
        }
        if (!solved) {
            last_detail = "linear part not solvable from curve samples";
            continue;
        }
        auto F = [&](const MultiProjPoint& x) {
            MultiProjPoint psi = multi_cremona_apply(x);
            MultiProjPoint out;
            for (int i = 0; i < nf; ++i) out.factors.push_back(A[i].apply(psi.factors[tau[i]]));
            return out;
        };
        bool ok = true;
        for (int j = r; j < n && ok; ++j) {
            try {
                ok = F(P[j]) == P[(j + 1) % n];
            } catch (const std::domain_error&) {
                ok = false;
            }
            if (!ok) last_detail = "closure failed at point " + std::to_string(j + 1);
        }
        for (const auto& t : check_samples) {
            if (!ok) break;
            ok = F(phi(t)) == phi(law.mu * t + law.nu);
            if (!ok) last_detail = "curve self-map is not the expected scaling";
        }
        if (ok) {
            cert.ok = true;
            cert.factor_map = tau;
            // block matrix: block row i holds A_i in block column tau[i]
            cert.matrix = Mat<FieldElement>(nf * r, nf * r);
            for (int i = 0; i < nf; ++i)
                for (int a = 0; a < r; ++a)
                    for (int b = 0; b < r; ++b)
                        cert.matrix(i * r + a, tau[i] * r + b) = A[i].m(a, b);
            return cert;
        }
    } while (std::next_permutation(tau.begin(), tau.end()));

    cert.detail = last_detail;
    return cert;
}

FieldElement curve_selfmap_scalar(const RealizationCertificate& cert,
                                  const MarkedTuple& tuple) {
    if (!cert.ok) throw std::domain_error("curve_selfmap_scalar: invalid certificate");
    CurveLaw law = affine_curve_law(tuple);
    if (!law.ok) throw std::domain_error("curve_selfmap_scalar: " + law.detail);
    if (!(law.mu == cert.scaling))
        throw std::domain_error("curve_selfmap_scalar: certificate scaling mismatch");
    return law.mu;
}

}  // namespace wc
