#pragma once

#include "wc/marking.hpp"

namespace wc {

/// A point of P^{r-1} with exact coordinates in Q(lambda), stored
/// unnormalized; equality is projective (all 2x2 minors vanish).
struct ProjPoint {
    Vec<FieldElement> coords;

    int dim() const { return static_cast<int>(coords.size()) - 1; }
    bool is_valid() const;  // not the zero vector
    friend bool operator==(const ProjPoint& a, const ProjPoint& b);
};

/// A point of a product (P^{r-1})^{p-1}, one projective factor per entry.
struct MultiProjPoint {
    std::vector<ProjPoint> factors;

    friend bool operator==(const MultiProjPoint& a, const MultiProjPoint& b);
};

/// A projective-linear map of P^{r-1}, stored as an (r x r) matrix over
/// Q(lambda) acting on column vectors; equality is up to scalar.
struct ProjMatrix {
    Mat<FieldElement> m;

    ProjPoint apply(const ProjPoint& x) const;
    friend bool operator==(const ProjMatrix& a, const ProjMatrix& b);
};

/// Embeds a curve parameter u (with per-factor shift s) on the cuspidal
/// curve of degree r in P^{r-1}: z = u - s,
/// [1 : z : z^2 : ... : z^{r-2} : z^r]  (the z^{r-1} term is skipped).
ProjPoint embed_point(int r, const FieldElement& u, const FieldElement& s);

/// The point of the product space marked by parameter u: factor i uses base
/// shift s_i from the tuple.
MultiProjPoint embed_multi(const MarkedTuple& tuple, const FieldElement& u);

/// The full configuration of a marked tuple: one multi-projective point per
/// point parameter u_1..u_{q+r}.
struct Configuration {
    MarkedTuple tuple;
    std::vector<MultiProjPoint> points;  // points[j][factor]
};

Configuration build_configuration(const MarkedTuple& tuple);

/// True when every set of r of the given points (within one projective
/// factor) spans P^{r-1}, i.e. every r x r coordinate minor matrix built
/// from distinct points is nonsingular.  Exhaustive over all r-subsets.
bool hyperplane_rank_check(const std::vector<ProjPoint>& pts, int r);

/// The standard degree-(r-1) Cremona involution of P^{r-1} centered at the
/// coordinate simplex: x_i -> prod_{j != i} x_j.  Throws if the point has
/// fewer than two nonzero coordinates (indeterminacy locus).
ProjPoint cremona_apply(const ProjPoint& x);

/// Componentwise map Psi of the product space used for p >= 3: the first
/// factor is inverted coordinatewise and the remaining factors are divided
/// componentwise by the first factor (denominators cleared, so each output
/// coordinate is a polynomial in the inputs).
MultiProjPoint multi_cremona_apply(const MultiProjPoint& x);

/// Solves for the projective-linear map of P^{r-1} sending source[i] to
/// target[i] for r+1 correspondences in general position (classical scaling
/// method).  Throws std::domain_error if the sources are degenerate or no
/// such map exists.
ProjMatrix pgl_from_correspondences(const std::vector<ProjPoint>& source,
                                    const std::vector<ProjPoint>& target);

struct RealizationCertificate {
    bool ok;
    std::string detail;           // human-readable failure reason when !ok
    FieldElement scaling;         // curve self-map scalar mu (lambda^{+-1})
    Mat<FieldElement> matrix;     // the linear part g (block map for p >= 3)
    std::vector<int> factor_map;  // tau: output factor i pulls from factor tau[i]
};

/// p = 2 realization: normalizes the first r points to the coordinate
/// simplex and point r+1 to the all-ones point, finds the projective map g
/// with g(gamma(P_j)) = P_{j+1} (gamma the Cremona involution), and
/// certifies the closure (g . gamma)(P_n) = P_1 exactly.
RealizationCertificate realize_coxeter(const MarkedTuple& tuple);

/// p >= 3 realization through the componentwise map Psi and a per-factor
/// linear map; searches mu in {lambda, lambda^{-1}} and cyclic permutations
/// of the factors.
RealizationCertificate realize_multi(const MarkedTuple& tuple);

/// The scalar mu with the property that the realized map acts on curve
/// parameters as u -> mu u; certified against lambda^{+-1}.
FieldElement curve_selfmap_scalar(const RealizationCertificate& cert,
                                  const MarkedTuple& tuple);

}  // namespace wc
