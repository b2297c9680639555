#pragma once

#include <optional>

#include "wc/salem.hpp"

namespace wc {

/// A divisor class on the cuspidal curve: degree plus the sum of smooth-point
/// parameters (its coordinate in Pic^0, which is the additive group of the
/// base field).
struct PicClass {
    mpz_class degree;
    FieldElement moment;

    friend PicClass operator+(const PicClass& a, const PicClass& b) {
        return {a.degree + b.degree, a.moment + b.moment};
    }
    friend bool operator==(const PicClass& a, const PicClass& b) {
        return a.degree == b.degree && a.moment == b.moment;
    }
};

/// The tuple (D; c) in exact curve parameters: base shifts s_i with
/// D_i = r[p(s_i)] (s_1 = 0), and point parameters u_j with c_j = p(u_j).
struct MarkedTuple {
    ContextPtr context;
    FieldPtr field;
    std::vector<FieldElement> base_shifts;   // size p-1, s_1 == 0
    std::vector<FieldElement> point_params;  // size q+r
};

/// Builds the tuple induced by a vector v in kappa^perp (coordinates in the
/// basis h_1..h_{p-1}, e_1..e_{q+r}): r t_0 = v.h_1, t_j = v.e_j,
/// u_j = t_j - t_0, s_i = (xi_1 - xi_i)/r.  Rejects v with v.kappa != 0.
MarkedTuple marking_from_vector(ContextPtr ctx, FieldPtr field,
                                const Vec<FieldElement>& v);

/// (degree, moment) of rho(u) for an integer lattice vector u, by linearity.
PicClass marking_pairing(const MarkedTuple& tuple, const Vec<mpz_class>& u);

struct UCCertificate {
    bool ok;
    long bound;
    size_t roots_checked;
    std::optional<Vec<mpz_class>> failing_root;
    // Lower bound on min |moment| over checked roots (coarse interval data;
    // membership itself is decided by exact zero tests only).
    std::optional<mpq_class> min_abs_lower;
};

/// rho(alpha) != 0 for every root enumerated within `bound`.
UCCertificate in_UC(const MarkedTuple& tuple, long bound);

/// The tuple of rho . w (the Weyl action transported through the marking).
MarkedTuple weyl_act_tuple(const WeylElement& w, const MarkedTuple& tuple);

/// The scalar a with moment_{t2}(gamma) = a * moment_{t1}(gamma) for all
/// simple roots gamma, if one exists.
std::optional<FieldElement> tuples_equivalent(const MarkedTuple& t1,
                                              const MarkedTuple& t2);

}  // namespace wc
