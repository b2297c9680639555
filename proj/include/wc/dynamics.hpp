#pragma once

#include "wc/geometry.hpp"

namespace wc {

inline bool poly_scalar_zero(const FieldElement& x) { return x.is_zero(); }

/// Univariate polynomials over Q(lambda) (line restrictions of the maps).
using FPoly = Poly<FieldElement>;

/// gcd over Q(lambda)[t], returned monic (zero if both inputs are zero).
FPoly field_poly_gcd(FPoly a, FPoly b);

/// Predicted multidegree matrices of the iterates on cohomology:
/// result[k-1](a, b) = coefficient of h_b in w^k(h_a), for k = 1..iters.
/// For p = 2 these are 1 x 1 (the classical degree sequence).
std::vector<Mat<mpz_class>> predicted_degrees(const WeylElement& w, int iters);

/// Measures the multidegrees of iterates of the realized map by restricting
/// to a random line contained in one input factor and tracking coordinate
/// polynomial degrees after gcd cancellation at every step.  Entry (a, b) of
/// result[k-1] is the degree of the factor-a coordinates of the k-th iterate
/// along a line varying only in factor b.
std::vector<Mat<mpz_class>> measure_degrees(const RealizationCertificate& cert,
                                            const MarkedTuple& tuple, int iters,
                                            unsigned seed);

struct DegreeReport {
    int iterations = 0;
    bool match = false;              // exact per-iterate equality with predictions
    bool inverse_direction = false;  // predictions matched w^{-1} rather than w
    bool growth_ok = false;          // K-th root of the last degree is near lambda
    std::vector<Mat<mpz_class>> predicted;
    std::vector<Mat<mpz_class>> measured;
    std::string detail;
};

/// Measures with two independent seeds (requiring agreement), compares
/// exactly with the predictions from w and from w^{-1}, and checks that the
/// K-th root of the largest final degree lies within `tol` of lambda.
DegreeReport compare_degree_growth(const WeylElement& w,
                                   const RealizationCertificate& cert,
                                   const MarkedTuple& tuple, int iters,
                                   unsigned seed, const mpq_class& tol);

}  // namespace wc
