#pragma once

#include <complex>

#include "zetadet/errors.hpp"

namespace zetadet {

// Double-precision complex value used throughout the analytic layer.
using ComplexScalar = std::complex<double>;

// Truncation parameters of the Euler-Maclaurin Hurwitz engine and the step
// of the finite-difference derivative oracle. Defaults give >= 12 correct
// digits for Re(x) >= 0.1, |w| <= 20.
struct PrecisionConfig {
    int em_shift = 30;      // number of directly summed terms N, >= 8
    int em_order = 12;      // highest Bernoulli correction order M, even, in [2,20]
    double fd_step = 1e-5;  // finite-difference step h, 0 < h < 1e-2

    void validate() const;  // throws DomainError on violation
};

// Principal branch of log Gamma(z), continuous on C minus the cut (-inf,0].
// Nonpositive integers raise PoleError; other points of the cut raise
// DomainError (negative non-integer reals are rejected, not continued).
ComplexScalar log_gamma(ComplexScalar z);

// Gamma_R(s) = Gamma(s/2) pi^{-s/2}. PoleError at s in {0,-2,-4,...}.
ComplexScalar gamma_R(ComplexScalar s);

// Gamma_C(s) = Gamma(s) 2 (2 pi)^{-s}. PoleError at s in {0,-1,-2,...}.
ComplexScalar gamma_C(ComplexScalar s);

// Reciprocal gamma factors. Entire in effect: they return exact 0 at the
// poles of the corresponding factor instead of raising.
ComplexScalar inv_gamma_R(ComplexScalar s);
ComplexScalar inv_gamma_C(ComplexScalar s);

// Analytic continuation of zeta(w,x) = sum_{k>=0} (k+x)^{-w} computed by
// Euler-Maclaurin summation. Requires Re(x) > 0 (DomainError) and w != 1
// (PoleError). Every power uses the principal branch of log(k+x).
ComplexScalar hurwitz_zeta(ComplexScalar w, ComplexScalar x, const PrecisionConfig& cfg = {});

// d/dw zeta(w,x) at w=0, closed form log Gamma(x) - (1/2) log(2 pi).
// Requires Re(x) > 0.
ComplexScalar hurwitz_zeta_dw_at0(ComplexScalar x);

// Regularized product of (n+x) over n >= 0: exp(-zeta'(0,x)) = sqrt(2 pi)/Gamma(x).
ComplexScalar lerch_regprod(ComplexScalar x);

}  // namespace zetadet
