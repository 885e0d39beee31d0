#pragma once

#include "zetadet/ktheory.hpp"
#include "zetadet/number_field.hpp"
#include "zetadet/special_fn.hpp"

namespace zetadet {

enum class DetMethod { Spectral, ClosedForm };

struct DetValue {
    ComplexScalar value;
    DetMethod method = DetMethod::ClosedForm;
    ComplexScalar s;
    Signature sig;
};

// Partial Dirichlet series over the two congruence classes of the spectrum,
// reduced to the Hurwitz zeta:
//   phi1(w,s) = sum_{k>=1} (2k+s)^{-w}   = 2^{-w} zeta(w, 1+s/2),
//   phi2(w,s) = sum_{k>=0} (2k+1+s)^{-w} = 2^{-w} zeta(w, (s+1)/2).
// Domains: Re(s) > -2 resp. Re(s) > -1, w != 1.
ComplexScalar phi1(ComplexScalar w, ComplexScalar s, const PrecisionConfig& cfg = {});
ComplexScalar phi2(ComplexScalar w, ComplexScalar s, const PrecisionConfig& cfg = {});

// Full spectral zeta function of the operator:
//   phi_A(w,s) = (s-1/2)^{-w} + (r1+r2-1) s^{-w} + (r1+r2) phi1 + r2 phi2.
// Requires s not in {0, 1/2}, Re(s) > -1, w != 1.
ComplexScalar phi_A(ComplexScalar w, ComplexScalar s, const Signature& sig,
                    const PrecisionConfig& cfg = {});

// Regularized product over the first congruence class.
// Spectral: exp((log 2) zeta(0,1+s/2) - zeta'(0,1+s/2)), Re(s) > -2.
// Closed:   s^{-1} Gamma_R(s)^{-1} (sqrt(2 pi))^{-s} 2 sqrt(pi), s != 0.
ComplexScalar regprod1(ComplexScalar s, DetMethod method, const PrecisionConfig& cfg = {});

// Regularized product over the second congruence class.
// Spectral: exp((log 2) zeta(0,(s+1)/2) - zeta'(0,(s+1)/2)), Re(s) > -1.
// Closed:   Gamma_R(s+1)^{-1} (sqrt(2 pi))^{-s} sqrt(2); vanishes at the
//           poles of Gamma_R(s+1) rather than erroring.
ComplexScalar regprod2(ComplexScalar s, DetMethod method, const PrecisionConfig& cfg = {});

// C(K) = (2 sqrt(pi))^{r1} (2 sqrt(2 pi))^{r2}, a positive real.
ComplexScalar constant_C(const Signature& sig);

// Spectral route: (s-1/2) s^{r1+r2-1} regprod1^{r1+r2} regprod2^{r2}.
// Requires Re(s) > -1 and s != 0. Exactly 0 at s = 1/2.
DetValue det_spectral(ComplexScalar s, const Signature& sig, const PrecisionConfig& cfg = {});

// Closed gamma-factor route:
//   (s-1/2) s^{-1} [Gamma_R(s)^{r1} Gamma_C(s)^{r2} (sqrt(2 pi))^{deg s}]^{-1} C(K).
// Requires s != 0; returns exact 0 where the reciprocal gamma factors vanish.
DetValue det_closed(ComplexScalar s, const Signature& sig);

}  // namespace zetadet
