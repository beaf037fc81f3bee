#ifndef BETAINV_LE_NUMBERS_HPP
#define BETAINV_LE_NUMBERS_HPP

#include <cstddef>

#include "betainv/ideal.hpp"

namespace betainv {

/// Validated input for the Lê-number pipeline: f with a one-dimensional
/// critical locus, a distinguished coordinate z0 whose hyperplane slices
/// the critical locus properly, the Jacobian-tail ideal
/// (∂f/∂z_i, i != z0) and the relative polar ideal obtained from it by
/// saturating away the components inside the critical locus.
struct SingularitySetup {
  RingPtr ring;
  Polynomial f;
  std::size_t z0_index;

  Ideal jacobian_tail;
  Polynomial dfdz0;
  bool dfdz0_is_zero = false;  // f independent of z0; polar is empty by convention

  Ideal polar;
  int saturation_exponent = 0;

  std::size_t tail_dimension = 0;  // local Krull dimension of the tail quotient (== 1)
  Int slice_tail_dim;              // dim of O/(tail + z0), finite by admissibility
  Int slice_mu;                    // Milnor number of f|_{V(z0)}, equal to slice_tail_dim

  SingularitySetup(RingPtr r, Polynomial func, std::size_t z0, Ideal tail, Polynomial d0,
                   Ideal pol)
      : ring(std::move(r)),
        f(std::move(func)),
        z0_index(z0),
        jacobian_tail(std::move(tail)),
        dfdz0(std::move(d0)),
        polar(std::move(pol)) {}
};

/// Builds the setup and verifies the hypotheses: f(0) = 0, the critical
/// locus and the Jacobian-tail locus are one-dimensional at the origin,
/// and f restricted to V(z0) has an isolated critical point. Throws
/// AdmissibilityError with the matching REJECT_* reason otherwise.
SingularitySetup admissibility_check(const Polynomial& f, std::size_t z0_index,
                                     const EngineOptions& opts = {});

/// The relative polar ideal Γ¹ (unit ideal when the polar curve is empty).
const Ideal& polar_ideal(const SingularitySetup& setup);

/// λ⁰ = dim O/(Γ¹ + (∂f/∂z0)): intersection number of the polar curve
/// with V(∂f/∂z0) at the origin.
Int le_number_0(const SingularitySetup& setup, const EngineOptions& opts = {});

/// λ¹ = dim O/(tail + (z0)) − dim O/(Γ¹ + (z0)): intersection number of
/// the 1-dimensional Lê cycle with V(z0), by additivity of the cycle
/// decomposition of the tail scheme.
Int le_number_1(const SingularitySetup& setup, const EngineOptions& opts = {});

/// Milnor number of f|_{V(z0)} at the origin.
Int slice_milnor(const SingularitySetup& setup);

}  // namespace betainv

#endif
