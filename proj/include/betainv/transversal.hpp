#ifndef BETAINV_TRANSVERSAL_HPP
#define BETAINV_TRANSVERSAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "betainv/basis.hpp"
#include "betainv/poly.hpp"

namespace betainv {

/// Polynomial branch parametrization φ: one univariate image per ambient
/// variable, φ(0) = 0, not all images zero.
struct BranchParam {
  RingPtr t_ring;  // single-variable ring
  std::vector<Polynomial> images;

  BranchParam(RingPtr t, std::vector<Polynomial> imgs, std::size_t ambient_vars);

  /// Composition g∘φ as a univariate polynomial.
  Polynomial compose(const Polynomial& g) const;
  std::vector<Rat> point_at(const Rat& t) const;
  std::vector<Rat> tangent_at(const Rat& t) const;
  /// Minimal t-order over the coordinate images; 1 exactly when the
  /// branch is immersed (smooth) at the origin.
  int min_order() const;
};

/// A declared irreducible component C of the critical locus: defining
/// ideal generators plus one branch parametrization.
struct ComponentDecl {
  std::string name;
  std::vector<Polynomial> ideal_gens;
  BranchParam param;
};

struct ComponentCheck {
  bool f_vanishes = false;        // f∘φ = 0
  bool partials_vanish = false;   // every ∂f/∂z_i ∘ φ = 0 (C inside the critical locus)
  bool ideal_vanishes = false;    // every declared generator ∘ φ = 0
  bool param_valid = false;       // φ(0) = 0 and φ nonconstant

  bool all() const { return f_vanishes && partials_vanish && ideal_vanishes && param_valid; }
  std::string summary() const;
};

ComponentCheck verify_component(const Polynomial& f, const ComponentDecl& decl);

/// t-adic order of g∘φ; throws NonProperError when g vanishes identically
/// on the branch.
Int branch_intersection_order(const BranchParam& param, const Polynomial& g);

/// Milnor number of g at the point p (translated to the origin):
/// local dimension of the Jacobian-ideal quotient. INFINITE for a
/// non-isolated critical point.
ExtendedNat milnor_number_at_point(const Polynomial& g, const std::vector<Rat>& point,
                                   const EngineOptions& opts = {});

struct SamplingConfig {
  std::uint64_t seed = 0x5eedULL;
  int max_samples = 8;
  EngineOptions engine;
};

struct TransversalSample {
  Rat t;
  Int mu_coordinate_slice;
  Int mu_generic_slice;
  std::vector<Rat> hyperplane_normal;
};

struct TransversalData {
  Int mu_ring;  // the stabilized transversal Milnor number
  std::vector<TransversalSample> samples_used;
};

/// Transversal Milnor number of f along the declared component: sampled
/// at φ(1/p) for decreasing prime reciprocals, slicing both by the
/// coordinate hyperplane V(z0 - z0(p)) and by a seeded random rational
/// hyperplane through p; accepted when two consecutive samples agree in
/// both slicing modes. Throws UnstableSamplingError when the budget is
/// exhausted or a slice is non-isolated at a sample.
TransversalData transversal_milnor(const Polynomial& f, const ComponentDecl& decl,
                                   std::size_t z0_index, const SamplingConfig& config = {});

struct ComponentData {
  std::string name;
  Int mu_ring;
  Int z0_order;  // (C · V(z0))_0
  bool smooth_proxy;  // some coordinate image has t-order exactly 1
  TransversalData transversal;
};

ComponentData analyze_component(const Polynomial& f, const ComponentDecl& decl,
                                std::size_t z0_index, const SamplingConfig& config = {});

/// σ_f = Σ_C μ̊_C (no intersection multiplicities).
Int sigma(const std::vector<ComponentData>& components);
Int sigma(const Polynomial& f, const std::vector<ComponentDecl>& decls, std::size_t z0_index,
          const SamplingConfig& config = {});

/// λ¹ by the component path: Σ_C (C·V(z0))_0 · μ̊_C.
Int lambda1_from_components(const std::vector<ComponentData>& components);
Int lambda1_from_components(const Polynomial& f, const std::vector<ComponentDecl>& decls,
                            std::size_t z0_index, const SamplingConfig& config = {});

/// Milnor number of a single-branch monomial curve: 2δ, where δ counts
/// the gaps of the numerical semigroup generated by the nonzero image
/// exponents. Requires each image to be zero or a single monomial
/// (NotMonomialError) and the exponent gcd to be 1 (NotPrimitiveError).
Int monomial_curve_milnor(const BranchParam& param);

}  // namespace betainv

#endif
