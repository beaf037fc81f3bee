#include "betainv/le_numbers.hpp"

#include <utility>

namespace betainv {

namespace {

std::vector<Polynomial> jacobian_tail_gens(const Polynomial& f, std::size_t z0_index) {
  std::vector<Polynomial> gens;
  for (std::size_t v = 0; v < f.ring()->var_count(); ++v) {
    if (v != z0_index) gens.push_back(f.derivative(v));
  }
  return gens;
}

std::vector<Polynomial> jacobian_gens(const Polynomial& f) {
  std::vector<Polynomial> gens;
  for (std::size_t v = 0; v < f.ring()->var_count(); ++v) gens.push_back(f.derivative(v));
  return gens;
}

// f restricted to V(z0), as a polynomial over the ring without z0.
Polynomial restrict_to_slice(const Polynomial& f, std::size_t z0_index, RingPtr& slice_ring) {
  const RingPtr& ring = f.ring();
  std::vector<std::string> names;
  for (std::size_t v = 0; v < ring->var_count(); ++v) {
    if (v != z0_index) names.push_back(ring->variables()[v]);
  }
  slice_ring = RingContext::make(std::move(names));
  std::vector<Polynomial> images;
  std::size_t k = 0;
  for (std::size_t v = 0; v < ring->var_count(); ++v) {
    if (v == z0_index) {
      images.push_back(Polynomial::zero(slice_ring));
    } else {
      images.push_back(Polynomial::variable(slice_ring, k++));
    }
  }
  return f.substitute(images);
}

ExtendedNat dimension_of(const std::vector<Polynomial>& gens, const EngineOptions& opts) {
  return local_quotient_dimension(gens, opts);
}

}  // namespace

SingularitySetup admissibility_check(const Polynomial& f, std::size_t z0_index,
                                     const EngineOptions& opts) {
  const RingPtr& ring = f.ring();
  if (ring->var_count() < 3) {
    throw ValidationError("the pipeline needs at least 3 variables (critical locus of dimension "
                          "1 inside an ambient space of dimension >= 3)");
  }
  if (z0_index >= ring->var_count()) throw ValidationError("z0 index out of range");

  if (f.constant_term() != 0) {
    throw AdmissibilityError(RejectReason::NonzeroConstant, "f(0) = " +
                                                                f.constant_term().get_str() +
                                                                ", expected f(0) = 0");
  }

  std::vector<Polynomial> tail = jacobian_tail_gens(f, z0_index);

  // dim_0 of the critical locus must be exactly 1.
  try {
    std::size_t dim_sigma = local_krull_dimension(jacobian_gens(f), opts);
    if (dim_sigma != 1) {
      throw AdmissibilityError(
          RejectReason::DimSigma,
          "critical locus has local dimension " + std::to_string(dim_sigma) + ", expected 1");
    }
  } catch (const EmptyGermError&) {
    throw AdmissibilityError(RejectReason::DimSigma, "critical locus is empty at the origin");
  }

  // The Jacobian-tail scheme (polar curve + Lê cycle) must be 1-dimensional
  // as well; with n generators in (n+1)-space its dimension is then pure.
  try {
    std::size_t dim_tail = local_krull_dimension(tail, opts);
    if (dim_tail != 1) {
      throw AdmissibilityError(RejectReason::DimSigma,
                               "V(jacobian tail) has local dimension " +
                                   std::to_string(dim_tail) + ", expected 1");
    }
  } catch (const EmptyGermError&) {
    throw AdmissibilityError(RejectReason::DimSigma, "V(jacobian tail) is empty at the origin");
  }

  // Slice criterion: f restricted to V(z0) has an isolated critical point.
  std::vector<Polynomial> tail_plus_z0 = tail;
  tail_plus_z0.push_back(Polynomial::variable(ring, z0_index));
  ExtendedNat slice_dim = dimension_of(tail_plus_z0, opts);
  if (slice_dim.is_infinite()) {
    throw AdmissibilityError(RejectReason::Slice,
                             "f restricted to V(" + ring->variables()[z0_index] +
                                 ") has a non-isolated critical point at the origin");
  }

  // Same number through the restricted ring; also the slice Milnor number.
  RingPtr slice_ring;
  Polynomial f_slice = restrict_to_slice(f, z0_index, slice_ring);
  std::vector<Polynomial> slice_jac;
  for (std::size_t v = 0; v < slice_ring->var_count(); ++v) {
    slice_jac.push_back(f_slice.derivative(v));
  }
  ExtendedNat slice_mu = dimension_of(slice_jac, opts);
  if (slice_mu.is_infinite() || slice_mu != ExtendedNat(slice_dim.value())) {
    throw ConsistencyError("slice Milnor number disagrees between the ambient and restricted "
                           "computations");
  }

  Polynomial dfdz0 = f.derivative(z0_index);
  Ideal tail_ideal(ring, tail);

  Ideal polar = Ideal::unit(ring);
  int saturation_exponent = 0;
  bool dfdz0_zero = dfdz0.is_zero();
  if (!dfdz0_zero) {
    SaturationResult sat = saturate(tail_ideal, dfdz0, opts);
    polar = std::move(sat.ideal);
    saturation_exponent = sat.exponent;
  }
  // When f is independent of z0 the tail scheme is the whole critical
  // locus, so the polar curve is empty: the unit ideal, flagged upstream.

  SingularitySetup setup(ring, f, z0_index, std::move(tail_ideal), std::move(dfdz0),
                         std::move(polar));
  setup.dfdz0_is_zero = dfdz0_zero;
  setup.saturation_exponent = saturation_exponent;
  setup.tail_dimension = 1;
  setup.slice_tail_dim = slice_dim.value();
  setup.slice_mu = slice_mu.value();
  return setup;
}

const Ideal& polar_ideal(const SingularitySetup& setup) { return setup.polar; }

Int le_number_0(const SingularitySetup& setup, const EngineOptions& opts) {
  if (setup.dfdz0_is_zero) return Int(0);
  std::vector<Polynomial> gens = setup.polar.generators();
  gens.push_back(setup.dfdz0);
  ExtendedNat dim = local_quotient_dimension(gens, opts);
  if (dim.is_infinite()) {
    throw ConsistencyError("INTERNAL_NONPROPER: polar curve meets V(df/dz0) improperly");
  }
  return dim.value();
}

Int le_number_1(const SingularitySetup& setup, const EngineOptions& opts) {
  Polynomial z0 = Polynomial::variable(setup.ring, setup.z0_index);

  std::vector<Polynomial> tail_gens = setup.jacobian_tail.generators();
  tail_gens.push_back(z0);
  ExtendedNat total = local_quotient_dimension(tail_gens, opts);
  if (total.is_infinite()) {
    throw ConsistencyError("INTERNAL_NONPROPER: V(z0) meets the tail scheme improperly");
  }

  std::vector<Polynomial> polar_gens = setup.polar.generators();
  polar_gens.push_back(z0);
  ExtendedNat polar_part = local_quotient_dimension(polar_gens, opts);
  if (polar_part.is_infinite()) {
    throw ConsistencyError("INTERNAL_NONPROPER: V(z0) meets the polar curve improperly");
  }

  Int lambda1 = total.value() - polar_part.value();
  if (lambda1 < 0) {
    throw ConsistencyError("INTERNAL_NEGATIVE: lambda1 computed as " + lambda1.get_str());
  }
  return lambda1;
}

Int slice_milnor(const SingularitySetup& setup) { return setup.slice_mu; }

}  // namespace betainv
