#ifndef BETAINV_IDEAL_HPP
#define BETAINV_IDEAL_HPP

#include <memory>
#include <vector>

#include "betainv/basis.hpp"
#include "betainv/poly.hpp"

namespace betainv {

/// Ideal of a polynomial ring: generators plus write-once cached bases.
/// Copies share the cache; the value is immutable.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  const BasisSet& groebner_basis(const EngineOptions& opts = {}) const;
  const BasisSet& local_standard_basis(const EngineOptions& opts = {}) const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// p ∈ I as an ideal of the polynomial ring (global normal form is zero).
bool ideal_membership(const Polynomial& p, const Ideal& I, const EngineOptions& opts = {});

bool ideal_is_unit(const Ideal& I, const EngineOptions& opts = {});

/// Concatenated generators; rings must match.
Ideal ideal_sum(const Ideal& I, const Ideal& J);

/// (I : g), via the auxiliary-variable intersection with (g) followed by
/// exact division of each intersection generator by g. Requires g != 0.
Ideal ideal_quotient(const Ideal& I, const Polynomial& g, const EngineOptions& opts = {});

struct SaturationResult {
  Ideal ideal;
  /// Least k with (I : g^k) = (I : g^{k+1}).
  int exponent;
};

/// (I : g^∞) by iterated colon until stabilization. Requires g != 0.
SaturationResult saturate(const Ideal& I, const Polynomial& g, const EngineOptions& opts = {});

/// Equality by two-way generator membership against Groebner bases.
bool ideal_equal(const Ideal& I, const Ideal& J, const EngineOptions& opts = {});

ExtendedNat local_quotient_dimension(const Ideal& I, const EngineOptions& opts = {});
std::size_t local_krull_dimension(const Ideal& I, const EngineOptions& opts = {});

}  // namespace betainv

#endif
