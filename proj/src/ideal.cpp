#include "betainv/ideal.hpp"

#include <algorithm>
#include <mutex>
#include <optional>

namespace betainv {

struct Ideal::Cache {
  std::mutex mu;
  std::optional<BasisSet> global;
  std::optional<BasisSet> local;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (Polynomial& g : gens) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatchError("ideal generator from another ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, Rat(1));
  return Ideal(std::move(ring), {std::move(one)});
}

const BasisSet& Ideal::groebner_basis(const EngineOptions& opts) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->global) {
    cache_->global = buchberger(gens_, MonomialOrdering::global_grevlex(ring_->var_count()), opts);
  }
  return *cache_->global;
}

const BasisSet& Ideal::local_standard_basis(const EngineOptions& opts) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->local) {
    cache_->local =
        standard_basis(gens_, MonomialOrdering::local_neg_graded(ring_->var_count()), opts);
  }
  return *cache_->local;
}

bool ideal_membership(const Polynomial& p, const Ideal& I, const EngineOptions& opts) {
  if (!same_ring(p.ring(), I.ring())) throw RingMismatchError("membership across rings");
  if (p.is_zero()) return true;
  if (I.is_zero()) return false;
  const BasisSet& gb = I.groebner_basis(opts);
  return normal_form(p, gb.generators, gb.ordering, opts).is_zero();
}

bool ideal_is_unit(const Ideal& I, const EngineOptions& opts) {
  return ideal_membership(Polynomial::constant(I.ring(), Rat(1)), I, opts);
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring())) throw RingMismatchError("sum of ideals across rings");
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

namespace {

std::string fresh_variable_name(const RingContext& ring) {
  for (const char* c : {"t", "u", "s", "w", "e"}) {
    if (!ring.index_of(c)) return c;
  }
  for (int i = 0;; ++i) {
    std::string name = "aux" + std::to_string(i);
    if (!ring.index_of(name)) return name;
  }
}

Polynomial lift_with_aux(const Polynomial& p, const RingPtr& ext) {
  std::map<Monomial, Rat> terms;
  for (const auto& [m, c] : p.terms()) {
    Monomial em(ext->var_count());
    std::copy(m.exp.begin(), m.exp.end(), em.exp.begin() + 1);
    terms.emplace(std::move(em), c);
  }
  return Polynomial::from_terms(ext, std::move(terms));
}

Polynomial project_from_aux(const Polynomial& p, const RingPtr& base) {
  std::map<Monomial, Rat> terms;
  for (const auto& [m, c] : p.terms()) {
    Monomial bm(base->var_count());
    std::copy(m.exp.begin() + 1, m.exp.end(), bm.exp.begin());
    terms.emplace(std::move(bm), c);
  }
  return Polynomial::from_terms(base, std::move(terms));
}

bool involves_aux(const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    if (m.exp[0] > 0) return true;
  }
  return false;
}

}  // namespace

Ideal ideal_quotient(const Ideal& I, const Polynomial& g, const EngineOptions& opts) {
  if (g.is_zero()) throw ValidationError("ideal quotient by the zero polynomial");
  if (!same_ring(g.ring(), I.ring())) throw RingMismatchError("quotient across rings");
  if (I.is_zero()) return Ideal::zero(I.ring());
  if (g.is_constant()) return I;

  // I ∩ (g) = (aux·I + (1-aux)·(g)) ∩ base ring, eliminating aux.
  const RingPtr& base = I.ring();
  std::vector<std::string> names;
  names.push_back(fresh_variable_name(*base));
  names.insert(names.end(), base->variables().begin(), base->variables().end());
  RingPtr ext = RingContext::make(std::move(names));

  Polynomial aux = Polynomial::variable(ext, 0);
  Polynomial one_minus_aux = Polynomial::constant(ext, Rat(1)) - aux;
  std::vector<Polynomial> ext_gens;
  for (const Polynomial& p : I.generators()) ext_gens.push_back(aux * lift_with_aux(p, ext));
  ext_gens.push_back(one_minus_aux * lift_with_aux(g, ext));

  BasisSet gb = buchberger(ext_gens, MonomialOrdering::elim_first(ext->var_count()), opts);

  std::vector<Polynomial> quotient_gens;
  for (const Polynomial& b : gb.generators) {
    if (involves_aux(b)) continue;
    Polynomial member = project_from_aux(b, base);
    auto q = divide_exact(member, g);
    if (!q) {
      throw ConsistencyError("intersection generator not divisible by g in ideal quotient");
    }
    if (!q->is_zero()) quotient_gens.push_back(std::move(*q));
  }
  return Ideal(base, std::move(quotient_gens));
}

SaturationResult saturate(const Ideal& I, const Polynomial& g, const EngineOptions& opts) {
  if (g.is_zero()) throw ValidationError("saturation by the zero polynomial");
  Ideal current = I;
  int exponent = 0;
  while (true) {
    Ideal next = ideal_quotient(current, g, opts);
    if (ideal_equal(next, current, opts)) return SaturationResult{std::move(current), exponent};
    current = std::move(next);
    ++exponent;
  }
}

bool ideal_equal(const Ideal& I, const Ideal& J, const EngineOptions& opts) {
  for (const Polynomial& p : I.generators()) {
    if (!ideal_membership(p, J, opts)) return false;
  }
  for (const Polynomial& p : J.generators()) {
    if (!ideal_membership(p, I, opts)) return false;
  }
  return true;
}

ExtendedNat local_quotient_dimension(const Ideal& I, const EngineOptions& opts) {
  if (I.is_zero()) return ExtendedNat::infinite();
  const BasisSet& sb = I.local_standard_basis(opts);
  return staircase_count(sb.leading_monomials(), I.ring()->var_count());
}

std::size_t local_krull_dimension(const Ideal& I, const EngineOptions& opts) {
  if (I.is_zero()) return I.ring()->var_count();
  const BasisSet& sb = I.local_standard_basis(opts);
  return monomial_ideal_dimension(sb.leading_monomials(), I.ring()->var_count());
}

}  // namespace betainv
