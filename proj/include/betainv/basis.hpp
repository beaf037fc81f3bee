#ifndef BETAINV_BASIS_HPP
#define BETAINV_BASIS_HPP

#include <optional>
#include <vector>

#include "betainv/numbers.hpp"
#include "betainv/ordering.hpp"
#include "betainv/poly.hpp"

namespace betainv {

struct EngineOptions {
  /// Cap on the total degree of any polynomial produced during a basis
  /// completion; exceeding it raises ResourceLimitError.
  int degree_guard = 60;
};

/// A generator set together with the ordering it was computed under.
/// `completed` marks Buchberger/Mora closure: every S-polynomial of the
/// generators has (weak) normal form zero.
struct BasisSet {
  MonomialOrdering ordering;
  std::vector<Polynomial> generators;
  bool completed = false;

  std::vector<Monomial> leading_monomials() const;
};

Monomial leading_monomial(const Polynomial& p, const MonomialOrdering& ord);
Rat leading_coefficient(const Polynomial& p, const MonomialOrdering& ord);

/// Full division remainder w.r.t. a global ordering: no remainder term is
/// divisible by a basis leading monomial.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrdering& ord, const EngineOptions& opts = {});

/// Mora weak normal form w.r.t. a local ordering: u*p = sum q_i g_i + r for
/// some local unit u, with LM(r) divisible by no basis leading monomial.
/// Ecart-guided reducer selection; intermediate results join the reducer
/// pool (the standard termination device).
Polynomial mora_normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                            const MonomialOrdering& ord, const EngineOptions& opts = {});

/// Reduced Groebner basis (global ordering): minimal, monic, tails reduced.
BasisSet buchberger(const std::vector<Polynomial>& gens, const MonomialOrdering& ord,
                    const EngineOptions& opts = {});

/// Standard basis (local ordering): completed via Mora normal forms,
/// minimal and monic (tails are not reduced).
BasisSet standard_basis(const std::vector<Polynomial>& gens, const MonomialOrdering& ord,
                        const EngineOptions& opts = {});

/// Quotient of p by a single divisor; nullopt when p is not a polynomial
/// multiple of the divisor.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& divisor);

/// Number of monomials outside the monomial ideal generated by `lms`;
/// INFINITE when the staircase is unbounded.
ExtendedNat staircase_count(const std::vector<Monomial>& lms, std::size_t nvars);

/// Krull dimension of k[x]/(monomial ideal): the largest variable subset S
/// such that no generator's support lies inside S. Throws EmptyGermError
/// if a generator is the unit monomial.
std::size_t monomial_ideal_dimension(const std::vector<Monomial>& lms, std::size_t nvars);

/// dim_Q of (local ring at the origin)/(gens), via the standard-basis
/// staircase; INFINITE when the quotient is not Artinian.
ExtendedNat local_quotient_dimension(const std::vector<Polynomial>& gens,
                                     const EngineOptions& opts = {});

/// Krull dimension of the local quotient at the origin.
/// Throws EmptyGermError when 1 lies in the ideal.
std::size_t local_krull_dimension(const std::vector<Polynomial>& gens,
                                  const EngineOptions& opts = {});

}  // namespace betainv

#endif
