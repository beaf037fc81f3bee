#ifndef BETAINV_POLY_HPP
#define BETAINV_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "betainv/numbers.hpp"
#include "betainv/ring.hpp"

namespace betainv {

/// Exact multivariate polynomial over Q. Terms are stored canonically
/// (no zero coefficients); all operations are pure and the value is
/// immutable after construction.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, Rat c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial m, Rat c);
  static Polynomial from_terms(RingPtr ring, std::map<Monomial, Rat> terms);

  const RingPtr& ring() const { return ring_; }
  const std::map<Monomial, Rat>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Max total degree of a term; -1 for the zero polynomial.
  int total_degree() const;
  /// Min total degree of a term (the t-adic order for univariate input);
  /// -1 for the zero polynomial.
  int order() const;
  Rat coefficient(const Monomial& m) const;
  Rat constant_term() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rat& c) const;
  Polynomial pow(unsigned e) const;

  Polynomial derivative(std::size_t var) const;

  /// Exact composition: one image per variable of this ring, all images
  /// over one common target ring. Throws RingMismatchError otherwise.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  Rat evaluate(const std::vector<Rat>& point) const;

  /// Canonical printing: terms in descending graded-lexicographic order,
  /// integer coefficients without denominator. parse ∘ to_string = id.
  std::string to_string() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  RingPtr ring_;
  std::map<Monomial, Rat> terms_;
};

inline Polynomial operator*(const Rat& c, const Polynomial& p) { return p.scaled(c); }

/// Degree-1 homogeneous form, the distinguished "z0" candidate.
class LinearForm {
 public:
  LinearForm(RingPtr ring, std::vector<Rat> coefficients);
  static LinearForm from_polynomial(const Polynomial& p);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Rat>& coefficients() const { return coeffs_; }
  Polynomial to_polynomial() const;

  /// True when this is c * e_i for a single variable i (any c != 0).
  std::optional<std::size_t> single_variable() const;
  bool proportional_to(const LinearForm& o) const;
  std::string to_string() const { return to_polynomial().to_string(); }

 private:
  RingPtr ring_;
  std::vector<Rat> coeffs_;
};

}  // namespace betainv

#endif
