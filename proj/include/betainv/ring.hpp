#ifndef BETAINV_RING_HPP
#define BETAINV_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betainv/errors.hpp"

namespace betainv {

/// Exponent vector, dense over the ring's variables.
struct Monomial {
  std::vector<int> exp;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp(nvars, 0) {}
  explicit Monomial(std::vector<int> e);

  std::size_t var_count() const { return exp.size(); }
  int degree() const;
  bool is_unit() const;

  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  /// Exponent-wise difference; requires divides(m) of the divisor.
  Monomial quotient_by(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& m) const { return exp == m.exp; }
  bool operator!=(const Monomial& m) const { return exp != m.exp; }
  /// Plain lexicographic compare; used as a canonical map key only,
  /// never as the computation ordering.
  bool operator<(const Monomial& m) const { return exp < m.exp; }
};

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

/// Names and arity of a polynomial ring over Q. Immutable.
class RingContext {
 public:
  explicit RingContext(std::vector<std::string> variables);

  static RingPtr make(std::vector<std::string> variables) {
    return std::make_shared<const RingContext>(std::move(variables));
  }

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t var_count() const { return vars_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool same_as(const RingContext& other) const { return vars_ == other.vars_; }

  std::string monomial_to_string(const Monomial& m) const;

  static bool valid_variable_name(std::string_view name);

 private:
  std::vector<std::string> vars_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

}  // namespace betainv

#endif
