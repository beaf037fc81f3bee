#ifndef BETAINV_ORDERING_HPP
#define BETAINV_ORDERING_HPP

#include <cstddef>
#include <numeric>
#include <vector>

#include "betainv/ring.hpp"

namespace betainv {

enum class OrderKind {
  /// Global graded reverse lexicographic: 1 is the smallest monomial.
  GlobalGrevlex,
  /// Local negative-graded (degree-anticompatible), ties by reverse lex:
  /// 1 is the largest monomial.
  LocalNegGraded,
  /// Block order eliminating variable 0 (grevlex ties). Internal to the
  /// ideal intersection machinery; still a global well-ordering.
  ElimFirst,
};

/// Total multiplicative monomial ordering, optionally with a variable
/// significance permutation (perm[0] is the most significant variable).
class MonomialOrdering {
 public:
  static MonomialOrdering global_grevlex(std::size_t nvars) {
    return MonomialOrdering(OrderKind::GlobalGrevlex, identity(nvars));
  }
  static MonomialOrdering global_grevlex(std::size_t nvars, std::vector<std::size_t> perm) {
    (void)nvars;
    return MonomialOrdering(OrderKind::GlobalGrevlex, std::move(perm));
  }
  static MonomialOrdering local_neg_graded(std::size_t nvars) {
    return MonomialOrdering(OrderKind::LocalNegGraded, identity(nvars));
  }
  static MonomialOrdering local_neg_graded(std::size_t nvars, std::vector<std::size_t> perm) {
    (void)nvars;
    return MonomialOrdering(OrderKind::LocalNegGraded, std::move(perm));
  }
  static MonomialOrdering elim_first(std::size_t nvars) {
    return MonomialOrdering(OrderKind::ElimFirst, identity(nvars));
  }

  OrderKind kind() const { return kind_; }
  std::size_t var_count() const { return perm_.size(); }
  bool is_global() const { return kind_ != OrderKind::LocalNegGraded; }
  bool is_local() const { return kind_ == OrderKind::LocalNegGraded; }

  bool less(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case OrderKind::GlobalGrevlex: {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return revlex_tie_smaller(a, b);
      }
      case OrderKind::LocalNegGraded: {
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return revlex_tie_smaller(a, b);
      }
      case OrderKind::ElimFirst: {
        if (a.exp[0] != b.exp[0]) return a.exp[0] < b.exp[0];
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return revlex_tie_smaller(a, b);
      }
    }
    return false;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

  bool operator==(const MonomialOrdering& o) const {
    return kind_ == o.kind_ && perm_ == o.perm_;
  }

 private:
  MonomialOrdering(OrderKind kind, std::vector<std::size_t> perm)
      : kind_(kind), perm_(std::move(perm)) {}

  static std::vector<std::size_t> identity(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return p;
  }

  // a < b within one degree class iff the last differing (permuted)
  // exponent of a is larger.
  bool revlex_tie_smaller(const Monomial& a, const Monomial& b) const {
    for (std::size_t k = perm_.size(); k-- > 0;) {
      int ea = a.exp[perm_[k]], eb = b.exp[perm_[k]];
      if (ea != eb) return ea > eb;
    }
    return false;
  }

  OrderKind kind_;
  std::vector<std::size_t> perm_;
};

}  // namespace betainv

#endif
