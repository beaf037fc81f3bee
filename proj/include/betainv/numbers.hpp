#ifndef BETAINV_NUMBERS_HPP
#define BETAINV_NUMBERS_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace betainv {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// A natural number extended with a single INFINITE value (used for local
/// quotient dimensions and Milnor numbers of non-isolated singularities).
class ExtendedNat {
 public:
  ExtendedNat() : finite_(true), value_(0) {}
  ExtendedNat(Int v) : finite_(true), value_(std::move(v)) {}
  ExtendedNat(long v) : finite_(true), value_(v) {}

  static ExtendedNat infinite() {
    ExtendedNat e;
    e.finite_ = false;
    return e;
  }

  bool is_finite() const { return finite_; }
  bool is_infinite() const { return !finite_; }

  const Int& value() const {
    if (!finite_) throw std::logic_error("ExtendedNat: value() on INFINITE");
    return value_;
  }

  bool operator==(const ExtendedNat& o) const {
    if (finite_ != o.finite_) return false;
    return !finite_ || value_ == o.value_;
  }
  bool operator!=(const ExtendedNat& o) const { return !(*this == o); }
  bool operator==(long v) const { return finite_ && value_ == v; }

  std::string to_string() const {
    return finite_ ? value_.get_str() : std::string("INFINITE");
  }

 private:
  bool finite_;
  Int value_;
};

}  // namespace betainv

#endif
