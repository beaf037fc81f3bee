#include "betainv/poly.hpp"

#include <algorithm>
#include <utility>

namespace betainv {

namespace {

void check_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
  if (!same_ring(a, b)) {
    throw RingMismatchError(std::string("ring mismatch in ") + what);
  }
}

// Descending graded-lexicographic: degree first, then the leftmost
// differing exponent decides. Used only for canonical printing.
bool grlex_before(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.exp.size(); ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
  }
  return false;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, Rat c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.emplace(Monomial(p.ring_->var_count()), std::move(c));
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->var_count()) throw ValidationError("variable index out of range");
  Monomial m(ring->var_count());
  m.exp[index] = 1;
  return term(std::move(ring), std::move(m), Rat(1));
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, Rat c) {
  Polynomial p(std::move(ring));
  if (m.var_count() != p.ring_->var_count()) {
    throw ValidationError("monomial arity does not match ring");
  }
  if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::map<Monomial, Rat> terms) {
  Polynomial p(std::move(ring));
  for (auto& [m, c] : terms) {
    if (m.var_count() != p.ring_->var_count()) {
      throw ValidationError("monomial arity does not match ring");
    }
    if (c != 0) p.terms_.emplace(m, c);
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Polynomial::order() const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
  return d;
}

Rat Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Polynomial::constant_term() const { return coefficient(Monomial(ring_->var_count())); }

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_, "addition");
  Polynomial r(*this);
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = r.terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_, "multiplication");
  Polynomial r(ring_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma * mb;
      Rat c = ca * cb;
      auto [it, inserted] = r.terms_.emplace(std::move(m), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, Rat(1));
  Polynomial base(*this);
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->var_count()) throw ValidationError("variable index out of range");
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    int e = m.exp[var];
    if (e == 0) continue;
    Monomial d(m);
    d.exp[var] = e - 1;
    r.terms_.emplace(std::move(d), c * e);
  }
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->var_count()) {
    throw RingMismatchError("substitute: one image required per variable");
  }
  const RingPtr& target = images.empty() ? ring_ : images.front().ring();
  for (const auto& img : images) check_same_ring(img.ring(), target, "substitute images");

  // Per-variable power cache, filled on demand.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t v, int e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, Rat(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };

  Polynomial result(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t v = 0; v < images.size(); ++v) {
      if (m.exp[v] > 0) t = t * power_of(v, m.exp[v]);
    }
    result = result + t;
  }
  return result;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
  if (point.size() != ring_->var_count()) {
    throw ValidationError("evaluate: one value required per variable");
  }
  Rat total(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (std::size_t v = 0; v < point.size(); ++v) {
      for (int i = 0; i < m.exp[v]; ++i) t *= point[v];
    }
    total += t;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, Rat>*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [](auto* a, auto* b) { return grlex_before(a->first, b->first); });

  std::string out;
  bool first = true;
  for (auto* t : sorted) {
    const Monomial& m = t->first;
    const Rat& c = t->second;
    Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
      first = false;
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    std::string mono = ring_->monomial_to_string(m);
    if (mono == "1") {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

LinearForm::LinearForm(RingPtr ring, std::vector<Rat> coefficients)
    : ring_(std::move(ring)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != ring_->var_count()) {
    throw ValidationError("linear form needs one coefficient per variable");
  }
  bool nonzero = std::any_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c != 0; });
  if (!nonzero) throw ValidationError("linear form must be nonzero");
}

LinearForm LinearForm::from_polynomial(const Polynomial& p) {
  std::vector<Rat> coeffs(p.ring()->var_count(), Rat(0));
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != 1) {
      throw ValidationError("linear form must be homogeneous of degree 1: got '" +
                            p.to_string() + "'");
    }
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
      if (m.exp[i] == 1) coeffs[i] = c;
    }
  }
  return LinearForm(p.ring(), std::move(coeffs));
}

Polynomial LinearForm::to_polynomial() const {
  Polynomial p = Polynomial::zero(ring_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) p = p + Polynomial::variable(ring_, i).scaled(coeffs_[i]);
  }
  return p;
}

std::optional<std::size_t> LinearForm::single_variable() const {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) {
      if (found) return std::nullopt;
      found = i;
    }
  }
  return found;
}

bool LinearForm::proportional_to(const LinearForm& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  // c * this == o for the ratio at the first nonzero coefficient.
  std::size_t i = 0;
  while (i < coeffs_.size() && coeffs_[i] == 0 && o.coeffs_[i] == 0) ++i;
  if (i == coeffs_.size()) return true;
  if (coeffs_[i] == 0 || o.coeffs_[i] == 0) return false;
  Rat ratio = o.coeffs_[i] / coeffs_[i];
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] * ratio != o.coeffs_[k]) return false;
  }
  return true;
}

}  // namespace betainv
