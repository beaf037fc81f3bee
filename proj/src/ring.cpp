#include "betainv/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace betainv {

Monomial::Monomial(std::vector<int> e) : exp(std::move(e)) {
  for (int v : exp) {
    if (v < 0) throw ValidationError("monomial exponent must be non-negative");
  }
}

int Monomial::degree() const {
  int d = 0;
  for (int v : exp) d += v;
  return d;
}

bool Monomial::is_unit() const {
  return std::all_of(exp.begin(), exp.end(), [](int v) { return v == 0; });
}

bool Monomial::divides(const Monomial& m) const {
  if (exp.size() != m.exp.size()) return false;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] > m.exp[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += m.exp[i];
  return r;
}

Monomial Monomial::quotient_by(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] -= divisor.exp[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.exp.size(); ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  return r;
}

bool RingContext::valid_variable_name(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name.substr(1)) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

RingContext::RingContext(std::vector<std::string> variables) : vars_(std::move(variables)) {
  if (vars_.empty()) throw ValidationError("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!valid_variable_name(v)) throw ValidationError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw ValidationError("duplicate variable name '" + v + "'");
  }
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

std::string RingContext::monomial_to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    int e = m.exp[i];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += vars_[i];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

}  // namespace betainv
