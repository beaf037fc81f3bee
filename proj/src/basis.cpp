#include "betainv/basis.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace betainv {

namespace {

struct Term {
  Monomial m;
  Rat c;
};

// Terms strictly descending under the active ordering.
using TermVec = std::vector<Term>;

TermVec to_ordered(const Polynomial& p, const MonomialOrdering& ord) {
  TermVec v;
  v.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) v.push_back({m, c});
  std::sort(v.begin(), v.end(),
            [&ord](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
  return v;
}

Polynomial from_ordered(const RingPtr& ring, const TermVec& v) {
  std::map<Monomial, Rat> terms;
  for (const Term& t : v) terms.emplace(t.m, t.c);
  return Polynomial::from_terms(ring, std::move(terms));
}

int max_degree(const TermVec& v) {
  int d = -1;
  for (const Term& t : v) d = std::max(d, t.m.degree());
  return d;
}

void check_guard(int degree, const EngineOptions& opts) {
  if (degree > opts.degree_guard) {
    throw ResourceLimitError("degree guard " + std::to_string(opts.degree_guard) +
                             " exceeded (intermediate degree " + std::to_string(degree) + ")");
  }
}

// h[h_from..] - factor * x^shift * g[g_from..], merged descending.
TermVec merge_sub(const TermVec& h, std::size_t h_from, const Rat& factor, const Monomial& shift,
                  const TermVec& g, std::size_t g_from, const MonomialOrdering& ord) {
  TermVec out;
  out.reserve(h.size() - h_from + g.size() - g_from);
  std::size_t i = h_from, j = g_from;
  while (i < h.size() || j < g.size()) {
    if (j >= g.size()) {
      out.push_back(h[i++]);
      continue;
    }
    Monomial gm = shift * g[j].m;
    if (i >= h.size()) {
      out.push_back({std::move(gm), -factor * g[j].c});
      ++j;
      continue;
    }
    if (ord.greater(h[i].m, gm)) {
      out.push_back(h[i++]);
    } else if (ord.greater(gm, h[i].m)) {
      out.push_back({std::move(gm), -factor * g[j].c});
      ++j;
    } else {
      Rat c = h[i].c - factor * g[j].c;
      if (c != 0) out.push_back({h[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  // Trailing zero coefficients were dropped as they were produced.
  return out;
}

struct Reducer {
  TermVec terms;  // monic not required; lc kept separately
  Monomial lm;
  Rat lc;
  int maxdeg;
  int ecart;  // maxdeg - deg(lm); zero for global orderings' use
};

Reducer make_reducer(TermVec terms) {
  Reducer r;
  r.lm = terms.front().m;
  r.lc = terms.front().c;
  r.maxdeg = max_degree(terms);
  r.ecart = r.maxdeg - r.lm.degree();
  r.terms = std::move(terms);
  return r;
}

// Full tail-reducing division for global orderings.
TermVec divide_full(TermVec h, const std::vector<Reducer>& basis, const MonomialOrdering& ord,
                    const EngineOptions& opts) {
  TermVec rem;
  while (!h.empty()) {
    const Reducer* red = nullptr;
    for (const Reducer& r : basis) {
      if (r.lm.divides(h.front().m)) {
        red = &r;
        break;
      }
    }
    if (!red) {
      rem.push_back(h.front());
      h.erase(h.begin());
      continue;
    }
    Monomial shift = h.front().m.quotient_by(red->lm);
    check_guard(shift.degree() + red->maxdeg, opts);
    Rat factor = h.front().c / red->lc;
    h = merge_sub(h, 1, factor, shift, red->terms, 1, ord);
  }
  return rem;
}

// Mora weak normal form: ecart-guided, intermediate results join the pool.
TermVec mora_reduce(TermVec h, std::vector<Reducer> pool, const MonomialOrdering& ord,
                    const EngineOptions& opts) {
  while (!h.empty()) {
    int h_ecart = max_degree(h) - h.front().m.degree();
    int best = -1;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (!pool[k].lm.divides(h.front().m)) continue;
      if (best < 0 || pool[k].ecart < pool[best].ecart) best = static_cast<int>(k);
    }
    if (best < 0) break;
    if (pool[best].ecart > h_ecart) pool.push_back(make_reducer(h));
    Monomial shift = h.front().m.quotient_by(pool[best].lm);
    check_guard(shift.degree() + pool[best].maxdeg, opts);
    Rat factor = h.front().c / pool[best].lc;
    h = merge_sub(h, 1, factor, shift, pool[best].terms, 1, ord);
  }
  return h;
}

TermVec make_monic(TermVec v) {
  if (v.empty()) return v;
  Rat lc = v.front().c;
  if (lc != 1) {
    for (Term& t : v) t.c /= lc;
  }
  return v;
}

// S-polynomial of two monic-or-not generators; leading terms cancel.
TermVec s_polynomial(const Reducer& f, const Reducer& g, const MonomialOrdering& ord,
                     const EngineOptions& opts) {
  Monomial l = Monomial::lcm(f.lm, g.lm);
  Monomial uf = l.quotient_by(f.lm);
  Monomial ug = l.quotient_by(g.lm);
  check_guard(uf.degree() + f.maxdeg, opts);
  check_guard(ug.degree() + g.maxdeg, opts);
  TermVec a;
  a.reserve(f.terms.size());
  for (const Term& t : f.terms) a.push_back({uf * t.m, t.c / f.lc});
  return merge_sub(a, 1, Rat(1) / g.lc, ug, g.terms, 1, ord);
}

struct PairKey {
  int deg;
  int i;
  int j;
  bool operator<(const PairKey& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

std::vector<Reducer> completion(const std::vector<Polynomial>& gens, const MonomialOrdering& ord,
                                const EngineOptions& opts) {
  std::vector<Reducer> G;
  for (const Polynomial& p : gens) {
    if (p.is_zero()) continue;
    G.push_back(make_reducer(make_monic(to_ordered(p, ord))));
  }

  std::set<PairKey> pending;
  std::set<std::pair<int, int>> done;
  auto push_pairs = [&](int m) {
    for (int i = 0; i < m; ++i) {
      pending.insert({Monomial::lcm(G[i].lm, G[m].lm).degree(), i, m});
    }
  };
  for (int m = 1; m < static_cast<int>(G.size()); ++m) push_pairs(m);

  const bool use_product_criterion = ord.is_global();
  while (!pending.empty()) {
    PairKey key = *pending.begin();
    pending.erase(pending.begin());
    int i = key.i, j = key.j;
    Monomial l = Monomial::lcm(G[i].lm, G[j].lm);

    if (use_product_criterion && l == G[i].lm * G[j].lm) {
      done.emplace(i, j);
      continue;
    }
    bool chain = false;
    for (int k = 0; k < static_cast<int>(G.size()); ++k) {
      if (k == i || k == j || !G[k].lm.divides(l)) continue;
      if (done.count({std::min(i, k), std::max(i, k)}) &&
          done.count({std::min(j, k), std::max(j, k)})) {
        chain = true;
        break;
      }
    }
    if (chain) {
      done.emplace(i, j);
      continue;
    }

    TermVec s = s_polynomial(G[i], G[j], ord, opts);
    TermVec h = ord.is_local() ? mora_reduce(std::move(s), G, ord, opts)
                               : divide_full(std::move(s), G, ord, opts);
    if (!h.empty()) {
      check_guard(max_degree(h), opts);
      G.push_back(make_reducer(make_monic(std::move(h))));
      push_pairs(static_cast<int>(G.size()) - 1);
    }
    done.emplace(i, j);
  }
  return G;
}

std::vector<Reducer> minimalize(std::vector<Reducer> G) {
  std::vector<bool> drop(G.size(), false);
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (drop[i]) continue;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j || drop[j]) continue;
      if (G[j].lm.divides(G[i].lm) && (G[j].lm != G[i].lm || j < i)) {
        drop[i] = true;
        break;
      }
    }
  }
  std::vector<Reducer> kept;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (!drop[i]) kept.push_back(std::move(G[i]));
  }
  return kept;
}

std::vector<Monomial> minimal_monomials(std::vector<Monomial> lms) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < lms.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < lms.size(); ++j) {
      if (i == j) continue;
      if (lms[j].divides(lms[i]) && (lms[j] != lms[i] || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(lms[i]);
  }
  return out;
}

}  // namespace

std::vector<Monomial> BasisSet::leading_monomials() const {
  std::vector<Monomial> lms;
  lms.reserve(generators.size());
  for (const Polynomial& g : generators) lms.push_back(leading_monomial(g, ordering));
  return lms;
}

Monomial leading_monomial(const Polynomial& p, const MonomialOrdering& ord) {
  if (p.is_zero()) throw ValidationError("leading monomial of the zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms()) {
    if (!best || ord.greater(m, *best)) best = &m;
  }
  return *best;
}

Rat leading_coefficient(const Polynomial& p, const MonomialOrdering& ord) {
  return p.coefficient(leading_monomial(p, ord));
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrdering& ord, const EngineOptions& opts) {
  if (!ord.is_global()) throw ValidationError("normal_form requires a global ordering");
  std::vector<Reducer> reds;
  for (const Polynomial& g : basis) {
    if (!g.is_zero()) reds.push_back(make_reducer(to_ordered(g, ord)));
  }
  return from_ordered(p.ring(), divide_full(to_ordered(p, ord), reds, ord, opts));
}

Polynomial mora_normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                            const MonomialOrdering& ord, const EngineOptions& opts) {
  if (!ord.is_local()) throw ValidationError("mora_normal_form requires a local ordering");
  std::vector<Reducer> pool;
  for (const Polynomial& g : basis) {
    if (!g.is_zero()) pool.push_back(make_reducer(to_ordered(g, ord)));
  }
  return from_ordered(p.ring(), mora_reduce(to_ordered(p, ord), std::move(pool), ord, opts));
}

BasisSet buchberger(const std::vector<Polynomial>& gens, const MonomialOrdering& ord,
                    const EngineOptions& opts) {
  if (!ord.is_global()) throw ValidationError("buchberger requires a global ordering");
  RingPtr ring;
  for (const Polynomial& g : gens) {
    if (!ring) ring = g.ring();
  }
  std::vector<Reducer> G = minimalize(completion(gens, ord, opts));

  // Tail-reduce each kept generator against the others.
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < G.size(); ++i) {
    std::vector<Reducer> others;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (j != i) others.push_back(G[j]);
    }
    TermVec reduced = divide_full(G[i].terms, others, ord, opts);
    out.push_back(from_ordered(ring, make_monic(std::move(reduced))));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(leading_monomial(a, ord), leading_monomial(b, ord));
  });
  return BasisSet{ord, std::move(out), true};
}

BasisSet standard_basis(const std::vector<Polynomial>& gens, const MonomialOrdering& ord,
                        const EngineOptions& opts) {
  if (!ord.is_local()) throw ValidationError("standard_basis requires a local ordering");
  RingPtr ring;
  for (const Polynomial& g : gens) {
    if (!ring) ring = g.ring();
  }
  std::vector<Reducer> G = minimalize(completion(gens, ord, opts));
  std::vector<Polynomial> out;
  for (Reducer& r : G) out.push_back(from_ordered(ring, r.terms));
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(leading_monomial(a, ord), leading_monomial(b, ord));
  });
  return BasisSet{ord, std::move(out), true};
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& divisor) {
  if (divisor.is_zero()) throw ValidationError("division by the zero polynomial");
  MonomialOrdering ord = MonomialOrdering::global_grevlex(p.ring()->var_count());
  TermVec h = to_ordered(p, ord);
  Reducer d = make_reducer(to_ordered(divisor, ord));
  std::map<Monomial, Rat> quotient;
  while (!h.empty()) {
    if (!d.lm.divides(h.front().m)) return std::nullopt;
    Monomial shift = h.front().m.quotient_by(d.lm);
    Rat factor = h.front().c / d.lc;
    quotient.emplace(shift, factor);
    h = merge_sub(h, 1, factor, shift, d.terms, 1, ord);
  }
  return Polynomial::from_terms(p.ring(), std::move(quotient));
}

ExtendedNat staircase_count(const std::vector<Monomial>& lms, std::size_t nvars) {
  std::vector<Monomial> mins = minimal_monomials(lms);
  for (const Monomial& m : mins) {
    if (m.is_unit()) return ExtendedNat(Int(0));
  }
  // The staircase is bounded iff each variable carries a pure power.
  std::vector<int> bound(nvars, -1);
  for (const Monomial& m : mins) {
    int support_var = -1;
    bool pure = true;
    for (std::size_t v = 0; v < nvars; ++v) {
      if (m.exp[v] > 0) {
        if (support_var >= 0) {
          pure = false;
          break;
        }
        support_var = static_cast<int>(v);
      }
    }
    if (pure && support_var >= 0) {
      int e = m.exp[support_var];
      if (bound[support_var] < 0 || e < bound[support_var]) bound[support_var] = e;
    }
  }
  for (std::size_t v = 0; v < nvars; ++v) {
    if (bound[v] < 0) return ExtendedNat::infinite();
  }

  Int count(0);
  Monomial probe(nvars);
  while (true) {
    bool divisible = false;
    for (const Monomial& m : mins) {
      if (m.divides(probe)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) ++count;
    // Mixed-radix increment over the box [0, bound_v).
    std::size_t v = 0;
    while (v < nvars) {
      if (++probe.exp[v] < bound[v]) break;
      probe.exp[v] = 0;
      ++v;
    }
    if (v == nvars) break;
  }
  return ExtendedNat(count);
}

std::size_t monomial_ideal_dimension(const std::vector<Monomial>& lms, std::size_t nvars) {
  std::vector<Monomial> mins = minimal_monomials(lms);
  for (const Monomial& m : mins) {
    if (m.is_unit()) throw EmptyGermError("1 lies in the ideal: the germ at the origin is empty");
  }
  if (nvars > 20) throw ValidationError("too many variables for subset enumeration");
  std::size_t best = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << nvars); ++mask) {
    bool independent = true;
    for (const Monomial& m : mins) {
      bool support_inside = true;
      for (std::size_t v = 0; v < nvars; ++v) {
        if (m.exp[v] > 0 && !(mask & (std::size_t{1} << v))) {
          support_inside = false;
          break;
        }
      }
      if (support_inside) {
        independent = false;
        break;
      }
    }
    if (independent) {
      best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
    }
  }
  return best;
}

ExtendedNat local_quotient_dimension(const std::vector<Polynomial>& gens,
                                     const EngineOptions& opts) {
  RingPtr ring;
  bool any = false;
  for (const Polynomial& g : gens) {
    if (!ring) ring = g.ring();
    if (!g.is_zero()) any = true;
  }
  if (!any) return ExtendedNat::infinite();  // zero ideal, positive-dimensional quotient
  std::size_t n = ring->var_count();
  BasisSet sb = standard_basis(gens, MonomialOrdering::local_neg_graded(n), opts);
  return staircase_count(sb.leading_monomials(), n);
}

std::size_t local_krull_dimension(const std::vector<Polynomial>& gens, const EngineOptions& opts) {
  RingPtr ring;
  bool any = false;
  for (const Polynomial& g : gens) {
    if (!ring) ring = g.ring();
    if (!g.is_zero()) any = true;
  }
  if (!ring) throw ValidationError("local_krull_dimension needs at least one generator");
  std::size_t n = ring->var_count();
  if (!any) return n;
  BasisSet sb = standard_basis(gens, MonomialOrdering::local_neg_graded(n), opts);
  return monomial_ideal_dimension(sb.leading_monomials(), n);
}

}  // namespace betainv
