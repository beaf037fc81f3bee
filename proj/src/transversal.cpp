#include "betainv/transversal.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace betainv {

namespace {

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// 1/p sample points, decreasing.
const int kSamplePrimes[] = {7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67};

}  // namespace

BranchParam::BranchParam(RingPtr t, std::vector<Polynomial> imgs, std::size_t ambient_vars)
    : t_ring(std::move(t)), images(std::move(imgs)) {
  if (t_ring->var_count() != 1) {
    throw ValidationError("branch parametrization needs a univariate ring");
  }
  if (images.size() != ambient_vars) {
    throw ValidationError("branch parametrization needs one image per ambient variable");
  }
  bool nonzero = false;
  for (const Polynomial& img : images) {
    if (!same_ring(img.ring(), t_ring)) {
      throw RingMismatchError("parametrization image over a different ring");
    }
    if (img.constant_term() != 0) {
      throw ValidationError("parametrization must satisfy phi(0) = 0");
    }
    if (!img.is_zero()) nonzero = true;
  }
  if (!nonzero) throw ValidationError("parametrization must not be constant");
}

Polynomial BranchParam::compose(const Polynomial& g) const {
  if (g.ring()->var_count() != images.size()) {
    throw RingMismatchError("composition with a parametrization of different arity");
  }
  return g.substitute(images);
}

std::vector<Rat> BranchParam::point_at(const Rat& t) const {
  std::vector<Rat> p;
  p.reserve(images.size());
  for (const Polynomial& img : images) p.push_back(img.evaluate({t}));
  return p;
}

std::vector<Rat> BranchParam::tangent_at(const Rat& t) const {
  std::vector<Rat> v;
  v.reserve(images.size());
  for (const Polynomial& img : images) v.push_back(img.derivative(0).evaluate({t}));
  return v;
}

int BranchParam::min_order() const {
  int best = -1;
  for (const Polynomial& img : images) {
    if (img.is_zero()) continue;
    int o = img.order();
    if (best < 0 || o < best) best = o;
  }
  return best;
}

std::string ComponentCheck::summary() const {
  std::string s;
  auto add = [&s](bool ok, const char* what) {
    s += std::string(ok ? "[ok] " : "[FAIL] ") + what + "\n";
  };
  add(f_vanishes, "f vanishes on the branch");
  add(partials_vanish, "all partial derivatives vanish on the branch");
  add(ideal_vanishes, "declared ideal generators vanish on the branch");
  add(param_valid, "parametrization is nonconstant with phi(0) = 0");
  return s;
}

ComponentCheck verify_component(const Polynomial& f, const ComponentDecl& decl) {
  ComponentCheck check;
  check.f_vanishes = decl.param.compose(f).is_zero();

  check.partials_vanish = true;
  for (std::size_t v = 0; v < f.ring()->var_count(); ++v) {
    if (!decl.param.compose(f.derivative(v)).is_zero()) {
      check.partials_vanish = false;
      break;
    }
  }

  check.ideal_vanishes = true;
  for (const Polynomial& g : decl.ideal_gens) {
    if (!decl.param.compose(g).is_zero()) {
      check.ideal_vanishes = false;
      break;
    }
  }

  check.param_valid = true;  // constructor enforced phi(0) = 0 and nonconstancy
  return check;
}

Int branch_intersection_order(const BranchParam& param, const Polynomial& g) {
  Polynomial composed = param.compose(g);
  if (composed.is_zero()) {
    throw NonProperError("NONPROPER: '" + g.to_string() + "' vanishes identically on the branch");
  }
  return Int(composed.order());
}

ExtendedNat milnor_number_at_point(const Polynomial& g, const std::vector<Rat>& point,
                                   const EngineOptions& opts) {
  const RingPtr& ring = g.ring();
  if (point.size() != ring->var_count()) {
    throw ValidationError("point arity does not match the ring");
  }
  std::vector<Polynomial> images;
  for (std::size_t v = 0; v < ring->var_count(); ++v) {
    images.push_back(Polynomial::variable(ring, v) + Polynomial::constant(ring, point[v]));
  }
  Polynomial translated = g.substitute(images);
  std::vector<Polynomial> jac;
  for (std::size_t v = 0; v < ring->var_count(); ++v) jac.push_back(translated.derivative(v));
  return local_quotient_dimension(jac, opts);
}

namespace {

// f restricted to the hyperplane sum_i a_i (v_i - p_i) = 0, eliminating the
// pivot variable; returns the restriction and the projected point.
std::pair<Polynomial, std::vector<Rat>> restrict_to_hyperplane(
    const Polynomial& f, const std::vector<Rat>& normal, const std::vector<Rat>& point,
    std::size_t pivot) {
  const RingPtr& ring = f.ring();
  std::vector<std::string> names;
  for (std::size_t v = 0; v < ring->var_count(); ++v) {
    if (v != pivot) names.push_back(ring->variables()[v]);
  }
  RingPtr slice = RingContext::make(std::move(names));

  // v_pivot = p_pivot - sum_{i != pivot} (a_i / a_pivot) (v_i - p_i)
  Polynomial pivot_image = Polynomial::constant(slice, point[pivot]);
  std::size_t k = 0;
  std::vector<Polynomial> images(ring->var_count(), Polynomial::zero(slice));
  std::vector<Rat> projected;
  for (std::size_t v = 0; v < ring->var_count(); ++v) {
    if (v == pivot) continue;
    Polynomial var = Polynomial::variable(slice, k);
    images[v] = var;
    projected.push_back(point[v]);
    Rat ratio = normal[v] / normal[pivot];
    if (ratio != 0) {
      pivot_image =
          pivot_image - (var - Polynomial::constant(slice, point[v])).scaled(ratio);
    }
    ++k;
  }
  images[pivot] = pivot_image;
  return {f.substitute(images), std::move(projected)};
}

Int require_finite(const ExtendedNat& mu, const Rat& t, const char* mode) {
  if (mu.is_infinite()) {
    throw UnstableSamplingError(std::string("INFINITE transversal Milnor number in the ") + mode +
                                " slice at t = " + t.get_str() +
                                " (sample point lies on a deeper stratum)");
  }
  return mu.value();
}

}  // namespace

TransversalData transversal_milnor(const Polynomial& f, const ComponentDecl& decl,
                                   std::size_t z0_index, const SamplingConfig& config) {
  ComponentCheck check = verify_component(f, decl);
  if (!check.all()) {
    throw ValidationError("component '" + decl.name + "' failed verification:\n" +
                          check.summary());
  }
  const RingPtr& ring = f.ring();
  const std::size_t n = ring->var_count();
  std::mt19937_64 rng(config.seed ^ name_hash(decl.name));
  std::uniform_int_distribution<int> coeff(-5, 5);

  TransversalData data;
  const int budget = std::min<int>(config.max_samples,
                                   static_cast<int>(std::size(kSamplePrimes)));
  for (int s = 0; s < budget; ++s) {
    Rat t = make_rat(1, kSamplePrimes[s]);
    std::vector<Rat> p = decl.param.point_at(t);
    std::vector<Rat> tangent = decl.param.tangent_at(t);

    // Coordinate slice V(z0 - z0(p)).
    std::vector<Rat> coord_normal(n, Rat(0));
    coord_normal[z0_index] = 1;
    auto [f_coord, p_coord] = restrict_to_hyperplane(f, coord_normal, p, z0_index);
    Int mu_coord =
        require_finite(milnor_number_at_point(f_coord, p_coord, config.engine), t, "coordinate");

    // Random rational hyperplane through p, transverse to the branch.
    std::vector<Rat> normal(n, Rat(0));
    std::size_t pivot = 0;
    while (true) {
      bool all_zero = true;
      for (std::size_t v = 0; v < n; ++v) {
        normal[v] = coeff(rng);
        if (normal[v] != 0) all_zero = false;
      }
      if (all_zero) continue;
      Rat pairing(0);
      for (std::size_t v = 0; v < n; ++v) pairing += normal[v] * tangent[v];
      if (pairing == 0) continue;  // tangent to the branch; redraw
      pivot = 0;
      for (std::size_t v = 1; v < n; ++v) {
        if (abs(normal[v]) > abs(normal[pivot])) pivot = v;
      }
      break;
    }
    auto [f_rand, p_rand] = restrict_to_hyperplane(f, normal, p, pivot);
    Int mu_rand =
        require_finite(milnor_number_at_point(f_rand, p_rand, config.engine), t, "generic");

    data.samples_used.push_back({t, mu_coord, mu_rand, normal});
    if (s >= 1) {
      const TransversalSample& prev = data.samples_used[s - 1];
      if (prev.mu_coordinate_slice == mu_coord && prev.mu_generic_slice == mu_rand &&
          mu_coord == mu_rand) {
        data.mu_ring = mu_coord;
        return data;
      }
    }
  }
  throw UnstableSamplingError(
      "UNSTABLE: transversal Milnor number for component '" + decl.name +
      "' did not stabilize within the sampling budget of " + std::to_string(budget));
}

ComponentData analyze_component(const Polynomial& f, const ComponentDecl& decl,
                                std::size_t z0_index, const SamplingConfig& config) {
  ComponentData out;
  out.name = decl.name;
  out.transversal = transversal_milnor(f, decl, z0_index, config);
  out.mu_ring = out.transversal.mu_ring;
  out.z0_order =
      branch_intersection_order(decl.param, Polynomial::variable(f.ring(), z0_index));
  out.smooth_proxy = decl.param.min_order() == 1;
  return out;
}

Int sigma(const std::vector<ComponentData>& components) {
  Int total(0);
  for (const ComponentData& c : components) total += c.mu_ring;
  return total;
}

Int sigma(const Polynomial& f, const std::vector<ComponentDecl>& decls, std::size_t z0_index,
          const SamplingConfig& config) {
  Int total(0);
  for (const ComponentDecl& d : decls) {
    total += transversal_milnor(f, d, z0_index, config).mu_ring;
  }
  return total;
}

Int lambda1_from_components(const std::vector<ComponentData>& components) {
  Int total(0);
  for (const ComponentData& c : components) total += c.mu_ring * c.z0_order;
  return total;
}

Int lambda1_from_components(const Polynomial& f, const std::vector<ComponentDecl>& decls,
                            std::size_t z0_index, const SamplingConfig& config) {
  Int total(0);
  for (const ComponentDecl& d : decls) {
    ComponentData data = analyze_component(f, d, z0_index, config);
    total += data.mu_ring * data.z0_order;
  }
  return total;
}

Int monomial_curve_milnor(const BranchParam& param) {
  std::vector<long> exponents;
  for (const Polynomial& img : param.images) {
    if (img.is_zero()) continue;
    if (img.terms().size() != 1) {
      throw NotMonomialError("NOT_MONOMIAL: image '" + img.to_string() +
                             "' is not a single monomial in t");
    }
    exponents.push_back(img.terms().begin()->first.exp[0]);
  }
  long g = 0;
  for (long e : exponents) g = std::gcd(g, e);
  if (g != 1) {
    throw NotPrimitiveError("NOT_PRIMITIVE: parametrization exponents have gcd " +
                            std::to_string(g));
  }

  long lo = *std::min_element(exponents.begin(), exponents.end());
  long hi = *std::max_element(exponents.begin(), exponents.end());
  long bound = lo * hi + 1;
  for (;;) {
    std::vector<char> reachable(static_cast<std::size_t>(bound) + 1, 0);
    reachable[0] = 1;
    for (long k = 1; k <= bound; ++k) {
      for (long e : exponents) {
        if (k >= e && reachable[k - e]) {
          reachable[k] = 1;
          break;
        }
      }
    }
    bool tail_full = true;
    for (long k = bound - lo + 1; k <= bound; ++k) {
      if (!reachable[k]) tail_full = false;
    }
    if (tail_full) {
      Int gaps(0);
      for (long k = 1; k <= bound; ++k) {
        if (!reachable[k]) ++gaps;
      }
      return 2 * gaps;
    }
    bound *= 2;
    if (bound > 1000000) {
      throw ConsistencyError("numerical semigroup gap search failed to terminate");
    }
  }
}

}  // namespace betainv
