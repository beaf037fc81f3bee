#include "betainv/beta.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "betainv/parser.hpp"

namespace betainv {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::NotApplicable: return "N/A";
  }
  return "?";
}

Polynomial CoordinateChange::apply(const Polynomial& p) const {
  if (identity) return p;
  return p.substitute(var_images);
}

ComponentDecl CoordinateChange::apply(const ComponentDecl& decl,
                                      const std::vector<Rat>& form_coeffs) const {
  if (identity) return decl;
  std::vector<Polynomial> gens;
  for (const Polynomial& g : decl.ideal_gens) gens.push_back(apply(g));

  // New first coordinate along the branch is the form composed with phi;
  // the remaining coordinates are the untouched source images.
  Polynomial first = Polynomial::zero(decl.param.t_ring);
  for (std::size_t v = 0; v < form_coeffs.size(); ++v) {
    if (form_coeffs[v] != 0) first = first + decl.param.images[v].scaled(form_coeffs[v]);
  }
  std::vector<Polynomial> images;
  images.push_back(std::move(first));
  for (std::size_t v = 0; v < source->var_count(); ++v) {
    if (v != pivot) images.push_back(decl.param.images[v]);
  }
  return ComponentDecl{decl.name, std::move(gens),
                       BranchParam(decl.param.t_ring, std::move(images), target->var_count())};
}

CoordinateChange materialize_form(const RingPtr& ring, const LinearForm& form) {
  const std::vector<Rat>& c = form.coefficients();
  CoordinateChange change;
  change.source = ring;

  bool is_first_coordinate = c[0] == 1;
  for (std::size_t v = 1; v < c.size() && is_first_coordinate; ++v) {
    if (c[v] != 0) is_first_coordinate = false;
  }
  if (is_first_coordinate) {
    change.target = ring;
    change.identity = true;
    for (std::size_t v = 0; v < ring->var_count(); ++v) {
      change.var_images.push_back(Polynomial::variable(ring, v));
    }
    return change;
  }

  std::size_t pivot = 0;
  for (std::size_t v = 1; v < c.size(); ++v) {
    if (abs(c[v]) > abs(c[pivot])) pivot = v;
  }
  change.pivot = pivot;

  // Name the new first coordinate after the variable when the form is a
  // plain coordinate; otherwise pick a fresh name.
  std::vector<std::string> names;
  auto single = form.single_variable();
  if (single && c[*single] == 1) {
    names.push_back(ring->variables()[*single]);
  } else {
    std::vector<std::string> kept;
    for (std::size_t v = 0; v < ring->var_count(); ++v) {
      if (v != pivot) kept.push_back(ring->variables()[v]);
    }
    std::string fresh;
    for (const char* cand : {"u", "v", "w", "s", "q"}) {
      if (std::find(kept.begin(), kept.end(), cand) == kept.end()) {
        fresh = cand;
        break;
      }
    }
    for (int i = 0; fresh.empty(); ++i) {
      std::string cand = "u" + std::to_string(i);
      if (std::find(kept.begin(), kept.end(), cand) == kept.end()) fresh = cand;
    }
    names.push_back(fresh);
  }
  for (std::size_t v = 0; v < ring->var_count(); ++v) {
    if (v != pivot) names.push_back(ring->variables()[v]);
  }
  change.target = RingContext::make(std::move(names));

  // z_pivot = (w0 - sum_{v != pivot} c_v w_v) / c_pivot; other variables map
  // to their (shifted) positions.
  Polynomial pivot_image = Polynomial::variable(change.target, 0);
  std::size_t k = 1;
  std::vector<std::size_t> slot(ring->var_count(), 0);
  for (std::size_t v = 0; v < ring->var_count(); ++v) {
    if (v == pivot) continue;
    slot[v] = k++;
  }
  for (std::size_t v = 0; v < ring->var_count(); ++v) {
    if (v == pivot || c[v] == 0) continue;
    pivot_image = pivot_image - Polynomial::variable(change.target, slot[v]).scaled(c[v]);
  }
  pivot_image = pivot_image.scaled(Rat(1) / c[pivot]);

  for (std::size_t v = 0; v < ring->var_count(); ++v) {
    if (v == pivot) {
      change.var_images.push_back(pivot_image);
    } else {
      change.var_images.push_back(Polynomial::variable(change.target, slot[v]));
    }
  }
  return change;
}

namespace {

Int min_int(const Int& a, const Int& b) { return a < b ? a : b; }

}  // namespace

BettiBounds betti_bounds(const BetaReport& r) {
  BettiBounds b;
  b.bn1_bound = min_int(r.lambda1, r.sigma);
  b.bn_bound = min_int(r.lambda0, r.beta);
  b.difference = r.lambda0 - r.lambda1;
  if (r.beta == 0) {
    b.exact = true;
    b.bn_exact = 0;
    b.bn1_exact = r.sigma;
  } else {
    b.exact = false;
    b.bn_exact = 0;
    b.bn1_exact = 0;
  }
  return b;
}

std::vector<CheckOutcome> theorem_checks(const BetaReport& r) {
  std::vector<CheckOutcome> out;
  auto add = [&out](std::string name, CheckStatus status, std::string detail) {
    out.push_back({std::move(name), status, std::move(detail)});
  };

  add("beta_nonnegative", r.beta >= 0 ? CheckStatus::Pass : CheckStatus::Fail,
      "beta = " + r.beta.get_str());

  if (r.beta == 0) {
    add("beta_zero_single_component",
        r.c_f == 1 ? CheckStatus::Pass : CheckStatus::Fail,
        "beta = 0 forces a single component; declared c_f = " + std::to_string(r.c_f));
  } else {
    add("beta_zero_single_component", CheckStatus::NotApplicable,
        "beta = " + r.beta.get_str() + " != 0");
  }

  if (r.beta == 1) {
    add("beta_one_two_components", r.c_f == 2 ? CheckStatus::Pass : CheckStatus::Fail,
        "beta = 1 forces exactly two components; declared c_f = " + std::to_string(r.c_f));
  } else {
    add("beta_one_two_components", CheckStatus::NotApplicable,
        "beta = " + r.beta.get_str() + " != 1");
  }

  if (r.slice_mu == r.lambda1) {
    bool match = r.c_f == 1;
    std::string detail = "slice Milnor number " + r.slice_mu.get_str() +
                         " splits as the component sum, which forces a single smooth component "
                         "transverse to V(z0);";
    if (r.c_f == 1) {
      const ComponentReport& c = r.components.front();
      match = c.z0_order == 1 && c.smooth_proxy;
      detail += " declared component has (C.V(z0))_0 = " + c.z0_order.get_str() +
                (c.smooth_proxy ? ", order-1 coordinate present" : ", no order-1 coordinate") +
                " (transversal Milnor number sampled-stable at " + c.mu_ring.get_str() + ")";
    } else {
      detail += " declared c_f = " + std::to_string(r.c_f);
    }
    add("nonsplitting_slice", match ? CheckStatus::Pass : CheckStatus::Fail, detail);
  } else {
    add("nonsplitting_slice", CheckStatus::NotApplicable,
        "slice Milnor number " + r.slice_mu.get_str() + " != lambda1 = " + r.lambda1.get_str());
  }

  bool all_transverse_smooth = !r.components.empty();
  for (const ComponentReport& c : r.components) {
    if (c.z0_order != 1 || !c.smooth_proxy) all_transverse_smooth = false;
  }
  if (all_transverse_smooth) {
    add("smooth_transverse_lambda0",
        r.beta == r.lambda0 ? CheckStatus::Pass : CheckStatus::Fail,
        "all components smooth and transverse, so beta (" + r.beta.get_str() +
            ") must equal lambda0 (" + r.lambda0.get_str() + ")");
  } else {
    add("smooth_transverse_lambda0", CheckStatus::NotApplicable,
        "hypothesis fails: some component is not smooth-transverse to V(z0)");
  }
  return out;
}

bool has_consistency_failure(const std::vector<CheckOutcome>& checks) {
  for (const CheckOutcome& c : checks) {
    if (c.status != CheckStatus::Fail) continue;
    if (c.name == "beta_nonnegative" || c.name == "beta_zero_single_component" ||
        c.name == "beta_one_two_components" || c.name == "smooth_transverse_lambda0") {
      return true;
    }
  }
  return false;
}

BetaReport compute_beta(const Polynomial& f, const LinearForm& z0,
                        const std::vector<ComponentDecl>& decls, const BetaOptions& opts) {
  if (!same_ring(f.ring(), z0.ring())) throw RingMismatchError("form over a different ring");

  CoordinateChange change = materialize_form(f.ring(), z0);
  Polynomial g = change.apply(f);
  std::vector<ComponentDecl> moved;
  for (const ComponentDecl& d : decls) moved.push_back(change.apply(d, z0.coefficients()));

  SingularitySetup setup = admissibility_check(g, 0, opts.engine);

  for (const ComponentDecl& d : moved) {
    ComponentCheck check = verify_component(g, d);
    if (!check.all()) {
      throw ValidationError("component '" + d.name + "' failed verification:\n" +
                            check.summary());
    }
  }

  BetaReport r;
  r.form_text = z0.to_string();
  r.lambda0 = le_number_0(setup, opts.engine);
  r.lambda1 = le_number_1(setup, opts.engine);
  r.slice_mu = slice_milnor(setup);
  r.polar_is_unit = ideal_is_unit(setup.polar, opts.engine);
  r.dfdz0_zero_warning = setup.dfdz0_is_zero;
  r.saturation_exponent = setup.saturation_exponent;

  SamplingConfig sampling = opts.sampling;
  sampling.engine = opts.engine;
  std::vector<ComponentData> components;
  for (const ComponentDecl& d : moved) {
    components.push_back(analyze_component(g, d, 0, sampling));
  }
  r.c_f = components.size();
  for (const ComponentData& c : components) {
    r.components.push_back({c.name, c.mu_ring, c.z0_order, c.smooth_proxy});
  }
  r.sigma = sigma(components);
  r.lambda1_components = lambda1_from_components(components);

  if (r.lambda1 != r.lambda1_components) {
    throw ConsistencyError(
        "CONSISTENCY_FAILURE: lambda1 two-path mismatch: component-free value " +
        r.lambda1.get_str() + " vs component sum " + r.lambda1_components.get_str() +
        " (missing, duplicated, or wrong component declarations, or an implementation bug)");
  }

  r.beta = r.lambda0 - r.lambda1 + r.sigma;
  Int correction(0);
  for (const ComponentData& c : components) correction += c.mu_ring * (c.z0_order - 1);
  r.beta_second_form = r.lambda0 - correction;
  if (r.beta != r.beta_second_form) {
    throw ConsistencyError("CONSISTENCY_FAILURE: the two defining expressions for beta disagree");
  }

  r.betti = betti_bounds(r);
  r.checks = theorem_checks(r);
  return r;
}

InvarianceResult invariance_check(const Polynomial& f, const std::vector<LinearForm>& forms,
                                  const std::vector<ComponentDecl>& decls,
                                  const BetaOptions& opts) {
  std::vector<LinearForm> distinct;
  for (const LinearForm& form : forms) {
    bool dup = false;
    for (const LinearForm& seen : distinct) {
      if (form.proportional_to(seen)) dup = true;
    }
    if (!dup) distinct.push_back(form);
  }
  if (distinct.size() < 2) {
    throw TooFewFormsError("need at least two distinct candidate forms, got " +
                           std::to_string(distinct.size()));
  }

  InvarianceResult result;
  for (const LinearForm& form : distinct) {
    InvarianceRow row;
    row.form_text = form.to_string();
    try {
      row.report = compute_beta(f, form, decls, opts);
      ++result.admissible_count;
    } catch (const AdmissibilityError& e) {
      row.rejection = e.what();
    }
    result.rows.push_back(std::move(row));
  }
  if (result.admissible_count < 2) {
    throw TooFewFormsError("fewer than two admissible forms among the candidates");
  }

  result.pass = true;
  const BetaReport* first = nullptr;
  for (const InvarianceRow& row : result.rows) {
    if (!row.report) continue;
    if (!first) {
      first = &*row.report;
    } else if (row.report->beta != first->beta || row.report->sigma != first->sigma) {
      result.pass = false;
    }
  }
  return result;
}

namespace {

std::string substitute_parameters(const std::string& text, const std::vector<std::string>& names,
                                  const std::vector<long>& values) {
  std::string out = text;
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::regex word(std::string("\\b") + names[i] + std::string("\\b"));
    out = std::regex_replace(out, word, std::to_string(values[i]));
  }
  return out;
}

}  // namespace

std::vector<FamilyRow> family_scan(const FamilySpec& family) {
  if (family.parameters.empty()) throw ValidationError("family needs at least one parameter");
  for (const std::string& p : family.parameters) {
    if (!RingContext::valid_variable_name(p)) {
      throw ValidationError("invalid parameter name '" + p + "'");
    }
    for (const std::string& v : family.variables) {
      if (p == v) throw ValidationError("parameter '" + p + "' collides with a ring variable");
    }
    if (p == "t") throw ValidationError("parameter name 't' collides with the branch variable");
  }
  for (const auto& point : family.grid) {
    if (point.size() != family.parameters.size()) {
      throw ValidationError("grid point arity does not match the parameter list");
    }
  }

  std::vector<FamilyRow> rows;
  for (const auto& point : family.grid) {
    FamilyRow row;
    row.point = point;
    try {
      RingPtr ring = RingContext::make(family.variables);
      RingPtr t_ring = RingContext::make({"t"});
      auto instantiate = [&](const std::string& text) {
        return substitute_parameters(text, family.parameters, point);
      };
      Polynomial f = parse_polynomial(instantiate(family.f_text), ring);
      LinearForm form = parse_linear_form(instantiate(family.linear_form_text), ring);
      std::vector<ComponentDecl> decls;
      for (const ComponentTemplate& tmpl : family.components) {
        std::vector<Polynomial> gens;
        for (const std::string& s : tmpl.ideal_texts) {
          gens.push_back(parse_polynomial(instantiate(s), ring));
        }
        std::vector<Polynomial> images;
        for (const std::string& s : tmpl.param_texts) {
          images.push_back(parse_polynomial(instantiate(s), t_ring));
        }
        decls.push_back(
            ComponentDecl{tmpl.name, std::move(gens),
                          BranchParam(t_ring, std::move(images), ring->var_count())});
      }
      BetaOptions opts;
      opts.engine.degree_guard = family.degree_guard;
      opts.sampling.seed = family.seed;
      row.report = compute_beta(f, form, decls, opts);
      row.status = "ok";

      if (decls.size() == 1) {
        try {
          Int mu0 = monomial_curve_milnor(decls.front().param);
          row.mu0_curve = mu0;
          row.beta_ge_2mu0 = row.report->beta >= 2 * mu0;
        } catch (const NotMonomialError&) {
        } catch (const NotPrimitiveError&) {
        }
      }
    } catch (const AdmissibilityError& e) {
      row.status = reject_tag(e.reason());
      row.detail = e.what();
    } catch (const ParseError& e) {
      row.status = "PARSE_ERROR";
      row.detail = e.what();
    } catch (const ResourceLimitError& e) {
      row.status = "RESOURCE_LIMIT";
      row.detail = e.what();
    } catch (const UnstableSamplingError& e) {
      row.status = "UNSTABLE";
      row.detail = e.what();
    } catch (const ConsistencyError& e) {
      row.status = "CONSISTENCY_FAILURE";
      row.detail = e.what();
    } catch (const ValidationError& e) {
      row.status = "VALIDATION_ERROR";
      row.detail = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace betainv
