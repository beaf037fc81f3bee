#include "betainv/io.hpp"

#include <sstream>

#include "betainv/parser.hpp"

namespace betainv {

using nlohmann::json;

namespace {

const json& require_field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw ValidationError(std::string("missing field '") + name + "'");
  return *it;
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ValidationError(std::string(what) + " must contain only strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

InputDocument input_from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("input document must be a JSON object");
  InputDocument in;
  in.variables = string_list(require_field(doc, "variables"), "variables");
  if (!require_field(doc, "f").is_string()) throw ValidationError("'f' must be a string");
  in.f_text = doc["f"].get<std::string>();
  if (!require_field(doc, "linear_form").is_string()) {
    throw ValidationError("'linear_form' must be a string");
  }
  in.linear_form_text = doc["linear_form"].get<std::string>();

  if (doc.contains("components")) {
    if (!doc["components"].is_array()) throw ValidationError("'components' must be an array");
    for (const auto& c : doc["components"]) {
      InputDocument::Component comp;
      if (!c.is_object() || !c.contains("name") || !c["name"].is_string()) {
        throw ValidationError("each component needs a string 'name'");
      }
      comp.name = c["name"].get<std::string>();
      comp.ideal_texts = string_list(require_field(c, "ideal"), "component ideal");
      comp.param_texts = string_list(require_field(c, "param"), "component param");
      in.components.push_back(std::move(comp));
    }
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer()) {
      throw ValidationError("'seed' must be an integer");
    }
    in.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("degree_guard")) {
    if (!doc["degree_guard"].is_number_integer()) {
      throw ValidationError("'degree_guard' must be an integer");
    }
    int guard = doc["degree_guard"].get<int>();
    if (guard <= 0) throw ValidationError("'degree_guard' must be positive");
    in.degree_guard = guard;
  }
  if (doc.contains("max_samples")) {
    if (!doc["max_samples"].is_number_integer()) {
      throw ValidationError("'max_samples' must be an integer");
    }
    int n = doc["max_samples"].get<int>();
    if (n <= 0) throw ValidationError("'max_samples' must be positive");
    in.max_samples = n;
  }
  return in;
}

Problem build_problem(const InputDocument& doc) {
  RingPtr ring = RingContext::make(doc.variables);
  if (ring->var_count() < 3) {
    throw ValidationError("at least 3 variables are required");
  }
  Polynomial f = parse_polynomial(doc.f_text, ring);
  LinearForm form = parse_linear_form(doc.linear_form_text, ring);

  Problem problem(ring, std::move(f), std::move(form));
  RingPtr t_ring = RingContext::make({"t"});
  for (const auto& comp : doc.components) {
    if (comp.param_texts.size() != ring->var_count()) {
      throw ValidationError("component '" + comp.name +
                            "': param needs one image per ring variable");
    }
    std::vector<Polynomial> gens;
    for (const std::string& s : comp.ideal_texts) gens.push_back(parse_polynomial(s, ring));
    std::vector<Polynomial> images;
    for (const std::string& s : comp.param_texts) images.push_back(parse_polynomial(s, t_ring));
    problem.decls.push_back(ComponentDecl{comp.name, std::move(gens),
                                          BranchParam(t_ring, std::move(images),
                                                      ring->var_count())});
  }
  if (doc.seed) problem.options.sampling.seed = *doc.seed;
  if (doc.degree_guard) problem.options.engine.degree_guard = *doc.degree_guard;
  if (doc.max_samples) problem.options.sampling.max_samples = *doc.max_samples;
  return problem;
}

FamilySpec family_from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("family document must be a JSON object");
  FamilySpec spec;
  spec.variables = string_list(require_field(doc, "variables"), "variables");
  spec.f_text = require_field(doc, "f").get<std::string>();
  spec.linear_form_text = require_field(doc, "linear_form").get<std::string>();

  if (doc.contains("parameters")) {
    spec.parameters = string_list(doc["parameters"], "parameters");
  } else if (doc.contains("parameter")) {
    spec.parameters = {doc["parameter"].get<std::string>()};
  } else {
    throw ValidationError("family needs 'parameter' or 'parameters'");
  }

  const json& grid = require_field(doc, "grid");
  if (!grid.is_array()) throw ValidationError("'grid' must be an array");
  for (const auto& pt : grid) {
    std::vector<long> values;
    if (pt.is_number_integer()) {
      values.push_back(pt.get<long>());
    } else if (pt.is_array()) {
      for (const auto& v : pt) {
        if (!v.is_number_integer()) throw ValidationError("grid entries must be integers");
        values.push_back(v.get<long>());
      }
    } else {
      throw ValidationError("grid entries must be integers or integer arrays");
    }
    spec.grid.push_back(std::move(values));
  }

  if (doc.contains("components")) {
    for (const auto& c : doc["components"]) {
      ComponentTemplate tmpl;
      tmpl.name = require_field(c, "name").get<std::string>();
      tmpl.ideal_texts = string_list(require_field(c, "ideal"), "component ideal");
      tmpl.param_texts = string_list(require_field(c, "param"), "component param");
      spec.components.push_back(std::move(tmpl));
    }
  }
  if (doc.contains("seed")) spec.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("degree_guard")) spec.degree_guard = doc["degree_guard"].get<int>();
  return spec;
}

json json_int(const Int& value) {
  if (value.fits_slong_p()) return json(static_cast<std::int64_t>(value.get_si()));
  return json(value.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw ValidationError("expected an integer (number or decimal string)");
}

json report_to_json(const BetaReport& r) {
  json components = json::array();
  for (const ComponentReport& c : r.components) {
    components.push_back({{"name", c.name},
                          {"mu_ring", json_int(c.mu_ring)},
                          {"z0_order", json_int(c.z0_order)},
                          {"smooth_proxy", c.smooth_proxy}});
  }
  json betti = {{"bn1_bound", json_int(r.betti.bn1_bound)},
                {"bn_bound", json_int(r.betti.bn_bound)},
                {"difference", json_int(r.betti.difference)}};
  if (r.betti.exact) {
    betti["bn1_exact"] = json_int(r.betti.bn1_exact);
    betti["bn_exact"] = json_int(r.betti.bn_exact);
  }
  return json{{"form", r.form_text},
              {"lambda0", json_int(r.lambda0)},
              {"lambda1", json_int(r.lambda1)},
              {"lambda1_components", json_int(r.lambda1_components)},
              {"slice_mu", json_int(r.slice_mu)},
              {"sigma", json_int(r.sigma)},
              {"beta", json_int(r.beta)},
              {"beta_second_form", json_int(r.beta_second_form)},
              {"c_f", r.c_f},
              {"components", components},
              {"polar_is_unit", r.polar_is_unit},
              {"dfdz0_zero_warning", r.dfdz0_zero_warning},
              {"saturation_exponent", r.saturation_exponent},
              {"betti_bounds", betti}};
}

json output_document(const BetaReport& report, std::uint64_t input_hash,
                     const std::optional<json>& timings) {
  std::ostringstream hash;
  hash << std::hex << input_hash;
  json checks = json::array();
  for (const CheckOutcome& c : report.checks) {
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  return json{{"input_hash", hash.str()},
              {"report", report_to_json(report)},
              {"checks", checks},
              {"timings", timings ? *timings : json(nullptr)}};
}

std::string human_report(const BetaReport& r, bool verbose) {
  std::ostringstream out;
  out << "z0 = " << r.form_text << "\n";
  out << "lambda0 = " << r.lambda0.get_str() << "\n";
  out << "lambda1 = " << r.lambda1.get_str() << "  (component sum";
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    out << (i == 0 ? ": " : " + ") << r.components[i].mu_ring.get_str() << "*"
        << r.components[i].z0_order.get_str();
  }
  out << " = " << r.lambda1_components.get_str() << ")\n";
  out << "slice Milnor number = " << r.slice_mu.get_str() << "\n";
  out << "sigma = " << r.sigma.get_str() << "\n";
  out << "beta = lambda0 - lambda1 + sigma = " << r.lambda0.get_str() << " - "
      << r.lambda1.get_str() << " + " << r.sigma.get_str() << " = " << r.beta.get_str() << "\n";
  out << "     = lambda0 - sum_C mu_C*((C.V(z0))_0 - 1) = " << r.lambda0.get_str();
  for (const ComponentReport& c : r.components) {
    out << " - " << c.mu_ring.get_str() << "*(" << c.z0_order.get_str() << " - 1)";
  }
  out << " = " << r.beta_second_form.get_str() << "\n";
  out << "components (c_f = " << r.c_f << "):\n";
  for (const ComponentReport& c : r.components) {
    out << "  " << c.name << ": mu_ring = " << c.mu_ring.get_str()
        << ", (C.V(z0))_0 = " << c.z0_order.get_str()
        << (c.smooth_proxy ? "  [order-1 coordinate]" : "") << "\n";
  }
  if (r.dfdz0_zero_warning) {
    out << "warning: f does not involve z0; the polar curve is empty and lambda0 = 0\n";
  }
  out << "betti bounds (reported, not computed): b_{n-1} <= "
      << r.betti.bn1_bound.get_str() << ", b_n <= " << r.betti.bn_bound.get_str()
      << ", b_n - b_{n-1} = " << r.betti.difference.get_str();
  if (r.betti.exact) {
    out << "  [beta = 0 pins b_{n-1} = " << r.betti.bn1_exact.get_str()
        << ", b_n = " << r.betti.bn_exact.get_str() << "]";
  }
  out << "\n";
  if (verbose) {
    out << "polar ideal is unit: " << (r.polar_is_unit ? "yes" : "no")
        << ", saturation exponent: " << r.saturation_exponent << "\n";
  }
  out << "checks:\n";
  for (const CheckOutcome& c : r.checks) {
    out << "  [" << to_string(c.status) << "] " << c.name;
    if (verbose || c.status == CheckStatus::Fail) out << " -- " << c.detail;
    out << "\n";
  }
  return out.str();
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace betainv
