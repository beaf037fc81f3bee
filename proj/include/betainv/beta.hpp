#ifndef BETAINV_BETA_HPP
#define BETAINV_BETA_HPP

#include <optional>
#include <string>
#include <vector>

#include "betainv/le_numbers.hpp"
#include "betainv/transversal.hpp"

namespace betainv {

struct BetaOptions {
  EngineOptions engine;
  SamplingConfig sampling;
};

enum class CheckStatus { Pass, Fail, NotApplicable };

const char* to_string(CheckStatus s);

struct CheckOutcome {
  std::string name;
  CheckStatus status;
  std::string detail;
};

/// Reported constraints on the (uncomputed) Milnor fiber cohomology in
/// degrees n-1 and n. Informational only.
struct BettiBounds {
  Int bn1_bound;   // b~_{n-1} <= min(lambda1, sigma)
  Int bn_bound;    // b~_n     <= min(lambda0, beta)
  Int difference;  // b~_n - b~_{n-1} = lambda0 - lambda1, exactly
  bool exact = false;  // beta = 0 pins both groups
  Int bn1_exact;
  Int bn_exact;
};

struct ComponentReport {
  std::string name;
  Int mu_ring;
  Int z0_order;
  bool smooth_proxy;
};

struct BetaReport {
  std::string form_text;

  Int lambda0;
  Int lambda1;              // component-free path
  Int lambda1_components;   // Σ_C (C·V(z0))_0 μ̊_C; must equal lambda1
  Int slice_mu;
  Int sigma;
  Int beta;                 // lambda0 - lambda1 + sigma
  Int beta_second_form;     // lambda0 - Σ_C μ̊_C ((C·V(z0))_0 - 1); must equal beta
  std::size_t c_f = 0;

  std::vector<ComponentReport> components;
  bool polar_is_unit = false;
  bool dfdz0_zero_warning = false;
  int saturation_exponent = 0;

  BettiBounds betti;
  std::vector<CheckOutcome> checks;
};

/// Invertible linear coordinate change sending a linear form to the first
/// coordinate: pivot on the largest-|coefficient| variable, identity
/// elsewhere.
struct CoordinateChange {
  RingPtr source;
  RingPtr target;
  /// Image of each source variable as a polynomial over the target ring.
  std::vector<Polynomial> var_images;
  std::size_t pivot = 0;  // source variable replaced by the form
  bool identity = false;

  Polynomial apply(const Polynomial& p) const;
  ComponentDecl apply(const ComponentDecl& decl, const std::vector<Rat>& form_coeffs) const;
};

CoordinateChange materialize_form(const RingPtr& ring, const LinearForm& form);

/// Full pipeline: coordinate change, admissibility, Lê numbers, component
/// data, both forms of the beta invariant, theorem checks, Betti bounds.
/// Throws ConsistencyError on a two-path λ¹ mismatch.
BetaReport compute_beta(const Polynomial& f, const LinearForm& z0,
                        const std::vector<ComponentDecl>& decls, const BetaOptions& opts = {});

std::vector<CheckOutcome> theorem_checks(const BetaReport& report);

BettiBounds betti_bounds(const BetaReport& report);

/// True when the outcome set contains a FAIL among the theorem checks
/// classified as internal-consistency violations.
bool has_consistency_failure(const std::vector<CheckOutcome>& checks);

struct InvarianceRow {
  std::string form_text;
  std::optional<BetaReport> report;
  std::string rejection;  // nonempty when the form was inadmissible
};

struct InvarianceResult {
  std::vector<InvarianceRow> rows;
  std::size_t admissible_count = 0;
  bool pass = false;  // all admissible forms agree on beta and sigma
};

/// Recomputes the report for every candidate form; inadmissible forms are
/// reported and skipped. Throws ValidationError when fewer than two
/// distinct candidates (or fewer than two admissible ones) remain.
InvarianceResult invariance_check(const Polynomial& f, const std::vector<LinearForm>& forms,
                                  const std::vector<ComponentDecl>& decls,
                                  const BetaOptions& opts = {});

struct ComponentTemplate {
  std::string name;
  std::vector<std::string> ideal_texts;
  std::vector<std::string> param_texts;
};

/// A parameterized family of inputs: integer parameters substituted
/// textually (whole-word) into the polynomial texts at each grid point.
struct FamilySpec {
  std::vector<std::string> variables;
  std::string f_text;
  std::string linear_form_text;
  std::vector<ComponentTemplate> components;
  std::vector<std::string> parameters;
  std::vector<std::vector<long>> grid;
  std::uint64_t seed = SamplingConfig{}.seed;
  int degree_guard = EngineOptions{}.degree_guard;
};

struct FamilyRow {
  std::vector<long> point;
  std::string status;  // "ok" or an error tag
  std::string detail;
  std::optional<BetaReport> report;
  std::optional<Int> mu0_curve;        // Buchweitz–Greuel μ of the critical curve
  std::optional<bool> beta_ge_2mu0;    // candidate inequality, reported not asserted
};

/// One row per grid point; per-member errors are collected in the row
/// status and the scan continues.
std::vector<FamilyRow> family_scan(const FamilySpec& family);

}  // namespace betainv

#endif
