#ifndef BETAINV_IO_HPP
#define BETAINV_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "betainv/beta.hpp"

namespace betainv {

/// Raw input document: everything still as text, schema-validated only.
struct InputDocument {
  std::vector<std::string> variables;
  std::string f_text;
  std::string linear_form_text;
  struct Component {
    std::string name;
    std::vector<std::string> ideal_texts;
    std::vector<std::string> param_texts;
  };
  std::vector<Component> components;
  std::optional<std::uint64_t> seed;
  std::optional<int> degree_guard;
  std::optional<int> max_samples;
};

InputDocument input_from_json(const nlohmann::json& doc);

/// Parsed and validated problem, ready for compute_beta.
struct Problem {
  RingPtr ring;
  Polynomial f;
  LinearForm form;
  std::vector<ComponentDecl> decls;
  BetaOptions options;

  Problem(RingPtr r, Polynomial func, LinearForm l)
      : ring(std::move(r)), f(std::move(func)), form(std::move(l)) {}
};

Problem build_problem(const InputDocument& doc);

FamilySpec family_from_json(const nlohmann::json& doc);

/// Integers in machine output: JSON number when it fits in 64 bits,
/// decimal string beyond that. Round-trips exactly.
nlohmann::json json_int(const Int& value);
Int int_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const BetaReport& report);
nlohmann::json output_document(const BetaReport& report, std::uint64_t input_hash,
                               const std::optional<nlohmann::json>& timings);

std::string human_report(const BetaReport& report, bool verbose);

std::uint64_t fnv1a64(std::string_view data);

}  // namespace betainv

#endif
