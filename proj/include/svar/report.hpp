#pragma once
// Command reports: one JSON object per run with command, inputs, result,
// budgets and checks, plus a plain-text rendering.

#include <string>
#include <vector>

#include "json.hpp"

#include "svar/poly.hpp"

namespace svar {

using Json = nlohmann::ordered_json;

struct Check {
  std::string tag;  // from check_tags()
  std::string statement;
  Tri verdict = Tri::Unknown;
  std::string detail;
};

/// The fixed proposition tag vocabulary.
const std::vector<std::string>& check_tags();

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  Json budgets = Json::object();
  std::vector<Check> checks;
  bool unknown = false;  // the main verdict is unknown at budget

  /// Throws UsageError for a tag outside the vocabulary.
  void add_check(std::string tag, std::string statement, Tri verdict, std::string detail = {});
  /// 0 when everything is decided and every check passed, 1 otherwise.
  int exit_code() const;
  Json json() const;
  std::string text() const;
};

}  // namespace svar
