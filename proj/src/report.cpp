#include <algorithm>
#include <sstream>

#include "svar/error.hpp"
#include "svar/report.hpp"

namespace svar {

const std::vector<std::string>& check_tags() {
  static const std::vector<std::string> tags{"P3.5a", "P3.6a", "P3.6d", "P3.7",  "T3.8",  "P4.3",
                                             "P4.5",  "P4.7",  "P9.2",  "P9.3a", "P9.3b", "P9.4c",
                                             "P9.4d", "P9.5",  "L9.7",  "P9.8",  "C2.3b", "P2.2"};
  return tags;
}

void Report::add_check(std::string tag, std::string statement, Tri verdict, std::string detail) {
  const auto& tags = check_tags();
  if (std::find(tags.begin(), tags.end(), tag) == tags.end()) throw UsageError("report: unknown check tag " + tag);
  checks.push_back({std::move(tag), std::move(statement), verdict, std::move(detail)});
}

int Report::exit_code() const {
  if (unknown) return 1;
  for (const auto& c : checks)
    if (c.verdict != Tri::Yes) return 1;
  return 0;
}

namespace {

const char* verdict_word(Tri t) {
  switch (t) {
    case Tri::Yes: return "pass";
    case Tri::No: return "fail";
    default: return "unknown";
  }
}

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render(std::ostringstream& out, const Json& obj, const std::string& indent) {
  for (const auto& [key, v] : obj.items()) {
    if (v.is_object()) {
      out << indent << key << ":\n";
      render(out, v, indent + "  ");
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); })) {
      out << indent << key << ": ";
      bool first = true;
      for (const auto& x : v) {
        out << (first ? "" : ", ") << scalar(x);
        first = false;
      }
      out << "\n";
    } else if (v.is_array()) {
      out << indent << key << ":\n";
      for (const auto& x : v) out << indent << "  - " << (x.is_object() || x.is_array() ? x.dump() : scalar(x)) << "\n";
    } else {
      out << indent << key << ": " << scalar(v) << "\n";
    }
  }
}

}  // namespace

Json Report::json() const {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["result"] = result;
  j["budgets"] = budgets;
  Json cs = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["tag"] = c.tag;
    e["statement"] = c.statement;
    e["verdict"] = verdict_word(c.verdict);
    if (!c.detail.empty()) e["detail"] = c.detail;
    cs.push_back(std::move(e));
  }
  j["checks"] = std::move(cs);
  return j;
}

std::string Report::text() const {
  std::ostringstream out;
  out << command << "\n";
  render(out, result, "  ");
  if (!budgets.empty()) {
    out << "budgets:\n";
    render(out, budgets, "  ");
  }
  if (!checks.empty()) {
    out << "checks:\n";
    for (const auto& c : checks) {
      out << "  [" << c.tag << "] " << verdict_word(c.verdict) << "  " << c.statement;
      if (!c.detail.empty()) out << " (" << c.detail << ")";
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace svar
