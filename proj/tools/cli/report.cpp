#include "cli/report.hpp"

#include <ostream>

namespace nodal::cli {
namespace {

std::string scalar(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_scalar_array(const nlohmann::ordered_json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v) {
    if (e.is_structured()) return false;
  }
  return true;
}

void write_value(std::ostream& out, const nlohmann::ordered_json& v, int indent);

void write_checks(std::ostream& out, const nlohmann::ordered_json& checks) {
  for (const auto& c : checks) {
    const bool pass = c.value("pass", false);
    out << (pass ? "PASS  " : "FAIL  ") << c.value("name", "") << "  (expected " << scalar(c["expected"])
        << ", got " << scalar(c["actual"]) << ")\n";
  }
}

void write_steps(std::ostream& out, const nlohmann::ordered_json& steps, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::size_t i = 0;
  for (const auto& s : steps) {
    out << pad << '[' << ++i << "] " << s.value("rule", "");
    for (const auto& [key, value] : s["inputs"].items()) out << ' ' << key << '=' << scalar(value);
    out << " => " << scalar(s["asserted_output"]);
    if (s.contains("verdict")) out << "  (" << s["verdict"].get<std::string>() << ')';
    out << '\n' << pad << "    " << s.value("quote", "") << '\n';
  }
}

void write_object(std::ostream& out, const nlohmann::ordered_json& obj, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : obj.items()) {
    if (key == "checks" && value.is_array()) {
      write_checks(out, value);
    } else if (key == "steps" && value.is_array()) {
      out << pad << key << ":\n";
      write_steps(out, value, indent + 2);
    } else if (value.is_object()) {
      out << pad << key << ":\n";
      write_object(out, value, indent + 2);
    } else if (value.is_array() && !is_scalar_array(value)) {
      out << pad << key << ":\n";
      for (const auto& e : value) {
        out << pad << "  -\n";
        write_value(out, e, indent + 4);
      }
    } else {
      out << pad << key << ": " << scalar(value) << '\n';
    }
  }
}

void write_value(std::ostream& out, const nlohmann::ordered_json& v, int indent) {
  if (v.is_object()) {
    write_object(out, v, indent);
  } else {
    out << std::string(static_cast<std::size_t>(indent), ' ') << scalar(v) << '\n';
  }
}

}  // namespace

std::string_view to_string(Status status) noexcept {
  switch (status) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::info:
      return "info";
    case Status::error:
      return "error";
  }
  return "unknown";
}

nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["command"] = report.command;
  j["status"] = std::string(to_string(report.status));
  j["payload"] = report.payload;
  return j;
}

void write_json(std::ostream& out, const Report& report) { out << to_json(report).dump(2) << '\n'; }

void write_text(std::ostream& out, const Report& report) {
  out << report.command << ": " << to_string(report.status) << '\n';
  write_object(out, report.payload, 2);
}

}  // namespace nodal::cli
