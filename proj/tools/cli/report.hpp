#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace nodal::cli {

enum class Status { pass, fail, info, error };

std::string_view to_string(Status status) noexcept;

/// Result of one command. Text and JSON renderings are both produced from
/// `payload`, so they carry the same numbers.
struct Report {
  std::string command;
  Status status = Status::info;
  nlohmann::ordered_json payload = nlohmann::ordered_json::object();
};

nlohmann::ordered_json to_json(const Report& report);

void write_json(std::ostream& out, const Report& report);
void write_text(std::ostream& out, const Report& report);

}  // namespace nodal::cli
