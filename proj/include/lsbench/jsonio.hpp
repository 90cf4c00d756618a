#pragma once

#include <json.hpp>

#include "lsbench/state.hpp"

namespace lsb {

// Key order is part of the canonical encoding (content ids hash the dump),
// so everything goes through ordered_json.
using Json = nlohmann::ordered_json;

Json state_to_json(const State& s);
State state_from_json(const Json& j);

Json op_to_json(const Operation& op);
Operation op_from_json(const Json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace lsb
