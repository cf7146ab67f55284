#pragma once

#include <stdexcept>
#include <string>

#include "hermin/instance.hpp"

namespace hermin {

/// Malformed JSON or a schema violation; the message carries the byte
/// position (for JSON errors) or the offending field path.
class InstanceParseError : public std::runtime_error {
 public:
  explicit InstanceParseError(const std::string& what) : std::runtime_error(what) {}
};

InstanceSpec parse_instance_text(const std::string& text);
InstanceSpec load_instance(const std::string& path);

/// Canonical serialization: alphabetical keys, two-space indent, rationals
/// as strings. gen -> parse -> serialize is byte-identical.
std::string serialize_instance(const InstanceSpec& spec);

}  // namespace hermin
