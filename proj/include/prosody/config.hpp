#pragma once

#include <string>
#include <string_view>

#include "prosody/f0.hpp"
#include "prosody/wellformedness.hpp"

namespace prosody::config {

struct RunConfig {
  f0::F0Params f0;
  wellformedness::ConstraintConfig constraints;
};

/// Flat JSON object whose keys are F0Params / ConstraintConfig field names.
/// Missing keys keep their defaults; unknown keys and wrong types raise
/// Error(ConfigError); out-of-range values raise Error(InvalidParams).
RunConfig parse_config(std::string_view json_text, RunConfig base = {});

/// Reads and parses a config file; a missing or unreadable file raises Error(IoError).
RunConfig load_config(const std::string& path, RunConfig base = {});

std::string to_json(const RunConfig& cfg);

}  // namespace prosody::config
