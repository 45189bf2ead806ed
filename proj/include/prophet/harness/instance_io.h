#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "prophet/harness/scaling.h"
#include "prophet/instance.h"

namespace prophet::harness {

struct InstanceFile {
  AllocationInstance instance;
  std::optional<ScalingRule> scaling;
  std::vector<int> k_list;
};

// Parses the JSON instance format; throws ConfigError with the offending
// field on malformed input.
InstanceFile parse_instance_json(const std::string& text, const std::string& name = "file");
InstanceFile load_instance_file(const std::filesystem::path& path);

}  // namespace prophet::harness
