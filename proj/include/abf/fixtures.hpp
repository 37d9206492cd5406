#pragma once

#include <string>

#include <json.hpp>

namespace abf {

/// Reference data files (machine-readable regression tables shipped with the
/// repo under data/reference). Path resolution: $ABF_DATA_DIR, else the
/// source-tree data directory baked in at configure time.
std::string data_dir();

nlohmann::json load_reference(const std::string& relpath);

bool reference_exists(const std::string& relpath);

}  // namespace abf
