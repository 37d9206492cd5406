#include "abf/fixtures.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace abf {

std::string data_dir() {
  if (const char* env = std::getenv("ABF_DATA_DIR")) return env;
  return std::string(ABF_SOURCE_DIR) + "/data/reference";
}

nlohmann::json load_reference(const std::string& relpath) {
  std::string path = data_dir() + "/" + relpath;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing reference data file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

bool reference_exists(const std::string& relpath) {
  return std::filesystem::exists(data_dir() + "/" + relpath);
}

}  // namespace abf
