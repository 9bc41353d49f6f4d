#pragma once

#include <string>
#include <vector>

#include "optpath/config.hpp"

namespace optpath {

inline constexpr const char* kVersion = "0.1.0";

struct RunManifest {
  std::string experiment;
  double wall_seconds = 0;
  std::vector<std::pair<std::string, std::string>> files;  // name, fnv1a-64 hash
  std::string manifest_path;
  bool ok = true;  // false when a verify run had failing checks
};

// Dispatches the configured experiment, writes its CSV/JSON outputs under
// config.output_dir and finally the manifest (atomically; a failed run leaves
// no manifest behind).
RunManifest run(const RunConfig& config);

// FNV-1a 64-bit content hash, hex-encoded (manifest integrity tag).
std::string fnv1a_hex(const std::string& bytes);

}  // namespace optpath
