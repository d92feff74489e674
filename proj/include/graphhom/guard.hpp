// Copyright 2026 The graphhom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace graphhom {

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Memory budget from GRAPHHOM_MAX_MEM ("512M", "4G", or bytes); 0 = none.
inline std::uint64_t memory_limit_bytes() {
  const char* v = std::getenv("GRAPHHOM_MAX_MEM");
  if (!v || !*v) return 0;
  char* end = nullptr;
  double x = std::strtod(v, &end);
  std::uint64_t mult = 1;
  if (end && *end) {
    switch (*end) {
      case 'k': case 'K': mult = 1ull << 10; break;
      case 'm': case 'M': mult = 1ull << 20; break;
      case 'g': case 'G': mult = 1ull << 30; break;
      default: throw ResourceError(std::string("GRAPHHOM_MAX_MEM: bad value ") + v);
    }
  }
  return static_cast<std::uint64_t>(x * static_cast<double>(mult));
}

/// Throws when an estimated allocation exceeds the configured budget.
inline void check_memory(std::uint64_t estimate, const std::string& what) {
  std::uint64_t lim = memory_limit_bytes();
  if (lim && estimate > lim) {
    throw ResourceError(what + ": estimated " + std::to_string(estimate >> 20) +
                        " MiB exceeds GRAPHHOM_MAX_MEM");
  }
}

}  // namespace graphhom
