// Copyright 2026 The holoq Authors
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

// Regenerates docs/CONVENTIONS.md and docs/CONFIG.md.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "holoq/docs.hpp"

namespace {

constexpr const char* kHeader =
    "<!-- Copyright 2026 The holoq Authors. Licensed under the Apache License, Version 2.0. -->\n"
    "<!-- Generated by holoq_gen_docs; do not edit. -->\n\n";

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "docs";
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "CONVENTIONS.md", std::ios::binary);
    out << kHeader << "# Convention ledger\n\n"
           "Every sign, branch or model choice that the source material leaves open or states\n"
           "inconsistently, with the computation that pins it down. Each id appears as a\n"
           "`[conv:<id>]` marker next to the code it governs; a unit test keeps the two in sync.\n\n"
        << holoq::render_ledger(holoq::convention_ledger());
    if (!out) return 1;
  }
  {
    std::ofstream out(dir / "CONFIG.md", std::ios::binary);
    out << kHeader << "# Configuration reference\n\n" << holoq::render_config_reference();
    if (!out) return 1;
  }
  std::cout << "wrote " << (dir / "CONVENTIONS.md").string() << " and " << (dir / "CONFIG.md").string() << "\n";
  return 0;
}
