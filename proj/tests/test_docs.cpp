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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "holoq/docs.hpp"

using namespace holoq;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::set<std::string> markers() {
  std::set<std::string> out;
  const std::regex re(R"(\[conv:([a-z0-9-]+)\])");
  for (const char* sub : {"src", "include"}) {
    for (const auto& e : fs::recursive_directory_iterator(fs::path(HOLOQ_SOURCE_DIR) / sub)) {
      if (!e.is_regular_file()) continue;
      const std::string text = slurp(e.path());
      for (auto it = std::sregex_iterator(text.begin(), text.end(), re); it != std::sregex_iterator(); ++it)
        out.insert((*it)[1]);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("every convention marker has exactly one ledger entry and vice versa") {
  std::set<std::string> ids;
  for (const auto& e : convention_ledger()) {
    CHECK_MESSAGE(ids.insert(e.id).second, "duplicate " << e.id);
    CHECK_FALSE(e.oracle.empty());
    CHECK_FALSE(e.adopted.empty());
  }
  const std::set<std::string> found = markers();
  for (const auto& id : ids) CHECK_MESSAGE(found.count(id), "no marker for " << id);
  for (const auto& m : found) CHECK_MESSAGE(ids.count(m), "no ledger entry for " << m);
}

TEST_CASE("ledger rendering validates entries") {
  CHECK_THROWS(render_ledger({}));
  ConventionLedgerEntry e{"x", "loc", "p", "a", "", "open"};
  CHECK_THROWS(render_ledger({e}));
  e.oracle = "o";
  CHECK_NOTHROW(render_ledger({e}));
  CHECK_THROWS(render_ledger({e, e}));
}

TEST_CASE("generated documents are current") {
  const std::string conv = slurp(fs::path(HOLOQ_SOURCE_DIR) / "docs" / "CONVENTIONS.md");
  CHECK(conv.find(render_ledger(convention_ledger())) != std::string::npos);
  const std::string cfg = slurp(fs::path(HOLOQ_SOURCE_DIR) / "docs" / "CONFIG.md");
  CHECK(cfg.find(render_config_reference()) != std::string::npos);
}
