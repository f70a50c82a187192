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

#pragma once

#include <string>
#include <vector>

namespace holoq {

// One sign, branch or model choice, with the check that pins it down.
// Every [conv:<id>] marker in the sources has exactly one entry.
struct ConventionLedgerEntry {
  std::string id;
  std::string location;  // which relation or figure the choice concerns
  std::string printed;   // form as stated in the source material
  std::string adopted;   // form used here
  std::string oracle;    // verifying computation
  std::string status;    // verified | deviation | conflict | open
};

const std::vector<ConventionLedgerEntry>& convention_ledger();

// Markdown table; throws std::invalid_argument on an empty ledger or an
// entry without an oracle.
std::string render_ledger(const std::vector<ConventionLedgerEntry>& entries);

// Config keys, scheme catalog and figure recipes as Markdown.
std::string render_config_reference();

}  // namespace holoq
