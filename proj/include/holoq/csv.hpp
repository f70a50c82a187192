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

#include <charconv>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace holoq {

// 15 significant digits, '.' decimal point regardless of the global locale.
inline std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 15);
  return std::string(buf, res.ptr);
}

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void header(const std::vector<std::string>& cols) { record(cols); }

  // Pre-formatted fields, quoted where needed.
  void record(const std::vector<std::string>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) os_ << ',';
      field(cols[i]);
    }
    os_ << '\n';
  }

  template <typename... Ts>
  void row(const Ts&... vs) {
    bool first = true;
    ((sep(first), cell(vs)), ...);
    os_ << '\n';
  }

  void row_vector(const std::vector<double>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) os_ << ',';
      os_ << format_number(vs[i]);
    }
    os_ << '\n';
  }

 private:
  void sep(bool& first) {
    if (!first) os_ << ',';
    first = false;
  }
  void cell(double v) { os_ << format_number(v); }
  void cell(int v) { os_ << v; }
  void cell(long v) { os_ << v; }
  void cell(unsigned long v) { os_ << v; }
  void cell(const std::string& s) { field(s); }
  void cell(const char* s) { field(s); }
  void field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) {
      os_ << s;
      return;
    }
    os_ << '"';
    for (char c : s) {
      if (c == '"') os_ << '"';
      os_ << c;
    }
    os_ << '"';
  }

  std::ostream& os_;
};

}  // namespace holoq
