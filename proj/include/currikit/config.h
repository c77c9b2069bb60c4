// Copyright 2026 The Currikit Authors.
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

#ifndef CURRIKIT_CONFIG_H_
#define CURRIKIT_CONFIG_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace currikit {

using ConfigScalar = std::variant<bool, int64_t, double, std::string>;

struct ConfigValue {
  std::vector<ConfigScalar> items;  // one item unless is_array
  bool is_array = false;
  std::size_t line = 0;
};

// The TOML subset used by pipeline configs: comments, [section] headers,
// and `key = value` lines whose value is a string, integer, float, boolean
// or a single-line array of those. Keys are addressed as "section.key".
class ConfigFile {
 public:
  static ConfigFile parse(std::string_view text);

  bool contains(const std::string& key) const { return values_.count(key) > 0; }
  std::vector<std::string> keys() const;

  std::string get_string(const std::string& key) const;
  int64_t get_int(const std::string& key) const;
  double get_double(const std::string& key) const;  // integers accepted
  bool get_bool(const std::string& key) const;
  std::vector<std::string> get_string_list(const std::string& key) const;
  std::vector<int64_t> get_int_list(const std::string& key) const;

 private:
  const ConfigValue& at(const std::string& key) const;
  std::map<std::string, ConfigValue> values_;
};

}  // namespace currikit

#endif  // CURRIKIT_CONFIG_H_
