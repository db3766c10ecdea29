// Copyright 2026 The JASF Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JASF_CONFIG_HPP_
#define JASF_CONFIG_HPP_

#include <nlohmann/json.hpp>

#include "jasf/errors.hpp"
#include "jasf/time.hpp"

namespace jasf {

struct ProtocolConfig {
  int otp_length = 6;
  Duration otp_ttl = 2 * 60 * 60;  // seconds
  int wrong_sc_threshold = 3;
  int max_wrong_otp = 5;
  int max_password_attempts = 3;
  int spl_passcode_length = 8;

  void validate() const {
    if (otp_length < 4) throw ConfigError("otp_length must be >= 4");
    if (otp_ttl <= 0) throw ConfigError("otp_ttl must be positive");
    if (wrong_sc_threshold <= 0)
      throw ConfigError("wrong_sc_threshold must be positive");
    if (max_wrong_otp <= 0) throw ConfigError("max_wrong_otp must be positive");
    if (max_password_attempts <= 0)
      throw ConfigError("max_password_attempts must be positive");
    if (spl_passcode_length <= 0)
      throw ConfigError("spl_passcode_length must be positive");
  }
};

inline void to_json(nlohmann::json& j, const ProtocolConfig& c) {
  j = nlohmann::json{{"otp_length", c.otp_length},
                     {"otp_ttl_seconds", c.otp_ttl},
                     {"wrong_sc_threshold", c.wrong_sc_threshold},
                     {"max_wrong_otp", c.max_wrong_otp},
                     {"max_password_attempts", c.max_password_attempts},
                     {"spl_passcode_length", c.spl_passcode_length}};
}

inline void from_json(const nlohmann::json& j, ProtocolConfig& c) {
  ProtocolConfig defaults;
  c.otp_length = j.value("otp_length", defaults.otp_length);
  c.otp_ttl = j.value("otp_ttl_seconds", defaults.otp_ttl);
  c.wrong_sc_threshold =
      j.value("wrong_sc_threshold", defaults.wrong_sc_threshold);
  c.max_wrong_otp = j.value("max_wrong_otp", defaults.max_wrong_otp);
  c.max_password_attempts =
      j.value("max_password_attempts", defaults.max_password_attempts);
  c.spl_passcode_length =
      j.value("spl_passcode_length", defaults.spl_passcode_length);
}

}  // namespace jasf

#endif  // JASF_CONFIG_HPP_
