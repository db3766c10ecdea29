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

#ifndef JASF_OTPSC_HPP_
#define JASF_OTPSC_HPP_

#include <string>
#include <string_view>
#include <utility>

namespace jasf {

// OTPSC is the OTP immediately followed by the SC, no separator.
inline std::string compose_otpsc(std::string_view otp_value,
                                 std::string_view sc) {
  std::string out;
  out.reserve(otp_value.size() + sc.size());
  out.append(otp_value);
  out.append(sc);
  return out;
}

// Inverse of compose_otpsc at the server's fixed OTP length. Input shorter
// than the OTP length comes back whole in the otp part with an empty SC part;
// the later comparison then fails as a wrong OTP.
inline std::pair<std::string, std::string> split_otpsc(std::string_view otpsc,
                                                       std::size_t otp_length) {
  if (otpsc.size() <= otp_length)
    return {std::string(otpsc), std::string()};
  return {std::string(otpsc.substr(0, otp_length)),
          std::string(otpsc.substr(otp_length))};
}

}  // namespace jasf

#endif  // JASF_OTPSC_HPP_
