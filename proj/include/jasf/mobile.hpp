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

#ifndef JASF_MOBILE_HPP_
#define JASF_MOBILE_HPP_

#include <cctype>
#include <string>
#include <string_view>

#include "jasf/errors.hpp"

namespace jasf {

// E.164-style number: optional leading '+', then digits only.
class MobileNumber {
 public:
  static MobileNumber parse(std::string_view text) {
    std::string_view rest = text;
    if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
    if (rest.empty())
      throw InvalidMobileError("mobile number has no digits: " +
                               std::string(text));
    for (char c : rest)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InvalidMobileError("mobile number must be digits: " +
                                 std::string(text));
    return MobileNumber(std::string(text));
  }

  const std::string& digits() const { return digits_; }

  friend bool operator==(const MobileNumber& a, const MobileNumber& b) {
    return a.digits_ == b.digits_;
  }
  friend bool operator!=(const MobileNumber& a, const MobileNumber& b) {
    return !(a == b);
  }

 private:
  explicit MobileNumber(std::string digits) : digits_(std::move(digits)) {}
  std::string digits_;
};

}  // namespace jasf

#endif  // JASF_MOBILE_HPP_
