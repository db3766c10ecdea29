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

#ifndef JASF_OTP_HPP_
#define JASF_OTP_HPP_

#include <string>

#include "jasf/errors.hpp"
#include "jasf/random.hpp"
#include "jasf/time.hpp"

namespace jasf {

// One-time verification passcode. At most one active Otp exists per account
// at any instant; AccountStore enforces that by holding the single slot.
struct Otp {
  std::string value;
  Timestamp issued_at = 0;
  Duration ttl = 0;
  bool consumed = false;
  std::string username;

  bool active(Timestamp now) const {
    return !consumed && now < issued_at + ttl;
  }
};

// Uniformly random fixed-length numeric passcode, leading zeros kept.
inline Otp mint_otp(RandomSource& rng, int length, Timestamp now, Duration ttl,
                    std::string username = {}) {
  if (length < 4) throw ConfigError("otp length must be >= 4");
  Otp otp;
  otp.value = rng.digits(static_cast<std::size_t>(length));
  otp.issued_at = now;
  otp.ttl = ttl;
  otp.consumed = false;
  otp.username = std::move(username);
  return otp;
}

}  // namespace jasf

#endif  // JASF_OTP_HPP_
