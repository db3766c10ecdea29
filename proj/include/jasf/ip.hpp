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

#ifndef JASF_IP_HPP_
#define JASF_IP_HPP_

#include <arpa/inet.h>
#include <netinet/in.h>

#include <optional>
#include <string>
#include <string_view>

#include "jasf/errors.hpp"

namespace jasf {

// Canonical client address. IPv4 stays strict dotted-quad; IPv6 is rendered
// in RFC 5952 form (lowercase hex, longest zero run compressed). Two
// addresses are equal iff their canonical strings are byte-equal.
class IpAddress {
 public:
  static std::optional<IpAddress> try_parse(std::string_view text) {
    const std::string s(text);
    unsigned char buf[sizeof(in6_addr)];
    char out[INET6_ADDRSTRLEN];
    if (inet_pton(AF_INET, s.c_str(), buf) == 1) {
      if (!inet_ntop(AF_INET, buf, out, sizeof out)) return std::nullopt;
      return IpAddress(out);
    }
    if (inet_pton(AF_INET6, s.c_str(), buf) == 1) {
      if (!inet_ntop(AF_INET6, buf, out, sizeof out)) return std::nullopt;
      return IpAddress(out);
    }
    return std::nullopt;
  }

  static IpAddress parse(std::string_view text) {
    auto ip = try_parse(text);
    if (!ip) throw InvalidIpError("invalid IP address: " + std::string(text));
    return *ip;
  }

  const std::string& text() const { return text_; }

  friend bool operator==(const IpAddress& a, const IpAddress& b) {
    return a.text_ == b.text_;
  }
  friend bool operator!=(const IpAddress& a, const IpAddress& b) {
    return !(a == b);
  }

 private:
  explicit IpAddress(std::string canonical) : text_(std::move(canonical)) {}
  std::string text_;
};

enum class AaipVerdict { Match, Mismatch };

inline std::string_view to_string(AaipVerdict v) {
  return v == AaipVerdict::Match ? "match" : "mismatch";
}

// Client-side MITM check: the SMS notice must name the address the user
// expects to be seen as (their own, or their proxy's egress). A Match behind
// a shared proxy only says that someone behind that proxy submitted the
// OTPSC.
inline AaipVerdict verify_aaip(const IpAddress& notice_ip,
                               const IpAddress& local_ip) {
  return notice_ip == local_ip ? AaipVerdict::Match : AaipVerdict::Mismatch;
}

}  // namespace jasf

#endif  // JASF_IP_HPP_
