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

#ifndef JASF_REQUEST_HPP_
#define JASF_REQUEST_HPP_

#include <optional>
#include <string>
#include <vector>

#include "jasf/errors.hpp"
#include "jasf/ip.hpp"

namespace jasf {

// One observed in-band request arrival. `hops` is the relay chain from the
// original client to the server; the server can only ever see the final hop
// as its peer. `forwarded_for` models a client-supplied forwarding header.
struct RequestContext {
  std::vector<IpAddress> hops;
  std::optional<std::string> forwarded_for;
};

// The AAIP: the source address the server actually observes. Always the last
// hop; forwarding metadata is attacker-controlled and never consulted, or the
// AAIP would be spoofable.
inline IpAddress observe_client_ip(const RequestContext& request) {
  if (request.hops.empty())
    throw MissingSourceAddressError("request carries no source address");
  return request.hops.back();
}

}  // namespace jasf

#endif  // JASF_REQUEST_HPP_
