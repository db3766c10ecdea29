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

#ifndef JASF_RANDOM_HPP_
#define JASF_RANDOM_HPP_

#include <openssl/rand.h>

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "jasf/hex.hpp"

namespace jasf {

// All randomness enters the library through this interface so that tests and
// simulations can substitute a seeded source.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual std::uint64_t next_u64() = 0;

  // Uniform integer in [0, bound), rejection-sampled.
  std::uint64_t uniform(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform bound must be > 0");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % bound;
  }

  // `count` uniform decimal digits; leading zeros are ordinary digits.
  std::string digits(std::size_t count) {
    std::string out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
      out.push_back(static_cast<char>('0' + uniform(10)));
    return out;
  }

  std::vector<std::uint8_t> bytes(std::size_t count) {
    std::vector<std::uint8_t> out;
    out.reserve(count);
    while (out.size() < count) {
      std::uint64_t v = next_u64();
      for (int i = 0; i < 8 && out.size() < count; ++i) {
        out.push_back(static_cast<std::uint8_t>(v & 0xff));
        v >>= 8;
      }
    }
    return out;
  }

  // Opaque lowercase-hex token of `byte_count` random bytes.
  std::string hex_token(std::size_t byte_count) {
    const auto b = bytes(byte_count);
    return to_hex(b);
  }
};

// Deterministic source. mt19937_64 output is fixed by the standard, so a
// seed pins the exact byte stream across platforms.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next_u64() override { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

// OS-strength source for production use.
class SystemRandom final : public RandomSource {
 public:
  std::uint64_t next_u64() override {
    std::uint64_t v = 0;
    if (RAND_bytes(reinterpret_cast<unsigned char*>(&v), sizeof v) != 1)
      throw std::runtime_error("RAND_bytes failed");
    return v;
  }
};

}  // namespace jasf

#endif  // JASF_RANDOM_HPP_
