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

#ifndef JASF_DIGEST_HPP_
#define JASF_DIGEST_HPP_

#include <openssl/crypto.h>
#include <openssl/evp.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "jasf/hex.hpp"
#include "jasf/random.hpp"

namespace jasf {

// Salted PBKDF2-HMAC-SHA256 digest of a user secret (password, SC or
// spl-passcode). Plaintext never leaves the call that hashes or verifies it;
// comparison is constant-time.
class SecretDigest {
 public:
  static constexpr int kDefaultIterations = 10'000;
  static constexpr std::size_t kSaltBytes = 16;
  static constexpr std::size_t kHashBytes = 32;

  static SecretDigest create(std::string_view secret, RandomSource& rng,
                             int iterations = kDefaultIterations) {
    SecretDigest d;
    d.iterations_ = iterations > 0 ? iterations : 1;
    d.salt_ = rng.bytes(kSaltBytes);
    d.hash_ = derive(secret, d.salt_, d.iterations_);
    return d;
  }

  bool verify(std::string_view candidate) const {
    const auto h = derive(candidate, salt_, iterations_);
    if (h.size() != hash_.size()) return false;
    return CRYPTO_memcmp(h.data(), hash_.data(), hash_.size()) == 0;
  }

  int iterations() const { return iterations_; }

  nlohmann::json to_json() const {
    return {{"algo", "pbkdf2-sha256"},
            {"iterations", iterations_},
            {"salt", to_hex(salt_)},
            {"hash", to_hex(hash_)}};
  }

  static SecretDigest from_json(const nlohmann::json& j) {
    if (j.at("algo").get<std::string>() != "pbkdf2-sha256")
      throw std::invalid_argument("unsupported digest algorithm");
    SecretDigest d;
    d.iterations_ = j.at("iterations").get<int>();
    d.salt_ = from_hex(j.at("salt").get<std::string>());
    d.hash_ = from_hex(j.at("hash").get<std::string>());
    return d;
  }

 private:
  SecretDigest() = default;

  static std::vector<std::uint8_t> derive(std::string_view secret,
                                          const std::vector<std::uint8_t>& salt,
                                          int iterations) {
    std::vector<std::uint8_t> out(kHashBytes);
    if (PKCS5_PBKDF2_HMAC(secret.data(), static_cast<int>(secret.size()),
                          salt.data(), static_cast<int>(salt.size()),
                          iterations, EVP_sha256(),
                          static_cast<int>(out.size()), out.data()) != 1)
      throw std::runtime_error("PBKDF2 derivation failed");
    return out;
  }

  int iterations_ = kDefaultIterations;
  std::vector<std::uint8_t> salt_;
  std::vector<std::uint8_t> hash_;
};

}  // namespace jasf

#endif  // JASF_DIGEST_HPP_
