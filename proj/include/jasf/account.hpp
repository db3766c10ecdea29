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

#ifndef JASF_ACCOUNT_HPP_
#define JASF_ACCOUNT_HPP_

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jasf/config.hpp"
#include "jasf/digest.hpp"
#include "jasf/errors.hpp"
#include "jasf/mobile.hpp"
#include "jasf/otp.hpp"

namespace jasf {

// A registered account. Secrets are held as salted digests only; the two
// registered mobile numbers are always distinct.
struct Account {
  std::string username;
  SecretDigest password_secret;
  SecretDigest sc_secret;
  MobileNumber primary_mobile;
  MobileNumber secondary_mobile;
  std::vector<SecretDigest> spl_passcodes;  // unused one-time codes
  int wrong_sc_count = 0;
  bool alerted = false;
};

inline Account make_account(std::string username, std::string_view password,
                            std::string_view sc, MobileNumber primary,
                            MobileNumber secondary, RandomSource& rng,
                            int iterations = SecretDigest::kDefaultIterations) {
  if (primary == secondary)
    throw SameMobileError("primary and secondary mobile must differ");
  return Account{std::move(username),
                 SecretDigest::create(password, rng, iterations),
                 SecretDigest::create(sc, rng, iterations),
                 std::move(primary),
                 std::move(secondary),
                 {},
                 0,
                 false};
}

// Thread-safe registry. Every mutation runs under that account's own lock,
// which is what makes OTP mint/consume and counter updates atomic per
// account; distinct accounts never contend.
class AccountStore {
 public:
  struct Entry {
    Account account;
    std::optional<Otp> active_otp;  // the single per-account OTP slot
  };

  AccountStore() = default;
  AccountStore(const AccountStore&) = delete;
  AccountStore& operator=(const AccountStore&) = delete;

  void create(Account account) {
    std::unique_lock lock(map_m_);
    auto [it, inserted] = slots_.try_emplace(account.username);
    if (!inserted)
      throw DuplicateUsernameError("username already exists: " +
                                   account.username);
    it->second = std::make_unique<Slot>();
    it->second->entry.account = std::move(account);
  }

  bool contains(const std::string& username) const {
    std::shared_lock lock(map_m_);
    return slots_.count(username) > 0;
  }

  // Runs fn with exclusive access to the entry. Returns false when the
  // username does not resolve (fn not called).
  template <typename F>
  bool with_account(const std::string& username, F&& fn) const {
    Slot* slot = find_slot(username);
    if (!slot) return false;
    std::lock_guard lock(slot->m);
    std::forward<F>(fn)(slot->entry);
    return true;
  }

  std::optional<Account> find(const std::string& username) const {
    std::optional<Account> out;
    with_account(username, [&](Entry& e) { out = e.account; });
    return out;
  }

  std::vector<std::string> usernames() const {
    std::shared_lock lock(map_m_);
    std::vector<std::string> out;
    out.reserve(slots_.size());
    for (const auto& [name, _] : slots_) out.push_back(name);
    return out;
  }

  // Consistent copy of all accounts for persistence. Active OTPs are runtime
  // state and are not part of the snapshot.
  std::vector<Account> snapshot() const {
    std::vector<Account> out;
    std::shared_lock lock(map_m_);
    for (const auto& [_, slot] : slots_) {
      std::lock_guard entry_lock(slot->m);
      out.push_back(slot->entry.account);
    }
    return out;
  }

 private:
  struct Slot {
    mutable std::mutex m;
    Entry entry;
  };

  Slot* find_slot(const std::string& username) const {
    std::shared_lock lock(map_m_);
    auto it = slots_.find(username);
    return it == slots_.end() ? nullptr : it->second.get();
  }

  mutable std::shared_mutex map_m_;
  std::unordered_map<std::string, std::unique_ptr<Slot>> slots_;
};

// Reuses the account's active OTP or mints a fresh one. Callers already hold
// the account lock (they are inside with_account), so the read-modify-write
// is atomic and at most one active OTP can ever exist for the account. This
// is the whole anti-flooding rule: a new value appears only after the
// current one is consumed or expires.
inline Otp ensure_active_otp(AccountStore::Entry& entry, RandomSource& rng,
                             const ProtocolConfig& config, Timestamp now) {
  if (entry.active_otp && entry.active_otp->active(now))
    return *entry.active_otp;
  entry.active_otp = mint_otp(rng, config.otp_length, now, config.otp_ttl,
                              entry.account.username);
  return *entry.active_otp;
}

}  // namespace jasf

#endif  // JASF_ACCOUNT_HPP_
