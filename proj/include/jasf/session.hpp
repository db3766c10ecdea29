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

#ifndef JASF_SESSION_HPP_
#define JASF_SESSION_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "jasf/ip.hpp"
#include "jasf/sms.hpp"
#include "jasf/time.hpp"

namespace jasf {

enum class ChannelChoice { Primary, Secondary, SplPasscode };

inline std::string_view to_string(ChannelChoice c) {
  switch (c) {
    case ChannelChoice::Primary: return "primary";
    case ChannelChoice::Secondary: return "secondary";
    case ChannelChoice::SplPasscode: return "spl";
  }
  return "unknown";
}

inline std::optional<ChannelChoice> channel_from_string(std::string_view s) {
  if (s == "primary") return ChannelChoice::Primary;
  if (s == "secondary") return ChannelChoice::Secondary;
  if (s == "spl") return ChannelChoice::SplPasscode;
  return std::nullopt;
}

enum class TerminationReason {
  WrongOtpLimit,
  ScAlert,
  PasswordFail,
  Expired,
  ClientAbort
};

inline std::string_view to_string(TerminationReason r) {
  switch (r) {
    case TerminationReason::WrongOtpLimit: return "wrong_otp_limit";
    case TerminationReason::ScAlert: return "sc_alert";
    case TerminationReason::PasswordFail: return "password_fail";
    case TerminationReason::Expired: return "expired";
    case TerminationReason::ClientAbort: return "client_abort";
  }
  return "unknown";
}

enum class SessionPhase { OtpPending, AwaitPassword, Authenticated, Terminated };

inline std::string_view to_string(SessionPhase p) {
  switch (p) {
    case SessionPhase::OtpPending: return "otp_pending";
    case SessionPhase::AwaitPassword: return "await_password";
    case SessionPhase::Authenticated: return "authenticated";
    case SessionPhase::Terminated: return "terminated";
  }
  return "unknown";
}

// Legal transitions only: OtpPending may loop (wrong OTP / wrong SC retries)
// or move to AwaitPassword or Terminated; AwaitPassword moves to
// Authenticated or Terminated; the last two are absorbing.
struct SessionState {
  SessionPhase phase = SessionPhase::OtpPending;
  std::optional<TerminationReason> reason;

  bool terminal() const {
    return phase == SessionPhase::Authenticated ||
           phase == SessionPhase::Terminated;
  }
};

inline bool operator==(const SessionState& a, const SessionState& b) {
  return a.phase == b.phase && a.reason == b.reason;
}

// One login attempt in flight. `client_ip` is the AAIP and always reflects
// the source of the most recent request on this session.
struct LoginSession {
  std::string id;
  std::string username;
  SessionState state;
  ChannelChoice channel = ChannelChoice::Primary;
  IpAddress client_ip;
  int wrong_otp_attempts = 0;
  int wrong_password_attempts = 0;
  Timestamp created_at = 0;
};

enum class VerifyStatus { WrongOtp, WrongSc, Accepted };

inline std::string_view to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::WrongOtp: return "wrong_otp";
    case VerifyStatus::WrongSc: return "wrong_sc";
    case VerifyStatus::Accepted: return "accepted";
  }
  return "unknown";
}

// Exactly one variant per submission. `alert_sent` is meaningful for WrongSc
// (did this submission push the per-account counter over the threshold);
// `aaip_notice` is the dispatched SMS for Accepted.
struct VerifyOutcome {
  VerifyStatus status = VerifyStatus::WrongOtp;
  bool alert_sent = false;
  std::optional<SmsMessage> aaip_notice;
};

enum class AuthResult { Authenticated, Rejected };

}  // namespace jasf

#endif  // JASF_SESSION_HPP_
