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

#ifndef JASF_SMS_HPP_
#define JASF_SMS_HPP_

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "jasf/errors.hpp"
#include "jasf/ip.hpp"
#include "jasf/mobile.hpp"
#include "jasf/time.hpp"

namespace jasf {

enum class SmsKind { OtpDelivery, AaipNotice, WrongScAlert };

inline std::string_view to_string(SmsKind k) {
  switch (k) {
    case SmsKind::OtpDelivery: return "otp_delivery";
    case SmsKind::AaipNotice: return "aaip_notice";
    case SmsKind::WrongScAlert: return "wrong_sc_alert";
  }
  return "unknown";
}

inline SmsKind sms_kind_from_string(std::string_view s) {
  if (s == "otp_delivery") return SmsKind::OtpDelivery;
  if (s == "aaip_notice") return SmsKind::AaipNotice;
  if (s == "wrong_sc_alert") return SmsKind::WrongScAlert;
  throw std::invalid_argument("unknown sms kind: " + std::string(s));
}

struct SmsMessage {
  std::uint64_t seq = 0;
  MobileNumber to;
  SmsKind kind = SmsKind::OtpDelivery;
  std::string body;
  Timestamp sent_at = 0;
};

inline nlohmann::json sms_to_json(const SmsMessage& m) {
  return {{"seq", m.seq},
          {"to", m.to.digits()},
          {"kind", std::string(to_string(m.kind))},
          {"body", m.body},
          {"sent_at", m.sent_at}};
}

inline SmsMessage sms_from_json(const nlohmann::json& j) {
  SmsMessage m{j.at("seq").get<std::uint64_t>(),
               MobileNumber::parse(j.at("to").get<std::string>()),
               sms_kind_from_string(j.at("kind").get<std::string>()),
               j.at("body").get<std::string>(),
               j.at("sent_at").get<Timestamp>()};
  return m;
}

// Pinned message bodies. Wire tests, the interactive client and the simulator
// all match on these exact strings, so any edit is a protocol-visible change.
inline std::string otp_delivery_body(std::string_view otp_value) {
  std::string out = "JASF: your one-time passcode is ";
  out.append(otp_value);
  out.push_back('.');
  return out;
}

inline std::string aaip_notice_body(const IpAddress& aaip) {
  return "JASF: OTPSC received from IP " + aaip.text() +
         ". If this is not your IP, do NOT enter your password.";
}

inline std::string wrong_sc_alert_body(const IpAddress& aaip) {
  return "JASF: wrong secret code received with a valid passcode from IP " +
         aaip.text() + ". If this was not you, treat your SC as compromised.";
}

inline std::optional<std::string> extract_otp(const std::string& body) {
  static constexpr std::string_view kMarker = "passcode is ";
  const auto pos = body.find(kMarker);
  if (pos == std::string::npos) return std::nullopt;
  std::string digits;
  for (std::size_t i = pos + kMarker.size(); i < body.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(body[i]))) break;
    digits.push_back(body[i]);
  }
  if (digits.empty()) return std::nullopt;
  return digits;
}

// Pulls the single address out of an AAIP notice or wrong-SC alert. The
// address runs from after "IP " to the sentence-ending ". " (dots inside an
// IPv4 address are never followed by a space).
inline std::optional<IpAddress> extract_ip(const std::string& body) {
  static constexpr std::string_view kMarker = "IP ";
  const auto pos = body.find(kMarker);
  if (pos == std::string::npos) return std::nullopt;
  const auto start = pos + kMarker.size();
  const auto end = body.find(". ", start);
  const std::string text = body.substr(
      start, end == std::string::npos ? std::string::npos : end - start);
  return IpAddress::try_parse(text);
}

// Virtual out-of-band channel: lossless, instantaneous, append-only.
// Every message lands in exactly one per-number inbox and in one global log
// ordered by a gateway-wide sequence number. Optionally mirrors each message
// to a JSON Lines file.
class SmsGateway {
 public:
  SmsGateway() = default;

  void set_log_file(const std::filesystem::path& path) {
    std::lock_guard lock(m_);
    log_stream_.open(path, std::ios::app);
    if (!log_stream_) throw Error("cannot open sms log: " + path.string());
  }

  SmsMessage send(const MobileNumber& to, SmsKind kind, std::string body,
                  Timestamp now) {
    std::lock_guard lock(m_);
    SmsMessage msg{next_seq_++, to, kind, std::move(body), now};
    log_.push_back(msg);
    inboxes_[to.digits()].push_back(msg);
    if (log_stream_.is_open()) {
      log_stream_ << sms_to_json(msg).dump() << '\n';
      log_stream_.flush();
    }
    return msg;
  }

  // Snapshot; does not consume. Unknown numbers have an empty inbox.
  std::vector<SmsMessage> inbox(const MobileNumber& number) const {
    std::lock_guard lock(m_);
    auto it = inboxes_.find(number.digits());
    if (it == inboxes_.end()) return {};
    return it->second;
  }

  std::vector<SmsMessage> log() const {
    std::lock_guard lock(m_);
    return log_;
  }

  std::size_t log_size() const {
    std::lock_guard lock(m_);
    return log_.size();
  }

 private:
  mutable std::mutex m_;
  std::uint64_t next_seq_ = 1;
  std::vector<SmsMessage> log_;
  std::map<std::string, std::vector<SmsMessage>> inboxes_;
  std::ofstream log_stream_;
};

inline std::vector<SmsMessage> load_sms_log(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open sms log: " + path.string());
  std::vector<SmsMessage> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(sms_from_json(nlohmann::json::parse(line)));
  }
  return out;
}

}  // namespace jasf

#endif  // JASF_SMS_HPP_
