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

#ifndef JASF_ERRORS_HPP_
#define JASF_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace jasf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was applied in a session state that does not permit it.
// The session state is left unchanged.
class StateError : public Error {
 public:
  using Error::Error;
};

// The session outlived the OTP time-frame; it has been moved to
// Terminated(Expired) before this is thrown.
class SessionExpiredError : public Error {
 public:
  using Error::Error;
};

class UnknownSessionError : public Error {
 public:
  using Error::Error;
};

class InvalidIpError : public Error {
 public:
  using Error::Error;
};

class InvalidMobileError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class StoreError : public Error {
 public:
  using Error::Error;
};

class DuplicateUsernameError : public StoreError {
 public:
  using StoreError::StoreError;
};

class SameMobileError : public StoreError {
 public:
  using StoreError::StoreError;
};

class UnknownUsernameError : public StoreError {
 public:
  using StoreError::StoreError;
};

class MissingSourceAddressError : public Error {
 public:
  using Error::Error;
};

class InvalidScenarioError : public Error {
 public:
  using Error::Error;
};

class UnknownAxisError : public Error {
 public:
  using Error::Error;
};

}  // namespace jasf

#endif  // JASF_ERRORS_HPP_
