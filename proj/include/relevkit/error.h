// Copyright 2026 The relevkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RELEVKIT_ERROR_H_
#define RELEVKIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace relevkit {

// Base of every error the toolkit throws. The subclasses map onto the CLI
// exit-code taxonomy: UsageError -> 1, DataError -> 2, ProviderError -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad flags or configuration.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Malformed or semantically invalid input data.
class DataError : public Error {
 public:
  using Error::Error;
};

// Failure talking to, or interpreting, an LLM provider.
class ProviderError : public Error {
 public:
  ProviderError(const std::string& what, bool retryable)
      : Error(what), retryable_(retryable) {}

  bool retryable() const { return retryable_; }

 private:
  bool retryable_;
};

// Transport-level failure (connection, timeout, 5xx, 429). Retried.
class TransportError : public ProviderError {
 public:
  explicit TransportError(const std::string& what)
      : ProviderError(what, /*retryable=*/true) {}
};

// The provider answered but the completion does not follow the requested
// format. Never retried; carries the raw completion for diagnosis.
class CompletionParseError : public ProviderError {
 public:
  CompletionParseError(const std::string& what, std::string raw)
      : ProviderError(what, /*retryable=*/false), raw_(std::move(raw)) {}

  const std::string& raw_completion() const { return raw_; }

 private:
  std::string raw_;
};

}  // namespace relevkit

#endif  // RELEVKIT_ERROR_H_
