// Copyright 2026 The dimwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIMWIT_ERROR_HPP
#define DIMWIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dimwit {

enum class ErrorCode {
  BadArgument,
  NotHermitian,
  DimensionMismatch,
  ShapeMismatch,
  NotPure,
  NotAPovm,
  InvalidState,
  OutOfRange,
  TooLarge,
  IncompleteDecoding,
  NonMonotonic,
  NoConvergence,
  Io,
  Parse,
};

const char *error_code_name(ErrorCode code);

/// Single exception type for the library; the code maps one-to-one onto the
/// C API status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string &message);

}  // namespace dimwit

#endif  // DIMWIT_ERROR_HPP
