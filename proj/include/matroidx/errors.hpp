// Copyright 2026 The Matroidx Authors.
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

#ifndef MATROIDX_ERRORS_HPP
#define MATROIDX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace matroidx {

enum class ErrorCode {
  kInvalidArgument,   // bad parameter, out-of-range epsilon, malformed spec
  kInstanceMismatch,  // element id outside the instance's ground set
  kParse,             // malformed instance file
  kBudget,            // brute-force size limit exceeded
  kContract,          // an operation precondition was violated
  kStateCorruption,   // LayerState invariant breach
  kExtractionFailure, // partial augmenting set could not be converted
  kAlgorithmBug,      // iteration cap exceeded; indicates an internal bug
  kProtocol,          // streaming pass protocol misuse
  kStreamingViolation,// access-rule violation in strict streaming mode
  kIo,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace matroidx

#endif  // MATROIDX_ERRORS_HPP
