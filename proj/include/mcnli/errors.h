// Copyright 2026 The mcnli Authors.
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

#ifndef MCNLI_ERRORS_H_
#define MCNLI_ERRORS_H_

#include <stdexcept>
#include <string>

namespace mcnli {

// Malformed or invalid input data (bad records, failed invariants, missing
// scores). The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The neural converter process misbehaved: failed to start, broke protocol,
// timed out or dropped ids. The CLI maps this to exit code 3.
class BackendError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Write failure while emitting a corpus; carries how many records made it out.
class WriteError : public DataError {
 public:
  WriteError(const std::string& what, size_t written)
      : DataError(what), written_(written) {}
  size_t written() const { return written_; }

 private:
  size_t written_;
};

}  // namespace mcnli

#endif  // MCNLI_ERRORS_H_
