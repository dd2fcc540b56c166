/*
   Copyright 2026 The wtg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace wtg {

/// Raised for invalid input, violated preconditions and exceeded size guards.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size guard tripped before enumeration started. `guard()` names it.
class GuardError : public Error {
 public:
  GuardError(std::string guard, const std::string& what)
      : Error(what), guard_(std::move(guard)) {}
  const std::string& guard() const noexcept { return guard_; }

 private:
  std::string guard_;
};

}  // namespace wtg
