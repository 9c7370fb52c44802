// Copyright 2026 The jmobius Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jmobius {

/// Base of every error raised by the library. `code()` is the stable,
/// machine-readable name surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string_view code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define JMOBIUS_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  };

JMOBIUS_DEFINE_ERROR(CycleError)
JMOBIUS_DEFINE_ERROR(IndexError)
JMOBIUS_DEFINE_ERROR(OrderError)
JMOBIUS_DEFINE_ERROR(RankError)
JMOBIUS_DEFINE_ERROR(NotALatticeError)
JMOBIUS_DEFINE_ERROR(NoBoundsError)
JMOBIUS_DEFINE_ERROR(PosetMismatchError)
JMOBIUS_DEFINE_ERROR(InvalidCrossCutError)
JMOBIUS_DEFINE_ERROR(BadElementError)
JMOBIUS_DEFINE_ERROR(HypothesisError)
JMOBIUS_DEFINE_ERROR(ExchangeAxiomError)
JMOBIUS_DEFINE_ERROR(ArityError)
JMOBIUS_DEFINE_ERROR(SizeBoundError)
JMOBIUS_DEFINE_ERROR(FixtureError)
JMOBIUS_DEFINE_ERROR(ParseError)
JMOBIUS_DEFINE_ERROR(DomainError)

#undef JMOBIUS_DEFINE_ERROR

}  // namespace jmobius
