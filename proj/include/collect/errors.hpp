// Copyright 2026 The collect Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace collect {

/// Base of every error raised by the library. The CLI maps `InputError`
/// subclasses to exit code 1 and `NumericalError` subclasses to exit code 2.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
  public:
    using Error::Error;
};

class NumericalError : public Error {
  public:
    using Error::Error;
};

#define COLLECT_DEFINE_ERROR(Name, Base)                                       \
    class Name : public Base {                                                 \
      public:                                                                  \
        explicit Name(const std::string &what) : Base(#Name ": " + what) {}    \
    };

COLLECT_DEFINE_ERROR(NormError, InputError)
COLLECT_DEFINE_ERROR(ShapeError, InputError)
COLLECT_DEFINE_ERROR(UnknownName, InputError)
COLLECT_DEFINE_ERROR(ParamError, InputError)
COLLECT_DEFINE_ERROR(RangeError, InputError)
COLLECT_DEFINE_ERROR(SizeError, InputError)
COLLECT_DEFINE_ERROR(ParseError, InputError)
COLLECT_DEFINE_ERROR(EmptyCounts, InputError)
COLLECT_DEFINE_ERROR(ScaleError, InputError)

COLLECT_DEFINE_ERROR(GramError, NumericalError)
COLLECT_DEFINE_ERROR(BoundError, NumericalError)
COLLECT_DEFINE_ERROR(ConvergenceError, NumericalError)

#undef COLLECT_DEFINE_ERROR

} // namespace collect
