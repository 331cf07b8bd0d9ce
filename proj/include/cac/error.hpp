// Copyright 2026 The cacheck Authors.
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

#ifndef CAC_ERROR_HPP
#define CAC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cac {

enum class ErrorKind {
  Parse,
  InvalidPosition,
  ArityMismatch,
  DuplicateSymbol,
  UnknownSymbol,
  UnboundVariable,
  SortError,
  NotAProduct,
  TypeMismatch,
  ConversionFailure,
  FuelExhausted,
  NoDerivation,
  IllFormedRule,
  MissingAnnotation,
  Inductive,
  Sealed,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the kernel. The kind drives exit codes and
/// C status codes; the message is meant for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a reduction budget runs out. Kept as its own type because
/// callers frequently want to treat it differently from a genuine failure.
class FuelExhausted : public Error {
 public:
  explicit FuelExhausted(const std::string& what)
      : Error(ErrorKind::FuelExhausted, what) {}
};

}  // namespace cac

#endif  // CAC_ERROR_HPP
