/*
   Copyright 2026 The mockradial Authors

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

#ifndef MOCKRADIAL_ERRORS_HPP
#define MOCKRADIAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mockradial {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  using Error::Error;
};

class OrderMismatch : public Error {
 public:
  using Error::Error;
};

/// Requested cyclotomic order exceeds the configured cap.
class OrderLimitExceeded : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// A factor or denominator came within the working threshold of zero.
/// Callers are expected to raise precision (or move the sample point).
class NearSingular : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class CaseMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedCase : public Error {
 public:
  using Error::Error;
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace mockradial

#endif  // MOCKRADIAL_ERRORS_HPP
