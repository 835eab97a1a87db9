// Copyright 2026 The abmp Authors.
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

#ifndef ABMP_ERRORS_HPP_
#define ABMP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace abmp {

//! Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! A row partition does not cover the column set exactly once.
class InvalidScheme : public Error {
 public:
  using Error::Error;
};

//! A bundle must contain at least one column.
class EmptyBundle : public Error {
 public:
  using Error::Error;
};

//! A mixed-bundle operation needs at least one one-column.
class InvalidBundle : public Error {
 public:
  using Error::Error;
};

//! An exhaustive search would exceed the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

//! The algorithm only applies to uniform column distributions.
class NotUniform : public Error {
 public:
  using Error::Error;
};

//! The instance has no zero-columns, so the statistic is undefined.
class NoZeroColumns : public Error {
 public:
  using Error::Error;
};

//! An argument lies outside the domain of the function.
class DomainError : public Error {
 public:
  using Error::Error;
};

//! The linear program has an empty feasible region.
class Infeasible : public Error {
 public:
  using Error::Error;
};

//! The column is already a member of the set.
class AlreadyPresent : public Error {
 public:
  using Error::Error;
};

//! Construction parameters violate a documented requirement.
class BadParameters : public Error {
 public:
  using Error::Error;
};

//! An instance file could not be parsed.
class BadInstanceFile : public Error {
 public:
  using Error::Error;
};

}  // namespace abmp

#endif  // ABMP_ERRORS_HPP_
