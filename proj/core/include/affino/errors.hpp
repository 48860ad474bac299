// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace affino {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: out-of-range vertex, unknown edge id, unbalanced set
/// where a balanced one is required, parameters outside an operation's domain.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured resource budget was exhausted before the computation finished.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class FlatLimitExceeded : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

class OracleBudgetExceeded : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

}  // namespace affino
