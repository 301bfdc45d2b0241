#pragma once

#include <stdexcept>
#include <string>

namespace wres {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArithmeticError : public Error {
 public:
  using Error::Error;
};

class AlphabetError : public Error {
 public:
  using Error::Error;
};

class IntegrationError : public Error {
 public:
  using Error::Error;
};

class TraceError : public Error {
 public:
  using Error::Error;
};

// A derivation or substitution rule is missing for some factor.
class RuleError : public Error {
 public:
  using Error::Error;
};

// A file could not be read.
class IoError : public Error {
 public:
  using Error::Error;
};

// A case pipeline step failed; the message names the case, m and step.
class PipelineError : public Error {
 public:
  using Error::Error;
};

}  // namespace wres
