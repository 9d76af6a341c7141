/* Copyright 2026 The Contingency Workbench Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef CWB_ERRORS_HPP
#define CWB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cwb {

// Base class for every error the library reports. The C API maps each
// subclass onto one of the CWB_ERR_* codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  enum class Kind { Syntax, BoxNotAllowed, ReservedAtom };

  ParseError(Kind kind, int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        kind_(kind),
        line_(line),
        column_(column) {}

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  Kind kind_;
  int line_;
  int column_;
};

class TooManyAtomsError : public Error {
 public:
  explicit TooManyAtomsError(int atoms)
      : Error("tautology check needs " + std::to_string(atoms) + " atoms; the limit is 24"), atoms_(atoms) {}
  int atoms() const { return atoms_; }

 private:
  int atoms_;
};

class UnknownAtomError : public Error {
 public:
  explicit UnknownAtomError(const std::string& atom) : Error("atom '" + atom + "' has no valuation"), atom_(atom) {}
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

class BoxNotAllowedError : public Error {
 public:
  BoxNotAllowedError() : Error("[] is only available in extended mode") {}
};

class ModelError : public Error {
 public:
  using Error::Error;
};

class BoundExceededError : public Error {
 public:
  using Error::Error;
};

class DerivationFormatError : public Error {
 public:
  DerivationFormatError(int line, const std::string& message)
      : Error("derivation line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class WitnessNotFoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace cwb

#endif  // CWB_ERRORS_HPP
