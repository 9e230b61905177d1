// Copyright 2026 The mring Authors
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

#ifndef MRING_ERROR_HPP
#define MRING_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mring {

enum class errc {
  zero_polynomial,
  inconsistent_degree,
  not_integer_coefficients,
  not_phi_member,
  non_integral_shift,
  non_integral_image,
  beyond_level,
  not_found,
  parse_error,
  invalid_argument,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// Expression-language error carrying a source position and the token class
// the parser was looking for.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string expected,
             const std::string& what)
      : Error(errc::parse_error, what),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

}  // namespace mring

#endif  // MRING_ERROR_HPP
