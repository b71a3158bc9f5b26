// Copyright 2026 The Authors.
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

#ifndef TRACTS_ERRORS_HPP
#define TRACTS_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace tracts {

/// Malformed or out-of-contract input (bad JSON, mismatched tracts,
/// a set that is not a flat, guard limits exceeded, ...).
class invalid_input : public std::runtime_error {
 public:
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

/// A well-formed object that fails one of the named axioms.  The `axiom`
/// tag identifies which one ("GP1", "GP3", "R1", "LF4", "PL3", ...) and
/// `detail` carries a machine-readable witness.
class axiom_error : public std::runtime_error {
 public:
  axiom_error(std::string axiom, const std::string& what,
              nlohmann::json detail = nlohmann::json::object())
      : std::runtime_error(what),
        axiom_(std::move(axiom)),
        detail_(std::move(detail)) {}

  const std::string& axiom() const { return axiom_; }
  const nlohmann::json& detail() const { return detail_; }

 private:
  std::string axiom_;
  nlohmann::json detail_;
};

/// Result of a validation pass.  `axiom` and `detail` are meaningful only
/// when `ok` is false.
struct CheckReport {
  bool ok = true;
  std::string axiom;
  std::string message;
  nlohmann::json detail = nlohmann::json::object();

  static CheckReport pass() { return CheckReport{}; }
  static CheckReport fail(std::string axiom, std::string message,
                          nlohmann::json detail = nlohmann::json::object()) {
    return CheckReport{false, std::move(axiom), std::move(message),
                       std::move(detail)};
  }
};

}  // namespace tracts

#endif  // TRACTS_ERRORS_HPP
