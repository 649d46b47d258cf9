#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <utility>

namespace cliffilt {

/// Outcome of an exact verification: pass or fail, with a structured witness
/// describing the first violation found.
struct Certificate {
  std::string check;
  bool pass = true;
  nlohmann::json witness = nlohmann::json::object();

  static Certificate ok(std::string name, nlohmann::json info = nlohmann::json::object()) {
    return {std::move(name), true, std::move(info)};
  }
  static Certificate fail(std::string name, nlohmann::json witness) {
    return {std::move(name), false, std::move(witness)};
  }

  explicit operator bool() const { return pass; }

  [[nodiscard]] nlohmann::json to_json() const {
    return {{"check", check}, {"pass", pass}, {"witness", witness}};
  }
};

}  // namespace cliffilt
