#pragma once

// Strict field access for the JSON readers. Every failure is a ParseError
// whose message starts with the JSON path of the offending value.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>

#include "tabcompare/canonical.hpp"
#include "tabcompare/errors.hpp"

namespace tabcompare::json_util {

[[noreturn]] inline void fail(const std::string& path, const std::string& message) {
  throw ParseError(0, 0, path + ": " + message);
}

inline void expect_object(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
}

/// Requires exactly `required` plus any of `optional`.
inline void expect_keys(const Json& j, const std::string& path,
                        std::initializer_list<const char*> required,
                        std::initializer_list<const char*> optional = {}) {
  expect_object(j, path);
  for (const char* key : required) {
    if (!j.contains(key)) fail(path, std::string("missing key \"") + key + "\"");
  }
  auto known = [&](const std::string& k) {
    auto eq = [&](const char* x) { return k == x; };
    return std::any_of(required.begin(), required.end(), eq) ||
           std::any_of(optional.begin(), optional.end(), eq);
  };
  for (const auto& item : j.items()) {
    if (!known(item.key())) fail(path, "unknown key \"" + item.key() + "\"");
  }
}

inline std::string child(const std::string& path, const char* key) { return path + "." + key; }
inline std::string child(const std::string& path, std::size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

inline const Json& array_at(const Json& j, const char* key, const std::string& path) {
  const Json& v = j.at(key);
  if (!v.is_array()) fail(child(path, key), "expected an array");
  return v;
}

inline std::string string_at(const Json& j, const char* key, const std::string& path) {
  const Json& v = j.at(key);
  if (!v.is_string()) fail(child(path, key), "expected a string");
  return v.get<std::string>();
}

inline std::int64_t int_value(const Json& v, const std::string& path, std::int64_t lo,
                              std::int64_t hi) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(hi)) {
    fail(path, "integer out of range");
  }
  const auto value = v.get<std::int64_t>();
  if (value < lo || value > hi) fail(path, "integer out of range");
  return value;
}

inline std::int64_t int_at(const Json& j, const char* key, const std::string& path,
                           std::int64_t lo = -1000000, std::int64_t hi = 1000000) {
  return int_value(j.at(key), child(path, key), lo, hi);
}

inline double number_value(const Json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

inline double number_at(const Json& j, const char* key, const std::string& path) {
  return number_value(j.at(key), child(path, key));
}

inline bool bool_at(const Json& j, const char* key, const std::string& path) {
  const Json& v = j.at(key);
  if (!v.is_boolean()) fail(child(path, key), "expected a boolean");
  return v.get<bool>();
}

}  // namespace tabcompare::json_util
