#pragma once

#include <string>

#include "realcover/topology.hpp"

namespace realcover::detail {

inline const Json& require_field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) throw ParseError(path.empty() ? "/" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + "/" + key, "missing field");
  return *it;
}

inline int require_int(const Json& j, const std::string& path, const char* key) {
  const Json& v = require_field(j, path, key);
  if (!v.is_number_integer()) throw ParseError(path + "/" + key, "expected an integer");
  return v.get<int>();
}

inline std::string require_string(const Json& j, const std::string& path, const char* key) {
  const Json& v = require_field(j, path, key);
  if (!v.is_string()) throw ParseError(path + "/" + key, "expected a string");
  return v.get<std::string>();
}

}  // namespace realcover::detail
