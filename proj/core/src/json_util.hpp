// Internal: not installed.
#ifndef LIEBOUND_SRC_JSON_UTIL_HPP
#define LIEBOUND_SRC_JSON_UTIL_HPP

#include <json.hpp>

#include <string>

namespace liebound::detail {

using Json = nlohmann::ordered_json;

// Objects one key per line; arrays of scalars on one line; arrays of arrays
// one row per line. Keeps golden files readable and diffable.
std::string pretty_json(const Json& value);

}  // namespace liebound::detail

#endif
