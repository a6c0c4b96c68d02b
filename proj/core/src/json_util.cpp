#include "json_util.hpp"

namespace liebound::detail {
namespace {

bool all_scalars(const Json& a) {
  for (const auto& x : a) {
    if (x.is_structured()) return false;
  }
  return true;
}

void emit(const Json& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  if (v.is_object() && !v.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : v.items()) {
      out += pad + Json(key).dump() + ": ";
      emit(value, indent + 2, out);
      out += ++i < v.size() ? ",\n" : "\n";
    }
    out += close + "}";
  } else if (v.is_array() && !v.empty() && !all_scalars(v)) {
    out += "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += pad;
      if (v[i].is_object()) {
        emit(v[i], indent + 2, out);
      } else {
        out += v[i].dump();
      }
      out += i + 1 < v.size() ? ",\n" : "\n";
    }
    out += close + "]";
  } else {
    out += v.dump();
  }
}

}  // namespace

std::string pretty_json(const Json& value) {
  std::string out;
  emit(value, 0, out);
  out += "\n";
  return out;
}

}  // namespace liebound::detail
