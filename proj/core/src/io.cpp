#include <liebound/io.hpp>

#include <liebound/error.hpp>
#include <liebound/generators.hpp>

#include "json_util.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace liebound {
namespace {

using detail::Json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::ParseError, (path.empty() ? std::string("<root>") : path) + ": " + what);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::size_t as_index(const Json& v, const std::string& path, std::size_t dim) {
  if (!v.is_number_integer()) fail(path, "expected an integer index");
  auto i = v.get<long long>();
  if (i < 1 || static_cast<unsigned long long>(i) > dim) {
    fail(path, "index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
  }
  return static_cast<std::size_t>(i - 1);
}

Scalar as_scalar(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return Scalar(v.dump());
  if (!v.is_string()) fail(path, "expected a rational string like \"p/q\"");
  try {
    return parse_scalar(v.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.message());
  }
}

const Json& member(const Json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

LieAlgebra algebra_from_json(const Json& root, const std::string& path) {
  if (!root.is_object()) fail(path, "expected an object");
  const auto& dim_node = member(root, "dim", path);
  const std::string dim_path = path.empty() ? "dim" : path + ".dim";
  if (!dim_node.is_number_unsigned()) fail(dim_path, "expected a non-negative integer");
  const auto dim = dim_node.get<std::size_t>();

  std::string name;
  if (auto it = root.find("name"); it != root.end()) {
    if (!it->is_string()) fail(path.empty() ? "name" : path + ".name", "expected a string");
    name = it->get<std::string>();
  }

  std::vector<StructureConstant> constants;
  if (auto it = root.find("brackets"); it != root.end()) {
    const std::string bpath = path.empty() ? "brackets" : path + ".brackets";
    if (!it->is_array()) fail(bpath, "expected an array");
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (std::size_t r = 0; r < it->size(); ++r) {
      const auto& entry = (*it)[r];
      const std::string epath = bpath + "[" + std::to_string(r) + "]";
      if (!entry.is_array() || entry.size() != 3) fail(epath, "expected [i, j, [[k, \"p/q\"], ...]]");
      auto i = as_index(entry[0], epath + "[0]", dim);
      auto j = as_index(entry[1], epath + "[1]", dim);
      if (i >= j) fail(epath, "requires i < j, got i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1));
      if (auto [pos, fresh] = seen.emplace(std::pair{i, j}, r); !fresh) {
        fail(epath, "pair (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ") already given at brackets[" +
                        std::to_string(pos->second) + "]");
      }
      const auto& terms = entry[2];
      if (!terms.is_array()) fail(epath + "[2]", "expected an array of [k, \"p/q\"]");
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string tpath = epath + "[2][" + std::to_string(t) + "]";
        if (!terms[t].is_array() || terms[t].size() != 2) fail(tpath, "expected [k, \"p/q\"]");
        auto k = as_index(terms[t][0], tpath + "[0]", dim);
        auto value = as_scalar(terms[t][1], tpath + "[1]");
        constants.push_back({i, j, k, value});
      }
    }
  }
  return LieAlgebra(dim, constants, name);
}

Json algebra_to_json(const LieAlgebra& l) {
  Json out;
  out["dim"] = l.dim();
  out["name"] = l.name();
  Json brackets = Json::array();
  Json* current = nullptr;
  std::pair<std::size_t, std::size_t> key{l.dim(), l.dim()};
  for (const auto& c : l.constants()) {
    if (std::pair{c.i, c.j} != key) {
      key = {c.i, c.j};
      brackets.push_back(Json::array({c.i + 1, c.j + 1, Json::array()}));
      current = &brackets.back()[2];
    }
    current->push_back(Json::array({c.k + 1, format_scalar(c.value)}));
  }
  out["brackets"] = std::move(brackets);
  return out;
}

Matrix matrix_from_json(const Json& node, std::size_t dim) {
  if (!node.is_array()) fail("matrix", "expected an array of rows");
  if (node.size() != dim) {
    fail("matrix", "has " + std::to_string(node.size()) + " rows, algebra has dim " + std::to_string(dim));
  }
  Matrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const std::string rpath = "matrix[" + std::to_string(r) + "]";
    if (!node[r].is_array() || node[r].size() != dim) fail(rpath, "expected a row of " + std::to_string(dim) + " entries");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = as_scalar(node[r][c], rpath + "[" + std::to_string(c) + "]");
  }
  return m;
}

LieAlgebra resolve_algebra(const Json& node, const AlgebraResolver& resolve) {
  if (node.is_string()) {
    auto name = node.get<std::string>();
    if (resolve) {
      if (auto found = resolve(name)) return *found;
    }
    try {
      return algebra_by_name(name);
    } catch (const Error&) {
      fail("algebra", "unknown algebra '" + name + "'");
    }
  }
  return algebra_from_json(node, "algebra");
}

}  // namespace

LieAlgebra parse_algebra(std::string_view text) { return algebra_from_json(parse_json(text), ""); }

std::string write_algebra(const LieAlgebra& l) { return detail::pretty_json(algebra_to_json(l)); }

AutomorphismData parse_automorphism(std::string_view text, const AlgebraResolver& resolve) {
  auto root = parse_json(text);
  if (!root.is_object()) fail("", "expected an object");
  auto l = resolve_algebra(member(root, "algebra", ""), resolve);
  auto m = matrix_from_json(member(root, "matrix", ""), l.dim());
  return {std::move(l), std::move(m)};
}

std::string write_automorphism(const Automorphism& a) {
  Json out;
  out["algebra"] = algebra_to_json(a.algebra());
  Json rows = Json::array();
  const auto& m = a.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_scalar(m(r, c)));
    rows.push_back(std::move(row));
  }
  out["matrix"] = std::move(rows);
  return detail::pretty_json(out);
}

InputFile parse_input(std::string_view text, const AlgebraResolver& resolve) {
  auto root = parse_json(text);
  if (root.is_object() && root.contains("matrix")) {
    auto data = parse_automorphism(text, resolve);
    return {std::move(data.algebra), std::move(data.matrix)};
  }
  return {algebra_from_json(root, ""), std::nullopt};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

InputFile read_input(const std::filesystem::path& path, const AlgebraResolver& resolve) {
  try {
    return parse_input(read_text_file(path), resolve);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.message());
  }
}

}  // namespace liebound
