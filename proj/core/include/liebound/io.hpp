#ifndef LIEBOUND_IO_HPP
#define LIEBOUND_IO_HPP

#include <liebound/automorphism.hpp>
#include <liebound/lie_algebra.hpp>

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace liebound {

// Algebra files:
//   {"dim": d, "name": s, "brackets": [[i, j, [[k, "p/q"], ...]], ...]}
// 1-based indices with i < j; pairs not listed bracket to zero.
//
// Automorphism files:
//   {"algebra": <name or inline algebra>, "matrix": [["p/q", ...], ...]}
// Column j of the matrix is the image of e_j.
//
// Every parse failure throws ParseError naming the offending JSON path.

LieAlgebra parse_algebra(std::string_view text);
std::string write_algebra(const LieAlgebra& l);

/// Looks up algebras referenced by name; return nullopt to fall back to the
/// built-in names understood by algebra_by_name().
using AlgebraResolver = std::function<std::optional<LieAlgebra>(std::string_view)>;

struct AutomorphismData {
  LieAlgebra algebra;
  Matrix matrix;  // not yet validated
};

AutomorphismData parse_automorphism(std::string_view text, const AlgebraResolver& resolve = {});
std::string write_automorphism(const Automorphism& a);

/// Either kind of file; `automorphism` is set when a "matrix" key is present.
struct InputFile {
  LieAlgebra algebra;
  std::optional<Matrix> automorphism;
};

InputFile parse_input(std::string_view text, const AlgebraResolver& resolve = {});
InputFile read_input(const std::filesystem::path& path, const AlgebraResolver& resolve = {});

std::string read_text_file(const std::filesystem::path& path);

}  // namespace liebound

#endif  // LIEBOUND_IO_HPP
