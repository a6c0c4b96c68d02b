#include <doctest.h>

#include <liebound/error.hpp>
#include <liebound/generators.hpp>
#include <liebound/io.hpp>

using namespace liebound;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("algebra round trip") {
  for (const auto& l : {gen_sl(3), gen_filiform(5), gen_abelian(0), direct_sum(gen_sl(2), gen_borel2())}) {
    auto text = write_algebra(l);
    auto back = parse_algebra(text);
    CHECK(back == l);
    CHECK(back.name() == l.name());
    CHECK(write_algebra(back) == text);
  }
}

TEST_CASE("rationals in tables") {
  auto l = parse_algebra(R"({"dim": 2, "brackets": [[1, 2, [[2, "3/6"]]]]})");
  CHECK(l.bracket_basis(0, 1) == Vector{0, Scalar(1, 2)});
  CHECK(write_algebra(l).find("\"1/2\"") != std::string::npos);
}

TEST_CASE("position-specific parse errors") {
  auto bad = [](std::string text) { return [text] { parse_algebra(text); }; };
  CHECK(code_of(bad(R"({"dim": 3, "brackets": [[1, 2, [[3, "1/0"]]]]})")) == ErrorCode::ParseError);
  CHECK(message_of(bad(R"({"dim": 3, "brackets": [[1, 2, [[3, "1/0"]]]]})")).find("brackets[0][2][0][1]") !=
        std::string::npos);
  CHECK(message_of(bad(R"({"dim": 3, "brackets": [[2, 1, [[3, "1"]]]]})")).find("i < j") != std::string::npos);
  CHECK(message_of(bad(R"({"dim": 3, "brackets": [[1, 4, [[3, "1"]]]]})")).find("brackets[0][1]") !=
        std::string::npos);
  CHECK(message_of(bad(R"({"dim": 3, "brackets": [[1, 2, [[3, "1"]]], [1, 2, []]]})")).find("already") !=
        std::string::npos);
  CHECK(message_of(bad(R"({"brackets": []})")).find("dim") != std::string::npos);
  CHECK(message_of(bad(R"({"dim": 3,)")).find("line") != std::string::npos);
  CHECK(code_of(bad("[1,2]")) == ErrorCode::ParseError);
}

TEST_CASE("automorphism files") {
  auto a = filiform_torus_aut(4, -1, -1);
  auto text = write_automorphism(a);
  auto back = parse_automorphism(text);
  CHECK(back.algebra == a.algebra());
  CHECK(back.matrix == a.matrix());

  auto named = parse_automorphism(R"({"algebra": "sl2", "matrix": [["4","0","0"],["0","1/4","0"],["0","0","1"]]})");
  CHECK(named.algebra == gen_sl(2));
  CHECK(named.matrix == Matrix::diagonal({4, Scalar(1, 4), 1}));

  AlgebraResolver resolve = [](std::string_view name) -> std::optional<LieAlgebra> {
    if (name == "b2") return gen_borel2();
    return std::nullopt;
  };
  auto custom = parse_automorphism(R"({"algebra": "b2", "matrix": [["1","0"],["0","2"]]})", resolve);
  CHECK(custom.algebra == gen_borel2());

  CHECK(message_of([] { parse_automorphism(R"({"algebra": "nope", "matrix": []})"); }).find("unknown algebra") !=
        std::string::npos);
  CHECK(message_of([] { parse_automorphism(R"({"algebra": "sl2", "matrix": [["1"]]})"); }).find("rows") !=
        std::string::npos);
  CHECK(message_of([] {
          parse_automorphism(R"({"algebra": "borel2", "matrix": [["1","0"],["0","x"]]})");
        }).find("matrix[1][1]") != std::string::npos);
}

TEST_CASE("input kind detection") {
  CHECK(!parse_input(write_algebra(gen_sl(2))).automorphism);
  CHECK(parse_input(write_automorphism(filiform_torus_aut(3, -1, -1))).automorphism.has_value());
}

}
