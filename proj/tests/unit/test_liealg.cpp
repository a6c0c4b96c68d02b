#include <doctest.h>

#include <liebound/error.hpp>
#include <liebound/generators.hpp>
#include <liebound/lie_algebra.hpp>
#include <liebound/linalg.hpp>

#include "../support/oracle.hpp"

using namespace liebound;

namespace {

// sl2 in the basis (e, f, h) of gen_sl(2).
const Vector E{1, 0, 0}, F{0, 1, 0}, H{0, 0, 1};

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = static_cast<long>(rng() % 9) - 4;
  return v;
}

oracle::Cube cube(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  oracle::Cube c(n, std::vector<std::vector<oracle::Q>>(n, std::vector<oracle::Q>(n)));
  for (const auto& sc : l.constants()) {
    c[sc.i][sc.j][sc.k] += sc.value;
    c[sc.j][sc.i][sc.k] -= sc.value;
  }
  return c;
}

}  // namespace

TEST_SUITE("liealg") {

TEST_CASE("sl2 table") {
  auto sl2 = gen_sl(2);
  CHECK(sl2.dim() == 3);
  CHECK(sl2.bracket(E, F) == H);
  CHECK(sl2.bracket(H, E) == Vector{2, 0, 0});
  CHECK(sl2.bracket(H, F) == Vector{0, -2, 0});
  CHECK(validate(sl2).empty());
}

TEST_CASE("generated algebras satisfy Jacobi, checked densely") {
  std::vector<LieAlgebra> all{gen_abelian(4), gen_borel2(), gen_heisenberg(), gen_filiform(5), gen_sl(2), gen_sl(3),
                              direct_sum(gen_sl(2), gen_borel2())};
  for (const auto& l : all) {
    CAPTURE(l.name());
    CHECK(validate(l).empty());
    CHECK(oracle::cube_jacobi_holds(cube(l)));
  }
}

TEST_CASE("corrupted filiform reports the triple") {
  auto c = gen_filiform(4).constants();
  c.push_back({1, 2, 1, 1});  // [e2, e3] = e2
  LieAlgebra bad(4, c, "bad");
  auto v = validate(bad);
  REQUIRE(!v.empty());
  CHECK(v.front().i == 0);
  CHECK(v.front().j == 1);
  CHECK(v.front().k == 2);
  CHECK(!is_zero(v.front().residual));
  CHECK(!oracle::cube_jacobi_holds(cube(bad)));
}

TEST_CASE("bracket is alternating and bilinear") {
  std::mt19937_64 rng(3);
  auto l = gen_sl(3);
  for (int t = 0; t < 20; ++t) {
    auto x = random_vector(rng, 8), y = random_vector(rng, 8), z = random_vector(rng, 8);
    CHECK(is_zero(l.bracket(x, x)));
    CHECK(l.bracket(Scalar(2) * x + y, z) == Scalar(2) * l.bracket(x, z) + l.bracket(y, z));
  }
  CHECK_THROWS_AS(l.bracket(Vector(3), Vector(8)), Error);
}

TEST_CASE("constructor rejects bad constants") {
  CHECK_THROWS_AS(LieAlgebra(2, {{0, 0, 1, 1}}), Error);
  CHECK_THROWS_AS(LieAlgebra(2, {{0, 2, 1, 1}}), Error);
  // i > j is stored negated
  LieAlgebra b(2, {{1, 0, 1, -1}});
  CHECK(b == gen_borel2());
}

TEST_CASE("subspace brackets") {
  auto f4 = gen_filiform(4);
  auto full = Subspace::full(4);
  CHECK(subspace_bracket(f4, full, Subspace::zero(4)).is_zero());
  CHECK(subspace_bracket(gen_sl(2), Subspace::full(3), Subspace::full(3)).is_full());
  CHECK(subspace_bracket(f4, full, full) == Subspace::span(4, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
}

TEST_CASE("derived series") {
  CHECK(derived_length(gen_abelian(3)) == 1u);
  CHECK(derived_length(gen_filiform(4)) == 2u);
  CHECK(derived_length(gen_borel2()) == 2u);
  CHECK(!derived_length(gen_sl(2)).has_value());
  CHECK(derived_length(gen_abelian(0)) == 0u);
  auto not_sub = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
  CHECK_THROWS_AS(derived_series(gen_sl(2), not_sub), Error);
}

TEST_CASE("lower central series") {
  CHECK(nilpotency_class(gen_abelian(2)) == 1u);
  CHECK(nilpotency_class(gen_heisenberg()) == 2u);
  for (std::size_t d = 3; d <= 8; ++d) CHECK(nilpotency_class(gen_filiform(d)) == d - 1);
  CHECK(!nilpotency_class(gen_borel2()).has_value());
  for (const auto& l : {gen_filiform(6), gen_heisenberg(), gen_abelian(2)}) {
    CHECK(*derived_length(l) <= *nilpotency_class(l));
  }
}

TEST_CASE("Killing form") {
  CHECK(killing_form(gen_abelian(3)).is_zero());
  auto k = killing_form(gen_sl(2));
  CHECK(k == Matrix::from_rows({{0, 4, 0}, {4, 0, 0}, {0, 0, 8}}, 3));
  CHECK(killing_form(gen_borel2()) == Matrix::diagonal({1, 0}));

  std::mt19937_64 rng(17);
  auto l = direct_sum(gen_sl(2), gen_heisenberg());
  auto kf = killing_form(l);
  auto kappa = [&](const Vector& x, const Vector& y) {
    Scalar s = 0;
    auto ky = kf.apply(y);
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * ky[i];
    return s;
  };
  for (int t = 0; t < 20; ++t) {
    auto x = random_vector(rng, 6), y = random_vector(rng, 6), z = random_vector(rng, 6);
    CHECK(kappa(l.bracket(x, y), z) == kappa(x, l.bracket(y, z)));
  }
}

TEST_CASE("radical") {
  CHECK(radical(gen_sl(2)).is_zero());
  CHECK(radical(gen_borel2()).is_full());
  auto mixed = direct_sum(gen_sl(2), gen_borel2());
  CHECK(radical(mixed) == Subspace::span(5, {{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
  auto with_abelian = direct_sum(gen_sl(2), gen_abelian(2));
  CHECK(radical(with_abelian) == Subspace::span(5, {{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
  for (const auto& l : {gen_sl(3), mixed, direct_sum(gen_heisenberg(), gen_sl(2))}) {
    auto q = quotient(l, radical(l));
    CHECK(determinant(killing_form(q.algebra)) != 0);
  }
  // Every solvable ideal we know of lies inside the radical.
  auto l = direct_sum(direct_sum(gen_sl(2), gen_heisenberg()), gen_borel2());
  auto r = radical(l);
  CHECK(r.dim() == 5);
  CHECK(r.contains(Subspace::span(8, {{0, 0, 0, 0, 0, 1, 0, 0}})));
}

TEST_CASE("quotient") {
  auto f4 = gen_filiform(4);
  auto same = quotient(f4, Subspace::zero(4));
  CHECK(same.algebra == f4);

  auto center = Subspace::span(4, {{0, 0, 0, 1}});
  auto q = quotient(f4, center);
  CHECK(q.algebra == gen_filiform(3));

  auto mixed = direct_sum(gen_sl(2), gen_borel2());
  CHECK(quotient(mixed, radical(mixed)).algebra == gen_sl(2));

  CHECK_THROWS_AS(quotient(f4, Subspace::span(4, {{1, 0, 0, 0}})), Error);

  std::mt19937_64 rng(23);
  auto l = direct_sum(gen_sl(2), gen_filiform(4));
  auto qq = quotient(l, radical(l));
  for (int t = 0; t < 10; ++t) {
    auto x = random_vector(rng, 7), y = random_vector(rng, 7);
    CHECK(qq.projection.apply(l.bracket(x, y)) ==
          qq.algebra.bracket(qq.projection.apply(x), qq.projection.apply(y)));
  }
}

TEST_CASE("direct sums") {
  CHECK(direct_sum(gen_sl(2), gen_abelian(0)) == gen_sl(2));
  auto s = direct_sum(gen_sl(2), gen_sl(2));
  CHECK(s.dim() == 6);
  CHECK(validate(s).empty());
  CHECK(is_ideal(s, Subspace::span(6, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}})));
  CHECK(derived_length(direct_sum(gen_borel2(), gen_abelian(3))) == 2u);
  CHECK(derived_length(direct_sum(gen_filiform(4), gen_heisenberg())) == 2u);
}

}
