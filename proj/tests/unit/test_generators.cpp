#include <doctest.h>

#include <liebound/error.hpp>
#include <liebound/generators.hpp>
#include <liebound/semisimple.hpp>

using namespace liebound;

TEST_SUITE("generators") {

TEST_CASE("basic families") {
  CHECK(derived_length(gen_abelian(3)) == 1u);
  CHECK(nilpotency_class(gen_abelian(3)) == 1u);
  CHECK(radical(gen_borel2()).is_full());
  auto h = gen_heisenberg();
  CHECK(nilpotency_class(h) == 2u);
  CHECK(lower_central_series(h, Subspace::full(3))[1] == Subspace::span(3, {{0, 0, 1}}));
  CHECK(gen_abelian(0).dim() == 0);
}

TEST_CASE("filiform torus") {
  auto a = filiform_torus_aut(4, -1, -1);
  CHECK(a.matrix() == Matrix::diagonal({-1, -1, 1, -1}));
  CHECK(a.stats().order == 2u);
  CHECK(a.stats().fix == 1);
  CHECK(filiform_torus_aut(3, -1, -1).matrix() == Matrix::diagonal({-1, -1, 1}));
  CHECK(filiform_torus_aut(5, 1, 1).matrix() == Matrix::identity(5));
  for (std::size_t d = 3; d <= 10; ++d) {
    auto s = filiform_torus_aut(d, -1, -1).stats();
    std::size_t odd = 0;
    for (std::size_t i = 3; i <= d; i += 2) ++odd;
    CHECK(s.fix == odd);
    CHECK(s.order == 2u);
  }
  CHECK_THROWS_AS(gen_filiform(2), Error);
  CHECK_THROWS_AS(filiform_torus_aut(4, 0, 1), Error);
}

TEST_CASE("sl(n)") {
  auto sl2 = gen_sl(2);
  CHECK(sl2.dim() == 3);
  CHECK(radical(sl2).is_zero());
  CHECK(rank_ss(sl2) == 1);
  CHECK(gen_sl(4).dim() == 15);
  CHECK(validate(gen_sl(4)).empty());
  auto s = sl_diag_aut(2, {2, Scalar(1, 2)}).stats();
  CHECK(s.eig == 3);
  CHECK(s.fix == 1);
  CHECK(sl_diag_aut(3, {1, 1, 1}).matrix() == Matrix::identity(8));
  CHECK_THROWS_AS(gen_sl(1), Error);
  CHECK_THROWS_AS(sl_diag_aut(2, {1, 0}), Error);
}

TEST_CASE("cyclic sums") {
  auto two = gen_cyclic_sum(gen_sl(2), 2);
  CHECK(two.automorphism.stats() == AutStats{2, 3, true, 2});
  auto three = gen_cyclic_sum(gen_sl(2), 3);
  CHECK(three.algebra.dim() == 9);
  CHECK(three.automorphism.stats() == AutStats{3, 3, true, 3});

  auto twist = sl_diag_aut(2, {2, Scalar(1, 2)}).matrix();
  for (std::size_t m = 1; m <= 3; ++m) {
    for (bool twisted : {false, true}) {
      auto cs = twisted ? gen_cyclic_sum(gen_sl(2), m, twist) : gen_cyclic_sum(gen_sl(2), m);
      auto blocks = orbit_blocks(cs.automorphism);
      REQUIRE(blocks.size() == 1);
      CHECK(blocks[0].orbit_length == m);
      auto a0 = alpha_zero(blocks[0], cs.automorphism);
      CHECK(a0.matrix() == (twisted ? twist : Matrix::identity(3)));
      CHECK(cs.automorphism.stats().fix == fix_dim(a0.matrix()));
    }
  }
  CHECK_THROWS_AS(gen_cyclic_sum(gen_sl(2), 0), Error);
}

TEST_CASE("involution search") {
  for (std::size_t d = 3; d <= 8; ++d) {
    auto l = gen_filiform(d);
    auto s = search_involutions(l, 256);
    CHECK(s.min_fix == 1);
    CHECK(s.best.matrix() * s.best.matrix() == Matrix::identity(d));
    CHECK(fix_dim(s.best.matrix()) == s.min_fix);
  }
  auto f3 = search_involutions(gen_filiform(3), 1);
  CHECK(f3.min_fix == 1);
  CHECK(f3.recipe == "torus:-1,-1");
  CHECK(search_involutions(gen_abelian(2), 64).min_fix <= 1);
  CHECK_THROWS_AS(search_involutions(gen_abelian(2), 0), Error);
}

TEST_CASE("family specs and recipes") {
  CHECK(parse_family("cyclic-sum") == Family::CyclicSum);
  CHECK_THROWS_AS(parse_family("torus"), Error);
  auto g = generate({Family::Filiform, {"5"}, "torus:-1,-1"});
  CHECK(g.algebra.dim() == 5);
  CHECK(g.automorphism->stats().order == 2u);
  auto c = generate({Family::CyclicSum, {"sl2", "3"}, std::nullopt});
  CHECK(c.algebra.dim() == 9);
  CHECK(c.automorphism->stats().order == 3u);
  CHECK(generate({Family::Abelian, {"0"}, std::nullopt}).algebra.dim() == 0);
  CHECK_THROWS_AS(generate({Family::Sl, {"x"}, std::nullopt}), Error);
  CHECK_THROWS_AS(generate({Family::Sl, {"2"}, "torus:1,2"}), Error);
  CHECK_THROWS_AS(generate({Family::DirectSum, {"sl2", "borel2"}, "identity|identity|identity"}), Error);
  CHECK(algebra_by_name("sl2+borel2").dim() == 5);
  for (const auto& e : standard_corpus()) {
    CAPTURE(e.label);
    auto p = generate(e.spec);
    CHECK(validate(p.algebra).empty());
    CHECK(p.automorphism->stats().semisimple);
  }
}

}
