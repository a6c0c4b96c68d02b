#include <doctest.h>

#include <liebound/error.hpp>
#include <liebound/generators.hpp>
#include <liebound/linalg.hpp>
#include <liebound/semisimple.hpp>

using namespace liebound;

TEST_SUITE("semisimple") {

TEST_CASE("rank") {
  CHECK(rank_ss(gen_sl(2)) == 1);
  CHECK(rank_ss(gen_sl(3)) == 2);
  CHECK(rank_ss(gen_sl(4)) == 3);
  CHECK(rank_ss(direct_sum(gen_sl(2), gen_sl(2))) == 2);
  CHECK(rank_ss(direct_sum(gen_sl(2), gen_sl(3))) == rank_ss(gen_sl(2)) + rank_ss(gen_sl(3)));
  CHECK_THROWS_AS(rank_ss(gen_borel2()), Error);
  // any seed gives the same answer on these
  for (std::uint64_t seed : {1u, 2u, 3u}) CHECK(rank_ss(gen_sl(3), Rng{seed}) == 2);
}

TEST_CASE("simple ideals") {
  auto one = simple_ideals(gen_sl(2));
  REQUIRE(one.size() == 1);
  CHECK(one[0].is_full());

  auto two = simple_ideals(direct_sum(gen_sl(2), gen_sl(2)));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == Subspace::span(6, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}}));
  CHECK(two[1] == Subspace::span(6, {{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}));

  auto l = direct_sum(direct_sum(gen_sl(2), gen_sl(2)), gen_sl(3));
  auto three = simple_ideals(l);
  REQUIRE(three.size() == 3);
  std::vector<std::size_t> dims;
  Subspace sum = Subspace::zero(l.dim());
  for (const auto& s : three) {
    dims.push_back(s.dim());
    CHECK(is_ideal(l, s));
    CHECK(subspace_intersect(sum, s).is_zero());
    sum = subspace_sum(sum, s);
  }
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{3, 3, 8});
  CHECK(sum.is_full());
}

TEST_CASE("orbit blocks") {
  auto blockwise = generate({Family::DirectSum, {"sl2", "sl2"}, "conj:2,1/2|identity"});
  auto b = orbit_blocks(*blockwise.automorphism);
  REQUIRE(b.size() == 2);
  CHECK(b[0].orbit_length == 1);
  CHECK(b[1].orbit_length == 1);

  auto swap = gen_cyclic_sum(gen_sl(2), 2);
  b = orbit_blocks(swap.automorphism);
  REQUIRE(b.size() == 1);
  CHECK(b[0].orbit_length == 2);
  CHECK(swap.automorphism.matrix().apply(b[0].orbit[0].basis_vector(0)) != b[0].orbit[0].basis_vector(0));
  CHECK(b[0].orbit[0].image(swap.automorphism.matrix()) == b[0].orbit[1]);

  // swap on an sl2 pair next to an invariant sl3
  auto sl3 = gen_sl(3);
  auto l = direct_sum(swap.algebra, sl3);
  Matrix m = Matrix::identity(l.dim());
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) m(r, c) = swap.automorphism.matrix()(r, c);
  auto mixed = orbit_blocks(validate_aut(l, m));
  std::vector<std::size_t> lengths;
  for (const auto& blk : mixed) lengths.push_back(blk.orbit_length);
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<std::size_t>{1, 2});
  for (const auto& blk : mixed) CHECK(blk.orbit_length <= blk.eig);
}

TEST_CASE("alpha_zero") {
  auto plain = gen_cyclic_sum(gen_sl(2), 2);
  auto blocks = orbit_blocks(plain.automorphism);
  auto a0 = alpha_zero(blocks[0], plain.automorphism);
  CHECK(a0.matrix() == Matrix::identity(3));
  CHECK(fix_dim(a0.matrix()) == 3);

  auto twist = sl_diag_aut(2, {2, Scalar(1, 2)});
  auto twisted = gen_cyclic_sum(gen_sl(2), 2, twist.matrix());
  auto tb = orbit_blocks(twisted.automorphism);
  auto t0 = alpha_zero(tb[0], twisted.automorphism);
  CHECK(t0.matrix() == twist.matrix());
  CHECK(fix_dim(t0.matrix()) == 1);
  CHECK(twisted.automorphism.stats().fix == 1);

  auto single = validate_aut(gen_sl(2), twist.matrix());
  auto sb = orbit_blocks(single);
  CHECK(alpha_zero(sb[0], single).matrix() == twist.matrix());
}

TEST_CASE("orbit projections of an eigenvector are independent") {
  // For the cyclic construction: take an eigenvector v0 of alpha_0 on copy 0
  // and spread it along the orbit with a root-of-unity-free weight; the
  // projections onto the copies are independent.
  for (std::size_t m : {2u, 3u}) {
    auto cs = gen_cyclic_sum(gen_sl(2), m);
    const auto& a = cs.automorphism.matrix();
    Vector v = zero_vector(3 * m);
    v[0] = 1;  // e in copy 0
    Vector sum = v, cur = v;
    for (std::size_t j = 1; j < m; ++j) {
      cur = a.apply(cur);
      sum = sum + cur;
    }
    CHECK(a.apply(sum) == sum);
    std::vector<Vector> projections;
    for (std::size_t j = 0; j < m; ++j) {
      Vector p = zero_vector(3 * m);
      for (std::size_t t = 0; t < 3; ++t) p[3 * j + t] = sum[3 * j + t];
      projections.push_back(p);
    }
    CHECK(rank(Matrix::from_rows(projections, 3 * m)) == m);
  }
}

TEST_CASE("rank of a simple ideal against its fixed space") {
  CHECK(check_lemma1(gen_sl(2), Matrix::identity(3)).outcome == Outcome::Pass);
  auto v = check_lemma1(gen_sl(2), sl_diag_aut(2, {2, Scalar(1, 2)}).matrix());
  CHECK(v.outcome == Outcome::Pass);
  CHECK(v.lhs == 1);
  CHECK(v.rhs == 2);
  auto c = sl_diag_aut(3, {1, 2, 4});
  CHECK(fix_dim(c.matrix()) == 2);
  v = check_lemma1(gen_sl(3), c.matrix());
  CHECK(v.lhs == 2);
  CHECK(v.rhs == 4);
  CHECK_THROWS_AS(check_lemma1(direct_sum(gen_sl(2), gen_sl(2)), Matrix::identity(6)), Error);
}

TEST_CASE("rank of the semisimple part over orbit blocks") {
  auto swap = gen_cyclic_sum(gen_sl(2), 2);
  auto p = check_prop1(swap.automorphism);
  CHECK(p.rank.outcome == Outcome::Pass);
  CHECK(p.rank.lhs == 2);
  CHECK(p.rank.rhs == 12);
  for (const auto& d : p.details) CHECK(d.outcome == Outcome::Pass);

  auto id = check_prop1(validate_aut(gen_sl(2), Matrix::identity(3)));
  CHECK(id.rank.lhs == 1);
  CHECK(id.rank.rhs == 6);

  auto c = check_prop1(sl_diag_aut(3, {1, 2, 4}));
  CHECK(c.rank.outcome == Outcome::Pass);
  CHECK(c.rank.lhs == 2);
}

TEST_CASE("simple dimension table") {
  const std::vector<std::uint64_t> f{116, 124, 136, 152, 172, 196, 224, 256};
  const std::vector<std::uint64_t> dims{3, 14, 21, 52, 55, 78, 133, 248};
  for (std::uint64_t k = 1; k <= 8; ++k) {
    CHECK(f_of_k(k) == f[k - 1]);
    CHECK(max_simple_dim(k) == dims[k - 1]);
  }
  for (std::uint64_t k = 1; k <= 20; ++k) CHECK(check_lemma2(k).outcome == Outcome::Pass);
  CHECK(max_simple_dim(20) == 2 * 20 * 20 + 20);
  CHECK_THROWS_AS(f_of_k(0), Error);
}

}
