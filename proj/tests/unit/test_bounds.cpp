#include <doctest.h>

#include <liebound/analysis.hpp>
#include <liebound/bounds.hpp>
#include <liebound/error.hpp>
#include <liebound/generators.hpp>
#include <liebound/semisimple.hpp>

using namespace liebound;

namespace {

const Verdict& find(const AnalysisReport& r, const std::string& name) {
  for (const auto& v : r.verdicts)
    if (v.checker == name) return v;
  FAIL("missing verdict " << name);
  throw 0;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("K functions") {
  CHECK(shalev_K(1) == 1);
  CHECK(shalev_K(5) == 16);
  CHECK(kreknin_k(7) == 6);
  CHECK(kreknin_k(2) == 1);
  CHECK(kreknin_k(8) == 128);
  CHECK(kreknin_k(1) == 1);
  CHECK_THROWS_AS(shalev_K(0), Error);
  CHECK_THROWS_AS(kreknin_k(0), Error);
}

TEST_CASE("rank and radical derived-length checker") {
  auto [rank, dl] = thm2_check(3, 2, 2, 0);
  CHECK(rank.outcome == Outcome::Pass);
  CHECK(rank.rhs == 12);
  CHECK(dl.rhs == 4 * 2 + 3);
  auto b = thm2_check(1, 2, 0, 2);
  CHECK(b.second.rhs == 5);
  CHECK(b.second.outcome == Outcome::Pass);
  // m = 0 is dl <= K(n)
  for (std::uint64_t n = 1; n < 8; ++n) CHECK(thm2_check(0, n, 0, 0).second.rhs == shalev_K(n));
  CHECK(thm2_check(1, 1, 5, 0).first.outcome == Outcome::Fail);
}

TEST_CASE("dimension bounds") {
  CHECK(dim_bound_paper(1, 1) == 244);
  CHECK(dim_bound_paper(3, 2) == 16 * 216 + 4 * 36 + 224 * 6);
  CHECK(dim_bound_paper(3, 2) == 4944);
  CHECK(dim_bound_paper(0, 4) == 0);
  CHECK(dim_bound_derived(0, 4) == 0);
  CHECK(dim_bound_derived(1, 2) == 4 * f_of_k(4));
  CHECK(dim_bound_derived(1, 2) == 608);
  for (std::uint64_t m = 1; m <= 5; ++m)
    for (std::uint64_t n = 1; n <= 5; ++n) CHECK(dim_bound_derived(m, n) == 2 * m * n * f_of_k(2 * m * n));
}

TEST_CASE("quotient dimension checker") {
  auto c = cor1_check(1, 1, 0, 3);
  CHECK(c.stated_bound == 244);
  CHECK(c.dl.rhs == 2 * 2 + 1);
  CHECK(c.dim.outcome == Outcome::Pass);
  CHECK(!c.formulas_agree);
  CHECK(cor1_check(0, 3, 0, 0).formulas_agree);
}

TEST_CASE("finite-order checkers") {
  auto t = thm3_check(1, 2u, 2, 0);
  CHECK(t.dl.rhs == 5);
  CHECK(t.dim.outcome == Outcome::Pass);
  CHECK(thm3_check(3, 1u, 1, 0).dl.rhs == 7);
  CHECK_THROWS_AS(thm3_check(1, std::nullopt, 0, 0), Error);

  auto [rank, dl] = cor2_check(2u, 3, 2, 0);
  CHECK(rank.rhs == 12);
  CHECK(dl.rhs == 11);
  auto f4 = cor2_check(2u, 1, 0, 2);
  CHECK(f4.second.rhs == 5);
  auto big = cor2_check(8u, 1, 0, 1);
  CHECK(big.first.outcome == Outcome::NotApplicable);
  CHECK(big.first.note.find("ORDER_TOO_LARGE") != std::string::npos);
  CHECK(cor2_check(std::nullopt, 1, 0, 1).second.outcome == Outcome::NotApplicable);
}

TEST_CASE("overflow is detected") {
  CHECK_THROWS_AS(checked_mul(std::uint64_t{1} << 40, std::uint64_t{1} << 40), Error);
  CHECK_THROWS_AS(shalev_K(70), Error);
}

TEST_CASE("analyze: sl2 + borel2 with block automorphism") {
  auto g = generate({Family::DirectSum, {"sl2", "borel2"}, "identity|diag:1,2"});
  auto r = analyze(*g.automorphism);
  CHECK(r.radical_dim == 2);
  CHECK(r.radical_dl == 2);
  CHECK(r.quotient_rank == 1);
  CHECK(r.aut_stats.fix == 4);
  CHECK(r.aut_stats.eig == 2);
  CHECK(r.radical_dim + r.quotient_dim == r.dim);
  CHECK(!r.any_fail());
}

TEST_CASE("analyze: identity automorphism") {
  for (const auto& l : {gen_sl(3), gen_heisenberg(), direct_sum(gen_sl(2), gen_filiform(4))}) {
    auto r = analyze(validate_aut(l, Matrix::identity(l.dim())));
    CHECK(r.aut_stats.fix == l.dim());
    CHECK(r.aut_stats.eig == 1);
    const auto& v = find(r, "thm2.rank");
    CHECK(v.rhs == 2 * l.dim());
    CHECK(v.outcome == Outcome::Pass);
  }
}

TEST_CASE("analyze: filiform involutions") {
  auto r4 = analyze(filiform_torus_aut(4, -1, -1));
  CHECK(r4.nilpotency_class == 3u);
  CHECK(r4.radical_dim == 4);
  CHECK(r4.radical_dl == 2);
  CHECK(find(r4, "thm3.dl").rhs == 5);
  CHECK(find(r4, "thm3.dim").lhs == 0);
  CHECK(find(r4, "cor2.dl").rhs == 5);
  CHECK(find(r4, "cor2.rank").lhs == 0);

  auto r6 = analyze(filiform_torus_aut(6, 1, -1));
  CHECK(r6.nilpotency_class == 5u);
  CHECK(!r6.any_fail());
}

TEST_CASE("analyze: swap and aperiodic cases") {
  auto swap = analyze(gen_cyclic_sum(gen_sl(2), 2).automorphism);
  CHECK(find(swap, "thm2.rank").lhs == 2);
  CHECK(find(swap, "thm2.rank").rhs == 12);
  CHECK(find(swap, "thm3.dim").rhs == 4944);
  CHECK(find(swap, "cor2.rank").rhs == 12);

  auto ap = analyze(sl_diag_aut(2, {2, Scalar(1, 2)}));
  CHECK(find(ap, "thm3.dim").outcome == Outcome::NotApplicable);
  CHECK(find(ap, "cor2.rank").outcome == Outcome::NotApplicable);

  auto big = analyze(gen_cyclic_sum(gen_abelian(1), 8).automorphism);
  CHECK(find(big, "cor2.rank").outcome == Outcome::NotApplicable);
}

TEST_CASE("analyze rejects non-semisimple automorphisms") {
  Matrix shear = Matrix::identity(2);
  shear(0, 1) = 1;
  try {
    analyze(validate_aut(gen_abelian(2), shear));
    FAIL("expected NOT_SEMISIMPLE_AUT");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSemisimpleAut);
  }
}

TEST_CASE("analyze: K function is pluggable") {
  auto a = filiform_torus_aut(5, -1, -1);
  AnalysisOptions k;
  k.k = kreknin_k;
  k.k_name = "kreknin";
  auto rs = analyze(a);
  auto rk = analyze(a, k);
  CHECK(find(rs, "thm2.dl").rhs == dl_bound(a.stats().fix, a.stats().eig, shalev_K));
  CHECK(find(rk, "thm2.dl").rhs == dl_bound(a.stats().fix, a.stats().eig, kreknin_k));
  CHECK(rk.k_function == "kreknin");
}

TEST_CASE("corpus invariants") {
  for (const auto& e : standard_corpus()) {
    CAPTURE(e.label);
    auto g = generate(e.spec);
    auto r = analyze(*g.automorphism);
    CHECK(!r.any_fail());
    CHECK(r.radical_dim + r.quotient_dim == r.dim);
    CHECK(r.radical_dl <= r.refine_certificate);
    CHECK(r.refine_certificate <= dl_bound(r.aut_stats.fix, r.aut_stats.eig, shalev_K));
    CHECK(to_json(r) == to_json(analyze(*g.automorphism)));
  }
}

}
