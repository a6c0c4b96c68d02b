#include <liebound/bounds.hpp>
#include <liebound/error.hpp>

namespace liebound {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "bound exceeds 64 bits");
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "bound exceeds 64 bits");
  return out;
}

std::uint64_t shalev_K(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidParameter, "K(n) needs n >= 1");
  if (n > 64) throw Error(ErrorCode::Overflow, "2^(n-1) exceeds 64 bits");
  return std::uint64_t{1} << (n - 1);
}

std::uint64_t kreknin_k(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidParameter, "k(n) needs n >= 1");
  if (n >= 2 && n <= 7) return n - 1;
  return shalev_K(n);
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::Fail: return "FAIL";
    case Outcome::NotApplicable: return "NOT_APPLICABLE";
  }
  return "UNKNOWN";
}

Verdict compare_le(std::string checker, std::uint64_t lhs, std::uint64_t rhs, std::string note) {
  return {std::move(checker), lhs <= rhs ? Outcome::Pass : Outcome::Fail, lhs, rhs, std::move(note)};
}

Verdict not_applicable(std::string checker, std::string note) {
  return {std::move(checker), Outcome::NotApplicable, 0, 0, std::move(note)};
}

std::uint64_t dl_bound(std::uint64_t m, std::uint64_t n, const BoundFunction& k) {
  return checked_add(checked_mul(m + 1, k(n)), m);
}

VerdictPair thm2_check(std::uint64_t m, std::uint64_t n, std::uint64_t rank, std::uint64_t dl,
                       const BoundFunction& k) {
  return {compare_le("thm2.rank", rank, checked_mul(2, checked_mul(m, n)), "rank(g/r) <= 2*m*n"),
          compare_le("thm2.dl", dl, dl_bound(m, n, k), "dl(r) <= (m+1)*K(n)+m")};
}

std::uint64_t dim_bound_paper(std::uint64_t m, std::uint64_t n) {
  const std::uint64_t mn = checked_mul(m, n);
  const std::uint64_t sq = checked_mul(mn, mn);
  return checked_add(checked_add(checked_mul(16, checked_mul(sq, mn)), checked_mul(4, sq)), checked_mul(224, mn));
}

std::uint64_t dim_bound_derived(std::uint64_t m, std::uint64_t n) {
  const std::uint64_t r = checked_mul(2, checked_mul(m, n));
  const std::uint64_t f = checked_add(checked_add(checked_mul(2, checked_mul(r, r)), checked_mul(2, r)), 112);
  return checked_mul(r, f);
}

Cor1Result cor1_check(std::uint64_t m, std::uint64_t n, std::uint64_t dl, std::uint64_t quotient_dim) {
  if (n == 0) throw Error(ErrorCode::InvalidParameter, "dimension bounds need n >= 1");
  if (n >= 64) throw Error(ErrorCode::Overflow, "2^n exceeds 64 bits");
  Cor1Result r;
  r.stated_bound = dim_bound_paper(m, n);
  r.derived_bound = dim_bound_derived(m, n);
  r.formulas_agree = r.stated_bound == r.derived_bound;
  const std::uint64_t dl_rhs = checked_add(checked_mul(m + 1, std::uint64_t{1} << n), m);
  r.dl = compare_le("cor1.dl", dl, dl_rhs, "dl(r) <= (m+1)*2^n+m");
  r.dim = compare_le("cor1.dim", quotient_dim, r.stated_bound, "dim(g/r) <= 16(mn)^3+4(mn)^2+224(mn)");
  r.dim_derived = compare_le("cor1.dim_derived", quotient_dim, r.derived_bound, "dim(g/r) <= 2mn*f(2mn)");
  return r;
}

Thm3Result thm3_check(std::uint64_t m, std::optional<std::uint64_t> order, std::uint64_t dl,
                      std::uint64_t quotient_dim) {
  if (!order) throw Error(ErrorCode::NotPeriodic, "finite-order bounds need an automorphism of finite order");
  const std::uint64_t n = *order;
  return {compare_le("thm3.dim", quotient_dim, dim_bound_paper(m, n), "dim(g/r) <= 16(mn)^3+4(mn)^2+224(mn)"),
          compare_le("thm3.dl", dl, dl_bound(m, n, shalev_K), "dl(r) <= (m+1)*2^(n-1)+m"),
          compare_le("thm3.dl_kreknin", dl, dl_bound(m, n, kreknin_k), "dl(r) <= (m+1)*k(n)+m")};
}

VerdictPair cor2_check(std::optional<std::uint64_t> order, std::uint64_t fix, std::uint64_t rank,
                       std::uint64_t dl) {
  if (!order) {
    return {not_applicable("cor2.rank", "automorphism is aperiodic"),
            not_applicable("cor2.dl", "automorphism is aperiodic")};
  }
  if (*order > 7) {
    return {not_applicable("cor2.rank", "ORDER_TOO_LARGE: order " + std::to_string(*order) + " > 7"),
            not_applicable("cor2.dl", "ORDER_TOO_LARGE: order " + std::to_string(*order) + " > 7")};
  }
  const std::uint64_t ord = *order;
  return {compare_le("cor2.rank", rank, 2 * ord * fix, "rank(g/r) <= 2*ord*fix"),
          compare_le("cor2.dl", dl, ord * fix + ord + fix, "dl(r) <= ord*fix+ord+fix")};
}

}  // namespace liebound
