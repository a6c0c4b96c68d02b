#ifndef LIEBOUND_BOUNDS_HPP
#define LIEBOUND_BOUNDS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace liebound {

/// A derived-length bound for fixed-point-free automorphisms, indexed by the
/// number of eigenvalues (or the order). Must be monotone.
using BoundFunction = std::function<std::uint64_t(std::uint64_t)>;

/// 2^{n-1}. Throws InvalidParameter for n = 0, Overflow for n > 64.
std::uint64_t shalev_K(std::uint64_t n);

/// n - 1 for 2 <= n <= 7 (the range where this value is known to hold),
/// 2^{n-1} otherwise.
std::uint64_t kreknin_k(std::uint64_t n);

enum class Outcome { Pass, Fail, NotApplicable };
std::string_view to_string(Outcome o);

/// One checked inequality lhs <= rhs.
struct Verdict {
  std::string checker;
  Outcome outcome = Outcome::NotApplicable;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  std::string note;
  std::string relation = "<=";  // how lhs and rhs were compared
};

Verdict compare_le(std::string checker, std::uint64_t lhs, std::uint64_t rhs, std::string note = {});
Verdict not_applicable(std::string checker, std::string note);

// Overflow-checked arithmetic for the bound formulas.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

/// (m + 1) K(n) + m.
std::uint64_t dl_bound(std::uint64_t m, std::uint64_t n, const BoundFunction& k);

struct VerdictPair {
  Verdict first;
  Verdict second;
};

/// rank <= 2 m n  and  dl <= (m + 1) K(n) + m, with n the eigenvalue count.
VerdictPair thm2_check(std::uint64_t m, std::uint64_t n, std::uint64_t rank, std::uint64_t dl,
                       const BoundFunction& k = shalev_K);

/// 16 (mn)^3 + 4 (mn)^2 + 224 (mn), exactly as stated.
std::uint64_t dim_bound_paper(std::uint64_t m, std::uint64_t n);
/// 2mn * f(2mn) with f(k) = 2k^2 + 2k + 112: the chain rank <= 2mn,
/// dim <= rank * f(rank).
std::uint64_t dim_bound_derived(std::uint64_t m, std::uint64_t n);

struct Cor1Result {
  Verdict dl;           // dl <= (m + 1) 2^n + m
  Verdict dim;          // quotient_dim <= dim_bound_paper
  Verdict dim_derived;  // quotient_dim <= dim_bound_derived
  std::uint64_t stated_bound = 0;
  std::uint64_t derived_bound = 0;
  bool formulas_agree = false;
};

Cor1Result cor1_check(std::uint64_t m, std::uint64_t n, std::uint64_t dl, std::uint64_t quotient_dim);

struct Thm3Result {
  Verdict dim;          // quotient_dim <= 16 (mn)^3 + 4 (mn)^2 + 224 (mn)
  Verdict dl;           // dl <= (m + 1) 2^{n-1} + m
  Verdict dl_kreknin;   // dl <= (m + 1) k(n) + m
};

/// n is the order. Throws NotPeriodic when no order is given.
Thm3Result thm3_check(std::uint64_t m, std::optional<std::uint64_t> order, std::uint64_t dl,
                      std::uint64_t quotient_dim);

/// rank <= 2 ord fix  and  dl <= ord fix + ord + fix; NOT_APPLICABLE past order 7.
VerdictPair cor2_check(std::optional<std::uint64_t> order, std::uint64_t fix, std::uint64_t rank,
                       std::uint64_t dl);

}  // namespace liebound

#endif  // LIEBOUND_BOUNDS_HPP
