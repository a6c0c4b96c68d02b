#ifndef LIEBOUND_ANALYSIS_HPP
#define LIEBOUND_ANALYSIS_HPP

#include <liebound/automorphism.hpp>
#include <liebound/bounds.hpp>
#include <liebound/semisimple.hpp>

#include <optional>
#include <string>
#include <vector>

namespace liebound {

struct AnalysisOptions {
  BoundFunction k = shalev_K;
  std::string k_name = "shalev";
  std::uint64_t seed = kDefaultSeed;
};

/// Everything computed by analyze(). With n = eig (or the order) and m = fix
/// of the automorphism, every checker reports the two integers it compared.
struct AnalysisReport {
  std::string algebra_name;
  std::size_t dim = 0;
  std::size_t radical_dim = 0;
  std::size_t radical_dl = 0;
  std::size_t quotient_dim = 0;
  std::size_t quotient_rank = 0;
  std::optional<std::size_t> derived_length;   // of the whole algebra
  std::optional<std::size_t> nilpotency_class;
  AutStats aut_stats;
  AutStats restricted_stats;  // on the radical
  AutStats quotient_stats;    // on L / radical
  std::uint64_t refine_certificate = 0;
  std::size_t refine_line_steps = 0;
  std::size_t refine_terms = 0;
  std::uint64_t dim_bound_paper = 0;
  std::uint64_t dim_bound_derived = 0;
  bool bound_formulas_agree = false;
  std::string k_function;
  std::uint64_t seed = 0;
  std::vector<Verdict> verdicts;

  bool any_fail() const;
};

/// Splits L into its radical and the semisimple quotient, analyzes the
/// automorphism on both sides and runs every applicable checker. FAIL
/// verdicts are reported, never thrown. Throws NotSemisimpleAut when the
/// automorphism is not diagonalizable, InternalInconsistency if the radical is
/// not invariant.
AnalysisReport analyze(const Automorphism& a, const AnalysisOptions& options = {});

std::string to_json(const AnalysisReport& r);
std::string to_text(const AnalysisReport& r);

}  // namespace liebound

#endif  // LIEBOUND_ANALYSIS_HPP
