#include <liebound/analysis.hpp>

#include <liebound/error.hpp>

#include "json_util.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace liebound {
namespace {

using detail::Json;

// Runs one checker group; a bound too large for 64 bits becomes
// NOT_APPLICABLE for each named checker rather than aborting the report.
void guarded(std::vector<Verdict>& out, std::initializer_list<const char*> names,
             const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Overflow) throw;
    for (const char* n : names) out.push_back(not_applicable(n, "OVERFLOW: " + e.message()));
  }
}

Verdict divides_check(std::string checker, std::optional<std::uint64_t> part, std::optional<std::uint64_t> whole) {
  if (!whole) return not_applicable(std::move(checker), "automorphism is aperiodic");
  if (!part) return {std::move(checker), Outcome::Fail, 0, *whole, "restriction is aperiodic", "|"};
  return {std::move(checker), *whole % *part == 0 ? Outcome::Pass : Outcome::Fail, *part, *whole,
          "order divides ord(alpha)", "|"};
}

Json stats_json(const AutStats& s) {
  Json j;
  j["eig"] = s.eig;
  j["fix"] = s.fix;
  j["semisimple"] = s.semisimple;
  j["order"] = s.order ? Json(*s.order) : Json(nullptr);
  return j;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string stats_text(const AutStats& s) {
  std::ostringstream o;
  o << "eig " << s.eig << "  fix " << s.fix << "  order " << (s.order ? std::to_string(*s.order) : "aperiodic")
    << "  semisimple " << (s.semisimple ? "yes" : "no");
  return o.str();
}

template <class T>
std::string optional_text(const std::optional<T>& v) {
  return v ? std::to_string(*v) : "none";
}

}  // namespace

bool AnalysisReport::any_fail() const {
  return std::any_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.outcome == Outcome::Fail; });
}

AnalysisReport analyze(const Automorphism& a, const AnalysisOptions& options) {
  const LieAlgebra& l = a.algebra();
  AnalysisReport r;
  r.algebra_name = l.name();
  r.dim = l.dim();
  r.k_function = options.k_name;
  r.seed = options.seed;
  r.aut_stats = a.stats();
  if (!r.aut_stats.semisimple) throw Error(ErrorCode::NotSemisimpleAut, "minimal polynomial is not squarefree");

  Rng rng{options.seed};
  const Subspace rad = radical(l);
  if (rad.image(a.matrix()) != rad) throw Error(ErrorCode::InternalInconsistency, "radical is not invariant");
  r.radical_dim = rad.dim();
  r.restricted_stats = stats(restrict(a.matrix(), rad));
  const InducedQuotient iq = induced_quotient(a, rad);
  r.quotient_stats = iq.automorphism.stats();
  r.quotient_dim = iq.quotient.algebra.dim();
  r.radical_dl = derived_length(l, rad).value();
  r.derived_length = derived_length(l);
  r.nilpotency_class = nilpotency_class(l);

  const RefinedSeries refined = refine_series(l, a.matrix(), rad, options.k);
  r.refine_certificate = refined.certified_dl_bound;
  r.refine_line_steps = refined.line_steps;
  r.refine_terms = refined.series.terms.size();

  auto& v = r.verdicts;
  const std::uint64_t m = r.aut_stats.fix;
  const std::uint64_t n = r.aut_stats.eig;

  if (n == 0) {
    // Only the zero algebra gets here; none of the bounds take n = 0.
    for (const char* c : {"thm2.rank", "thm2.dl", "prop1.rank", "prop2.dl", "prop3.dl", "cor1.dl", "cor1.dim",
                          "cor1.dim_derived", "thm3.dim", "thm3.dl", "cor2.rank", "cor2.dl"}) {
      v.push_back(not_applicable(c, "zero algebra"));
    }
    return r;
  }

  Prop1Result p1;
  if (r.quotient_dim > 0) {
    p1 = check_prop1(iq.automorphism, rng);
    r.quotient_rank = p1.algebra_rank;
  }

  guarded(v, {"thm2.rank", "thm2.dl"}, [&] {
    auto [rank, dl] = thm2_check(m, n, r.quotient_rank, r.radical_dl, options.k);
    v.push_back(rank);
    v.push_back(dl);
  });

  if (r.quotient_dim > 0) {
    v.push_back(p1.rank);
    for (auto& d : p1.details) v.push_back(d);
  } else {
    v.push_back(not_applicable("prop1.rank", "quotient by the radical is zero"));
  }

  v.push_back(compare_le("prop2.dl", r.radical_dl, refined.certified_dl_bound, "dl(r) <= certified bound"));
  for (std::size_t j = 0; j < refined.segments.size(); ++j) {
    const auto& seg = refined.segments[j];
    if (seg.kind != SubnormalSeries::Step::FixedPointFree) continue;
    v.push_back(compare_le("prop2.segment[" + std::to_string(j) + "]", seg.derived_length, seg.contribution,
                           "segment dl <= K(eig)"));
  }
  v.push_back(compare_le("prop2.certificate", refined.certified_dl_bound, refined.stated_bound,
                         "certified <= (fix+1)*K(eig)+fix on r"));
  guarded(v, {"prop2.thm2"}, [&] {
    v.push_back(compare_le("prop2.thm2", refined.certified_dl_bound, dl_bound(m, n, options.k),
                           "certified <= (m+1)*K(n)+m"));
  });

  const auto& rs = r.restricted_stats;
  if (rs.order && rs.eig > 0) {
    guarded(v, {"prop3.dl"}, [&] {
      v.push_back(compare_le("prop3.dl", r.radical_dl, dl_bound(rs.fix, *rs.order, kreknin_k),
                             "dl(r) <= (fix+1)*k(ord)+fix on r"));
    });
  } else {
    v.push_back(not_applicable("prop3.dl", rs.eig == 0 ? "radical is zero" : "restriction is aperiodic"));
  }

  guarded(v, {"cor1.dl", "cor1.dim", "cor1.dim_derived"}, [&] {
    auto c = cor1_check(m, n, r.radical_dl, r.quotient_dim);
    r.dim_bound_paper = c.stated_bound;
    r.dim_bound_derived = c.derived_bound;
    r.bound_formulas_agree = c.formulas_agree;
    v.push_back(c.dl);
    v.push_back(c.dim);
    v.push_back(c.dim_derived);
  });

  if (r.aut_stats.order) {
    guarded(v, {"thm3.dim", "thm3.dl", "thm3.dl_kreknin"}, [&] {
      auto t = thm3_check(m, r.aut_stats.order, r.radical_dl, r.quotient_dim);
      v.push_back(t.dim);
      v.push_back(t.dl);
      v.push_back(t.dl_kreknin);
    });
  } else {
    v.push_back(not_applicable("thm3.dim", "automorphism is aperiodic"));
    v.push_back(not_applicable("thm3.dl", "automorphism is aperiodic"));
  }

  auto [c2rank, c2dl] = cor2_check(r.aut_stats.order, m, r.quotient_rank, r.radical_dl);
  v.push_back(c2rank);
  v.push_back(c2dl);

  const auto& qs = r.quotient_stats;
  v.push_back(compare_le("reduction.radical.eig", rs.eig, n, "eig(alpha|r) <= eig(alpha)"));
  v.push_back(compare_le("reduction.radical.fix", rs.fix, m, "fix(alpha|r) <= fix(alpha)"));
  v.push_back(divides_check("reduction.radical.order", rs.order, r.aut_stats.order));
  v.push_back(compare_le("reduction.quotient.eig", qs.eig, n, "eig(alpha on g/r) <= eig(alpha)"));
  v.push_back(compare_le("reduction.quotient.fix", qs.fix, m, "fix(alpha on g/r) <= fix(alpha)"));
  v.push_back(divides_check("reduction.quotient.order", qs.order, r.aut_stats.order));
  return r;
}

std::string to_json(const AnalysisReport& r) {
  Json j;
  j["algebra"] = r.algebra_name;
  j["dim"] = r.dim;
  j["radical_dim"] = r.radical_dim;
  j["radical_dl"] = r.radical_dl;
  j["quotient_dim"] = r.quotient_dim;
  j["quotient_rank"] = r.quotient_rank;
  j["derived_length"] = optional_json(r.derived_length);
  j["nilpotency_class"] = optional_json(r.nilpotency_class);
  j["aut_stats"] = stats_json(r.aut_stats);
  j["restricted_stats"] = stats_json(r.restricted_stats);
  j["quotient_stats"] = stats_json(r.quotient_stats);
  j["refine"] = Json{{"certified_dl_bound", r.refine_certificate},
                     {"line_steps", r.refine_line_steps},
                     {"terms", r.refine_terms}};
  j["dim_bounds"] = Json{{"stated", r.dim_bound_paper},
                         {"derived", r.dim_bound_derived},
                         {"agree", r.bound_formulas_agree}};
  j["k_function"] = r.k_function;
  j["seed"] = r.seed;
  Json verdicts = Json::object();
  for (const auto& v : r.verdicts) {
    Json e;
    e["outcome"] = std::string(to_string(v.outcome));
    if (v.outcome != Outcome::NotApplicable) {
      e["lhs"] = v.lhs;
      e["rhs"] = v.rhs;
      e["relation"] = v.relation;
    }
    e["note"] = v.note;
    verdicts[v.checker] = std::move(e);
  }
  j["verdicts"] = std::move(verdicts);
  j["status"] = r.any_fail() ? "FAIL" : "PASS";
  return detail::pretty_json(j);
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream o;
  auto row = [&](std::string_view key, const std::string& value) {
    o << key << std::string(20 - std::min<std::size_t>(19, key.size()), ' ') << value << '\n';
  };
  row("algebra", r.algebra_name.empty() ? "(unnamed)" : r.algebra_name);
  row("dim", std::to_string(r.dim));
  row("radical dim", std::to_string(r.radical_dim));
  row("radical dl", std::to_string(r.radical_dl));
  row("quotient dim", std::to_string(r.quotient_dim));
  row("quotient rank", std::to_string(r.quotient_rank));
  row("derived length", optional_text(r.derived_length));
  row("nilpotency class", optional_text(r.nilpotency_class));
  row("alpha", stats_text(r.aut_stats));
  row("alpha on radical", stats_text(r.restricted_stats));
  row("alpha on quotient", stats_text(r.quotient_stats));
  row("certified dl bound", std::to_string(r.refine_certificate) + "  (" + std::to_string(r.refine_line_steps) +
                                " line steps, " + std::to_string(r.refine_terms) + " terms)");
  row("dim bound", std::to_string(r.dim_bound_paper) + " stated, " + std::to_string(r.dim_bound_derived) +
                       " derived" + (r.bound_formulas_agree ? "" : " (differ)"));
  row("K", r.k_function);
  row("seed", std::to_string(r.seed));

  std::size_t width = 0;
  for (const auto& v : r.verdicts) width = std::max(width, v.checker.size());
  o << '\n';
  for (const auto& v : r.verdicts) {
    std::string cmp;
    if (v.outcome != Outcome::NotApplicable) cmp = std::to_string(v.lhs) + " " + v.relation + " " + std::to_string(v.rhs);
    std::string outcome(to_string(v.outcome));
    o << "  " << v.checker << std::string(width - v.checker.size() + 2, ' ') << outcome
      << std::string(16 - outcome.size(), ' ') << cmp << std::string(cmp.size() < 18 ? 18 - cmp.size() : 1, ' ')
      << v.note << '\n';
  }
  o << '\n' << (r.any_fail() ? "FAIL" : "PASS") << '\n';
  return o.str();
}

}  // namespace liebound
