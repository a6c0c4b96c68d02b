// liebound: command-line front end.
//
//   liebound validate FILE...
//   liebound analyze FILE... [--format text|json] [--seed N] [--k-function shalev|kreknin]
//   liebound gen FAMILY [PARAM...] [--aut RECIPE] [-o PREFIX]
//   liebound check [--budget N]
//   liebound table [K_MAX]
//
// Exit status: 0 ok, 1 validation failure, 2 parse error, 3 a bound check
// returned FAIL.

#include <liebound/analysis.hpp>
#include <liebound/error.hpp>
#include <liebound/generators.hpp>
#include <liebound/io.hpp>
#include <liebound/semisimple.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>

namespace {

using namespace liebound;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kParse = 2;
constexpr int kFalsified = 3;

struct RunConfig {
  std::vector<std::string> inputs;
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::string k_function = "shalev";
  std::size_t budget = 256;
};

int exit_code_for(const Error& e) { return e.code() == ErrorCode::ParseError ? kParse : kInvalid; }

// FNV-1a, so that every input file gets its own reproducible stream.
std::uint64_t path_hash(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

AnalysisOptions options_for(const RunConfig& cfg, std::string_view path) {
  AnalysisOptions opt;
  if (cfg.k_function == "kreknin" || cfg.k_function == "kreknin_small") {
    opt.k = kreknin_k;
    opt.k_name = "kreknin";
  }
  opt.seed = path.empty() ? cfg.seed : cfg.seed ^ path_hash(path);
  return opt;
}

// Algebra-only inputs can be referenced by name from automorphism files.
struct Loaded {
  std::string path;
  InputFile file;
};

std::vector<Loaded> load_all(const std::vector<std::string>& paths, int& status) {
  std::map<std::string, LieAlgebra, std::less<>> named;
  AlgebraResolver resolve = [&](std::string_view name) -> std::optional<LieAlgebra> {
    if (auto it = named.find(name); it != named.end()) return it->second;
    return std::nullopt;
  };
  // Two passes so that the order of files on the command line does not matter.
  for (const auto& p : paths) {
    try {
      auto text = read_text_file(p);
      if (text.find("\"matrix\"") != std::string::npos) continue;
      auto f = parse_input(text);
      if (!f.automorphism && !f.algebra.name().empty()) named.emplace(f.algebra.name(), f.algebra);
    } catch (const Error&) {
      // reported on the second pass
    }
  }
  std::vector<Loaded> out;
  for (const auto& p : paths) {
    try {
      out.push_back({p, read_input(p, resolve)});
    } catch (const Error& e) {
      std::cerr << e.what() << '\n';
      status = std::max(status, exit_code_for(e));
    }
  }
  return out;
}

std::string one_based_triple(const JacobiViolation& v) {
  return "(" + std::to_string(v.i + 1) + ", " + std::to_string(v.j + 1) + ", " + std::to_string(v.k + 1) + ")";
}

std::string vector_text(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_scalar(v[i]);
  return s + "]";
}

int cmd_validate(const RunConfig& cfg) {
  int status = kOk;
  auto loaded = load_all(cfg.inputs, status);
  nlohmann::ordered_json report = nlohmann::ordered_json::array();
  for (const auto& [path, file] : loaded) {
    nlohmann::ordered_json entry{{"path", path}, {"algebra", file.algebra.name()}, {"dim", file.algebra.dim()}};
    std::vector<std::string> problems;
    auto violations = validate(file.algebra);
    for (const auto& v : violations) {
      problems.push_back("Jacobi identity fails for " + one_based_triple(v) + ": residual " + vector_text(v.residual));
    }
    if (file.automorphism && violations.empty()) {
      try {
        validate_aut(file.algebra, *file.automorphism);
      } catch (const Error& e) {
        problems.push_back(e.what());
      }
    }
    entry["automorphism"] = file.automorphism.has_value();
    entry["status"] = problems.empty() ? "ok" : "invalid";
    entry["problems"] = problems;
    report.push_back(entry);
    if (!problems.empty()) status = std::max(status, kInvalid);

    if (cfg.format == "text") {
      std::cout << path << ": " << (problems.empty() ? "ok" : "invalid") << " (" << file.algebra.dim() << "-dim"
                << (file.algebra.name().empty() ? "" : " " + file.algebra.name())
                << (file.automorphism ? ", with automorphism" : "") << ")\n";
      for (const auto& p : problems) std::cout << "  " << p << '\n';
    }
  }
  if (cfg.format == "json") std::cout << report.dump(2) << '\n';
  return status;
}

int cmd_analyze(const RunConfig& cfg) {
  int status = kOk;
  auto loaded = load_all(cfg.inputs, status);
  std::size_t analyzed = 0;
  for (const auto& [path, file] : loaded) {
    if (!file.automorphism) continue;
    ++analyzed;
    try {
      if (auto v = validate(file.algebra); !v.empty()) {
        throw Error(ErrorCode::InvalidParameter, "Jacobi identity fails for " + one_based_triple(v.front()));
      }
      auto aut = validate_aut(file.algebra, *file.automorphism);
      auto report = analyze(aut, options_for(cfg, path));
      if (cfg.inputs.size() > 1 && cfg.format == "text") std::cout << "== " << path << '\n';
      std::cout << (cfg.format == "json" ? to_json(report) : to_text(report));
      if (report.any_fail()) status = std::max(status, kFalsified);
    } catch (const Error& e) {
      std::cerr << path << ": " << e.what() << '\n';
      status = std::max(status, exit_code_for(e));
    }
  }
  if (analyzed == 0 && status == kOk) {
    std::cerr << "no automorphism among the inputs\n";
    return kInvalid;
  }
  return status;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidParameter, "cannot write " + path);
  out << text;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params, const std::string& recipe,
            const std::string& prefix) {
  FamilySpec spec{parse_family(family), params, std::nullopt};
  if (!recipe.empty()) spec.automorphism_recipe = recipe;
  auto g = generate(spec);
  if (prefix.empty()) {
    std::cout << (g.automorphism ? write_automorphism(*g.automorphism) : write_algebra(g.algebra));
    return kOk;
  }
  write_file(prefix + ".algebra.json", write_algebra(g.algebra));
  std::cout << prefix << ".algebra.json\n";
  if (g.automorphism) {
    write_file(prefix + ".aut.json", write_automorphism(*g.automorphism));
    std::cout << prefix << ".aut.json\n";
  }
  return kOk;
}

int cmd_check(const RunConfig& cfg) {
  int status = kOk;
  std::cout << "corpus\n";
  for (const auto& entry : standard_corpus()) {
    auto g = generate(entry.spec);
    auto report = analyze(*g.automorphism, options_for(cfg, entry.label));
    std::size_t pass = 0, fail = 0, na = 0;
    for (const auto& v : report.verdicts) {
      (v.outcome == Outcome::Pass ? pass : v.outcome == Outcome::Fail ? fail : na)++;
    }
    std::cout << "  " << entry.label << std::string(entry.label.size() < 26 ? 26 - entry.label.size() : 1, ' ')
              << (fail ? "FAIL" : "PASS") << "  " << pass << " pass, " << fail << " fail, " << na
              << " not applicable\n";
    for (const auto& v : report.verdicts) {
      if (v.outcome == Outcome::Fail) std::cout << "    " << v.checker << ": " << v.lhs << " > " << v.rhs << '\n';
    }
    if (fail) status = kFalsified;
  }
  std::cout << "\nfiliform involutions (budget " << cfg.budget << ")\n";
  for (std::size_t d = 3; d <= 8; ++d) {
    auto l = gen_filiform(d);
    auto best = search_involutions(l, cfg.budget);
    std::cout << "  d=" << d << "  class " << nilpotency_class(l).value_or(0) << "  min fix " << best.min_fix
              << "  via " << best.recipe << '\n';
  }
  return status;
}

int cmd_table(std::uint64_t k_max) {
  if (k_max == 0) throw Error(ErrorCode::InvalidParameter, "k_max must be >= 1");
  bool ok = true;
  std::cout << "   k    f(k)  max dim  verdict\n";
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    auto v = check_lemma2(k);
    ok = ok && v.outcome == Outcome::Pass;
    std::string fk = std::to_string(v.rhs), md = std::to_string(v.lhs), ks = std::to_string(k);
    std::cout << std::string(4 - std::min<std::size_t>(3, ks.size()), ' ') << ks
              << std::string(8 - std::min<std::size_t>(7, fk.size()), ' ') << fk
              << std::string(9 - std::min<std::size_t>(8, md.size()), ' ') << md << "  " << to_string(v.outcome)
              << '\n';
  }
  return ok ? kOk : kFalsified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of derived-length and rank bounds for Lie algebras with automorphisms"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "Seed for randomized rank and splitting");
  app.add_option("--k-function", cfg.k_function, "K(n) used inside certified bounds")
      ->check(CLI::IsMember({"shalev", "kreknin", "shalev_2pow", "kreknin_small"}));
  app.add_option("--budget", cfg.budget, "Candidates examined by the involution search");

  auto* validate_cmd = app.add_subcommand("validate", "Check the Jacobi identity and automorphism property");
  validate_cmd->add_option("files", cfg.inputs, "Algebra or automorphism JSON files")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Run every bound checker on algebra + automorphism files");
  analyze_cmd->add_option("files", cfg.inputs, "Automorphism files, plus algebra files they refer to")->required();

  std::string family, recipe, prefix;
  std::vector<std::string> params;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated algebra (and automorphism) as JSON");
  gen_cmd->add_option("family", family, "abelian, borel2, heisenberg, filiform, sl, direct-sum, cyclic-sum")
      ->required();
  gen_cmd->add_option("params", params, "Family parameters");
  gen_cmd->add_option("--aut", recipe, "Automorphism recipe, e.g. torus:-1,-1 or conj:2,1/2");
  gen_cmd->add_option("-o,--output", prefix, "Write PREFIX.algebra.json and PREFIX.aut.json");

  auto* check_cmd = app.add_subcommand("check", "Analyze the built-in corpus");

  std::uint64_t k_max = 8;
  auto* table_cmd = app.add_subcommand("table", "Simple-algebra dimension table against f(k)");
  table_cmd->add_option("k_max", k_max, "Largest rank")->default_val(8);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  try {
    if (*validate_cmd) return cmd_validate(cfg);
    if (*analyze_cmd) return cmd_analyze(cfg);
    if (*gen_cmd) return cmd_gen(family, params, recipe, prefix);
    if (*check_cmd) return cmd_check(cfg);
    if (*table_cmd) return cmd_table(k_max);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code_for(e);
  }
  return kOk;
}
