#include <liebound/generators.hpp>

#include <liebound/error.hpp>
#include <liebound/linalg.hpp>

#include <algorithm>
#include <charconv>
#include <limits>

namespace liebound {
namespace {

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::InvalidParameter, "expected a count for " + std::string(what) + ", got '" +
                                                 std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Vector parse_scalars(std::string_view text) {
  Vector out;
  for (const auto& part : split(text, ',')) out.push_back(parse_scalar(part));
  return out;
}

void require_nonzero(const Vector& v, std::string_view what) {
  for (const auto& x : v) {
    if (x == 0) throw Error(ErrorCode::InvalidParameter, std::string(what) + ": entries must be nonzero");
  }
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

}  // namespace

LieAlgebra gen_abelian(std::size_t d) { return LieAlgebra(d, {}, "abelian" + std::to_string(d)); }

LieAlgebra gen_borel2() { return LieAlgebra(2, {{0, 1, 1, 1}}, "borel2"); }

LieAlgebra gen_heisenberg() { return LieAlgebra(3, {{0, 1, 2, 1}}, "heisenberg"); }

LieAlgebra gen_filiform(std::size_t d) {
  if (d < 3) throw Error(ErrorCode::InvalidParameter, "filiform needs dim >= 3");
  std::vector<StructureConstant> c;
  for (std::size_t i = 1; i + 1 < d; ++i) c.push_back({0, i, i + 1, 1});
  return LieAlgebra(d, c, "filiform" + std::to_string(d));
}

LieAlgebra gen_sl(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidParameter, "sl(n) needs n >= 2");
  const std::size_t off = n * (n - 1);
  const std::size_t dim = off + n - 1;

  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Matrix e(n, n);
      e(i, j) = 1;
      basis.push_back(std::move(e));
    }
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    Matrix h(n, n);
    h(k, k) = 1;
    h(k + 1, k + 1) = -1;
    basis.push_back(std::move(h));
  }

  // Off-diagonal entries read directly; the diagonal d gives H coefficients
  // c_k = d_1 + ... + d_k.
  auto coords = [&](const Matrix& m) {
    Vector v = zero_vector(dim);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) v[idx++] = m(i, j);
      }
    }
    Scalar run = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      run += m(k, k);
      v[off + k] = run;
    }
    return v;
  };

  std::vector<StructureConstant> c;
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = a + 1; b < dim; ++b) {
      Vector v = coords(basis[a] * basis[b] - basis[b] * basis[a]);
      for (std::size_t k = 0; k < dim; ++k) {
        if (v[k] != 0) c.push_back({a, b, k, v[k]});
      }
    }
  }
  return LieAlgebra(dim, c, "sl" + std::to_string(n));
}

Automorphism filiform_torus_aut(std::size_t d, const Scalar& a, const Scalar& b) {
  if (a == 0 || b == 0) throw Error(ErrorCode::InvalidParameter, "torus parameters must be nonzero");
  auto l = gen_filiform(d);
  Vector diag(d);
  diag[0] = a;
  Scalar s = b;
  for (std::size_t i = 1; i < d; ++i) {
    diag[i] = s;
    s *= a;
  }
  return validate_aut(l, Matrix::diagonal(diag));
}

Automorphism heisenberg_torus_aut(const Scalar& a, const Scalar& b) {
  if (a == 0 || b == 0) throw Error(ErrorCode::InvalidParameter, "torus parameters must be nonzero");
  return validate_aut(gen_heisenberg(), Matrix::diagonal({a, b, a * b}));
}

Automorphism sl_diag_aut(std::size_t n, const Vector& entries) {
  if (entries.size() != n) throw Error(ErrorCode::InvalidParameter, "conj needs exactly n entries");
  require_nonzero(entries, "conj");
  auto l = gen_sl(n);
  Vector diag;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) diag.push_back(entries[i] / entries[j]);
    }
  }
  for (std::size_t k = 0; k + 1 < n; ++k) diag.push_back(1);
  return validate_aut(l, Matrix::diagonal(diag));
}

Automorphism direct_sum_aut(const Automorphism& a, const Automorphism& b) {
  const std::size_t p = a.algebra().dim();
  const std::size_t q = b.algebra().dim();
  Matrix m(p + q, p + q);
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = 0; c < p; ++c) m(r, c) = a.matrix()(r, c);
  }
  for (std::size_t r = 0; r < q; ++r) {
    for (std::size_t c = 0; c < q; ++c) m(p + r, p + c) = b.matrix()(r, c);
  }
  return validate_aut(direct_sum(a.algebra(), b.algebra()), m);
}

CyclicSum gen_cyclic_sum(const LieAlgebra& base, std::size_t m, const std::optional<Matrix>& twist) {
  if (m == 0) throw Error(ErrorCode::InvalidParameter, "cyclic sum needs m >= 1");
  const std::size_t d = base.dim();
  Matrix tw = twist ? *twist : Matrix::identity(d);
  validate_aut(base, tw);

  LieAlgebra sum = base;
  for (std::size_t j = 1; j < m; ++j) sum = direct_sum(sum, base);
  sum = sum.renamed("cyclic(" + base.name() + "," + std::to_string(m) + ")");

  Matrix a(m * d, m * d);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    for (std::size_t t = 0; t < d; ++t) a((j + 1) * d + t, j * d + t) = 1;
  }
  const std::size_t last = (m - 1) * d;
  for (std::size_t t = 0; t < d; ++t) {
    for (std::size_t s = 0; s < d; ++s) a(s, last + t) = tw(s, t);
  }
  auto aut = validate_aut(sum, a);
  return CyclicSum{std::move(sum), std::move(aut)};
}

InvolutionSearch search_involutions(const LieAlgebra& l, std::size_t budget) {
  if (budget == 0) throw Error(ErrorCode::EmptyFamily, "budget is 0");
  const std::size_t d = l.dim();
  std::optional<InvolutionSearch> best;
  std::size_t examined = 0;

  auto consider = [&](const Vector& signs, std::string recipe) {
    ++examined;
    Matrix m = Matrix::diagonal(signs);
    std::optional<Automorphism> aut;
    try {
      aut = validate_aut(l, m);
    } catch (const Error&) {
      return;
    }
    if (!(m * m == Matrix::identity(d))) return;
    std::size_t f = fix_dim(m);
    if (!best || f < best->min_fix) best = InvolutionSearch{std::move(*aut), f, 0, std::move(recipe)};
  };

  // Torus family (a, b) in {-1, 1}^2, meaningful for graded algebras like the
  // filiform ones.
  if (d >= 1) {
    for (int a : {-1, 1}) {
      for (int b : {-1, 1}) {
        if (examined >= budget) break;
        Vector signs(d);
        signs[0] = a;
        Scalar s = b;
        for (std::size_t i = 1; i < d; ++i) {
          signs[i] = s;
          s *= a;
        }
        consider(signs, "torus:" + std::to_string(a) + "," + std::to_string(b));
      }
    }
  }

  // Diagonal sign matrices, most negative entries first.
  if (d < 63) {
    for (std::uint64_t mask = (std::uint64_t{1} << d); mask-- > 0 && examined < budget;) {
      Vector signs(d);
      std::string recipe = "diag:";
      for (std::size_t i = 0; i < d; ++i) {
        signs[i] = (mask >> i) & 1 ? -1 : 1;
        recipe += (i ? "," : "") + format_scalar(signs[i]);
      }
      consider(signs, recipe);
    }
  }

  if (!best) throw Error(ErrorCode::EmptyFamily, "no involution found within budget");
  best->examined = examined;
  return std::move(*best);
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Abelian: return "abelian";
    case Family::Borel2: return "borel2";
    case Family::Heisenberg: return "heisenberg";
    case Family::Filiform: return "filiform";
    case Family::Sl: return "sl";
    case Family::DirectSum: return "direct-sum";
    case Family::CyclicSum: return "cyclic-sum";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (auto f : {Family::Abelian, Family::Borel2, Family::Heisenberg, Family::Filiform, Family::Sl,
                 Family::DirectSum, Family::CyclicSum}) {
    if (to_string(f) == name) return f;
  }
  if (name == "direct_sum") return Family::DirectSum;
  if (name == "cyclic_sum") return Family::CyclicSum;
  throw Error(ErrorCode::InvalidParameter, "unknown family '" + std::string(name) + "'");
}

LieAlgebra algebra_by_name(std::string_view name) {
  if (name.find('+') != std::string_view::npos) {
    auto parts = split(name, '+');
    LieAlgebra sum = algebra_by_name(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) sum = direct_sum(sum, algebra_by_name(parts[i]));
    return sum;
  }
  if (name == "borel2") return gen_borel2();
  if (name == "heisenberg") return gen_heisenberg();
  if (starts_with(name, "abelian")) return gen_abelian(parse_count(name.substr(7), "abelian"));
  if (starts_with(name, "filiform")) return gen_filiform(parse_count(name.substr(8), "filiform"));
  if (starts_with(name, "sl")) return gen_sl(parse_count(name.substr(2), "sl"));
  throw Error(ErrorCode::InvalidParameter, "unknown algebra name '" + std::string(name) + "'");
}

Automorphism apply_recipe(const LieAlgebra& l, std::string_view name, std::string_view recipe) {
  if (recipe.find('|') != std::string_view::npos) {
    auto names = split(name, '+');
    auto recipes = split(recipe, '|');
    if (names.size() != recipes.size()) {
      throw Error(ErrorCode::InvalidParameter, "recipe has " + std::to_string(recipes.size()) + " parts for " +
                                                   std::to_string(names.size()) + " summands");
    }
    auto aut = apply_recipe(algebra_by_name(names[0]), names[0], recipes[0]);
    for (std::size_t i = 1; i < names.size(); ++i) {
      aut = direct_sum_aut(aut, apply_recipe(algebra_by_name(names[i]), names[i], recipes[i]));
    }
    return validate_aut(l, aut.matrix());
  }
  if (recipe == "identity") return validate_aut(l, Matrix::identity(l.dim()));
  auto colon = recipe.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::InvalidParameter, "unknown recipe '" + std::string(recipe) + "'");
  }
  auto kind = recipe.substr(0, colon);
  Vector args = parse_scalars(recipe.substr(colon + 1));
  if (kind == "diag") {
    if (args.size() != l.dim()) throw Error(ErrorCode::InvalidParameter, "diag needs one entry per basis vector");
    return validate_aut(l, Matrix::diagonal(args));
  }
  if (kind == "torus") {
    if (args.size() != 2) throw Error(ErrorCode::InvalidParameter, "torus needs two parameters a,b");
    if (name == "heisenberg") return validate_aut(l, heisenberg_torus_aut(args[0], args[1]).matrix());
    if (starts_with(name, "filiform")) {
      return validate_aut(l, filiform_torus_aut(l.dim(), args[0], args[1]).matrix());
    }
    throw Error(ErrorCode::InvalidParameter, "torus recipe applies to filiform and heisenberg only");
  }
  if (kind == "conj") {
    if (!starts_with(name, "sl")) throw Error(ErrorCode::InvalidParameter, "conj recipe applies to sl only");
    return validate_aut(l, sl_diag_aut(args.size(), args).matrix());
  }
  throw Error(ErrorCode::InvalidParameter, "unknown recipe '" + std::string(recipe) + "'");
}

Generated generate(const FamilySpec& spec) {
  const auto& p = spec.parameters;
  auto need = [&](std::size_t n) {
    if (p.size() != n) {
      throw Error(ErrorCode::InvalidParameter, std::string(to_string(spec.family)) + " takes " + std::to_string(n) +
                                                   " parameter(s), got " + std::to_string(p.size()));
    }
  };

  std::string name;
  switch (spec.family) {
    case Family::Abelian: need(1); name = "abelian" + std::to_string(parse_count(p[0], "abelian")); break;
    case Family::Borel2: need(0); name = "borel2"; break;
    case Family::Heisenberg: need(0); name = "heisenberg"; break;
    case Family::Filiform: need(1); name = "filiform" + std::to_string(parse_count(p[0], "filiform")); break;
    case Family::Sl: need(1); name = "sl" + std::to_string(parse_count(p[0], "sl")); break;
    case Family::DirectSum:
      if (p.size() < 2) throw Error(ErrorCode::InvalidParameter, "direct-sum needs at least two summands");
      for (const auto& s : p) name += (name.empty() ? "" : "+") + s;
      break;
    case Family::CyclicSum: {
      need(2);
      auto base = algebra_by_name(p[0]);
      std::size_t m = parse_count(p[1], "cyclic-sum");
      std::optional<Matrix> twist;
      if (spec.automorphism_recipe) twist = apply_recipe(base, p[0], *spec.automorphism_recipe).matrix();
      auto cs = gen_cyclic_sum(base, m, twist);
      return Generated{std::move(cs.algebra), std::move(cs.automorphism)};
    }
  }

  auto l = algebra_by_name(name);
  std::optional<Automorphism> aut;
  if (spec.automorphism_recipe) aut = apply_recipe(l, name, *spec.automorphism_recipe);
  return Generated{std::move(l), std::move(aut)};
}

std::vector<CorpusEntry> standard_corpus() {
  auto entry = [](std::string label, Family f, std::vector<std::string> params, std::string recipe) {
    return CorpusEntry{std::move(label), FamilySpec{f, std::move(params), std::move(recipe)}};
  };
  return {
      entry("abelian3 identity", Family::Abelian, {"3"}, "identity"),
      entry("borel2 x->x y->2y", Family::Borel2, {}, "diag:1,2"),
      entry("heisenberg torus(2,3)", Family::Heisenberg, {}, "torus:2,3"),
      entry("heisenberg torus(-1,-1)", Family::Heisenberg, {}, "torus:-1,-1"),
      entry("filiform4 torus(-1,-1)", Family::Filiform, {"4"}, "torus:-1,-1"),
      entry("filiform5 torus(2,3)", Family::Filiform, {"5"}, "torus:2,3"),
      entry("filiform6 torus(1,-1)", Family::Filiform, {"6"}, "torus:1,-1"),
      entry("sl2 identity", Family::Sl, {"2"}, "identity"),
      entry("sl2 conj(2,1/2)", Family::Sl, {"2"}, "conj:2,1/2"),
      entry("sl3 conj(1,2,4)", Family::Sl, {"3"}, "conj:1,2,4"),
      entry("sl3 conj(1,-1,1)", Family::Sl, {"3"}, "conj:1,-1,1"),
      entry("sl2+sl2 swap", Family::CyclicSum, {"sl2", "2"}, "identity"),
      entry("sl2+sl2 swap twisted", Family::CyclicSum, {"sl2", "2"}, "conj:2,1/2"),
      entry("sl2^3 cycle", Family::CyclicSum, {"sl2", "3"}, "identity"),
      entry("sl2+borel2 blocks", Family::DirectSum, {"sl2", "borel2"}, "identity|diag:1,2"),
      entry("sl2+heisenberg order 2", Family::DirectSum, {"sl2", "heisenberg"}, "conj:1,-1|torus:-1,1"),
      entry("abelian1^8 cycle", Family::CyclicSum, {"abelian1", "8"}, "identity"),
  };
}

}  // namespace liebound
