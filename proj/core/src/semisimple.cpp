#include <liebound/error.hpp>
#include <liebound/linalg.hpp>
#include <liebound/semisimple.hpp>

#include <algorithm>

namespace liebound {

namespace {

Scalar random_coordinate(Rng& rng) { return Scalar(static_cast<long>(rng() % 41) - 20); }

void require_semisimple(const LieAlgebra& l, const char* what) {
  if (!radical(l).is_zero()) throw Error(ErrorCode::NotSemisimple, std::string(what) + " needs radical 0");
}

Matrix unvec(const Vector& v, std::size_t n) { return Matrix(n, n, v); }

std::uint64_t trailing_zero_coefficients(const Poly& p) {
  std::uint64_t k = 0;
  while (k < p.coefficients().size() && sgn(p.coefficients()[k]) == 0) ++k;
  return k;
}

std::size_t rank_unchecked(const LieAlgebra& l, Rng& rng, std::size_t trials) {
  const std::size_t n = l.dim();
  if (n == 0) return 0;
  std::uint64_t best = n;
  for (std::size_t t = 0; t < trials; ++t) {
    Vector x(n);
    for (auto& xi : x) xi = random_coordinate(rng);
    best = std::min(best, trailing_zero_coefficients(char_poly(l.ad(x))));
  }
  return static_cast<std::size_t>(best);
}

}  // namespace

std::vector<Matrix> adjoint_commutant(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Matrix> basis;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Matrix e(n, n);
      e(r, c) = 1;
      basis.push_back(std::move(e));
    }
  // Cut the solution space down one generator at a time; the systems shrink
  // as fast as the space does.
  for (std::size_t i = 0; i < n && !basis.empty(); ++i) {
    const Matrix x = l.ad_basis(i);
    if (x.is_zero()) continue;
    std::vector<Vector> residuals;
    residuals.reserve(basis.size());
    for (const auto& m : basis) residuals.push_back((m * x - x * m).entries());
    const Subspace coeffs = kernel(Matrix::from_columns(residuals, n * n));
    std::vector<Vector> next;
    for (const auto& cv : coeffs.basis_vectors()) {
      Vector v(n * n);
      for (std::size_t t = 0; t < basis.size(); ++t) add_scaled(v, cv[t], basis[t].entries());
      next.push_back(std::move(v));
    }
    const Subspace canonical = Subspace::span(n * n, next);
    basis.clear();
    for (const auto& v : canonical.basis_vectors()) basis.push_back(unvec(v, n));
  }
  return basis;
}

std::size_t rank_ss(const LieAlgebra& l, Rng rng, std::size_t trials) {
  require_semisimple(l, "rank_ss");
  return rank_unchecked(l, rng, trials);
}

std::vector<Subspace> simple_ideals(const LieAlgebra& l, Rng rng, std::size_t retries) {
  require_semisimple(l, "simple_ideals");
  const std::size_t n = l.dim();
  if (n == 0) return {};
  const std::vector<Matrix> commutant = adjoint_commutant(l);
  if (commutant.size() == 1) return {Subspace::full(n)};

  for (std::size_t attempt = 0; attempt < retries; ++attempt) {
    Matrix c(n, n);
    for (const auto& m : commutant) c = c + random_coordinate(rng) * m;
    const Poly p = min_poly(c);
    const std::vector<Scalar> roots = rational_roots(p);
    if (static_cast<int>(roots.size()) != p.degree()) continue;

    std::vector<Subspace> ideals;
    std::size_t total = 0;
    bool ok = true;
    for (const auto& lambda : roots) {
      Subspace eigenspace = kernel(c - lambda * Matrix::identity(n));
      total += eigenspace.dim();
      if (!is_ideal(l, eigenspace) || adjoint_commutant(subalgebra(l, eigenspace)).size() != 1) {
        ok = false;
        break;
      }
      ideals.push_back(std::move(eigenspace));
    }
    if (!ok || total != n) continue;
    std::sort(ideals.begin(), ideals.end(), [](const Subspace& a, const Subspace& b) { return lex_less(a, b); });
    return ideals;
  }
  throw Error(ErrorCode::SplittingFailed,
              "no rational splitting into absolutely simple ideals after " + std::to_string(retries) + " draws");
}

std::vector<Block> orbit_blocks(const Automorphism& a, Rng rng) {
  return orbit_blocks(a, simple_ideals(a.algebra(), rng));
}

std::vector<Block> orbit_blocks(const Automorphism& a, const std::vector<Subspace>& ideals) {
  const std::size_t count = ideals.size();
  std::vector<std::size_t> next(count);
  for (std::size_t t = 0; t < count; ++t) {
    const Subspace image = ideals[t].image(a.matrix());
    const auto it = std::find(ideals.begin(), ideals.end(), image);
    if (it == ideals.end())
      throw Error(ErrorCode::IdealNotPermuted, "image of a simple ideal is not a simple ideal");
    next[t] = static_cast<std::size_t>(it - ideals.begin());
  }
  std::vector<Block> blocks;
  std::vector<bool> seen(count, false);
  for (std::size_t t = 0; t < count; ++t) {
    if (seen[t]) continue;
    Block b;
    b.subspace = Subspace::zero(a.algebra().dim());
    for (std::size_t u = t; !seen[u]; u = next[u]) {
      seen[u] = true;
      b.orbit.push_back(ideals[u]);
      b.subspace = subspace_sum(b.subspace, ideals[u]);
    }
    b.orbit_length = b.orbit.size();
    const Matrix r = restrict(a.matrix(), b.subspace);
    b.eig = eig_count(r);
    b.fix = fix_dim(r);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

Automorphism alpha_zero(const Block& b, const Automorphism& a) {
  const std::size_t m = b.orbit_length;
  if (m == 0 || b.orbit.size() != m) throw Error(ErrorCode::PreconditionViolation, "empty or malformed block");
  for (std::size_t k = 0; k < m; ++k)
    if (b.orbit[k].image(a.matrix()) != b.orbit[(k + 1) % m])
      throw Error(ErrorCode::PreconditionViolation, "block orbit is not cyclically permuted by the automorphism");
  const Matrix composite = restrict(power(a.matrix(), m), b.orbit[0]);
  Automorphism a0 = validate_aut(subalgebra(a.algebra(), b.orbit[0]), composite);
  if (fix_dim(composite) != fix_dim(restrict(a.matrix(), b.subspace)))
    throw Error(ErrorCode::InternalInconsistency, "fix(alpha_0) differs from fix on the block");
  return a0;
}

Verdict check_lemma1(const LieAlgebra& s, const Matrix& a, Rng rng) {
  if (!a.is_square() || a.rows() != s.dim())
    throw Error(ErrorCode::DimensionMismatch, "lemma1: matrix does not act on the algebra");
  if (!radical(s).is_zero() || adjoint_commutant(s).size() != 1)
    throw Error(ErrorCode::PreconditionViolation, "lemma1 needs an absolutely simple algebra");
  if (!is_squarefree(min_poly(a)))
    throw Error(ErrorCode::PreconditionViolation, "lemma1 needs a semisimple automorphism");
  return compare_le("lemma1", rank_unchecked(s, rng, 8), 2 * fix_dim(a), "rank(s) <= 2*fix");
}

Prop1Result check_prop1(const Automorphism& a, Rng rng) {
  const LieAlgebra& l = a.algebra();
  const AutStats st = a.stats();
  if (!st.semisimple) throw Error(ErrorCode::PreconditionViolation, "prop1 needs a semisimple automorphism");
  Prop1Result out;
  out.algebra_rank = rank_ss(l, rng);
  out.blocks = orbit_blocks(a, simple_ideals(l, rng));
  out.rank = compare_le("prop1.rank", out.algebra_rank, 2 * st.eig * st.fix, "rank(s) <= 2*eig*fix");

  std::uint64_t block_sum = 0;
  std::size_t rank_sum = 0;
  std::size_t fix_sum = 0;
  for (std::size_t j = 0; j < out.blocks.size(); ++j) {
    const Block& b = out.blocks[j];
    const std::string tag = "prop1.block[" + std::to_string(j) + "].";
    const LieAlgebra s0 = subalgebra(l, b.orbit[0]);
    const Automorphism a0 = alpha_zero(b, a);
    const std::size_t r0 = rank_unchecked(s0, rng, 8);
    const std::size_t fix0 = fix_dim(a0.matrix());
    out.details.push_back(compare_le(tag + "orbit_length", b.orbit_length, b.eig, "m <= eig(alpha_j)"));
    Verdict lemma = check_lemma1(s0, a0.matrix(), rng);
    lemma.checker = tag + "lemma1";
    lemma.note = "rank(s_0) <= 2*fix(alpha_0)";
    out.details.push_back(std::move(lemma));
    out.details.push_back(compare_le(tag + "rank", b.orbit_length * r0, 2 * b.eig * fix0,
                                     "m*rank(s_0) <= 2*eig(alpha_j)*fix(alpha_0)"));
    block_sum += 2 * b.eig * b.fix;
    rank_sum += b.orbit_length * r0;
    fix_sum += b.fix;
  }
  if (rank_sum != out.algebra_rank)
    throw Error(ErrorCode::InternalInconsistency, "rank is not additive over the orbit blocks");
  if (fix_sum != st.fix)
    throw Error(ErrorCode::InternalInconsistency, "fixed-space dimension is not additive over the orbit blocks");
  out.details.push_back(compare_le("prop1.rank_vs_blocks", out.algebra_rank, block_sum,
                                   "rank(s) <= sum_j 2*eig(alpha_j)*fix(alpha_j)"));
  out.details.push_back(compare_le("prop1.block_sum", block_sum, 2 * st.eig * st.fix,
                                   "sum_j 2*eig(alpha_j)*fix(alpha_j) <= 2*eig*fix"));
  return out;
}

std::uint64_t f_of_k(std::uint64_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidParameter, "f(k) needs k >= 1");
  return 2 * k * k + 2 * k + 112;
}

std::uint64_t max_simple_dim(std::uint64_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidParameter, "rank must be >= 1");
  // A_k, B_k / C_k, D_k
  std::uint64_t best = std::max({k * k + 2 * k, 2 * k * k + k, 2 * k * k - k});
  switch (k) {
    case 2: best = std::max<std::uint64_t>(best, 14); break;   // G2
    case 4: best = std::max<std::uint64_t>(best, 52); break;   // F4
    case 6: best = std::max<std::uint64_t>(best, 78); break;   // E6
    case 7: best = std::max<std::uint64_t>(best, 133); break;  // E7
    case 8: best = std::max<std::uint64_t>(best, 248); break;  // E8
    default: break;
  }
  return best;
}

Verdict check_lemma2(std::uint64_t k) {
  return compare_le("lemma2[" + std::to_string(k) + "]", max_simple_dim(k), f_of_k(k), "max dim(s) <= f(rank)");
}

}  // namespace liebound
