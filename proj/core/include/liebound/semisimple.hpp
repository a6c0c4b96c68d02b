#ifndef LIEBOUND_SEMISIMPLE_HPP
#define LIEBOUND_SEMISIMPLE_HPP

#include <liebound/automorphism.hpp>
#include <liebound/bounds.hpp>
#include <liebound/lie_algebra.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace liebound {

using Rng = std::mt19937_64;
inline constexpr std::uint64_t kDefaultSeed = 20240229;

/// Basis of {M : M ad(e_i) = ad(e_i) M for all i}.
std::vector<Matrix> adjoint_commutant(const LieAlgebra& l);

/// Rank of a semisimple algebra: the least nullity of ad(x) over `trials`
/// random integer points x with coordinates in [-20, 20].
///
/// Regular elements are Zariski-dense, so the minimum is the Cartan dimension
/// with high probability; it is never below it. Throws NotSemisimple.
std::size_t rank_ss(const LieAlgebra& l, Rng rng = Rng{kDefaultSeed}, std::size_t trials = 8);

/// Simple ideals of a semisimple algebra, ordered by lex_less.
///
/// A random element of the adjoint commutant acts as a distinct rational
/// scalar on each simple ideal (when the algebra is split); its eigenspaces
/// are the ideals. Each ideal is certified absolutely simple by a
/// one-dimensional commutant of its own adjoint representation.
/// Throws NotSemisimple, or SplittingFailed after `retries` unlucky draws or
/// when the algebra does not split over the rationals.
std::vector<Subspace> simple_ideals(const LieAlgebra& l, Rng rng = Rng{kDefaultSeed}, std::size_t retries = 6);

/// An orbit of simple ideals under an automorphism: a(orbit[k]) = orbit[k+1 mod m].
struct Block {
  Subspace subspace;            // sum of the orbit
  std::vector<Subspace> orbit;  // starts at the lex-least member
  std::size_t orbit_length = 0;
  std::size_t eig = 0;          // of a restricted to subspace
  std::size_t fix = 0;
};

std::vector<Block> orbit_blocks(const Automorphism& a, Rng rng = Rng{kDefaultSeed});
std::vector<Block> orbit_blocks(const Automorphism& a, const std::vector<Subspace>& ideals);

/// pi_0 a^m iota_0 on orbit[0], as an automorphism of that simple ideal.
/// Its fixed-space dimension equals that of a on the whole block (asserted).
Automorphism alpha_zero(const Block& b, const Automorphism& a);

/// rank(S) <= 2 fix(a) for a simple S. Throws PreconditionViolation when S is
/// not absolutely simple or a is not semisimple.
Verdict check_lemma1(const LieAlgebra& s, const Matrix& a, Rng rng = Rng{kDefaultSeed});

struct Prop1Result {
  Verdict rank;                  // rank <= 2 eig fix
  std::vector<Verdict> details;  // blockwise chain
  std::vector<Block> blocks;
  std::size_t algebra_rank = 0;
};

/// rank(L) <= 2 eig(a) fix(a) for semisimple L, re-derived block by block.
Prop1Result check_prop1(const Automorphism& a, Rng rng = Rng{kDefaultSeed});

/// 2k^2 + 2k + 112.
std::uint64_t f_of_k(std::uint64_t k);
/// Largest dimension of a simple complex Lie algebra of rank k.
std::uint64_t max_simple_dim(std::uint64_t k);
Verdict check_lemma2(std::uint64_t k);

}  // namespace liebound

#endif  // LIEBOUND_SEMISIMPLE_HPP
