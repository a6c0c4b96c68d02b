#ifndef LIEBOUND_POLY_HPP
#define LIEBOUND_POLY_HPP

#include <liebound/matrix.hpp>
#include <liebound/scalar.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace liebound {

/// Univariate polynomial over the rationals, coefficients in ascending degree.
/// The leading coefficient is nonzero; the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coefficients);

  static Poly constant(const Scalar& c);
  static Poly x();
  // x - root
  static Poly linear(const Scalar& root);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  Scalar coefficient(std::size_t k) const;
  const Scalar& leading() const;

  Poly monic() const;
  Poly derivative() const;

  Scalar evaluate(const Scalar& at) const;
  Matrix evaluate(const Matrix& at) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Scalar& s, const Poly& p);

// Euclidean division; throws ZeroPolynomial when dividing by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& p);

// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& p, const Poly& q);
// p / gcd(p, p'), monic. Its degree is the number of distinct complex roots.
Poly squarefree_part(const Poly& p);
bool is_squarefree(const Poly& p);

// Number of times (x - root) divides p (p nonzero).
std::size_t root_multiplicity(const Poly& p, const Scalar& root);

// Distinct rational roots of p, ascending. Candidates come from a numeric
// root approximation; each returned root is verified exactly by evaluation.
std::vector<Scalar> rational_roots(const Poly& p);

// d-th cyclotomic polynomial, d >= 1.
Poly cyclotomic(std::uint64_t d);

std::string to_string(const Poly& p);

}  // namespace liebound

#endif  // LIEBOUND_POLY_HPP
