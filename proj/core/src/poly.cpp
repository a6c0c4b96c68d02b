#include <liebound/error.hpp>
#include <liebound/poly.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

namespace liebound {

Poly::Poly(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::constant(const Scalar& c) { return Poly({c}); }
Poly Poly::x() { return Poly({Scalar(0), Scalar(1)}); }
Poly Poly::linear(const Scalar& root) { return Poly({-root, Scalar(1)}); }

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Scalar Poly::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }

const Scalar& Poly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero");
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Scalar lead = leading();
  std::vector<Scalar> c = coeffs_;
  for (auto& v : c) v /= lead;
  return Poly(std::move(c));
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Scalar> c(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return Poly(std::move(c));
}

Scalar Poly::evaluate(const Scalar& at) const {
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Matrix Poly::evaluate(const Matrix& at) const {
  if (!at.is_square()) throw Error(ErrorCode::NotSquare, "polynomial evaluated at a non-square matrix");
  const std::size_t n = at.rows();
  Matrix acc(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Scalar> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Scalar> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) - b.coefficient(k);
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  std::vector<Scalar> c(ca.size() + cb.size() - 1);
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < cb.size(); ++j) c[i + j] += ca[i] * cb[j];
  return Poly(std::move(c));
}

Poly operator*(const Scalar& s, const Poly& p) {
  std::vector<Scalar> c = p.coefficients();
  for (auto& v : c) v *= s;
  return Poly(std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Scalar> rem = a.coefficients();
  const auto& d = b.coefficients();
  const std::size_t db = d.size() - 1;
  std::vector<Scalar> quot(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    const Scalar q = rem[k] / d[db];
    quot[k - db] = q;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * d[j];
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

bool divides(const Poly& d, const Poly& p) { return divmod(p, d).second.is_zero(); }

Poly poly_gcd(const Poly& p, const Poly& q) {
  Poly a = p;
  Poly b = q;
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree part of the zero polynomial");
  return divmod(p, poly_gcd(p, p.derivative())).first.monic();
}

bool is_squarefree(const Poly& p) {
  if (p.is_zero()) return false;
  return poly_gcd(p, p.derivative()).degree() == 0;
}

std::size_t root_multiplicity(const Poly& p, const Scalar& root) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root multiplicity in the zero polynomial");
  std::size_t count = 0;
  Poly rest = p;
  const Poly factor = Poly::linear(root);
  for (;;) {
    auto [q, r] = divmod(rest, factor);
    if (!r.is_zero()) return count;
    rest = std::move(q);
    ++count;
  }
}

namespace {

// Durand-Kerner iteration on the monic polynomial with the given (finite)
// long double coefficients. Only used to propose candidates.
std::vector<std::complex<long double>> approximate_roots(const std::vector<long double>& monic) {
  using C = std::complex<long double>;
  const std::size_t n = monic.size() - 1;
  long double bound = 1;
  for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, 1 + std::fabs(monic[k]));
  std::vector<C> z(n);
  const C seed(0.4L, 0.9L);
  C w = 1;
  for (auto& zi : z) {
    zi = w * bound;
    w *= seed;
  }
  auto eval = [&](const C& at) {
    C acc = 1;
    for (std::size_t k = n; k-- > 0;) acc = acc * at + monic[k];
    return acc;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double delta = 0;
    for (std::size_t i = 0; i < n; ++i) {
      C denom = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (std::abs(denom) == 0) denom = 1e-30L;
      const C step = eval(z[i]) / denom;
      z[i] -= step;
      delta = std::max(delta, std::abs(step) / std::max<long double>(1, std::abs(z[i])));
    }
    if (delta < 1e-17L) break;
  }
  return z;
}

}  // namespace

std::vector<Scalar> rational_roots(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<Scalar> roots;
  Poly rest = squarefree_part(p);
  if (sgn(rest.coefficient(0)) == 0) {
    roots.emplace_back(0);
    rest = divmod(rest, Poly::x()).first;
  }
  while (rest.degree() > 0) {
    std::vector<Scalar> found;
    if (rest.degree() == 1) {
      found.push_back(-rest.coefficient(0) / rest.coefficient(1));
    } else {
      // Any rational root r of the primitive integer form has lead * r integral.
      Integer lead = 1;
      for (const auto& c : rest.coefficients()) mpz_lcm(lead.get_mpz_t(), lead.get_mpz_t(), c.get_den_mpz_t());
      const Integer lead_coeff = Integer(rest.leading() * lead);
      std::vector<long double> monic(rest.coefficients().size());
      for (std::size_t k = 0; k < monic.size(); ++k) monic[k] = Scalar(rest.coefficient(k) / rest.leading()).get_d();
      for (const auto& z : approximate_roots(monic)) {
        const long double scaled = z.real() * lead_coeff.get_d();
        if (!std::isfinite(scaled)) continue;
        const long double centre = std::round(scaled);
        for (long double offset : {0.0L, -1.0L, 1.0L}) {
          Integer num;
          mpz_set_d(num.get_mpz_t(), static_cast<double>(centre + offset));
          Scalar candidate(num, lead_coeff);
          candidate.canonicalize();
          if (sgn(rest.evaluate(candidate)) == 0 &&
              std::find(found.begin(), found.end(), candidate) == found.end()) {
            found.push_back(candidate);
            break;
          }
        }
      }
    }
    if (found.empty()) break;
    for (const auto& r : found) {
      roots.push_back(r);
      rest = divmod(rest, Poly::linear(r)).first;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Poly cyclotomic(std::uint64_t d) {
  if (d == 0) throw Error(ErrorCode::InvalidParameter, "cyclotomic index must be positive");
  static thread_local std::map<std::uint64_t, Poly> cache;
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  std::vector<Scalar> c(d + 1);
  c[0] = -1;
  c[d] = 1;
  Poly result(std::move(c));
  for (std::uint64_t e = 1; e < d; ++e)
    if (d % e == 0) result = divmod(result, cyclotomic(e)).first;
  cache.emplace(d, result);
  return result;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (sgn(c[k]) == 0) continue;
    Scalar mag = abs(c[k]);
    if (out.empty()) {
      if (sgn(c[k]) < 0) out += "-";
    } else {
      out += sgn(c[k]) < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (k == 0 || !unit) out += format_scalar(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace liebound
