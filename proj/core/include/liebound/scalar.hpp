#ifndef LIEBOUND_SCALAR_HPP
#define LIEBOUND_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace liebound {

// Exact rational. GMP keeps every arithmetic result in lowest terms with a
// positive denominator, so 0 is always 0/1.
using Scalar = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Scalar>;

// Parses "p" or "p/q" (optional leading '-', base 10, q != 0). The result is
// canonicalized; "2/4" parses to 1/2. Throws Error(ParseError) otherwise.
Scalar parse_scalar(std::string_view text);

// Canonical "p/q", or "p" when q = 1.
std::string format_scalar(const Scalar& value);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t index);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);

// a <- a + s * b
void add_scaled(Vector& a, const Scalar& s, const Vector& b);

// Lexicographic order on entries, used for deterministic tie-breaking.
bool lex_less(const Vector& a, const Vector& b);

}  // namespace liebound

#endif  // LIEBOUND_SCALAR_HPP
