#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tpcells {

using Rational = mpq_class;
using Integer = mpz_class;
using Exponent = std::vector<int>;

/// Graded lexicographic order on exponent vectors.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Multivariate Laurent polynomial with arbitrary-precision integer
/// coefficients. Terms are kept in grlex order with no zero coefficients.
///
/// A constant of arity 0 acts as a scalar in any arity, so that `0` and `1`
/// work as ring identities for generic matrix code.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Integer, GrlexLess>;

  LaurentPoly() = default;
  LaurentPoly(int constant);  // NOLINT: implicit scalar promotion
  LaurentPoly(const Integer& constant);  // NOLINT
  explicit LaurentPoly(std::size_t arity) : arity_(arity) {}

  static LaurentPoly constant(std::size_t arity, const Integer& c);
  static LaurentPoly variable(std::size_t arity, std::size_t index);
  static LaurentPoly monomial(const Exponent& exp, const Integer& coeff);

  std::size_t arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Single term.
  bool is_monomial() const { return terms_.size() == 1; }
  std::optional<Integer> constant_value() const;

  /// Grlex-largest term.
  const std::pair<const Exponent, Integer>& leading_term() const;
  int sign_of_leading() const;

  /// Content: gcd of all coefficients (0 for the zero polynomial).
  Integer content() const;
  /// Componentwise minimum exponent over all terms.
  Exponent min_exponent() const;

  /// All stored coefficients strictly positive (zero polynomial included).
  bool has_nonnegative_coeffs() const;

  void add_term(const Exponent& exp, const Integer& coeff);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly pow(unsigned k) const;
  /// Multiply by x^shift.
  LaurentPoly shifted(const Exponent& shift) const;
  /// Divide every coefficient by d (must divide exactly).
  LaurentPoly divided_by(const Integer& d) const;
  /// Re-express with a different arity; variables map old index -> new
  /// index.
  LaurentPoly remapped(std::size_t new_arity,
                       const std::vector<std::size_t>& index_map) const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Exact quotient a / b in the Laurent ring if b divides a, else nullopt.
  static std::optional<LaurentPoly> exact_divide(const LaurentPoly& a,
                                                 const LaurentPoly& b);

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void promote(std::size_t arity);
  void check_arity(const LaurentPoly& other);

  std::size_t arity_ = 0;
  TermMap terms_;
};

/// Multivariate polynomial gcd over Z (up to sign), for Laurent inputs the
/// monomial part is ignored; the result is a polynomial with positive
/// leading coefficient.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Quotient of Laurent polynomials, normalised so that the denominator is a
/// polynomial not divisible by any variable, the pair is coprime and the
/// denominator has positive grlex-leading coefficient.
class RationalFn {
 public:
  RationalFn() : num_(0), den_(1) {}
  RationalFn(int c) : num_(c), den_(1) {}  // NOLINT
  RationalFn(LaurentPoly num);  // NOLINT
  RationalFn(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  std::size_t arity() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFn operator-() const { return RationalFn(-num_, den_); }
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
  friend bool operator==(const RationalFn& a, const RationalFn& b);

  /// Both numerator and denominator have nonnegative coefficients.
  bool subtraction_free() const;

  Rational evaluate(std::span<const Rational> point) const;
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

/// Substitute variable k of p by values[k]; the values share one arity.
RationalFn substitute(const LaurentPoly& p, std::span<const RationalFn> values);
RationalFn substitute(const RationalFn& f, std::span<const RationalFn> values);

/// Exponent set of a list of polynomials together with the coefficient table.
struct ExponentTable {
  std::size_t arity = 0;
  std::vector<Exponent> exponents;        // grlex sorted, distinct
  std::vector<std::vector<Integer>> table;  // [poly][exponent]
};
ExponentTable exponent_vectors(std::span<const LaurentPoly> polys);

}  // namespace tpcells
