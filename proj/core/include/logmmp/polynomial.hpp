#pragma once

#include <string>
#include <vector>

#include "logmmp/rational.hpp"

namespace logmmp {

/// Name of the indeterminate a univariate polynomial is written in.
enum class Var { m, alpha };

std::string to_string(Var v);

/// Dense univariate polynomial over Q. coeffs()[k] is the coefficient of x^k;
/// trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Poly {
 public:
  explicit Poly(Var var = Var::m) : var_(var) {}
  Poly(Var var, std::vector<Rat> coeffs);

  static Poly constant(Var var, const Rat& c) { return Poly(var, {c}); }
  /// The polynomial x in the given variable.
  static Poly identity(Var var) { return Poly(var, {Rat(0), Rat(1)}); }

  Var var() const { return var_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat coeff(int k) const;

  /// Horner evaluation.
  Rat operator()(const Rat& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator*(Poly lhs, const Rat& c) { return lhs *= c; }
  friend Poly operator*(const Rat& c, Poly rhs) { return rhs *= c; }
  friend Poly operator+(Poly lhs, const Rat& c) { return lhs += constant(lhs.var(), c); }
  friend Poly operator-(Poly lhs, const Rat& c) { return lhs -= constant(lhs.var(), c); }

  friend bool operator==(const Poly& lhs, const Poly& rhs) = default;

  std::string str() const;

 private:
  void trim();
  void require_same_var(const Poly& other) const;

  Var var_;
  std::vector<Rat> coeffs_;
};

Poly pow(const Poly& p, unsigned exponent);

/// The unique root of a degree-1 polynomial. Throws std::invalid_argument otherwise.
Rat linear_root(const Poly& p);

/// Quotient of two polynomials in the same variable. Never reduced; equality
/// is decided by cross-multiplication.
class RatFunc {
 public:
  /// Throws std::domain_error on a zero denominator and std::invalid_argument
  /// on mismatched variables.
  RatFunc(Poly numerator, Poly denominator);
  explicit RatFunc(Poly numerator);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  Var var() const { return num_.var(); }

  /// Throws std::domain_error at a pole of the stored denominator.
  Rat operator()(const Rat& x) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc lhs, const RatFunc& rhs) { return lhs += rhs; }
  friend RatFunc operator-(RatFunc lhs, const RatFunc& rhs) { return lhs -= rhs; }
  friend RatFunc operator*(RatFunc lhs, const RatFunc& rhs) { return lhs *= rhs; }

  std::string str() const;

 private:
  Poly num_;
  Poly den_;
};

/// f == g as rational functions: f.num * g.den - g.num * f.den is zero.
/// Throws std::invalid_argument when the variable tags differ.
bool ratfunc_equal(const RatFunc& f, const RatFunc& g);

/// Substitutes x = inner into p. The result lives in inner's variable.
RatFunc compose(const Poly& p, const RatFunc& inner);

}  // namespace logmmp
