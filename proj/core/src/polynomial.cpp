#include "logmmp/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace logmmp {

std::string to_string(Var v) { return v == Var::m ? "m" : "alpha"; }

Poly::Poly(Var var, std::vector<Rat> coeffs) : var_(var), coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::require_same_var(const Poly& other) const {
  if (var_ != other.var_) {
    throw std::invalid_argument("polynomials in different variables: " + to_string(var_) + " vs " +
                                to_string(other.var_));
  }
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same_var(rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) { return *this += -rhs; }

Poly& Poly::operator*=(const Poly& rhs) {
  require_same_var(rhs);
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Rat mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rat(1);
    if (k == 0 || !unit) os << (mag.is_integer() ? mag.str() : "(" + mag.str() + ")");
    if (k >= 1) os << (unit ? "" : "*") << to_string(var_);
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

Poly pow(const Poly& p, unsigned exponent) {
  Poly out = Poly::constant(p.var(), Rat(1));
  for (unsigned i = 0; i < exponent; ++i) out *= p;
  return out;
}

Rat linear_root(const Poly& p) {
  if (p.degree() != 1) throw std::invalid_argument("linear_root: polynomial " + p.str() + " is not linear");
  return -p.coeff(0) / p.coeff(1);
}

RatFunc::RatFunc(Poly numerator, Poly denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.var() != den_.var()) throw std::invalid_argument("RatFunc: numerator and denominator variables differ");
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
}

RatFunc::RatFunc(Poly numerator) : RatFunc(numerator, Poly::constant(numerator.var(), Rat(1))) {}

Rat RatFunc::operator()(const Rat& x) const {
  Rat d = den_(x);
  if (d.is_zero()) throw std::domain_error("RatFunc: pole at " + to_string(var()) + " = " + x.str());
  return num_(x) / d;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  return *this;
}

std::string RatFunc::str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

bool ratfunc_equal(const RatFunc& f, const RatFunc& g) {
  if (f.var() != g.var()) {
    throw std::invalid_argument("ratfunc_equal: variables differ (" + to_string(f.var()) + " vs " +
                                to_string(g.var()) + ")");
  }
  return (f.numerator() * g.denominator() - g.numerator() * f.denominator()).is_zero();
}

RatFunc compose(const Poly& p, const RatFunc& inner) {
  // sum_k c_k N^k D^(d-k) / D^d with d = deg p
  const Var v = inner.var();
  if (p.is_zero()) return RatFunc(Poly(v));
  const auto d = static_cast<unsigned>(p.degree());
  Poly num(v);
  for (unsigned k = 0; k <= d; ++k) {
    num += p.coeff(static_cast<int>(k)) * pow(inner.numerator(), k) * pow(inner.denominator(), d - k);
  }
  return RatFunc(num, pow(inner.denominator(), d));
}

}  // namespace logmmp
