#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "belyi/dessin.hpp"

namespace belyi {

class RatFuncError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Dense polynomial over Z, coefficients from degree 0 upwards, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<mpz_class> coeffs);
  static Poly constant(const mpz_class& c);
  static Poly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& operator[](int i) const { return c_[i]; }
  const mpz_class& lead() const { return c_.back(); }

  mpz_class content() const;  // nonnegative gcd of the coefficients
  // Divided by its content, leading coefficient made positive.
  Poly primitive() const;
  Poly derivative() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const mpz_class& s, const Poly& a);
  Poly pow(int e) const;
  bool operator==(const Poly&) const = default;

  std::string str() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// b must divide a exactly over Q and be primitive, so the quotient is integral.
Poly divexact(const Poly& a, const Poly& b);
// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// Pairs (factor, multiplicity) with pairwise coprime squarefree primitive
// factors; the product of factor^multiplicity equals the primitive part of p.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

// num/den with gcd 1, positive leading coefficient in den, and coprime contents.
class RatFunc {
 public:
  RatFunc();  // the zero function
  RatFunc(Poly num, Poly den);
  static RatFunc constant(const mpq_class& c);
  static RatFunc x();

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  int degree() const;
  bool is_constant() const { return degree() == 0; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc pow(int e) const;
  bool operator==(const RatFunc&) const = default;

  // Constant factor times squarefree factors, e.g. "-2/27 * x * (2x^2 - 20x + 45)^2 / (5x - 32)".
  std::string str() const;

 private:
  Poly num_, den_;
};

// Human-written input: integers, x, + - * / ^, parentheses, implicit products.
RatFunc parse_ratfunc(std::string_view text);

// f o g
RatFunc compose(const RatFunc& f, const RatFunc& g);

// Multiplicities over 0, 1 and infinity, the point x = infinity included.
Passport ramification_profile(const RatFunc& f);

struct BelyiReport {
  bool belyi = false;
  int ramification_excess = 0;  // sum of (e - 1) over 0, 1, infinity minus (2 deg - 2)
  // Set when some offending critical point is rational (x = infinity included).
  std::optional<mpq_class> critical_value;
  // Squarefree polynomial whose roots are the finite critical points outside the three fibers.
  Poly offending_points;
};

BelyiReport is_belyi(const RatFunc& f);
// Throws RatFuncError when f is not a Belyi map.
bool verify_against_passport(const RatFunc& f, const Passport& p);

}  // namespace belyi
