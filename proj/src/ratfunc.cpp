#include "belyi/ratfunc.hpp"

#include <cctype>

namespace belyi {

namespace {

mpz_class zgcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const mpz_class& c) { return Poly({c}); }
Poly Poly::x() { return Poly({0, 1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& c : c_) g = zgcd(g, c);
  return g;
}

Poly Poly::primitive() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (lead() < 0) g = -g;
  std::vector<mpz_class> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return Poly(std::move(out));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> out(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<mpz_class> out(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + mpz_class(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(out));
}

Poly operator*(const mpz_class& s, const Poly& a) {
  std::vector<mpz_class> out(a.c_);
  for (auto& c : out) c *= s;
  return Poly(std::move(out));
}

Poly Poly::pow(int e) const {
  if (e < 0) throw RatFuncError("negative polynomial power");
  Poly r = constant(1), b = *this;
  for (; e; e >>= 1) {
    if (e & 1) r = r * b;
    if (e > 1) b = b * b;
  }
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = c_[i];
    if (c == 0) continue;
    mpz_class m = abs(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (m != 1 || i == 0) s += m.get_str();
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

Poly divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw RatFuncError("division by the zero polynomial");
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return {};
    throw RatFuncError("internal: inexact polynomial division");
  }
  std::vector<mpz_class> r(a.coeffs()), q(a.degree() - b.degree() + 1);
  const int db = b.degree();
  for (int i = a.degree() - db; i >= 0; --i) {
    const mpz_class& top = r[i + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t()))
      throw RatFuncError("internal: inexact polynomial division");
    mpz_divexact(q[i].get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
    for (int j = 0; j <= db; ++j) r[i + j] -= q[i] * b[j];
  }
  for (const auto& c : r)
    if (c != 0) throw RatFuncError("internal: inexact polynomial division");
  return Poly(std::move(q));
}

namespace {

// lc(b)^k * a mod b, up to a constant; enough for a primitive remainder sequence.
Poly pseudo_remainder(Poly a, const Poly& b) {
  const int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    std::vector<mpz_class> shift(a.degree() - db + 1);
    shift.back() = a.lead();
    a = b.lead() * a - Poly(std::move(shift)) * b;
  }
  return a;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  Poly p = a.primitive(), q = b.primitive();
  if (p.degree() < q.degree()) std::swap(p, q);
  while (true) {
    Poly r = pseudo_remainder(p, q);
    if (r.is_zero()) return q;
    p = std::move(q);
    q = r.primitive();
  }
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() <= 0) return out;
  Poly f = p.primitive();
  Poly c = gcd(f, f.derivative());
  Poly w = divexact(f, c);
  for (int i = 1; w.degree() > 0; ++i) {
    Poly y = gcd(w, c);
    Poly z = divexact(w, y);
    if (z.degree() > 0) out.emplace_back(std::move(z), i);
    w = std::move(y);
    c = divexact(c, w);
  }
  return out;
}

RatFunc::RatFunc() : num_(), den_(Poly::constant(1)) {}

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw RatFuncError("division by zero");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly::constant(1);
    return;
  }
  Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divexact(num, g);
    den = divexact(den, g);
  }
  mpz_class h = zgcd(num.content(), den.content());
  if (den.lead() < 0) h = -h;
  if (h != 1) {
    std::vector<mpz_class> n(num.coeffs()), d(den.coeffs());
    for (auto& c : n) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), h.get_mpz_t());
    for (auto& c : d) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), h.get_mpz_t());
    num = Poly(std::move(n));
    den = Poly(std::move(d));
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFunc RatFunc::constant(const mpq_class& c) {
  return RatFunc(Poly::constant(c.get_num()), Poly::constant(c.get_den()));
}
RatFunc RatFunc::x() { return RatFunc(Poly::x(), Poly::constant(1)); }

int RatFunc::degree() const { return std::max(num_.degree(), den_.degree()); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num_.is_zero()) throw RatFuncError("division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return RatFunc::constant(1) / pow(-e);
  return RatFunc(num_.pow(e), den_.pow(e));
}

namespace {

std::string factored(const Poly& p) {
  std::string s;
  for (const auto& [f, m] : squarefree_decomposition(p)) {
    std::string t = f.str();
    bool single = t.find(' ') == std::string::npos && t[0] != '-';
    if (!single) t = "(" + t + ")";
    if (m > 1) t += "^" + std::to_string(m);
    s += (s.empty() ? "" : " * ") + t;
  }
  return s;
}

}  // namespace

std::string RatFunc::str() const {
  if (num_.is_zero()) return "0";
  mpq_class scale(num_.content(), den_.content());
  scale.canonicalize();
  if (num_.lead() < 0) scale = -scale;
  std::string nf = factored(num_), df = factored(den_);
  std::string s;
  if (nf.empty()) {
    s = scale.get_str();
  } else if (scale == 1) {
    s = nf;
  } else if (scale == -1) {
    s = "-" + nf;
  } else {
    s = scale.get_str() + " * " + nf;
  }
  if (!df.empty()) {
    bool single = df.find(" * ") == std::string::npos;
    s += " / " + (single ? df : "(" + df + ")");
  }
  return s;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw RatFuncError("cannot parse rational function at offset " + std::to_string(i_) + ": " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool starts_factor() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == '(';
  }

  RatFunc expr() {
    RatFunc r = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++i_;
        r = r + term();
      } else if (c == '-') {
        ++i_;
        r = r - term();
      } else {
        return r;
      }
    }
  }

  RatFunc term() {
    RatFunc r = unary();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++i_;
        r = r * unary();
      } else if (c == '/') {
        ++i_;
        RatFunc d = unary();
        if (d.num().is_zero()) fail("division by zero");
        r = r / d;
      } else if (starts_factor()) {
        r = r * power();
      } else {
        return r;
      }
    }
  }

  RatFunc unary() {
    char c = peek();
    if (c == '-') {
      ++i_;
      return RatFunc::constant(-1) * unary();
    }
    if (c == '+') {
      ++i_;
      return unary();
    }
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (peek() != '^') return base;
    ++i_;
    bool paren = peek() == '(';
    if (paren) ++i_;
    bool neg = peek() == '-';
    if (neg) ++i_;
    mpz_class e = number();
    if (paren) {
      if (peek() != ')') fail("expected ')' after exponent");
      ++i_;
    }
    if (e > 10000) fail("exponent too large");
    int k = static_cast<int>(e.get_si());
    if (neg && base.num().is_zero()) fail("division by zero");
    return base.pow(neg ? -k : k);
  }

  mpz_class number() {
    skip();
    size_t j = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (j == i_) fail("expected a number");
    return mpz_class(std::string(s_.substr(j, i_ - j)));
  }

  RatFunc atom() {
    char c = peek();
    if (c == 'x') {
      ++i_;
      return RatFunc::x();
    }
    if (c == '(') {
      ++i_;
      RatFunc r = expr();
      if (peek() != ')') fail("expected ')'");
      ++i_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc::constant(mpq_class(number()));
    fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of input");
  }

  std::string_view s_;
  size_t i_ = 0;
};

mpq_class eval(const Poly& p, const mpq_class& x) {
  mpq_class r = 0;
  for (int i = p.degree(); i >= 0; --i) r = r * x + mpq_class(p[i]);
  return r;
}

std::vector<mpz_class> divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> out;
  for (mpz_class i = 1; i * i <= v; ++i)
    if (v % i == 0) {
      out.push_back(i);
      if (i * i != v) out.push_back(v / i);
    }
  return out;
}

// Some rational root of p by the rational root test; only tried when the end
// coefficients are small enough to factor by trial division.
std::optional<mpq_class> rational_root(const Poly& p) {
  if (p.degree() < 1) return std::nullopt;
  if (p[0] == 0) return mpq_class(0);
  if (p.degree() == 1) {
    mpq_class x(-p[0], p[1]);
    x.canonicalize();
    return x;
  }
  const mpz_class cap = 1000000;
  if (abs(p[0]) > cap || abs(p.lead()) > cap) return std::nullopt;
  for (const auto& a : divisors(p[0]))
    for (const auto& b : divisors(p.lead()))
      for (int sign : {1, -1}) {
        mpq_class x(sign * a, b);
        x.canonicalize();
        if (eval(p, x) == 0) return x;
      }
  return std::nullopt;
}

void add_fiber(std::vector<int>& col, const Poly& p, int d) {
  for (const auto& [f, m] : squarefree_decomposition(p)) col.insert(col.end(), f.degree(), m);
  if (p.degree() < d) col.push_back(d - p.degree());
}

}  // namespace

RatFunc parse_ratfunc(std::string_view text) { return Parser(text).parse(); }

RatFunc compose(const RatFunc& f, const RatFunc& g) {
  const int m = f.degree();
  std::vector<Poly> pp{Poly::constant(1)}, qp{Poly::constant(1)};
  for (int i = 1; i <= m; ++i) {
    pp.push_back(pp.back() * g.num());
    qp.push_back(qp.back() * g.den());
  }
  Poly num, den;
  for (int i = 0; i <= f.num().degree(); ++i) num = num + f.num()[i] * (pp[i] * qp[m - i]);
  for (int i = 0; i <= f.den().degree(); ++i) den = den + f.den()[i] * (pp[i] * qp[m - i]);
  return RatFunc(num, den);
}

Passport ramification_profile(const RatFunc& f) {
  const int d = f.degree();
  if (d == 0) throw RatFuncError("a constant function has no ramification profile");
  std::array<std::vector<int>, 3> cols;
  add_fiber(cols[0], f.num(), d);
  add_fiber(cols[1], f.num() - f.den(), d);
  add_fiber(cols[2], f.den(), d);
  Passport p{{make_partition(cols[0]), make_partition(cols[1]), make_partition(cols[2])}};
  if (!p.balanced() || p.degree() != d) throw RatFuncError("internal: fiber sizes differ from the degree");
  return p;
}

BelyiReport is_belyi(const RatFunc& f) {
  const int d = f.degree();
  if (d == 0) throw RatFuncError("a constant function is not a Belyi map");
  Passport p = ramification_profile(f);
  BelyiReport r;
  int s = 0;
  for (const auto& col : p.cols)
    for (int e : col) s += e - 1;
  r.ramification_excess = s - (2 * d - 2);
  r.belyi = r.ramification_excess == 0;
  if (r.belyi) return r;

  const Poly& n = f.num();
  const Poly& q = f.den();
  Poly w = n.derivative() * q - n * q.derivative();
  Poly sqf = Poly::constant(1);
  for (const auto& fm : squarefree_decomposition(w)) sqf = sqf * fm.first;
  Poly fibers = n * q * (n - q);
  r.offending_points = divexact(sqf, gcd(sqf, fibers));

  if (n.degree() == q.degree() && d >= 2) {
    Poly shifted = q.lead() * n - n.lead() * q;
    if (d - shifted.degree() >= 2) {
      r.critical_value = mpq_class(n.lead(), q.lead());
      r.critical_value->canonicalize();
    }
  }
  if (!r.critical_value) {
    if (auto x0 = rational_root(r.offending_points)) {
      mpq_class v = eval(n, *x0) / eval(q, *x0);
      v.canonicalize();
      r.critical_value = v;
    }
  }
  return r;
}

bool verify_against_passport(const RatFunc& f, const Passport& p) {
  BelyiReport r = is_belyi(f);
  if (!r.belyi) {
    std::string why = "not a Belyi map";
    if (r.critical_value) why += ": critical value " + r.critical_value->get_str();
    throw RatFuncError(why);
  }
  return ramification_profile(f) == p;
}

}  // namespace belyi
