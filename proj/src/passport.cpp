#include "belyi/passport.hpp"

#include <algorithm>
#include <cctype>

namespace belyi {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw PassportError("empty rational");
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false, digit = false;
  for (size_t j = i; j < s.size(); ++j) {
    if (s[j] == '/' && !slash && digit) {
      slash = true;
      digit = false;
    } else if (std::isdigit(static_cast<unsigned char>(s[j]))) {
      digit = true;
    } else {
      throw PassportError("rational must be written p/q, got '" + s + "'");
    }
  }
  if (!digit) throw PassportError("rational must be written p/q, got '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  q.set_str(s, 10);
  if (q.get_den() == 0) throw PassportError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::string_view kind_name(EquationKind k) {
  switch (k) {
    case EquationKind::lame: return "lame";
    case EquationKind::gen2: return "gen2";
    case EquationKind::gen3: return "gen3";
  }
  return "?";
}

EquationKind parse_kind(std::string_view s) {
  if (s == "lame") return EquationKind::lame;
  if (s == "gen2") return EquationKind::gen2;
  if (s == "gen3") return EquationKind::gen3;
  throw PassportError("unknown equation kind '" + std::string(s) + "' (lame, gen2, gen3)");
}

std::string_view point_name(Point p) {
  switch (p) {
    case Point::e1: return "e1";
    case Point::e2: return "e2";
    case Point::e3: return "e3";
    case Point::wpa: return "wpa";
    case Point::inf: return "inf";
  }
  return "?";
}

Rational normalize_n(const Rational& n) {
  if (n >= Rational(-1, 2)) return n;
  return Rational(-n - 1);
}

ExponentProfile exponent_profile(EquationKind kind, std::optional<Rational> n0, std::optional<Rational> n1) {
  const Rational half(1, 2);
  ExponentProfile p{kind, {{Point::e1, half}, {Point::e2, half}, {Point::e3, half}}};
  switch (kind) {
    case EquationKind::lame:
      if (!n0 || n1) throw PassportError("lame takes n0 only");
      p.diffs.emplace_back(Point::inf, normalize_n(*n0) + half);
      break;
    case EquationKind::gen2:
      if (n0 || !n1) throw PassportError("gen2 takes n1 only");
      p.diffs.emplace_back(Point::wpa, 2 * normalize_n(*n1) + 1);
      p.diffs.emplace_back(Point::inf, half);
      break;
    case EquationKind::gen3:
      if (!n0 || !n1) throw PassportError("gen3 takes both n0 and n1");
      p.diffs.emplace_back(Point::wpa, 2 * normalize_n(*n1) + 1);
      p.diffs.emplace_back(Point::inf, normalize_n(*n0) + half);
      break;
  }
  for (auto& d : p.diffs) d.second.canonicalize();
  return p;
}

SchwarzTarget SchwarzTarget::dihedral(int n) {
  if (n < 2) throw PassportError("dihedral target needs n >= 2");
  return {SchwarzGroup::dihedral, n, {2, 2, n}};
}
SchwarzTarget SchwarzTarget::A4() { return {SchwarzGroup::A4, 0, {2, 3, 3}}; }
SchwarzTarget SchwarzTarget::S4() { return {SchwarzGroup::S4, 0, {2, 3, 4}}; }
SchwarzTarget SchwarzTarget::A5() { return {SchwarzGroup::A5, 0, {2, 3, 5}}; }

SchwarzTarget SchwarzTarget::parse(std::string_view s) {
  if (s == "A4") return A4();
  if (s == "S4") return S4();
  if (s == "A5") return A5();
  if (s.size() > 1 && s[0] == 'D') {
    int n = 0;
    for (char c : s.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || n > 100000) throw PassportError("bad dihedral target '" + std::string(s) + "'");
      n = n * 10 + (c - '0');
    }
    return dihedral(n);
  }
  throw PassportError("unknown target '" + std::string(s) + "' (A4, S4, A5, D<n>)");
}

std::string SchwarzTarget::name() const {
  switch (group) {
    case SchwarzGroup::dihedral: return "D" + std::to_string(n);
    case SchwarzGroup::A4: return "A4";
    case SchwarzGroup::S4: return "S4";
    case SchwarzGroup::A5: return "A5";
  }
  return "?";
}

Passport RamTable::passport() const {
  std::array<std::vector<int>, 3> cols;
  for (const auto& a : assignment) cols[a.target].push_back(a.ram);
  for (int t = 0; t < 3; ++t) cols[t].insert(cols[t].end(), free[t], free_ram[t]);
  return Passport{{make_partition(cols[0]), make_partition(cols[1]), make_partition(cols[2])}};
}

nlohmann::json RamTable::to_json() const {
  static const char* tname[] = {"0", "1", "inf"};
  nlohmann::json j;
  j["degree"] = degree;
  auto a = nlohmann::json::object();
  for (const auto& x : assignment) a[std::string(point_name(x.point))] = nlohmann::json::array({tname[x.target], x.ram});
  j["assignment"] = a;
  j["free"] = {{"0", free[0]}, {"1", free[1]}, {"inf", free[2]}};
  return j;
}

std::vector<RamTable> derive_tables(const ExponentProfile& profile, const SchwarzTarget& target) {
  const auto& pts = profile.diffs;
  const int np = static_cast<int>(pts.size());
  for (const auto& [pt, d] : pts)
    if (d <= 0) throw PassportError("exponent difference at " + std::string(point_name(pt)) + " is not positive");

  // The degree does not depend on the assignment: sum over t of S_t/m_t is the sum of all diffs.
  Rational diff_sum = 0;
  for (const auto& pd : pts) diff_sum += pd.second;
  Rational excess = Rational(1, target.m[0]) + Rational(1, target.m[1]) + Rational(1, target.m[2]) - 1;
  excess.canonicalize();
  if (excess <= 0) return {};
  Rational nq = (diff_sum - np + 2) / excess;
  nq.canonicalize();
  if (nq.get_den() != 1 || nq <= 0) return {};
  const int n = static_cast<int>(nq.get_num().get_si());

  // options[i]: (target, ram) pairs with an integral ramification index.
  std::vector<std::vector<std::pair<int, int>>> options(np);
  std::vector<int> same_as(np, -1);
  for (int i = 0; i < np; ++i) {
    for (int t = 0; t < 3; ++t) {
      Rational e = pts[i].second * target.m[t];
      e.canonicalize();
      if (e.get_den() == 1 && e >= 1 && e <= n) options[i].emplace_back(t, static_cast<int>(e.get_num().get_si()));
    }
    for (int j = i - 1; j >= 0 && same_as[i] < 0; --j)
      if (pts[j].second == pts[i].second) same_as[i] = j;
  }

  std::vector<RamTable> out;
  std::vector<int> choice(np, 0);
  std::vector<int> tgt(np, 0);
  auto emit = [&] {
    RamTable tab;
    tab.degree = n;
    std::array<int, 3> ram_sum{}, count{};
    for (int i = 0; i < np; ++i) {
      auto [t, e] = options[i][choice[i]];
      tab.assignment.push_back({pts[i].first, t, e});
      ram_sum[t] += e;
      ++count[t];
    }
    int points = 0;
    for (int t = 0; t < 3; ++t) {
      int rest = n - ram_sum[t];
      if (rest < 0 || rest % target.m[t] != 0) return;
      tab.free[t] = rest / target.m[t];
      tab.free_ram[t] = target.m[t];
      points += count[t] + tab.free[t];
    }
    if (n != points - 2) return;  // Riemann-Hurwitz; implied by the choice of n
    out.push_back(std::move(tab));
  };
  // Odometer over options, keeping equal-difference points in non-decreasing target order.
  auto rec = [&](auto&& self, int i) -> void {
    if (i == np) {
      emit();
      return;
    }
    for (size_t c = 0; c < options[i].size(); ++c) {
      int t = options[i][c].first;
      if (same_as[i] >= 0 && t < tgt[same_as[i]]) continue;
      choice[i] = static_cast<int>(c);
      tgt[i] = t;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const RamTable& a, const RamTable& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.assignment < b.assignment;
  });
  for (const auto& t : out)
    if (hurwitz_defect(t.passport()) != 0) throw PassportError("internal: derived table fails Riemann-Hurwitz");
  return out;
}

int hurwitz_defect(const Passport& p) {
  if (!p.balanced()) throw PassportError("passport columns have different sums");
  long long n = p.degree();
  long long s = 0;
  for (const auto& col : p.cols)
    for (int e : col) s += e - 1;
  return static_cast<int>(2 * n - 2 - s);
}

bool ResidueClassSet::contains(const Rational& n) const {
  auto in_lattice = [&](int q) {
    Rational x = n * q;
    x.canonicalize();
    return x.get_den() == 1;
  };
  for (int q : excluded)
    if (in_lattice(q)) return false;
  for (int q : lattices)
    if (in_lattice(q)) return true;
  for (const auto& a : cosets) {
    Rational d = n - a;
    d.canonicalize();
    if (d.get_den() == 1) return true;
  }
  return false;
}

std::string ResidueClassSet::str() const {
  std::string s;
  if (!cosets.empty()) {
    s += "{";
    for (size_t i = 0; i < cosets.size(); ++i) s += (i ? "," : "") + rational_str(cosets[i]);
    s += "}+Z";
  }
  for (int q : lattices) s += (s.empty() ? "" : " u ") + (q == 1 ? std::string("Z") : "Z/" + std::to_string(q));
  for (size_t i = 0; i < excluded.size(); ++i)
    s += (i ? " u Z/" : " \\ Z/") + std::to_string(excluded[i]);
  return s.empty() ? "{}" : s;
}

namespace {

ResidueClassSet cosets(std::initializer_list<std::pair<int, int>> reps) {
  ResidueClassSet r;
  for (auto [p, q] : reps) {
    Rational a(p, q);
    a.canonicalize();
    r.cosets.push_back(a);
  }
  return r;
}

ResidueClassSet lattices(std::vector<int> in, std::vector<int> out = {}) {
  ResidueClassSet r;
  r.lattices = std::move(in);
  r.excluded = std::move(out);
  return r;
}

[[noreturn]] void unknown_group(std::string_view g, EquationKind k) {
  throw PassportError("unknown group label '" + std::string(g) + "' for kind " + std::string(kind_name(k)));
}

}  // namespace

AllowedN allowed_n(std::string_view g, EquationKind kind) {
  switch (kind) {
    case EquationKind::lame: {
      const std::string side = "n > 0 after n -> -n-1 normalisation";
      if (g == "G(N,N/2,2)") return {cosets({{1, 2}}), {}, side};
      if (g == "G(N,N,2)") return {lattices({1}), {}, side};
      if (g == "G12") return {cosets({{1, 4}, {3, 4}}), {}, side};
      if (g == "G13") return {cosets({{1, 6}, {5, 6}}), {}, side};
      if (g == "G22") return {cosets({{1, 10}, {9, 10}, {3, 10}, {7, 10}, {1, 6}, {5, 6}}), {}, side};
      break;
    }
    case EquationKind::gen2: {
      const std::string side = "n >= 1/6 after n -> -n-1 normalisation";
      if (g == "G(N,N/2,2)") return {cosets({{1, 4}, {3, 4}}), {}, side};
      if (g == "G12") return {cosets({{1, 6}, {5, 6}, {1, 4}, {3, 4}, {1, 3}, {2, 3}}), {}, side};
      if (g == "G13")
        return {cosets({{1, 8}, {7, 8}, {3, 8}, {5, 8}, {1, 6}, {5, 6}, {1, 4}, {3, 4}, {1, 3}, {2, 3}}), {}, side};
      if (g == "G22") return {lattices({6, 10}, {2}), {}, side};
      break;
    }
    case EquationKind::gen3: {
      if (g == "A4")
        return {cosets({{1, 6}, {5, 6}}), lattices({6}),
                "n0 = (1+2k)/6, n1 = l/6 with k = 0,2 mod 3, k+l >= 4, k+l = 1 mod 3"};
      if (g == "S4") return {lattices({4, 6}, {3}), lattices({8, 6}), ""};
      if (g == "A5") return {lattices({6, 10}, {3, 5}), lattices({4, 6, 10}), ""};
      if (g == "DN")
        return {lattices({2}), cosets({{1, 4}, {3, 4}}),
                "either n0 in Z/2 with n0 >= 1 (n1 free), or n1 in {1/4,3/4}+Z with n1 >= 3/4 (n0 free)"};
      break;
    }
  }
  unknown_group(g, kind);
}

bool check_n(std::string_view g, EquationKind kind, const Rational& n) {
  if (kind == EquationKind::gen3) throw PassportError("gen3 needs both n0 and n1");
  AllowedN a = allowed_n(g, kind);
  Rational m = normalize_n(n);
  if (!a.n0.contains(m)) return false;
  if (kind == EquationKind::lame) return m > 0;
  return m >= Rational(1, 6);
}

bool check_n(std::string_view g, EquationKind kind, const Rational& n0, const Rational& n1) {
  if (kind != EquationKind::gen3) throw PassportError(std::string(kind_name(kind)) + " takes a single n");
  AllowedN a = allowed_n(g, kind);
  Rational m0 = normalize_n(n0), m1 = normalize_n(n1);
  if (g == "DN") {
    bool case_a = a.n0.contains(m0) && m0 >= 1;
    bool case_b = a.n1->contains(m1) && m1 >= Rational(3, 4);
    return case_a || case_b;
  }
  if (!a.n0.contains(m0) || !a.n1->contains(m1)) return false;
  if (g == "A4") {
    Rational kq = (6 * m0 - 1) / 2;
    Rational lq = 6 * m1;
    kq.canonicalize();
    lq.canonicalize();
    if (kq.get_den() != 1 || lq.get_den() != 1) return false;
    long k = kq.get_num().get_si(), l = lq.get_num().get_si();
    long km = ((k % 3) + 3) % 3, sm = (((k + l) % 3) + 3) % 3;
    return (km == 0 || km == 2) && k + l >= 4 && sm == 1;
  }
  return true;
}

}  // namespace belyi
