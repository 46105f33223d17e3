#include "belyi/dessin.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace belyi {

Partition make_partition(std::vector<int> parts) {
  for (int p : parts)
    if (p < 1) throw DessinError("partition parts must be positive");
  std::sort(parts.begin(), parts.end());
  return parts;
}

Partition partition_of(std::initializer_list<std::pair<int, int>> powers) {
  std::vector<int> parts;
  for (auto [part, count] : powers) {
    if (count < 0) throw DessinError("negative multiplicity");
    parts.insert(parts.end(), count, part);
  }
  return make_partition(std::move(parts));
}

int partition_sum(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

std::string partition_str(const Partition& p) {
  std::string s;
  for (size_t i = 0; i < p.size();) {
    size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (!s.empty()) s += ' ';
    s += std::to_string(p[i]) + '^' + std::to_string(j - i);
    i = j;
  }
  return s;
}

bool Passport::balanced() const {
  int n = partition_sum(cols[0]);
  return n > 0 && partition_sum(cols[1]) == n && partition_sum(cols[2]) == n;
}

std::string Passport::str() const {
  return "[" + partition_str(cols[0]) + ", " + partition_str(cols[1]) + ", " + partition_str(cols[2]) + "]";
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw DessinError("bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

Partition parse_column(std::string_view col) {
  std::vector<int> parts;
  std::istringstream in{std::string(col)};
  std::string tok;
  while (in >> tok) {
    auto caret = tok.find('^');
    int part = parse_int(std::string_view(tok).substr(0, caret), "part");
    int mult = caret == std::string::npos ? 1 : parse_int(std::string_view(tok).substr(caret + 1), "multiplicity");
    if (part < 1 || mult < 0) throw DessinError("bad passport term '" + tok + "'");
    if (static_cast<long long>(part) * mult > kMaxDegree) throw DessinError("passport degree exceeds the parser cap");
    parts.insert(parts.end(), mult, part);
  }
  if (parts.empty()) throw DessinError("empty passport column");
  return make_partition(std::move(parts));
}

}  // namespace

Passport Passport::parse(std::string_view text) {
  auto l = text.find('[');
  auto r = text.rfind(']');
  if (l == std::string_view::npos || r == std::string_view::npos || r < l)
    throw DessinError("passport must be written as [a^i ..., b^j ..., c^k ...]");
  std::string_view body = text.substr(l + 1, r - l - 1);
  Passport p;
  int idx = 0;
  size_t start = 0;
  for (size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == ',') {
      if (idx >= 3) throw DessinError("passport needs exactly three columns");
      p.cols[idx++] = parse_column(body.substr(start, i - start));
      start = i + 1;
    }
  }
  if (idx != 3) throw DessinError("passport needs exactly three columns");
  return p;
}

Dessin::Dessin(Perm sigma0, Perm sigma1) : s0_(std::move(sigma0)), s1_(std::move(sigma1)) {
  if (s0_.degree() != s1_.degree()) throw DessinError("sigma0 and sigma1 have different degrees");
  if (s0_.degree() < 1) throw DessinError("a dessin needs at least one edge");
}

Perm Dessin::sigma_inf() const { return compose(s0_, s1_).inverse(); }

Dessin one_edge_dessin() { return Dessin(Perm::identity(1), Perm::identity(1)); }

bool is_transitive(const Dessin& d) {
  const Perm gens[] = {d.sigma0(), d.sigma1()};
  return is_transitive(gens, d.degree());
}

int genus(const Dessin& d) {
  if (!is_transitive(d)) throw DessinError("genus of a disconnected dessin");
  int c = d.sigma0().cycle_count() + d.sigma1().cycle_count() + d.sigma_inf().cycle_count();
  int twice = d.degree() + 2 - c;
  return twice / 2;
}

Passport passport_of(const Dessin& d) {
  return Passport{{d.sigma0().cycle_type(), d.sigma1().cycle_type(), d.sigma_inf().cycle_type()}};
}

Dessin relabel(const Dessin& d, const Perm& g) { return Dessin(conjugate(d.sigma0(), g), conjugate(d.sigma1(), g)); }

Dessin canonical_form(const Dessin& d) {
  if (!is_transitive(d)) throw DessinError("canonical form of a disconnected dessin");
  const int n = d.degree();
  const auto& a = d.sigma0().images();
  const auto& b = d.sigma1().images();
  std::vector<int> best0, best1, cur0(n), cur1(n), lab(n), order(n);
  for (int s = 0; s < n; ++s) {
    std::fill(lab.begin(), lab.end(), -1);
    lab[s] = 0;
    order[0] = s;
    int next = 1;
    // Compared against the best sigma0 image so far while labelling; 1 means abandon.
    int cmp = best0.empty() ? -1 : 0;
    for (int i = 0; i < n && cmp <= 0; ++i) {
      int x = order[i];
      for (int y : {a[x], b[x]}) {
        if (lab[y] < 0) {
          lab[y] = next;
          order[next++] = y;
        }
      }
      cur0[i] = lab[a[x]];
      cur1[i] = lab[b[x]];
      if (cmp == 0 && cur0[i] != best0[i]) cmp = cur0[i] < best0[i] ? -1 : 1;
    }
    if (cmp > 0) continue;
    if (cmp == 0 && !std::lexicographical_compare(cur1.begin(), cur1.end(), best1.begin(), best1.end())) continue;
    best0 = cur0;
    best1 = cur1;
  }
  return Dessin(Perm(best0), Perm(best1));
}

bool is_equivalent(const Dessin& a, const Dessin& b) {
  if (a.degree() != b.degree()) return false;
  if (passport_of(a) != passport_of(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

std::string to_dot(const Dessin& d) {
  const int n = d.degree();
  std::vector<int> wid(n), wpos(n), bid(n), bpos(n);
  auto wc = d.sigma0().cycles();
  auto bc = d.sigma1().cycles();
  for (size_t i = 0; i < wc.size(); ++i)
    for (size_t j = 0; j < wc[i].size(); ++j) wid[wc[i][j]] = static_cast<int>(i), wpos[wc[i][j]] = static_cast<int>(j);
  for (size_t i = 0; i < bc.size(); ++i)
    for (size_t j = 0; j < bc[i].size(); ++j) bid[bc[i][j]] = static_cast<int>(i), bpos[bc[i][j]] = static_cast<int>(j);
  std::ostringstream out;
  out << "graph dessin {\n";
  for (size_t i = 0; i < wc.size(); ++i) out << "  w" << i + 1 << " [shape=circle, style=filled, fillcolor=white, label=\"\"];\n";
  for (size_t i = 0; i < bc.size(); ++i) out << "  b" << i + 1 << " [shape=circle, style=filled, fillcolor=black, label=\"\"];\n";
  // tail/head labels give the counterclockwise position of the edge around each vertex.
  for (int e = 0; e < n; ++e)
    out << "  w" << wid[e] + 1 << " -- b" << bid[e] + 1 << " [label=\"" << e + 1 << "\", taillabel=\"" << wpos[e] + 1
        << "\", headlabel=\"" << bpos[e] + 1 << "\"];\n";
  out << "}\n";
  return out.str();
}

nlohmann::json cycles_json(const Perm& p) {
  auto j = nlohmann::json::array();
  for (const auto& c : p.cycles()) {
    if (c.size() < 2) continue;
    auto jc = nlohmann::json::array();
    for (int x : c) jc.push_back(x + 1);
    j.push_back(std::move(jc));
  }
  return j;
}

Perm perm_from_json(const nlohmann::json& j, int degree) {
  if (!j.is_array()) throw DessinError("permutation must be an array of cycles");
  std::vector<std::vector<int>> cycles;
  for (const auto& c : j) {
    if (!c.is_array()) throw DessinError("cycle must be an array of points");
    std::vector<int> cyc;
    for (const auto& x : c) {
      if (!x.is_number_integer()) throw DessinError("cycle entries must be integers");
      cyc.push_back(x.get<int>());
    }
    cycles.push_back(std::move(cyc));
  }
  try {
    return Perm::from_cycles(degree, cycles);
  } catch (const PermError& e) {
    throw DessinError(e.what());
  }
}

nlohmann::json to_json(const Dessin& d) {
  nlohmann::json j;
  j["degree"] = d.degree();
  j["sigma0"] = cycles_json(d.sigma0());
  j["sigma1"] = cycles_json(d.sigma1());
  return j;
}

Dessin dessin_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("sigma0") || !j.contains("sigma1"))
    throw DessinError("dessin JSON needs degree, sigma0 and sigma1");
  if (!j["degree"].is_number_integer()) throw DessinError("degree must be an integer");
  long long n = j["degree"].get<long long>();
  if (n < 1 || n > kMaxDegree) throw DessinError("degree " + std::to_string(n) + " outside 1.." + std::to_string(kMaxDegree));
  int deg = static_cast<int>(n);
  return Dessin(perm_from_json(j["sigma0"], deg), perm_from_json(j["sigma1"], deg));
}

}  // namespace belyi
