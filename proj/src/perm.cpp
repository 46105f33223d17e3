#include "belyi/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>

#include "belyi/union_find.hpp"

namespace belyi {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  const int n = degree();
  if (n > kMaxDegree) throw PermError("degree " + std::to_string(n) + " exceeds the parser cap");
  std::vector<char> hit(n, 0);
  for (int x : img_) {
    if (x < 0 || x >= n || hit[x]) throw PermError("images are not a bijection");
    hit[x] = 1;
  }
}

Perm Perm::identity(int n) {
  if (n < 0) throw PermError("negative degree");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  if (n > kMaxDegree) throw PermError("degree " + std::to_string(n) + " exceeds the parser cap");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(n, 0);
  for (const auto& c : cycles) {
    for (size_t i = 0; i < c.size(); ++i) {
      int x = c[i] - 1;
      if (x < 0 || x >= n) throw PermError("point " + std::to_string(c[i]) + " out of range 1.." + std::to_string(n));
      if (used[x]) throw PermError("point " + std::to_string(c[i]) + " repeated");
      used[x] = 1;
      img[x] = c[(i + 1) % c.size()] - 1;
    }
  }
  return Perm(std::move(img));
}

Perm Perm::parse(std::string_view text, int degree) {
  std::vector<std::vector<int>> cycles;
  int maxp = 0;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == ',')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw PermError("expected '(' at offset " + std::to_string(i));
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip();
      if (i >= text.size()) throw PermError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      long long v = 0;
      auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc() || p == text.data() + i) throw PermError("bad point at offset " + std::to_string(i));
      if (v < 1 || v > kMaxDegree) throw PermError("point " + std::to_string(v) + " outside 1.." + std::to_string(kMaxDegree));
      i = static_cast<size_t>(p - text.data());
      cyc.push_back(static_cast<int>(v));
      maxp = std::max(maxp, static_cast<int>(v));
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip();
  }
  if (degree == 0) degree = std::max(maxp, 1);
  if (degree > kMaxDegree) throw PermError("degree " + std::to_string(degree) + " exceeds the parser cap");
  if (maxp > degree) throw PermError("point " + std::to_string(maxp) + " exceeds degree " + std::to_string(degree));
  return from_cycles(degree, cycles);
}

Perm Perm::inverse() const {
  std::vector<int> r(img_.size());
  for (int i = 0; i < degree(); ++i) r[img_[i]] = i;
  Perm out;
  out.img_ = std::move(r);
  return out;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> t;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.begin(), t.end());
  return t;
}

int Perm::cycle_count() const {
  int c = 0;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (int j = i; !seen[j]; j = img_[j]) seen[j] = 1;
  }
  return c;
}

std::string Perm::str() const {
  std::string s;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    s += '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw PermError("degree mismatch: " + std::to_string(p.degree()) + " vs " + std::to_string(q.degree()));
  std::vector<int> r(p.degree());
  for (int i = 0; i < p.degree(); ++i) r[i] = q(p(i));
  return Perm(std::move(r));
}

Perm conjugate(const Perm& p, const Perm& g) {
  if (p.degree() != g.degree()) throw PermError("degree mismatch");
  std::vector<int> r(p.degree());
  for (int i = 0; i < p.degree(); ++i) r[g(i)] = g(p(i));
  return Perm(std::move(r));
}

namespace {

std::vector<std::vector<int>> sorted_groups(std::vector<std::vector<int>> groups) {
  for (auto& g : groups) std::sort(g.begin(), g.end());
  std::sort(groups.begin(), groups.end());
  return groups;
}

void check_degrees(std::span<const Perm> gens, int degree) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw PermError("generators of different degrees");
}

}  // namespace

std::vector<std::vector<int>> orbits(std::span<const Perm> gens, int degree) {
  check_degrees(gens, degree);
  UnionFind uf(degree);
  for (const auto& g : gens)
    for (int i = 0; i < degree; ++i) uf.unite(i, g(i));
  return sorted_groups(uf.groups());
}

std::vector<std::vector<int>> orbits_bfs(std::span<const Perm> gens, int degree) {
  check_degrees(gens, degree);
  std::vector<int> comp(degree, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < degree; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      out[id].push_back(x);
      for (const auto& g : gens) {
        int y = g(x);
        if (comp[y] < 0) {
          comp[y] = id;
          q.push(y);
        }
      }
    }
  }
  return sorted_groups(std::move(out));
}

bool is_transitive(std::span<const Perm> gens, int degree) {
  if (degree <= 1) return true;
  if (gens.empty()) return false;
  return orbits(gens, degree).size() == 1;
}

bool is_transitive(std::span<const Perm> gens) {
  if (gens.empty()) return false;
  return is_transitive(gens, gens.front().degree());
}

}  // namespace belyi
