#include "belyi/blocks.hpp"

#include <algorithm>
#include <atomic>

#include "belyi/union_find.hpp"

namespace belyi {

const std::vector<int>& BlockSystem::block_of(int x) const {
  for (const auto& b : blocks)
    if (std::binary_search(b.begin(), b.end(), x)) return b;
  throw DessinError("point " + std::to_string(x + 1) + " is in no block");
}

namespace {

void require_transitive(const Dessin& d) {
  if (!is_transitive(d)) throw DessinError("block systems need a connected dessin");
}

// Union-find closure of the seed pair under sigma0 and sigma1.
std::optional<BlockSystem> close_seed(const std::vector<int>& a, const std::vector<int>& b, int x, int y) {
  const int n = static_cast<int>(a.size());
  UnionFind uf(n);
  std::vector<std::pair<int, int>> queue{{x, y}};
  while (!queue.empty()) {
    auto [p, q] = queue.back();
    queue.pop_back();
    if (!uf.unite(p, q)) continue;
    if (uf.set_count() == 1) return std::nullopt;
    queue.emplace_back(a[p], a[q]);
    queue.emplace_back(b[p], b[q]);
  }
  BlockSystem s{uf.groups()};
  return s;
}

}  // namespace

std::optional<BlockSystem> minimal_blocks(const Dessin& d, int a, int b) {
  if (a == b) throw DessinError("seed points must differ");
  if (a < 0 || b < 0 || a >= d.degree() || b >= d.degree()) throw DessinError("seed point out of range");
  require_transitive(d);
  return close_seed(d.sigma0().images(), d.sigma1().images(), a, b);
}

bool is_block_system(const Dessin& d, const BlockSystem& s) {
  const int n = d.degree();
  std::vector<int> id(n, -1);
  int size = -1;
  for (int i = 0; i < s.block_count(); ++i) {
    if (size >= 0 && static_cast<int>(s.blocks[i].size()) != size) return false;
    size = static_cast<int>(s.blocks[i].size());
    for (int x : s.blocks[i]) {
      if (x < 0 || x >= n || id[x] >= 0) return false;
      id[x] = i;
    }
  }
  if (std::count(id.begin(), id.end(), -1) != 0) return false;
  if (s.block_count() <= 1 || s.block_count() >= n) return false;
  for (const Perm* g : {&d.sigma0(), &d.sigma1()})
    for (const auto& blk : s.blocks)
      for (int x : blk)
        if (id[(*g)(x)] != id[(*g)(blk[0])]) return false;
  return true;
}

PrimitivityReport is_primitive_serial(const Dessin& d) {
  require_transitive(d);
  const auto& a = d.sigma0().images();
  const auto& b = d.sigma1().images();
  PrimitivityReport r;
  for (int x = 1; x < d.degree(); ++x) {
    if (auto s = close_seed(a, b, 0, x)) {
      r.primitive = false;
      r.witness_point = x;
      r.witness = std::move(s);
      return r;
    }
  }
  return r;
}

PrimitivityReport is_primitive(const Dessin& d) {
  require_transitive(d);
  const int n = d.degree();
  const auto& a = d.sigma0().images();
  const auto& b = d.sigma1().images();
  std::atomic<int> best{n};
#pragma omp parallel for schedule(dynamic, 4)
  for (int x = 1; x < n; ++x) {
    if (x > best.load(std::memory_order_relaxed)) continue;
    if (close_seed(a, b, 0, x)) {
      int cur = best.load();
      while (x < cur && !best.compare_exchange_weak(cur, x)) {
      }
    }
  }
  PrimitivityReport r;
  if (best.load() < n) {
    r.primitive = false;
    r.witness_point = best.load();
    r.witness = close_seed(a, b, 0, r.witness_point);
  }
  return r;
}

QuotientTriple quotient_triple(const Dessin& d, const BlockSystem& s) {
  if (!is_block_system(d, s)) throw DessinError("not a block system of this dessin");
  const int m = s.block_count();
  std::vector<int> id(d.degree());
  for (int i = 0; i < m; ++i)
    for (int x : s.blocks[i]) id[x] = i;
  auto induced = [&](const Perm& g) {
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) img[i] = id[g(s.blocks[i][0])];
    return Perm(std::move(img));
  };
  QuotientTriple q{induced(d.sigma0()), induced(d.sigma1()), induced(d.sigma_inf())};
  if (!compose(compose(q.sigma0, q.sigma1), q.sigma_inf).is_identity())
    throw DessinError("internal: quotient triple breaks the product relation");
  return q;
}

nlohmann::json certificate_json(const Dessin& d, const PrimitivityReport& r) {
  nlohmann::json j;
  j["primitive"] = r.primitive;
  if (r.primitive) return j;
  auto blocks = nlohmann::json::array();
  for (const auto& b : r.witness->blocks) {
    auto jb = nlohmann::json::array();
    for (int x : b) jb.push_back(x + 1);
    blocks.push_back(std::move(jb));
  }
  j["witness_seed"] = {1, r.witness_point + 1};
  j["blocks"] = std::move(blocks);
  QuotientTriple q = quotient_triple(d, *r.witness);
  j["quotient"] = {{"degree", q.sigma0.degree()},
                   {"sigma0", cycles_json(q.sigma0)},
                   {"sigma1", cycles_json(q.sigma1)},
                   {"sigma_inf", cycles_json(q.sigma_inf)}};
  return j;
}

}  // namespace belyi
