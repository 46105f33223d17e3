#include "belyi/enumerate.hpp"
#include "belyi/passport.hpp"

#include <algorithm>
#include <set>

#include <omp.h>

namespace belyi {

Perm canonical_sigma0(const Partition& type) {
  std::vector<int> img;
  for (int len : type) {
    int base = static_cast<int>(img.size());
    for (int i = 0; i < len; ++i) img.push_back(base + (i + 1) % len);
  }
  return Perm(std::move(img));
}

std::string_view status_name(EnumStatus s) {
  switch (s) {
    case EnumStatus::found: return "found";
    case EnumStatus::none_found: return "none_found";
    case EnumStatus::infeasible: return "infeasible";
  }
  return "?";
}

namespace {

struct RollbackUnionFind {
  std::vector<int> parent, size;
  std::vector<std::pair<int, int>> history;
  int comps = 0;

  explicit RollbackUnionFind(int n) : parent(n), size(n, 1), comps(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      history.emplace_back(-1, -1);
      return;
    }
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    --comps;
    history.emplace_back(a, b);
  }
  void rollback() {
    auto [a, b] = history.back();
    history.pop_back();
    if (a < 0) return;
    parent[b] = b;
    size[a] -= size[b];
    ++comps;
  }
};

// Backtracking over sigma1 with sigma0 fixed. sigma1 is built one cycle at a
// time; psi(x) = sigma1(sigma0(x)) is tracked as a set of paths whose closed
// cycles must match the infinity column.
class Search {
 public:
  Search(const Passport& p, std::size_t limit)
      : n_(p.degree()),
        a_(canonical_sigma0(p.cols[0]).images()),
        ainv_(n_),
        cyc_(n_),
        cyc_len_(n_),
        s1_(n_, -1),
        in_cycle_(n_, 0),
        touched_(n_, 0),
        other_(n_),
        plen_(n_, 1),
        paths_(n_ + 1, 0),
        need1_(n_ + 1, 0),
        need_inf_(n_ + 1, 0),
        offered_(n_ + 1, 0),
        uf_(n_),
        limit_(limit) {
    for (int x = 0; x < n_; ++x) ainv_[a_[x]] = x;
    int c = 0;
    for (int x = 0; x < n_; ++c) {
      int len = 0;
      int y = x;
      do {
        cyc_[y] = c;
        y = a_[y];
        ++len;
      } while (y != x);
      for (int i = 0; i < len; ++i) {
        cyc_len_[x + i] = len;
        if (i) uf_.unite(x, x + i);
      }
      x += len;
    }
    uf_.history.clear();
    for (int x = 0; x < n_; ++x) other_[x] = x;
    for (int e : p.cols[1]) ++need1_[e];
    for (int e : p.cols[2]) ++need_inf_[e];
    unassigned_ = n_;
  }

  // Runs the search; states at split_depth are copied into tasks instead.
  void run(int split_depth, std::vector<Search>* tasks) {
    split_depth_ = split_depth;
    tasks_ = tasks;
    depth_ = 0;
    extend();
    tasks_ = nullptr;
  }

  std::set<Dessin>& found() { return found_; }
  std::size_t nodes() const { return nodes_; }
  bool stopped() const { return stopped_; }

 private:
  struct Undo {
    int x, h, t, old_h_other, old_t_other, old_h_len, old_t_len;
    bool closed_psi, closed_s1;
    int prev_cur, prev_len;
  };

  int max_need(const std::vector<int>& need) const {
    for (int e = n_; e >= 1; --e)
      if (need[e] > 0) return e;
    return 0;
  }

  // Every open psi path longer than t must end up in a cycle longer than t.
  bool dominance_ok() const {
    long long paths = 0, parts = 0;
    for (int t = n_; t >= 1; --t) {
      if (paths > parts) return false;
      paths += static_cast<long long>(t) * paths_[t];
      parts += static_cast<long long>(t) * need_inf_[t];
    }
    return true;
  }

  void leaf() {
    if (uf_.comps != 1) return;
    Dessin d{Perm(a_), Perm(s1_)};
    found_.insert(canonical_form(d));
    if (found_.size() >= limit_) stopped_ = true;
  }

  // Sets sigma1(cur_) = z. Returns false (with state restored) when pruned.
  bool apply(int z, Undo& u) {
    u.prev_cur = cur_;
    u.prev_len = cur_len_;
    u.closed_s1 = (z == start_);
    const int x = ainv_[cur_];
    u.x = x;
    u.h = other_[x];
    u.t = other_[z];
    u.old_h_other = other_[u.h];
    u.old_t_other = other_[u.t];
    u.old_h_len = plen_[u.h];
    u.old_t_len = plen_[u.t];
    u.closed_psi = (z == u.h);

    if (u.closed_psi) {
      int len = plen_[x];
      if (need_inf_[len] == 0) return false;
      --need_inf_[len];
      if (len >= 2) --paths_[len];
    } else {
      int len = plen_[x] + plen_[z];
      if (len > max_need(need_inf_)) return false;
      if (plen_[x] >= 2) --paths_[plen_[x]];
      if (plen_[z] >= 2) --paths_[plen_[z]];
      ++paths_[len];
      other_[u.h] = u.t;
      other_[u.t] = u.h;
      plen_[u.h] = plen_[u.t] = len;
    }
    s1_[cur_] = z;
    uf_.unite(cur_, z);
    --unassigned_;
    if (u.closed_s1) {
      --need1_[cur_len_];
      cur_ = -1;
    } else {
      in_cycle_[z] = 1;
      ++touched_[cyc_[z]];
      cur_ = z;
      ++cur_len_;
    }
    if (!dominance_ok() || uf_.comps - 1 > unassigned_) {
      undo(u);
      return false;
    }
    return true;
  }

  void undo(const Undo& u) {
    const int z = s1_[u.prev_cur];
    cur_ = u.prev_cur;
    cur_len_ = u.prev_len;
    if (u.closed_s1) {
      ++need1_[cur_len_];
    } else {
      in_cycle_[z] = 0;
      --touched_[cyc_[z]];
    }
    ++unassigned_;
    uf_.rollback();
    s1_[cur_] = -1;
    if (u.closed_psi) {
      int len = plen_[u.x];
      ++need_inf_[len];
      if (len >= 2) ++paths_[len];
    } else {
      --paths_[plen_[u.h]];
      other_[u.h] = u.old_h_other;
      other_[u.t] = u.old_t_other;
      plen_[u.h] = u.old_h_len;
      plen_[u.t] = u.old_t_len;
      if (plen_[u.x] >= 2) ++paths_[plen_[u.x]];
      if (plen_[z] >= 2) ++paths_[plen_[z]];
    }
  }

  void extend() {
    if (stopped_) return;
    ++nodes_;
    if (tasks_ && depth_ == split_depth_) {
      tasks_->push_back(*this);
      tasks_->back().tasks_ = nullptr;
      return;
    }
    if (cur_ < 0) {
      int y = 0;
      while (y < n_ && in_cycle_[y]) ++y;
      if (y == n_) {
        leaf();
        return;
      }
      in_cycle_[y] = 1;
      ++touched_[cyc_[y]];
      start_ = cur_ = y;
      cur_len_ = 1;
      extend();
      cur_ = -1;
      --touched_[cyc_[y]];
      in_cycle_[y] = 0;
      return;
    }
    const int start = start_;
    std::vector<int> cands;
    if (need1_[cur_len_] > 0) cands.push_back(start);
    if (cur_len_ < max_need(need1_)) {
      std::fill(offered_.begin(), offered_.end(), 0);
      for (int z = 0; z < n_; ++z) {
        if (in_cycle_[z]) continue;
        if (touched_[cyc_[z]] == 0) {
          // Untouched sigma0 cycles of equal length are interchangeable, and
          // so are the points of one such cycle.
          if (offered_[cyc_len_[z]]) continue;
          offered_[cyc_len_[z]] = 1;
        }
        cands.push_back(z);
      }
    }
    ++depth_;
    for (int z : cands) {
      Undo u;
      if (!apply(z, u)) continue;
      extend();
      start_ = start;
      undo(u);
      if (stopped_) break;
    }
    --depth_;
  }

  int n_;
  std::vector<int> a_, ainv_, cyc_, cyc_len_;
  std::vector<int> s1_;
  std::vector<char> in_cycle_;
  std::vector<int> touched_;
  std::vector<int> other_, plen_, paths_;
  std::vector<int> need1_, need_inf_;
  std::vector<char> offered_;
  RollbackUnionFind uf_;
  int unassigned_ = 0;
  int start_ = -1, cur_ = -1, cur_len_ = 0;
  int depth_ = 0, split_depth_ = -1;
  std::vector<Search>* tasks_ = nullptr;
  std::set<Dessin> found_;
  std::size_t nodes_ = 0;
  std::size_t limit_;
  bool stopped_ = false;
};

}  // namespace

EnumerateResult enumerate_dessins(const Passport& p, const EnumerateOptions& opt) {
  if (!p.balanced()) throw DessinError("passport columns have different sums");
  const int n = p.degree();
  if (n > opt.degree_bound)
    throw BoundExceeded("degree " + std::to_string(n) + " exceeds the enumeration bound " +
                        std::to_string(opt.degree_bound));
  EnumerateResult res;
  res.defect = hurwitz_defect(p);
  if (res.defect != 0) {
    res.status = EnumStatus::infeasible;
    return res;
  }
  const std::size_t limit = opt.limit.value_or(static_cast<std::size_t>(-1));
  Search root(p, limit);
  std::set<Dessin> all;
  if (!opt.parallel || opt.limit) {
    root.run(-1, nullptr);
    all = std::move(root.found());
    res.nodes = root.nodes();
    res.truncated = root.stopped();
  } else {
    const int threads = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
    std::vector<Search> tasks;
    for (int depth = 1; depth <= n; ++depth) {
      tasks.clear();
      Search probe = root;
      probe.run(depth, &tasks);
      all.insert(probe.found().begin(), probe.found().end());
      if (tasks.size() >= static_cast<std::size_t>(8 * threads) || tasks.empty()) break;
    }
    std::vector<std::size_t> nodes(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      tasks[i].run(-1, nullptr);
      nodes[i] = tasks[i].nodes();
    }
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      all.insert(tasks[i].found().begin(), tasks[i].found().end());
      res.nodes += nodes[i];
    }
  }
  res.dessins.assign(all.begin(), all.end());
  if (opt.limit && res.dessins.size() > *opt.limit) res.dessins.resize(*opt.limit);
  res.status = res.dessins.empty() ? EnumStatus::none_found : EnumStatus::found;
  return res;
}

std::size_t count_dessins(const Passport& p, const EnumerateOptions& opt) {
  return enumerate_dessins(p, opt).dessins.size();
}

}  // namespace belyi
