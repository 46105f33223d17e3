#include "belyi/glue.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace belyi {

namespace {

// Merges the cycles of p through the anchors: reads each starting at its anchor.
std::vector<int> splice(std::vector<int> img, const std::vector<int>& anchors) {
  const int n = static_cast<int>(img.size());
  std::vector<int> pre(n);
  for (int x = 0; x < n; ++x) pre[img[x]] = x;
  // cycle i runs anchors[i] .. pre[anchors[i]]; link each tail to the next head
  std::vector<int> tails;
  for (int a : anchors) tails.push_back(pre[a]);
  const size_t m = anchors.size();
  for (size_t i = 0; i < m; ++i) img[tails[i]] = anchors[(i + 1) % m];
  return img;
}

int cycle_id_of(const std::vector<std::vector<int>>& cycles, int x) {
  for (size_t i = 0; i < cycles.size(); ++i)
    if (std::find(cycles[i].begin(), cycles[i].end(), x) != cycles[i].end()) return static_cast<int>(i);
  return -1;
}

void check_edge(const Dessin& d, int e, const char* what) {
  if (e < 0 || e >= d.degree()) throw GlueError(std::string(what) + " edge out of range");
}

}  // namespace

Dessin glue_white(const Dessin& d, const std::vector<int>& vertices, const std::vector<int>& anchors) {
  if (vertices.size() != anchors.size()) throw GlueError("need one anchor per vertex");
  auto cycles = d.sigma0().cycles();
  std::set<int> seen;
  for (size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= static_cast<int>(cycles.size())) throw GlueError("no white vertex " + std::to_string(v));
    if (!seen.insert(v).second) throw GlueError("white vertex " + std::to_string(v) + " listed twice");
    check_edge(d, anchors[i], "anchor");
    if (cycle_id_of(cycles, anchors[i]) != v)
      throw GlueError("anchor " + std::to_string(anchors[i] + 1) + " is not on white vertex " + std::to_string(v));
  }
  if (vertices.size() < 2) return d;
  return Dessin(Perm(splice(d.sigma0().images(), anchors)), d.sigma1());
}

Dessin glue_white_at(const Dessin& d, const std::vector<int>& anchors) {
  auto cycles = d.sigma0().cycles();
  std::vector<int> vertices;
  for (int a : anchors) {
    check_edge(d, a, "anchor");
    vertices.push_back(cycle_id_of(cycles, a));
  }
  return glue_white(d, vertices, anchors);
}

Dessin glue_face_corners(const Dessin& d, int x, const std::vector<int>& positions) {
  check_edge(d, x, "face");
  Perm inf = d.sigma_inf(), inv0 = d.sigma0().inverse();
  std::vector<int> face{x};
  for (int y = inf(x); y != x; y = inf(y)) face.push_back(y);
  const int len = static_cast<int>(face.size());
  std::vector<int> anchors;
  for (int i : positions) {
    if (i < 0 || i >= len) throw GlueError("corner " + std::to_string(i) + " is outside the face");
    anchors.push_back(inv0(face[i]));
  }
  return glue_white_at(d, anchors);
}

Dessin glue_face_corners(const Dessin& d, int x, int step, int first) {
  check_edge(d, x, "face");
  if (step < 1) throw GlueError("corner step must be positive");
  int len = 1;
  Perm inf = d.sigma_inf();
  for (int y = inf(x); y != x; y = inf(y)) ++len;
  if (len % step != 0) throw GlueError("face length " + std::to_string(len) + " is not a multiple of the step");
  std::vector<int> positions;
  for (int i = ((first % step) + step) % step; i < len; i += step) positions.push_back(i);
  return glue_face_corners(d, x, positions);
}

Dessin reroute_edge(const Dessin& d, int e, int white_after, int black_after) {
  check_edge(d, e, "rerouted");
  check_edge(d, white_after, "white anchor");
  check_edge(d, black_after, "black anchor");
  auto move = [&](const Perm& p, int after, const char* which) {
    auto cycles = p.cycles();
    if (cycle_id_of(cycles, after) != cycle_id_of(cycles, e))
      throw GlueError(std::string(which) + " anchor is not at the edge's vertex");
    std::vector<int> img = p.images();
    if (after == e || img[e] == e) return Perm(std::move(img));
    int before = 0;
    while (img[before] != e) ++before;
    img[before] = img[e];  // take e out
    img[e] = img[after];
    img[after] = e;
    return Perm(std::move(img));
  };
  return Dessin(move(d.sigma0(), white_after, "white"), move(d.sigma1(), black_after, "black"));
}

Dessin swap_0_1(const Dessin& d) { return Dessin(d.sigma1(), d.sigma0()); }
Dessin swap_1_inf(const Dessin& d) { return Dessin(d.sigma0(), d.sigma_inf()); }
Dessin swap_0_inf(const Dessin& d) { return Dessin(d.sigma_inf(), d.sigma1()); }

void require_planar(const Dessin& d, const std::string& what) {
  if (!is_transitive(d)) throw GlueError(what + ": result is disconnected");
  if (int g = genus(d); g != 0) throw GlueError(what + ": result has genus " + std::to_string(g));
}

Motif chain(const Motif& a, const Motif& b) {
  if (a.out.size() != b.in.size())
    throw GlueError("port arity mismatch: " + std::to_string(a.out.size()) + " out-ports against " +
                    std::to_string(b.in.size()) + " in-ports");
  const int na = a.body.degree();
  const int n = na + b.body.degree();
  std::vector<int> s0(n), s1(n);
  for (int x = 0; x < na; ++x) {
    s0[x] = a.body.sigma0()(x);
    s1[x] = a.body.sigma1()(x);
  }
  for (int x = 0; x < b.body.degree(); ++x) {
    s0[na + x] = na + b.body.sigma0()(x);
    s1[na + x] = na + b.body.sigma1()(x);
  }
  for (size_t j = 0; j < a.out.size(); ++j) {
    int p = a.out[j], q = na + b.in[j];
    // both must still be on different black vertices
    int x = s1[p];
    while (x != p && x != q) x = s1[x];
    if (x == q) throw GlueError("ports " + std::to_string(j) + " are already joined");
    s1 = splice(std::move(s1), {p, q});
  }
  Motif r{Dessin(Perm(std::move(s0)), Perm(std::move(s1))), a.in, {}};
  for (int q : b.out) r.out.push_back(na + q);
  return r;
}

Motif repeat_block(const Motif& m, int k) {
  if (k < 0) throw GlueError("negative repeat count");
  if (m.in.size() != m.out.size()) throw GlueError("port arity mismatch between in- and out-ports");
  Motif r = m;
  for (int i = 0; i < k; ++i) r = chain(r, m);
  return r;
}

int PlaneBuilder::black(double x, double y) {
  nodes_.push_back({false, x, y});
  return node_count() - 1;
}

int PlaneBuilder::white(double x, double y) {
  nodes_.push_back({true, x, y});
  return node_count() - 1;
}

int PlaneBuilder::link(int a, int b, double bend) {
  if (nodes_.at(a).white || nodes_.at(b).white) throw GlueError("link joins two black vertices");
  double dx = nodes_[b].x - nodes_[a].x, dy = nodes_[b].y - nodes_[a].y;
  double len = std::hypot(dx, dy);
  if (len == 0) throw GlueError("link between coincident vertices");
  int m = white((nodes_[a].x + nodes_[b].x) / 2 - dy / len * bend, (nodes_[a].y + nodes_[b].y) / 2 + dx / len * bend);
  edge(m, a);
  edge(m, b);
  return m;
}

int PlaneBuilder::edge(int w, int b, double bend) {
  if (!nodes_.at(w).white || nodes_.at(b).white) throw GlueError("edge joins a white and a black vertex");
  double dx = nodes_[b].x - nodes_[w].x, dy = nodes_[b].y - nodes_[w].y;
  double len = std::hypot(dx, dy);
  if (len == 0) throw GlueError("edge between coincident vertices");
  edges_.push_back({w, b, (nodes_[w].x + nodes_[b].x) / 2 - dy / len * bend,
                    (nodes_[w].y + nodes_[b].y) / 2 + dx / len * bend});
  return edge_count() - 1;
}

int PlaneBuilder::stub(int b, double angle) {
  double t = angle * std::numbers::pi / 180;
  int w = white(nodes_.at(b).x + 0.3 * std::cos(t), nodes_[b].y + 0.3 * std::sin(t));
  return edge(w, b);
}

double PlaneBuilder::direction(int e, int v) const {
  const Edge& ed = edges_[e];
  double a = std::atan2(ed.cy - nodes_[v].y, ed.cx - nodes_[v].x) * 180 / std::numbers::pi;
  return a < 0 ? a + 360 : a;
}

int PlaneBuilder::anchor(int v, double angle) const {
  angle = std::fmod(std::fmod(angle, 360) + 360, 360);
  int best = -1;
  double best_turn = 1e9;
  for (int e = 0; e < edge_count(); ++e) {
    if (edges_[e].w != v && edges_[e].b != v) continue;
    double turn = std::fmod(direction(e, v) - angle + 720, 360);
    if (turn < best_turn) {
      best_turn = turn;
      best = e;
    }
  }
  if (best < 0) throw GlueError("vertex has no edges");
  return best;
}

Dessin PlaneBuilder::build() const {
  const int n = edge_count();
  if (n == 0) throw GlueError("empty drawing");
  std::vector<std::vector<std::pair<double, int>>> around(nodes_.size());
  for (int e = 0; e < n; ++e) {
    around[edges_[e].w].push_back({direction(e, edges_[e].w), e});
    around[edges_[e].b].push_back({direction(e, edges_[e].b), e});
  }
  std::vector<int> s0(n), s1(n);
  for (size_t v = 0; v < nodes_.size(); ++v) {
    auto& l = around[v];
    std::sort(l.begin(), l.end());
    for (size_t i = 0; i < l.size(); ++i) {
      if (i + 1 < l.size() && l[i].first == l[i + 1].first)
        throw GlueError("two edges leave a vertex in the same direction");
      (nodes_[v].white ? s0 : s1)[l[i].second] = l[(i + 1) % l.size()].second;
    }
  }
  return Dessin(Perm(std::move(s0)), Perm(std::move(s1)));
}

}  // namespace belyi
