#include "belyi/families.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <cmath>
#include <numbers>
#include <set>

#include "belyi/blocks.hpp"
#include "belyi/glue.hpp"
#include "belyi/passport.hpp"

namespace belyi {

std::string status_name(GeneratorStatus s) {
  switch (s) {
    case GeneratorStatus::transcribed: return "transcribed";
    case GeneratorStatus::stored: return "stored";
    case GeneratorStatus::reconstructed: return "reconstructed";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Passport formulas

namespace {

class FormulaParser {
 public:
  FormulaParser(std::string_view s, FamilyParams p) : s_(s), p_(p) {}

  Passport parse() {
    skip();
    expect('[');
    Passport out;
    for (int c = 0; c < 3; ++c) {
      if (c > 0) expect(',');
      out.cols[c] = column();
    }
    expect(']');
    skip();
    if (i_ != s_.size()) fail("trailing text");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw FamilyError("bad passport formula '" + std::string(s_) + "': " + why);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  long number() {
    skip();
    size_t j = i_;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    if (j == i_) fail("expected a number");
    long v = std::stol(std::string(s_.substr(i_, j - i_)));
    i_ = j;
    return v;
  }
  // sum of terms c, ck, cl, k, l
  long expr() {
    long total = 0;
    int sign = 1;
    bool first = true;
    while (true) {
      skip();
      if (peek('+') || peek('-')) {
        sign = s_[i_] == '-' ? -1 : 1;
        ++i_;
      } else if (!first) {
        return total;
      }
      skip();
      long coef = 1;
      bool had_number = false;
      if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        coef = number();
        had_number = true;
      }
      long value = coef;
      if (peek('k')) {
        ++i_;
        value = coef * p_.k;
      } else if (peek('l')) {
        ++i_;
        value = coef * p_.l;
      } else if (!had_number) {
        fail("expected a term");
      }
      total += sign * value;
      sign = 1;
      first = false;
    }
  }
  long atom(char open, char close) {
    if (peek(open)) {
      ++i_;
      long v = expr();
      expect(close);
      return v;
    }
    if (peek('k')) {
      ++i_;
      return p_.k;
    }
    if (peek('l')) {
      ++i_;
      return p_.l;
    }
    return number();
  }
  Partition column() {
    std::vector<int> parts;
    bool any = false;
    while (!peek(',') && !peek(']')) {
      long base = atom('(', ')');
      long mult = 1;
      if (peek('^')) {
        ++i_;
        mult = atom('{', '}');
      }
      if (base < 1 || mult < 0) throw FamilyError("formula '" + std::string(s_) + "' is negative at these parameters");
      if (base * mult > kMaxDegree) throw FamilyError("formula degree too large");
      parts.insert(parts.end(), mult, static_cast<int>(base));
      any = true;
    }
    if (!any) fail("empty column");
    if (parts.empty()) throw FamilyError("formula '" + std::string(s_) + "' has an empty column at these parameters");
    return make_partition(std::move(parts));
  }

  std::string_view s_;
  FamilyParams p_;
  size_t i_ = 0;
};

}  // namespace

Passport eval_passport_formula(std::string_view formula, FamilyParams p) { return FormulaParser(formula, p).parse(); }

// ---------------------------------------------------------------------------
// Generators

namespace {

constexpr double kLeft = 180;

// Pendant white vertex at b pointing at (x, y).
void stub_to(PlaneBuilder& g, int b, double x, double y) {
  g.stub(b, std::atan2(y - g.y(b), x - g.x(b)) * 180 / std::numbers::pi);
}

void links(PlaneBuilder& g, std::initializer_list<std::pair<int, int>> l) {
  for (auto [p, q] : l) g.link(p, q);
}

// The A5 strip. One copy has three port vertices on each side, nine inner
// vertices and 30 links; it is drawn with black = points over infinity, and
// every vertex has degree 5 once its neighbours are attached. Copies are
// chained right to left, 6 units apart.
//
// A right cap is drawn in the coordinates of the next copy to the right and
// returns the out-ports of the copy before it: top, middle, bottom, with a
// bend for the link reaching each. Port -1 puts a pendant white vertex there.
struct OutPorts {
  std::array<int, 3> v;
  std::array<double, 3> bend{};
};
using RightCap = std::function<OutPorts(PlaneBuilder&, double)>;
// A left cap receives the in-ports top, middle, bottom of the last copy and is
// drawn in that copy's coordinates.
using LeftCap = std::function<void(PlaneBuilder&, std::array<int, 3>, double)>;

std::array<int, 3> a5_strip(PlaneBuilder& g, double dx, const OutPorts& out) {
  auto B = [&](double x, double y) { return g.black(x + dx, y); };
  int a1 = B(0, 0), a2 = B(0, 1), a3 = B(0, -1), a4 = B(1, 0.5), a5 = B(1, -0.5);
  int a6 = B(2, 0), a7 = B(2, 1), a8 = B(2, -1), a9 = B(-1, 0);
  int c1 = B(-2, 1), c3 = B(-3, 0), c2 = B(-2, -1);
  auto port = [&](int from, int i, double x, double y) {
    if (out.v[i] < 0)
      stub_to(g, from, x + dx, y);
    else
      g.link(from, out.v[i], out.bend[i]);
  };
  port(a7, 0, 4, 1);
  port(a7, 1, 3, 0);
  if (out.v[1] >= 0) {
    g.link(out.v[1], a6);
    g.link(out.v[1], a8);
  }
  port(a8, 2, 4, -1);
  links(g, {{a7, a2}, {a7, a4}, {a6, a4}, {a6, a5}, {a8, a5}, {a8, a3}, {a4, a2}, {a4, a1}, {a4, a5}, {a5, a1},
            {a5, a3}, {a6, a7}, {a6, a8}, {a1, a2}, {a1, a3}, {a9, a2}, {a9, a1}, {a9, a3}, {c1, a9}, {c2, a9},
            {c1, c2}, {c1, c3}, {c2, c3}, {c1, a2}, {c2, a3}});
  return {c1, c3, c2};
}

PlaneBuilder a5_chain(int copies, const RightCap& right, const LeftCap& left) {
  PlaneBuilder g;
  OutPorts ports = right(g, 6);
  double dx = 0;
  for (int j = 0; j < copies; ++j, dx -= 6) {
    auto in = a5_strip(g, dx, ports);
    ports = OutPorts{in};
  }
  left(g, ports.v, dx + 6);
  return g;
}

// Right caps.

// The outer out-ports become one vertex X joined twice to the middle one,
// with a pendant white vertex between the two links.
OutPorts cap_pinch(PlaneBuilder& g, double dx) {
  int x = g.black(-1 + dx, 0), y = g.black(-3 + dx, 0);
  g.link(x, y, 0.2);
  g.link(x, y, -0.2);
  g.stub(x, kLeft);
  return {{x, y, x}, {0.6, 0, -0.6}};
}

// Top and middle out-ports merged, the bottom one replaced by a pendant vertex.
OutPorts cap_fold(PlaneBuilder& g, double dx) {
  int y = g.black(-3 + dx, 0);
  stub_to(g, y, -3.3 + dx, 0.7);
  return {{y, y, -1}, {0.5, 0, 0}};
}

// The ports closed by a triangle.
std::array<int, 3> cap_triangle(PlaneBuilder& g, double dx) {
  int c1 = g.black(-2 + dx, 1), c3 = g.black(-3 + dx, 0), c2 = g.black(-2 + dx, -1);
  links(g, {{c1, c2}, {c1, c3}, {c2, c3}});
  return {c1, c3, c2};
}

OutPorts cap_triangle_digon(PlaneBuilder& g, double dx) {
  auto [c1, c3, c2] = cap_triangle(g, dx);
  g.link(c1, c2, 1);
  stub_to(g, c1, -1.5 + dx, 0);
  stub_to(g, c2, -1 + dx, -1);
  return {{c1, c3, c2}};
}

// Triangle followed by a1..a4; with_wing adds a5, a6.
OutPorts cap_triangle_fan(PlaneBuilder& g, double dx, bool with_wing) {
  auto [c1, c3, c2] = cap_triangle(g, dx);
  int a1 = g.black(-1 + dx, 0), a2 = g.black(dx, 1), a3 = g.black(dx, 0), a4 = g.black(dx, -1);
  links(g, {{c1, a1}, {c2, a1}, {c1, a2}, {c2, a4}, {a1, a2}, {a1, a3}, {a1, a4}, {a2, a3}, {a3, a4}});
  if (!with_wing) {
    g.link(a2, a3, 1);
    g.link(a3, a4, 1);
    stub_to(g, a2, 0.7 + dx, 0.5);
    stub_to(g, a4, 0.7 + dx, -0.5);
  } else {
    int a5 = g.black(1 + dx, 0.5), a6 = g.black(1 + dx, -0.5);
    links(g, {{a5, a2}, {a5, a3}, {a6, a3}, {a6, a4}, {a5, a6}});
    g.link(a2, a5, 0.5);
    g.link(a6, a4, 0.5);
    stub_to(g, a5, 0.4 + dx, 1);
    stub_to(g, a6, 0.4 + dx, -1);
  }
  return {{c1, c3, c2}};
}

Dessin a5_case4(int k, const LeftCap& left) { return swap_1_inf(a5_chain(k, cap_pinch, left).build()); }

// Left caps close the strip at its in-ports (top, middle, bottom) and carry
// the two remaining pendant vertices. Coordinates are relative to a strip copy
// at offset dx.
void cap_5_6(PlaneBuilder& g, std::array<int, 3> in, double dx) {
  auto [c1, c3, c2] = in;
  int a10 = g.black(-4 + dx, 1), a11 = g.black(-4 + dx, -1), a12 = g.black(-5 + dx, 0);
  g.link(a10, c1);
  g.link(a10, c3);
  g.link(a11, c2);
  g.link(a11, c3);
  g.link(a12, a10);
  g.link(a12, a11);
  g.link(a12, c3);
  g.link(a12, a10, 0.8);
  g.link(a12, a11, -0.8);
  stub_to(g, a10, -4.8 + dx, 0.8);
  stub_to(g, a11, -4.8 + dx, -0.8);
}

// Five vertices shared by the 7/6, 11/6 and 13/6 caps.
std::array<int, 5> cap_core(PlaneBuilder& g, std::array<int, 3> in, double dx) {
  auto [c1, c3, c2] = in;
  int a10 = g.black(-4.5 + dx, 0), a11 = g.black(-4.5 + dx, 1), a12 = g.black(-4.5 + dx, -1);
  int a13 = g.black(-5.5 + dx, 0.5), a14 = g.black(-5.5 + dx, -0.5);
  for (auto [p, q] : {std::pair{a11, c1}, {a11, c3}, {a12, c2}, {a12, c3}, {a10, a11}, {a10, a12}, {a10, c3},
                      {a13, a11}, {a13, a10}, {a14, a10}, {a14, a12}, {a13, a14}})
    g.link(p, q);
  return {a10, a11, a12, a13, a14};
}

void cap_7_6(PlaneBuilder& g, std::array<int, 3> in, double dx) {
  auto [a10, a11, a12, a13, a14] = cap_core(g, in, dx);
  g.link(a13, a11, 0.7);
  g.link(a14, a12, -0.7);
  stub_to(g, a13, -5 + dx, 1.1);
  stub_to(g, a14, -5 + dx, -1.1);
}

// Adds the ring a15..a18 behind the core; returns a15, a16, a17, a18.
std::array<int, 4> cap_ring(PlaneBuilder& g, std::array<int, 3> in, double dx) {
  auto [a10, a11, a12, a13, a14] = cap_core(g, in, dx);
  int a15 = g.black(-6.5 + dx, 1), a16 = g.black(-6.5 + dx, 0), a17 = g.black(-6.5 + dx, -1);
  int a18 = g.black(-7.5 + dx, 0);
  for (auto [p, q] : {std::pair{a15, a11}, {a15, a13}, {a16, a14}, {a17, a14}, {a17, a12}, {a15, a16}, {a16, a17},
                      {a18, a15}, {a18, a16}, {a18, a17}, {a16, a13}})
    g.link(p, q);
  return {a15, a16, a17, a18};
}

void cap_11_6(PlaneBuilder& g, std::array<int, 3> in, double dx) {
  auto [a15, a16, a17, a18] = cap_ring(g, in, dx);
  g.link(a18, a17, -0.5);
  stub_to(g, a15, -7.5 + dx, 1);
  stub_to(g, a18, -7.2 + dx, -0.7);
}

void cap_13_6(PlaneBuilder& g, std::array<int, 3> in, double dx) {
  auto [a15, a16, a17, a18] = cap_ring(g, in, dx);
  int a19 = g.black(-8.5 + dx, 1), a20 = g.black(-8.5 + dx, -1);
  for (auto [p, q] : {std::pair{a19, a15}, {a19, a18}, {a20, a18}, {a20, a17}, {a19, a20}}) g.link(p, q);
  g.link(a19, a20, -0.7);
  stub_to(g, a19, -9 + dx, 0);
  stub_to(g, a20, -9.5 + dx, -1);
}

// Left cap shared by the lame n = k/4 family: one vertex folded twice onto
// the middle in-port.
void cap_fan_left(PlaneBuilder& g, std::array<int, 3> in, double dx) {
  auto [c1, c3, c2] = in;
  int a = g.black(-5 + dx, 0);
  g.link(a, c1, 0.3);
  g.link(a, c3, 0.3);
  g.link(a, c2, -0.3);
  g.link(a, c3, -0.3);
  stub_to(g, a, -6 + dx, 0);
  stub_to(g, c3, -4 + dx, 0);
}

Dessin a5_case6(int k, const RightCap& right) { return swap_1_inf(a5_chain(k + 1, right, cap_fan_left).build()); }

// Glues every third white corner of the longest face. Of the three residue
// classes, the one meeting exactly one pendant white vertex is taken.
Dessin glue_outer_face(const Dessin& drawn) {
  auto faces = drawn.sigma_inf().cycles();
  const auto& outer = *std::max_element(faces.begin(), faces.end(),
                                        [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (int r = 0; r < 3; ++r) {
    int pendant = 0;
    for (size_t i = r; i < outer.size(); i += 3) pendant += drawn.sigma0()(outer[i]) == outer[i];
    if (pendant == 1) return glue_face_corners(drawn, outer[0], 3, r);
  }
  throw FamilyError("outer face has no corner class with one pendant vertex");
}

// Glues count white corners of the longest face, gap apart, taking the first
// start whose corners hold exactly `pendants` pendant vertices and no white
// vertex twice.
Dessin glue_run(const Dessin& d, int gap, int count, int pendants) {
  auto faces = d.sigma_inf().cycles();
  const auto& outer = *std::max_element(faces.begin(), faces.end(),
                                        [](const auto& a, const auto& b) { return a.size() < b.size(); });
  const int len = static_cast<int>(outer.size());
  if ((count - 1) * gap >= len) throw FamilyError("outer face too short for the gluing");
  Perm inv0 = d.sigma0().inverse();
  std::vector<int> white_of(d.degree(), -1);
  for (const auto& c : d.sigma0().cycles())
    for (int x : c) white_of[x] = c.front();
  for (int s = 0; s < len; ++s) {
    std::vector<int> pos;
    std::set<int> whites;
    int pend = 0;
    for (int i = 0; i < count; ++i) {
      int x = outer[(s + i * gap) % len], a = inv0(x);
      pend += a == x;
      whites.insert(white_of[a]);
      pos.push_back((s + i * gap) % len);
    }
    if (pend != pendants || static_cast<int>(whites.size()) != count) continue;
    std::sort(pos.begin(), pos.end());
    return glue_face_corners(d, outer[0], pos);
  }
  throw FamilyError("no run of corners with the wanted pendant count");
}

// Glues white corners of the longest face into two vertices: a + 1 corners
// 3 apart, then b + 1 more starting one corner later, with len = 3(a + b + 1).
// Each run holds exactly one pendant; the face falls apart into triangles.
Dessin glue_two_runs(const Dessin& d, int a) {
  auto faces = d.sigma_inf().cycles();
  const auto& outer = *std::max_element(faces.begin(), faces.end(),
                                        [](const auto& x, const auto& y) { return x.size() < y.size(); });
  const int len = static_cast<int>(outer.size());
  const int b = len / 3 - 1 - a;
  if (len % 3 != 0 || a < 0 || b < 0) throw FamilyError("outer face does not split into two runs");
  Perm inv0 = d.sigma0().inverse();
  std::vector<int> white_of(d.degree(), -1);
  for (const auto& c : d.sigma0().cycles())
    for (int x : c) white_of[x] = c.front();
  for (int s = 0; s < len; ++s) {
    std::array<std::vector<int>, 2> runs;
    std::set<int> whites;
    int pend[2] = {0, 0};
    for (int i = 0; i <= a + b + 1; ++i) {
      const int at = i <= a ? i : i - a - 1;
      const int pos = (s + (i <= a ? 3 * at : 3 * a + 1 + 3 * at)) % len;
      const int anchor = inv0(outer[pos]);
      pend[i > a] += anchor == outer[pos];
      whites.insert(white_of[anchor]);
      runs[i > a].push_back(anchor);
    }
    if (pend[0] != 1 || pend[1] != 1 || static_cast<int>(whites.size()) != a + b + 2) continue;
    return glue_white_at(glue_white_at(d, runs[0]), runs[1]);
  }
  throw FamilyError("no pair of runs with one pendant each");
}

// A digon on c1-c3 holding one of c3's two pendant vertices.
void cap_digon_left(PlaneBuilder& g, std::array<int, 3> in, double) {
  auto [c1, c3, c2] = in;
  g.link(c1, c3, -0.4);
  g.stub(c3, 60);
  g.stub(c3, kLeft);
  g.stub(c2, 225);
}

// Triangle with a second c1-c2 link outside; c1's pendant vertex sits in the digon.
OutPorts cap_triangle_digon_right(PlaneBuilder& g, double dx) {
  auto [c1, c3, c2] = cap_triangle(g, dx);
  g.link(c1, c2, 0.5);
  g.stub(c1, 284);
  g.stub(c2, 300);
  return {{c1, c3, c2}};
}

Dessin a5_case7a(int k) {
  return swap_1_inf(glue_outer_face(a5_chain(k, cap_triangle_digon_right, cap_digon_left).build()));
}

Dessin a5_case7b(int k) {
  auto wing = [](PlaneBuilder& g, double dx) { return cap_triangle_fan(g, dx, true); };
  return swap_1_inf(glue_outer_face(a5_chain(k, wing, cap_digon_left).build()));
}

// Ladder of k squares; pendant vertices on the two free corners and inside
// the closing triangle.
Dessin bm_case1(int k) {
  PlaneBuilder g;
  if (k == 0) {
    int c = g.black(0, 0);
    for (double a : {0, 120, 240}) g.stub(c, a);
    return g.build();
  }
  std::vector<int> t, b;
  for (int i = 0; i < k; ++i) {
    t.push_back(g.black(i, 1));
    b.push_back(g.black(i, 0));
    g.link(t[i], b[i]);
    if (i > 0) {
      g.link(t[i - 1], t[i]);
      g.link(b[i - 1], b[i]);
    }
  }
  int c = g.black(k, 0.5);
  g.link(t.back(), c);
  g.link(b.back(), c);
  g.stub(c, kLeft);
  g.stub(t[0], 135);
  g.stub(b[0], 225);
  return g.build();
}

// Strip of triangles, two per step of 2 in k, closed on the left by a digon
// (k even) or a vertex with a digon (k odd).
Dessin bm_case2(int k) {
  PlaneBuilder g;
  const int p = k / 2;
  std::vector<int> t, u;
  for (int i = 0; i <= p; ++i) {
    t.push_back(g.black(i, 0));
    u.push_back(g.black(i, -1));
    if (i > 0) {
      g.link(t[i - 1], t[i]);
      g.link(u[i - 1], u[i]);
      g.link(t[i - 1], u[i]);
      g.link(t[i], u[i]);
    }
  }
  int r = g.black(p + 1, -0.5);
  g.link(t[p], r);
  g.link(u[p], r);
  g.stub(t[p], p == 0 ? 90 : 17);
  g.link(t[0], u[0]);
  if (k % 2 == 0) {
    g.link(t[0], u[0], -0.6);
    g.stub(u[0], 117);
  } else {
    int x = g.black(-1, -0.5);
    g.link(t[0], x);
    g.link(x, u[0]);
    g.link(x, u[0], -0.4);
    g.stub(x, -45);
  }
  return swap_1_inf(g.build());
}

// Two rows of pentagons. Column i has t_i (row 0), u_i (row 1) and, half a
// step to the left, m_i (row -1) and b_i (row -2). The left end is closed by
// a u_0 - b_0 link around the outside with a pendant vertex on m_0. With
// extra set, m and b get one more vertex than t and u.
struct PentagonStrip {
  std::vector<int> t, u, m, b;
};

PentagonStrip pentagon_strip(PlaneBuilder& g, int c, bool extra) {
  PentagonStrip s;
  const int cm = extra ? c + 1 : c;
  for (int i = 0; i < cm; ++i) {
    if (i < c) {
      s.t.push_back(g.black(2 * i, 0));
      s.u.push_back(g.black(2 * i, 1));
    }
    s.m.push_back(g.black(2 * i - 1, -1));
    s.b.push_back(g.black(2 * i - 1, -2));
  }
  for (int i = 0; i < c; ++i) {
    g.link(s.t[i], s.u[i]);
    if (i + 1 < c) g.link(s.u[i], s.u[i + 1]);
    g.link(s.t[i], s.m[i]);
    if (i + 1 < cm) g.link(s.t[i], s.m[i + 1]);
  }
  for (int i = 0; i < cm; ++i) {
    g.link(s.m[i], s.b[i]);
    if (i + 1 < cm) g.link(s.b[i], s.b[i + 1]);
  }
  g.link(s.u[0], s.b[0], -1.2);
  g.stub(s.m[0], kLeft);
  return s;
}

// Each column adds 2 to k; the right end differs with the parity of k.
Dessin bm_case3(int k) {
  PlaneBuilder g;
  if (k % 2 == 0) {
    const int c = (k + 2) / 2;
    auto s = pentagon_strip(g, c, true);
    int z = g.black(2 * c - 0.5, 0);
    g.link(s.u[c - 1], z);
    g.link(s.m[c], z);
    g.stub(z, kLeft);
    g.stub(s.b[c], 0);
  } else {
    const int c = (k + 3) / 2;
    auto s = pentagon_strip(g, c, false);
    g.stub(s.u[c - 1], 0);
    int z = g.black(2 * c - 1, -1);
    g.link(s.t[c - 1], z);
    g.link(s.b[c - 1], z);
    g.stub(z, kLeft);
  }
  return g.build();
}

// The pentagon strip ended by pendant vertices only.
Dessin bm2_case8a(int k) {
  PlaneBuilder g;
  auto s = pentagon_strip(g, k, true);
  for (int v : {s.u[k - 1], s.m[k], s.b[k]}) g.stub(v, 0);
  return g.build();
}

Dessin bm2_case8b(int k) {
  PlaneBuilder g;
  auto s = pentagon_strip(g, k + 1, false);
  for (int v : {s.u[k], s.t[k], s.b[k]}) g.stub(v, 0);
  return g.build();
}

// Chain of k/2 blocks of four squares behind a two-vertex tail; odd k ends
// in a square with an outer digon.
struct Drawn {
  Dessin d;
  int mark;  // an edge the caller refers to
};

Drawn bm2_case1_drawn(int k) {
  PlaneBuilder g;
  int a18 = g.black(0, 0), a17 = g.black(1, 0);
  g.link(a17, a18);
  g.stub(a18, 90);
  g.stub(a18, 270);
  const int tail = g.stub(a17, 90);
  int last = a17;
  double x = 2;
  for (int j = 0; j < k / 2; ++j, x += 4) {
    int a1 = g.black(x, 0), a5 = g.black(x + 0.5, 1), a7 = g.black(x + 0.5, -1), a2 = g.black(x + 1, 0);
    int a3 = g.black(x + 2, 0), a6 = g.black(x + 2.5, 1), a8 = g.black(x + 2.5, -1), a4 = g.black(x + 3, 0);
    links(g, {{last, a1}, {a1, a5}, {a1, a7}, {a5, a2}, {a7, a2}, {a5, a6}, {a2, a3}, {a7, a8}, {a3, a6}, {a3, a8},
              {a6, a4}, {a8, a4}});
    last = a4;
  }
  if (k % 2 == 1) {
    int a19 = g.black(x, 0), a21 = g.black(x + 0.5, 1), a22 = g.black(x + 0.5, -1), a20 = g.black(x + 1, 0);
    links(g, {{last, a19}, {a19, a21}, {a19, a22}, {a21, a20}, {a22, a20}});
    g.link(a21, a22, 1.5);
    last = a20;
  }
  g.stub(last, 0);
  return {g.build(), tail};
}

Dessin bm2_case1(int k) { return bm2_case1_drawn(k).d; }

// The case-1 dessin with k + 2 white corners of its outer face glued, starting
// at the tail's pendant vertex: the outer face splits into one 2-face and
// k + 1 4-faces.
Dessin bm2_case3(int k) {
  const Drawn b = bm2_case1_drawn(k);
  const Dessin& d = b.d;
  const int tail = b.mark;
  auto faces = d.sigma_inf().cycles();
  for (const auto& f : faces) {
    auto at = std::find(f.begin(), f.end(), tail);
    if (at == f.end()) continue;
    std::vector<int> pos{0};
    for (int j = 0; j <= k; ++j) pos.push_back(2 + 4 * j);
    return glue_face_corners(d, *at, pos);
  }
  throw FamilyError("tail vertex not found");
}

// Zigzag strip v_0 .. v_{m-1}: v_i joined to v_{i+1} and v_{i+2}, so every
// inner vertex has degree 4 and the m - 2 inner faces are triangles.
std::vector<int> zigzag(PlaneBuilder& g, int m) {
  std::vector<int> v;
  for (int i = 0; i < m; ++i) {
    v.push_back(g.black(i, i % 2 == 0 ? 0 : -1));
    if (i >= 1) g.link(v[i - 1], v[i]);
    if (i >= 2) g.link(v[i - 2], v[i]);
  }
  return v;
}

// Zigzag of k vertices; the last pair also bounds a digon around a pendant
// vertex. Drawn with black = points over infinity; mark is the first pendant
// edge on the left.
Drawn bm2_case2_drawn(int k) {
  PlaneBuilder g;
  if (k == 1) {
    int v = g.black(0, 0);
    const int mark = g.stub(v, kLeft);
    for (double a : {0, 90, 270}) g.stub(v, a);
    return {g.build(), mark};
  }
  auto v = zigzag(g, k);
  const int mark = g.stub(v[0], 135);
  g.stub(v[0], 225);
  g.stub(v[1], 250);
  int a = v[k - 2], b = v[k - 1];
  double bend = g.y(b) < g.y(a) ? 0.6 : -0.6;
  int bent = g.link(a, b, bend);
  // aim between the straight link's midpoint and the bent one
  stub_to(g, b, (g.x(a) + g.x(b) + g.x(bent) * 2) / 4, (g.y(a) + g.y(b) + g.y(bent) * 2) / 4);
  return {g.build(), mark};
}

Dessin bm2_case2(int k) { return swap_1_inf(bm2_case2_drawn(k).d); }

// Zigzag of m vertices closed by a degree-2 vertex on each end.
Dessin zigzag_capped(int m) {
  PlaneBuilder g;
  if (m == 0) {
    int x = g.black(0, 0), y = g.black(1, 0);
    g.link(x, y);
    g.stub(x, kLeft);
    g.stub(y, 0);
    return swap_1_inf(g.build());
  }
  if (m == 1) {
    int v = g.black(0, 0), x = g.black(0, -1), y = g.black(1, 0);
    links(g, {{x, v}, {v, y}, {x, y}});
    g.stub(v, 90);
    g.stub(v, kLeft);
    return swap_1_inf(g.build());
  }
  auto v = zigzag(g, m);
  int x = g.black(0, -1);
  g.link(x, v[0]);
  g.link(x, v[1]);
  const bool top = (m - 1) % 2 == 0;
  int y = g.black(m - 1, top ? -1 : 0);
  g.link(y, v[m - 2]);
  g.link(y, v[m - 1]);
  g.stub(v[0], 135);
  g.stub(v[m - 1], top ? 45 : -45);
  return swap_1_inf(g.build());
}

// Ladder of k - 1 squares closed by a triangle with a pendant vertex on the
// right and a digon on the left. mark is the pendant edge at the far left.
Drawn bm2_case5_drawn(int k) {
  PlaneBuilder g;
  const int m = k - 1;
  int p = g.black(-1, 0), q = g.black(-2, 0);
  g.link(p, q, 0.3);
  g.link(p, q, -0.3);
  const int mark = g.stub(q, kLeft);
  if (m == 0) {
    int r = g.black(0.5, 0);
    g.link(p, r);
    g.stub(r, 45);
    g.stub(r, -45);
    return {g.build(), mark};
  }
  std::vector<int> t, u;
  for (int i = 0; i < m; ++i) {
    t.push_back(g.black(i, 0));
    u.push_back(g.black(i, -1));
    g.link(t[i], u[i]);
    if (i > 0) {
      g.link(t[i - 1], t[i]);
      g.link(u[i - 1], u[i]);
    }
  }
  g.link(p, t[0]);
  g.stub(u[0], kLeft);
  int r = g.black(m + 0.5, -0.5);
  g.link(t[m - 1], r);
  g.link(u[m - 1], r);
  g.stub(r, kLeft);
  return {g.build(), mark};
}

Dessin bm2_case5(int k) { return bm2_case5_drawn(k).d; }

// Glues count white corners, gap apart, of the largest face at the white
// vertex of edge e, starting with that vertex.
Dessin glue_along(const Dessin& d, int e, int gap, int count) {
  Perm s0 = d.sigma0(), inf = d.sigma_inf();
  int best = -1, best_len = 0;
  int x = e;
  do {
    int len = 1;
    for (int y = inf(x); y != x; y = inf(y)) ++len;
    if (len > best_len) best = x, best_len = len;
    x = s0(x);
  } while (x != e);
  std::vector<int> pos;
  for (int i = 0; i < count; ++i) pos.push_back(i * gap);
  return glue_face_corners(d, best, pos);
}

// Ladder of r squares' worth of rungs with a pendant vertex at each corner.
Dessin pendant_ladder(int rungs) {
  PlaneBuilder g;
  std::vector<int> t, u;
  for (int i = 0; i < rungs; ++i) {
    t.push_back(g.black(i, 0));
    u.push_back(g.black(i, -1));
    g.link(t[i], u[i]);
    if (i > 0) {
      g.link(t[i - 1], t[i]);
      g.link(u[i - 1], u[i]);
    }
  }
  g.stub(t[0], kLeft);
  g.stub(u[0], kLeft);
  g.stub(t[rungs - 1], 0);
  g.stub(u[rungs - 1], 0);
  return g.build();
}

// One black vertex at the origin carrying closed paths (cycles) and open
// paths (lines) of alternating colour, all starting with a white vertex.
// Cycle lengths and line lengths count edges.
Dessin bouquet(const std::vector<int>& cycles, const std::vector<int>& lines) {
  PlaneBuilder g;
  const int c = g.black(0, 0);
  const int items = static_cast<int>(cycles.size() + lines.size());
  const double step = 2 * std::numbers::pi / items;
  int slot = 0;
  auto at = [](double r, double a) { return std::pair{r * std::cos(a), r * std::sin(a)}; };
  for (int len : cycles) {
    const double a = step * slot++;
    int prev = c;
    for (int i = 1; i < len; ++i) {
      // out along a - step/4, back along a + step/4
      const int half = len / 2;
      double r = i <= half ? i : len - i;
      double ang = i <= half ? a - step / 4 : a + step / 4;
      if (i == half) r += 0.5, ang = a;
      auto [x, y] = at(r, ang);
      const bool white = i % 2 == 1;
      int v = white ? g.white(x, y) : g.black(x, y);
      white ? g.edge(v, prev) : g.edge(prev, v);
      prev = v;
    }
    g.edge(prev, c);
  }
  for (int len : lines) {
    const double a = step * slot++;
    int prev = c;
    for (int i = 1; i <= len; ++i) {
      auto [x, y] = at(i, a);
      const bool white = i % 2 == 1;
      int v = white ? g.white(x, y) : g.black(x, y);
      white ? g.edge(v, prev) : g.edge(prev, v);
      prev = v;
    }
  }
  return g.build();
}

}  // namespace

Motif a5_strip_motif() {
  PlaneBuilder g;
  // stand-ins for the next copy's c1, c3, c2
  OutPorts ghost{{g.black(4, 1), g.black(3, 0), g.black(4, -1)}};
  auto in = a5_strip(g, 0, ghost);
  Motif m{g.build(), {}, {}};
  for (int v : in) m.in.push_back(g.anchor(v, 180));
  for (int v : ghost.v) m.out.push_back(g.anchor(v, 90));
  return m;
}

// ---------------------------------------------------------------------------
// Registry

namespace {

struct Entry {
  FamilyInfo info;
  std::function<Dessin(FamilyParams)> build;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t;
    auto add = [&](FamilyInfo i, std::function<Dessin(FamilyParams)> b) { t.push_back({std::move(i), std::move(b)}); };
    add({.id = "BM.case4a",
         .exponents = "lame n = 5/6 + 2k, A5",
         .formula = "[1^3 2^{11+30k}, (4+6k)^1 3^{7+18k}, 5^{5+12k}]",
         .note = "k copies of the A5 strip between the two caps"},
        [](FamilyParams p) { return a5_case4(p.k, cap_5_6); });
    add({.id = "BM.case4b",
         .exponents = "lame n = 7/6 + 2k, A5",
         .formula = "[1^3 2^{16+30k}, (5+6k)^1 3^{10+18k}, 5^{7+12k}]",
         .note = "k copies of the A5 strip between the two caps"},
        [](FamilyParams p) { return a5_case4(p.k, cap_7_6); });
    add({.id = "BM.case4c",
         .exponents = "lame n = 11/6 + 2k, A5",
         .formula = "[1^3 2^{26+30k}, (7+6k)^1 3^{16+18k}, 5^{11+12k}]",
         .note = "k copies of the A5 strip between the two caps"},
        [](FamilyParams p) { return a5_case4(p.k, cap_11_6); });
    add({.id = "BM.case4d",
         .exponents = "lame n = 13/6 + 2k, A5",
         .formula = "[1^3 2^{31+30k}, (8+6k)^1 3^{19+18k}, 5^{13+12k}]",
         .note = "k copies of the A5 strip between the two caps"},
        [](FamilyParams p) { return a5_case4(p.k, cap_13_6); });
    add({.id = "BM.case1",
         .exponents = "lame n = (1 + 2k)/4, S4",
         .formula = "[1^3 2^{3k}, 3^{2k+1}, (2k+3)^1 4^k]",
         .note = "ladder of k squares"},
        [](FamilyParams p) { return bm_case1(p.k); });
    add({.id = "BM.case2",
         .exponents = "lame n = (5 + 2k)/6, S4",
         .formula = "[1^2 2^{2k+4}, (k+4)^1 3^{k+2}, 2^1 4^{k+2}]",
         .note = "strip of triangles; left end depends on the parity of k"},
        [](FamilyParams p) { return bm_case2(p.k); });
    add({.id = "BM.case3",
         .exponents = "lame n = (7 + 2k)/10, A5",
         .formula = "[1^3 2^{9+3k}, 3^{7+2k}, (6+k)^1 5^{3+k}]",
         .note = "two rows of pentagons; right end depends on the parity of k"},
        [](FamilyParams p) { return bm_case3(p.k); });
    add({.id = "BM2.case1",
         .exponents = "gen2 n = (1 + 2k)/4, G12",
         .formula = "[1^4 2^{6k+1}, 3^{4k+2}, (4k+6)^1 4^{2k}]",
         .k_min = 1,
         .primitive = true,
         .note = "chain of blocks of four squares"},
        [](FamilyParams p) { return bm2_case1(p.k); });
    add({.id = "BM2.case2",
         .exponents = "gen2 n = k/6, G12",
         .formula = "[1^4 2^{2k-2}, (k+3)^1 3^{k-1}, 4^k]",
         .k_min = 1,
         .note = "zigzag strip of triangles"},
        [](FamilyParams p) { return bm2_case2(p.k); });
    add({.id = "BM2.case3",
         .exponents = "gen2 n = (1 + 2k)/4, G13",
         .formula = "[1^3 (2k+3)^1 2^{5k}, 3^{4k+2}, 2^1 4^{3k+1}]",
         .k_min = 1,
         .primitive = true,
         .note = "the BM2.case1 dessin with k + 2 outer white vertices glued"},
        [](FamilyParams p) { return bm2_case3(p.k); });
    add({.id = "BM2.case4a",
         .exponents = "gen2 n = (1 + 2k)/6, G13",
         .formula = "[1^2 2^{4k+1}, (2k+4)^1 3^{2k}, 2^2 4^{2k}]",
         .note = "zigzag strip of 2k triangles between two degree-2 vertices"},
        [](FamilyParams p) { return zigzag_capped(2 * p.k); });
    add({.id = "BM2.case4b",
         .exponents = "gen2 n = k/3, G13",
         .formula = "[1^2 2^{4k-1}, (2k+3)^1 3^{2k-1}, 2^2 4^{2k-1}]",
         .k_min = 1,
         .note = "zigzag strip of 2k - 1 triangles between two degree-2 vertices"},
        [](FamilyParams p) { return zigzag_capped(2 * p.k - 1); });
    add({.id = "BM2.case5",
         .exponents = "gen2 n = (1 + 2k)/8, G13",
         .formula = "[1^3 2^{3k}, 3^{2k+1}, 2^1 (2k+5)^1 4^{k-1}]",
         .k_min = 1,
         .primitive = true,
         .note = "ladder of squares with a digon on the left"},
        [](FamilyParams p) { return bm2_case5(p.k); });
    add({.id = "BM2.case8a",
         .exponents = "gen2 n = (1 + 2k)/10, G22",
         .formula = "[1^4 2^{6k+1}, 3^{4k+2}, (6+2k)^1 5^{2k}]",
         .k_min = 1,
         .note = "k columns of the pentagon strip"},
        [](FamilyParams p) { return bm2_case8a(p.k); });
    add({.id = "BM2.case8b",
         .exponents = "gen2 n = (1 + k)/5, G22",
         .formula = "[1^4 2^{6k+4}, 3^{4k+4}, (7+2k)^1 5^{2k+1}]",
         .note = "k + 1 columns of the pentagon strip"},
        [](FamilyParams p) { return bm2_case8b(p.k); });
    const std::string strip_note = "k + 1 copies of the A5 strip between the two caps";
    add({.id = "BM2.case6a",
         .exponents = "gen2 n = 7/6 + k, A5",
         .formula = "[1^4 2^{33+30k}, (10+6k)^1 3^{20+18k}, 5^{14+12k}]",
         .primitive = true,
         .note = strip_note},
        [](FamilyParams p) { return a5_case6(p.k, cap_fold); });
    add({.id = "BM2.case6b",
         .exponents = "gen2 n = 4/3 + k, A5",
         .formula = "[1^4 2^{38+30k}, (11+6k)^1 3^{23+18k}, 5^{16+12k}]",
         .primitive = true,
         .note = strip_note},
        [](FamilyParams p) { return a5_case6(p.k, cap_triangle_digon); });
    add({.id = "BM2.case6c",
         .exponents = "gen2 n = 5/3 + k, A5",
         .formula = "[1^4 2^{48+30k}, (13+6k)^1 3^{29+18k}, 5^{20+12k}]",
         .primitive = true,
         .note = strip_note},
        [](FamilyParams p) { return a5_case6(p.k, [](PlaneBuilder& g, double dx) { return cap_triangle_fan(g, dx, false); }); });
    add({.id = "BM2.case6d",
         .exponents = "gen2 n = 11/6 + k, A5",
         .formula = "[1^4 2^{53+30k}, (14+6k)^1 3^{32+18k}, 5^{22+12k}]",
         .primitive = true,
         .note = strip_note},
        [](FamilyParams p) { return a5_case6(p.k, [](PlaneBuilder& g, double dx) { return cap_triangle_fan(g, dx, true); }); });
    add({.id = "BM2.case7",
         .exponents = "gen2 n = (1 + 2k)/4, A5",
         .formula = "[1^4 (2k+3)^1 2^{14k+4}, 3^{10k+5}, 5^{6k+3}]",
         .primitive = true,
         .note = "k/2 copies of the A5 strip (rounded down), then k + 2 white corners of the outer face glued"},
        [](FamilyParams p) { return p.k % 2 == 0 ? a5_case7a(p.k / 2) : a5_case7b(p.k / 2); });
    add({.id = "BM2.case1.pendant",
         .exponents = "gen2 n = (1 + 2k)/4, G12",
         .formula = "[1^4 2^{6k+1}, 3^{4k+2}, (4k+6)^1 4^{2k}]",
         .note = "ladder of 2k + 1 rungs with a pendant vertex at each corner; same passport as BM2.case1, "
                 "imprimitive"},
        [](FamilyParams p) { return pendant_ladder(2 * p.k + 1); });
    add({.id = "N0N1.bouquet",
         .exponents = "gen3 n0 = p/2 with p = 2k + 2, n1 = (2k + l + 2)/3, dihedral pullback with N' = 12",
         .formula = "[1^2 2^{14k+4l+13}, 1^1 (2k+3)^1 2^{13k+4l+12}, (16k+8l+28)^1 12^k]",
         .two_params = true,
         .note = "k cycles of 24 edges and lines of 1, 1 and 4k + 8l + 26 edges at one black vertex"},
        [](FamilyParams p) { return bouquet(std::vector<int>(p.k, 24), {1, 1, 4 * p.k + 8 * p.l + 26}); });
    add({.id = "N0N1.bouquet.odd",
         .exponents = "gen3 n0 = p/2 with p = 2k + 3, n1 = (2k + l + 3)/3, dihedral pullback with N' = 12",
         .formula = "[1^2 2^{14k+4l+20}, (2k+4)^1 2^{13k+4l+19}, (16k+8l+36)^1 12^k 6^1]",
         .two_params = true,
         .note = "k cycles of 24 edges, one of 12 and lines of 1 and 4k + 8l + 29 edges at one black vertex"},
        [](FamilyParams p) {
          std::vector<int> cycles(p.k, 24);
          cycles.push_back(12);
          return bouquet(cycles, {1, 4 * p.k + 8 * p.l + 29});
        });
    add({.id = "M3.case2",
         .exponents = "gen3 n0 = k, n1 = (2l + 1)/4, S4",
         .formula = "[1^3 (2k+1)^1 2^{5k+6l+1}, 3^{2+4k+4l}, (6+4l)^1 4^{2l+3k}]",
         .k_min = 1,
         .two_params = true,
         .primitive = true,
         .note = "BM2.case1 at k + l with k + 1 outer white corners glued, 4 apart"},
        [](FamilyParams p) {
          Drawn b = bm2_case1_drawn(p.k + p.l);
          return glue_along(b.d, b.mark, 4, p.k + 1);
        });
    add({.id = "M3.case3",
         .exponents = "gen3 n0 = k, n1 = (2l - 1)/8, S4",
         .formula = "[1^2 (2k+1)^1 2^{5k+3l-3}, 3^{4k+2l-1}, 2^1 (2l+3)^1 4^{3k+l-2}]",
         .k_min = 1,
         .two_params = true,
         .l_min = 1,
         .primitive = true,
         .note = "BM2.case5 at 2k + l - 1 with k + 1 outer white corners glued, 4 apart, from the left pendant"},
        [](FamilyParams p) {
          Drawn b = bm2_case5_drawn(2 * p.k + p.l - 1);
          return glue_along(b.d, b.mark, 4, p.k + 1);
        });
    add({.id = "M3.case4",
         .exponents = "gen3 n0 = k, n1 = l/6, S4",
         .formula = "[1^3 (2k+1)^1 2^{5k+2l-2}, (l+3)^1 3^{4k+l-1}, 4^{3k+l}]",
         .k_min = 1,
         .two_params = true,
         .l_min = 1,
         .l_skip_mod = 3,
         .primitive = true,
         .note = "BM2.case2 at 3k + l with k + 1 outer white corners glued, 3 apart"},
        [](FamilyParams p) {
          Drawn b = bm2_case2_drawn(3 * p.k + p.l);
          return swap_1_inf(glue_along(b.d, b.mark, 3, p.k + 1));
        });
    add({.id = "M3.case5",
         .exponents = "gen3 n0 = k + 1/2, n1 = (2l - 1)/8, S4",
         .formula = "[1^3 (2k+2)^1 2^{5k+3l-1}, 3^{4k+2l+1}, (2l+3)^1 4^{3k+l}]",
         .k_min = 1,
         .two_params = true,
         .primitive = true,
         .note = "BM.case1 at 2k + l with k + 1 outer corners without pendants glued, 4 apart"},
        [](FamilyParams p) { return glue_run(bm_case1(2 * p.k + p.l), 4, p.k + 1, 0); });
    const auto rebuilt = GeneratorStatus::reconstructed;
    add({.id = "M3.case9",
         .exponents = "gen3 n0 = k, n1 = (2k + 4l + 1)/4, A5",
         .formula = "[1^3 (2k+1)^1 (2k+4l+3)^1 2^{4+28k+28l}, 3^{5+20k+20l}, 5^{3+12k+12l}]",
         .k_min = 1,
         .two_params = true,
         .status = rebuilt,
         .note = "k + l copies of the A5 strip, drawn side: the outer corners glued into two runs, "
                 "each through one pendant"},
        [](FamilyParams p) {
          return swap_1_inf(glue_two_runs(a5_chain(p.k + p.l, cap_triangle_digon, cap_digon_left).build(), p.k));
        });
    add({.id = "M3.case10",
         .exponents = "gen3 n0 = k, n1 = (7 + 3k + 6l)/6, A5",
         .formula = "[1^3 (2k+1)^1 2^{33+29k+30l}, (10+3k+6l)^1 3^{20+19k+18l}, 5^{14+12k+12l}]",
         .k_min = 1,
         .two_params = true,
         .status = rebuilt,
         .note = "BM2.case6a at k + l, drawn side: a pendant and k more outer corners glued, 3 apart"},
        [](FamilyParams p) {
          return swap_1_inf(glue_run(a5_chain(p.k + p.l + 1, cap_fold, cap_fan_left).build(), 3, p.k + 1, 1));
        });
    add({.id = "M3.case11",
         .exponents = "gen3 n0 = k, n1 = (1 + 5k + 10l)/10, A5",
         .formula = "[1^3 (2k+1)^1 2^{29k+30l+1}, 3^{20k+20l+2}, (6+5k+10l)^1 5^{11k+10l}]",
         .k_min = 1,
         .two_params = true,
         .status = rebuilt,
         .note = "BM2.case8a at 5(k + l): a pendant and k more outer corners glued, 5 apart"},
        [](FamilyParams p) { return glue_run(bm2_case8a(5 * (p.k + p.l)), 5, p.k + 1, 1); });
    add({.id = "M3.case12",
         .exponents = "gen3 n0 = k + 1/2, n1 = (1 + 3k + 6l)/6, A5",
         .formula = "[1^3 (2k+2)^1 2^{10+29k+30l}, (4+3k+6l)^1 3^{7+19k+18l}, 5^{5+12k+12l}]",
         .k_min = 1,
         .two_params = true,
         .status = rebuilt,
         .note = "BM.case4a at k + l, drawn side: k + 1 outer corners without pendants glued, 3 apart"},
        [](FamilyParams p) {
          return swap_1_inf(glue_run(a5_chain(p.k + p.l, cap_pinch, cap_5_6).build(), 3, p.k + 1, 0));
        });
    add({.id = "M3.case13",
         .exponents = "gen3 n0 = k + 1/2, n1 = (1 + 5l)/10, A5",
         .formula = "[1^3 (2k+2)^1 2^{8+14k+15l}, 3^{7+10k+10l}, (6+5l)^1 5^{3+6k+5l}]",
         .k_min = 1,
         .two_params = true,
         .status = rebuilt,
         .note = "BM.case3 at 5(k + l): k + 1 outer corners without pendants glued, 5 apart"},
        [](FamilyParams p) { return glue_run(bm_case3(5 * (p.k + p.l)), 5, p.k + 1, 0); });
    // Small cases kept as fixed dessins, found once by enumerate_dessins.
    auto stored = [&](std::string id, std::string exponents, std::string formula, std::string s0, std::string s1) {
      const int n = eval_passport_formula(formula, {}).degree();
      Dessin d(Perm::parse(s0, n), Perm::parse(s1, n));
      add({.id = std::move(id),
           .exponents = std::move(exponents),
           .formula = std::move(formula),
           .k_max = 0,
           .status = GeneratorStatus::stored,
           .note = "sigma0 = " + s0 + ", sigma1 = " + s1},
          [d](FamilyParams) { return d; });
    };
    stored("base.n1_4.S4", "lame n = 1/4, S4", "[1^3, 3^1, 3^1]", "()", "(1 2 3)");
    stored("base.n1_10.A5", "lame n = 1/10, A5", "[1^3, 3^1, 3^1]", "()", "(1 2 3)");
    stored("base.n1_6.A5", "lame n = 1/6, A5", "[1^3 2^1, 2^1 3^1, 5^1]", "(3 4)", "(1 2 3)(4 5)");
    stored("base.n5_6.S4", "lame n = 5/6, S4", "[1^2 2^4, 3^2 4^1, 2^1 4^2]", "(2 3)(5 7)(6 9)(8 10)",
           "(1 2 4 6)(3 5 8)(7 9 10)");
    return t;
  }();
  return table;
}

const Entry& entry(std::string_view id) {
  for (const auto& e : entries())
    if (e.info.id == id) return e;
  throw FamilyError("unknown family '" + std::string(id) + "'");
}

}  // namespace

const std::vector<FamilyInfo>& family_registry() {
  static const std::vector<FamilyInfo> infos = [] {
    std::vector<FamilyInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

const FamilyInfo& family_info(std::string_view id) { return entry(id).info; }

bool in_range(const FamilyInfo& f, FamilyParams p) {
  if (p.k < f.k_min || (f.k_max >= 0 && p.k > f.k_max) || (p.k - f.k_min) % f.k_step != 0) return false;
  if (f.two_params) return p.l >= f.l_min && (f.l_skip_mod == 0 || p.l % f.l_skip_mod != 0);
  return p.l == 0;
}

Passport family_passport(const FamilyInfo& f, FamilyParams p) {
  if (!in_range(f, p)) throw FamilyError("parameters out of range for " + f.id);
  return eval_passport_formula(f.formula, p);
}

std::vector<FamilyParams> first_parameters(const FamilyInfo& f, int count) {
  std::vector<FamilyParams> out;
  for (int s = 0; static_cast<int>(out.size()) < count && s < 10000; ++s) {
    if (!f.two_params) {
      FamilyParams p{f.k_min + s * f.k_step, 0};
      if (f.k_max >= 0 && p.k > f.k_max) break;
      out.push_back(p);
      continue;
    }
    for (int i = 0; i <= s && static_cast<int>(out.size()) < count; ++i) {
      FamilyParams p{f.k_min + i * f.k_step, f.l_min + s - i};
      if (in_range(f, p)) out.push_back(p);
    }
  }
  return out;
}

Dessin family(std::string_view id, FamilyParams p) {
  const Entry& e = entry(id);
  Passport want = family_passport(e.info, p);
  Dessin d = e.build(p);
  std::string what = e.info.id + " at k=" + std::to_string(p.k) + (e.info.two_params ? ", l=" + std::to_string(p.l) : "");
  try {
    require_planar(d, what);
  } catch (const GlueError& err) {
    throw FamilyError(err.what());
  }
  if (Passport got = passport_of(d); got != want)
    throw FamilyError(what + ": built passport " + got.str() + " differs from " + want.str());
  if (e.info.primitive && !is_primitive(d).primitive) throw FamilyError(what + ": monodromy is not primitive");
  return d;
}

}  // namespace belyi

