#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "belyi/dessin.hpp"

namespace belyi {

class GlueError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// White vertex ids index sigma0().cycles(). The listed cycles become one cycle:
// each is read starting at its anchor, in list order. sigma1 is untouched.
Dessin glue_white(const Dessin& d, const std::vector<int>& vertices, const std::vector<int>& anchors);
// Same, with each vertex named by its anchor edge.
Dessin glue_white_at(const Dessin& d, const std::vector<int>& anchors);

// Walks the face through dart x (its sigma_inf cycle) and glues the white
// corners at positions first, first + step, ... into one white vertex. The face
// splits into pieces of step corners and the genus is unchanged.
Dessin glue_face_corners(const Dessin& d, int x, int step, int first = 0);
// Same with explicit corner positions along the face, counted from x.
Dessin glue_face_corners(const Dessin& d, int x, const std::vector<int>& positions);

// Moves edge e so that it follows white_after around its white vertex and
// black_after around its black vertex. Both must share e's vertices.
Dessin reroute_edge(const Dessin& d, int e, int white_after, int black_after);

// Triality: the same cover with two of the points 0, 1, inf exchanged.
Dessin swap_0_1(const Dessin& d);
Dessin swap_1_inf(const Dessin& d);
Dessin swap_0_inf(const Dessin& d);

// Throws GlueError unless d is connected of genus 0.
void require_planar(const Dessin& d, const std::string& what);

// A dessin with ports: black vertices named by an anchor edge. Joining an
// out-port to an in-port merges the two black vertices; each rotation is cut
// just before its anchor.
struct Motif {
  Dessin body;
  std::vector<int> in;
  std::vector<int> out;
};

// Disjoint union of a and b (b relabelled after a) with a.out[j] joined to b.in[j].
Motif chain(const Motif& a, const Motif& b);
// m followed by k more copies, each copy's in-ports joined to the previous out-ports.
Motif repeat_block(const Motif& m, int k);

// Builds a planar dessin from a drawing. Rotations are read counterclockwise
// from the directions in which edges leave each vertex.
class PlaneBuilder {
 public:
  int black(double x, double y);
  int white(double x, double y);
  // Two black vertices joined through an implicit white midpoint. A positive
  // bend pushes the midpoint to the left of the direction a -> b.
  int link(int a, int b, double bend = 0.0);
  // One edge between a white and a black vertex.
  int edge(int w, int b, double bend = 0.0);
  // A pendant white vertex next to b in direction angle (degrees).
  int stub(int b, double angle);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  double x(int v) const { return nodes_[v].x; }
  double y(int v) const { return nodes_[v].y; }

  // First edge at vertex v met when turning counterclockwise from angle (degrees).
  int anchor(int v, double angle) const;

  Dessin build() const;

 private:
  struct Node {
    bool white;
    double x, y;
  };
  struct Edge {
    int w, b;
    double cx, cy;  // control point both ends aim at
  };
  double direction(int e, int v) const;

  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
};

}  // namespace belyi
