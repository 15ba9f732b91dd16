#pragma once

#include <vector>

#include "braidch/morse/critical.hpp"

namespace braidch::morse {

struct FlowLine {
  std::vector<Vec2> path;  // (t, theta) samples, unwrapped
  int start = -1;          // indices into the critical point list
  int end = -1;
  double arclength = 0.0;
  bool descending = true;
};

// Integrates the gradient flow of g from one ray of the start point's
// unstable manifold (descending: x' = -grad g) or stable manifold seed
// (ascending: x' = +grad g) until it is captured by another critical point.
//
// Branches enumerate eigendirections of the Hessian at the start: descending
// needs a negative eigenvalue (2 branches from an index-1 saddle, 4 from an
// index-2 maximum), ascending a positive one. Starting a descent at a local
// minimum (or an ascent at a maximum) throws std::invalid_argument since no
// such direction exists. Adaptive embedded Runge-Kutta integration; g is
// monotone along the returned polyline. GeometryError on capture ambiguity
// or step-budget exhaustion.
FlowLine trace_flow(const DiffFunction& g, const std::vector<CriticalPoint>& cps,
                    int start, int branch, const MorseTolerances& tol = {},
                    bool descending = true);

int branch_count(const CriticalPoint& cp, bool descending);

// Gradient flow tree on T^2: the data shape for multi-sheet counts. Edges
// follow flow segments of pairwise difference functions; leaves and 2-valent
// corners sit at critical points; a 3-valent vertex splits an incoming (i,j)
// edge into (i,k) and (k,j) edges at a regular point, with the middle sheet k
// strictly between sheets i and j there. Stored for interchange and
// inspection only; no enumerator for trees with 3-valent vertices is
// provided.
struct FlowTree {
  struct Vertex {
    Vec2 pos;
    int valence = 1;
    int critical_point = -1;  // index into an inventory, -1 at 3-valent vertices
  };
  struct Edge {
    int from = -1, to = -1;  // vertex indices, oriented along the flow
    int sheet_i = 0, sheet_j = 0;  // edge follows the flow of g_{ij}
    std::vector<Vec2> path;
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

}  // namespace braidch::morse
