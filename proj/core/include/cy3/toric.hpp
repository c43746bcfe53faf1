#pragma once

#include <array>
#include <string>
#include <vector>

#include "cy3/common.hpp"

namespace cy3 {

// Local model of a trident point: C^3/(Z/2)^2 with the two sign twists.  The
// cone is the positive octant in the lattice N = Z^3 + (1/2,1/2,0) +
// (0,1/2,1/2); its height-1 cross-section is a lattice triangle with vertices
// (0,0), (2,0), (0,2) and the three edge midpoints.

using PlanePt = std::array<int, 2>;

struct JuniorTriangle {
  std::array<PlanePt, 6> points;  // 3 vertices then 3 midpoints
};
const JuniorTriangle& junior_triangle();

// Triangle on the six points, vertices sorted.
struct Triangle {
  std::array<PlanePt, 3> v;
  friend bool operator==(const Triangle&, const Triangle&) = default;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

struct Triangulation {
  std::vector<Triangle> triangles;  // sorted
  bool is_central = false;          // contains the middle triangle
  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.triangles == b.triangles;
  }
};

// Exhaustive search for unimodular height-1 triangulations using all six
// lattice points.  Exactly four exist: one central, three outer.
std::vector<Triangulation> enumerate_crepant_triangulations();

// A dual-cone generator written as a Laurent monomial in the invariants
// a = x^2, b = y^2, c = z^2, d = xyz.
struct ChartMonomial {
  std::array<int, 3> exponents;     // in the character lattice (x,y,z powers)
  std::array<int, 4> abcd;          // exponents of a,b,c,d with d in {0,1}
  std::string name;                 // e.g. "a d^-1"
  friend bool operator==(const ChartMonomial&, const ChartMonomial&) = default;
};

struct ChartData {
  Triangle triangle;
  std::array<ChartMonomial, 3> generators;
};

struct GluingRelation {
  int chart_a = 0;
  int chart_b = 0;
  ChartMonomial unit_a;  // the unique generator pair multiplying to 1
  ChartMonomial unit_b;
};

struct ChartedResolution {
  Triangulation triangulation;
  std::vector<ChartData> charts;
  std::vector<GluingRelation> gluings;  // one per adjacent chart pair
};

// Dual bases of the lifted height-1 cones; verifies unimodularity, that every
// generator is a monomial in a,b,c,d, and that each adjacent pair glues along
// exactly one unit pair u*v = 1.
ChartedResolution charts_and_gluing(const Triangulation& t);

// Hilbert basis of the dual cone of the singular model; must be
// {a, b, c, d} with the single relation a b c = d^2.
struct SingularityPresentation {
  std::vector<std::array<int, 3>> hilbert_basis;
  bool relation_holds = false;  // exponents of abc equal those of d^2
};
SingularityPresentation singularity_presentation();

struct FlopGraph {
  int node_count = 0;
  std::vector<std::array<int, 2>> edges;
  int hub = -1;  // index of the degree-3 node; must be the central one
};

// Edges connect triangulations differing by one quadrilateral flip; the
// result must be the star K_{1,3} centred at the central triangulation.
FlopGraph flop_graph(const std::vector<Triangulation>& ts);

struct ToricResult {
  std::vector<ChartedResolution> resolutions;
  FlopGraph graph;
  SingularityPresentation singularity;
  int exceptional_divisors = 0;  // non-vertex lattice points, must be 3
};
ToricResult run_toric();

}  // namespace cy3
