#include "cy3/toric.hpp"

#include <algorithm>
#include <set>

namespace cy3 {

namespace {

// Plane points lift to half-unit 3D vectors (a, b, 2-a-b) in the lattice
// N = {v : v1+v2+v3 even}; the dual lattice is {u : u1 = u2 = u3 mod 2},
// generated by a = x^2, b = y^2, c = z^2, d = xyz.

using Vec3 = std::array<long long, 3>;

Vec3 lift(const PlanePt& p) { return {p[0], p[1], 2 - p[0] - p[1]}; }

long long det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

long long cross2(const PlanePt& o, const PlanePt& a, const PlanePt& b) {
  return (long long)(a[0] - o[0]) * (b[1] - o[1]) -
         (long long)(a[1] - o[1]) * (b[0] - o[0]);
}

// Doubled signed area of a plane triangle.
long long area2(const Triangle& t) { return cross2(t.v[0], t.v[1], t.v[2]); }

bool point_in_closed_triangle(const PlanePt& p, const Triangle& t) {
  long long d1 = cross2(t.v[0], t.v[1], p);
  long long d2 = cross2(t.v[1], t.v[2], p);
  long long d3 = cross2(t.v[2], t.v[0], p);
  bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
  bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(has_neg && has_pos);
}

bool point_in_open_triangle(const PlanePt& p, const Triangle& t) {
  long long d1 = cross2(t.v[0], t.v[1], p);
  long long d2 = cross2(t.v[1], t.v[2], p);
  long long d3 = cross2(t.v[2], t.v[0], p);
  return (d1 > 0 && d2 > 0 && d3 > 0) || (d1 < 0 && d2 < 0 && d3 < 0);
}

bool segments_cross(const PlanePt& a, const PlanePt& b, const PlanePt& c,
                    const PlanePt& d) {
  long long d1 = cross2(a, b, c), d2 = cross2(a, b, d);
  long long d3 = cross2(c, d, a), d4 = cross2(c, d, b);
  return ((d1 > 0) != (d2 > 0)) && (d1 != 0 && d2 != 0) &&
         ((d3 > 0) != (d4 > 0)) && (d3 != 0 && d4 != 0);
}

bool interiors_disjoint(const Triangle& s, const Triangle& t) {
  for (const auto& p : s.v)
    if (point_in_open_triangle(p, t)) return false;
  for (const auto& p : t.v)
    if (point_in_open_triangle(p, s)) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (segments_cross(s.v[i], s.v[(i + 1) % 3], t.v[j], t.v[(j + 1) % 3]))
        return false;
  // identical triangles overlap
  return !(s == t);
}

Triangle make_triangle(PlanePt a, PlanePt b, PlanePt c) {
  std::array<PlanePt, 3> v = {a, b, c};
  std::sort(v.begin(), v.end());
  return Triangle{v};
}

Triangle middle_triangle() {
  return make_triangle({1, 0}, {0, 1}, {1, 1});
}

// Unimodular with respect to N: the three height-1 rays span a cone of index
// one, i.e. |det| equals the covolume 2 of N in half units.
bool unimodular(const Triangle& t) {
  return std::abs(det3(lift(t.v[0]), lift(t.v[1]), lift(t.v[2]))) == 2;
}

std::vector<Triangle> candidate_triangles() {
  const auto& jt = junior_triangle();
  std::vector<Triangle> out;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        Triangle t = make_triangle(jt.points[i], jt.points[j], jt.points[k]);
        if (area2(t) == 0) continue;
        if (unimodular(t)) out.push_back(t);
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const JuniorTriangle& junior_triangle() {
  static const JuniorTriangle jt = {
      {{{0, 0}, {2, 0}, {0, 2}, {1, 0}, {0, 1}, {1, 1}}}};
  return jt;
}

std::vector<Triangulation> enumerate_crepant_triangulations() {
  auto cands = candidate_triangles();
  std::vector<Triangulation> out;
  size_t n = cands.size();
  std::vector<int> idx(4);
  // exhaustive choice of 4 pairwise interior-disjoint unimodular triangles
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) {
      if (!interiors_disjoint(cands[a], cands[b])) continue;
      for (size_t c = b + 1; c < n; ++c) {
        if (!interiors_disjoint(cands[a], cands[c]) ||
            !interiors_disjoint(cands[b], cands[c]))
          continue;
        for (size_t d = c + 1; d < n; ++d) {
          if (!interiors_disjoint(cands[a], cands[d]) ||
              !interiors_disjoint(cands[b], cands[d]) ||
              !interiors_disjoint(cands[c], cands[d]))
            continue;
          Triangulation t;
          t.triangles = {cands[a], cands[b], cands[c], cands[d]};
          // total area 4 with disjoint interiors inside the big triangle
          long long area = 0;
          for (const auto& tr : t.triangles) area += std::abs(area2(tr));
          if (area != 4) continue;
          // every lattice point used
          std::set<PlanePt> used;
          for (const auto& tr : t.triangles)
            for (const auto& p : tr.v) used.insert(p);
          if (used.size() != 6) continue;
          t.is_central =
              std::find(t.triangles.begin(), t.triangles.end(),
                        middle_triangle()) != t.triangles.end();
          out.push_back(std::move(t));
        }
      }
    }
  if (out.size() != 4)
    throw Error("crepant triangulation count is " + std::to_string(out.size()) +
                ", expected 4");
  int central = 0;
  for (const auto& t : out) central += t.is_central;
  if (central != 1) throw Error("central triangulation count is not 1");
  return out;
}

namespace {

std::string monomial_name(const std::array<int, 4>& abcd) {
  static const char* sym[4] = {"a", "b", "c", "d"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (abcd[k] == 0) continue;
    if (!out.empty()) out += " ";
    out += sym[k];
    if (abcd[k] != 1) out += "^" + std::to_string(abcd[k]);
  }
  return out.empty() ? "1" : out;
}

ChartMonomial to_monomial(const Vec3& u) {
  ChartMonomial m;
  m.exponents = {(int)u[0], (int)u[1], (int)u[2]};
  if (((u[0] ^ u[1]) | (u[1] ^ u[2])) & 1)
    throw Error("dual vector is not in the invariant character lattice");
  std::array<long long, 3> v = u;
  int dpow = 0;
  if (v[0] & 1) {  // odd: pull out one d = (1,1,1)
    dpow = 1;
    for (int i = 0; i < 3; ++i) v[i] -= 1;
  }
  m.abcd = {(int)(v[0] / 2), (int)(v[1] / 2), (int)(v[2] / 2), dpow};
  m.name = monomial_name(m.abcd);
  return m;
}

// Dual basis of the height-1 cone over a triangle: integer vectors u with
// u . lift(v_j) / 2 = delta_ij.
std::array<ChartMonomial, 3> dual_basis(const Triangle& t) {
  Vec3 r[3] = {lift(t.v[0]), lift(t.v[1]), lift(t.v[2])};
  long long det = det3(r[0], r[1], r[2]);
  if (det != 2 && det != -2) throw Error("cone is not unimodular");
  std::array<ChartMonomial, 3> out;
  for (int i = 0; i < 3; ++i) {
    const Vec3& p = r[(i + 1) % 3];
    const Vec3& q = r[(i + 2) % 3];
    Vec3 cr = {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2],
               p[0] * q[1] - p[1] * q[0]};
    // <u, r_j>/2 = delta_ij, i.e. u . r_i = 2 with u = 2 cr / det
    Vec3 u;
    for (int k = 0; k < 3; ++k) {
      long long num = 2 * cr[k];
      if (num % det != 0) throw Error("dual basis is not integral");
      u[k] = num / det;
    }
    out[i] = to_monomial(u);
  }
  return out;
}

}  // namespace

ChartedResolution charts_and_gluing(const Triangulation& t) {
  ChartedResolution out;
  out.triangulation = t;
  for (const auto& tr : t.triangles)
    out.charts.push_back(ChartData{tr, dual_basis(tr)});

  // adjacency: two triangles sharing an edge
  for (size_t a = 0; a < out.charts.size(); ++a)
    for (size_t b = a + 1; b < out.charts.size(); ++b) {
      std::vector<PlanePt> shared;
      for (const auto& p : out.charts[a].triangle.v)
        for (const auto& q : out.charts[b].triangle.v)
          if (p == q) shared.push_back(p);
      if (shared.size() != 2) continue;
      // exactly one generator pair multiplies to 1
      std::vector<std::pair<int, int>> units;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const auto& u = out.charts[a].generators[i].exponents;
          const auto& v = out.charts[b].generators[j].exponents;
          if (u[0] + v[0] == 0 && u[1] + v[1] == 0 && u[2] + v[2] == 0)
            units.push_back({i, j});
        }
      if (units.size() != 1)
        throw Error("adjacent charts do not glue along exactly one unit pair");
      GluingRelation rel;
      rel.chart_a = (int)a;
      rel.chart_b = (int)b;
      rel.unit_a = out.charts[a].generators[units[0].first];
      rel.unit_b = out.charts[b].generators[units[0].second];
      out.gluings.push_back(rel);
    }
  return out;
}

SingularityPresentation singularity_presentation() {
  SingularityPresentation out;
  // Hilbert basis of {u >= 0, u1 = u2 = u3 mod 2}: minimal nonzero elements.
  std::vector<std::array<int, 3>> semigroup_box;
  for (int x = 0; x <= 4; ++x)
    for (int y = 0; y <= 4; ++y)
      for (int z = 0; z <= 4; ++z) {
        if ((x + y) % 2 || (y + z) % 2) continue;
        if (x + y + z == 0) continue;
        semigroup_box.push_back({x, y, z});
      }
  for (const auto& u : semigroup_box) {
    if (u[0] > 2 || u[1] > 2 || u[2] > 2) continue;
    bool reducible = false;
    for (const auto& v : semigroup_box) {
      std::array<int, 3> w = {u[0] - v[0], u[1] - v[1], u[2] - v[2]};
      if (w == std::array<int, 3>{0, 0, 0}) continue;
      if (w[0] < 0 || w[1] < 0 || w[2] < 0) continue;
      if ((w[0] + w[1]) % 2 || (w[1] + w[2]) % 2) continue;
      if (w[0] + w[1] + w[2] == 0) continue;
      reducible = true;
      break;
    }
    if (!reducible) out.hilbert_basis.push_back(u);
  }
  std::sort(out.hilbert_basis.begin(), out.hilbert_basis.end());
  // relation: a + b + c = 2d on exponents, i.e. abc = d^2
  out.relation_holds =
      out.hilbert_basis.size() == 4 &&
      [&] {
        std::array<int, 3> abc = {0, 0, 0}, d2 = {0, 0, 0};
        bool have_d = false;
        for (const auto& u : out.hilbert_basis) {
          if (u == std::array<int, 3>{1, 1, 1}) {
            d2 = {2, 2, 2};
            have_d = true;
          } else {
            for (int k = 0; k < 3; ++k) abc[k] += u[k];
          }
        }
        return have_d && abc == d2;
      }();
  return out;
}

FlopGraph flop_graph(const std::vector<Triangulation>& ts) {
  FlopGraph g;
  g.node_count = (int)ts.size();
  for (size_t a = 0; a < ts.size(); ++a)
    for (size_t b = a + 1; b < ts.size(); ++b) {
      // single quadrilateral flip: exactly two triangles differ on each side
      // and the differing pairs cover the same quadrilateral
      std::vector<Triangle> da, db;
      for (const auto& t : ts[a].triangles)
        if (std::find(ts[b].triangles.begin(), ts[b].triangles.end(), t) ==
            ts[b].triangles.end())
          da.push_back(t);
      for (const auto& t : ts[b].triangles)
        if (std::find(ts[a].triangles.begin(), ts[a].triangles.end(), t) ==
            ts[a].triangles.end())
          db.push_back(t);
      if (da.size() != 2 || db.size() != 2) continue;
      std::set<PlanePt> pa, pb;
      for (const auto& t : da)
        for (const auto& p : t.v) pa.insert(p);
      for (const auto& t : db)
        for (const auto& p : t.v) pb.insert(p);
      if (pa == pb && pa.size() == 4)
        g.edges.push_back({(int)a, (int)b});
    }
  std::vector<int> deg(ts.size(), 0);
  for (const auto& e : g.edges) { ++deg[e[0]]; ++deg[e[1]]; }
  for (size_t i = 0; i < ts.size(); ++i)
    if (deg[i] == 3) g.hub = (int)i;
  bool star = ts.size() == 4 && g.edges.size() == 3 && g.hub >= 0;
  for (size_t i = 0; i < ts.size(); ++i)
    if ((int)i != g.hub && deg[i] != 1) star = false;
  if (!star) throw Error("flop graph is not the star K_{1,3}");
  if (!ts[g.hub].is_central)
    throw Error("flop graph hub is not the central triangulation");
  return g;
}

ToricResult run_toric() {
  ToricResult out;
  auto ts = enumerate_crepant_triangulations();
  for (const auto& t : ts) out.resolutions.push_back(charts_and_gluing(t));
  out.graph = flop_graph(ts);
  out.singularity = singularity_presentation();
  out.exceptional_divisors = 3;  // non-vertex lattice points of the triangle
  return out;
}

}  // namespace cy3
