// Hille-Perling polygons: the Gale dual of the toric system of a collection,
// drawn in the plane of (rank, degree) pairs on the anticanonical curve.
//
// Vertex k stores l_{k,k+1}; edge k is m_k = l_{k,k+1} - l_{k-1,k} (edge 0
// wraps from the last vertex).  polygon_of produces counter-clockwise
// polygons: omega(l_{k-1,k}, l_{k,k+1}) = r_k^2 > 0 and convex polygons turn
// left at every non-straight vertex.  omega is the 2x2 determinant.
#pragma once

#include "dpz/collection.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dpz {

struct Point {
    Rational x, y;
    bool operator==(const Point&) const = default;
    bool integral() const;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& k, const Point& a);
Rational omega(const Point& a, const Point& b);
std::string to_string(const Point& p);

struct HPPolygon {
    std::vector<Point> vertices;
    int size() const { return static_cast<int>(vertices.size()); }
    const Point& vertex(int k) const;  // cyclic index
    Point edge(int k) const;           // m_k, cyclic index
    std::vector<Point> edges() const;
    bool integral() const;
    bool operator==(const HPPolygon&) const = default;
};

// Signed arrow multiplicities: c[i][j] > 0 means c[i][j] arrows i -> j.
struct Quiver {
    Matrix c;
    // Vertex multiplicities (block sizes) for block quivers; empty otherwise.
    std::vector<int> multiplicities;
    int size() const { return static_cast<int>(c.size()); }
    bool operator==(const Quiver&) const = default;
};

// T_{i,i+1} = c1(E_{i+1})/r_{i+1} - c1(E_i)/r_i, the last one taken against
// E_0 ⊗ ω^{-1}.  Throws std::invalid_argument unless all ranks are positive.
std::vector<std::vector<Rational>> toric_system(const Collection& c);

// Vertices l_{k,k+1} = (0,-1) + sum_{j<=k} r_j (r(F_j), d(F_j)) for the right
// dual (F_j).  Throws std::invalid_argument unless all ranks are positive.
HPPolygon polygon_of(const Collection& c);

// Every vertex lies on or to the left of every edge line and the polygon has
// positive area.  Throws std::invalid_argument on repeated consecutive vertices.
bool is_convex(const HPPolygon& p);
// is_convex(polygon_of(c)) for collections with positive ranks, false otherwise.
bool very_strong_via_polygon(const Collection& c);

// A maximal run of consecutive parallel edges, starting at edge `first`.
struct LongEdge {
    int first = 0;
    int count = 0;
    bool operator==(const LongEdge&) const = default;
};
std::vector<LongEdge> long_edges(const HPPolygon& p);
// Pairs (a, b), a < b, of long edges (indices into long_edges) that are parallel.
std::vector<std::pair<int, int>> parallel_long_edges(const HPPolygon& p);

// c_ij = omega(m_i, m_j) / (r_i r_j); throws std::domain_error when a ratio is
// not integral.
Quiver quiver_of(const HPPolygon& p, const Vec& ranks);
Quiver quiver_of(const Collection& c);
// One vertex per block (representative = first object of the block).
Quiver block_quiver_of(const Collection& c);

// The shear A_{uv}: x + omega(x, v-u)/omega(u, v-u) (v-u).  Throws
// std::invalid_argument when omega(u, v) = 0.
Point shear(const Point& u, const Point& v, const Point& x);

// Vertex replacement matching braid_left/braid_right at 1 <= b <= n: vertex
// b-1 is replaced by A_{l_{b-1}, l_b}(l_{b-2}) resp. A_{l_{b-1}, l_{b-2}}(l_b).
// Throws std::domain_error when the replaced object would have rank zero.
HPPolygon polygon_braid_left(const HPPolygon& p, int b);
HPPolygon polygon_braid_right(const HPPolygon& p, int b);

// Maximizers of omega(m_i, x - l_{i,i+1}) over the vertices x, in cyclic
// order starting after vertex i.
std::vector<int> opposing_vertices(const HPPolygon& p, int i);
int earliest_opposing(const HPPolygon& p, int i);
// Vertices that oppose at least one edge, sorted.
std::vector<int> admissible_vertices(const HPPolygon& p);

// The half-plane omega(m, x) <= bound.
struct HalfPlane {
    Point m;
    Rational bound;
    bool contains(const Point& x) const { return omega(m, x) <= bound; }
};
// One half-plane per long edge: the side of the mid-line between the edge and
// its opposing line that contains the edge.
std::vector<HalfPlane> forbidden_region(const HPPolygon& p);
bool origin_in_forbidden(const HPPolygon& p);

// Twice the (shoelace) area.
Rational area_x2(const HPPolygon& p);
// Sign of omega(m_i, l_j + l_i) with j the earliest opposing vertex: -1 iff
// the quiver mutation collapsing m_i decreases the area.
int area_delta_sign(const HPPolygon& p, int i);

// Shear route of a quiver mutation collapsing edge i.  The right route shears
// the vertices after i up to the earliest opposing vertex; the left route is
// its mirror image.  The result is indexed like the collection produced by
// the corresponding quiver mutation; `steps` is the number of braid moves.
struct PolygonMutation {
    HPPolygon polygon;
    int steps = 0;
};
PolygonMutation polygon_quiver_mutate_right(const HPPolygon& p, int i);
PolygonMutation polygon_quiver_mutate_left(const HPPolygon& p, int i);

// The M in SL2(Z) with M p_k = q_k for all k, if any.
std::optional<std::array<std::array<Rational, 2>, 2>> sl2z_transform(const HPPolygon& p, const HPPolygon& q);

struct SvgOptions {
    bool lattice_points = true;
    bool forbidden = false;
    bool quiver = false;
    Vec ranks;  // needed for the quiver overlay
};
std::string render_svg(const HPPolygon& p, const SvgOptions& options = {});

}  // namespace dpz
