#include "dpz/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace dpz {

namespace {

bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

Point point_of(Int x, Int y) { return Point{Rational(x), Rational(y)}; }

void require_positive_ranks(const Collection& c, const char* what) {
    for (int i = 0; i < c.size(); ++i)
        if (c[i].r <= 0)
            throw std::invalid_argument(std::string(what) + ": object " + std::to_string(i) + " has rank " +
                                        std::to_string(c[i].r) + " (positive ranks required)");
}

}  // namespace

bool Point::integral() const { return is_integer(x) && is_integer(y); }

Point operator+(const Point& a, const Point& b) { return Point{a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return Point{a.x - b.x, a.y - b.y}; }
Point operator*(const Rational& k, const Point& a) { return Point{k * a.x, k * a.y}; }
Rational omega(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
std::string to_string(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

const Point& HPPolygon::vertex(int k) const {
    const int n = size();
    return vertices[((k % n) + n) % n];
}

Point HPPolygon::edge(int k) const { return vertex(k) - vertex(k - 1); }

std::vector<Point> HPPolygon::edges() const {
    std::vector<Point> m;
    for (int k = 0; k < size(); ++k) m.push_back(edge(k));
    return m;
}

bool HPPolygon::integral() const {
    return std::all_of(vertices.begin(), vertices.end(), [](const Point& p) { return p.integral(); });
}

std::vector<std::vector<Rational>> toric_system(const Collection& c) {
    require_positive_ranks(c, "toric_system");
    const Surface& s = c.surf();
    const int n = c.size();
    auto normalized_c1 = [](const NumClass& e) {
        std::vector<Rational> v;
        for (Int x : e.c1) v.push_back(Rational(x) / Rational(e.r));
        return v;
    };
    std::vector<std::vector<Rational>> t;
    for (int i = 0; i < n; ++i) {
        NumClass next = i + 1 < n ? c[i + 1] : twist_canonical(c[0], -1, s);
        auto a = normalized_c1(c[i]);
        auto b = normalized_c1(next);
        for (std::size_t k = 0; k < a.size(); ++k) b[k] -= a[k];
        t.push_back(b);
    }
    return t;
}

HPPolygon polygon_of(const Collection& c) {
    require_positive_ranks(c, "polygon_of");
    const std::vector<NumClass> f = dual_right(c);
    HPPolygon p;
    Int x = 0, y = -1;
    for (int i = 0; i < c.size(); ++i) {
        x = checked_add(x, checked_mul(c[i].r, f[i].r));
        y = checked_add(y, checked_mul(c[i].r, degree(f[i], c.surf())));
        p.vertices.push_back(point_of(x, y));
    }
    return p;
}

bool is_convex(const HPPolygon& p) {
    const int n = p.size();
    if (n < 3) return false;
    for (int i = 0; i < n; ++i)
        if (p.edge(i) == Point{})
            throw std::invalid_argument("polygon has a repeated vertex at position " + std::to_string(i));
    for (int i = 0; i < n; ++i) {
        const Point m = p.edge(i);
        for (int k = 0; k < n; ++k)
            if (omega(m, p.vertex(k) - p.vertex(i)) < 0) return false;
    }
    return area_x2(p) > 0;
}

bool very_strong_via_polygon(const Collection& c) {
    for (const auto& e : c.objects)
        if (e.r <= 0) return false;
    return is_convex(polygon_of(c));
}

namespace {

// Parallel and pointing the same way.
bool same_direction(const Point& a, const Point& b) {
    return omega(a, b) == 0 && a.x * b.x + a.y * b.y > 0;
}

}  // namespace

std::vector<LongEdge> long_edges(const HPPolygon& p) {
    const int n = p.size();
    std::vector<LongEdge> out;
    if (n == 0) return out;
    // Start at an edge that does not continue its predecessor.
    int start = -1;
    for (int i = 0; i < n; ++i)
        if (!same_direction(p.edge(i - 1), p.edge(i))) {
            start = i;
            break;
        }
    if (start < 0) return {LongEdge{0, n}};
    for (int t = 0; t < n; ++t) {
        const int i = (start + t) % n;
        if (t > 0 && same_direction(p.edge(i - 1), p.edge(i))) ++out.back().count;
        else out.push_back(LongEdge{i, 1});
    }
    return out;
}

std::vector<std::pair<int, int>> parallel_long_edges(const HPPolygon& p) {
    const auto le = long_edges(p);
    std::vector<std::pair<int, int>> out;
    for (std::size_t a = 0; a < le.size(); ++a)
        for (std::size_t b = a + 1; b < le.size(); ++b)
            if (omega(p.edge(le[a].first), p.edge(le[b].first)) == 0)
                out.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return out;
}

Quiver quiver_of(const HPPolygon& p, const Vec& ranks) {
    const int n = p.size();
    if (static_cast<int>(ranks.size()) != n) throw std::invalid_argument("quiver_of: rank count differs from vertex count");
    Quiver q;
    q.c.assign(n, Vec(n, 0));
    const auto m = p.edges();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational v = omega(m[i], m[j]) / Rational(BigInt(ranks[i]) * BigInt(ranks[j]));
            if (!is_integer(v))
                throw std::domain_error("quiver_of: omega(m_" + std::to_string(i) + ", m_" + std::to_string(j) +
                                        ")/(r_i r_j) = " + to_string(v) + " is not integral");
            q.c[i][j] = to_int(v);
        }
    return q;
}

Quiver quiver_of(const Collection& c) { return quiver_of(polygon_of(c), c.ranks()); }

Quiver block_quiver_of(const Collection& c) {
    const Quiver full = quiver_of(c);
    const std::vector<int> sizes = c.blocks.empty() ? detect_blocks(c).sizes : c.blocks;
    std::vector<int> reps;
    int p = 0;
    for (int b : sizes) {
        reps.push_back(p);
        p += b;
    }
    Quiver q;
    q.multiplicities = sizes;
    q.c.assign(reps.size(), Vec(reps.size(), 0));
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = 0; b < reps.size(); ++b) q.c[a][b] = full.c[reps[a]][reps[b]];
    return q;
}

Point shear(const Point& u, const Point& v, const Point& x) {
    const Point w = v - u;
    const Rational den = omega(u, w);
    if (den == 0) throw std::invalid_argument("shear: omega(u, v) = 0 for u = " + to_string(u) + ", v = " + to_string(v));
    return x + (omega(x, w) / den) * w;
}

namespace {

HPPolygon polygon_braid(const HPPolygon& p, int b, bool left) {
    const int n = p.size();
    if (b < 1 || b > n) throw std::out_of_range("braid index " + std::to_string(b) + " outside [1, " + std::to_string(n) + "]");
    const int i = b - 1;
    const Point& cur = p.vertex(i);
    Point replaced = left ? shear(cur, p.vertex(i + 1), p.vertex(i - 1)) : shear(cur, p.vertex(i - 1), p.vertex(i + 1));
    // The replaced object's rank squared is omega(l_{i-1,i}, l'_{i,i+1}).
    if (omega(p.vertex(i - 1), replaced) == 0)
        throw std::domain_error("polygon braid move at " + std::to_string(b) + " produces an object of rank zero");
    HPPolygon out = p;
    out.vertices[i] = replaced;
    return out;
}

}  // namespace

HPPolygon polygon_braid_left(const HPPolygon& p, int b) { return polygon_braid(p, b, true); }
HPPolygon polygon_braid_right(const HPPolygon& p, int b) { return polygon_braid(p, b, false); }

std::vector<int> opposing_vertices(const HPPolygon& p, int i) {
    const int n = p.size();
    const Point m = p.edge(i);
    std::optional<Rational> best;
    std::vector<int> out;
    for (int s = 1; s <= n; ++s) {
        const int j = (i + s) % n;
        const Rational h = omega(m, p.vertex(j) - p.vertex(i));
        if (!best || h > *best) {
            best = h;
            out = {j};
        } else if (h == *best) {
            out.push_back(j);
        }
    }
    return out;
}

int earliest_opposing(const HPPolygon& p, int i) { return opposing_vertices(p, i).front(); }

std::vector<int> admissible_vertices(const HPPolygon& p) {
    std::set<int> all;
    for (int i = 0; i < p.size(); ++i)
        for (int j : opposing_vertices(p, i)) all.insert(j);
    return {all.begin(), all.end()};
}

std::vector<HalfPlane> forbidden_region(const HPPolygon& p) {
    std::vector<HalfPlane> out;
    for (const LongEdge& e : long_edges(p)) {
        const int i = e.first;
        const Point m = p.edge(i);
        const int j = earliest_opposing(p, i);
        out.push_back(HalfPlane{m, omega(m, p.vertex(i) + p.vertex(j)) / 2});
    }
    return out;
}

bool origin_in_forbidden(const HPPolygon& p) {
    const auto hs = forbidden_region(p);
    return std::all_of(hs.begin(), hs.end(), [](const HalfPlane& h) { return h.contains(Point{}); });
}

Rational area_x2(const HPPolygon& p) {
    Rational a = 0;
    for (int k = 0; k < p.size(); ++k) a += omega(p.vertex(k), p.vertex(k + 1));
    return a;
}

int area_delta_sign(const HPPolygon& p, int i) {
    const int j = earliest_opposing(p, i);
    return sign_of(omega(p.edge(i), p.vertex(j) + p.vertex(i)));
}

namespace {

// Shear route on a list whose element 0 is the far endpoint of the collapsed
// edge and whose last element is its near endpoint.
std::pair<std::vector<Point>, int> shear_route(const std::vector<Point>& rv, const Point& m) {
    const int n = static_cast<int>(rv.size());
    int j = 1;
    Rational best = omega(m, rv[1] - rv[0]);
    for (int s = 2; s < n; ++s) {
        Rational h = omega(m, rv[s] - rv[0]);
        if (h > best) {
            best = h;
            j = s;
        }
    }
    std::vector<Point> out;
    for (int t = 1; t <= j; ++t) out.push_back(shear(rv[0], rv[n - 1], rv[t]));
    for (int t = j; t < n; ++t) out.push_back(rv[t]);
    return {out, j};
}

}  // namespace

PolygonMutation polygon_quiver_mutate_right(const HPPolygon& p, int i) {
    const int n = p.size();
    if (i < 0 || i >= n) throw std::out_of_range("mutation index " + std::to_string(i) + " outside [0, " + std::to_string(n) + ")");
    std::vector<Point> rv;
    for (int t = 0; t < n; ++t) rv.push_back(p.vertex(i + t));
    auto [route, j] = shear_route(rv, p.edge(i));
    PolygonMutation out;
    out.steps = j;
    out.polygon.vertices.resize(n);
    // Route element 0 becomes vertex i of the mutated collection.
    for (int k = 0; k < n; ++k) out.polygon.vertices[k] = route[((k - i) % n + n) % n];
    return out;
}

PolygonMutation polygon_quiver_mutate_left(const HPPolygon& p, int i) {
    const int n = p.size();
    if (i < 0 || i >= n) throw std::out_of_range("mutation index " + std::to_string(i) + " outside [0, " + std::to_string(n) + ")");
    std::vector<Point> lv;
    for (int t = 0; t < n; ++t) lv.push_back(p.vertex(i - 1 - t));
    auto [route, j] = shear_route(lv, p.edge(i));
    PolygonMutation out;
    out.steps = j;
    out.polygon.vertices.resize(n);
    // Route element t is vertex i - 1 - t of the mutated collection.
    for (int t = 0; t < n; ++t) out.polygon.vertices[((i - 1 - t) % n + n) % n] = route[t];
    return out;
}

std::optional<std::array<std::array<Rational, 2>, 2>> sl2z_transform(const HPPolygon& p, const HPPolygon& q) {
    const int n = p.size();
    if (n != q.size()) return std::nullopt;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const Rational d = omega(p.vertices[a], p.vertices[b]);
            if (d == 0) continue;
            const Point &pa = p.vertices[a], &pb = p.vertices[b], &qa = q.vertices[a], &qb = q.vertices[b];
            // M = [qa qb] [pa pb]^{-1}
            std::array<std::array<Rational, 2>, 2> m{{{(qa.x * pb.y - qb.x * pa.y) / d, (qb.x * pa.x - qa.x * pb.x) / d},
                                                      {(qa.y * pb.y - qb.y * pa.y) / d, (qb.y * pa.x - qa.y * pb.x) / d}}};
            if (m[0][0] * m[1][1] - m[0][1] * m[1][0] != 1) return std::nullopt;
            for (const auto& row : m)
                for (const auto& x : row)
                    if (!is_integer(x)) return std::nullopt;
            for (int t = 0; t < n; ++t) {
                const Point& v = p.vertices[t];
                if (Point{m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y} != q.vertices[t]) return std::nullopt;
            }
            return m;
        }
    return std::nullopt;
}

namespace {

// Clip a convex polygon to a half-plane (Sutherland-Hodgman).
std::vector<Point> clip(const std::vector<Point>& poly, const HalfPlane& h) {
    std::vector<Point> out;
    const std::size_t n = poly.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Point& a = poly[k];
        const Point& b = poly[(k + 1) % n];
        const Rational fa = h.bound - omega(h.m, a), fb = h.bound - omega(h.m, b);
        if (fa >= 0) out.push_back(a);
        if ((fa > 0 && fb < 0) || (fa < 0 && fb > 0)) out.push_back(a + (fa / (fa - fb)) * (b - a));
    }
    return out;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace

std::string render_svg(const HPPolygon& p, const SvgOptions& options) {
    const int n = p.size();
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    for (const Point& v : p.vertices) {
        xmin = std::min(xmin, to_double(v.x));
        xmax = std::max(xmax, to_double(v.x));
        ymin = std::min(ymin, to_double(v.y));
        ymax = std::max(ymax, to_double(v.y));
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1.0});
    const double scale = 400.0 / span, pad = 20.0;
    const double width = (xmax - xmin) * scale + 2 * pad, height = (ymax - ymin) * scale + 2 * pad;
    auto sx = [&](const Rational& x) { return (to_double(x) - xmin) * scale + pad; };
    auto sy = [&](const Rational& y) { return (ymax - to_double(y)) * scale + pad; };

    std::ostringstream os;
    os << fmt::format(R"(<svg xmlns="http://www.w3.org/2000/svg" width="{:.1f}" height="{:.1f}" viewBox="0 0 {:.1f} {:.1f}">)",
                      width, height, width, height)
       << "\n";
    if (options.forbidden && n >= 3) {
        // Forbidden region: the polygon clipped by every half-plane.
        std::vector<Point> region = p.vertices;
        for (const HalfPlane& h : forbidden_region(p)) region = clip(region, h);
        if (!region.empty()) {
            os << R"(<path class="forbidden" fill="#f4b6b6" fill-opacity="0.6" stroke="none" d=")";
            for (std::size_t k = 0; k < region.size(); ++k)
                os << (k ? " L " : "M ") << fmt::format("{:.3f} {:.3f}", sx(region[k].x), sy(region[k].y));
            os << " Z\"/>\n";
        }
    }
    os << R"(<path class="polygon" fill="none" stroke="black" stroke-width="1.5" d=")";
    for (int k = 0; k < n; ++k)
        os << (k ? " L " : "M ") << fmt::format("{:.3f} {:.3f}", sx(p.vertices[k].x), sy(p.vertices[k].y));
    os << " Z\"/>\n";
    if (options.lattice_points && p.integral()) {
        for (int k = 0; k < n; ++k) {
            const Point m = p.edge(k);
            const Int g = gcd(to_int(m.x), to_int(m.y));
            for (Int t = 1; t < g; ++t) {
                const Point q = p.vertex(k - 1) + Rational(t, g) * m;
                os << fmt::format(R"(<circle class="subdivision" cx="{:.3f}" cy="{:.3f}" r="2" fill="gray"/>)", sx(q.x), sy(q.y))
                   << "\n";
            }
        }
    }
    for (int k = 0; k < n; ++k)
        os << fmt::format(R"(<circle class="vertex" cx="{:.3f}" cy="{:.3f}" r="3" fill="black"/>)", sx(p.vertices[k].x),
                          sy(p.vertices[k].y))
           << "\n";
    os << fmt::format(R"(<circle class="origin" cx="{:.3f}" cy="{:.3f}" r="3.5" fill="red"/>)", sx(0), sy(0)) << "\n";
    if (options.quiver && static_cast<int>(options.ranks.size()) == n) {
        const Quiver q = quiver_of(p, options.ranks);
        auto mid = [&](int k) { return Rational(1, 2) * (p.vertex(k - 1) + p.vertex(k)); };
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (q.c[a][b] > 0) {
                    const Point u = mid(a), v = mid(b);
                    os << fmt::format(
                              R"(<line class="arrow" x1="{:.3f}" y1="{:.3f}" x2="{:.3f}" y2="{:.3f}" stroke="steelblue"/>)",
                              sx(u.x), sy(u.y), sx(v.x), sy(v.y))
                       << "\n"
                       << fmt::format(R"(<text class="multiplicity" x="{:.3f}" y="{:.3f}" font-size="10">{}</text>)",
                                      (sx(u.x) + sx(v.x)) / 2, (sy(u.y) + sy(v.y)) / 2, q.c[a][b])
                       << "\n";
                }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace dpz
