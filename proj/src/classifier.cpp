#include "dpz/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace dpz {

std::vector<Vec> bounded_reciprocal_solve(const Vec& nums, const Rational& a) {
    const std::size_t n = nums.size();
    std::set<Vec> out;
    Vec partial(n, 0);
    std::function<void(std::vector<std::size_t>, const Rational&, const std::optional<Rational>&)> rec =
        [&](std::vector<std::size_t> left, const Rational& rem, const std::optional<Rational>& cap) {
            if (left.empty()) {
                if (rem == 0) out.insert(partial);
                return;
            }
            if (rem <= 0) return;
            const Int m = static_cast<Int>(left.size());
            for (std::size_t i : left) {
                // The largest remaining term t = nums[i]/k satisfies rem/m <= t <= cap.
                const Int kmax = to_int(BigInt(boost::multiprecision::numerator(Rational(nums[i] * m) / rem) /
                                               boost::multiprecision::denominator(Rational(nums[i] * m) / rem)));
                Int kmin = 1;
                if (cap) {
                    const Rational q = Rational(nums[i]) / *cap;
                    const BigInt num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
                    kmin = std::max<Int>(1, to_int(BigInt((num + den - 1) / den)));
                }
                std::vector<std::size_t> rest;
                for (std::size_t j : left)
                    if (j != i) rest.push_back(j);
                for (Int k = kmin; k <= kmax; ++k) {
                    const Rational t(nums[i], k);
                    if (cap && t > *cap) continue;
                    partial[i] = k;
                    rec(rest, rem - t, t);
                    partial[i] = 0;
                }
            }
        };
    if (a > 0 && n > 0) {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        rec(all, a, std::nullopt);
    }
    return {out.begin(), out.end()};
}

namespace {

struct Hull {
    std::vector<Point> vertices;  // l at the end of each long edge
    std::vector<Point> m;         // long edges
};

// Long-edge hull in the frame m_0 = (1, 0), m_1 = (0, S_0).
std::optional<Hull> raw_reconstruct(const std::vector<int>& alphas, const Vec& ranks, const Vec& chis) {
    const int k = static_cast<int>(alphas.size());
    if (k != 3 && k != 4) throw std::invalid_argument("polygon reconstruction supports 3 or 4 blocks");
    if (static_cast<int>(ranks.size()) != k || static_cast<int>(chis.size()) != k)
        throw std::invalid_argument("alphas, ranks and chis must have equal length");
    Vec S(k), R(k);
    for (int i = 0; i < k; ++i) {
        const int j = (i + 1) % k;
        S[i] = checked_mul(checked_mul(chis[i], checked_mul(alphas[i], alphas[j])), checked_mul(ranks[i], ranks[j]));
        R[i] = checked_mul(alphas[i], checked_mul(ranks[i], ranks[i]));
        if (S[i] <= 0 || R[i] <= 0) return std::nullopt;
    }
    Hull h;
    h.m.resize(k);
    h.m[0] = Point{1, 0};
    h.m[1] = Point{0, Rational(S[0])};
    if (k == 3) {
        h.m[2] = Point{} - h.m[0] - h.m[1];
    } else {
        h.m[2] = Point{Rational(-S[1], S[0]), Rational(S[2] - S[1])};
        h.m[3] = Point{} - h.m[0] - h.m[1] - h.m[2];
    }
    for (int i = 0; i < k; ++i)
        if (omega(h.m[i], h.m[(i + 1) % k]) != S[i]) return std::nullopt;
    // The vertex P before m_0: omega(P, m_0) = R_0 and omega(P + m_0, m_1) = R_1.
    const Rational b0 = R[0], b1 = Rational(R[1]) - omega(h.m[0], h.m[1]);
    const Point &u = h.m[0], &v = h.m[1];
    const Rational det = u.y * (-v.x) - (-u.x) * v.y;
    Point cur{(b0 * (-v.x) - (-u.x) * b1) / det, (u.y * b1 - v.y * b0) / det};
    for (int i = 0; i < k; ++i) {
        const Point next = cur + h.m[i];
        if (omega(cur, next) != R[i]) return std::nullopt;
        h.vertices.push_back(next);
        cur = next;
    }
    return h;
}

// Subdivision vertices: the end point of every small edge, in object order.
std::vector<Point> subdivide(const Hull& h, const std::vector<int>& alphas) {
    const int k = static_cast<int>(alphas.size());
    std::vector<Point> out;
    Point prev = h.vertices[k - 1];
    for (int i = 0; i < k; ++i) {
        const Point e = Rational(1, alphas[i]) * h.m[i];
        for (int t = 1; t <= alphas[i]; ++t) out.push_back(prev + Rational(t) * e);
        prev = h.vertices[i];
    }
    return out;
}

// gcd of integral values; std::nullopt if one is not integral.
std::optional<BigInt> gcd_of(const std::vector<Rational>& values) {
    BigInt g = 0;
    for (const auto& v : values) {
        if (boost::multiprecision::denominator(v) != 1) return std::nullopt;
        g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(v));
    }
    return g;
}

// The points span a unimodular lattice in which each point is primitive and
// each small edge of block i is r_i times a primitive vector.
bool lattice_ok(const std::vector<Point>& pts, const Hull& h, const std::vector<int>& alphas, const Vec& ranks) {
    std::vector<Rational> all;
    for (const auto& a : pts)
        for (const auto& b : pts) all.push_back(omega(a, b));
    if (gcd_of(all) != BigInt(1)) return false;
    for (const auto& a : pts) {
        std::vector<Rational> row;
        for (const auto& b : pts) row.push_back(omega(a, b));
        if (gcd_of(row) != BigInt(1)) return false;
    }
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        const Point e = Rational(1, alphas[i]) * h.m[i];
        std::vector<Rational> row;
        for (const auto& b : pts) row.push_back(omega(e, b));
        if (gcd_of(row) != BigInt(ranks[i])) return false;
    }
    return true;
}

// Origin in the forbidden region of the hull, and no parallel long edges.
bool forbidden_ok(const Hull& h) {
    const int k = static_cast<int>(h.m.size());
    for (int i = 0; i < k; ++i) {
        const Point& li = h.vertices[i];
        int j = 0;
        Rational best = omega(h.m[i], h.vertices[0] - li);
        for (int t = 1; t < k; ++t) {
            const Rational v = omega(h.m[i], h.vertices[t] - li);
            if (v > best) {
                best = v;
                j = t;
            }
        }
        if (omega(h.m[i], li + h.vertices[j]) < 0) return false;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (omega(h.m[i], h.m[j]) == 0) return false;
    return true;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Coordinates with respect to a positively oriented Z-basis of the lattice
// spanned by the points (echelon basis (g, y), (0, h)).
std::vector<Point> integral_coordinates(const std::vector<Point>& pts) {
    BigInt d = 1;
    for (const auto& p : pts) {
        d = boost::multiprecision::lcm(d, BigInt(boost::multiprecision::denominator(p.x)));
        d = boost::multiprecision::lcm(d, BigInt(boost::multiprecision::denominator(p.y)));
    }
    auto scaled = [&](const Point& p) {
        return std::pair<BigInt, BigInt>{boost::multiprecision::numerator(p.x * Rational(d)),
                                         boost::multiprecision::numerator(p.y * Rational(d))};
    };
    BigInt ux = 0, uy = 0, h = 0;
    for (const auto& p : pts) {
        auto [x, y] = scaled(p);
        if (x == 0) {
            h = boost::multiprecision::gcd(h, y - 0);
            continue;
        }
        if (ux == 0) {
            // Move the old u into the vertical part; it has x = 0.
            h = boost::multiprecision::gcd(h, uy);
            ux = x;
            uy = y;
            continue;
        }
        // Extended Euclid on the x-coordinates.
        BigInt a = ux, b = x, sa = 1, sb = 0, ta = 0, tb = 1;
        while (b != 0) {
            const BigInt q = floor_div(a, b);
            BigInt t = a - q * b;
            a = b;
            b = t;
            t = sa - q * sb;
            sa = sb;
            sb = t;
            t = ta - q * tb;
            ta = tb;
            tb = t;
        }
        if (a < 0) {
            a = -a;
            sa = -sa;
            ta = -ta;
        }
        const BigInt g = a;
        const BigInt ny = sa * uy + ta * y;
        const BigInt zy = (x / g) * uy - (ux / g) * y;  // vertical combination
        h = boost::multiprecision::gcd(h, zy);
        ux = g;
        uy = ny;
    }
    if (ux < 0) {
        ux = -ux;
        uy = -uy;
    }
    if (h != 0) uy = uy - floor_div(uy, h) * h;
    if (ux == 0 || h == 0) return pts;  // degenerate: leave as is
    std::vector<Point> out;
    for (const auto& p : pts) {
        auto [x, y] = scaled(p);
        const BigInt a = x / ux;
        const BigInt b = (y - a * uy) / h;
        out.push_back(Point{Rational(a), Rational(b)});
    }
    return out;
}

}  // namespace

std::optional<HPPolygon> reconstruct_polygon(const std::vector<int>& alphas, const Vec& ranks, const Vec& chis) {
    const auto hull = raw_reconstruct(alphas, ranks, chis);
    if (!hull) return std::nullopt;
    const auto pts = subdivide(*hull, alphas);
    if (!lattice_ok(pts, *hull, alphas, ranks)) return std::nullopt;
    return HPPolygon{integral_coordinates(pts)};
}

namespace {

class Search {
public:
    Search(const Surface& s, int k) : s_(s), k_(k) {}

    void consider(const std::vector<int>& alphas, const Vec& ranks, const Vec& chis) {
        Rational work = 0;
        for (int i = 0; i < k_; ++i) work += Rational(chis[i], checked_mul(ranks[i], ranks[(i + 1) % k_]));
        if (work != Rational(s_.K2())) return reject("work_horse");
        std::vector<BlockDatum> data;
        for (int i = 0; i < k_; ++i) data.push_back(BlockDatum{alphas[i], ranks[i], chis[i]});
        const auto reduced = reduced_gram_from_data(data);
        if (!reduced) return reject("gram_integrality");
        const auto hull = raw_reconstruct(alphas, ranks, chis);
        if (!hull) return reject("reconstruction");
        const auto pts = subdivide(*hull, alphas);
        if (!lattice_ok(pts, *hull, alphas, ranks)) return reject("lattice");
        if (!forbidden_ok(*hull)) return reject("forbidden_region");
        const Matrix full = expand_reduced_gram(*reduced, alphas);
        if (!serre_matrix(full).plausible()) return reject("serre");
        Vec full_ranks;
        for (int i = 0; i < k_; ++i)
            for (int t = 0; t < alphas[i]; ++t) full_ranks.push_back(ranks[i]);
        if (rank_zero_lattice_even(full, full_ranks) != s_.even_lattice()) return reject("parity");
        auto canonical = canonical_rotation(data);
        if (found_.count(canonical)) return;
        found_.emplace(canonical, HPPolygon{integral_coordinates(pts)});
    }

    Enumeration finish() {
        Enumeration out;
        out.surface = s_.id();
        out.blocks = k_;
        out.rejected = rejected_;
        for (auto& [data, polygon] : found_)
            out.candidates.push_back(Candidate{data, *reduced_gram_from_data(data), polygon});
        return out;
    }

private:
    void reject(const char* why) { ++rejected_[why]; }
    const Surface& s_;
    int k_;
    std::map<std::vector<BlockDatum>, HPPolygon> found_;
    std::map<std::string, long> rejected_;
};

void compositions(int total, int parts, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
    if (parts == 1) {
        if (total >= 1) {
            cur.push_back(total);
            f(cur);
            cur.pop_back();
        }
        return;
    }
    for (int a = 1; a <= total - (parts - 1); ++a) {
        cur.push_back(a);
        compositions(total - a, parts - 1, cur, f);
        cur.pop_back();
    }
}

Int isqrt(Int n) {
    if (n <= 0) return 0;
    Int r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

void enumerate3(const Surface& s, Search& search) {
    const Int K2 = s.K2();
    // Largest rank-area R over all triangles, from the bound for the
    // smallest R_0 <= 12/K^2.
    Int rmax = 0;
    for (Int r0 = 1; r0 <= 12 / K2; ++r0) {
        if (K2 * r0 <= 4) continue;
        const Int mid = (5 * r0 + r0 * r0) / (K2 * r0 - 4);
        rmax = std::max(rmax, r0 + std::max(mid, r0));
    }
    std::vector<int> cur;
    compositions(static_cast<int>(12 - K2), 3, cur, [&](const std::vector<int>& al) {
        // For triangles chi_{i,i+1}^2 alpha_i alpha_{i+1} = K^2 R_{i+2}.
        Vec bound(3);
        for (int i = 0; i < 3; ++i) bound[i] = isqrt(K2 * rmax / (al[i] * al[(i + 1) % 3]));
        for (Int c0 = 1; c0 <= bound[0]; ++c0)
            for (Int c1 = 1; c1 <= bound[1]; ++c1)
                for (Int c2 = 1; c2 <= bound[2]; ++c2) {
                    const Vec chis{c0, c1, c2};
                    // xs = (r0 r1, r1 r2, r2 r0).
                    for (const Vec& xs : bounded_reciprocal_solve(chis, Rational(K2))) {
                        const Rational sq = Rational(checked_mul(xs[0], xs[2]), xs[1]);
                        if (boost::multiprecision::denominator(sq) != 1) continue;
                        const Int r0 = exact_sqrt(to_int(sq));
                        if (r0 <= 0 || xs[0] % r0 || xs[2] % r0) continue;
                        const Int r1 = xs[0] / r0, r2 = xs[2] / r0;
                        if (r1 * r2 != xs[1]) continue;
                        search.consider(al, Vec{r0, r1, r2}, chis);
                    }
                }
    });
}

void enumerate4(const Surface& s, Search& search) {
    const Int K2 = s.K2();
    std::vector<int> cur;
    compositions(static_cast<int>(12 - K2), 4, cur, [&](const std::vector<int>& al) {
        const Int a0 = al[0], a1 = al[1], a2 = al[2], a3 = al[3];
        for (Int c12 = 1; c12 <= 2; ++c12) {
            if (c12 * c12 * a1 * a2 > 4) continue;
            for (Int c30 = 1; c30 <= 4; ++c30) {
                if (c30 * c30 * a3 * a0 < 4 || c30 * c30 * c12 * c12 * a0 * a1 * a2 * a3 > 16) continue;
                struct Ranks {
                    Vec r;
                    std::optional<Rational> gamma;
                };
                std::vector<Ranks> cands;
                // Case 1: a Markov-type equation a1/r0^2 + a0/r1^2 = K^2 a0 a1 / 4.
                if (c12 * c12 * a1 * a2 == 4 && c30 * c30 * a3 * a0 == 4) {
                    for (const Vec& x : bounded_reciprocal_solve(Vec{a1, a0}, Rational(K2 * a0 * a1, 4))) {
                        const Int r0 = exact_sqrt(x[0]), r1 = exact_sqrt(x[1]);
                        if (r0 < 0 || r1 < 0) continue;
                        if ((a1 * r1 * r1) % a2 || (a0 * r0 * r0) % a3) continue;
                        const Int r2 = exact_sqrt(a1 * r1 * r1 / a2), r3 = exact_sqrt(a0 * r0 * r0 / a3);
                        if (r2 < 0 || r3 < 0) continue;
                        cands.push_back(Ranks{Vec{r0, r1, r2, r3}, std::nullopt});
                    }
                }
                // Case 2: chi_12 = 1 with the published finite bounds.
                if (c12 == 1 && c30 * c30 * a3 * a0 >= 5) {
                    const Rational gamma = 1 / (Rational(1, 2) - Rational(2, c30 * c30 * a3 * a0));
                    for (Int r0 = 1; r0 <= 22 * c30; ++r0)
                        for (Int r3 = 1; r3 <= 22 * c30 / r0; ++r3) {
                            if (Rational(r0, r3) > Rational(c30 * a3, 2) || Rational(r3, r0) > Rational(c30 * a0, 2)) continue;
                            const Int bound = a0 * r0 * r0 + a3 * r3 * r3;
                            for (Int r1 = 1; a1 * r1 * r1 <= bound; ++r1)
                                for (Int r2 = 1; a1 * r1 * r1 + a2 * r2 * r2 <= bound; ++r2)
                                    cands.push_back(Ranks{Vec{r0, r1, r2, r3}, gamma});
                        }
                }
                for (const auto& [r, gamma] : cands) {
                    const Int S12 = c12 * a1 * a2 * r[1] * r[2], S30 = c30 * a3 * a0 * r[3] * r[0];
                    for (Int c01 = 1;; ++c01) {
                        const Int S01 = c01 * a0 * a1 * r[0] * r[1];
                        if (S01 >= S12 + S30) break;
                        if (gamma) {
                            const Rational q(S01, a1 * r[1] * r[1]);
                            if (q < 2 || q > *gamma) continue;
                        }
                        const Int S23 = S12 + S30 - S01;
                        if (S23 % (a2 * a3 * r[2] * r[3])) continue;
                        const Int c23 = S23 / (a2 * a3 * r[2] * r[3]);
                        if (gamma) {
                            const Rational q(S23, a2 * r[2] * r[2]);
                            if (q < 2 || q > *gamma) continue;
                        }
                        search.consider(al, r, Vec{c01, c12, c23, c30});
                    }
                }
            }
        }
    });
}

}  // namespace

Enumeration enumerate_minimal(const Surface& s, int k) {
    if (k != 3 && k != 4) throw std::invalid_argument("enumeration is implemented for 3 and 4 blocks only");
    Search search(s, k);
    if (12 - s.K2() >= k) {
        if (k == 3) enumerate3(s, search);
        else enumerate4(s, search);
    }
    Enumeration out = search.finish();
    if (k == 3)
        out.metadata["chi_bound"] =
            "chi_{i,i+1}^2 alpha_i alpha_{i+1} = K^2 R_{i+2} with R bounded through the smallest R_0 <= 12/K^2 "
            "(derived bound, not a published constant)";
    else
        out.metadata["case2_bounds"] = "gamma = 1/(1/2 - 2/(chi_30^2 alpha_3 alpha_0)) <= 10, r_0 r_3 <= 22 chi_30 (published)";
    out.metadata["parity_filter"] =
        "rank-zero lattice parity must match the Picard lattice parity (separates P1xP1 from X1)";
    out.metadata["relation_pruning"] = "not applied";
    return out;
}

}  // namespace dpz
