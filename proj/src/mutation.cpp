#include "dpz/mutation.hpp"

#include <algorithm>

namespace dpz {

Side parse_side(const std::string& s) {
    if (s == "left") return Side::left;
    if (s == "right") return Side::right;
    throw std::invalid_argument("side must be \"left\" or \"right\", got \"" + s + "\"");
}

std::string to_string(Side s) { return s == Side::left ? "left" : "right"; }

namespace {

// E_m of the helix generated by c: E_{m+n} = E_m ⊗ ω^{-1}.
NumClass helix(const Collection& c, int m) {
    const int n = c.size();
    const int q = (m >= 0 ? m / n : -((-m + n - 1) / n));
    return twist_canonical(c[m - q * n], -q, c.surf());
}

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

QuiverMutation quiver_mutate(const Collection& c, int i, Side side) {
    const int n = c.size();
    if (i < 0 || i >= n) throw std::out_of_range("mutation index " + std::to_string(i) + " outside [0, " + std::to_string(n) + ")");
    if (!is_very_strong(c)) throw std::invalid_argument("quiver mutation requires a very strong collection");
    const Surface& s = c.surf();
    Collection cur(s, c.objects);
    int pos = i;
    for (int steps = 1; steps <= 3 * n; ++steps) {
        if (side == Side::right) {
            cur = braid_right(cur, pos + 1);
            pos = (pos + 1) % n;
        } else {
            cur = braid_left(cur, pos >= 1 ? pos : n);
            pos = mod(pos - 1, n);
        }
        const NumClass passed = helix(c, side == Side::right ? i + steps : i - steps);
        const Int pairing = side == Side::right ? euler_form(c[i], passed, s) : euler_form(passed, c[i], s);
        if (pairing != 0 && is_very_strong(cur)) {
            QuiverMutation out{cur, steps, std::vector<int>(n)};
            const int dir = side == Side::right ? 1 : -1;
            out.position[i] = mod(i + dir * steps, n);
            for (int t = 1; t <= steps; ++t) out.position[mod(i + dir * t, n)] = mod(i + dir * (t - 1), n);
            for (int k = 0; k < n; ++k)
                if (k != i && (mod(dir * (k - i), n) == 0 || mod(dir * (k - i), n) > steps)) out.position[k] = k;
            return out;
        }
    }
    throw std::logic_error("quiver mutation did not return to a very strong collection");
}

QuiverMutation quiver_mutate_right(const Collection& c, int i) { return quiver_mutate(c, i, Side::right); }
QuiverMutation quiver_mutate_left(const Collection& c, int i) { return quiver_mutate(c, i, Side::left); }

Collection block_quiver_mutate(const Collection& c, int block_index, Side side) {
    const std::vector<int> sizes = c.blocks.empty() ? detect_blocks(c).sizes : c.blocks;
    if (block_index < 0 || block_index >= static_cast<int>(sizes.size()))
        throw std::out_of_range("block index " + std::to_string(block_index) + " outside [0, " + std::to_string(sizes.size()) + ")");
    int first = 0;
    for (int b = 0; b < block_index; ++b) first += sizes[b];
    const int alpha = sizes[block_index];
    Collection cur(c.surf(), c.objects);
    for (int t = 0; t < alpha; ++t) {
        const int k = side == Side::right ? first + alpha - 1 - t : first + t;
        cur = quiver_mutate(cur, k, side).collection;
    }
    return with_blocks(cur);
}

namespace {

// Rotate left until the blocks are not broken.
Collection unbroken(const Collection& c) {
    Collection cur(c.surf(), c.objects);
    for (int t = 0; t < c.size(); ++t) {
        if (!detect_blocks(cur).broken) return with_blocks(cur);
        cur = rotate_left(cur);
    }
    throw std::invalid_argument("every rotation of the collection has broken blocks");
}

// Quiver mutations at the edges of a long edge, last to first.
Collection collapse_long_edge(const Collection& c, const LongEdge& e) {
    const int n = c.size();
    Collection cur(c.surf(), c.objects);
    for (int t = e.count - 1; t >= 0; --t) cur = quiver_mutate_right(cur, (e.first + t) % n).collection;
    return cur;
}

}  // namespace

Reduction reduce_to_block_complete(const Collection& c) {
    if (!is_very_strong(c)) throw std::invalid_argument("reduction requires a very strong collection");
    Reduction out;
    Collection cur = unbroken(c);
    out.areas_x2.push_back(to_int(area_x2(polygon_of(cur))));
    for (int guard = 0; guard < 4 * c.size(); ++guard) {
        const HPPolygon p = polygon_of(cur);
        const auto pairs = parallel_long_edges(p);
        if (pairs.empty()) {
            out.collection = cur;
            return out;
        }
        const auto le = long_edges(p);
        const auto [a, b] = pairs.front();
        Collection best;
        std::optional<Rational> best_area;
        for (int e : {a, b}) {
            Collection candidate = collapse_long_edge(cur, le[e]);
            const Rational area = area_x2(polygon_of(candidate));
            if (!best_area || area < *best_area) {
                best_area = area;
                best = candidate;
            }
        }
        cur = unbroken(best);
        ++out.block_mutations;
        out.areas_x2.push_back(to_int(*best_area));
    }
    throw std::logic_error("reduction to a block-complete collection did not terminate");
}

bool is_minimal(const Collection& c) {
    if (!is_very_strong(c)) throw std::invalid_argument("minimality is defined for very strong collections");
    return origin_in_forbidden(polygon_of(c));
}

bool is_block_complete(const Collection& c) { return parallel_long_edges(polygon_of(c)).empty(); }

Quiver dwz_mutate(const Quiver& q, int v) {
    const int n = q.size();
    if (v < 0 || v >= n) throw std::out_of_range("quiver vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
    if (q.c[v][v] != 0) throw std::invalid_argument("vertex " + std::to_string(v) + " carries a loop");
    for (int k = 0; k < n; ++k)
        if (q.c[v][k] != -q.c[k][v])
            throw std::invalid_argument("arrows between " + std::to_string(v) + " and " + std::to_string(k) + " form a 2-cycle");
    Quiver out = q;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == v || b == v) {
                out.c[a][b] = -q.c[a][b];
                continue;
            }
            const Int av = q.c[a][v], vb = q.c[v][b];
            const Int composed =
                checked_add(checked_mul(av < 0 ? -av : av, vb), checked_mul(av, vb < 0 ? -vb : vb)) / 2;
            out.c[a][b] = checked_add(q.c[a][b], composed);
        }
    return out;
}

bool plucker_holds(const Quiver& q) {
    const int n = q.size();
    const Matrix& c = q.c;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int d = b + 1; d < n; ++d)
                for (int e = d + 1; e < n; ++e)
                    if (c[a][b] * c[d][e] - c[a][d] * c[b][e] + c[a][e] * c[b][d] != 0) return false;
    return true;
}

Collection apply_mutation_sequence(const Collection& c, const std::vector<int>& seq, Side side) {
    const int n = c.size();
    Collection cur(c.surf(), c.objects);
    for (int s : seq) {
        if (s < 1 || s > n) throw std::out_of_range("mutation step " + std::to_string(s) + " outside [1, " + std::to_string(n) + "]");
        cur = quiver_mutate(cur, side == Side::left ? s % n : s - 1, side).collection;
    }
    return cur;
}

MutationCheck check_mutation(const Collection& c, int i, Side side) {
    MutationCheck out;
    const QuiverMutation qm = quiver_mutate(c, i, side);
    const HPPolygon before = polygon_of(c);
    const HPPolygon after = polygon_of(qm.collection);
    const PolygonMutation route =
        side == Side::right ? polygon_quiver_mutate_right(before, i) : polygon_quiver_mutate_left(before, i);
    out.polygon_route = sl2z_transform(route.polygon, after).has_value();
    out.steps_agree = route.steps == qm.steps;

    const Quiver mutated = dwz_mutate(quiver_of(before, c.ranks()), i);
    const Quiver target = quiver_of(after, qm.collection.ranks());
    out.dwz = true;
    for (int a = 0; a < c.size(); ++a)
        for (int b = 0; b < c.size(); ++b)
            if (mutated.c[a][b] != target.c[qm.position[a]][qm.position[b]]) out.dwz = false;

    const int expected = area_delta_sign(before, i);
    const Rational area_change = area_x2(after) - area_x2(before);
    const Int rank_change = qm.collection.total_rank() - c.total_rank();
    const int area_sign = area_change > 0 ? 1 : (area_change < 0 ? -1 : 0);
    const int rank_sign = rank_change > 0 ? 1 : (rank_change < 0 ? -1 : 0);
    out.area_sign = area_sign == expected && rank_sign == expected;
    return out;
}

}  // namespace dpz
