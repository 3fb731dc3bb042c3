#include "dpz/collection.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dpz {

Vec Collection::ranks() const {
    Vec r;
    for (const auto& e : objects) r.push_back(e.r);
    return r;
}

Int Collection::total_rank() const {
    Int t = 0;
    for (const auto& e : objects) t = checked_add(t, e.r);
    return t;
}

Int Collection::sum_rank_squares() const {
    Int t = 0;
    for (const auto& e : objects) t = checked_add(t, checked_mul(e.r, e.r));
    return t;
}

bool is_exceptional(const Collection& c) {
    const Surface& s = c.surf();
    for (int i = 0; i < c.size(); ++i) {
        if (euler_form(c[i], c[i], s) != 1) return false;
        for (int j = i + 1; j < c.size(); ++j)
            if (euler_form(c[j], c[i], s) != 0) return false;
    }
    return true;
}

void validate(const Collection& c, bool require_full) {
    if (c.surface == nullptr) throw std::invalid_argument("collection has no surface");
    const Surface& s = c.surf();
    if (require_full && c.size() != s.collection_length())
        throw std::invalid_argument("a full collection on " + s.id() + " has " + std::to_string(s.collection_length()) +
                                    " objects, got " + std::to_string(c.size()));
    for (int i = 0; i < c.size(); ++i) {
        s.check_dimension(c[i].c1);
        if (euler_form(c[i], c[i], s) != 1)
            throw std::invalid_argument("object " + std::to_string(i) + " " + to_string(c[i]) + " is not exceptional");
        for (int j = i + 1; j < c.size(); ++j)
            if (euler_form(c[j], c[i], s) != 0)
                throw std::invalid_argument("chi(E_" + std::to_string(j) + ", E_" + std::to_string(i) + ") != 0");
    }
    if (!c.blocks.empty()) {
        if (std::accumulate(c.blocks.begin(), c.blocks.end(), 0) != c.size() ||
            std::any_of(c.blocks.begin(), c.blocks.end(), [](int b) { return b <= 0; }))
            throw std::invalid_argument("block sizes do not partition the collection");
        int p = 0;
        for (int b : c.blocks) {
            for (int a = p; a < p + b; ++a)
                for (int q = a + 1; q < p + b; ++q)
                    if (euler_form(c[a], c[q], s) != 0 || slope(c[a], s) != slope(c[q], s))
                        throw std::invalid_argument("block starting at object " + std::to_string(p) +
                                                    " is not an orthogonal equal-slope run");
            p += b;
        }
    }
}

Matrix gram_matrix(const Collection& c) {
    Matrix m(c.size(), Vec(c.size(), 0));
    for (int i = 0; i < c.size(); ++i)
        for (int j = 0; j < c.size(); ++j) m[i][j] = euler_form(c[i], c[j], c.surf());
    return m;
}

Matrix reduced_gram(const Collection& c) {
    std::vector<int> sizes = c.blocks.empty() ? detect_blocks(c).sizes : c.blocks;
    std::vector<int> reps;
    int p = 0;
    for (int b : sizes) {
        reps.push_back(p);
        p += b;
    }
    Matrix m(reps.size(), Vec(reps.size(), 0));
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j) m[i][j] = euler_form(c[reps[i]], c[reps[j]], c.surf());
    return m;
}

bool is_very_strong(const Collection& c) {
    const Surface& s = c.surf();
    for (const auto& e : c.objects)
        if (e.r <= 0) return false;
    for (int i = 0; i + 1 < c.size(); ++i)
        if (slope(c[i], s) > slope(c[i + 1], s)) return false;
    return slope(c.objects.back(), s) <= slope(c.objects.front(), s).plus(s.K2());
}

namespace {

NumClass left_mutation(const NumClass& e, const NumClass& f, const Surface& s) {
    return f - euler_form(e, f, s) * e;
}

NumClass right_mutation(const NumClass& e, const NumClass& f, const Surface& s) {
    return e - euler_form(e, f, s) * f;
}

Collection braid(const Collection& c, int i, bool left) {
    const int n = c.size();
    if (i < 1 || i > n) throw std::out_of_range("braid index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
    if (i == n) {
        Collection r = rotate_right(c);
        r = braid(r, n - 1, left);
        return rotate_left(r);
    }
    const Surface& s = c.surf();
    Collection out(s, c.objects);
    const NumClass& a = c[i - 1];
    const NumClass& b = c[i];
    if (left) {
        out.objects[i - 1] = normalize_sign(left_mutation(a, b, s), s);
        out.objects[i] = a;
    } else {
        out.objects[i - 1] = b;
        out.objects[i] = normalize_sign(right_mutation(a, b, s), s);
    }
    return out;
}

}  // namespace

Collection braid_left(const Collection& c, int i) { return braid(c, i, true); }
Collection braid_right(const Collection& c, int i) { return braid(c, i, false); }

Collection rotate_left(const Collection& c) {
    Collection out(c.surf(), {});
    if (c.objects.empty()) return out;
    out.objects.push_back(twist_canonical(c.objects.back(), 1, c.surf()));
    out.objects.insert(out.objects.end(), c.objects.begin(), c.objects.end() - 1);
    return out;
}

Collection rotate_right(const Collection& c) {
    Collection out(c.surf(), {});
    if (c.objects.empty()) return out;
    out.objects.assign(c.objects.begin() + 1, c.objects.end());
    out.objects.push_back(twist_canonical(c.objects.front(), -1, c.surf()));
    return out;
}

std::vector<NumClass> dual_right(const Collection& c) {
    std::vector<NumClass> f;
    for (int i = 0; i < c.size(); ++i) {
        NumClass x = c[i];
        for (int k = i + 1; k < c.size(); ++k) x = right_mutation(x, c[k], c.surf());
        f.push_back(x);
    }
    return f;
}

std::vector<NumClass> dual_left(const Collection& c) {
    std::vector<NumClass> g;
    for (int i = 0; i < c.size(); ++i) {
        NumClass x = c[i];
        for (int k = i - 1; k >= 0; --k) x = left_mutation(c[k], x, c.surf());
        g.push_back(x);
    }
    return g;
}

BlockInfo detect_blocks(const Collection& c) {
    const Surface& s = c.surf();
    BlockInfo info;
    if (c.objects.empty()) return info;
    info.sizes.push_back(1);
    for (int i = 1; i < c.size(); ++i) {
        if (slope(c[i], s) == slope(c[i - 1], s) && euler_form(c[i - 1], c[i], s) == 0) ++info.sizes.back();
        else info.sizes.push_back(1);
    }
    const NumClass first_twisted = twist_canonical(c.objects.front(), -1, s);
    info.broken = c.size() > 1 && slope(c.objects.back(), s) == slope(first_twisted, s);
    return info;
}

Collection with_blocks(const Collection& c) {
    Collection out = c;
    out.blocks = detect_blocks(c).sizes;
    return out;
}

Collection tensor_line_bundle(const Collection& c, const Vec& L) {
    Collection out = c;
    for (auto& e : out.objects) e = twist(e, L, c.surf());
    return out;
}

std::vector<BlockDatum> block_data(const Collection& c) {
    const Surface& s = c.surf();
    Collection cur = c;
    cur.blocks.clear();
    BlockInfo info = detect_blocks(cur);
    for (int t = 0; t < c.size() && info.broken; ++t) {
        cur = rotate_left(cur);
        info = detect_blocks(cur);
    }
    if (info.broken) throw std::invalid_argument("block_data: every rotation has broken blocks");
    std::vector<int> reps;
    int p = 0;
    for (int b : info.sizes) {
        reps.push_back(p);
        p += b;
    }
    const int k = static_cast<int>(reps.size());
    std::vector<BlockDatum> data;
    for (int i = 0; i < k; ++i) {
        const NumClass& e = cur[reps[i]];
        NumClass next = i + 1 < k ? cur[reps[i + 1]] : twist_canonical(cur[reps[0]], -1, s);
        data.push_back(BlockDatum{info.sizes[i], e.r, euler_form(e, next, s)});
    }
    return data;
}

std::vector<BlockDatum> canonical_rotation(const std::vector<BlockDatum>& data) {
    std::vector<BlockDatum> best = data;
    for (std::size_t t = 1; t < data.size(); ++t) {
        std::vector<BlockDatum> rot(data.begin() + t, data.end());
        rot.insert(rot.end(), data.begin(), data.begin() + t);
        if (rot < best) best = rot;
    }
    return best;
}

std::optional<Matrix> reduced_gram_from_data(const std::vector<BlockDatum>& data) {
    const std::size_t k = data.size();
    std::vector<Rational> t(k);
    for (std::size_t i = 0; i < k; ++i)
        t[i] = Rational(data[i].chi_next) / Rational(BigInt(data[i].rank) * BigInt(data[(i + 1) % k].rank));
    Matrix m(k, Vec(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        m[i][i] = 1;
        Rational acc = 0;
        for (std::size_t j = i + 1; j < k; ++j) {
            acc += t[j - 1];
            Rational v = acc * Rational(BigInt(data[i].rank) * BigInt(data[j].rank));
            if (boost::multiprecision::denominator(v) != 1) return std::nullopt;
            m[i][j] = to_int(v);
        }
    }
    return m;
}

Matrix expand_reduced_gram(const Matrix& reduced, const std::vector<int>& alphas) {
    std::vector<int> owner;
    for (std::size_t b = 0; b < alphas.size(); ++b)
        for (int a = 0; a < alphas[b]; ++a) owner.push_back(static_cast<int>(b));
    const std::size_t n = owner.size();
    Matrix m(n, Vec(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (owner[a] == owner[b]) m[a][b] = a == b ? 1 : 0;
            else if (owner[a] < owner[b]) m[a][b] = reduced[owner[a]][owner[b]];
        }
    return m;
}

std::optional<EquivalenceWitness> equivalent(const Collection& a, const Collection& b) {
    if (a.size() != b.size() || a.surface != b.surface || a.size() == 0) return std::nullopt;
    const Surface& s = a.surf();
    const int n = a.size();
    // A block split by the end of b can only be permuted in a frame where it
    // is whole, so compare against the first unbroken rotation of b.
    Collection frame(s, b.objects);
    int target_rotation = 0;
    if (is_very_strong(frame))
        while (target_rotation < n && detect_blocks(frame).broken) {
            frame = rotate_left(frame);
            ++target_rotation;
        }
    if (target_rotation == n) {
        frame = Collection(s, b.objects);
        target_rotation = 0;
    }
    Collection cur = a;
    cur.blocks.clear();
    for (int rot = 0; rot < n; ++rot) {
        for (int sign : {1, -1}) {
            std::vector<NumClass> target;
            for (const auto& e : frame.objects) target.push_back(sign * e);
            std::vector<Slope> mu;
            for (const auto& e : cur.objects) mu.push_back(slope(e, s));
            // Runs of equal slope; objects inside a run may be permuted freely.
            std::vector<std::pair<int, int>> runs;
            for (int p = 0; p < n;) {
                int q = p;
                while (q + 1 < n && mu[q + 1] == mu[p]) ++q;
                runs.emplace_back(p, q + 1);
                p = q + 1;
            }
            for (int p = runs[0].first; p < runs[0].second; ++p) {
                const NumClass& x = cur[p];
                const NumClass& y = target[0];
                if (x.r != y.r || x.r == 0) continue;
                Vec L(x.c1.size());
                bool divisible = true;
                for (std::size_t k = 0; k < L.size() && divisible; ++k) {
                    Int d = checked_sub(y.c1[k], x.c1[k]);
                    if (d % x.r != 0) divisible = false;
                    else L[k] = d / x.r;
                }
                if (!divisible) continue;
                bool ok = true;
                for (auto [lo, hi] : runs) {
                    std::vector<NumClass> lhs, rhs;
                    for (int q = lo; q < hi; ++q) {
                        lhs.push_back(twist(cur[q], L, s));
                        rhs.push_back(target[q]);
                    }
                    std::sort(lhs.begin(), lhs.end());
                    std::sort(rhs.begin(), rhs.end());
                    if (lhs != rhs) {
                        ok = false;
                        break;
                    }
                }
                if (ok) return EquivalenceWitness{rot, target_rotation, sign, L};
            }
        }
        cur = rotate_left(cur);
    }
    return std::nullopt;
}

SerreResult serre_matrix(const Matrix& m) {
    SerreResult out;
    RatMatrix a = to_rational(m);
    out.s = multiply(inverse(a), transpose(a));
    const std::size_t n = m.size();
    RatMatrix nil = out.s;
    for (std::size_t i = 0; i < n; ++i) nil[i][i] -= 1;
    out.rank_minus_identity = rank_of(nil);
    RatMatrix power = nil;
    for (std::size_t k = 1; k < n; ++k) power = multiply(power, nil);
    out.unipotent = n == 0 || std::all_of(power.begin(), power.end(), [](const std::vector<Rational>& row) {
                        return std::all_of(row.begin(), row.end(), [](const Rational& x) { return x == 0; });
                    });
    return out;
}

bool rank_zero_lattice_even(const Matrix& gram, const Vec& ranks) {
    const std::size_t n = ranks.size();
    // Find u with ranks·u = 1 by the extended Euclidean algorithm.
    Vec u(n, 0);
    Int g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (ranks[i] == 0) continue;
        if (g == 0) {
            g = ranks[i] > 0 ? ranks[i] : -ranks[i];
            u[i] = ranks[i] > 0 ? 1 : -1;
            continue;
        }
        Int old_r = g, r = ranks[i], old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            Int q = old_r / r;
            Int tmp = old_r - q * r;
            old_r = r;
            r = tmp;
            tmp = old_s - q * s;
            old_s = s;
            s = tmp;
            tmp = old_t - q * t;
            old_t = t;
            t = tmp;
        }
        if (old_r < 0) {
            old_r = -old_r;
            old_s = -old_s;
            old_t = -old_t;
        }
        for (auto& x : u) x = checked_mul(x, old_s);
        u[i] = old_t;
        g = old_r;
    }
    if (g != 1) throw std::invalid_argument("ranks are not coprime");
    auto chi = [&](const Vec& x, const Vec& y) {
        Int v = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (gram[a][b] != 0) v = checked_add(v, checked_mul(checked_mul(x[a], gram[a][b]), y[b]));
        return v;
    };
    for (std::size_t i = 0; i < n; ++i) {
        Vec b(n);
        for (std::size_t j = 0; j < n; ++j) b[j] = (i == j ? 1 : 0) - checked_mul(ranks[i], u[j]);
        if (chi(b, b) % 2 != 0) return false;
    }
    return true;
}

std::string to_string(const Collection& c) {
    std::ostringstream os;
    os << c.surf().id() << ": ";
    std::vector<int> sizes = c.blocks.empty() ? std::vector<int>(c.size(), 1) : c.blocks;
    int p = 0;
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        os << (b ? " | " : "");
        for (int k = 0; k < sizes[b]; ++k) os << (k ? ", " : "") << to_string(c[p + k]);
        p += sizes[b];
    }
    return os.str();
}

}  // namespace dpz
