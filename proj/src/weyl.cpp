#include "dpz/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

namespace dpz {

std::vector<Vec> root_system(const Surface& s) {
    std::vector<Vec> roots;
    std::map<Vec, int> seen;
    std::deque<Vec> queue;
    for (const Vec& r : s.simple_roots()) {
        Vec neg(r.size());
        std::transform(r.begin(), r.end(), neg.begin(), [](Int a) { return -a; });
        for (const Vec& v : {r, neg})
            if (seen.emplace(v, static_cast<int>(roots.size())).second) {
                roots.push_back(v);
                queue.push_back(v);
            }
    }
    while (!queue.empty()) {
        const Vec v = queue.front();
        queue.pop_front();
        for (const Vec& rho : s.simple_roots()) {
            Vec w = reflect(rho, v, s);
            if (seen.emplace(w, static_cast<int>(roots.size())).second) {
                roots.push_back(w);
                queue.push_back(w);
            }
        }
    }
    return roots;
}

Permutation word_permutation(const Surface& s, const std::vector<Vec>& roots, const std::vector<int>& word, int offset) {
    std::map<Vec, int> index;
    for (std::size_t k = 0; k < roots.size(); ++k) index.emplace(roots[k], static_cast<int>(k));
    Permutation p(roots.size());
    for (std::size_t k = 0; k < roots.size(); ++k) {
        const NumClass image = weyl_apply(word, NumClass{0, roots[k], 0}, s, offset);
        auto it = index.find(image.c1);
        if (it == index.end()) throw std::logic_error("reflection does not preserve the root system");
        p[k] = static_cast<std::uint16_t>(it->second);
    }
    return p;
}

namespace {

// (a * b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation out(b.size());
    for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
    return out;
}

Permutation invert(const Permutation& a) {
    Permutation out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) out[a[x]] = static_cast<std::uint16_t>(x);
    return out;
}

bool is_identity(const Permutation& a) {
    for (std::size_t x = 0; x < a.size(); ++x)
        if (a[x] != x) return false;
    return true;
}

// Deterministic Schreier-Sims.  Level i has base point base[i], the strong
// generators fixing base[0..i-1], and a transversal u with u[b](base[i]) = b.
class StabilizerChain {
public:
    explicit StabilizerChain(std::size_t degree) : degree_(degree) {}

    void build(const std::vector<Permutation>& gens) {
        for (const auto& g : gens)
            if (!is_identity(g)) add_level_generator(0, g);
        int i = static_cast<int>(levels_.size()) - 1;
        while (i >= 0) {
            auto fresh = find_new_generator(i);
            if (!fresh) {
                --i;
                continue;
            }
            auto [h, j] = *fresh;
            for (int l = i + 1; l <= j; ++l) add_level_generator(l, h);
            i = j;
        }
    }

    BigInt order() const {
        BigInt o = 1;
        for (const auto& lv : levels_) o *= lv.transversal.size();
        return o;
    }

private:
    struct Level {
        std::uint16_t base = 0;
        std::vector<Permutation> gens;
        std::map<std::uint16_t, Permutation> transversal;
    };

    void add_level_generator(int l, const Permutation& g) {
        if (l == static_cast<int>(levels_.size())) {
            Level lv;
            std::size_t x = 0;
            while (g[x] == x) ++x;
            lv.base = static_cast<std::uint16_t>(x);
            levels_.push_back(lv);
        }
        levels_[l].gens.push_back(g);
        recompute_orbit(levels_[l]);
    }

    void recompute_orbit(Level& lv) {
        Permutation id(degree_);
        for (std::size_t x = 0; x < degree_; ++x) id[x] = static_cast<std::uint16_t>(x);
        lv.transversal.clear();
        lv.transversal.emplace(lv.base, id);
        std::deque<std::uint16_t> queue{lv.base};
        while (!queue.empty()) {
            const std::uint16_t b = queue.front();
            queue.pop_front();
            const Permutation u = lv.transversal.at(b);
            for (const auto& g : lv.gens) {
                const std::uint16_t c = g[b];
                if (!lv.transversal.count(c)) {
                    lv.transversal.emplace(c, compose(g, u));
                    queue.push_back(c);
                }
            }
        }
    }

    // Sift g through levels from `from`; returns the residue and the level
    // where sifting stopped (levels_.size() when it passed all levels).
    std::pair<Permutation, int> strip(Permutation g, int from) const {
        for (int l = from; l < static_cast<int>(levels_.size()); ++l) {
            const auto it = levels_[l].transversal.find(g[levels_[l].base]);
            if (it == levels_[l].transversal.end()) return {g, l};
            g = compose(invert(it->second), g);
        }
        return {g, static_cast<int>(levels_.size())};
    }

    // A Schreier generator at level i that does not sift, with the level it
    // must be added up to.
    std::optional<std::pair<Permutation, int>> find_new_generator(int i) {
        const Level& lv = levels_[i];
        for (const auto& [b, u] : lv.transversal)
            for (const auto& s : lv.gens) {
                const Permutation h = compose(invert(lv.transversal.at(s[b])), compose(s, u));
                auto [residue, j] = strip(h, i + 1);
                if (j < static_cast<int>(levels_.size()) || !is_identity(residue)) return std::make_pair(residue, j);
            }
        return std::nullopt;
    }

    std::size_t degree_;
    std::vector<Level> levels_;
};

}  // namespace

BigInt group_order(const std::vector<Permutation>& gens) {
    if (gens.empty()) return 1;
    StabilizerChain chain(gens.front().size());
    chain.build(gens);
    return chain.order();
}

BigInt weyl_group_order(const Surface& s) {
    const auto roots = root_system(s);
    if (roots.empty()) return 1;
    std::vector<Permutation> gens;
    for (std::size_t k = 0; k < s.simple_roots().size(); ++k) {
        Permutation p(roots.size());
        for (std::size_t x = 0; x < roots.size(); ++x) {
            const Vec image = reflect(s.simple_roots()[k], roots[x], s);
            p[x] = static_cast<std::uint16_t>(std::find(roots.begin(), roots.end(), image) - roots.begin());
        }
        gens.push_back(p);
    }
    return group_order(gens);
}

}  // namespace dpz
