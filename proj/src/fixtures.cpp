#include "dpz/fixtures.hpp"

#include "dpz/io.hpp"
#include "dpz/mutation.hpp"
#include "dpz/weyl.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>

#ifndef DPZ_FIXTURE_DIR
#define DPZ_FIXTURE_DIR "data/fixtures"
#endif

namespace dpz {

std::string Label::str() const {
    return "(" + std::to_string(blocks) + "," + (number ? std::to_string(*number) : std::string("*")) + ")";
}

const FixtureEntry& SurfaceFixtures::entry(const Label& l) const {
    for (const auto& e : entries)
        if (e.label == l) return e;
    throw std::out_of_range("no entry " + l.str() + " for " + surface);
}

std::string default_fixture_dir() { return DPZ_FIXTURE_DIR; }

namespace {

Label label_from_json(const json& j) {
    Label l;
    l.blocks = j.at(0).get<int>();
    if (!j.at(1).is_null()) l.number = j.at(1).get<int>();
    return l;
}

}  // namespace

SurfaceFixtures load_surface_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file " + path);
    const json d = json::parse(in);
    SurfaceFixtures out;
    out.surface = d.at("surface").get<std::string>();
    const Surface& s = Surface::get(out.surface);
    for (const auto& l : d.at("labels")) {
        FixtureEntry e;
        e.surface = out.surface;
        e.label = label_from_json(l.at("label"));
        e.alphas = l.at("alphas").get<std::vector<int>>();
        e.ranks = l.at("ranks").get<Vec>();
        e.reduced_gram = l.at("reduced_gram").get<Matrix>();
        e.reduced_quiver = l.at("reduced_quiver").get<Vec>();
        std::vector<NumClass> objs;
        std::vector<int> sizes;
        for (const auto& block : l.at("blocks")) {
            sizes.push_back(static_cast<int>(block.size()));
            for (const auto& o : block) objs.push_back(make_exceptional(o.at("r").get<Int>(), o.at("c1").get<Vec>(), s));
        }
        e.collection = Collection(s, objs, sizes);
        const json& orbit = l.at("orbit");
        if (!orbit.is_null()) {
            const std::string kind = orbit.at("kind").get<std::string>();
            if (kind == "trivial_group") e.orbit = OrbitKind::trivial_group;
            else if (kind == "all_reflections_equivalent") e.orbit = OrbitKind::all_reflections_equivalent;
            else if (kind == "certificate") {
                e.orbit = OrbitKind::certificate;
                for (const auto& p : orbit.at("pairs"))
                    e.certificate.push_back(
                        CertificatePair{p.at("weyl").get<std::vector<int>>(), p.at("mutations").get<std::vector<int>>()});
            } else {
                throw std::runtime_error("unknown orbit kind \"" + kind + "\" in " + path);
            }
        }
        out.entries.push_back(std::move(e));
    }
    for (const auto& r : d.at("relations"))
        out.relations.push_back(
            Relation{label_from_json(r.at("source")), label_from_json(r.at("target")), r.at("sequence").get<std::vector<int>>()});
    return out;
}

std::vector<SurfaceFixtures> load_fixtures(const std::string& dir) {
    std::vector<SurfaceFixtures> out;
    for (const auto& id : Surface::ids()) {
        const std::filesystem::path p = std::filesystem::path(dir) / (id + ".json");
        if (std::filesystem::exists(p)) out.push_back(load_surface_fixtures(p.string()));
    }
    if (out.empty()) throw std::runtime_error("no fixture files found in " + dir);
    return out;
}

int Report::failures() const {
    return static_cast<int>(std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.ok; }));
}

void Report::add(std::string subject, bool ok, std::string detail) {
    results.push_back(CheckResult{std::move(subject), ok, std::move(detail)});
}

namespace {

template <typename F>
void guarded(Report& report, const std::string& subject, F&& check) {
    try {
        check();
    } catch (const std::exception& e) {
        report.add(subject, false, std::string("exception: ") + e.what());
    }
}

std::string matrix_str(const Matrix& m) { return json(m).dump(); }

}  // namespace

Report verify_tables(const std::vector<SurfaceFixtures>& fixtures) {
    Report report;
    for (const auto& sf : fixtures)
        for (const auto& e : sf.entries) {
            const std::string who = e.surface + " " + e.label.str() + ": ";
            guarded(report, who + "table", [&] {
                const Collection& c = e.collection;
                const Surface& s = c.surf();
                bool exceptional = true;
                std::string why;
                try {
                    validate(c, true);
                } catch (const std::exception& err) {
                    exceptional = false;
                    why = err.what();
                }
                report.add(who + "exceptional", exceptional, why);
                report.add(who + "very strong", is_very_strong(c));

                const BlockInfo info = detect_blocks(c);
                report.add(who + "blocks", info.sizes == e.alphas && !info.broken && c.blocks == e.alphas,
                           "detected " + json(info.sizes).dump() + (info.broken ? " (broken)" : ""));
                Vec reps;
                int p = 0;
                for (int b : info.sizes) {
                    reps.push_back(c[p].r);
                    p += b;
                }
                report.add(who + "ranks", reps == e.ranks, "got " + json(reps).dump());

                const Matrix rg = reduced_gram(c);
                report.add(who + "reduced Gram", rg == e.reduced_gram, "got " + matrix_str(rg));

                const Quiver bq = block_quiver_of(c);
                Vec upper;
                for (int a = 0; a < bq.size(); ++a)
                    for (int b = a + 1; b < bq.size(); ++b) upper.push_back(bq.c[a][b]);
                report.add(who + "reduced quiver", upper == e.reduced_quiver, "got " + json(upper).dump());

                const int alpha_sum = std::accumulate(e.alphas.begin(), e.alphas.end(), 0);
                report.add(who + "sum alpha + K^2 = 12", alpha_sum + s.K2() == 12);

                const auto data = block_data(c);
                Rational work = 0;
                for (std::size_t i = 0; i < data.size(); ++i)
                    work += Rational(data[i].chi_next) / Rational(BigInt(data[i].rank) * BigInt(data[(i + 1) % data.size()].rank));
                report.add(who + "work-horse identity", work == Rational(s.K2()), "sum = " + to_string(work));

                const auto from_data = reduced_gram_from_data(data);
                report.add(who + "Gram from block data", from_data && *from_data == e.reduced_gram);

                report.add(who + "block complete", is_block_complete(c));
                report.add(who + "minimal", is_minimal(c));
            });
        }
    return report;
}

Report verify_relations(const std::vector<SurfaceFixtures>& fixtures) {
    Report report;
    for (const auto& sf : fixtures)
        for (const auto& r : sf.relations) {
            const std::string who = sf.surface + " " + r.source.str() + " -> " + r.target.str() + " via " + json(r.sequence).dump();
            guarded(report, who, [&] {
                const Collection result = apply_mutation_sequence(sf.entry(r.source).collection, r.sequence, Side::left);
                const auto data = canonical_rotation(block_data(result));
                if (r.target.number) {
                    const auto want = canonical_rotation(block_data(sf.entry(r.target).collection));
                    report.add(who, data == want, data == want ? "" : "block data differs");
                } else {
                    const bool ok = static_cast<int>(data.size()) == r.target.blocks && is_very_strong(result);
                    report.add(who, ok, "result has " + std::to_string(data.size()) + " blocks");
                }
            });
        }
    return report;
}

namespace {

Collection weyl_image(const std::vector<int>& word, const Collection& c, int offset) {
    Collection out(c.surf(), {});
    for (const auto& e : c.objects) out.objects.push_back(weyl_apply(word, e, c.surf(), offset));
    return out;
}

// Every pair of every certificate verifies under `offset`.
bool certificates_hold(const std::vector<const FixtureEntry*>& entries, int offset) {
    for (const FixtureEntry* e : entries)
        for (const auto& pair : e->certificate) {
            try {
                const Collection w = weyl_image(pair.weyl, e->collection, offset);
                const Collection m = apply_mutation_sequence(e->collection, pair.mutations, Side::left);
                if (!equivalent(w, m)) return false;
            } catch (const std::out_of_range&) {
                return false;
            }
        }
    return true;
}

}  // namespace

CertificateReport verify_certificates(const std::vector<SurfaceFixtures>& fixtures) {
    CertificateReport out;
    Report& report = out.report;
    std::vector<const FixtureEntry*> certified;
    for (const auto& sf : fixtures)
        for (const auto& e : sf.entries) {
            const std::string who = e.surface + " " + e.label.str() + ": ";
            const Surface& s = e.collection.surf();
            switch (e.orbit) {
                case OrbitKind::none:
                    break;
                case OrbitKind::trivial_group:
                    report.add(who + "trivial symmetry group", s.simple_roots().empty());
                    break;
                case OrbitKind::all_reflections_equivalent:
                    for (std::size_t k = 0; k < s.simple_roots().size(); ++k) {
                        Collection image(s, {});
                        for (const auto& x : e.collection.objects)
                            image.objects.push_back(NumClass{x.r, reflect(s.simple_roots()[k], x.c1, s), x.chi});
                        report.add(who + "reflection " + std::to_string(k) + " gives an equivalent collection",
                                   equivalent(e.collection, image).has_value());
                    }
                    break;
                case OrbitKind::certificate:
                    certified.push_back(&e);
                    break;
            }
        }
    if (certified.empty()) return out;

    for (int offset : {0, 1})
        if (certificates_hold(certified, offset)) {
            out.offset = offset;
            break;
        }
    report.add("certificate index base", out.offset.has_value(),
               out.offset ? "offset " + std::to_string(*out.offset) : "no offset verifies every certificate");
    const int offset = out.offset.value_or(0);
    for (const FixtureEntry* e : certified) {
        const std::string who = e->surface + " " + e->label.str() + ": ";
        const Surface& s = e->collection.surf();
        for (std::size_t k = 0; k < e->certificate.size(); ++k) {
            const auto& pair = e->certificate[k];
            guarded(report, who + "pair " + std::to_string(k), [&] {
                const Collection w = weyl_image(pair.weyl, e->collection, offset);
                const Collection m = apply_mutation_sequence(e->collection, pair.mutations, Side::left);
                report.add(who + "pair " + std::to_string(k), equivalent(w, m).has_value());
            });
        }
        guarded(report, who + "generation", [&] {
            const auto roots = root_system(s);
            std::vector<Permutation> gens;
            for (const auto& pair : e->certificate) gens.push_back(word_permutation(s, roots, pair.weyl, offset));
            const BigInt got = group_order(gens), want = weyl_group_order(s);
            report.add(who + "Weyl elements generate the symmetry group", got == want,
                       "generated order " + got.str() + " of " + want.str());
        });
    }
    return out;
}

}  // namespace dpz
