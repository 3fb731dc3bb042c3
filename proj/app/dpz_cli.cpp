// Command-line front end: collection computations, fixture verification,
// enumeration and the JSON service.  Exit status is 0 iff every requested
// check passes.
#include "dpz/classifier.hpp"
#include "dpz/fixtures.hpp"
#include "dpz/io.hpp"
#include "dpz/mutation.hpp"
#include "dpz/service.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace dpz;

namespace {

struct Input {
    std::string path;     // JSON collection file, "-" for standard input
    std::string surface;  // or a published fixture: surface + label
    std::string label;    // "b,n"
};

void add_input_options(CLI::App* cmd, Input& in) {
    cmd->add_option("-i,--input", in.path, "collection JSON file (\"-\" for standard input)");
    cmd->add_option("-s,--surface", in.surface, "surface of a published collection");
    cmd->add_option("-l,--label", in.label, "label b,n of a published collection");
}

Collection read_collection(const Input& in, const std::string& fixture_dir) {
    if (!in.label.empty()) {
        const auto sf = load_surface_fixtures(fixture_dir + "/" + in.surface + ".json");
        Label l;
        char comma = 0;
        int n = 0;
        std::istringstream ls(in.label);
        if (!(ls >> l.blocks >> comma >> n) || comma != ',') throw std::invalid_argument("label must look like 3,1");
        l.number = n;
        return sf.entry(l).collection;
    }
    std::stringstream buf;
    if (in.path.empty() || in.path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream f(in.path);
        if (!f) throw std::runtime_error("cannot open " + in.path);
        buf << f.rdbuf();
    }
    const json j = json::parse(buf.str());
    return collection_from_json(j.contains("collection") ? j["collection"] : j);
}

int print_report(const Report& r, bool verbose) {
    for (const auto& c : r.results)
        if (verbose || !c.ok)
            std::cout << (c.ok ? "ok    " : "FAIL  ") << c.subject << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
    std::cout << r.results.size() - r.failures() << "/" << r.results.size() << " checks passed\n";
    return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical exceptional collections on del Pezzo surfaces"};
    app.require_subcommand(1);
    std::string fixture_dir = default_fixture_dir();
    app.add_option("--fixtures", fixture_dir, "directory with the per-surface fixture files");
    Input in;
    int result = 0;

    auto* gram = app.add_subcommand("gram", "Gram and reduced Gram matrix");
    add_input_options(gram, in);
    gram->callback([&] {
        const Collection c = read_collection(in, fixture_dir);
        std::cout << json{{"gram", gram_matrix(c)}, {"reduced_gram", reduced_gram(c)}}.dump() << "\n";
    });

    std::string svg_path;
    bool forbidden = false;
    auto* polygon = app.add_subcommand("polygon", "Hille-Perling polygon");
    add_input_options(polygon, in);
    polygon->add_option("--svg", svg_path, "also write an SVG drawing to this file");
    polygon->add_flag("--forbidden", forbidden, "shade the forbidden region in the SVG");
    polygon->callback([&] {
        const Collection c = read_collection(in, fixture_dir);
        const HPPolygon p = polygon_of(c);
        json out = to_json(p);
        out["area_x2"] = to_json(area_x2(p));
        out["convex"] = is_convex(p);
        std::cout << out.dump() << "\n";
        if (!svg_path.empty()) {
            SvgOptions opt;
            opt.forbidden = forbidden && is_convex(p);
            std::ofstream(svg_path) << render_svg(p, opt);
        }
    });

    int index = 0;
    std::string side = "right";
    auto* mutate = app.add_subcommand("mutate", "quiver mutation at an object");
    add_input_options(mutate, in);
    mutate->add_option("--index", index, "object position")->required();
    mutate->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
    mutate->callback([&] {
        const Collection c = read_collection(in, fixture_dir);
        const QuiverMutation qm = quiver_mutate(c, index, parse_side(side));
        json out = describe(qm.collection);
        out["steps"] = qm.steps;
        std::cout << out.dump() << "\n";
    });

    auto* minimal = app.add_subcommand("is-minimal", "exit 0 iff no quiver mutation reduces the total rank");
    add_input_options(minimal, in);
    minimal->callback([&] {
        const bool m = is_minimal(read_collection(in, fixture_dir));
        std::cout << (m ? "true" : "false") << "\n";
        result = m ? 0 : 1;
    });

    auto* reduce = app.add_subcommand("reduce", "reduce to a block-complete collection");
    add_input_options(reduce, in);
    reduce->callback([&] {
        const Reduction r = reduce_to_block_complete(read_collection(in, fixture_dir));
        json out = describe(r.collection);
        out["block_mutations"] = r.block_mutations;
        out["areas_x2"] = r.areas_x2;
        std::cout << out.dump() << "\n";
    });

    std::string surface;
    int blocks = 3;
    bool as_json = false;
    auto* enumerate = app.add_subcommand("enumerate", "minimal block-complete collections with a given block count");
    enumerate->add_option("--surface", surface, "surface id")->required();
    enumerate->add_option("--blocks", blocks, "number of blocks (3 or 4)")->required();
    enumerate->add_flag("--json", as_json, "JSON output");
    enumerate->callback([&] {
        const Enumeration en = enumerate_minimal(Surface::get(surface), blocks);
        if (as_json) {
            json labels = json::array();
            for (const auto& c : en.candidates) {
                json alphas = json::array(), ranks = json::array(), chis = json::array();
                for (const auto& d : c.data) {
                    alphas.push_back(d.alpha);
                    ranks.push_back(d.rank);
                    chis.push_back(d.chi_next);
                }
                labels.push_back(json{{"alphas", alphas},
                                      {"ranks", ranks},
                                      {"chis", chis},
                                      {"reduced_gram", c.reduced_gram},
                                      {"polygon", to_json(c.polygon)}});
            }
            std::cout << json{{"surface", en.surface}, {"blocks", en.blocks}, {"labels", labels},
                              {"rejected", en.rejected}, {"metadata", en.metadata}}
                             .dump(2)
                      << "\n";
        } else {
            for (const auto& c : en.candidates) {
                std::cout << "alphas/ranks/chis:";
                for (const auto& d : c.data) std::cout << " (" << d.alpha << "," << d.rank << "," << d.chi_next << ")";
                std::cout << "  reduced Gram " << json(c.reduced_gram).dump() << "\n";
            }
            std::cout << en.candidates.size() << " candidate(s) on " << en.surface << " with " << en.blocks << " blocks\n";
        }
    });

    bool verbose = false;
    auto* vf = app.add_subcommand("verify-fixtures", "check every published table entry");
    vf->add_flag("-v,--verbose", verbose, "list passing checks too");
    vf->callback([&] { result = print_report(verify_tables(load_fixtures(fixture_dir)), verbose); });
    auto* vr = app.add_subcommand("verify-relations", "replay the published mutation relations");
    vr->add_flag("-v,--verbose", verbose, "list passing checks too");
    vr->callback([&] { result = print_report(verify_relations(load_fixtures(fixture_dir)), verbose); });
    auto* vc = app.add_subcommand("verify-certificates", "check the Weyl-orbit certificates");
    vc->add_flag("-v,--verbose", verbose, "list passing checks too");
    vc->callback([&] {
        const CertificateReport r = verify_certificates(load_fixtures(fixture_dir));
        if (r.offset) std::cout << "reflection index offset: " << *r.offset << "\n";
        result = print_report(r.report, verbose);
    });

    int port = 8080;
    std::string host = "127.0.0.1";
    auto* serve = app.add_subcommand("serve", "run the JSON service");
    serve->add_option("--port", port, "TCP port");
    serve->add_option("--host", host, "bind address");
    serve->callback([&] {
        const Service service(load_fixtures(fixture_dir));
        std::cerr << "listening on " << host << ":" << port << "\n";
        service.serve(host, port);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return result;
}
