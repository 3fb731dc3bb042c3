#include "dpz/service.hpp"

#include "dpz/mutation.hpp"

#include <httplib.h>

#include <regex>

namespace dpz {

namespace {

Response error(int status, const std::string& reason) { return Response{status, json{{"ok", false}, {"error", reason}}}; }

const json& collection_part(const json& body) { return body.contains("collection") ? body["collection"] : body; }

json surface_json(const Surface& s) {
    return json{{"id", s.id()},
                {"picard_rank", s.picard_rank()},
                {"collection_length", s.collection_length()},
                {"K2", s.K2()},
                {"canonical_class", s.canonical_class()},
                {"intersection_matrix", s.intersection_matrix()},
                {"simple_roots", s.simple_roots()}};
}

}  // namespace

json describe(const Collection& c) {
    json j{{"collection", to_json(with_blocks(c))}, {"gram", gram_matrix(c)}, {"total_rank", c.total_rank()}};
    const bool very_strong = is_very_strong(c);
    j["very_strong"] = very_strong;
    if (very_strong) {
        const HPPolygon p = polygon_of(c);
        j["polygon"] = to_json(p);
        j["area_x2"] = to_json(area_x2(p));
        j["quiver"] = to_json(quiver_of(p, c.ranks()));
        j["reduced_gram"] = reduced_gram(c);
        j["minimal"] = origin_in_forbidden(p);
        j["block_complete"] = parallel_long_edges(p).empty();
    }
    return j;
}

Response Service::handle(const std::string& method, const std::string& path, const std::string& body) const {
    try {
        if (method == "GET" && path == "/surfaces") {
            json out = json::array();
            for (const auto& id : Surface::ids()) out.push_back(surface_json(Surface::get(id)));
            return Response{200, out};
        }
        if (method == "GET" && path == "/fixtures") {
            json out = json::object();
            for (const auto& sf : fixtures_) {
                json labels = json::array();
                for (const auto& e : sf.entries) labels.push_back(json::array({e.label.blocks, *e.label.number}));
                out[sf.surface] = labels;
            }
            return Response{200, out};
        }
        static const std::regex fixture_path(R"(/fixtures/([A-Za-z0-9]+)/(\d+)/(\d+))");
        std::smatch m;
        if (method == "GET" && std::regex_match(path, m, fixture_path)) {
            for (const auto& sf : fixtures_)
                if (sf.surface == m[1].str())
                    for (const auto& e : sf.entries)
                        if (e.label == Label{std::stoi(m[2].str()), std::stoi(m[3].str())}) {
                            json out = describe(e.collection);
                            out["label"] = json::array({e.label.blocks, *e.label.number});
                            return Response{200, out};
                        }
            return error(404, "no fixture " + path.substr(10));
        }
        if (method != "POST") return error(404, "unknown endpoint " + method + " " + path);

        json req;
        try {
            req = json::parse(body);
        } catch (const json::parse_error& e) {
            return error(400, std::string("malformed JSON: ") + e.what());
        }
        if (path == "/collection/validate") {
            const Collection c = collection_from_json(collection_part(req));
            const BlockInfo info = detect_blocks(c);
            return Response{200, json{{"ok", true},
                                      {"very_strong", is_very_strong(c)},
                                      {"blocks", info.sizes},
                                      {"broken_blocks", info.broken},
                                      {"total_rank", c.total_rank()}}};
        }
        if (path == "/collection/polygon") {
            const Collection c = collection_from_json(collection_part(req));
            const HPPolygon p = polygon_of(c);
            json out{{"ok", true}, {"polygon", to_json(p)}, {"convex", is_convex(p)}, {"area_x2", to_json(area_x2(p))}};
            json le = json::array();
            for (const auto& e : long_edges(p)) le.push_back(json{{"first", e.first}, {"count", e.count}});
            out["long_edges"] = le;
            if (is_convex(p)) {
                json hs = json::array();
                for (const auto& h : forbidden_region(p))
                    hs.push_back(json{{"m", json::array({to_json(h.m.x), to_json(h.m.y)})}, {"bound", to_json(h.bound)}});
                out["forbidden_region"] = hs;
                out["origin_in_forbidden"] = origin_in_forbidden(p);
                out["admissible_vertices"] = admissible_vertices(p);
            }
            if (req.value("svg", false)) {
                SvgOptions opt;
                opt.forbidden = req.value("forbidden", false) && is_convex(p);
                opt.quiver = req.value("quiver", false);
                opt.ranks = c.ranks();
                out["svg"] = render_svg(p, opt);
            }
            return Response{200, out};
        }
        if (path == "/collection/quiver") {
            const Collection c = collection_from_json(collection_part(req));
            return Response{200, json{{"ok", true}, {"quiver", to_json(quiver_of(c))}, {"block_quiver", to_json(block_quiver_of(c))}}};
        }
        if (path == "/collection/mutate") {
            const Collection c = collection_from_json(collection_part(req));
            const std::string op = req.value("op", "quiver_mutate");
            const Side side = parse_side(req.value("side", "right"));
            if (!req.contains("index") || !req["index"].is_number_integer())
                return error(400, "\"index\" must be an integer");
            const int index = req["index"].get<int>();
            json out;
            if (op == "quiver_mutate") {
                if (index < 0 || index >= c.size()) return error(400, "index out of range");
                const QuiverMutation qm = quiver_mutate(c, index, side);
                out = describe(qm.collection);
                out["steps"] = qm.steps;
                out["position"] = qm.position;
            } else if (op == "block_quiver_mutate") {
                out = describe(block_quiver_mutate(c, index, side));
            } else if (op == "braid") {
                if (index < 1 || index > c.size()) return error(400, "braid index out of range");
                out = describe(side == Side::left ? braid_left(c, index) : braid_right(c, index));
            } else {
                return error(400, "unknown op \"" + op + "\"");
            }
            out["ok"] = true;
            return Response{200, out};
        }
        if (path == "/collection/minimal") {
            const Collection c = collection_from_json(collection_part(req));
            if (!is_very_strong(c)) return error(400, "minimality is defined for very strong collections");
            return Response{200, json{{"ok", true}, {"minimal", is_minimal(c)}, {"block_complete", is_block_complete(c)}}};
        }
        return error(404, "unknown endpoint " + method + " " + path);
    } catch (const std::invalid_argument& e) {
        return error(400, e.what());
    } catch (const std::domain_error& e) {
        return error(400, e.what());
    } catch (const std::out_of_range& e) {
        return error(400, e.what());
    } catch (const std::overflow_error& e) {
        return error(400, e.what());
    } catch (const nlohmann::json::exception& e) {
        return error(400, e.what());
    }
}

void Service::mount(httplib::Server& server) const {
    auto route = [this](const httplib::Request& req, httplib::Response& res) {
        const Response r = handle(req.method, req.path, req.body);
        res.status = r.status;
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_content(r.body.dump(), "application/json");
    };
    server.Get(R"(/.*)", route);
    server.Post(R"(/.*)", route);
    server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.status = 204;
    });
}

void Service::serve(const std::string& host, int port) const {
    httplib::Server server;
    mount(server);
    if (!server.listen(host, port)) throw std::runtime_error("cannot listen on " + host + ":" + std::to_string(port));
}

}  // namespace dpz
