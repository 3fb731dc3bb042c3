#include "dpz/io.hpp"

namespace dpz {

namespace {

Int get_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer");
    return j.get<Int>();
}

}  // namespace

NumClass numclass_from_json(const json& j, const Surface& s) {
    if (!j.is_object() || !j.contains("r") || !j.contains("c1"))
        throw std::invalid_argument("a class must be an object with \"r\" and \"c1\"");
    const Int r = get_int(j["r"], "r");
    if (!j["c1"].is_array()) throw std::invalid_argument("c1 must be an array of integers");
    Vec c1;
    for (const auto& x : j["c1"]) c1.push_back(get_int(x, "c1 entry"));
    if (static_cast<int>(c1.size()) != s.picard_rank())
        throw std::invalid_argument("c1 has length " + std::to_string(c1.size()) + " but " + s.id() + " has Picard rank " +
                                    std::to_string(s.picard_rank()));
    if (r == 0) {
        if (!j.contains("chi")) throw std::invalid_argument("a rank zero class needs an explicit \"chi\"");
        return NumClass{0, c1, get_int(j["chi"], "chi")};
    }
    if (r < 0) throw std::invalid_argument("rank must be non-negative");
    NumClass e;
    try {
        e = make_exceptional(r, c1, s);
    } catch (const std::domain_error& err) {
        throw std::invalid_argument(err.what());
    }
    if (j.contains("chi") && get_int(j["chi"], "chi") != e.chi)
        throw std::invalid_argument("chi " + j["chi"].dump() + " does not make " + to_string(e) + " exceptional");
    return e;
}

Collection collection_from_json(const json& j, bool require_full) {
    if (!j.is_object()) throw std::invalid_argument("a collection must be a JSON object");
    if (!j.contains("surface") || !j["surface"].is_string()) throw std::invalid_argument("missing \"surface\" id");
    const Surface& s = Surface::get(j["surface"].get<std::string>());
    if (!j.contains("objects") || !j["objects"].is_array()) throw std::invalid_argument("missing \"objects\" array");
    std::vector<NumClass> objs;
    for (const auto& o : j["objects"]) objs.push_back(numclass_from_json(o, s));
    std::vector<int> blocks;
    if (j.contains("blocks")) {
        if (!j["blocks"].is_array()) throw std::invalid_argument("\"blocks\" must be an array of sizes");
        for (const auto& b : j["blocks"]) blocks.push_back(static_cast<int>(get_int(b, "block size")));
    }
    Collection c(s, objs, blocks);
    validate(c, require_full);
    return c;
}

json to_json(const NumClass& e) { return json{{"r", e.r}, {"c1", e.c1}, {"chi", e.chi}}; }

json to_json(const Collection& c) {
    json objs = json::array();
    for (const auto& e : c.objects) objs.push_back(to_json(e));
    json j{{"surface", c.surf().id()}, {"objects", objs}};
    if (!c.blocks.empty()) j["blocks"] = c.blocks;
    return j;
}

json to_json(const Rational& q) {
    if (boost::multiprecision::denominator(q) == 1) {
        const BigInt z = boost::multiprecision::numerator(q);
        if (z >= std::numeric_limits<Int>::min() && z <= std::numeric_limits<Int>::max()) return json(to_int(z));
    }
    return json(to_string(q));
}

json to_json(const HPPolygon& p) {
    json v = json::array();
    for (const auto& x : p.vertices) v.push_back(json::array({to_json(x.x), to_json(x.y)}));
    return json{{"vertices", v}};
}

json to_json(const Quiver& q) {
    json j{{"n", q.size()}, {"arrows", q.c}};
    if (!q.multiplicities.empty()) j["multiplicities"] = q.multiplicities;
    return j;
}

json to_json(const Matrix& m) { return json(m); }

}  // namespace dpz
