// Stateless JSON service.  Every endpoint is a pure function of the request
// body; the HTTP layer only routes requests to handle().
//
//   GET  /surfaces
//   GET  /fixtures                       labels per surface
//   GET  /fixtures/{surface}/{b}/{n}     one published collection
//   POST /collection/validate            body: Collection or {"collection": ...}
//   POST /collection/polygon             (+ "svg": bool, "forbidden": bool)
//   POST /collection/quiver
//   POST /collection/mutate              {"collection", "op", "index", "side"}
//   POST /collection/minimal
//
// Invariant violations and malformed input give status 400 with
// {"ok": false, "error": reason}.
#pragma once

#include "dpz/fixtures.hpp"
#include "dpz/io.hpp"

#include <string>

namespace httplib {
class Server;
}

namespace dpz {

struct Response {
    int status = 200;
    json body;
};

class Service {
public:
    explicit Service(std::vector<SurfaceFixtures> fixtures) : fixtures_(std::move(fixtures)) {}
    Response handle(const std::string& method, const std::string& path, const std::string& body) const;
    // Route every request of `server` to handle().
    void mount(httplib::Server& server) const;
    // Blocks serving HTTP on host:port.
    void serve(const std::string& host, int port) const;

private:
    std::vector<SurfaceFixtures> fixtures_;
};

// Polygon, quiver, Gram, total rank and minimality of a collection.
json describe(const Collection& c);

}  // namespace dpz
