// The published tables of minimal collections as data, and the drivers that
// verify them: table invariants, mutation relations and Weyl-orbit
// certificates.
//
// One JSON file per surface (see tools/extract_fixtures.py for the schema).
#pragma once

#include "dpz/collection.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dpz {

// (blocks, number); number is empty for the "(3,*)" wildcard target.
struct Label {
    int blocks = 0;
    std::optional<int> number;
    bool operator==(const Label&) const = default;
    std::string str() const;
};

struct CertificatePair {
    std::vector<int> weyl;
    std::vector<int> mutations;
};

enum class OrbitKind { none, trivial_group, all_reflections_equivalent, certificate };

struct FixtureEntry {
    std::string surface;
    Label label;
    std::vector<int> alphas;
    Vec ranks;
    Matrix reduced_gram;
    Vec reduced_quiver;  // c_ij for i < j in lexicographic order
    Collection collection;
    OrbitKind orbit = OrbitKind::none;
    std::vector<CertificatePair> certificate;
};

struct Relation {
    Label source;
    Label target;
    std::vector<int> sequence;
};

struct SurfaceFixtures {
    std::string surface;
    std::vector<FixtureEntry> entries;
    std::vector<Relation> relations;
    const FixtureEntry& entry(const Label& l) const;  // throws std::out_of_range
};

// Directory configured at build time.
std::string default_fixture_dir();
SurfaceFixtures load_surface_fixtures(const std::string& path);
// Every surface file in `dir`, in Surface::ids() order.
std::vector<SurfaceFixtures> load_fixtures(const std::string& dir);

struct CheckResult {
    std::string subject;
    bool ok = false;
    std::string detail;
};

struct Report {
    std::vector<CheckResult> results;
    int failures() const;
    bool ok() const { return failures() == 0; }
    void add(std::string subject, bool ok, std::string detail = {});
};

// Exceptionality, very-strongness, blocks, ranks, reduced Gram and quiver,
// the K-theory and work-horse identities, Gram reconstruction from block
// data, block-completeness and minimality of each entry.
Report verify_tables(const std::vector<SurfaceFixtures>& fixtures);
// Each relation maps the source to a collection whose block data equals the
// target's up to rotation; a wildcard target only fixes the block count.
Report verify_relations(const std::vector<SurfaceFixtures>& fixtures);
// Orbit flags and certificates.  For certificates the reflection index base
// is chosen as the first of {0, 1} under which every pair of every
// certificate verifies; the represented Weyl elements must generate the
// whole group.
struct CertificateReport {
    Report report;
    std::optional<int> offset;
};
CertificateReport verify_certificates(const std::vector<SurfaceFixtures>& fixtures);

}  // namespace dpz
