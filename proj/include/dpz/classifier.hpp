// Bounded enumeration of minimal block-complete collections, described by
// their cyclic block data (alpha_i, r_i, chi_{i,i+1}), for 3 and 4 blocks.
#pragma once

#include "dpz/polygon.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dpz {

// All tuples of positive integers k with sum_i nums[i] / k[i] = a (a > 0),
// sorted.  The search fixes the largest remaining term first, which bounds
// every k[i] by nums[i] * (number of remaining terms) / remainder.
std::vector<Vec> bounded_reciprocal_solve(const Vec& nums, const Rational& a);

// Long edges m_i with omega(m_i, m_{i+1}) = S_i = chi_i alpha_i alpha_{i+1} r_i r_{i+1}
// (closing cyclically), placed so that omega(l_{i-1,i}, l_{i,i+1}) = R_i = alpha_i r_i^2 on
// the long-edge hull.  The returned polygon lists every subdivision vertex
// (one per object) in integral coordinates with respect to a Z-basis of the
// lattice spanned by those vertices.  std::nullopt when the data admit no
// such polygon; only 3 and 4 blocks are supported.
std::optional<HPPolygon> reconstruct_polygon(const std::vector<int>& alphas, const Vec& ranks, const Vec& chis);

struct Candidate {
    std::vector<BlockDatum> data;  // canonical rotation
    Matrix reduced_gram;
    HPPolygon polygon;
    bool operator<(const Candidate& o) const { return data < o.data; }
};

struct Enumeration {
    std::string surface;
    int blocks = 0;
    std::vector<Candidate> candidates;  // sorted by data
    // Candidates rejected by each filter, by filter name.
    std::map<std::string, long> rejected;
    // Bounds and filters that go beyond the published search, by name.
    std::map<std::string, std::string> metadata;
};

// k must be 3 or 4 (std::invalid_argument otherwise).
Enumeration enumerate_minimal(const Surface& s, int k);

}  // namespace dpz
