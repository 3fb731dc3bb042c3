// Picard lattices of del Pezzo surfaces, numerical K-theory classes, the
// Riemann-Roch Euler form, slopes, and the Weyl-group action on classes.
#pragma once

#include "dpz/numeric.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace dpz {

// One of the eleven del Pezzo surfaces P2, P1xP1, X1..X8 (X_n is P2 blown up
// in n points).  Divisors are dense integer vectors in the standard basis
// (H, E_1..E_n) for X_n and P2 = X_0, or (F_1, F_2) for P1xP1.
class Surface {
public:
    // Registry lookup; throws std::invalid_argument for unknown ids.
    static const Surface& get(const std::string& id);
    static const std::vector<std::string>& ids();

    const std::string& id() const { return id_; }
    int picard_rank() const { return static_cast<int>(canonical_.size()); }
    // Number of objects in a full exceptional collection.
    int collection_length() const { return picard_rank() + 2; }
    const Matrix& intersection_matrix() const { return form_; }
    const Vec& canonical_class() const { return canonical_; }
    Vec anticanonical_class() const;
    Int K2() const { return k2_; }
    const std::vector<Vec>& simple_roots() const { return roots_; }
    // Number of blown-up points for X_n (0 for P2); -1 for P1xP1.
    int blowups() const { return blowups_; }
    // True when the Picard lattice is even (only P1xP1).
    bool even_lattice() const { return blowups_ < 0; }

    // Intersection product; throws std::invalid_argument on dimension mismatch.
    Int dot(const Vec& a, const Vec& b) const;
    void check_dimension(const Vec& v) const;

private:
    explicit Surface(std::string id);
    std::string id_;
    int blowups_ = 0;
    Matrix form_;
    Vec canonical_;
    Int k2_ = 0;
    std::vector<Vec> roots_;
};

// A class in the numerical Grothendieck group: rank, first Chern class and
// Euler characteristic chi(e) = chi(O, e).
struct NumClass {
    Int r = 0;
    Vec c1;
    Int chi = 0;

    bool operator==(const NumClass&) const = default;
    auto operator<=>(const NumClass&) const = default;
};

NumClass operator+(const NumClass& a, const NumClass& b);
NumClass operator-(const NumClass& a, const NumClass& b);
NumClass operator*(Int k, const NumClass& a);

// Slope d/r with +infinity for rank zero classes, totally ordered.
struct Slope {
    bool infinite = false;
    Rational value;

    static Slope of(Int d, Int r);
    bool operator==(const Slope& o) const { return infinite == o.infinite && (infinite || value == o.value); }
    std::strong_ordering operator<=>(const Slope& o) const;
    Slope plus(Int k) const;
    std::string str() const;
};

// chi(e, f) from Riemann-Roch.
Int euler_form(const NumClass& e, const NumClass& f, const Surface& s);
// The unique exceptional class with rank r > 0 and first Chern class c1.
// Throws std::domain_error when no integral Euler characteristic exists.
NumClass make_exceptional(Int r, const Vec& c1, const Surface& s);
// Degree (-K)·c1.
Int degree(const NumClass& e, const Surface& s);
Slope slope(const NumClass& e, const Surface& s);
// e ⊗ L for a line bundle with first Chern class L (valid for any rank).
NumClass twist(const NumClass& e, const Vec& L, const Surface& s);
// e ⊗ ω^k.
NumClass twist_canonical(const NumClass& e, Int k, const Surface& s);
// Sign representative: rank > 0, or rank 0 and positive degree.
// Throws std::domain_error for a class of rank 0 and degree 0.
NumClass normalize_sign(const NumClass& e, const Surface& s);

// Root reflection D + (D·ρ)ρ; throws std::invalid_argument unless ρ² = -2 and K·ρ = 0.
Vec reflect(const Vec& rho, const Vec& D, const Surface& s);

// Reflection indices used in published certificates differ from the simple
// root order above on some surfaces.  `sage_index` is translated through the
// per-surface permutation and then shifted by `offset` (0 or 1) to a position
// in simple_roots().  Throws std::out_of_range when the result is invalid.
int simple_root_position(const Surface& s, int sage_index, int offset);
// Apply the reflections of `word` left to right to c1(e); rank and chi unchanged.
NumClass weyl_apply(const std::vector<int>& word, const NumClass& e, const Surface& s, int offset = 0);

std::string to_string(const NumClass& e);

}  // namespace dpz
