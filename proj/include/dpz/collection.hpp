// Ordered numerical exceptional collections: Gram matrices, braid mutations,
// rotations, dual collections, blocks, equivalence and Serre matrices.
#pragma once

#include "dpz/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dpz {

struct Collection {
    const Surface* surface = nullptr;
    std::vector<NumClass> objects;
    // Block sizes (summing to objects.size()); empty when not yet detected.
    std::vector<int> blocks;

    Collection() = default;
    Collection(const Surface& s, std::vector<NumClass> objs, std::vector<int> block_sizes = {})
        : surface(&s), objects(std::move(objs)), blocks(std::move(block_sizes)) {}

    const Surface& surf() const { return *surface; }
    int size() const { return static_cast<int>(objects.size()); }
    const NumClass& operator[](int i) const { return objects[i]; }
    Vec ranks() const;
    Int total_rank() const;
    Int sum_rank_squares() const;
};

// chi(E_i, E_i) = 1 and chi(E_j, E_i) = 0 for j > i.
bool is_exceptional(const Collection& c);
// Throws std::invalid_argument describing the first violated condition
// (exceptionality, block sizes, full length when `require_full`).
void validate(const Collection& c, bool require_full = true);

Matrix gram_matrix(const Collection& c);
// One representative per block; blocks are detected when absent.
Matrix reduced_gram(const Collection& c);

// Slopes non-decreasing and mu(E_{n-1}) <= mu(E_0) + K^2; false when a rank
// is not positive.
bool is_very_strong(const Collection& c);

// The tilde braid moves.  For 1 <= i <= n-1, braid_left replaces
// (E_{i-1}, E_i) by (L~_{E_{i-1}} E_i, E_{i-1}) and braid_right replaces it by
// (E_i, R~_{E_i} E_{i-1}); i = n acts on the wrapped pair through rotations.
// Blocks are dropped from the result.
Collection braid_left(const Collection& c, int i);
Collection braid_right(const Collection& c, int i);

// (E_{n-1} ⊗ ω, E_0, ..., E_{n-2}) and (E_1, ..., E_{n-1}, E_0 ⊗ ω^{-1}).
Collection rotate_left(const Collection& c);
Collection rotate_right(const Collection& c);

// Dual collections built from raw (sign-unnormalized) mutations:
// right dual F_i = R_{E_{n-1}} ... R_{E_{i+1}} E_i, left dual G_i = L_{E_0} ... L_{E_{i-1}} E_i.
std::vector<NumClass> dual_right(const Collection& c);
std::vector<NumClass> dual_left(const Collection& c);

struct BlockInfo {
    std::vector<int> sizes;
    // Last object orthogonal to, and of equal slope with, E_0 ⊗ ω^{-1}.
    bool broken = false;
};
// Maximal runs of consecutive equal-slope objects.  Requires very strong input.
BlockInfo detect_blocks(const Collection& c);
Collection with_blocks(const Collection& c);

Collection tensor_line_bundle(const Collection& c, const Vec& L);

// Rotation-invariant block data: (alpha_i, r_i, chi_{i,i+1}) with the wrap
// pairing chi(E_{k-1}, E_0 ⊗ ω^{-1}), after rotating broken blocks away.
struct BlockDatum {
    int alpha = 0;
    Int rank = 0;
    Int chi_next = 0;
    bool operator==(const BlockDatum&) const = default;
    auto operator<=>(const BlockDatum&) const = default;
};
std::vector<BlockDatum> block_data(const Collection& c);
// Lexicographically smallest cyclic rotation.
std::vector<BlockDatum> canonical_rotation(const std::vector<BlockDatum>& data);

// Reduced Gram matrix determined by cyclic block data (full Gram formula);
// std::nullopt when some entry is not integral.
std::optional<Matrix> reduced_gram_from_data(const std::vector<BlockDatum>& data);
// Expand a reduced Gram matrix to the full object-level Gram matrix.
Matrix expand_reduced_gram(const Matrix& reduced, const std::vector<int>& alphas);

struct EquivalenceWitness {
    int rotation = 0;         // left rotations applied to the first collection
    int target_rotation = 0;  // left rotations applied to the second one
    int sign = 1;
    Vec line_bundle;
};
// Rotations, block-internal permutations, a line bundle twist and a global
// sign; exhaustive and deterministic.  When b is very strong it is first
// rotated until no block is broken, so that permutations of a block split by
// the end of the collection are found.
std::optional<EquivalenceWitness> equivalent(const Collection& a, const Collection& b);

struct SerreResult {
    RatMatrix s;
    bool unipotent = false;
    int rank_minus_identity = 0;
    bool plausible() const { return unipotent && rank_minus_identity <= 2; }
};
// s = M^{-1} M^T; throws std::domain_error when M is singular.
SerreResult serre_matrix(const Matrix& m);

// Parity of the lattice of rank-zero classes under -chi, computed from a
// Gram matrix and the ranks of its basis objects (gcd of ranks must be 1).
bool rank_zero_lattice_even(const Matrix& gram, const Vec& ranks);

std::string to_string(const Collection& c);

}  // namespace dpz
