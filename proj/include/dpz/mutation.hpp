// Quiver (cluster) mutations of very strong collections, block mutations,
// reduction to block-complete collections, minimality, and combinatorial
// quiver mutation used to cross-check them.
#pragma once

#include "dpz/polygon.hpp"

#include <string>
#include <vector>

namespace dpz {

enum class Side { left, right };
Side parse_side(const std::string& s);
std::string to_string(Side s);

struct QuiverMutation {
    Collection collection;
    // Number of braid moves performed.
    int steps = 0;
    // position[k] is the index in `collection` of the object that sat at k.
    std::vector<int> position;
};

// Push E_i through the helix by tilde braid moves (right: sigma~^{-1},
// leftwards: sigma~) until the moved object has passed an object it pairs
// non-trivially with and the collection is very strong again.
// Throws std::invalid_argument unless `c` is very strong.
QuiverMutation quiver_mutate(const Collection& c, int i, Side side);
QuiverMutation quiver_mutate_right(const Collection& c, int i);
QuiverMutation quiver_mutate_left(const Collection& c, int i);

// Quiver mutations at every object of block `block_index` (blocks as detected
// on `c`): last to first for the right side, first to last for the left side.
Collection block_quiver_mutate(const Collection& c, int block_index, Side side);

// Repeatedly collapse one of two parallel long edges by a block quiver
// mutation until the polygon has none.  Of the two candidates the one giving
// the smaller area is used (ties: the earlier long edge).  The result has
// detected blocks and no broken blocks.
struct Reduction {
    Collection collection;
    int block_mutations = 0;
    std::vector<Int> areas_x2;  // area after each step, starting with the input
};
Reduction reduce_to_block_complete(const Collection& c);

// No quiver mutation reduces the total rank: the origin lies in the forbidden
// region.  Throws std::invalid_argument unless `c` is very strong.
bool is_minimal(const Collection& c);
bool is_block_complete(const Collection& c);

// Quiver mutation at vertex v on signed multiplicities.  Throws
// std::invalid_argument when v carries a loop or the matrix is not
// antisymmetric at v (a 2-cycle).
Quiver dwz_mutate(const Quiver& q, int v);
// c_{ab} c_{de} - c_{ad} c_{be} + c_{ae} c_{bd} = 0 for all 4-tuples a<b<d<e.
bool plucker_holds(const Quiver& q);

// Left-to-right application of quiver mutations, each named by the index
// 1 <= s <= n of its first braid move: position s mod n for left mutations,
// s - 1 for right mutations.  Throws std::out_of_range on an invalid index.
Collection apply_mutation_sequence(const Collection& c, const std::vector<int>& seq, Side side = Side::left);

// Cross-checks for a single quiver mutation.
struct MutationCheck {
    bool polygon_route = false;  // shear route equals polygon_of up to SL2(Z)
    bool steps_agree = false;    // opposing vertex distance = braid moves
    bool dwz = false;            // relabelled DWZ mutation = quiver of result
    bool area_sign = false;      // rank and area change signs match area_delta_sign
    bool ok() const { return polygon_route && steps_agree && dwz && area_sign; }
};
MutationCheck check_mutation(const Collection& c, int i, Side side);

}  // namespace dpz
