#pragma once

#include <map>
#include <vector>

namespace mfc {

/// An ordered split (J, J') of an increasing index sequence.
struct ShufflePair {
    std::vector<int> left;   // J, always contains the first element of I
    std::vector<int> right;  // J'
    bool operator==(const ShufflePair&) const = default;
};

/// All splits of I into two nonempty increasing blocks with min(I) in the left
/// block, ordered by (|J|, J lexicographic). There are 2^{|I|-1} - 1 of them.
std::vector<ShufflePair> type2_shuffles(const std::vector<int>& index_set);

/// Parity (0 or 1) of the Koszul sign taking z_{i_1}...z_{i_k} to
/// z_{j_1}...z_{j_r} z_{j'_1}...z_{j'_s}: counts the pairs (x in J, y in J', y < x)
/// with both z-degrees odd. `z_degree(v)` is looked up in `z_degrees`.
int shuffle_sign(const std::vector<int>& index_set, const ShufflePair& split, const std::map<int, int>& z_degrees);

/// Parity of the number of inversions of a sequence of distinct integers.
int permutation_parity(const std::vector<int>& seq);

}  // namespace mfc
