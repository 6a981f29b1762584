#include "mfc/shuffle.hpp"

#include "mfc/error.hpp"

#include <algorithm>

namespace mfc {

std::vector<ShufflePair> type2_shuffles(const std::vector<int>& index_set)
{
    const int k = static_cast<int>(index_set.size());
    if (k < 2)
        throw PreconditionError("type-II shuffles need at least two indices");
    if (k > 30)
        throw PreconditionError("index set too large for shuffle enumeration");
    if (!std::is_sorted(index_set.begin(), index_set.end()) ||
        std::adjacent_find(index_set.begin(), index_set.end()) != index_set.end())
        throw PreconditionError("index set must be strictly increasing");

    std::vector<ShufflePair> out;
    // bit t of `tail` puts index_set[t+1] into J
    const unsigned full = (1u << (k - 1)) - 1;
    for (unsigned tail = 0; tail < full; ++tail) {
        ShufflePair p;
        p.left.push_back(index_set[0]);
        for (int t = 1; t < k; ++t)
            (tail >> (t - 1) & 1u ? p.left : p.right).push_back(index_set[t]);
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const ShufflePair& a, const ShufflePair& b) {
        if (a.left.size() != b.left.size())
            return a.left.size() < b.left.size();
        return a.left < b.left;
    });
    return out;
}

int shuffle_sign(const std::vector<int>& index_set, const ShufflePair& split, const std::map<int, int>& z_degrees)
{
    std::vector<int> merged = split.left;
    merged.insert(merged.end(), split.right.begin(), split.right.end());
    std::vector<int> sorted = merged;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != index_set || split.left.empty() || split.right.empty() || split.left.front() != index_set.front() ||
        !std::is_sorted(split.left.begin(), split.left.end()) || !std::is_sorted(split.right.begin(), split.right.end()))
        throw PreconditionError("not a type-II shuffle of the index set");

    for (int v : index_set)
        if (!z_degrees.count(v))
            throw PreconditionError("missing z-degree for index " + std::to_string(v));
    auto odd = [&](int v) { return z_degrees.at(v) % 2 != 0; };
    int parity = 0;
    for (int x : split.left)
        for (int y : split.right)
            if (y < x && odd(x) && odd(y))
                parity ^= 1;
    return parity;
}

int permutation_parity(const std::vector<int>& seq)
{
    int parity = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j])
                parity ^= 1;
    return parity;
}

}  // namespace mfc
