#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "cohesion/error.hpp"
#include "cohesion/rng.hpp"

namespace cohesion {

/// M! saturated at 2^64-1; only the comparison against small counts matters.
inline std::uint64_t saturating_factorial(int m) {
    std::uint64_t result = 1;
    for (int k = 2; k <= m; ++k) {
        if (result > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(k)) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        result *= static_cast<std::uint64_t>(k);
    }
    return result;
}

/// `count` distinct non-identity permutations of 0..M-1, drawn by
/// Fisher-Yates from xoshiro256** (splitmix64-seeded). Duplicate and
/// identity draws are rejected and redrawn. When fewer than `count`
/// non-identity permutations exist, all M!-1 of them are returned in
/// lexicographic order instead (the seed is then unused).
inline std::vector<std::vector<int>> generate_permutations(int m, std::uint64_t count,
                                                           std::uint64_t seed) {
    if (m < 2) {
        throw DegenerateDocumentError("generate_permutations: M=" + std::to_string(m) +
                                      " has no non-identity permutations");
    }
    std::vector<std::vector<int>> out;
    const std::uint64_t available = saturating_factorial(m) - 1;
    if (available <= count) {
        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        const std::vector<int> identity = perm;
        do {
            if (perm != identity) {
                out.push_back(perm);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }
    Xoshiro256StarStar rng(seed);
    std::set<std::vector<int>> seen;
    std::vector<int> identity(m);
    std::iota(identity.begin(), identity.end(), 0);
    while (out.size() < count) {
        std::vector<int> perm = identity;
        for (int i = m - 1; i > 0; --i) {
            const auto j = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(i) + 1));
            std::swap(perm[i], perm[j]);
        }
        if (perm == identity || !seen.insert(perm).second) {
            continue;
        }
        out.push_back(std::move(perm));
    }
    return out;
}

}  // namespace cohesion
