#pragma once

#include "errors.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace quatgi {

/// Strictly increasing sequence of 0-based indices selecting a principal submatrix.
using index_subset = std::vector<std::size_t>;

/// Calls f(alpha) for every alpha in L_{k,n}, lexicographically.
template <class F>
void for_each_subset(std::size_t k, std::size_t n, F&& f) {
    if (k > n) return;
    index_subset alpha(k);
    for (std::size_t t = 0; t < k; ++t) alpha[t] = t;
    for (;;) {
        f(static_cast<const index_subset&>(alpha));
        std::size_t t = k;
        while (t > 0 && alpha[t - 1] == n - k + t - 1) --t;
        if (t == 0) return;
        ++alpha[t - 1];
        for (std::size_t s = t; s < k; ++s) alpha[s] = alpha[s - 1] + 1;
    }
}

/// Calls f(alpha, pos) for every alpha in L_{k,n} containing `fixed`, where
/// alpha[pos] == fixed. Covers both J_{k,n}{i} and I_{k,n}{j}.
template <class F>
void for_each_subset_containing(std::size_t k, std::size_t n, std::size_t fixed, F&& f) {
    if (fixed >= n) throw dimension_mismatch("fixed index out of range");
    if (k == 0) return;
    // Choose the other k-1 members from the remaining n-1 indices.
    for_each_subset(k - 1, n - 1, [&](const index_subset& rest) {
        index_subset alpha;
        alpha.reserve(k);
        std::size_t pos = k - 1;
        bool placed = false;
        for (std::size_t t = 0; t < rest.size(); ++t) {
            const std::size_t idx = rest[t] < fixed ? rest[t] : rest[t] + 1;
            if (!placed && idx > fixed) {
                pos = alpha.size();
                alpha.push_back(fixed);
                placed = true;
            }
            alpha.push_back(idx);
        }
        if (!placed) {
            pos = alpha.size();
            alpha.push_back(fixed);
        }
        f(static_cast<const index_subset&>(alpha), pos);
    });
}

inline std::vector<index_subset> subsets(std::size_t k, std::size_t n) {
    std::vector<index_subset> out;
    for_each_subset(k, n, [&](const index_subset& a) { out.push_back(a); });
    return out;
}

inline std::vector<index_subset> subsets_containing(std::size_t k, std::size_t n, std::size_t fixed) {
    std::vector<index_subset> out;
    for_each_subset_containing(k, n, fixed, [&](const index_subset& a, std::size_t) { out.push_back(a); });
    return out;
}

}  // namespace quatgi
