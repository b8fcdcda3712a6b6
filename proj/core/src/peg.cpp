#include "recon/peg.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "recon/rng.hpp"

namespace recon {
namespace {

// BFS over the bipartite graph from variable v; fills depth-of-first-reach
// per check (-1 = unreached).
void reach_checks(int v, const std::vector<std::vector<int>>& var_nbrs,
                  const std::vector<std::vector<int>>& check_nbrs,
                  std::vector<int>& check_depth, std::vector<int>& var_seen,
                  int stamp) {
    std::fill(check_depth.begin(), check_depth.end(), -1);
    std::queue<int> vars;
    vars.push(v);
    var_seen[v] = stamp;
    int depth = 0;
    while (!vars.empty()) {
        std::size_t level = vars.size();
        bool grew = false;
        for (std::size_t q = 0; q < level; ++q) {
            const int u = vars.front();
            vars.pop();
            for (int c : var_nbrs[u]) {
                if (check_depth[c] >= 0) continue;
                check_depth[c] = depth;
                grew = true;
                for (int w : check_nbrs[c]) {
                    if (var_seen[w] != stamp) {
                        var_seen[w] = stamp;
                        vars.push(w);
                    }
                }
            }
        }
        if (!grew) break;
        ++depth;
    }
}

} // namespace

ParityCheckMatrix peg_construct(const std::vector<int>& var_degrees, int n_checks,
                                std::uint64_t seed) {
    const int n = static_cast<int>(var_degrees.size());
    if (n == 0 || n_checks <= 0)
        throw std::invalid_argument("peg_construct: empty graph");
    for (int d : var_degrees)
        if (d < 1 || d > n_checks)
            throw std::invalid_argument("peg_construct: bad variable degree");

    // process variables by increasing degree; seeded permutation of checks
    // breaks the remaining ties
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return var_degrees[a] < var_degrees[b]; });
    std::vector<int> tie_rank(n_checks);
    std::iota(tie_rank.begin(), tie_rank.end(), 0);
    Rng rng(seed);
    for (int i = n_checks - 1; i > 0; --i)
        std::swap(tie_rank[i], tie_rank[rng.next_u64() % (i + 1)]);

    std::vector<std::vector<int>> var_nbrs(n), check_nbrs(n_checks);
    std::vector<int> check_depth(n_checks), var_seen(n, -1);
    int stamp = 0;

    auto pick = [&](const std::vector<int>& candidates) {
        int best = -1;
        for (int c : candidates) {
            if (best < 0 ||
                check_nbrs[c].size() < check_nbrs[best].size() ||
                (check_nbrs[c].size() == check_nbrs[best].size() &&
                 tie_rank[c] < tie_rank[best]))
                best = c;
        }
        return best;
    };

    std::vector<int> candidates;
    for (int idx : order) {
        const int v = idx;
        for (int k = 0; k < var_degrees[v]; ++k) {
            candidates.clear();
            if (k == 0) {
                for (int c = 0; c < n_checks; ++c) candidates.push_back(c);
            } else {
                reach_checks(v, var_nbrs, check_nbrs, check_depth, var_seen, stamp++);
                int max_depth = -1;
                bool any_unreached = false;
                for (int c = 0; c < n_checks; ++c) {
                    if (check_depth[c] < 0)
                        any_unreached = true;
                    else
                        max_depth = std::max(max_depth, check_depth[c]);
                }
                for (int c = 0; c < n_checks; ++c) {
                    if (any_unreached ? check_depth[c] < 0
                                      : check_depth[c] == max_depth)
                        candidates.push_back(c);
                }
            }
            const int c = pick(candidates);
            var_nbrs[v].push_back(c);
            check_nbrs[c].push_back(v);
        }
    }

    ParityCheckMatrix h;
    h.n_cols = n;
    h.rows.resize(n_checks);
    for (int c = 0; c < n_checks; ++c) {
        h.rows[c] = check_nbrs[c];
        std::sort(h.rows[c].begin(), h.rows[c].end());
    }
    // PEG never leaves a check untouched when edges >= checks, but guard anyway
    for (auto& row : h.rows)
        if (row.empty()) throw std::runtime_error("peg_construct: empty check row");
    return h;
}

ParityCheckMatrix hamming74() {
    ParityCheckMatrix h;
    h.n_cols = 7;
    h.rows = {{0, 2, 4, 6}, {1, 2, 5, 6}, {3, 4, 5, 6}};
    return h;
}

ParityCheckMatrix fixture_rate_half_4096() {
    return peg_construct(std::vector<int>(4096, 3), 2048, 0x52484131ULL);
}

ParityCheckMatrix fixture_rate_tenth_10000() {
    std::vector<int> degrees;
    degrees.reserve(10000);
    degrees.insert(degrees.end(), 5000, 2);
    degrees.insert(degrees.end(), 4500, 3);
    degrees.insert(degrees.end(), 500, 9);
    return peg_construct(degrees, 9000, 0x52315431ULL);
}

} // namespace recon
