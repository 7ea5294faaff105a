#include "bsdn/overlay.hpp"

#include <algorithm>
#include <numeric>

namespace bsdn {

bool Overlay::has_link(NodeId u, NodeId v) const {
    if (u >= n_ || v >= n_ || u == v) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

void Overlay::add_edge(NodeId u, NodeId v) {
    auto insert_sorted = [](std::vector<NodeId>& vec, NodeId x) {
        vec.insert(std::lower_bound(vec.begin(), vec.end(), x), x);
    };
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    ++edge_count_;
}

void Overlay::install_link(NodeId u, NodeId v) {
    if (u == v || has_link(u, v)) return;
    add_edge(u, v);
    ++installed_count_;
}

bool Overlay::connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    uint32_t count = 1;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (NodeId w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

Overlay build_overlay(uint32_t n, uint32_t degree_cap, uint64_t seed, uint32_t outbound) {
    if (n < 2) throw std::invalid_argument("build_overlay: need at least 2 nodes");
    if (degree_cap < 2) throw std::invalid_argument("build_overlay: degree_cap must be >= 2");

    Overlay g;
    g.n_ = n;
    g.cap_ = degree_cap;
    g.adj_.assign(n, {});

    Rng rng(derive_seed(seed, "overlay"));

    // Random spanning path: keeps every graph connected, costs degree <= 2.
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (uint32_t i = n - 1; i > 0; --i) {
        uint32_t j = static_cast<uint32_t>(rng.next_below(i + 1));
        std::swap(order[i], order[j]);
    }
    for (uint32_t i = 0; i + 1 < n; ++i) g.add_edge(order[i], order[i + 1]);

    // Dial-out phase. Small graphs saturate toward completeness because every
    // node gets to dial min(outbound, n-1) targets.
    uint32_t want = std::min<uint32_t>(outbound, n - 1);
    for (NodeId v = 0; v < n; ++v) {
        uint32_t attempts = 0;
        uint32_t dialed = 0;
        const uint32_t max_attempts = 20 * want + 32;
        while (dialed < want && g.degree(v) < degree_cap && attempts < max_attempts) {
            ++attempts;
            NodeId w = static_cast<NodeId>(rng.next_below(n));
            if (w == v || g.has_link(v, w)) continue;
            if (g.degree(w) >= degree_cap) continue;
            g.add_edge(v, w);
            ++dialed;
        }
    }
    return g;
}

}  // namespace bsdn
