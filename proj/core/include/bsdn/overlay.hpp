#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bsdn/rng.hpp"
#include "bsdn/types.hpp"

namespace bsdn {

// Undirected peer graph. The base graph is built once per run from the seed;
// the controller may later install additional links when it steers relay
// connections (install_link), which the transport then treats like any other
// established connection. Base degrees respect degree_cap.
class Overlay {
public:
    Overlay() = default;

    uint32_t node_count() const { return n_; }
    uint32_t degree_cap() const { return cap_; }

    const std::vector<NodeId>& peers(NodeId v) const { return adj_[v]; }
    uint32_t degree(NodeId v) const { return static_cast<uint32_t>(adj_[v].size()); }

    bool has_link(NodeId u, NodeId v) const;

    // Controller-steered connection; no-op if already present.
    void install_link(NodeId u, NodeId v);

    uint64_t edge_count() const { return edge_count_; }
    uint64_t installed_count() const { return installed_count_; }

    // Connectivity over the current link set.
    bool connected() const;

    friend Overlay build_overlay(uint32_t n, uint32_t degree_cap, uint64_t seed,
                                 uint32_t outbound);

private:
    void add_edge(NodeId u, NodeId v);

    uint32_t n_ = 0;
    uint32_t cap_ = 0;
    uint64_t edge_count_ = 0;
    uint64_t installed_count_ = 0;
    std::vector<std::vector<NodeId>> adj_;  // each list kept sorted
};

// Seeded construction: a random Hamiltonian path guarantees connectivity,
// then each node dials up to `outbound` random peers, skipping nodes already
// at the cap. `outbound` defaults to 8 dialed connections (the usual client
// default); degree_cap bounds total degree including inbound.
Overlay build_overlay(uint32_t n, uint32_t degree_cap, uint64_t seed,
                      uint32_t outbound = 8);

}  // namespace bsdn
