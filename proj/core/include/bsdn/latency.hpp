#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "bsdn/overlay.hpp"
#include "bsdn/rng.hpp"
#include "bsdn/types.hpp"

namespace bsdn {

// Scripted congestion: adds `added_ms` of queueing delay on the directed
// link u->v during [start, start+duration).
struct CongestionEpisode {
    NodeId u = 0;
    NodeId v = 0;
    SimTime start_us = 0;
    SimTime duration_us = 0;
    double added_ms = 0.0;
};

struct GeoLatencyParams {
    uint32_t k_continents = 3;
    double intra_lo_ms = 10.0;
    double intra_hi_ms = 60.0;
    double mult_lo = 2.0;
    double mult_hi = 5.0;
    double jitter_mu_ms = 0.0;
    double jitter_sigma_ms = 0.0;
    // Per-pair structural spread around the geographic baseline (lognormal
    // sigma). Real RTT matrices are metric only up to a factor; this is that
    // factor.
    double prop_noise_sigma = 0.28;
    double floor_ms = 1.0;
    uint64_t seed = 1;
};

// One-way delay model: fixed symmetric propagation + scripted queueing +
// per-packet Gaussian jitter. Propagation delays derive from latent
// continent geometry, so nearby nodes (same continent, short ground
// distance) get proportionally short links and the matrix stays roughly
// embeddable. Propagation is defined for every pair; the transport layer
// decides which pairs are reachable.
class LatencyField {
public:
    LatencyField() = default;
    LatencyField(GeoLatencyParams params, uint32_t n);

    uint32_t node_count() const { return static_cast<uint32_t>(labels_.size()); }
    uint16_t label(NodeId v) const { return labels_[v]; }
    const GeoLatencyParams& params() const { return params_; }

    // Fixed symmetric propagation delay, ms.
    double prop_ms(NodeId u, NodeId v) const;

    // Scripted queueing delay on the directed link u->v at time t, ms.
    double queue_ms(NodeId u, NodeId v, SimTime t) const;

    // prop + queue + jitter, clamped to the floor.
    double sample_ms(NodeId u, NodeId v, SimTime t, Rng& rng) const;

    void add_episode(const CongestionEpisode& e);
    const std::vector<CongestionEpisode>& episodes() const { return episodes_; }

private:
    GeoLatencyParams params_;
    std::vector<uint16_t> labels_;
    std::vector<std::array<double, 2>> pos_;
    uint64_t pair_seed_ = 0;
    std::vector<CongestionEpisode> episodes_;
    std::map<uint64_t, std::vector<uint32_t>> episodes_by_link_;  // packed u,v -> indices
};

// Builds the field for the given overlay's node count. Rejects
// inter_multiplier.lo < 1 and non-positive intra ranges.
LatencyField generate_geo_latency(const Overlay& overlay, const GeoLatencyParams& params);

// Spec-level sampling entry points: only established links can be sampled.
double sample_latency(const LatencyField& field, const Overlay& overlay, NodeId u,
                      NodeId v, SimTime t, Rng& rng);

// Full transfer: digest, bitmap and payload legs (3 one-way delays), or a
// single leg for body-direct sends.
double tx_transfer_ms(const LatencyField& field, const Overlay& overlay, NodeId u,
                      NodeId v, SimTime t, Rng& rng, int legs = 3);

}  // namespace bsdn
