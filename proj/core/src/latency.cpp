#include "bsdn/latency.hpp"

#include <algorithm>
#include <cmath>

namespace bsdn {

namespace {

uint64_t pack_link(NodeId u, NodeId v) {
    return (static_cast<uint64_t>(u) << 32) | v;
}

// Mean pairwise distance of uniform points in a disk of radius r is
// 128 r / (45 pi).
constexpr double kMeanDiskPairDist = 128.0 / (45.0 * 3.141592653589793);

}  // namespace

LatencyField::LatencyField(GeoLatencyParams params, uint32_t n) : params_(params) {
    if (params_.k_continents < 1)
        throw std::invalid_argument("generate_geo_latency: k_continents must be >= 1");
    if (params_.intra_lo_ms <= 0.0 || params_.intra_hi_ms < params_.intra_lo_ms)
        throw std::invalid_argument("generate_geo_latency: bad intra range");
    if (params_.mult_lo < 1.0)
        throw std::invalid_argument(
            "generate_geo_latency: inter multiplier below 1 would invert the continental structure");
    if (params_.mult_hi < params_.mult_lo)
        throw std::invalid_argument("generate_geo_latency: bad inter multiplier range");

    const uint32_t k = params_.k_continents;
    labels_.resize(n);
    pos_.resize(n);
    pair_seed_ = derive_seed(params_.seed, "latency-pair-noise");

    Rng rng(derive_seed(params_.seed, "geo"));

    // Balanced continent assignment via a seeded shuffle.
    std::vector<NodeId> order(n);
    for (uint32_t i = 0; i < n; ++i) order[i] = i;
    for (uint32_t i = n - 1; i > 0; --i) {
        uint32_t j = static_cast<uint32_t>(rng.next_below(i + 1));
        std::swap(order[i], order[j]);
    }
    for (uint32_t i = 0; i < n; ++i) labels_[order[i]] = static_cast<uint16_t>(i % k);

    // Continent centers on a circle sized so the mean cross-continent
    // propagation is mid-multiplier times the mean intra one. Continents are
    // unit-diameter disks in latent space.
    const double span = params_.intra_hi_ms - params_.intra_lo_ms;
    std::vector<std::array<double, 2>> centers(k, {0.0, 0.0});
    if (k >= 2) {
        double mean_sin = 0.0;
        uint32_t pairs = 0;
        for (uint32_t i = 0; i < k; ++i)
            for (uint32_t j = i + 1; j < k; ++j) {
                mean_sin += std::sin(3.141592653589793 * (j - i) / k);
                ++pairs;
            }
        mean_sin /= pairs;
        const double ratio_mid = 0.5 * (params_.mult_lo + params_.mult_hi);
        const double mean_intra = params_.intra_lo_ms + span * kMeanDiskPairDist * 0.5;
        double target_center_dist = (ratio_mid * mean_intra - params_.intra_lo_ms) /
                                    std::max(span, 1e-9);
        target_center_dist = std::max(target_center_dist, 1.0);
        const double radius = target_center_dist / (2.0 * mean_sin);
        for (uint32_t c = 0; c < k; ++c) {
            double a = 2.0 * 3.141592653589793 * c / k;
            centers[c] = {radius * std::cos(a), radius * std::sin(a)};
        }
    }

    for (uint32_t i = 0; i < n; ++i) {
        // uniform in a disk of radius 0.5
        double r = 0.5 * std::sqrt(rng.next_double());
        double a = 2.0 * 3.141592653589793 * rng.next_double();
        const auto& c = centers[labels_[i]];
        pos_[i] = {c[0] + r * std::cos(a), c[1] + r * std::sin(a)};
    }
}

double LatencyField::prop_ms(NodeId u, NodeId v) const {
    const auto& a = pos_[u];
    const auto& b = pos_[v];
    double dx = a[0] - b[0], dy = a[1] - b[1];
    double g = std::sqrt(dx * dx + dy * dy);
    const double span = params_.intra_hi_ms - params_.intra_lo_ms;
    double raw = params_.intra_lo_ms + span * g;

    // Deterministic symmetric per-pair spread, unit mean.
    if (params_.prop_noise_sigma > 0.0) {
        NodeId lo = std::min(u, v), hi = std::max(u, v);
        uint64_t s = pair_seed_ ^ (static_cast<uint64_t>(lo) << 32) ^ hi;
        Rng pr(splitmix64_next(s));
        double z = pr.gaussian(0.0, 1.0);
        double sg = params_.prop_noise_sigma;
        raw *= std::exp(sg * z - 0.5 * sg * sg);
    }
    return std::max(raw, params_.floor_ms);
}

void LatencyField::add_episode(const CongestionEpisode& e) {
    episodes_.push_back(e);
    episodes_by_link_[pack_link(e.u, e.v)].push_back(
        static_cast<uint32_t>(episodes_.size() - 1));
}

double LatencyField::queue_ms(NodeId u, NodeId v, SimTime t) const {
    auto it = episodes_by_link_.find(pack_link(u, v));
    if (it == episodes_by_link_.end()) return 0.0;
    double q = 0.0;
    for (uint32_t idx : it->second) {
        const auto& e = episodes_[idx];
        if (t >= e.start_us && t < e.start_us + e.duration_us) q += e.added_ms;
    }
    return q;
}

double LatencyField::sample_ms(NodeId u, NodeId v, SimTime t, Rng& rng) const {
    double d = prop_ms(u, v) + queue_ms(u, v, t);
    if (params_.jitter_mu_ms != 0.0 || params_.jitter_sigma_ms != 0.0)
        d += rng.gaussian(params_.jitter_mu_ms, params_.jitter_sigma_ms);
    return std::max(d, params_.floor_ms);
}

LatencyField generate_geo_latency(const Overlay& overlay, const GeoLatencyParams& params) {
    return LatencyField(params, overlay.node_count());
}

double sample_latency(const LatencyField& field, const Overlay& overlay, NodeId u,
                      NodeId v, SimTime t, Rng& rng) {
    if (u == v) throw std::invalid_argument("sample_latency: u == v");
    if (!overlay.has_link(u, v))
        throw std::invalid_argument("sample_latency: no established connection");
    return field.sample_ms(u, v, t, rng);
}

double tx_transfer_ms(const LatencyField& field, const Overlay& overlay, NodeId u,
                      NodeId v, SimTime t, Rng& rng, int legs) {
    double total = 0.0;
    for (int i = 0; i < legs; ++i) total += sample_latency(field, overlay, u, v, t, rng);
    return total;
}

}  // namespace bsdn
