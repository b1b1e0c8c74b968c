// Reichardt-Bornholdt q-state Potts model with a configuration null model,
// minimized by heat-bath simulated annealing.
#include <cmath>
#include <limits>

#include "internal.hpp"

namespace commkit {

namespace {

class Annealer {
public:
    Annealer(const Graph& g, const DetectorParams::Spinglass& p, RngStream& rng)
        : g_(g), q_(p.spins), gamma_(p.gamma), rng_(rng), spin_(g.node_count()),
          volume_(p.spins, 0.0), links_(p.spins, 0.0), weight_(p.spins, 0.0) {
        two_m_ = 2.0 * static_cast<double>(g.edge_count());
        for (node v = 0; v < g.node_count(); ++v) {
            spin_[v] = static_cast<std::uint32_t>(rng_.uniform(q_));
            volume_[spin_[v]] += static_cast<double>(g.degree_of(v));
        }
    }

    // One sweep over all nodes at temperature t (t == 0: greedy); returns the
    // fraction of updates that changed the energy. Neutral moves (ties, or
    // hopping between empty spins) never die out, so they do not count.
    double sweep(double t) {
        const std::size_t n = g_.node_count();
        std::size_t changed = 0;
        for (std::size_t step = 0; step < n; ++step) {
            // Greedy quench sweeps visit every node once, in order.
            const node v = t > 0.0 ? static_cast<node>(rng_.uniform(n)) : static_cast<node>(step);
            changed += update(v, t) ? 1 : 0;
        }
        return n ? static_cast<double>(changed) / static_cast<double>(n) : 0.0;
    }

    const std::vector<std::uint32_t>& spins() const { return spin_; }

private:
    bool update(node v, double t) {
        const double k = static_cast<double>(g_.degree_of(v));
        if (k == 0.0) return false;
        const std::uint32_t old = spin_[v];
        std::fill(links_.begin(), links_.end(), 0.0);
        for (node w : g_.neighbors(v)) links_[spin_[w]] += 1.0;
        volume_[old] -= k;

        // Energy of placing v in spin r, relative to leaving it unassigned.
        double best = std::numeric_limits<double>::infinity();
        std::uint32_t best_spin = old;
        for (std::uint32_t r = 0; r < q_; ++r) {
            weight_[r] = -(links_[r] - gamma_ * k * volume_[r] / two_m_);
            if (weight_[r] < best || (weight_[r] == best && r == old)) {
                best = weight_[r];
                best_spin = r;
            }
        }
        std::uint32_t chosen = best_spin;
        if (t > 0.0) {
            double total = 0.0;
            for (std::uint32_t r = 0; r < q_; ++r) {
                weight_[r] = std::exp(-(weight_[r] - best) / t);
                total += weight_[r];
            }
            double u = rng_.uniform_real() * total;
            for (std::uint32_t r = 0; r < q_; ++r) {
                u -= weight_[r];
                if (u < 0.0) {
                    chosen = r;
                    break;
                }
            }
        } else if (weight_[old] <= best) {
            chosen = old;
        }
        const bool moved_energy = weight_[chosen] != weight_[old];
        spin_[v] = chosen;
        volume_[chosen] += k;
        return chosen != old && moved_energy;
    }

    const Graph& g_;
    std::uint32_t q_;
    double gamma_;
    RngStream& rng_;
    double two_m_ = 0.0;
    std::vector<std::uint32_t> spin_;
    std::vector<double> volume_;
    std::vector<double> links_;
    std::vector<double> weight_;
};

} // namespace

DetectionResult detect_spinglass(const Graph& g, const DetectorParams& params, RngStream& rng) {
    detail::Deadline deadline(params, "spinglass");
    const auto& p = params.spinglass;
    const std::size_t n = g.node_count();
    if (g.edge_count() == 0) return {Partition::singletons(n), std::nullopt, false};

    Annealer annealer(g, p, rng);
    // Heat up until the acceptance after a few equilibrating sweeps reaches
    // the target; from a random start any temperature looks "hot" at first.
    double t = 0.1;
    for (int step = 0; step < 200; ++step) {
        double accepted = 0.0;
        for (int s = 0; s < 5; ++s) accepted = annealer.sweep(t);
        if (accepted >= p.target_initial_acceptance) break;
        t *= 1.25;
        deadline.check();
    }

    bool frozen = false;
    for (std::size_t level = 0; level < 100000 && !frozen; ++level) {
        double accepted = 0.0;
        for (std::size_t s = 0; s < p.sweeps_per_temperature; ++s) accepted += annealer.sweep(t);
        accepted /= static_cast<double>(p.sweeps_per_temperature);
        frozen = accepted < p.stop_acceptance;
        t *= p.cooling;
        deadline.check();
    }

    // Quench: greedy sweeps until nothing moves.
    bool capped = true;
    for (int s = 0; s < 100; ++s) {
        if (annealer.sweep(0.0) == 0.0) {
            capped = false;
            break;
        }
    }
    return {Partition(annealer.spins()), std::nullopt, capped || !frozen};
}

} // namespace commkit
