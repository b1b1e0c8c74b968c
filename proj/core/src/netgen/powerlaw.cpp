#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "commkit/error.hpp"
#include "commkit/generators.hpp"

namespace commkit {

namespace {

/// Discrete P(k) ~ k^-exponent on [lo, hi], sampled by inverse CDF.
class DiscretePowerLaw {
public:
    DiscretePowerLaw(std::size_t lo, std::size_t hi, double exponent) : lo_(lo) {
        cdf_.reserve(hi - lo + 1);
        double acc = 0.0;
        // Weights relative to lo stay finite for very large exponents.
        for (std::size_t k = lo; k <= hi; ++k) {
            acc += std::pow(static_cast<double>(k) / static_cast<double>(lo), -exponent);
            cdf_.push_back(acc);
        }
    }

    std::size_t sample(RngStream& rng) const {
        const double x = rng.uniform_real() * cdf_.back();
        auto it = std::upper_bound(cdf_.begin(), cdf_.end(), x);
        auto idx = std::min<std::ptrdiff_t>(it - cdf_.begin(), static_cast<std::ptrdiff_t>(cdf_.size()) - 1);
        return lo_ + static_cast<std::size_t>(idx);
    }

private:
    std::size_t lo_;
    std::vector<double> cdf_;
};

} // namespace

double discrete_powerlaw_mean(std::size_t lo, std::size_t hi, double exponent) {
    if (lo == 0 || hi < lo) throw ArgumentError("power-law support must satisfy 1 <= lo <= hi");
    long double weight = 0.0L, moment = 0.0L;
    for (std::size_t k = lo; k <= hi; ++k) {
        const long double w = std::pow(static_cast<long double>(k) / static_cast<long double>(lo),
                                       static_cast<long double>(-exponent));
        weight += w;
        moment += w * static_cast<long double>(k);
    }
    return static_cast<double>(moment / weight);
}

std::vector<std::size_t> powerlaw_degree_sequence(std::size_t n, double k_avg, std::size_t k_max,
                                                  double gamma, RngStream& rng) {
    if (!(gamma > 1.0)) throw ArgumentError("degree exponent gamma must exceed 1");
    if (k_max < 1) throw ArgumentError("k_max must be at least 1");
    if (n > 0 && k_max > n - 1) throw ArgumentError("k_max must not exceed n - 1");
    if (!(k_avg >= discrete_powerlaw_mean(1, k_max, gamma)) || !(k_avg <= static_cast<double>(k_max))) {
        throw ArgumentError("no minimum degree in [1, k_max] achieves mean degree " +
                            std::to_string(k_avg));
    }
    // The mean is increasing in the lower cutoff. Bracket k_avg between two
    // integer cutoffs and mix the two distributions to hit it exactly.
    std::size_t lo = 1;
    while (lo < k_max && discrete_powerlaw_mean(lo + 1, k_max, gamma) <= k_avg) ++lo;
    const double mean_lo = discrete_powerlaw_mean(lo, k_max, gamma);
    double weight_lo = 1.0;
    std::size_t hi_cut = std::min(lo + 1, k_max);
    if (lo < k_max) {
        const double mean_hi = discrete_powerlaw_mean(lo + 1, k_max, gamma);
        weight_lo = mean_hi > mean_lo ? (mean_hi - k_avg) / (mean_hi - mean_lo) : 1.0;
        weight_lo = std::clamp(weight_lo, 0.0, 1.0);
    }
    const DiscretePowerLaw from_lo(lo, k_max, gamma);
    const DiscretePowerLaw from_hi(hi_cut, k_max, gamma);
    auto draw = [&] { return rng.bernoulli(weight_lo) ? from_lo.sample(rng) : from_hi.sample(rng); };

    std::vector<std::size_t> degrees(n);
    for (auto& k : degrees) k = draw();
    std::uint64_t sum = std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
    if (n > 0 && sum % 2) {
        const std::size_t i = rng.uniform(n);
        const std::size_t old = degrees[i];
        bool fixed = false;
        for (int attempt = 0; attempt < 10000 && !fixed; ++attempt) {
            degrees[i] = draw();
            fixed = (degrees[i] % 2) != (old % 2);
        }
        if (!fixed) throw ArgumentError("cannot make the degree sum even: support has one parity");
    }
    return degrees;
}

std::vector<std::size_t> community_sizes(std::size_t n, double beta, std::size_t c_min,
                                         std::size_t c_max, RngStream& rng) {
    if (!(beta > 1.0)) throw ArgumentError("community-size exponent beta must exceed 1");
    if (c_min < 1 || c_max < c_min) throw ArgumentError("community sizes need 1 <= c_min <= c_max");
    if (n < c_min) throw ArgumentError("network smaller than the minimum community size");
    const DiscretePowerLaw dist(c_min, c_max, beta);
    std::vector<std::size_t> sizes;
    std::size_t total = 0;
    while (total < n) {
        sizes.push_back(dist.sample(rng));
        total += sizes.back();
    }
    if (total > n) {
        total -= sizes.back();
        sizes.pop_back();
        std::size_t rest = n - total;
        if (rest >= c_min) {
            sizes.push_back(rest);
        } else {
            // Spread the remainder over communities with headroom.
            while (rest > 0) {
                std::vector<std::size_t> open;
                for (std::size_t i = 0; i < sizes.size(); ++i) {
                    if (sizes[i] < c_max) open.push_back(i);
                }
                if (open.empty()) {
                    throw ArgumentError("community sizes cannot sum to n within [c_min, c_max]");
                }
                ++sizes[open[rng.uniform(open.size())]];
                --rest;
            }
        }
    }
    return sizes;
}

} // namespace commkit
