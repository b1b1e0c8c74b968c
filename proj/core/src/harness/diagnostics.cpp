#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "commkit/error.hpp"
#include "commkit/experiment.hpp"

namespace commkit {

double mixing_limit(const Partition& planted, std::size_t n) {
    if (planted.node_count() != n) throw ArgumentError("mixing_limit: partition does not cover n nodes");
    if (n == 0) return 0.0;
    const double total = static_cast<double>(n);
    double limit = 0.0;
    for (auto s : planted.community_sizes()) {
        const double size = static_cast<double>(s);
        limit += (size / total) * (total - size) / total;
    }
    return limit;
}

TailFit tail_exponent_fit(const std::vector<std::size_t>& degrees, std::size_t k_min_fit) {
    std::map<std::size_t, std::size_t> histogram;
    std::size_t tail = 0;
    for (auto k : degrees) {
        if (k >= k_min_fit && k > 0) {
            ++histogram[k];
            ++tail;
        }
    }
    if (tail < 100) {
        throw ArgumentError("tail fit needs at least 100 samples >= k_min_fit, got " + std::to_string(tail));
    }
    if (histogram.size() < 2) throw ArgumentError("tail fit needs at least two distinct tail values");

    // Points (log k, log P(K >= k)) over the distinct tail values.
    std::vector<double> xs, ys;
    std::size_t at_least = tail;
    for (const auto& [k, c] : histogram) {
        xs.push_back(std::log(static_cast<double>(k)));
        ys.push_back(std::log(static_cast<double>(at_least) / static_cast<double>(tail)));
        at_least -= c;
    }
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (intercept + slope * xs[i]);
        rss += r * r;
    }
    return {std::fabs(slope) + 1.0, std::sqrt(rss / n), tail};
}

double tail_exponent_estimate(const std::vector<std::size_t>& degrees, std::size_t k_min_fit) {
    return tail_exponent_fit(degrees, k_min_fit).exponent;
}

std::vector<double> average_ranks(const std::vector<double>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        const double shared = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = shared;
        i = j + 1;
    }
    return ranks;
}

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw ArgumentError("spearman: samples differ in length");
    if (a.size() < 2) throw ArgumentError("spearman: needs at least two samples");
    const auto ra = average_ranks(a);
    const auto rb = average_ranks(b);
    // Pearson correlation of the ranks handles ties exactly.
    const double n = static_cast<double>(a.size());
    const double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
    const double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        sab += (ra[i] - ma) * (rb[i] - mb);
        saa += (ra[i] - ma) * (ra[i] - ma);
        sbb += (rb[i] - mb) * (rb[i] - mb);
    }
    if (saa == 0.0 || sbb == 0.0) throw ArgumentError("spearman: a sample is constant");
    return sab / std::sqrt(saa * sbb);
}

} // namespace commkit
