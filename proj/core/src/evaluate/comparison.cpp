#include <algorithm>
#include <cmath>
#include <string>

#include "commkit/error.hpp"
#include "commkit/measures.hpp"

namespace commkit {

ConfusionMatrix::ConfusionMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), counts_(rows * cols, 0) {}

void ConfusionMatrix::add(std::size_t i, std::size_t j, std::uint64_t k) {
    counts_[i * cols_ + j] += k;
    total_ += k;
}

std::vector<std::uint64_t> ConfusionMatrix::row_sums() const {
    std::vector<std::uint64_t> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j);
    }
    return out;
}

std::vector<std::uint64_t> ConfusionMatrix::col_sums() const {
    std::vector<std::uint64_t> out(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out[j] += at(i, j);
    }
    return out;
}

namespace {

void check_same_size(const Partition& a, const Partition& b) {
    if (a.node_count() != b.node_count()) {
        throw ArgumentError("partitions cover different node counts (" +
                            std::to_string(a.node_count()) + " vs " +
                            std::to_string(b.node_count()) + ")");
    }
}

std::uint64_t choose2(std::uint64_t x) { return x * (x - (x > 0 ? 1 : 0)) / 2; }

struct PairSums {
    std::uint64_t together_both = 0;
    std::uint64_t together_first = 0;
    std::uint64_t together_second = 0;
    std::uint64_t all_pairs = 0;
};

PairSums pair_sums(const ConfusionMatrix& m) {
    PairSums s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) s.together_both += choose2(m.at(i, j));
    }
    for (auto a : m.row_sums()) s.together_first += choose2(a);
    for (auto b : m.col_sums()) s.together_second += choose2(b);
    s.all_pairs = choose2(m.total());
    return s;
}

double entropy_bits(const std::vector<std::uint64_t>& sizes, double n) {
    double h = 0.0;
    for (auto s : sizes) {
        if (s == 0) continue;
        const double p = static_cast<double>(s) / n;
        h -= p * std::log2(p);
    }
    return h;
}

} // namespace

ConfusionMatrix confusion(const Partition& p1, const Partition& p2) {
    check_same_size(p1, p2);
    ConfusionMatrix m(p1.community_count(), p2.community_count());
    for (node v = 0; v < p1.node_count(); ++v) m.add(p1[v], p2[v]);
    return m;
}

PairCounts pair_counts(const ConfusionMatrix& m) {
    const PairSums s = pair_sums(m);
    PairCounts c;
    c.n11 = s.together_both;
    c.n10 = s.together_first - s.together_both;
    c.n01 = s.together_second - s.together_both;
    c.n00 = s.all_pairs - c.n11 - c.n10 - c.n01;
    return c;
}

double rand_index(const Partition& p1, const Partition& p2) {
    check_same_size(p1, p2);
    if (p1.node_count() < 2) throw ArgumentError("rand index needs at least 2 nodes");
    const PairCounts c = pair_counts(confusion(p1, p2));
    return static_cast<double>(c.n11 + c.n00) / static_cast<double>(c.n11 + c.n00 + c.n10 + c.n01);
}

std::optional<double> adjusted_rand_index(const Partition& p1, const Partition& p2) {
    check_same_size(p1, p2);
    if (p1.node_count() < 2) throw ArgumentError("adjusted rand index needs at least 2 nodes");
    const PairSums s = pair_sums(confusion(p1, p2));
    const long double index = s.together_both;
    const long double expected = static_cast<long double>(s.together_first) *
                                 static_cast<long double>(s.together_second) /
                                 static_cast<long double>(s.all_pairs);
    const long double maximum = 0.5L * (static_cast<long double>(s.together_first) +
                                        static_cast<long double>(s.together_second));
    const long double denom = maximum - expected;
    if (std::fabs(static_cast<double>(denom)) < 1e-12) {
        if (p1 == p2) return 1.0;
        return std::nullopt;
    }
    return static_cast<double>((index - expected) / denom);
}

double jaccard_index(const Partition& p1, const Partition& p2) {
    check_same_size(p1, p2);
    if (p1.node_count() < 2) throw ArgumentError("jaccard index needs at least 2 nodes");
    const PairCounts c = pair_counts(confusion(p1, p2));
    const std::uint64_t denom = c.n11 + c.n10 + c.n01;
    // Zero only when both partitions are all singletons, i.e. identical.
    if (denom == 0) return 1.0;
    return static_cast<double>(c.n11) / static_cast<double>(denom);
}

double purity(const Partition& found, const Partition& truth) {
    check_same_size(found, truth);
    if (found.node_count() == 0) throw ArgumentError("purity of empty partitions");
    const ConfusionMatrix m = confusion(found, truth);
    std::uint64_t matched = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::uint64_t best = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) best = std::max(best, m.at(i, j));
        matched += best;
    }
    return static_cast<double>(matched) / static_cast<double>(m.total());
}

double van_dongen(const Partition& p1, const Partition& p2) {
    check_same_size(p1, p2);
    const ConfusionMatrix m = confusion(p1, p2);
    std::uint64_t row_best = 0, col_best = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::uint64_t best = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) best = std::max(best, m.at(i, j));
        row_best += best;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::uint64_t best = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) best = std::max(best, m.at(i, j));
        col_best += best;
    }
    return static_cast<double>(2 * m.total() - row_best - col_best);
}

InformationStats mutual_information_stats(const Partition& p1, const Partition& p2) {
    check_same_size(p1, p2);
    InformationStats s;
    if (p1.node_count() == 0) {
        s.nmi = 1.0;
        return s;
    }
    const ConfusionMatrix m = confusion(p1, p2);
    const double n = static_cast<double>(m.total());
    const auto rows = m.row_sums();
    const auto cols = m.col_sums();
    s.h1 = entropy_bits(rows, n);
    s.h2 = entropy_bits(cols, n);
    double mi = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto nij = m.at(i, j);
            if (nij == 0) continue;
            const double joint = static_cast<double>(nij) / n;
            mi += joint * std::log2(static_cast<double>(nij) * n /
                                    (static_cast<double>(rows[i]) * static_cast<double>(cols[j])));
        }
    }
    s.mi = std::clamp(mi, 0.0, std::min(s.h1, s.h2));
    s.vi = std::max(0.0, s.h1 + s.h2 - 2.0 * s.mi);
    const double mean_entropy = 0.5 * (s.h1 + s.h2);
    s.nmi = mean_entropy > 0.0 ? std::clamp(s.mi / mean_entropy, 0.0, 1.0) : 1.0;
    return s;
}

} // namespace commkit
