// Two-level map equation minimized by multi-level local moves.
#include <cmath>
#include <limits>
#include <numeric>

#include "internal.hpp"

namespace commkit {

namespace {

double plogp(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Module-dependent part of the description length; the node entropy term is
// constant during optimization and added separately.
class Codebook {
public:
    Codebook(const detail::WeightedGraph& w, const std::vector<double>& members, double teleport,
             double node_total)
        : w_(w), members_(members), tau_(teleport), n_(node_total), vol_(w.size()), in2_(w.size()),
          count_(w.size()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            vol_[i] = w.strength[i];
            in2_[i] = w.loops[i];
            count_[i] = members[i];
        }
        for (std::size_t i = 0; i < w.size(); ++i) {
            const double q = exit(i);
            sum_exit_ += q;
            sum_plogp_exit_ += plogp(q);
            sum_plogp_total_ += plogp(q + vol_[i] / w_.total);
        }
    }

    double length() const { return plogp(sum_exit_) - 2.0 * sum_plogp_exit_ + sum_plogp_total_; }

    double exit_of(double vol, double in2, double count) const {
        return (1.0 - tau_) * (vol - in2) / w_.total + tau_ * (1.0 - count / n_) * vol / w_.total;
    }
    double exit(std::size_t m) const { return exit_of(vol_[m], in2_[m], count_[m]); }

    // Length after moving node x (with `to_old`/`to_new` link weight to the
    // rest of its old module / to module b) from module a to b.
    double length_if_moved(std::size_t x, std::size_t a, std::size_t b, double to_old, double to_new) const {
        if (a == b) return length();
        const double s = w_.strength[x], l = w_.loops[x], c = members_[x];
        const double va = vol_[a] - s, ia = in2_[a] - l - 2.0 * to_old, ca = count_[a] - c;
        const double vb = vol_[b] + s, ib = in2_[b] + l + 2.0 * to_new, cb = count_[b] + c;
        const double qa0 = exit(a), qb0 = exit(b);
        const double qa1 = exit_of(va, ia, ca), qb1 = exit_of(vb, ib, cb);
        const double sum_exit = sum_exit_ - qa0 - qb0 + qa1 + qb1;
        const double sum_plogp_exit = sum_plogp_exit_ - plogp(qa0) - plogp(qb0) + plogp(qa1) + plogp(qb1);
        const double sum_plogp_total = sum_plogp_total_ - plogp(qa0 + vol_[a] / w_.total) -
                                       plogp(qb0 + vol_[b] / w_.total) + plogp(qa1 + va / w_.total) +
                                       plogp(qb1 + vb / w_.total);
        return plogp(sum_exit) - 2.0 * sum_plogp_exit + sum_plogp_total;
    }

    void move(std::size_t x, std::size_t a, std::size_t b, double to_old, double to_new) {
        if (a == b) return;
        retire(a);
        retire(b);
        const double s = w_.strength[x], l = w_.loops[x], c = members_[x];
        vol_[a] -= s;
        in2_[a] -= l + 2.0 * to_old;
        count_[a] -= c;
        vol_[b] += s;
        in2_[b] += l + 2.0 * to_new;
        count_[b] += c;
        admit(a);
        admit(b);
    }

private:
    void retire(std::size_t m) {
        const double q = exit(m);
        sum_exit_ -= q;
        sum_plogp_exit_ -= plogp(q);
        sum_plogp_total_ -= plogp(q + vol_[m] / w_.total);
    }
    void admit(std::size_t m) {
        const double q = exit(m);
        sum_exit_ += q;
        sum_plogp_exit_ += plogp(q);
        sum_plogp_total_ += plogp(q + vol_[m] / w_.total);
    }

    const detail::WeightedGraph& w_;
    const std::vector<double>& members_;
    double tau_;
    double n_;
    std::vector<double> vol_, in2_, count_;
    double sum_exit_ = 0.0, sum_plogp_exit_ = 0.0, sum_plogp_total_ = 0.0;
};

// Local moves on one level; returns true if anything moved.
bool move_nodes(const detail::WeightedGraph& w, const std::vector<double>& members, double teleport,
                double node_total, std::size_t max_sweeps, std::vector<std::uint32_t>& module,
                RngStream& rng, detail::Deadline& deadline, bool& capped) {
    const std::size_t n = w.size();
    Codebook book(w, members, teleport, node_total);
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::vector<double> link(n, 0.0);
    std::vector<std::uint32_t> touched;
    bool moved_any = false;
    std::size_t sweep = 0;
    for (bool moved = true; moved; ++sweep) {
        if (sweep == max_sweeps) {
            capped = true;
            break;
        }
        moved = false;
        rng.shuffle(std::span<std::uint32_t>(order));
        for (std::uint32_t x : order) {
            deadline.tick();
            const std::uint32_t a = module[x];
            touched.clear();
            for (const auto& arc : w.adjacency[x]) {
                const std::uint32_t m = module[arc.to];
                if (link[m] == 0.0) touched.push_back(m);
                link[m] += arc.weight;
            }
            const double to_old = link[a];
            double best = book.length();
            std::uint32_t target = a;
            for (std::uint32_t b : touched) {
                if (b == a) continue;
                const double len = book.length_if_moved(x, a, b, to_old, link[b]);
                if (len < best - 1e-10) {
                    best = len;
                    target = b;
                }
            }
            if (target != a) {
                book.move(x, a, target, to_old, link[target]);
                module[x] = target;
                moved = moved_any = true;
            }
            for (std::uint32_t m : touched) link[m] = 0.0;
        }
    }
    return moved_any;
}

double node_entropy(const Graph& g) {
    const double two_m = 2.0 * static_cast<double>(g.edge_count());
    double h = 0.0;
    for (node v = 0; v < g.node_count(); ++v) h -= plogp(static_cast<double>(g.degree_of(v)) / two_m);
    return h;
}

} // namespace

double map_equation(const Graph& g, const Partition& p) {
    if (p.node_count() != g.node_count()) throw ArgumentError("partition and graph sizes differ");
    if (g.edge_count() == 0) return 0.0;
    std::size_t k = 0;
    const auto labels = detail::compact_labels(p.membership(), k);
    const detail::WeightedGraph w = detail::WeightedGraph::from_graph(g).aggregate(labels, k);
    std::vector<double> members(k, 0.0);
    for (auto c : labels) members[c] += 1.0;
    const Codebook book(w, members, 0.0, static_cast<double>(g.node_count()));
    return book.length() + node_entropy(g);
}

DetectionResult detect_infomap(const Graph& g, const DetectorParams& params, RngStream& rng) {
    detail::Deadline deadline(params, "infomap");
    const auto& p = params.infomap;
    const std::size_t n = g.node_count();
    if (g.edge_count() == 0) return {Partition::singletons(n), std::nullopt, false};

    const detail::WeightedGraph base = detail::WeightedGraph::from_graph(g);
    const double node_total = static_cast<double>(n);

    // The one-module code is the baseline every partition has to beat.
    std::vector<std::uint32_t> best(n, 0);
    double best_length = Codebook(base.aggregate(best, 1), std::vector<double>{node_total},
                                  p.teleport, node_total).length();
    bool capped = false;

    for (std::size_t loop = 0; loop < p.outer_loops; ++loop) {
        RngStream stream = rng.derive(loop);
        std::vector<std::uint32_t> membership(n);
        std::iota(membership.begin(), membership.end(), 0u);
        detail::WeightedGraph level = base;
        std::vector<double> members(n, 1.0);
        for (;;) {
            std::vector<std::uint32_t> module(level.size());
            std::iota(module.begin(), module.end(), 0u);
            if (!move_nodes(level, members, p.teleport, node_total, p.max_sweeps, module, stream,
                            deadline, capped)) {
                break;
            }
            std::size_t k = 0;
            const auto dense = detail::compact_labels(module, k);
            std::vector<double> grouped(k, 0.0);
            for (std::size_t i = 0; i < dense.size(); ++i) grouped[dense[i]] += members[i];
            for (auto& m : membership) m = dense[m];
            level = level.aggregate(dense, k);
            members = std::move(grouped);
        }
        const double length = Codebook(level, members, p.teleport, node_total).length();
        if (length < best_length - 1e-10) {
            best_length = length;
            best = membership;
        }
    }
    return {detail::isolate_degree_zero(g, Partition(best)), std::nullopt, capped};
}

} // namespace commkit
