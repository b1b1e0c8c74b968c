#include "commkit/partition.hpp"

#include <unordered_map>

namespace commkit {

namespace {

template <class Label>
void canonicalize(std::span<const Label> labels, std::vector<community>& out, std::size_t& k) {
    out.resize(labels.size());
    std::unordered_map<Label, community> remap;
    remap.reserve(labels.size());
    for (std::size_t v = 0; v < labels.size(); ++v) {
        auto [it, inserted] = remap.try_emplace(labels[v], static_cast<community>(remap.size()));
        out[v] = it->second;
    }
    k = remap.size();
}

} // namespace

Partition::Partition(std::span<const std::uint64_t> labels) {
    canonicalize(labels, membership_, community_count_);
}

Partition::Partition(const std::vector<community>& labels) {
    canonicalize(std::span<const community>(labels), membership_, community_count_);
}

Partition Partition::singletons(std::size_t n) {
    Partition p;
    p.membership_.resize(n);
    for (std::size_t v = 0; v < n; ++v) p.membership_[v] = static_cast<community>(v);
    p.community_count_ = n;
    return p;
}

Partition Partition::one_block(std::size_t n) {
    Partition p;
    p.membership_.assign(n, 0);
    p.community_count_ = n ? 1 : 0;
    return p;
}

std::vector<std::size_t> Partition::community_sizes() const {
    std::vector<std::size_t> sizes(community_count_, 0);
    for (community c : membership_) ++sizes[c];
    return sizes;
}

std::vector<std::vector<node>> Partition::communities() const {
    std::vector<std::vector<node>> out(community_count_);
    for (node v = 0; v < membership_.size(); ++v) out[membership_[v]].push_back(v);
    return out;
}

} // namespace commkit
