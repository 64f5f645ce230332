#ifndef NETSPARSE_COMMUNITY_HPP
#define NETSPARSE_COMMUNITY_HPP

#include "netsparse/graph.hpp"

#include <span>
#include <vector>

namespace netsparse {

// An ordered list of nonempty vertex subsets, each stored sorted and
// deduplicated, with an optional per-community density requirement alpha.
class CommunitySet {
public:
    CommunitySet() = default;
    explicit CommunitySet(std::vector<std::vector<VertexId>> communities,
                          std::vector<double> alphas = {});

    std::size_t size() const { return offsets_.size() - 1; }
    bool empty() const { return size() == 0; }

    std::span<const VertexId> members(std::size_t i) const {
        return {members_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }
    std::size_t member_count(std::size_t i) const {
        return offsets_[i + 1] - offsets_[i];
    }
    bool contains(std::size_t i, VertexId v) const;

    bool has_alphas() const { return !alphas_.empty(); }
    double alpha(std::size_t i) const;
    const std::vector<double>& alphas() const { return alphas_; }
    CommunitySet with_alphas(std::vector<double> alphas) const;

    std::size_t total_members() const { return members_.size(); }
    // Number of communities each vertex belongs to; size n.
    std::vector<std::uint32_t> membership_counts(VertexId n) const;

    // Throws input_error if any member id is >= n.
    void validate_against(VertexId n) const;

    friend bool operator==(const CommunitySet& a, const CommunitySet& b) {
        return a.offsets_ == b.offsets_ && a.members_ == b.members_ &&
               a.alphas_ == b.alphas_;
    }

private:
    std::vector<std::size_t> offsets_{0};
    std::vector<VertexId> members_;
    std::vector<double> alphas_;
};

} // namespace netsparse

#endif
