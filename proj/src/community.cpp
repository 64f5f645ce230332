#include "netsparse/community.hpp"

#include <algorithm>

namespace netsparse {

CommunitySet::CommunitySet(std::vector<std::vector<VertexId>> communities,
                           std::vector<double> alphas)
    : alphas_(std::move(alphas)) {
    offsets_.reserve(communities.size() + 1);
    for (auto& c : communities) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        if (c.empty())
            throw input_error("empty community");
        members_.insert(members_.end(), c.begin(), c.end());
        offsets_.push_back(members_.size());
    }
    if (!alphas_.empty()) {
        if (alphas_.size() != size())
            throw input_error("alpha list does not match community count");
        for (double a : alphas_)
            if (!(a >= 0.0 && a <= 1.0))
                throw input_error("alpha outside [0,1]");
    }
}

bool CommunitySet::contains(std::size_t i, VertexId v) const {
    auto m = members(i);
    return std::binary_search(m.begin(), m.end(), v);
}

double CommunitySet::alpha(std::size_t i) const {
    if (alphas_.empty())
        throw contract_error("community set carries no alphas");
    return alphas_[i];
}

CommunitySet CommunitySet::with_alphas(std::vector<double> alphas) const {
    CommunitySet out = *this;
    if (alphas.size() != size())
        throw input_error("alpha list does not match community count");
    for (double a : alphas)
        if (!(a >= 0.0 && a <= 1.0))
            throw input_error("alpha outside [0,1]");
    out.alphas_ = std::move(alphas);
    return out;
}

std::vector<std::uint32_t> CommunitySet::membership_counts(VertexId n) const {
    validate_against(n);
    std::vector<std::uint32_t> counts(n, 0);
    for (VertexId v : members_) ++counts[v];
    return counts;
}

void CommunitySet::validate_against(VertexId n) const {
    for (VertexId v : members_)
        if (v >= n)
            throw input_error("community member " + std::to_string(v) +
                              " out of range (n=" + std::to_string(n) + ")");
}

} // namespace netsparse
