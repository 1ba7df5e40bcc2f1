#include "gf2_elim.hpp"
#include "rimfloer/error.hpp"
#include "rimfloer/grid/hfk.hpp"

#include <algorithm>
#include <map>

namespace rimfloer::grid {

void require_homology_input(const GridDiagram &g, int max_size);

BigradedRanks homology_reference(const GridDiagram &g, const HomologyOptions &options) {
    require_homology_input(g, options.max_size);
    const int n = g.size();

    using Key = std::pair<int, int>;
    std::map<Key, std::vector<Perm>> pieces;
    Perm x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = i;
    do {
        const Bigrading b = gradings(x, g);
        pieces[{b.maslov, b.twice_alexander}].push_back(x);
    } while (std::next_permutation(x.begin(), x.end()));

    std::map<Key, std::size_t> boundary_rank;
    for (const auto &[key, states] : pieces) {
        const auto target = pieces.find({key.first - 1, key.second});
        if (target == pieces.end()) {
            boundary_rank[key] = 0;
            continue;
        }
        const std::vector<Perm> &codomain = target->second;
        detail::Gf2Eliminator elim(codomain.size());
        for (const Perm &s : states) {
            detail::SparseRow row;
            for (const Perm &y : differential_tilde(s, g)) {
                const auto it = std::lower_bound(codomain.begin(), codomain.end(), y);
                if (it == codomain.end() || *it != y) {
                    throw Error(ErrorCode::GradingMismatch, "differential left its graded piece");
                }
                row.push_back(static_cast<std::uint32_t>(it - codomain.begin()));
            }
            std::sort(row.begin(), row.end());
            elim.insert(std::move(row));
        }
        boundary_rank[key] = elim.rank();
    }

    BigradedRanks out;
    for (const auto &[key, states] : pieces) {
        const auto incoming = boundary_rank.find({key.first + 1, key.second});
        const std::size_t in_rank = incoming == boundary_rank.end() ? 0 : incoming->second;
        const auto h = static_cast<std::int64_t>(states.size() - boundary_rank[key] - in_rank);
        if (h > 0) out[{key.first, key.second / 2}] = h;
    }
    return out;
}

}  // namespace rimfloer::grid
