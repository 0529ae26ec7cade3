#include "geoextract/coloring_search.hpp"

#include <algorithm>
#include <numeric>

namespace geoextract {
namespace {

class Backtracker {
public:
    Backtracker(std::size_t n, const std::vector<IndexSet>& edges, std::vector<std::size_t> order, int max_colors)
        : order_(std::move(order)), max_colors_(max_colors), color_(n, 0), closing_(n) {
        std::vector<std::size_t> rank(n);
        for (std::size_t k = 0; k < order_.size(); ++k) rank[order_[k]] = k;
        for (const auto& e : edges) {
            if (e.size() < 2) continue;
            std::size_t last = *std::max_element(e.begin(), e.end(),
                                                 [&](std::size_t l, std::size_t r) { return rank[l] < rank[r]; });
            closing_[last].push_back(&e);
        }
    }

    bool run() { return assign(0, 0); }
    std::vector<int> colors() const { return color_; }

private:
    bool monochromatic(const IndexSet& e) const {
        return std::all_of(e.begin(), e.end(), [&](std::size_t i) { return color_[i] == color_[e.front()]; });
    }

    bool assign(std::size_t k, int used) {
        if (k == order_.size()) return true;
        const std::size_t v = order_[k];
        for (int c = 1; c <= std::min(max_colors_, used + 1); ++c) {
            color_[v] = c;
            bool ok = std::none_of(closing_[v].begin(), closing_[v].end(),
                                   [&](const IndexSet* e) { return monochromatic(*e); });
            if (ok && assign(k + 1, std::max(used, c))) return true;
        }
        color_[v] = 0;
        return false;
    }

    std::vector<std::size_t> order_;
    int max_colors_;
    std::vector<int> color_;
    std::vector<std::vector<const IndexSet*>> closing_;
};

}  // namespace

std::optional<std::vector<int>> find_proper_coloring(std::size_t vertex_count, const std::vector<IndexSet>& edges,
                                                     int max_colors, std::vector<std::size_t> order) {
    if (order.empty()) {
        order.resize(vertex_count);
        std::iota(order.begin(), order.end(), 0);
    }
    if (order.size() != vertex_count) throw Error(ErrorKind::InvalidArgument, "order must list every vertex");
    Backtracker search(vertex_count, edges, std::move(order), max_colors);
    if (!search.run()) return std::nullopt;
    return search.colors();
}

}  // namespace geoextract
