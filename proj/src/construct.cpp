#include "homind/construct.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace homind {

bool GUVertex::tail_has(int edge) const { return std::binary_search(tail.begin(), tail.end(), edge); }

int LabeledGraph::vertex_id(int head, const std::vector<int>& tail) const {
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        if (labels[i].head == head && labels[i].tail == tail) return i;
    return -1;
}

namespace {

// All parity-p subsets of the (ascending) incident edge list, as sorted
// edge-index sequences in lexicographic order.
std::vector<std::vector<int>> parity_tails(const std::vector<int>& inc, int p) {
    std::vector<std::vector<int>> out;
    int d = static_cast<int>(inc.size());
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        if (std::popcount(mask) % 2 != p) continue;
        std::vector<int> tail;
        for (int i = 0; i < d; ++i)
            if (mask >> i & 1) tail.push_back(inc[i]);
        out.push_back(std::move(tail));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GUVertex> lift_vertices(const Graph& G, const std::vector<int>& U, int guard) {
    if (G.has_loops()) throw InvalidInput("lift is defined for loopless base graphs");
    std::vector<bool> in_u(G.vertex_count(), false);
    for (int v : U) {
        if (v < 0 || v >= G.vertex_count()) throw InvalidInput("U contains a vertex outside the base graph");
        if (G.degree(v) == 0) throw InvalidInput("U touches an isolated vertex; its fiber would be empty");
        in_u[v] = true;
    }
    long long total = 0;
    for (int v = 0; v < G.vertex_count(); ++v)
        total += std::max(1ll, 1ll << std::max(0, G.degree(v) - 1));
    if (total > guard) throw GuardExceeded("lift would have " + std::to_string(total) + " vertices, guard is " + std::to_string(guard));
    std::vector<GUVertex> labels;
    for (int v = 0; v < G.vertex_count(); ++v)
        for (auto& tail : parity_tails(G.incident_edges(v), in_u[v] ? 1 : 0))
            labels.push_back({v, std::move(tail)});
    return labels;
}

LabeledGraph assemble(const Graph& G, std::vector<GUVertex> labels, bool tilde) {
    int n = static_cast<int>(labels.size());
    LabeledGraph out{Graph(n), G, std::move(labels), VertexMap{std::vector<int>(n)}};
    for (int i = 0; i < n; ++i) out.projection.to[i] = out.labels[i].head;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto& a = out.labels[i];
            const auto& b = out.labels[j];
            int e = G.edge_index(a.head, b.head);
            bool base_edge = a.head != b.head && e >= 0;
            if (base_edge && a.tail_has(e) == b.tail_has(e))
                out.graph.add_edge(i, j);
            else if (tilde && !base_edge)
                out.graph.add_edge(i, j);
        }
    if (tilde)
        for (int i = 0; i < n; ++i) out.graph.add_loop(i);
    return out;
}

}  // namespace

LabeledGraph build_GU(const Graph& G, const std::vector<int>& U, int guard) {
    return assemble(G, lift_vertices(G, U, guard), false);
}

std::pair<LabeledGraph, LabeledGraph> build_G01(const Graph& G, int guard) {
    if (!is_connected(G)) throw InvalidInput("base graph must be connected; build each component separately");
    return {build_GU(G, {}, guard), build_GU(G, {0}, guard)};
}

VertexMap shift_isomorphism(const Graph& G, const std::vector<int>& U, int u, int v, int guard) {
    int e = G.edge_index(u, v);
    if (u == v || e < 0) throw InvalidInput("shift edge is not in the base graph");
    LabeledGraph gu = build_GU(G, U, guard);
    std::vector<int> U2;
    for (int w : U)
        if (w != u && w != v) U2.push_back(w);
    for (int w : {u, v})
        if (std::find(U.begin(), U.end(), w) == U.end()) U2.push_back(w);
    std::sort(U2.begin(), U2.end());
    LabeledGraph gu2 = build_GU(G, U2, guard);

    std::map<std::pair<int, std::vector<int>>, int> index;
    for (int i = 0; i < static_cast<int>(gu2.labels.size()); ++i)
        index[{gu2.labels[i].head, gu2.labels[i].tail}] = i;

    VertexMap phi{std::vector<int>(gu.labels.size())};
    for (int i = 0; i < static_cast<int>(gu.labels.size()); ++i) {
        GUVertex lbl = gu.labels[i];
        if (lbl.head == u || lbl.head == v) {
            auto it = std::find(lbl.tail.begin(), lbl.tail.end(), e);
            if (it != lbl.tail.end())
                lbl.tail.erase(it);
            else
                lbl.tail.insert(std::upper_bound(lbl.tail.begin(), lbl.tail.end(), e), e);
        }
        phi.to[i] = index.at({lbl.head, lbl.tail});
    }
    return phi;
}

Graph build_star_simplified(int d, int i) {
    if (d < 0 || (i != 0 && i != 1)) throw InvalidInput("need d >= 0 and i in {0,1}");
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask)
        if (std::popcount(mask) % 2 == i) subsets.push_back(mask);
    Graph g(d + static_cast<int>(subsets.size()));
    for (int j = 0; j < d; ++j)
        for (int s = 0; s < static_cast<int>(subsets.size()); ++s)
            if (!(subsets[s] >> j & 1)) g.add_edge(j, d + s);
    return g;
}

LabeledGraph build_tilde_GU(const Graph& G, const std::vector<int>& U, int guard) {
    return assemble(G, lift_vertices(G, U, guard), true);
}

}  // namespace homind
