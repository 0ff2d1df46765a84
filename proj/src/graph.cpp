#include "homind/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace homind {

Graph::Graph(int n) : n_(n), words_(std::max(1, (n + 63) / 64)), adj_(static_cast<std::size_t>(n) * words_, 0) {
    if (n < 0) throw InvalidInput("negative vertex count");
}

static void set_bit(std::uint64_t* row, int u) { row[u >> 6] |= std::uint64_t{1} << (u & 63); }

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InvalidInput("edge endpoint out of range");
    if (u == v) throw InvalidInput("use add_loop for loops");
    set_bit(adj_.data() + static_cast<std::size_t>(u) * words_, v);
    set_bit(adj_.data() + static_cast<std::size_t>(v) * words_, u);
    edge_cache_valid_ = false;
}

void Graph::add_loop(int v) {
    if (v < 0 || v >= n_) throw InvalidInput("loop vertex out of range");
    set_bit(adj_.data() + static_cast<std::size_t>(v) * words_, v);
    edge_cache_valid_ = false;
}

bool Graph::adjacent(int u, int v) const {
    if (u == v) return false;
    return neighbor_bit(u, v);
}

bool Graph::has_loop(int v) const { return neighbor_bit(v, v); }

bool Graph::has_loops() const {
    for (int v = 0; v < n_; ++v)
        if (has_loop(v)) return true;
    return false;
}

int Graph::degree(int v) const {
    int d = 0;
    const std::uint64_t* row = neighbors(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(row[w]);
    return d - (has_loop(v) ? 1 : 0);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

const std::vector<std::pair<int, int>>& Graph::edges() const {
    if (!edge_cache_valid_) {
        edge_cache_.clear();
        for (int u = 0; u < n_; ++u)
            for (int v = u; v < n_; ++v)
                if (neighbor_bit(u, v)) edge_cache_.emplace_back(u, v);
        edge_cache_valid_ = true;
    }
    return edge_cache_;
}

int Graph::simple_edge_count() const {
    int m = 0;
    for (const auto& [u, v] : edges())
        if (u != v) ++m;
    return m;
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    const auto& es = edges();
    auto it = std::lower_bound(es.begin(), es.end(), std::make_pair(u, v));
    if (it == es.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - es.begin());
}

std::vector<int> Graph::incident_edges(int v) const {
    std::vector<int> out;
    const auto& es = edges();
    for (int i = 0; i < static_cast<int>(es.size()); ++i)
        if ((es[i].first == v || es[i].second == v) && es[i].first != es[i].second) out.push_back(i);
    return out;
}

std::vector<std::vector<int>> VertexMap::fibers(int target_n) const {
    std::vector<std::vector<int>> f(target_n);
    for (int a = 0; a < size(); ++a) f[to[a]].push_back(a);
    return f;
}

bool is_homomorphism(const Graph& source, const VertexMap& psi, const Graph& target) {
    if (psi.size() != source.vertex_count()) return false;
    for (int a = 0; a < psi.size(); ++a)
        if (psi(a) < 0 || psi(a) >= target.vertex_count()) return false;
    for (const auto& [a, b] : source.edges()) {
        // a == b is a loop; its image must carry a loop. An edge whose ends
        // share an image likewise needs a loop there.
        if (!target.neighbor_bit(psi(a), psi(b))) return false;
    }
    return true;
}

// --- graph6 ---------------------------------------------------------------

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw ParseError("empty input");
    if (s[0] == '~') throw ParseError("byte 0: long-form graph6 not supported (n > 62)");
    if (s[0] < 63 || s[0] > 125) throw ParseError("byte 0: invalid header byte");
    int n = s[0] - 63;
    Graph g(n);
    int need = (n * (n - 1) / 2 + 5) / 6;
    if (static_cast<int>(s.size()) != 1 + need)
        throw ParseError("byte " + std::to_string(s.size()) + ": expected " + std::to_string(1 + need) + " bytes for n=" + std::to_string(n));
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            int byte = 1 + bit / 6;
            char c = s[byte];
            if (c < 63 || c > 126) throw ParseError("byte " + std::to_string(byte) + ": out-of-range character");
            if ((c - 63) >> (5 - bit % 6) & 1) g.add_edge(i, j);
            ++bit;
        }
    return g;
}

std::string write_graph6(const Graph& g) {
    if (g.has_loops()) throw InvalidInput("graph6 cannot encode loops");
    int n = g.vertex_count();
    if (n > 62) throw InvalidInput("graph6 short form requires n <= 62");
    std::string s(1, static_cast<char>(63 + n));
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                s.push_back(static_cast<char>(63 + acc));
                acc = bits = 0;
            }
        }
    if (bits > 0) s.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return s;
}

// --- edge-list format -----------------------------------------------------

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n, m;
    if (!(in >> n >> m)) throw ParseError("edge list: missing 'n m' header");
    if (n < 0 || m < 0) throw ParseError("edge list: negative counts");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        std::string tok;
        if (!(in >> tok)) throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        if (tok == "loop") {
            int v;
            if (!(in >> v)) throw ParseError("edge list: loop line missing vertex");
            g.add_loop(v);
        } else {
            int u, v;
            try {
                u = std::stoi(tok);
            } catch (...) {
                throw ParseError("edge list: bad token '" + tok + "'");
            }
            if (!(in >> v)) throw ParseError("edge list: edge line missing endpoint");
            if (u == v)
                g.add_loop(v);
            else
                g.add_edge(u, v);
        }
    }
    return g;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        if (u == v)
            out << "loop " << u << '\n';
        else
            out << u << ' ' << v << '\n';
    }
    return out.str();
}

Graph parse_graph_auto(const std::string& text) {
    auto nl = text.find('\n');
    std::string first = text.substr(0, nl);
    if (first.find(' ') != std::string::npos) return parse_edge_list(text);
    return parse_graph6(text);
}

// --- Generators -----------------------------------------------------------

Graph make_cycle(int k) {
    if (k < 3) throw InvalidInput("cycle needs k >= 3");
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

Graph make_path(int n) {
    if (n < 0) throw InvalidInput("path needs n >= 0");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_star(int d) {
    if (d < 0) throw InvalidInput("star needs d >= 0");
    Graph g(d + 1);
    for (int i = 1; i <= d; ++i) g.add_edge(0, i);
    return g;
}

Graph make_complete(int n) {
    if (n < 0) throw InvalidInput("complete needs n >= 0");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph make_empty(int n) {
    if (n < 0) throw InvalidInput("empty needs n >= 0");
    return Graph(n);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.vertex_count() + b.vertex_count());
    for (const auto& [u, v] : a.edges())
        u == v ? g.add_loop(u) : g.add_edge(u, v);
    int off = a.vertex_count();
    for (const auto& [u, v] : b.edges())
        u == v ? g.add_loop(u + off) : g.add_edge(u + off, v + off);
    return g;
}

// --- Color refinement and isomorphism -------------------------------------

// Stable 1-WL colors with a canonical integer labeling: colors are assigned
// by sorting signature tuples, so they are comparable across graphs.
static std::vector<int> refinement_colors(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n);
    // Initial color: (degree, loop flag), ranked.
    {
        std::vector<std::pair<int, int>> sig(n);
        for (int v = 0; v < n; ++v) sig[v] = {g.degree(v), g.has_loop(v) ? 1 : 0};
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (int u = 0; u < n; ++u)
                if (g.neighbor_bit(v, u)) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {color[v], std::move(nb)};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

namespace {

// Joint stable refinement of two graphs: colors are ranked over the union of
// both signature sets, so equal colors mean equal 1-WL classes across graphs.
// Initial colors must already be cross-comparable.
void refine_pair(const Graph& g, const Graph& h, std::vector<int>& cg, std::vector<int>& ch) {
    int n = g.vertex_count();
    for (int round = 0; round < 2 * n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(2 * n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (int u = 0; u < n; ++u)
                if (g.neighbor_bit(v, u)) nb.push_back(cg[u]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {cg[v], std::move(nb)};
        }
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (int u = 0; u < n; ++u)
                if (h.neighbor_bit(v, u)) nb.push_back(ch[u]);
            std::sort(nb.begin(), nb.end());
            sig[n + v] = {ch[v], std::move(nb)};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            int c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
            changed |= c != cg[v];
            cg[v] = c;
            int c2 = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[n + v]) - sorted.begin());
            changed |= c2 != ch[v];
            ch[v] = c2;
        }
        if (!changed) break;
    }
}

// Individualization-refinement search. Plain backtracking over refinement
// cells degenerates on the lift pairs this library produces (they are 1-WL
// indistinguishable by design), while re-refining after each individualized
// vertex keeps the tree tiny at desk scale.
struct IsoSearch {
    const Graph& g;
    const Graph& h;
    int n;

    bool verify(const std::vector<int>& map) const {
        for (int a = 0; a < n; ++a) {
            if (g.has_loop(a) != h.has_loop(map[a])) return false;
            for (int b = a + 1; b < n; ++b)
                if (g.adjacent(a, b) != h.adjacent(map[a], map[b])) return false;
        }
        return true;
    }

    std::optional<std::vector<int>> rec(std::vector<int> cg, std::vector<int> ch, int depth) {
        refine_pair(g, h, cg, ch);
        std::vector<int> sg = cg, sh = ch;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return std::nullopt;
        // Smallest non-singleton cell.
        std::vector<int> count(2 * n + depth + 2, 0);
        for (int c : cg) ++count[c];
        int best_color = -1;
        for (int c = 0; c < static_cast<int>(count.size()); ++c)
            if (count[c] >= 2 && (best_color < 0 || count[c] < count[best_color])) best_color = c;
        if (best_color < 0) {
            // Discrete: colors give the only candidate bijection.
            std::vector<int> map(n, -1), where(2 * n, -1);
            for (int v = 0; v < n; ++v) where[ch[v]] = v;
            for (int v = 0; v < n; ++v) map[v] = where[cg[v]];
            if (verify(map)) return map;
            return std::nullopt;
        }
        int a = -1;
        for (int v = 0; v < n; ++v)
            if (cg[v] == best_color) {
                a = v;
                break;
            }
        int fresh = 2 * n + depth + 1;
        for (int x = 0; x < n; ++x) {
            if (ch[x] != best_color) continue;
            auto cg2 = cg, ch2 = ch;
            cg2[a] = fresh;
            ch2[x] = fresh;
            if (auto m = rec(std::move(cg2), std::move(ch2), depth + 1)) return m;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<VertexMap> find_isomorphism(const Graph& g, const Graph& h) {
    int n = g.vertex_count();
    if (n != h.vertex_count() || g.edges().size() != h.edges().size()) return std::nullopt;
    if (n == 0) return VertexMap{};
    // Cross-comparable initial colors: (degree, loop) ranked over both graphs.
    std::vector<std::pair<int, int>> init(2 * n);
    for (int v = 0; v < n; ++v) init[v] = {g.degree(v), g.has_loop(v) ? 1 : 0};
    for (int v = 0; v < n; ++v) init[n + v] = {h.degree(v), h.has_loop(v) ? 1 : 0};
    auto sorted = init;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> cg(n), ch(n);
    for (int v = 0; v < n; ++v) {
        cg[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), init[v]) - sorted.begin());
        ch[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), init[n + v]) - sorted.begin());
    }
    IsoSearch s{g, h, n};
    auto m = s.rec(std::move(cg), std::move(ch), 0);
    if (!m) return std::nullopt;
    return VertexMap{std::move(*m)};
}

bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

namespace {

// Minimum adjacency string over all labelings consistent with the canonical
// refinement color order. Refinement colors are isomorphism-invariant, so
// restricting positions by color keeps the key invariant while pruning hard.
struct CanonSearch {
    const Graph& g;
    std::vector<int> color;
    std::vector<int> pos_color;  // color required at each position
    std::vector<int> perm;
    std::vector<bool> used;
    std::string cur, best;
    bool have_best = false;

    void rec(int i) {
        int n = g.vertex_count();
        if (i == n) {
            if (!have_best || cur < best) {
                best = cur;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || color[v] != pos_color[i]) continue;
            std::size_t mark = cur.size();
            cur.push_back(g.has_loop(v) ? '1' : '0');
            for (int j = 0; j < i; ++j) cur.push_back(g.adjacent(v, perm[j]) ? '1' : '0');
            if (have_best && cur.compare(0, cur.size(), best, 0, cur.size()) > 0) {
                cur.resize(mark);
                continue;
            }
            perm[i] = v;
            used[v] = true;
            rec(i + 1);
            used[v] = false;
            cur.resize(mark);
        }
    }
};

}  // namespace

std::string canonical_key(const Graph& g) {
    int n = g.vertex_count();
    CanonSearch s{g, refinement_colors(g), {}, std::vector<int>(n, 0), std::vector<bool>(n, false), {}, {}, false};
    s.pos_color = s.color;
    std::sort(s.pos_color.begin(), s.pos_color.end());
    s.rec(0);
    return std::to_string(n) + ":" + s.best;
}

// --- Minor containment ----------------------------------------------------

namespace {

// Injective map from minor's vertices into host preserving edges (subgraph,
// not induced).
bool subgraph_contains(const Graph& host, const Graph& pattern) {
    int np = pattern.vertex_count(), nh = host.vertex_count();
    if (np > nh) return false;
    std::vector<int> map(np, -1);
    std::vector<bool> used(nh, false);
    // Map high-degree pattern vertices first.
    std::vector<int> order(np);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == np) return true;
        int a = order[i];
        for (int x = 0; x < nh; ++x) {
            if (used[x] || host.degree(x) < pattern.degree(a)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (pattern.adjacent(a, order[j]) && !host.adjacent(x, map[order[j]])) ok = false;
            if (!ok) continue;
            map[a] = x;
            used[x] = true;
            if (rec(i + 1)) return true;
            used[x] = false;
        }
        return false;
    };
    return rec(0);
}

Graph contract_edge(const Graph& g, int u, int v) {
    // Merge v into u, then drop v by relabeling the last vertex.
    int n = g.vertex_count();
    Graph out(n - 1);
    auto rename = [&](int w) { return w == v ? u : (w > v ? w - 1 : w); };
    for (const auto& [a, b] : g.edges()) {
        if (a == b) continue;  // minors are tested on loopless graphs
        int x = rename(a), y = rename(b);
        if (x != y && !out.adjacent(x, y)) out.add_edge(x, y);
    }
    return out;
}

bool minor_rec(const Graph& g, const Graph& minor, const std::string& minor_key, std::set<std::string>& failed) {
    if (g.vertex_count() < minor.vertex_count() || g.simple_edge_count() < minor.simple_edge_count()) return false;
    std::string key = canonical_key(g);
    if (failed.count(key)) return false;
    if (subgraph_contains(g, minor)) return true;
    for (const auto& [u, v] : g.edges()) {
        if (u == v) continue;
        if (minor_rec(contract_edge(g, u, v), minor, minor_key, failed)) return true;
    }
    failed.insert(key);
    return false;
}

}  // namespace

bool has_minor(const Graph& g, const Graph& minor, int guard) {
    if (g.vertex_count() > guard)
        throw GuardExceeded("has_minor is guarded at " + std::to_string(guard) + " vertices, got " + std::to_string(g.vertex_count()));
    if (g.has_loops() || minor.has_loops()) throw InvalidInput("minor testing is defined for loopless graphs");
    // Drop isolated vertices of the minor; they only need spare host vertices.
    std::vector<int> keep;
    for (int v = 0; v < minor.vertex_count(); ++v)
        if (minor.degree(v) > 0) keep.push_back(v);
    if (static_cast<int>(keep.size()) < minor.vertex_count()) {
        if (minor.vertex_count() > g.vertex_count()) return false;
        Graph m(static_cast<int>(keep.size()));
        std::vector<int> idx(minor.vertex_count(), -1);
        for (std::size_t i = 0; i < keep.size(); ++i) idx[keep[i]] = static_cast<int>(i);
        for (const auto& [u, v] : minor.edges()) m.add_edge(idx[u], idx[v]);
        std::set<std::string> failed;
        return minor_rec(g, m, canonical_key(m), failed);
    }
    std::set<std::string> failed;
    return minor_rec(g, minor, canonical_key(minor), failed);
}

// --- Structure queries ----------------------------------------------------

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, verts;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            verts.push_back(v);
            for (int u = 0; u < n; ++u)
                if (u != v && g.adjacent(v, u) && comp[u] < 0) {
                    comp[u] = comp[s];
                    stack.push_back(u);
                }
        }
        std::sort(verts.begin(), verts.end());
        out.push_back(std::move(verts));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<std::vector<int>> bipartition(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (int v = 0; v < n; ++v)
        if (g.has_loop(v)) return std::nullopt;
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u) {
                if (!g.adjacent(v, u)) continue;
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    stack.push_back(u);
                } else if (side[u] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

std::vector<int> longest_cycle(const Graph& g, int guard) {
    int n = g.vertex_count();
    if (n > guard) throw GuardExceeded("longest_cycle guarded at " + std::to_string(guard) + " vertices");
    std::vector<int> best, path;
    std::vector<bool> in_path(n, false);
    std::function<void(int, int)> rec = [&](int start, int v) {
        for (int u = start; u < n; ++u) {
            if (!g.adjacent(v, u)) continue;
            if (u == start && path.size() >= 3) {
                // Canonical orientation: second vertex smaller than last.
                if (path.size() > best.size() && (path.size() < 3 || path[1] < path.back())) best = path;
            }
            if (in_path[u] || u == start) continue;
            in_path[u] = true;
            path.push_back(u);
            rec(start, u);
            path.pop_back();
            in_path[u] = false;
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        std::fill(in_path.begin(), in_path.end(), false);
        in_path[s] = true;
        rec(s, s);
    }
    return best;
}

// Induced cycles through a DFS over induced paths anchored at their minimum
// vertex.
static std::optional<std::vector<int>> find_induced_cycle_if(const Graph& g, const std::function<bool(int)>& len_ok) {
    int n = g.vertex_count();
    std::vector<int> path;
    std::vector<bool> in_path(n, false);
    std::optional<std::vector<int>> found;
    std::function<void()> rec = [&]() {
        if (found) return;
        int v = path.back(), s = path[0];
        for (int u = s + 1; u < n && !found; ++u) {
            if (in_path[u] || !g.adjacent(v, u)) continue;
            bool chord = false;
            for (std::size_t j = 1; j + 1 < path.size() && !chord; ++j)
                if (g.adjacent(u, path[j])) chord = true;
            if (chord) continue;
            bool closes = g.adjacent(u, s);
            if (closes && path.size() + 1 >= 3 && len_ok(static_cast<int>(path.size()) + 1)) {
                auto cyc = path;
                cyc.push_back(u);
                found = cyc;
                return;
            }
            // Adjacent to the anchor but not closing a valid cycle: any later
            // closure through u would leave the chord u-anchor.
            if (closes && path.size() >= 2) continue;
            in_path[u] = true;
            path.push_back(u);
            rec();
            path.pop_back();
            in_path[u] = false;
        }
    };
    for (int s = 0; s < n && !found; ++s) {
        path = {s};
        std::fill(in_path.begin(), in_path.end(), false);
        in_path[s] = true;
        rec();
    }
    return found;
}

std::optional<std::vector<int>> find_odd_hole(const Graph& g, int guard) {
    if (g.vertex_count() > guard) throw GuardExceeded("find_odd_hole guarded at " + std::to_string(guard) + " vertices");
    return find_induced_cycle_if(g, [](int len) { return len >= 5 && len % 2 == 1; });
}

std::optional<std::vector<int>> find_induced_star(const Graph& g, int d) {
    int n = g.vertex_count();
    for (int c = 0; c < n; ++c) {
        if (g.degree(c) < d) continue;
        std::vector<int> nb;
        for (int u = 0; u < n; ++u)
            if (u != c && g.adjacent(c, u)) nb.push_back(u);
        std::vector<int> pick;
        std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
            if (static_cast<int>(pick.size()) == d) return true;
            if (i == nb.size()) return false;
            bool indep = true;
            for (int p : pick)
                if (g.adjacent(nb[i], p)) indep = false;
            if (indep) {
                pick.push_back(nb[i]);
                if (rec(i + 1)) return true;
                pick.pop_back();
            }
            return rec(i + 1);
        };
        if (rec(0)) {
            std::vector<int> out{c};
            out.insert(out.end(), pick.begin(), pick.end());
            return out;
        }
    }
    return std::nullopt;
}

bool is_planar(const Graph& g, int guard) {
    if (g.vertex_count() > guard) throw GuardExceeded("is_planar guarded at " + std::to_string(guard) + " vertices");
    int n = g.vertex_count(), m = g.simple_edge_count();
    if (n >= 3 && m > 3 * n - 6) return false;
    if (m < 9) return true;  // every non-planar graph has >= 9 edges
    return !has_minor(g, make_complete(5), guard) && !has_minor(g, [] {
        Graph k33(6);
        for (int i = 0; i < 3; ++i)
            for (int j = 3; j < 6; ++j) k33.add_edge(i, j);
        return k33;
    }(), guard);
}

int chromatic_number(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    if (g.has_loops()) throw InvalidInput("chromatic number undefined with loops");
    for (int k = 1; k <= n; ++k) {
        std::vector<int> color(n, -1);
        std::function<bool(int)> rec = [&](int v) -> bool {
            if (v == n) return true;
            for (int c = 0; c < k; ++c) {
                bool ok = true;
                for (int u = 0; u < v && ok; ++u)
                    if (g.adjacent(v, u) && color[u] == c) ok = false;
                if (!ok) continue;
                color[v] = c;
                if (rec(v + 1)) return true;
                color[v] = -1;
            }
            return false;
        };
        if (rec(0)) return k;
    }
    return n;
}

StructureReport structure_queries(const Graph& g, int guard) {
    StructureReport r;
    r.components = connected_components(g);
    auto bp = bipartition(g);
    r.bipartite = bp.has_value();
    if (bp) r.two_coloring = *bp;
    r.max_degree = g.max_degree();
    r.longest_cycle = longest_cycle(g, guard);
    r.circumference = static_cast<int>(r.longest_cycle.size());
    auto hole = find_odd_hole(g, guard);
    r.odd_hole = hole.has_value();
    if (hole) r.odd_hole_witness = *hole;
    r.planar = is_planar(g, guard);
    return r;
}

// --- Enumeration ----------------------------------------------------------

void enumerate_graphs(int n_max, bool connected_only, const std::function<bool(const Graph&)>& predicate,
                      const std::function<void(const Graph&)>& yield, int guard) {
    if (n_max > guard)
        throw GuardExceeded("enumerate_graphs guarded at n_max = " + std::to_string(guard) + "; pass a larger guard to override");
    auto emit = [&](const std::vector<std::pair<std::string, Graph>>& level) {
        for (const auto& [key, g] : level) {
            if (connected_only && !is_connected(g)) continue;
            if (predicate && !predicate(g)) continue;
            yield(g);
        }
    };
    if (n_max < 1) return;
    std::vector<std::pair<std::string, Graph>> level{{canonical_key(Graph(1)), Graph(1)}};
    emit(level);
    for (int n = 2; n <= n_max; ++n) {
        std::map<std::string, Graph> next;
        for (const auto& [key, g] : level) {
            for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                Graph h(n);
                for (const auto& [u, v] : g.edges()) h.add_edge(u, v);
                for (int u = 0; u < n - 1; ++u)
                    if (mask >> u & 1) h.add_edge(u, n - 1);
                std::string k = canonical_key(h);
                next.emplace(std::move(k), std::move(h));
            }
        }
        level.assign(next.begin(), next.end());
        emit(level);
    }
}

std::vector<Graph> enumerate_graphs(int n_max, bool connected_only, int guard) {
    std::vector<Graph> out;
    enumerate_graphs(n_max, connected_only, nullptr, [&](const Graph& g) { out.push_back(g); }, guard);
    return out;
}

std::vector<Graph> enumerate_loop_graphs(int n_max, int guard) {
    if (n_max > guard) throw GuardExceeded("enumerate_loop_graphs guarded at n_max = " + std::to_string(guard));
    std::map<std::string, Graph> reps;
    for (int n = 1; n <= n_max; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint32_t em = 0; em < (1u << pairs); ++em)
            for (std::uint32_t lm = 0; lm < (1u << n); ++lm) {
                Graph g(n);
                int bit = 0;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v, ++bit)
                        if (em >> bit & 1) g.add_edge(u, v);
                for (int v = 0; v < n; ++v)
                    if (lm >> v & 1) g.add_loop(v);
                std::string k = std::to_string(n) + "|" + canonical_key(g);
                reps.emplace(std::move(k), std::move(g));
            }
    }
    std::vector<Graph> out;
    for (auto& [k, g] : reps) out.push_back(std::move(g));
    return out;
}

}  // namespace homind
