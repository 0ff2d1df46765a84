#include "homind/cycles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace homind {

namespace {

int step_sign(const Graph& F, const VertexMap& psi, int a, int b, int k) {
    if (a < 0 || b < 0 || a >= F.vertex_count() || b >= F.vertex_count())
        throw InvalidInput("walk vertex out of range");
    if (a == b || !F.adjacent(a, b)) throw InvalidInput("walk step is not an edge");
    if ((psi(a) + 1) % k == psi(b)) return +1;
    if ((psi(b) + 1) % k == psi(a)) return -1;
    throw InvalidInput("walk step images are not adjacent on the cycle");
}

}  // namespace

int psi_length(const Graph& F, const Walk& walk, const VertexMap& psi, int k) {
    if (k < 3) throw InvalidInput("cycle length must be at least 3");
    if (psi.size() != F.vertex_count()) throw InvalidInput("map size mismatch");
    for (int v : psi.to)
        if (v < 0 || v >= k) throw InvalidInput("map image out of range");
    const auto& w = walk.vertices;
    if (walk.closed && (w.size() < 2 || w.front() != w.back()))
        throw InvalidInput("closed walk must end where it starts");
    int len = 0;
    for (std::size_t i = 1; i < w.size(); ++i) len += step_sign(F, psi, w[i - 1], w[i], k);
    return len;
}

TourWitness find_tour_nonzero(const Graph& F, const VertexMap& psi, int k) {
    Graph ck = make_cycle(k);
    if (!is_oddomorphism(F, psi, ck)) throw InvalidInput("map is not an oddomorphism onto the cycle");
    std::vector<int> all(F.edge_count());
    std::iota(all.begin(), all.end(), 0);
    auto tags = classify_parity(F, all, psi, ck);

    int a0 = -1;
    for (int v = 0; v < F.vertex_count(); ++v)
        if (psi(v) == 0 && tags[v] == Parity::odd) {
            a0 = v;
            break;
        }
    // Fiber 0 holds an odd number of odd vertices, so a0 exists.

    std::vector<char> odd_status(F.vertex_count());
    for (int v = 0; v < F.vertex_count(); ++v) odd_status[v] = tags[v] == Parity::odd;
    std::vector<char> used(F.edge_count(), 0);

    TourWitness out;
    out.w_plus.assign(k, 0);
    out.w_minus.assign(k, 0);
    out.walk.closed = true;
    out.walk.vertices = {a0};
    odd_status[a0] = 0;

    int cur = a0, dir = +1;
    while (true) {
        int target = ((psi(cur) + dir) % k + k) % k;
        int next = -1;
        for (int b = 0; b < F.vertex_count(); ++b) {
            if (b == cur || !F.adjacent(cur, b) || psi(b) != target) continue;
            int e = F.edge_index(cur, b);
            if (!used[e]) {
                next = b;
                break;
            }
        }
        if (next == -1) throw InvalidInput("status walk is stuck; parity precondition violated");
        used[F.edge_index(cur, next)] = 1;
        out.walk.vertices.push_back(next);
        if (dir == +1)
            ++out.w_plus[psi(cur)];
        else
            ++out.w_minus[target];
        bool closing = next == a0 && dir == +1 && psi(cur) == k - 1;
        cur = next;
        if (closing) break;
        if (odd_status[cur])
            odd_status[cur] = 0;  // continue in the same direction
        else
            dir = -dir;
    }
    out.winding = psi_length(F, out.walk, psi, k) / k;
    return out;
}

TourWitness find_odd_winding_tour(const Graph& F, const VertexMap& psi, int k) {
    Graph cur = F;
    while (true) {
        TourWitness w = find_tour_nonzero(cur, psi, k);
        if (w.winding % 2 != 0) return w;
        Graph next(cur.vertex_count());
        std::set<std::pair<int, int>> removed;
        const auto& wv = w.walk.vertices;
        for (std::size_t i = 1; i < wv.size(); ++i)
            removed.insert(std::minmax(wv[i - 1], wv[i]));
        for (const auto& [a, b] : cur.edges())
            if (!removed.count({a, b})) next.add_edge(a, b);
        cur = next;
    }
}

namespace {

int winding_of(const Graph& F, const std::vector<int>& closed, const VertexMap& psi, int k) {
    return psi_length(F, Walk{closed, true}, psi, k) / k;
}

}  // namespace

ChordlessCycle extract_chordless_odd_cycle(const Graph& F, const OddoCertificate& cert, int k) {
    Graph ck = make_cycle(k);
    if (cert.oddism) throw InvalidInput("expected a weak oddomorphism certificate");
    if (auto err = check_certificate(F, ck, cert); !err.empty())
        throw InvalidInput("invalid certificate: " + err);

    // Odd-winding tour inside the connected witness.
    const auto& cwv = cert.connected_witness_vertices;
    std::vector<int> pos(F.vertex_count(), -1);
    for (std::size_t i = 0; i < cwv.size(); ++i) pos[cwv[i]] = static_cast<int>(i);
    Graph H(static_cast<int>(cwv.size()));
    for (int e : cert.connected_witness_edges) {
        auto [a, b] = F.edges()[e];
        H.add_edge(pos[a], pos[b]);
    }
    VertexMap psiH{std::vector<int>(cwv.size())};
    for (std::size_t i = 0; i < cwv.size(); ++i) psiH.to[i] = cert.psi(cwv[i]);
    TourWitness tour = find_odd_winding_tour(H, psiH, k);

    std::vector<int> w;
    for (int v : tour.walk.vertices) w.push_back(cwv[v]);
    const VertexMap& psi = cert.psi;

    // Shorten to a chordless cycle, keeping odd winding at every split.
    while (true) {
        int L = static_cast<int>(w.size()) - 1;  // w[0..L], w[L] == w[0]
        // Repeated vertex other than the closing pair.
        int ri = -1, rj = -1;
        for (int i = 0; i < L && ri == -1; ++i)
            for (int j = i + 1; j <= L; ++j) {
                if (i == 0 && j == L) continue;
                if (w[i] == w[j]) {
                    ri = i;
                    rj = j;
                    break;
                }
            }
        if (ri != -1) {
            std::vector<int> inner(w.begin() + ri, w.begin() + rj + 1);
            std::vector<int> outer(w.begin(), w.begin() + ri + 1);
            outer.insert(outer.end(), w.begin() + rj + 1, w.end());
            w = winding_of(F, inner, psi, k) % 2 != 0 ? inner : outer;
            continue;
        }
        // w is a cycle; look for a chord in F.
        int ci = -1, cj = -1;
        for (int i = 0; i < L && ci == -1; ++i)
            for (int j = i + 1; j < L; ++j) {
                bool consecutive = j == i + 1 || (i == 0 && j == L - 1);
                if (!consecutive && F.adjacent(w[i], w[j])) {
                    ci = i;
                    cj = j;
                    break;
                }
            }
        if (ci == -1) break;
        std::vector<int> inner(w.begin() + ci, w.begin() + cj + 1);
        inner.push_back(w[ci]);  // back along the chord
        std::vector<int> outer(w.begin(), w.begin() + ci + 1);
        outer.insert(outer.end(), w.begin() + cj, w.end());  // chord, then on to the end
        w = winding_of(F, inner, psi, k) % 2 != 0 ? inner : outer;
    }

    ChordlessCycle out;
    out.vertices.assign(w.begin(), w.end() - 1);
    out.winding = winding_of(F, w, psi, k);
    return out;
}

namespace {

struct FoundCycle {
    std::vector<int> vertices;
    std::uint64_t mask = 0;
    bool chordless = false;
    std::vector<int> edge_key;  // sorted edge indices, identifies the cycle
};

std::vector<FoundCycle> all_cycles(const Graph& g, std::size_t cap) {
    std::vector<FoundCycle> out;
    int n = g.vertex_count();
    std::vector<int> path;
    std::uint64_t on_path = 0;
    auto record = [&] {
        FoundCycle c;
        c.vertices = path;
        c.mask = on_path;
        c.chordless = true;
        int L = static_cast<int>(path.size());
        for (int i = 0; i < L; ++i) {
            c.edge_key.push_back(g.edge_index(path[i], path[(i + 1) % L]));
            for (int j = i + 2; j < L; ++j)
                if (!(i == 0 && j == L - 1) && g.adjacent(path[i], path[j])) c.chordless = false;
        }
        std::sort(c.edge_key.begin(), c.edge_key.end());
        out.push_back(std::move(c));
        if (out.size() > cap) throw GuardExceeded("too many cycles in structure search");
    };
    std::function<void(int, int)> dfs = [&](int s, int cur) {
        for (int b = s + 1; b < n; ++b) {
            if (b == cur || !g.adjacent(cur, b) || (on_path >> b & 1)) continue;
            path.push_back(b);
            on_path |= 1ull << b;
            if (path.size() >= 3 && g.adjacent(b, s) && path[1] < b) record();
            dfs(s, b);
            on_path &= ~(1ull << b);
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on_path = 1ull << s;
        dfs(s, s);
    }
    return out;
}

}  // namespace

CycleStructureWitness has_cycle_structure(const Graph& G, const CycleStructureSpec& spec, int guard) {
    int r = spec.R.vertex_count();
    if (static_cast<int>(spec.chordless.size()) != r || static_cast<int>(spec.min_length.size()) != r)
        throw InvalidInput("spec fields must match the template vertex count");
    for (int l : spec.min_length)
        if (l < 3) throw InvalidInput("length bounds must be at least 3");
    if (G.vertex_count() > guard) throw GuardExceeded("graph too large for cycle-structure search");

    auto cycles = all_cycles(G, 200000);
    std::vector<int> pick(r, -1);
    std::function<bool(int)> place = [&](int u) {
        if (u == r) return true;
        for (std::size_t c = 0; c < cycles.size(); ++c) {
            const auto& cy = cycles[c];
            int len = static_cast<int>(cy.vertices.size());
            if (len < spec.min_length[u] || (len - spec.min_length[u]) % 2 != 0) continue;
            if (spec.chordless[u] && !cy.chordless) continue;
            bool ok = true;
            for (int v = 0; v < u && ok; ++v) {
                if (cycles[pick[v]].edge_key == cy.edge_key) ok = false;
                if (spec.R.adjacent(u, v) && (cycles[pick[v]].mask & cy.mask)) ok = false;
            }
            if (!ok) continue;
            pick[u] = static_cast<int>(c);
            if (place(u + 1)) return true;
            pick[u] = -1;
        }
        return false;
    };

    CycleStructureWitness out;
    out.found = place(0);
    if (out.found)
        for (int u = 0; u < r; ++u) out.cycles.push_back(cycles[pick[u]].vertices);
    return out;
}

}  // namespace homind
