#include "homind/oddo.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "homind/homcount.hpp"

namespace homind {

std::vector<Parity> classify_parity(const Graph& F, const std::vector<int>& witness_edges, const VertexMap& psi,
                                    const Graph& G) {
    if (psi.size() != F.vertex_count()) throw InvalidInput("map length does not match the source graph");
    for (int a = 0; a < psi.size(); ++a)
        if (psi(a) < 0 || psi(a) >= G.vertex_count()) throw InvalidInput("map image out of range");
    const auto& fedges = F.edges();
    for (int e : witness_edges)
        if (e < 0 || e >= static_cast<int>(fedges.size())) throw InvalidInput("witness edge index out of range");

    // fiber_count[a][v]: neighbors of a through witness edges landing in fiber v.
    std::vector<std::map<int, int>> fiber_count(F.vertex_count());
    for (int e : witness_edges) {
        auto [a, b] = fedges[e];
        ++fiber_count[a][psi(b)];
        if (a != b) ++fiber_count[b][psi(a)];
    }
    std::vector<Parity> out(F.vertex_count());
    for (int a = 0; a < F.vertex_count(); ++a) {
        bool any_odd = false, any_even = false;
        for (int v = 0; v < G.vertex_count(); ++v) {
            if (!G.adjacent(psi(a), v)) continue;
            auto it = fiber_count[a].find(v);
            int cnt = it == fiber_count[a].end() ? 0 : it->second;
            (cnt % 2 ? any_odd : any_even) = true;
        }
        out[a] = any_odd ? (any_even ? Parity::neither : Parity::odd) : Parity::even;
    }
    return out;
}

namespace {

std::vector<int> all_edge_indices(const Graph& F) {
    std::vector<int> e(F.edge_count());
    std::iota(e.begin(), e.end(), 0);
    return e;
}

bool parity_conditions_hold(const Graph& F, const std::vector<int>& witness, const VertexMap& psi, const Graph& G) {
    auto tags = classify_parity(F, witness, psi, G);
    for (auto t : tags)
        if (t == Parity::neither) return false;
    std::vector<int> odd_in_fiber(G.vertex_count(), 0);
    for (int a = 0; a < F.vertex_count(); ++a)
        if (tags[a] == Parity::odd) ++odd_in_fiber[psi(a)];
    for (int v = 0; v < G.vertex_count(); ++v)
        if (odd_in_fiber[v] % 2 == 0) return false;
    return true;
}

}  // namespace

bool is_oddomorphism(const Graph& F, const VertexMap& psi, const Graph& G) {
    if (!is_homomorphism(F, psi, G)) return false;
    return parity_conditions_hold(F, all_edge_indices(F), psi, G);
}

bool is_oddism(const Graph& F, const VertexMap& psi, const Graph& G) {
    if (psi.size() != F.vertex_count()) return false;
    for (int a = 0; a < psi.size(); ++a)
        if (psi(a) < 0 || psi(a) >= G.vertex_count()) return false;
    if (G.has_loops()) throw InvalidInput("oddisms target loopless graphs");
    return parity_conditions_hold(F, all_edge_indices(F), psi, G);
}

std::optional<std::vector<int>> odd_vertex_set(const Graph& F, const VertexMap& psi, const Graph& G) {
    auto tags = classify_parity(F, all_edge_indices(F), psi, G);
    std::vector<int> odd;
    for (int a = 0; a < F.vertex_count(); ++a) {
        if (tags[a] == Parity::neither) return std::nullopt;
        if (tags[a] == Parity::odd) odd.push_back(a);
    }
    return odd;
}

namespace {

// Decodes a dual solution (y over V(F), z over the B-block rows) into a
// certificate, including the connected shrink: the component of the witness
// subgraph meeting fiber 0 in an odd number of odd vertices.
OddoCertificate decode_certificate(const Graph& F, const Graph& G, const VertexMap& psi, const Gf2Vector& yz,
                                   const std::vector<int>& b_row_edges, bool oddism) {
    OddoCertificate cert;
    cert.psi = psi;
    cert.oddism = oddism;
    int nf = F.vertex_count();
    for (int a = 0; a < nf; ++a)
        if (yz.get(a)) cert.odd_set.push_back(a);
    for (int r = 0; r < static_cast<int>(b_row_edges.size()); ++r)
        if (yz.get(nf + r)) cert.witness_edges.push_back(b_row_edges[r]);

    // Components of the witness subgraph.
    std::vector<int> comp(nf, -1);
    int ncomp = 0;
    const auto& fedges = F.edges();
    std::vector<std::vector<int>> adj(nf);
    for (int e : cert.witness_edges) {
        auto [a, b] = fedges[e];
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int s = 0; s < nf; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = ncomp++;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (comp[y] < 0) {
                    comp[y] = comp[s];
                    stack.push_back(y);
                }
        }
    }
    std::vector<int> odd_in_fiber0(ncomp, 0);
    for (int a : cert.odd_set)
        if (psi(a) == 0) ++odd_in_fiber0[comp[a]];
    int chosen = -1;
    for (int c = 0; c < ncomp && chosen < 0; ++c)
        if (odd_in_fiber0[c] % 2 == 1) chosen = c;
    for (int a = 0; a < nf; ++a)
        if (comp[a] == chosen) cert.connected_witness_vertices.push_back(a);
    for (int e : cert.witness_edges)
        if (comp[fedges[e].first] == chosen) cert.connected_witness_edges.push_back(e);
    return cert;
}

}  // namespace

std::optional<OddoCertificate> find_weak_oddo(const Graph& F, const Graph& G, long limit) {
    if (!is_connected(G) || G.simple_edge_count() == 0)
        throw InvalidInput("target must be connected with at least one edge");
    if (G.has_loops() || F.has_loops()) throw InvalidInput("weak oddomorphism search expects loopless graphs");
    auto b_rows = all_edge_indices(F);
    for (const auto& psi : hom_enumerate(F, G, limit)) {
        auto sys = build_fibered_system(F, G, {0}, psi);
        if (auto yz = fredholm_certificate(sys.stacked()))
            return decode_certificate(F, G, psi, *yz, b_rows, false);
    }
    return std::nullopt;
}

std::optional<OddoCertificate> find_weak_oddism(const Graph& F, const Graph& G, long limit) {
    if (!is_connected(G) || G.simple_edge_count() == 0)
        throw InvalidInput("target must be connected with at least one edge");
    if (G.has_loops()) throw InvalidInput("oddism target must be loopless");
    int nf = F.vertex_count(), ng = G.vertex_count();
    double total = 1;
    for (int i = 0; i < nf; ++i) total *= ng;
    if (total > static_cast<double>(limit))
        throw GuardExceeded("oddism search would enumerate " + std::to_string(total) + " functions, limit is " +
                            std::to_string(limit));
    const auto& fedges = F.edges();
    VertexMap psi{std::vector<int>(nf, 0)};
    while (true) {
        // Mapped edges carry agreement rows; the rest are unconstrained.
        std::vector<int> mapped;
        for (int e = 0; e < static_cast<int>(fedges.size()); ++e) {
            auto [a, b] = fedges[e];
            if (a != b && G.adjacent(psi(a), psi(b))) mapped.push_back(e);
        }
        std::vector<std::pair<int, int>> vars;
        for (int a = 0; a < nf; ++a)
            for (int e : G.incident_edges(psi(a))) vars.emplace_back(a, e);
        auto var_index = [&](int a, int e) {
            return static_cast<int>(std::lower_bound(vars.begin(), vars.end(), std::make_pair(a, e)) - vars.begin());
        };
        Gf2Matrix M(nf + static_cast<int>(mapped.size()), static_cast<int>(vars.size()));
        Gf2Vector b(M.rows());
        for (int a = 0; a < nf; ++a) {
            for (int e : G.incident_edges(psi(a))) M.set(a, var_index(a, e), true);
            if (psi(a) == 0) b.set(a, true);  // the odd lift distinguishes vertex 0
        }
        for (int r = 0; r < static_cast<int>(mapped.size()); ++r) {
            auto [a, bb] = fedges[mapped[r]];
            int e = G.edge_index(psi(a), psi(bb));
            M.flip(nf + r, var_index(a, e));
            M.flip(nf + r, var_index(bb, e));
        }
        if (auto yz = fredholm_certificate({std::move(M), std::move(b)}))
            return decode_certificate(F, G, psi, *yz, mapped, true);
        int i = 0;
        while (i < nf && ++psi.to[i] == ng) psi.to[i++] = 0;
        if (i == nf || nf == 0) break;
    }
    return std::nullopt;
}

std::string check_certificate(const Graph& F, const Graph& G, const OddoCertificate& cert) {
    if (cert.psi.size() != F.vertex_count()) return "map length does not match the source graph";
    for (int a = 0; a < cert.psi.size(); ++a)
        if (cert.psi(a) < 0 || cert.psi(a) >= G.vertex_count()) return "map image out of range";
    for (int a : cert.odd_set)
        if (a < 0 || a >= F.vertex_count()) return "odd set vertex out of range";
    for (int v : cert.connected_witness_vertices)
        if (v < 0 || v >= F.vertex_count()) return "connected witness vertex out of range";
    const auto& fedges = F.edges();
    for (int e : cert.witness_edges)
        if (e < 0 || e >= static_cast<int>(fedges.size())) return "witness edge index out of range";
    for (int e : cert.witness_edges) {
        auto [a, b] = fedges[e];
        if (a == b || !G.adjacent(cert.psi(a), cert.psi(b))) return "witness edge is not mapped onto a target edge";
    }
    if (!cert.oddism)
        if (!is_homomorphism(F, cert.psi, G)) return "map is not a homomorphism";

    auto tags = classify_parity(F, cert.witness_edges, cert.psi, G);
    std::set<int> odd(cert.odd_set.begin(), cert.odd_set.end());
    for (int a = 0; a < F.vertex_count(); ++a) {
        if (tags[a] == Parity::neither) return "vertex " + std::to_string(a) + " is neither odd nor even";
        if ((tags[a] == Parity::odd) != (odd.count(a) > 0))
            return "odd set disagrees with the parity of vertex " + std::to_string(a);
    }
    std::vector<int> odd_in_fiber(G.vertex_count(), 0);
    for (int a : cert.odd_set) ++odd_in_fiber[cert.psi(a)];
    for (int v = 0; v < G.vertex_count(); ++v)
        if (odd_in_fiber[v] % 2 == 0) return "fiber " + std::to_string(v) + " holds an even number of odd vertices";

    // Connected witness: a connected sub-certificate in its own right.
    std::set<int> cw(cert.connected_witness_vertices.begin(), cert.connected_witness_vertices.end());
    if (cw.empty()) return "empty connected witness";
    for (int e : cert.connected_witness_edges) {
        if (!std::binary_search(cert.witness_edges.begin(), cert.witness_edges.end(), e))
            return "connected witness edge outside the witness subgraph";
        auto [a, b] = fedges[e];
        if (!cw.count(a) || !cw.count(b)) return "connected witness edge leaves the witness vertex set";
    }
    {
        std::map<int, int> pos;
        for (int v : cert.connected_witness_vertices) pos.emplace(v, static_cast<int>(pos.size()));
        Graph sub(static_cast<int>(pos.size()));
        for (int e : cert.connected_witness_edges) {
            auto [a, b] = fedges[e];
            sub.add_edge(pos.at(a), pos.at(b));
        }
        if (!is_connected(sub)) return "connected witness is not connected";
        VertexMap sub_psi{std::vector<int>(sub.vertex_count())};
        for (auto [v, i] : pos) sub_psi.to[i] = cert.psi(v);
        auto sub_tags = classify_parity(sub, all_edge_indices(sub), sub_psi, G);
        std::vector<int> sub_odd(G.vertex_count(), 0);
        for (int i = 0; i < sub.vertex_count(); ++i) {
            if (sub_tags[i] == Parity::neither) return "connected witness has a vertex that is neither odd nor even";
            if (sub_tags[i] == Parity::odd) ++sub_odd[sub_psi(i)];
        }
        for (int v = 0; v < G.vertex_count(); ++v)
            if (sub_odd[v] % 2 == 0) return "connected witness misses fiber " + std::to_string(v);
    }
    return "";
}

nlohmann::json certificate_to_json(const Graph& F, const Graph& G, const OddoCertificate& cert) {
    const auto& fedges = F.edges();
    nlohmann::json we = nlohmann::json::array(), cwe = nlohmann::json::array();
    for (int e : cert.witness_edges) we.push_back({fedges[e].first, fedges[e].second});
    for (int e : cert.connected_witness_edges) cwe.push_back({fedges[e].first, fedges[e].second});
    return {
        {"type", cert.oddism ? "weak-oddism" : "weak-oddomorphism"},
        {"source", write_edge_list(F)},
        {"target", write_edge_list(G)},
        {"map", cert.psi.to},
        {"odd_set", cert.odd_set},
        {"witness_edges", we},
        {"connected_witness_vertices", cert.connected_witness_vertices},
        {"connected_witness_edges", cwe},
    };
}

CertificateFile certificate_from_json(const nlohmann::json& j) {
    CertificateFile out;
    try {
        out.F = parse_edge_list(j.at("source").get<std::string>());
        out.G = parse_edge_list(j.at("target").get<std::string>());
        out.cert.oddism = j.at("type").get<std::string>() == "weak-oddism";
        out.cert.psi.to = j.at("map").get<std::vector<int>>();
        out.cert.odd_set = j.at("odd_set").get<std::vector<int>>();
        auto edge_list = [&](const char* key) {
            std::vector<int> idx;
            for (const auto& pair : j.at(key)) {
                int e = out.F.edge_index(pair.at(0).get<int>(), pair.at(1).get<int>());
                if (e < 0) throw ParseError("certificate names an edge absent from the source graph");
                idx.push_back(e);
            }
            std::sort(idx.begin(), idx.end());
            return idx;
        };
        out.cert.witness_edges = edge_list("witness_edges");
        out.cert.connected_witness_edges = edge_list("connected_witness_edges");
        out.cert.connected_witness_vertices = j.at("connected_witness_vertices").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what());
    }
    return out;
}

ComposedOddo compose_oddo(const Graph& F, const VertexMap& psi1, const Graph& G, const VertexMap& psi2, const Graph& H) {
    if (!is_oddomorphism(F, psi1, G)) throw InvalidInput("first map is not an oddomorphism");
    if (!is_oddomorphism(G, psi2, H)) throw InvalidInput("second map is not an oddomorphism");
    ComposedOddo out;
    out.psi.to.resize(F.vertex_count());
    for (int a = 0; a < F.vertex_count(); ++a) out.psi.to[a] = psi2(psi1(a));
    auto odd1 = *odd_vertex_set(F, psi1, G);
    auto odd2 = *odd_vertex_set(G, psi2, H);
    std::set<int> o2(odd2.begin(), odd2.end());
    for (int a : odd1)
        if (o2.count(psi1(a))) out.odd_set.push_back(a);
    return out;
}

RestrictedOddo restrict_oddo(const Graph& F, const VertexMap& psi, const Graph& G, const std::vector<int>& g_vertices,
                             const std::vector<std::pair<int, int>>& g_edges) {
    std::set<int> gv(g_vertices.begin(), g_vertices.end());
    for (int v : gv)
        if (v < 0 || v >= G.vertex_count()) throw InvalidInput("subgraph vertex out of range");
    for (auto [u, v] : g_edges)
        if (!gv.count(u) || !gv.count(v) || !G.adjacent(u, v)) throw InvalidInput("subgraph edge not in the target graph");

    RestrictedOddo out;
    out.g_vertices.assign(gv.begin(), gv.end());
    std::map<int, int> gpos;
    for (int v : out.g_vertices) gpos.emplace(v, static_cast<int>(gpos.size()));
    out.Gsub = Graph(static_cast<int>(gpos.size()));
    std::set<std::pair<int, int>> ge;
    for (auto [u, v] : g_edges) ge.insert(std::minmax(u, v));
    for (auto [u, v] : ge) out.Gsub.add_edge(gpos.at(u), gpos.at(v));

    for (int a = 0; a < F.vertex_count(); ++a)
        if (gv.count(psi(a))) out.f_vertices.push_back(a);
    std::map<int, int> fpos;
    for (int a : out.f_vertices) fpos.emplace(a, static_cast<int>(fpos.size()));
    out.Fsub = Graph(static_cast<int>(fpos.size()));
    for (const auto& [a, b] : F.edges()) {
        if (a == b || !fpos.count(a) || !fpos.count(b)) continue;
        if (ge.count(std::minmax(psi(a), psi(b)))) out.Fsub.add_edge(fpos.at(a), fpos.at(b));
    }
    out.psi.to.resize(out.Fsub.vertex_count());
    for (int a : out.f_vertices) out.psi.to[fpos.at(a)] = gpos.at(psi(a));
    return out;
}

MinorOddo minor_oddo(const Graph& F, const VertexMap& psi, const Graph& G, int u, int v) {
    if (G.edge_index(u, v) < 0 || u == v) throw InvalidInput("contraction edge is not in the target graph");
    if (!is_oddomorphism(F, psi, G)) throw InvalidInput("map is not an oddomorphism");
    int nf = F.vertex_count(), ng = G.vertex_count();

    // Duplicate edges between the two merged target vertices: keep the u side.
    std::set<int> dup_x;
    for (int x = 0; x < ng; ++x)
        if (x != u && x != v && G.adjacent(x, u) && G.adjacent(x, v)) dup_x.insert(x);

    // F'': drop source edges realizing the dropped target edges.
    auto realized_in_Fpp = [&](int a, int b) {
        return !(dup_x.count(psi(a)) && psi(b) == v) && !(dup_x.count(psi(b)) && psi(a) == v);
    };

    // Components of the union of the two fibers, by ascending minimum vertex.
    std::vector<int> comp(nf, -1);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < nf; ++s) {
        if (comp[s] >= 0 || (psi(s) != u && psi(s) != v)) continue;
        comp[s] = static_cast<int>(comps.size());
        std::vector<int> stack{s}, members;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            members.push_back(x);
            for (int y = 0; y < nf; ++y)
                if (comp[y] < 0 && (psi(y) == u || psi(y) == v) && F.adjacent(x, y)) {
                    comp[y] = comp[s];
                    stack.push_back(y);
                }
        }
        std::sort(members.begin(), members.end());
        comps.push_back(std::move(members));
    }

    // Target: contract uv; the merged vertex goes last.
    std::vector<int> gmap(ng, -1);
    int gi = 0;
    for (int x = 0; x < ng; ++x)
        if (x != u && x != v) gmap[x] = gi++;
    int what = gi;
    Graph gprime(gi + 1);
    for (const auto& [x, y] : G.edges()) {
        bool xm = x == u || x == v, ym = y == u || y == v;
        if (xm && ym) continue;
        int a = xm ? what : gmap[x], b = ym ? what : gmap[y];
        if (!gprime.adjacent(a, b)) gprime.add_edge(a, b);
    }

    // Source: untouched vertices first, then one vertex per component.
    std::vector<int> fmap(nf, -1);
    int fi = 0;
    for (int a = 0; a < nf; ++a)
        if (psi(a) != u && psi(a) != v) fmap[a] = fi++;
    int base = fi;
    Graph fprime(base + static_cast<int>(comps.size()));
    for (const auto& [a, b] : F.edges()) {
        if (a == b) continue;
        bool am = fmap[a] < 0, bm = fmap[b] < 0;
        if (am && bm) continue;  // inside the merged classes
        if (!am && !bm) {
            if (realized_in_Fpp(a, b)) fprime.add_edge(fmap[a], fmap[b]);
        }
        // Mixed edges are decided below by multiplicity.
    }
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
        std::set<int> members(comps[c].begin(), comps[c].end());
        for (int a = 0; a < nf; ++a) {
            if (fmap[a] < 0) continue;
            int mult = 0;
            for (int m : members)
                if (F.adjacent(a, m) && realized_in_Fpp(a, m)) ++mult;
            if (mult % 2 == 1) fprime.add_edge(fmap[a], base + c);
        }
    }

    MinorOddo out;
    out.Fprime = std::move(fprime);
    out.Gprime = std::move(gprime);
    out.components = std::move(comps);
    out.psi.to.resize(out.Fprime.vertex_count());
    for (int a = 0; a < nf; ++a)
        if (fmap[a] >= 0) out.psi.to[fmap[a]] = gmap[psi(a)];
    for (int c = 0; c < static_cast<int>(out.components.size()); ++c) out.psi.to[base + c] = what;
    return out;
}

std::pair<Graph, VertexMap> odd_subdivision(const Graph& G, const std::vector<int>& lengths) {
    if (G.has_loops()) throw InvalidInput("subdivision is defined for loopless graphs");
    const auto& edges = G.edges();
    if (lengths.size() != edges.size()) throw InvalidInput("need one length per edge");
    for (int l : lengths)
        if (l < 1 || l % 2 == 0) throw InvalidInput("subdivision lengths must be odd and positive");
    int n = G.vertex_count();
    int total = n;
    for (int l : lengths) total += l - 1;
    Graph f(total);
    VertexMap psi{std::vector<int>(total)};
    for (int v = 0; v < n; ++v) psi.to[v] = v;
    int next = n;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [i, j] = edges[e];
        int l = lengths[e];
        int prev = i;
        for (int t = 1; t < l; ++t) {
            f.add_edge(prev, next);
            psi.to[next] = t % 2 ? j : i;  // fold back and forth between the ends
            prev = next++;
        }
        f.add_edge(prev, j);
    }
    return {std::move(f), std::move(psi)};
}

std::pair<Graph, VertexMap> odd_cover(const Graph& G, int k, const std::vector<std::vector<int>>& voltages) {
    if (G.has_loops()) throw InvalidInput("covers are defined for loopless graphs");
    if (k < 1 || k % 2 == 0) throw InvalidInput("cover must have an odd number of sheets");
    const auto& edges = G.edges();
    if (voltages.size() != edges.size()) throw InvalidInput("need one voltage permutation per edge");
    for (const auto& pi : voltages) {
        if (static_cast<int>(pi.size()) != k) throw InvalidInput("voltage permutation has wrong length");
        std::vector<bool> seen(k, false);
        for (int x : pi) {
            if (x < 0 || x >= k || seen[x]) throw InvalidInput("voltage is not a permutation");
            seen[x] = true;
        }
    }
    int n = G.vertex_count();
    Graph f(n * k);
    VertexMap psi{std::vector<int>(n * k)};
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < k; ++i) psi.to[v * k + i] = v;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [uu, vv] = edges[e];
        for (int i = 0; i < k; ++i) f.add_edge(uu * k + i, vv * k + voltages[e][i]);
    }
    return {std::move(f), std::move(psi)};
}

}  // namespace homind
