#include "homind/homcount.hpp"

#include <algorithm>
#include <bit>

namespace homind {

namespace {

// BFS order of one component with, per position, the list of earlier
// positions adjacent in F.
struct ComponentPlan {
    std::vector<int> order;
    std::vector<std::vector<int>> earlier;  // indices into order
    std::vector<bool> loop;
};

ComponentPlan plan_component(const Graph& F, const std::vector<int>& comp) {
    ComponentPlan p;
    std::vector<int> pos(F.vertex_count(), -1);
    std::vector<int> queue{comp[0]};
    pos[comp[0]] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int u = 0; u < F.vertex_count(); ++u)
            if (u != v && F.adjacent(v, u) && pos[u] < 0) {
                pos[u] = static_cast<int>(queue.size());
                queue.push_back(u);
            }
    }
    p.order = queue;
    p.earlier.resize(queue.size());
    p.loop.resize(queue.size());
    for (std::size_t i = 0; i < queue.size(); ++i) {
        p.loop[i] = F.has_loop(queue[i]);
        for (std::size_t j = 0; j < i; ++j)
            if (F.adjacent(queue[i], queue[j])) p.earlier[i].push_back(static_cast<int>(j));
    }
    return p;
}

// Counts maps of one component into G; neighbor rows of G fit a single word.
mpz_class count_component(const ComponentPlan& p, const Graph& G) {
    int n = static_cast<int>(p.order.size());
    std::uint64_t all = G.vertex_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << G.vertex_count()) - 1;
    std::uint64_t loopy = 0;
    for (int v = 0; v < G.vertex_count(); ++v)
        if (G.has_loop(v)) loopy |= std::uint64_t{1} << v;
    std::vector<int> image(n, 0);
    mpz_class total = 0;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            ++total;
            return;
        }
        std::uint64_t cand = p.loop[i] ? loopy : all;
        for (int j : p.earlier[i]) cand &= G.neighbors(image[j])[0];
        while (cand) {
            int x = std::countr_zero(cand);
            cand &= cand - 1;
            image[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return total;
}

}  // namespace

HomCount hom_count(const Graph& F, const Graph& G, int f_guard, int g_guard) {
    if (F.vertex_count() > f_guard)
        throw GuardExceeded("hom_count source guarded at " + std::to_string(f_guard) + " vertices");
    if (G.vertex_count() > g_guard || G.vertex_count() > 64)
        throw GuardExceeded("hom_count target guarded at " + std::to_string(std::min(g_guard, 64)) + " vertices");
    if (F.vertex_count() == 0) return 1;
    if (G.vertex_count() == 0) return 0;
    mpz_class total = 1;
    for (const auto& comp : connected_components(F)) total *= count_component(plan_component(F, comp), G);
    return total;
}

std::vector<VertexMap> hom_enumerate(const Graph& F, const Graph& G, long limit) {
    if (G.vertex_count() > 64) throw GuardExceeded("hom_enumerate target guarded at 64 vertices");
    int n = F.vertex_count();
    std::vector<VertexMap> out;
    if (G.vertex_count() == 0) {
        if (n == 0) out.push_back(VertexMap{});
        return out;
    }
    VertexMap cur{std::vector<int>(n, 0)};
    // Global BFS-ish order across components.
    std::vector<ComponentPlan> plans;
    std::vector<int> flat_order;
    for (const auto& comp : connected_components(F)) {
        auto p = plan_component(F, comp);
        flat_order.insert(flat_order.end(), p.order.begin(), p.order.end());
        plans.push_back(std::move(p));
    }
    std::uint64_t all = G.vertex_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << G.vertex_count()) - 1;
    std::uint64_t loopy = 0;
    for (int v = 0; v < G.vertex_count(); ++v)
        if (G.has_loop(v)) loopy |= std::uint64_t{1} << v;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == flat_order.size()) {
            if (static_cast<long>(out.size()) >= limit)
                throw GuardExceeded("hom_enumerate limit " + std::to_string(limit) + " exceeded; found " +
                                    std::to_string(out.size()) + " so far");
            out.push_back(cur);
            return;
        }
        int a = flat_order[i];
        std::uint64_t cand = F.has_loop(a) ? loopy : all;
        for (int b = 0; b < n; ++b) {
            bool earlier = false;
            for (std::size_t j = 0; j < i; ++j) earlier |= flat_order[j] == b;
            if (earlier && F.adjacent(a, b)) cand &= G.neighbors(cur.to[b])[0];
        }
        while (cand) {
            int x = std::countr_zero(cand);
            cand &= cand - 1;
            cur.to[a] = x;
            rec(i + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const VertexMap& a, const VertexMap& b) { return a.to < b.to; });
    return out;
}

Gf2System FiberedSystem::stacked() const {
    Gf2Matrix M(A.rows() + B.rows(), A.cols());
    for (int r = 0; r < A.rows(); ++r)
        for (int c = 0; c < A.cols(); ++c)
            if (A.get(r, c)) M.set(r, c, true);
    for (int r = 0; r < B.rows(); ++r)
        for (int c = 0; c < B.cols(); ++c)
            if (B.get(r, c)) M.set(A.rows() + r, c, true);
    Gf2Vector b(M.rows());
    for (int r = 0; r < chi.size; ++r)
        if (chi.get(r)) b.set(r, true);
    return {std::move(M), std::move(b)};
}

int FiberedSystem::var_index(int a, int e) const {
    auto it = std::lower_bound(variables.begin(), variables.end(), std::make_pair(a, e));
    if (it == variables.end() || *it != std::make_pair(a, e)) return -1;
    return static_cast<int>(it - variables.begin());
}

FiberedSystem build_fibered_system(const Graph& F, const Graph& G, const std::vector<int>& U, const VertexMap& psi) {
    if (G.has_loops()) throw InvalidInput("fibered systems are defined over loopless base graphs");
    if (!is_homomorphism(F, psi, G)) throw InvalidInput("psi is not a homomorphism");
    std::vector<bool> in_u(G.vertex_count(), false);
    for (int v : U) {
        if (v < 0 || v >= G.vertex_count()) throw InvalidInput("U contains a vertex outside the base graph");
        in_u[v] = true;
    }
    FiberedSystem sys;
    sys.psi = psi;
    for (int a = 0; a < F.vertex_count(); ++a)
        for (int e : G.incident_edges(psi(a))) sys.variables.emplace_back(a, e);
    int cols = static_cast<int>(sys.variables.size());
    sys.A = Gf2Matrix(F.vertex_count(), cols);
    sys.chi = Gf2Vector(F.vertex_count());
    for (int a = 0; a < F.vertex_count(); ++a) {
        for (int e : G.incident_edges(psi(a))) sys.A.set(a, sys.var_index(a, e), true);
        if (in_u[psi(a)]) sys.chi.set(a, true);
    }
    const auto& fedges = F.edges();
    sys.B = Gf2Matrix(static_cast<int>(fedges.size()), cols);
    for (int r = 0; r < static_cast<int>(fedges.size()); ++r) {
        auto [a, b] = fedges[r];
        int e = G.edge_index(psi(a), psi(b));
        sys.B.flip(r, sys.var_index(a, e));
        sys.B.flip(r, sys.var_index(b, e));
    }
    return sys;
}

HomCount hom_count_fibered(const Graph& F, const Graph& G, const std::vector<int>& U, const VertexMap& psi) {
    auto sys = build_fibered_system(F, G, U, psi);
    auto lg = solution_count_log2(sys.stacked());
    if (!lg) return 0;
    mpz_class out = 1;
    out <<= *lg;
    return out;
}

std::vector<HomCount> hom_vector_cycles(const Graph& G, int L, int guard) {
    if (L > guard) throw GuardExceeded("cycle length guarded at " + std::to_string(guard));
    int n = G.vertex_count();
    if (n > 64) throw GuardExceeded("hom_vector_cycles target guarded at 64 vertices");
    std::vector<HomCount> out;
    if (L < 3) return out;
    std::vector<mpz_class> A(static_cast<std::size_t>(n) * n, 0), P = A;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[i * n + j] = G.neighbor_bit(i, j) ? 1 : 0;
    P = A;  // A^1
    auto matmul = [&](const std::vector<mpz_class>& x, const std::vector<mpz_class>& y) {
        std::vector<mpz_class> z(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (x[i * n + k] == 0) continue;
                for (int j = 0; j < n; ++j) z[i * n + j] += x[i * n + k] * y[k * n + j];
            }
        return z;
    };
    for (int k = 2; k <= L; ++k) {
        P = matmul(P, A);
        if (k >= 3) {
            mpz_class tr = 0;
            for (int i = 0; i < n; ++i) tr += P[i * n + i];
            out.push_back(tr);
        }
    }
    return out;
}

}  // namespace homind
