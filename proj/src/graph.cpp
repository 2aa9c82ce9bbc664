#include "cayring/graph.hpp"

#include <algorithm>
#include <sstream>

namespace cayring {

AdjacencyMatrix::AdjacencyMatrix(int n, bool allows_loops)
    : n_(n), allows_loops_(allows_loops), bits_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1) throw Error("adjacency matrix needs at least one vertex");
    if (n > max_ring_order())
        throw Error("graph size " + std::to_string(n) + " exceeds cap " +
                    std::to_string(max_ring_order()));
}

void AdjacencyMatrix::set_edge(int u, int v) {
    if (u == v && !allows_loops_) throw Error("loop on a loopless graph");
    bits_[static_cast<std::size_t>(u) * n_ + v] = 1;
    bits_[static_cast<std::size_t>(v) * n_ + u] = 1;
}

int AdjacencyMatrix::loop_count() const {
    int c = 0;
    for (int i = 0; i < n_; ++i) c += at(i, i);
    return c;
}

AdjacencyMatrix cayley_graph(const RingTable& ring, const ElementSubset& connection) {
    if (connection.universe() != ring.order()) throw Error("connection set universe mismatch");
    for (Elem s : connection)
        if (!connection.contains(ring.neg(s)))
            throw Error("connection set is not symmetric");

    const bool loops = connection.contains(ring.zero());
    AdjacencyMatrix a(ring.order(), loops);
    for (int u = 0; u < ring.order(); ++u)
        for (Elem s : connection) {
            // u ~ u - s, i.e. difference s.
            const int v = ring.sub(u, s);
            a.set_edge(u, v);
        }
    return a;
}

std::optional<long long> regular_degree(const AdjacencyMatrix& a) {
    long long degree = -1;
    for (int u = 0; u < a.size(); ++u) {
        long long sum = 0;
        const std::uint8_t* r = a.row(u);
        for (int v = 0; v < a.size(); ++v) sum += r[v];
        if (degree < 0) degree = sum;
        else if (degree != sum) return std::nullopt;
    }
    return degree;
}

AdjacencyMatrix tensor_product(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
    const long long n = static_cast<long long>(a.size()) * b.size();
    if (n > max_ring_order())
        throw Error("tensor product size " + std::to_string(n) + " exceeds cap " +
                    std::to_string(max_ring_order()));
    AdjacencyMatrix t(static_cast<int>(n), a.allows_loops() || b.allows_loops());
    for (int u1 = 0; u1 < a.size(); ++u1)
        for (int v1 = 0; v1 < a.size(); ++v1) {
            if (!a.at(u1, v1)) continue;
            for (int u2 = 0; u2 < b.size(); ++u2)
                for (int v2 = 0; v2 < b.size(); ++v2)
                    if (b.at(u2, v2)) t.set_edge(u1 * b.size() + u2, v1 * b.size() + v2);
        }
    return t;
}

std::vector<std::vector<int>> components(const AdjacencyMatrix& a) {
    std::vector<int> comp(static_cast<std::size_t>(a.size()), -1);
    std::vector<std::vector<int>> out;
    std::vector<int> queue;
    for (int start = 0; start < a.size(); ++start) {
        if (comp[static_cast<std::size_t>(start)] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[static_cast<std::size_t>(start)] = id;
        queue.assign(1, start);
        while (!queue.empty()) {
            const int u = queue.back();
            queue.pop_back();
            out[static_cast<std::size_t>(id)].push_back(u);
            const std::uint8_t* r = a.row(u);
            for (int v = 0; v < a.size(); ++v) {
                if (v == u || !r[v]) continue;
                if (comp[static_cast<std::size_t>(v)] < 0) {
                    comp[static_cast<std::size_t>(v)] = id;
                    queue.push_back(v);
                }
            }
        }
        std::sort(out[static_cast<std::size_t>(id)].begin(), out[static_cast<std::size_t>(id)].end());
    }
    return out;
}

AdjacencyMatrix complement(const AdjacencyMatrix& a) {
    if (a.loop_count() > 0) throw Error("complement requires a loopless graph");
    AdjacencyMatrix c(a.size(), false);
    for (int u = 0; u < a.size(); ++u)
        for (int v = u + 1; v < a.size(); ++v)
            if (!a.at(u, v)) c.set_edge(u, v);
    return c;
}

std::string MultipartiteReport::to_string() const {
    std::ostringstream out;
    out << "component_count=" << (component_count_ok ? "ok" : "FAIL")
        << " cosets=" << (components_are_cosets ? "ok" : "FAIL")
        << " multipartite=" << (multipartite_ok ? "ok" : "FAIL")
        << " translation_iso=" << (translation_iso_ok ? "ok" : "FAIL");
    return out.str();
}

MultipartiteReport multipartite_check(const RingTable& ring, const GeneratorContext& ctx) {
    if (!is_local(ring)) throw Error("multipartite check requires a local ring");
    const AdjacencyMatrix a = cayley_graph(ring, ctx.xRstar);
    const auto comps = components(a);

    MultipartiteReport rep;
    rep.component_count_ok =
        static_cast<long long>(comps.size()) * ctx.Ix.size() == ring.order();

    rep.components_are_cosets = true;
    rep.multipartite_ok = true;
    rep.translation_iso_ok = true;
    for (const auto& comp : comps) {
        const Elem z = comp.front();
        // The component must be exactly the coset z + I_x.
        std::vector<int> coset;
        for (Elem i : ctx.Ix) coset.push_back(ring.add(z, i));
        std::sort(coset.begin(), coset.end());
        if (coset != comp) rep.components_are_cosets = false;

        // Complete multipartite on cosets of M_x: distinct vertices adjacent
        // iff their difference avoids M_x.
        for (std::size_t i = 0; i < comp.size() && rep.multipartite_ok; ++i)
            for (std::size_t j = i + 1; j < comp.size(); ++j) {
                const bool adjacent = a.at(comp[i], comp[j]);
                const bool separated = !ctx.Mx.contains(ring.sub(comp[i], comp[j]));
                if (adjacent != separated) { rep.multipartite_ok = false; break; }
            }

        // Translation a -> z + a carries Cay(I_x, xR*) onto the component.
        for (Elem p : ctx.Ix) {
            for (Elem q : ctx.Ix) {
                const bool sub_edge = p != q && ctx.xRstar.contains(ring.sub(p, q));
                const bool comp_edge = ring.add(z, p) != ring.add(z, q) &&
                                       a.at(ring.add(z, p), ring.add(z, q));
                if (sub_edge != comp_edge) { rep.translation_iso_ok = false; break; }
            }
            if (!rep.translation_iso_ok) break;
        }
    }
    return rep;
}

} // namespace cayring
