#include "dualrep/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace dualrep {

std::size_t Quiver::vertex_index(const std::string& id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == id) return i;
    throw Error("UnknownVertex", "no vertex '" + id + "' in quiver " + name);
}

std::size_t Quiver::arrow_index(const std::string& id) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].id == id) return i;
    throw Error("UnknownArrow", "no arrow '" + id + "' in quiver " + name);
}

void Quiver::validate() const {
    std::set<std::string> seen;
    for (const auto& v : vertices)
        if (!seen.insert(v).second) throw Error("DuplicateId", "vertex '" + v + "'");
    seen.clear();
    for (const auto& a : arrows)
        if (!seen.insert(a.id).second) throw Error("DuplicateId", "arrow '" + a.id + "'");
    topological_order();  // throws CyclicQuiver
    if (vertices.empty()) throw Error("Disconnected", "quiver has no vertices");
    // connectedness of the underlying undirected graph
    std::vector<bool> reach(vertices.size(), false);
    std::vector<std::size_t> stack{0};
    reach[0] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& a : arrows) {
            if (a.src == v && !reach[a.tgt]) { reach[a.tgt] = true; stack.push_back(a.tgt); }
            if (a.tgt == v && !reach[a.src]) { reach[a.src] = true; stack.push_back(a.src); }
        }
    }
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (!reach[v]) throw Error("Disconnected", "vertex '" + vertices[v] + "' unreachable");
}

bool Quiver::is_source(std::size_t v) const {
    return std::none_of(arrows.begin(), arrows.end(), [&](const Arrow& a) { return a.tgt == v; });
}

bool Quiver::is_sink(std::size_t v) const {
    return std::none_of(arrows.begin(), arrows.end(), [&](const Arrow& a) { return a.src == v; });
}

std::vector<std::size_t> Quiver::topological_order() const {
    std::vector<std::size_t> indeg(vertices.size(), 0), order;
    for (const auto& a : arrows) ++indeg[a.tgt];
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        std::size_t v = ready.front();
        ready.erase(ready.begin());
        order.push_back(v);
        for (const auto& a : arrows)
            if (a.src == v && --indeg[a.tgt] == 0) ready.push_back(a.tgt);
    }
    if (order.size() != vertices.size()) {
        for (std::size_t v = 0; v < vertices.size(); ++v)
            if (indeg[v] > 0)
                throw Error("CyclicQuiver", "cycle through vertex '" + vertices[v] + "'");
    }
    return order;
}

bool Quiver::same_shape(const Quiver& o) const {
    if (vertices != o.vertices || arrows.size() != o.arrows.size()) return false;
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].id != o.arrows[i].id || arrows[i].src != o.arrows[i].src ||
            arrows[i].tgt != o.arrows[i].tgt)
            return false;
    return true;
}

std::shared_ptr<const Quiver> opposite_of(const Quiver& q) {
    auto op = std::make_shared<Quiver>();
    op->name = q.name + "_op";
    op->vertices = q.vertices;
    for (const auto& a : q.arrows) op->arrows.push_back({a.id, a.tgt, a.src});
    return op;
}

std::int64_t euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    if (d.size() != q.num_vertices() || e.size() != q.num_vertices())
        throw Error("BadShape", "dimension vector length mismatch");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < d.size(); ++i) s += d[i] * e[i];
    for (const auto& a : q.arrows) s -= d[a.src] * e[a.tgt];
    return s;
}

std::int64_t tits_form(const Quiver& q, const DimVector& d) { return euler_form(q, d, d); }

namespace {

bool support_connected(const Quiver& q, const DimVector& d) {
    std::vector<std::size_t> supp;
    for (std::size_t v = 0; v < d.size(); ++v)
        if (d[v] != 0) supp.push_back(v);
    if (supp.empty()) return false;
    std::vector<bool> reach(d.size(), false);
    std::vector<std::size_t> stack{supp[0]};
    reach[supp[0]] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& a : q.arrows) {
            if (a.src == v && d[a.tgt] != 0 && !reach[a.tgt]) { reach[a.tgt] = true; stack.push_back(a.tgt); }
            if (a.tgt == v && d[a.src] != 0 && !reach[a.src]) { reach[a.src] = true; stack.push_back(a.src); }
        }
    }
    return std::all_of(supp.begin(), supp.end(), [&](std::size_t v) { return reach[v]; });
}

}  // namespace

RootType root_type(const Quiver& q, const DimVector& d0) {
    if (d0.size() != q.num_vertices()) throw Error("BadShape", "dimension vector length mismatch");
    if (std::all_of(d0.begin(), d0.end(), [](std::int64_t x) { return x == 0; }))
        throw Error("ZeroVector", "root test on the zero vector");
    for (std::int64_t x : d0)
        if (x < 0) throw Error("ZeroVector", "root test expects a nonnegative vector");
    const std::size_t n = q.num_vertices();
    // symmetrized Cartan pairing (d, alpha_i) = 2 d_i - sum over edges at i
    auto pairing = [&](const DimVector& d, std::size_t i) {
        std::int64_t s = 2 * d[i];
        for (const auto& a : q.arrows) {
            if (a.src == i && a.tgt != i) s -= d[a.tgt];
            if (a.tgt == i && a.src != i) s -= d[a.src];
        }
        return s;
    };
    DimVector d = d0;
    for (;;) {
        bool pos = false, neg = false;
        std::size_t nonzero = 0, last = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (d[v] > 0) pos = true;
            if (d[v] < 0) neg = true;
            if (d[v] != 0) { ++nonzero; last = v; }
        }
        if (neg) return RootType::not_a_root;  // left the positive cone
        if (nonzero == 1 && d[last] == 1) return RootType::real_root;
        (void)pos;
        // descend: reflect at a vertex with positive pairing; none => fundamental region
        std::size_t refl = n;
        for (std::size_t v = 0; v < n; ++v)
            if (d[v] > 0 && pairing(d, v) > 0) { refl = v; break; }
        if (refl == n)
            return support_connected(q, d) ? RootType::imaginary_root : RootType::not_a_root;
        d[refl] -= pairing(d, refl);
    }
}

bool is_dynkin(const Quiver& q) {
    const std::size_t n = q.num_vertices();
    if (q.arrows.size() != n - 1) return false;  // multigraph or not a tree
    std::set<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> deg(n, 0);
    for (const auto& a : q.arrows) {
        auto e = std::minmax(a.src, a.tgt);
        if (a.src == a.tgt || !edges.insert({e.first, e.second}).second) return false;
        ++deg[a.src];
        ++deg[a.tgt];
    }
    std::size_t branch = n, big = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (deg[v] >= 4) return false;
        if (deg[v] == 3) { ++big; branch = v; }
    }
    if (big == 0) return true;  // type A (connectedness checked elsewhere)
    if (big > 1) return false;
    // branch lengths from the unique degree-3 vertex
    std::vector<std::size_t> lens;
    for (const auto& a : q.arrows) {
        std::size_t next = (a.src == branch) ? a.tgt : (a.tgt == branch ? a.src : n);
        if (next == n) continue;
        std::size_t len = 1, prev = branch, cur = next;
        for (;;) {
            std::size_t nxt = n;
            for (const auto& b : q.arrows) {
                std::size_t c = (b.src == cur) ? b.tgt : (b.tgt == cur ? b.src : n);
                if (c != n && c != prev) { nxt = c; break; }
            }
            if (nxt == n) break;
            prev = cur; cur = nxt; ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    if (lens.size() != 3) return false;
    if (lens[0] != 1) return false;
    if (lens[1] == 1) return true;                      // D_n
    return lens[1] == 2 && lens[2] <= 4;                // E6/E7/E8
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) {
        if (t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

}  // namespace

Quiver parse_quiver(std::istream& in) {
    Quiver q;
    bool have_header = false, have_vertices = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "quiver") {
            if (have_header || toks.size() != 2) throw ParseError(lineno, "bad quiver header");
            q.name = toks[1];
            have_header = true;
        } else if (toks[0] == "vertices") {
            if (!have_header || have_vertices || toks.size() < 2)
                throw ParseError(lineno, "bad vertices line");
            q.vertices.assign(toks.begin() + 1, toks.end());
            have_vertices = true;
        } else if (toks[0] == "arrow") {
            if (!have_vertices || toks.size() != 4)
                throw ParseError(lineno, "bad arrow line (want: arrow <id> <src> <tgt>)");
            try {
                q.arrows.push_back({toks[1], q.vertex_index(toks[2]), q.vertex_index(toks[3])});
            } catch (const Error& e) {
                throw ParseError(lineno, e.what());
            }
        } else {
            throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    if (!have_header) throw ParseError(lineno, "missing quiver header");
    if (!have_vertices) throw ParseError(lineno, "missing vertices line");
    try {
        q.validate();
    } catch (const Error& e) {
        throw ParseError(lineno, e.what());
    }
    return q;
}

Quiver parse_quiver_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("IoError", "cannot open '" + path + "'");
    return parse_quiver(in);
}

std::string print_quiver(const Quiver& q) {
    std::string s = "quiver " + q.name + "\nvertices";
    for (const auto& v : q.vertices) s += " " + v;
    s += "\n";
    for (const auto& a : q.arrows)
        s += "arrow " + a.id + " " + q.vertices[a.src] + " " + q.vertices[a.tgt] + "\n";
    return s;
}

}  // namespace dualrep
