#pragma once
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "dualrep/error.hpp"

namespace dualrep {

/* Finite connected acyclic quiver.  Vertices and arrows keep their file
 * order; that order is the canonical one everywhere downstream. */
struct Quiver {
    struct Arrow {
        std::string id;
        std::size_t src, tgt;  // vertex indices
    };

    std::string name;
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    std::size_t num_vertices() const { return vertices.size(); }
    std::size_t num_arrows() const { return arrows.size(); }
    std::size_t vertex_index(const std::string& id) const;  // throws UnknownVertex
    std::size_t arrow_index(const std::string& id) const;   // throws UnknownArrow

    /* Checks unique ids, acyclicity, connectedness of the underlying graph.
     * Throws DuplicateId / CyclicQuiver / Disconnected naming the culprit. */
    void validate() const;

    bool is_source(std::size_t v) const;  // no incoming arrows
    bool is_sink(std::size_t v) const;    // no outgoing arrows

    /* Vertices in a topological order of the arrows (sources first). */
    std::vector<std::size_t> topological_order() const;

    bool same_shape(const Quiver& o) const;  // structural equality ignoring name
};

std::shared_ptr<const Quiver> opposite_of(const Quiver& q);  // reverses every arrow

/* Dimension vector aligned with quiver vertex order. */
using DimVector = std::vector<std::int64_t>;

/* Euler form <d, e> = sum_i d_i e_i - sum_{a: i->j} d_i e_j. */
std::int64_t euler_form(const Quiver& q, const DimVector& d, const DimVector& e);
/* Tits form q(d) = <d, d>. */
std::int64_t tits_form(const Quiver& q, const DimVector& d);

enum class RootType { real_root, imaginary_root, not_a_root };

/* Classifies a nonzero nonnegative vector by reflection descent: walk with
 * simple reflections until a unit vector (real), the fundamental region with
 * connected support (imaginary), or an exit from the positive cone (not a
 * root) is reached.  Throws ZeroVector on d = 0. */
RootType root_type(const Quiver& q, const DimVector& d);

/* True iff the underlying undirected graph is a simply-laced Dynkin diagram
 * (A/D/E), i.e. the quiver has finite representation type. */
bool is_dynkin(const Quiver& q);

Quiver parse_quiver(std::istream& in);               // throws ParseError with line number
Quiver parse_quiver_file(const std::string& path);   // adds IoError on missing file
std::string print_quiver(const Quiver& q);           // canonical text, bit-exact round trip

}  // namespace dualrep
