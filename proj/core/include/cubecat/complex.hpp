#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubecat/cell.hpp"

namespace cubecat {

class DistanceMatrix;

using Coord = std::array<int, 3>;

struct BuildOptions {
    bool check_regularity = true;
    /// Thickenings of complexes with free faces carry pairs of 3-cells on the
    /// same corner set; only thicken() sets this.
    bool allow_duplicate_cubes = false;
};

/// Finite regular cube complex of dimension <= 3. Immutable after build().
class CubeComplex {
public:
    /// Renumbers vertex ids densely, synthesizes missing faces (closure) and
    /// verifies the chart/regularity/coords invariants.
    static CubeComplex build(const std::vector<Cell>& cells,
                             const std::map<VertexId, std::string>& labels = {},
                             const std::map<VertexId, Coord>& coords = {},
                             const BuildOptions& opts = {});

    size_t vertex_count() const { return labels_.size(); }
    int top_dim() const { return top_dim_; }
    bool has_coords() const { return has_coords_; }
    bool has_duplicate_cubes() const { return permissive_; }

    const std::vector<Cell>& cells(int dim) const { return cells_[dim]; }
    size_t cell_count() const;

    const std::string& label(VertexId v) const { return labels_[v]; }
    const Coord& coord(VertexId v) const { return coords_[v]; }
    /// Vertex carrying `label`, if any.
    std::optional<VertexId> find_label(const std::string& label) const;

    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(VertexId u, VertexId v) const;

    /// Cells of dimension `dim` containing vertex v (indices into cells(dim)).
    const std::vector<int>& cells_at(VertexId v, int dim) const { return at_[dim][v]; }
    /// Index of the cell with this corner set, or -1. Duplicate cubes return the first.
    int find_cell(int dim, const std::vector<VertexId>& sorted_corners) const;

    bool connected() const;
    /// BFS distances in the 1-skeleton; -1 for unreachable vertices.
    std::vector<int> bfs_distances(VertexId source) const;

    /// Cells of the combinatorial boundary: cells of dim < k lying in at most one
    /// k-cell, plus all their faces. `ambient_dim` defaults to the top dimension;
    /// a 0-dimensional complex is its own boundary. Returned as per-dim index lists.
    std::array<std::vector<int>, 4> combinatorial_boundary(int ambient_dim = -1) const;
    std::vector<VertexId> boundary_vertices(int ambient_dim = -1) const;

    DistanceMatrix boundary_distance_matrix(int ambient_dim = -1) const;
    /// Distances restricted to an explicit list of labeled vertices.
    DistanceMatrix distance_matrix_for(const std::vector<std::string>& labels) const;

    /// Number of d'-cells containing the given cell (d' > dim of cell).
    int coface_count(int dim, int index, int coface_dim) const;

    // --- surgery helpers (return fresh complexes; used by reductions and oracles)

    /// Complex minus the closed star of v (v and every cell containing it).
    CubeComplex remove_vertex_star(VertexId v) const;
    /// Connected components as complexes (cells grouped by component of X^1).
    std::vector<CubeComplex> components() const;
    /// Components of X minus v, each with v and its incident cells restricted back in.
    std::vector<CubeComplex> split_at_cut_vertex(VertexId v) const;
    /// Complex plus extra cells (labels/coords preserved; new vertices appended).
    CubeComplex with_extra_cells(const std::vector<Cell>& extra,
                                 const std::map<VertexId, std::string>& extra_labels) const;

    /// Raw cells with original vertex ids, for rebuilding.
    std::vector<Cell> all_cells() const;
    std::map<VertexId, std::string> label_map() const;
    std::map<VertexId, Coord> coord_map() const;

private:
    std::array<std::vector<Cell>, 4> cells_;
    std::vector<std::string> labels_;      // "" = unlabeled
    std::vector<Coord> coords_;
    bool has_coords_ = false;
    bool permissive_ = false;
    int top_dim_ = 0;
    std::vector<std::vector<VertexId>> adj_;
    std::array<std::vector<std::vector<int>>, 4> at_; // at_[d][v] = cells of dim d containing v
    std::map<std::vector<VertexId>, int> keys_[4];    // corner set -> first cell index
    std::map<std::string, VertexId> by_label_;
};

struct IsoMapping {
    std::vector<VertexId> image; // image[v in X] = vertex in Y
};

/// Combinatorial-type isomorphism fixing all shared boundary labels, if one exists.
std::optional<IsoMapping> isomorphic_labeled(const CubeComplex& x, const CubeComplex& y);

struct LinkComplex {
    VertexId base;
    std::vector<int> vertices;               // edge-cell indices at base
    std::vector<std::array<int, 2>> edges;   // pairs into `vertices`
    std::vector<std::array<int, 3>> triangles;
    int degree() const { return static_cast<int>(vertices.size()); }
};

/// Link of v: vertices are edges at v, simplices are square/cube corners at v.
LinkComplex link(const CubeComplex& x, VertexId v);

} // namespace cubecat
