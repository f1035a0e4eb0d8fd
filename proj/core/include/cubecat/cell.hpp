#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace cubecat {

using VertexId = std::uint32_t;

/// A cell of dimension d <= 3 described by its chart: corner `c[j]` sits at
/// the binary position whose bit i (of index j) is the coordinate along axis i.
/// Two charts related by a signed coordinate permutation describe the same cell;
/// `canonicalize` picks the lexicographically smallest equivalent corner sequence.
struct Cell {
    int dim = 0;
    std::array<VertexId, 8> c{};

    int corner_count() const { return 1 << dim; }
    std::span<const VertexId> corners() const { return {c.data(), static_cast<size_t>(1 << dim)}; }
    std::span<VertexId> corners() { return {c.data(), static_cast<size_t>(1 << dim)}; }

    bool operator==(const Cell& o) const {
        if (dim != o.dim) return false;
        for (int j = 0; j < corner_count(); ++j)
            if (c[j] != o.c[j]) return false;
        return true;
    }
};

/// Sorted corner list; the identity of a cell inside a regular complex.
std::vector<VertexId> corner_set(const Cell& cell);

/// Rewrite the chart to the canonical representative of its hyperoctahedral orbit.
void canonicalize(Cell& cell);

/// Face sub-chart obtained by fixing coordinate `axis` to `bit` (dim - 1 cell, chart order).
Cell face_subchart(const Cell& cell, int axis, int bit);

/// All (axis, bit) faces of the cell, canonicalized.
std::vector<Cell> proper_faces(const Cell& cell);

/// Orientation sign (+1/-1) of the signed coordinate permutation carrying chart
/// `from` onto chart `to`; both must lie in the same orbit.
int chart_sign(const Cell& from, const Cell& to);

/// True if some signed coordinate permutation carries `a` onto `b`.
bool same_chart_orbit(const Cell& a, const Cell& b);

Cell make_vertex(VertexId v);
Cell make_edge(VertexId u, VertexId v);
/// Square from corners in chart positions (00,10,01,11).
Cell make_square(VertexId v00, VertexId v10, VertexId v01, VertexId v11);
/// Square from a cyclic walk around the boundary (file order 00,01,11,10).
Cell make_square_cyclic(VertexId a, VertexId b, VertexId c, VertexId d);
Cell make_cube(const std::array<VertexId, 8>& chart);

} // namespace cubecat
