#include "cubecat/cell.hpp"

#include <algorithm>

#include "cubecat/errors.hpp"

namespace cubecat {

std::vector<VertexId> corner_set(const Cell& cell) {
    std::vector<VertexId> s(cell.corners().begin(), cell.corners().end());
    std::sort(s.begin(), s.end());
    return s;
}

namespace {

// Apply the signed permutation (perm, flip) to a chart: bit i of the source
// index moves to axis perm[i], xored with flip bit i.
Cell transform_chart(const Cell& cell, const std::array<int, 3>& perm, int flip) {
    Cell out;
    out.dim = cell.dim;
    const int n = cell.corner_count();
    for (int j = 0; j < n; ++j) {
        int jt = 0;
        for (int i = 0; i < cell.dim; ++i) {
            int b = (j >> i) & 1;
            b ^= (flip >> i) & 1;
            jt |= b << perm[i];
        }
        out.c[jt] = cell.c[j];
    }
    return out;
}

bool chart_less(const Cell& a, const Cell& b) {
    const int n = a.corner_count();
    for (int j = 0; j < n; ++j) {
        if (a.c[j] != b.c[j]) return a.c[j] < b.c[j];
    }
    return false;
}

template <typename F>
void for_each_signed_perm(int dim, F&& f) {
    std::array<int, 3> axes{0, 1, 2};
    std::array<int, 3> perm{0, 1, 2};
    // permutations of the first `dim` axes, all 2^dim flips
    std::vector<int> idx(dim);
    for (int i = 0; i < dim; ++i) idx[i] = i;
    do {
        for (int i = 0; i < dim; ++i) perm[i] = idx.empty() ? i : idx[i];
        int parity = 0;
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j)
                if (perm[i] > perm[j]) parity ^= 1;
        for (int flip = 0; flip < (1 << dim); ++flip) {
            int sign = parity ^ (__builtin_popcount(flip) & 1);
            f(perm, flip, sign ? -1 : 1);
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    (void)axes;
}

} // namespace

void canonicalize(Cell& cell) {
    if (cell.dim == 0) return;
    Cell best = cell;
    for_each_signed_perm(cell.dim, [&](const std::array<int, 3>& perm, int flip, int) {
        Cell cand = transform_chart(cell, perm, flip);
        if (chart_less(cand, best)) best = cand;
    });
    cell = best;
}

Cell face_subchart(const Cell& cell, int axis, int bit) {
    Cell out;
    out.dim = cell.dim - 1;
    for (int j = 0; j < cell.corner_count(); ++j) {
        if (((j >> axis) & 1) != bit) continue;
        // index in the face chart: remaining axes compressed, order preserved
        int jj = 0, t = 0;
        for (int i = 0; i < cell.dim; ++i) {
            if (i == axis) continue;
            jj |= ((j >> i) & 1) << t;
            ++t;
        }
        out.c[jj] = cell.c[j];
    }
    return out;
}

std::vector<Cell> proper_faces(const Cell& cell) {
    std::vector<Cell> out;
    for (int axis = 0; axis < cell.dim; ++axis) {
        for (int bit = 0; bit < 2; ++bit) {
            Cell f = face_subchart(cell, axis, bit);
            canonicalize(f);
            out.push_back(f);
        }
    }
    return out;
}

int chart_sign(const Cell& from, const Cell& to) {
    int result = 0;
    bool found = false;
    for_each_signed_perm(from.dim, [&](const std::array<int, 3>& perm, int flip, int sign) {
        if (found) return;
        Cell cand = transform_chart(from, perm, flip);
        if (cand == to) {
            result = sign;
            found = true;
        }
    });
    if (!found) raise(ErrorKind::ChartMismatch, "charts are not in the same orbit");
    return result;
}

bool same_chart_orbit(const Cell& a, const Cell& b) {
    if (a.dim != b.dim) return false;
    bool found = false;
    for_each_signed_perm(a.dim, [&](const std::array<int, 3>& perm, int flip, int) {
        if (found) return;
        if (transform_chart(a, perm, flip) == b) found = true;
    });
    return found;
}

Cell make_vertex(VertexId v) {
    Cell c;
    c.dim = 0;
    c.c[0] = v;
    return c;
}

Cell make_edge(VertexId u, VertexId v) {
    Cell c;
    c.dim = 1;
    c.c[0] = u;
    c.c[1] = v;
    canonicalize(c);
    return c;
}

Cell make_square(VertexId v00, VertexId v10, VertexId v01, VertexId v11) {
    Cell c;
    c.dim = 2;
    c.c = {v00, v10, v01, v11, 0, 0, 0, 0};
    canonicalize(c);
    return c;
}

Cell make_square_cyclic(VertexId a, VertexId b, VertexId c_, VertexId d) {
    return make_square(a, d, b, c_);
}

Cell make_cube(const std::array<VertexId, 8>& chart) {
    Cell c;
    c.dim = 3;
    c.c = chart;
    canonicalize(c);
    return c;
}

} // namespace cubecat
