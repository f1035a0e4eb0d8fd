#include "cubecat/complex.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cubecat/distance_matrix.hpp"
#include "cubecat/errors.hpp"

namespace cubecat {

namespace {

std::vector<VertexId> intersect_sorted(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset_sorted(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

CubeComplex CubeComplex::build(const std::vector<Cell>& cells,
                               const std::map<VertexId, std::string>& labels,
                               const std::map<VertexId, Coord>& coords,
                               const BuildOptions& opts) {
    // collect vertex ids appearing anywhere
    std::set<VertexId> ids;
    for (const Cell& c : cells)
        for (VertexId v : c.corners()) ids.insert(v);
    for (auto& [v, _] : labels) ids.insert(v);

    std::map<VertexId, VertexId> renum;
    VertexId next = 0;
    for (VertexId v : ids) renum[v] = next++;

    CubeComplex x;
    x.permissive_ = opts.allow_duplicate_cubes;
    x.labels_.assign(next, "");
    for (auto& [v, s] : labels) x.labels_[renum[v]] = s;
    for (VertexId v = 0; v < next; ++v) {
        if (x.labels_[v].empty()) continue;
        auto [it, fresh] = x.by_label_.emplace(x.labels_[v], v);
        if (!fresh) raise(ErrorKind::ChartMismatch, "duplicate vertex label '" + x.labels_[v] + "'");
    }
    if (!coords.empty()) {
        if (coords.size() != ids.size())
            raise(ErrorKind::BadCoords, "coords must cover every vertex");
        x.has_coords_ = true;
        x.coords_.assign(next, Coord{});
        std::set<Coord> seen;
        for (auto& [v, p] : coords) {
            if (!renum.count(v)) raise(ErrorKind::BadCoords, "coords for unknown vertex");
            if (!seen.insert(p).second) raise(ErrorKind::BadCoords, "two vertices share coordinates");
            x.coords_[renum[v]] = p;
        }
    } else {
        x.coords_.assign(next, Coord{});
    }

    // closure: insert cells top-down, synthesizing faces
    auto add_cell = [&](Cell c, auto&& self) -> void {
        for (int i = 0; i < c.corner_count(); ++i)
            for (int j = i + 1; j < c.corner_count(); ++j)
                if (c.c[i] == c.c[j]) raise(ErrorKind::ChartMismatch, "repeated corner in cell chart");
        canonicalize(c);
        auto key = corner_set(c);
        auto it = x.keys_[c.dim].find(key);
        if (it != x.keys_[c.dim].end()) {
            const Cell& prev = x.cells_[c.dim][it->second];
            if (!same_chart_orbit(prev, c)) {
                if (c.dim < 3 || !opts.allow_duplicate_cubes)
                    raise(ErrorKind::ChartMismatch, "two cells share a corner set with incompatible charts");
            }
            if (!(prev == c) && c.dim == 3 && opts.allow_duplicate_cubes) {
                x.cells_[3].push_back(c);
            }
            if (c.dim < 3 || !opts.allow_duplicate_cubes) return;
            if (prev == c) return;
        } else {
            x.keys_[c.dim].emplace(std::move(key), static_cast<int>(x.cells_[c.dim].size()));
            x.cells_[c.dim].push_back(c);
        }
        if (c.dim > 0)
            for (const Cell& f : proper_faces(c)) self(f, self);
    };
    for (Cell c : cells) {
        for (VertexId& v : c.corners()) v = renum[v];
        add_cell(c, add_cell);
    }
    for (VertexId v = 0; v < next; ++v) add_cell(make_vertex(v), add_cell);

    for (int d = 3; d >= 0; --d)
        if (!x.cells_[d].empty()) {
            x.top_dim_ = d;
            break;
        }

    // incidence
    x.adj_.assign(next, {});
    for (int d = 0; d < 4; ++d) {
        x.at_[d].assign(next, {});
        for (int i = 0; i < static_cast<int>(x.cells_[d].size()); ++i)
            for (VertexId v : x.cells_[d][i].corners()) x.at_[d][v].push_back(i);
    }
    for (const Cell& e : x.cells_[1]) {
        x.adj_[e.c[0]].push_back(e.c[1]);
        x.adj_[e.c[1]].push_back(e.c[0]);
    }
    for (auto& nb : x.adj_) std::sort(nb.begin(), nb.end());

    if (x.has_coords_) {
        for (int d = 1; d < 4; ++d) {
            for (const Cell& c : x.cells_[d]) {
                // corner coords must be the corners of a unit axis-aligned d-cube
                Coord lo = x.coords_[c.c[0]], hi = lo;
                for (VertexId v : c.corners())
                    for (int i = 0; i < 3; ++i) {
                        lo[i] = std::min(lo[i], x.coords_[v][i]);
                        hi[i] = std::max(hi[i], x.coords_[v][i]);
                    }
                int extent = 0;
                for (int i = 0; i < 3; ++i) {
                    if (hi[i] - lo[i] > 1) raise(ErrorKind::BadCoords, "cell spans more than a unit cube");
                    extent += hi[i] - lo[i];
                }
                if (extent != d) raise(ErrorKind::BadCoords, "cell does not span a unit cube of its dimension");
                std::set<Coord> want, got;
                for (VertexId v : c.corners()) got.insert(x.coords_[v]);
                for (int m = 0; m < (1 << d); ++m) {
                    Coord p = lo;
                    int t = 0;
                    for (int i = 0; i < 3; ++i)
                        if (hi[i] > lo[i]) p[i] += (m >> t++) & 1;
                    want.insert(p);
                }
                if (want != got) raise(ErrorKind::BadCoords, "cell corners are not unit-cube corners");
            }
        }
    }

    if (opts.check_regularity) {
        // Pairs of cells sharing a vertex must intersect in a common face (or all
        // of one of them). Pairs sharing nothing are trivially fine.
        std::vector<std::vector<VertexId>> key_of[4];
        for (int d = 0; d < 4; ++d) {
            key_of[d].reserve(x.cells_[d].size());
            for (const Cell& c : x.cells_[d]) key_of[d].push_back(corner_set(c));
        }
        std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> checked;
        for (VertexId v = 0; v < next; ++v) {
            for (int d1 = 1; d1 < 4; ++d1) {
                for (int i : x.at_[d1][v]) {
                    for (int d2 = d1; d2 < 4; ++d2) {
                        for (int j : x.at_[d2][v]) {
                            if (d1 == d2 && j <= i) continue;
                            if (d1 == 3 && d2 == 3 && x.permissive_) continue;
                            if (!checked.insert({{d1, i}, {d2, j}}).second) continue;
                            auto inter = intersect_sorted(key_of[d1][i], key_of[d2][j]);
                            if (inter.empty()) continue;
                            if (inter == key_of[d1][i] && d1 < d2) {
                                // smaller cell inside bigger: must itself be a face cell -- it is one.
                                continue;
                            }
                            int fd = -1;
                            size_t n = inter.size();
                            if (n == 1) fd = 0;
                            else if (n == 2) fd = 1;
                            else if (n == 4) fd = 2;
                            if (fd < 0 || !x.keys_[fd].count(inter))
                                raise(ErrorKind::RegularityViolation,
                                      "cells intersect in a set that is not a common face");
                        }
                    }
                }
            }
        }
    }
    return x;
}

size_t CubeComplex::cell_count() const {
    size_t n = 0;
    for (int d = 0; d < 4; ++d) n += cells_[d].size();
    return n;
}

std::optional<VertexId> CubeComplex::find_label(const std::string& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
}

bool CubeComplex::adjacent(VertexId u, VertexId v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int CubeComplex::find_cell(int dim, const std::vector<VertexId>& sorted_corners) const {
    auto it = keys_[dim].find(sorted_corners);
    return it == keys_[dim].end() ? -1 : it->second;
}

bool CubeComplex::connected() const {
    if (vertex_count() == 0) return true;
    auto d = bfs_distances(0);
    return std::find(d.begin(), d.end(), -1) == d.end();
}

std::vector<int> CubeComplex::bfs_distances(VertexId source) const {
    std::vector<int> dist(vertex_count(), -1);
    std::deque<VertexId> q{source};
    dist[source] = 0;
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop_front();
        for (VertexId w : adj_[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

int CubeComplex::coface_count(int dim, int index, int coface_dim) const {
    const auto key = corner_set(cells_[dim][index]);
    VertexId v = key[0];
    int n = 0;
    for (int j : at_[coface_dim][v])
        if (is_subset_sorted(key, corner_set(cells_[coface_dim][j]))) ++n;
    return n;
}

std::array<std::vector<int>, 4> CubeComplex::combinatorial_boundary(int ambient_dim) const {
    int k = ambient_dim < 0 ? top_dim_ : ambient_dim;
    std::array<std::vector<int>, 4> out;
    if (k == 0) {
        for (int i = 0; i < static_cast<int>(cells_[0].size()); ++i) out[0].push_back(i);
        return out;
    }
    std::array<std::vector<char>, 4> in{};
    for (int d = 0; d < 4; ++d) in[d].assign(cells_[d].size(), 0);
    // seed: cells of dim < k in at most one k-cell
    for (int d = 0; d < k && d < 4; ++d)
        for (int i = 0; i < static_cast<int>(cells_[d].size()); ++i)
            if (coface_count(d, i, k) <= 1) in[d][i] = 1;
    // downward closure
    for (int d = 3; d >= 1; --d) {
        for (int i = 0; i < static_cast<int>(cells_[d].size()); ++i) {
            if (!in[d][i]) continue;
            for (const Cell& f : proper_faces(cells_[d][i])) {
                int j = find_cell(d - 1, corner_set(f));
                in[d - 1][j] = 1;
            }
        }
    }
    for (int d = 0; d < 4; ++d)
        for (int i = 0; i < static_cast<int>(cells_[d].size()); ++i)
            if (in[d][i]) out[d].push_back(i);
    return out;
}

std::vector<VertexId> CubeComplex::boundary_vertices(int ambient_dim) const {
    auto b = combinatorial_boundary(ambient_dim);
    std::vector<VertexId> out;
    out.reserve(b[0].size());
    for (int i : b[0]) out.push_back(cells_[0][i].c[0]);
    std::sort(out.begin(), out.end());
    return out;
}

DistanceMatrix CubeComplex::boundary_distance_matrix(int ambient_dim) const {
    if (!connected()) raise(ErrorKind::Disconnected, "complex is not connected");
    auto bv = boundary_vertices(ambient_dim);
    std::vector<std::string> labels;
    labels.reserve(bv.size());
    for (VertexId v : bv) {
        if (labels_[v].empty())
            raise(ErrorKind::ChartMismatch, "boundary vertex without label");
        labels.push_back(labels_[v]);
    }
    std::sort(labels.begin(), labels.end());
    return distance_matrix_for(labels);
}

DistanceMatrix CubeComplex::distance_matrix_for(const std::vector<std::string>& labels) const {
    DistanceMatrix m(labels);
    for (size_t i = 0; i < labels.size(); ++i) {
        auto v = find_label(labels[i]);
        if (!v) raise(ErrorKind::ChartMismatch, "no vertex labeled '" + labels[i] + "'");
        auto dist = bfs_distances(*v);
        for (size_t j = 0; j < labels.size(); ++j) {
            auto w = find_label(labels[j]);
            if (dist[*w] < 0) raise(ErrorKind::Disconnected, "labels in different components");
            m.at(i, j) = dist[*w];
        }
    }
    return m;
}

std::vector<Cell> CubeComplex::all_cells() const {
    std::vector<Cell> out;
    for (int d = 0; d < 4; ++d)
        for (const Cell& c : cells_[d]) out.push_back(c);
    return out;
}

std::map<VertexId, std::string> CubeComplex::label_map() const {
    std::map<VertexId, std::string> out;
    for (VertexId v = 0; v < labels_.size(); ++v)
        if (!labels_[v].empty()) out[v] = labels_[v];
    return out;
}

std::map<VertexId, Coord> CubeComplex::coord_map() const {
    std::map<VertexId, Coord> out;
    if (!has_coords_) return out;
    for (VertexId v = 0; v < coords_.size(); ++v) out[v] = coords_[v];
    return out;
}

namespace {

CubeComplex rebuild_subset(const CubeComplex& x, const std::vector<Cell>& cells) {
    std::set<VertexId> used;
    for (const Cell& c : cells)
        for (VertexId v : c.corners()) used.insert(v);
    std::map<VertexId, std::string> labels;
    std::map<VertexId, Coord> coords;
    for (VertexId v : used) {
        if (!x.label(v).empty()) labels[v] = x.label(v);
        if (x.has_coords()) coords[v] = x.coord(v);
    }
    BuildOptions opts;
    opts.check_regularity = false; // subsets of a regular complex stay regular
    return CubeComplex::build(cells, labels, x.has_coords() ? coords : std::map<VertexId, Coord>{}, opts);
}

} // namespace

CubeComplex CubeComplex::remove_vertex_star(VertexId v) const {
    std::vector<Cell> keep;
    for (int d = 0; d < 4; ++d)
        for (const Cell& c : cells_[d]) {
            bool has = false;
            for (VertexId w : c.corners())
                if (w == v) has = true;
            if (!has) keep.push_back(c);
        }
    return rebuild_subset(*this, keep);
}

std::vector<CubeComplex> CubeComplex::components() const {
    std::vector<int> comp(vertex_count(), -1);
    int n = 0;
    for (VertexId s = 0; s < vertex_count(); ++s) {
        if (comp[s] >= 0) continue;
        std::deque<VertexId> q{s};
        comp[s] = n;
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop_front();
            for (VertexId w : adj_[u])
                if (comp[w] < 0) {
                    comp[w] = n;
                    q.push_back(w);
                }
        }
        ++n;
    }
    std::vector<std::vector<Cell>> parts(n);
    for (int d = 0; d < 4; ++d)
        for (const Cell& c : cells_[d]) parts[comp[c.c[0]]].push_back(c);
    std::vector<CubeComplex> out;
    out.reserve(n);
    for (auto& cells : parts) out.push_back(rebuild_subset(*this, cells));
    return out;
}

std::vector<CubeComplex> CubeComplex::split_at_cut_vertex(VertexId v) const {
    // component labels of X^1 minus v
    std::vector<int> comp(vertex_count(), -1);
    int n = 0;
    for (VertexId s = 0; s < vertex_count(); ++s) {
        if (s == v || comp[s] >= 0) continue;
        std::deque<VertexId> q{s};
        comp[s] = n;
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop_front();
            for (VertexId w : adj_[u])
                if (w != v && comp[w] < 0) {
                    comp[w] = n;
                    q.push_back(w);
                }
        }
        ++n;
    }
    std::vector<std::vector<Cell>> parts(n);
    for (int d = 0; d < 4; ++d)
        for (const Cell& c : cells_[d]) {
            int target = -1;
            for (VertexId w : c.corners())
                if (w != v) target = comp[w];
            if (target < 0) target = 0; // the vertex cell of v itself: goes everywhere below
            parts[target].push_back(c);
        }
    Cell vc = make_vertex(v);
    std::vector<CubeComplex> out;
    for (auto& cells : parts) {
        cells.push_back(vc);
        out.push_back(rebuild_subset(*this, cells));
    }
    return out;
}

CubeComplex CubeComplex::with_extra_cells(const std::vector<Cell>& extra,
                                          const std::map<VertexId, std::string>& extra_labels) const {
    std::vector<Cell> cells = all_cells();
    cells.insert(cells.end(), extra.begin(), extra.end());
    std::map<VertexId, std::string> labels = label_map();
    for (auto& [v, s] : extra_labels) labels[v] = s;
    BuildOptions opts;
    opts.check_regularity = false;
    return CubeComplex::build(cells, labels, {}, opts);
}

LinkComplex link(const CubeComplex& x, VertexId v) {
    LinkComplex lk;
    lk.base = v;
    lk.vertices = x.cells_at(v, 1);
    std::map<int, int> pos;
    for (int i = 0; i < static_cast<int>(lk.vertices.size()); ++i) pos[lk.vertices[i]] = i;
    auto edge_dirs_at = [&](const Cell& c) {
        // edges of cell c incident to v, as positions in lk.vertices
        std::vector<int> out;
        for (int axis = 0; axis < c.dim; ++axis)
            for (int bit = 0; bit < 2; ++bit) {
                Cell f = face_subchart(c, axis, bit);
                if (c.dim - 1 > 1) continue;
                (void)f;
            }
        return out;
    };
    (void)edge_dirs_at;
    auto dirs_of = [&](const Cell& c) {
        std::vector<int> dirs;
        auto key = corner_set(c);
        for (int ei : lk.vertices) {
            const Cell& e = x.cells(1)[ei];
            VertexId other = e.c[0] == v ? e.c[1] : e.c[0];
            bool in = std::binary_search(key.begin(), key.end(), other) &&
                      std::binary_search(key.begin(), key.end(), v);
            if (in) dirs.push_back(pos[ei]);
        }
        return dirs;
    };
    std::set<std::array<int, 2>> eset;
    for (int si : x.cells_at(v, 2)) {
        auto d = dirs_of(x.cells(2)[si]);
        if (d.size() != 2) raise(ErrorKind::ChartMismatch, "square with unexpected corner structure");
        std::array<int, 2> e{std::min(d[0], d[1]), std::max(d[0], d[1])};
        if (!eset.insert(e).second)
            raise(ErrorKind::RegularityViolation, "link has a double edge");
        lk.edges.push_back(e);
    }
    for (int ci : x.cells_at(v, 3)) {
        auto d = dirs_of(x.cells(3)[ci]);
        if (d.size() != 3) raise(ErrorKind::ChartMismatch, "cube with unexpected corner structure");
        std::sort(d.begin(), d.end());
        lk.triangles.push_back({d[0], d[1], d[2]});
    }
    std::sort(lk.edges.begin(), lk.edges.end());
    std::sort(lk.triangles.begin(), lk.triangles.end());
    return lk;
}

namespace {

struct IsoState {
    const CubeComplex* x;
    const CubeComplex* y;
    std::vector<int> xy; // -1 = unmapped
    std::vector<int> yx;

    bool feasible(VertexId v, VertexId w) const {
        if (x->degree(v) != y->degree(w)) return false;
        for (int d = 1; d < 4; ++d)
            if (x->cells_at(v, d).size() != y->cells_at(w, d).size()) return false;
        // adjacency consistency with already-mapped vertices
        for (VertexId u : x->neighbors(v)) {
            if (xy[u] >= 0 && !y->adjacent(w, static_cast<VertexId>(xy[u]))) return false;
        }
        for (VertexId u2 : y->neighbors(w)) {
            if (yx[u2] >= 0 && !x->adjacent(v, static_cast<VertexId>(yx[u2]))) return false;
        }
        // non-adjacency: mapped x-vertices adjacent to w's image set
        for (VertexId u = 0; u < x->vertex_count(); ++u) {
            if (xy[u] < 0) continue;
            bool ax = x->adjacent(v, u);
            bool ay = y->adjacent(w, static_cast<VertexId>(xy[u]));
            if (ax != ay) return false;
        }
        return true;
    }
};

bool cells_map(const CubeComplex& x, const CubeComplex& y, const std::vector<int>& xy) {
    for (int d = 1; d < 4; ++d) {
        if (x.cells(d).size() != y.cells(d).size()) return false;
        for (const Cell& c : x.cells(d)) {
            std::vector<VertexId> img;
            for (VertexId v : c.corners()) img.push_back(static_cast<VertexId>(xy[v]));
            std::sort(img.begin(), img.end());
            if (y.find_cell(d, img) < 0) return false;
        }
    }
    return true;
}

bool iso_search(IsoState& st) {
    // next unmapped x-vertex, preferring one adjacent to the mapped set
    int v = -1;
    for (VertexId u = 0; u < st.x->vertex_count(); ++u) {
        if (st.xy[u] >= 0) continue;
        bool anchored = false;
        for (VertexId nb : st.x->neighbors(u))
            if (st.xy[nb] >= 0) anchored = true;
        if (anchored) {
            v = static_cast<int>(u);
            break;
        }
        if (v < 0) v = static_cast<int>(u);
    }
    if (v < 0) return cells_map(*st.x, *st.y, st.xy);
    for (VertexId w = 0; w < st.y->vertex_count(); ++w) {
        if (st.yx[w] >= 0) continue;
        if (!st.feasible(static_cast<VertexId>(v), w)) continue;
        st.xy[v] = static_cast<int>(w);
        st.yx[w] = v;
        if (iso_search(st)) return true;
        st.xy[v] = -1;
        st.yx[w] = -1;
    }
    return false;
}

} // namespace

std::optional<IsoMapping> isomorphic_labeled(const CubeComplex& x, const CubeComplex& y) {
    if (x.vertex_count() != y.vertex_count()) return std::nullopt;
    for (int d = 1; d < 4; ++d)
        if (x.cells(d).size() != y.cells(d).size()) return std::nullopt;

    IsoState st;
    st.x = &x;
    st.y = &y;
    st.xy.assign(x.vertex_count(), -1);
    st.yx.assign(y.vertex_count(), -1);
    // anchor shared labels
    for (VertexId v = 0; v < x.vertex_count(); ++v) {
        const std::string& s = x.label(v);
        if (s.empty()) continue;
        auto w = y.find_label(s);
        if (!w) continue;
        st.xy[v] = static_cast<int>(*w);
        st.yx[*w] = static_cast<int>(v);
    }
    for (VertexId v = 0; v < x.vertex_count(); ++v) {
        if (st.xy[v] < 0) continue;
        VertexId w = static_cast<VertexId>(st.xy[v]);
        st.xy[v] = -1;
        st.yx[w] = -1;
        if (!st.feasible(v, w)) return std::nullopt;
        st.xy[v] = static_cast<int>(w);
        st.yx[w] = static_cast<int>(v);
    }
    if (!iso_search(st)) return std::nullopt;
    IsoMapping m;
    m.image.resize(x.vertex_count());
    for (VertexId v = 0; v < x.vertex_count(); ++v) m.image[v] = static_cast<VertexId>(st.xy[v]);
    return m;
}

} // namespace cubecat
