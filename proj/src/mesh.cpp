#include "subc/surface.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <stdexcept>

namespace subc {

namespace {

struct GridEdge {
    int a, b;        // z-vertex indices, a < b traversal direction for the data below
    int parity;      // 1 if the sheet flips along the edge
    Eigen::Vector3d delta;  // Re(e^{i theta} integral) from a to b on sheet 0
    double error;
};

double point_segment_distance(Complex p, Complex a, Complex b) {
    Complex d = b - a;
    double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p - a).real() * d.real() + (p - a).imag() * d.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + d * t));
}

Eigen::Vector3d mod_reduce(const Eigen::Vector3d& v, const Eigen::Matrix3d& gen,
                           const Eigen::Matrix3d& inv, bool to_fundamental) {
    Eigen::RowVector3d x = v.transpose() * inv;
    Eigen::RowVector3d r;
    for (int i = 0; i < 3; ++i) r(i) = to_fundamental ? x(i) - std::floor(x(i)) : x(i) - std::round(x(i));
    return (r * gen).transpose();
}

}  // namespace

ImmersionMesh immersion_mesh(const HyperellipticModel& m, const DifferentialTriple& t,
                             const Lattice3& lattice, const MeshConfig& cfg) {
    if (!lattice.success)
        throw std::invalid_argument("immersion_mesh: lattice detection must succeed first");
    const int res = cfg.resolution;
    if (res < 2) throw std::invalid_argument("immersion_mesh: resolution must be >= 2");

    double radius = cfg.radius;
    if (radius <= 0.0) {
        double rmax = 0.0;
        for (Complex b : m.branch_points) rmax = std::max(rmax, std::abs(b));
        radius = 1.3 * rmax;
    }
    const double cell = 2.0 * radius / res;
    const double guard = cell / 8.0;

    // Deterministic grid offsets until no branch point sits near a vertex or
    // an edge (the local-remeshing contract).
    const int nv1 = res + 1;
    auto vertex_z = [&](int i, int j, Complex offset) {
        return Complex(-radius + cell * i, -radius + cell * j) + offset;
    };
    Complex offset(0.0, 0.0);
    bool placed = false;
    for (int shift = 0; shift < 40 && !placed; ++shift) {
        offset = Complex(0.231 * cell * shift, 0.147 * cell * shift);
        placed = true;
        for (Complex b : m.branch_points) {
            for (int i = 0; i < res && placed; ++i)
                for (int j = 0; j < res && placed; ++j) {
                    Complex z00 = vertex_z(i, j, offset), z10 = vertex_z(i + 1, j, offset);
                    Complex z01 = vertex_z(i, j + 1, offset), z11 = vertex_z(i + 1, j + 1, offset);
                    if (point_segment_distance(b, z00, z10) < guard ||
                        point_segment_distance(b, z00, z01) < guard ||
                        point_segment_distance(b, z10, z11) < guard ||
                        point_segment_distance(b, z01, z11) < guard ||
                        point_segment_distance(b, z00, z11) < guard)
                        placed = false;
                }
            if (!placed) break;
        }
    }
    if (!placed) throw std::runtime_error("immersion_mesh: could not place the grid clear of branch points");

    const int nz = nv1 * nv1;
    auto vid = [&](int i, int j) { return j * nv1 + i; };
    std::vector<Complex> zs(nz);
    std::vector<Complex> w_ref(nz);
    for (int j = 0; j < nv1; ++j)
        for (int i = 0; i < nv1; ++i) {
            zs[vid(i, j)] = vertex_z(i, j, offset);
            w_ref[vid(i, j)] = std::sqrt(poly_eval(m.f, zs[vid(i, j)]));
        }

    // Edge integrals of the three differentials on sheet 0, plus parity.
    const Complex phase = std::exp(Complex(0.0, t.theta));
    std::array<std::vector<Complex>, 3> numerators;
    for (int k = 0; k < 3; ++k) numerators[k] = to_complex_coeffs(t.p[k]);

    std::vector<GridEdge> edges;
    std::vector<std::vector<int>> incident(nz);  // vertex -> edge indices
    auto add_edge = [&](int a, int b) {
        GridEdge e;
        e.a = a;
        e.b = b;
        e.error = 0.0;
        Complex w_end;
        Eigen::Vector3d d;
        for (int k = 0; k < 3; ++k) {
            double err = 0.0;
            Complex val = segment_integral(m, numerators[k], zs[a], zs[b], w_ref[a], cfg.quad,
                                           k == 0 ? &w_end : nullptr, &err);
            d(k) = (phase * val).real();
            e.error += err;
        }
        e.parity = std::abs(w_end - w_ref[b]) <= std::abs(w_end + w_ref[b]) ? 0 : 1;
        e.delta = d;
        incident[a].push_back(static_cast<int>(edges.size()));
        incident[b].push_back(static_cast<int>(edges.size()));
        edges.push_back(e);
    };
    for (int j = 0; j < nv1; ++j)
        for (int i = 0; i < nv1; ++i) {
            if (i + 1 < nv1) add_edge(vid(i, j), vid(i + 1, j));
            if (j + 1 < nv1) add_edge(vid(i, j), vid(i, j + 1));
            if (i + 1 < nv1 && j + 1 < nv1) add_edge(vid(i, j), vid(i + 1, j + 1));
        }

    // Basepoint: grid vertex nearest the requested one (default: the center),
    // kept clear of branch points.
    Complex want = cfg.basepoint;
    int base = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int v = 0; v < nz; ++v) {
        double clear = std::numeric_limits<double>::infinity();
        for (Complex b : m.branch_points) clear = std::min(clear, std::abs(zs[v] - b));
        if (clear < 2.0 * guard) continue;
        double d = std::abs(zs[v] - want);
        if (d < best) {
            best = d;
            base = v;
        }
    }
    if (base < 0) throw std::runtime_error("immersion_mesh: no admissible basepoint");

    // BFS spanning tree over the double cover; node = 2 * z-vertex + sheet.
    const int nc = 2 * nz;
    std::vector<char> seen(nc, 0);
    std::vector<Eigen::Vector3d> raw(nc, Eigen::Vector3d::Zero());
    std::deque<int> queue;
    int start = 2 * base;  // sheet 0
    seen[start] = 1;
    queue.push_back(start);
    // the seed rotates the traversal order among incident edges, selecting a
    // different spanning tree while leaving the mesh contract unchanged
    auto rotated = [&](const std::vector<int>& list, unsigned seed) {
        std::vector<int> out = list;
        if (!out.empty()) std::rotate(out.begin(), out.begin() + (seed % out.size()), out.end());
        return out;
    };
    std::vector<std::pair<int, int>> cotree;  // (cover node, edge) closure checks
    while (!queue.empty()) {
        int node = queue.front();
        queue.pop_front();
        int v = node / 2, s = node % 2;
        for (int ei : rotated(incident[v], cfg.tree_seed + static_cast<unsigned>(v))) {
            const GridEdge& e = edges[ei];
            bool forward = (e.a == v);
            int u = forward ? e.b : e.a;
            int s_u = s ^ e.parity;
            // delta from v to u on sheet s
            double sign = (s == 0 ? 1.0 : -1.0);
            Eigen::Vector3d step = sign * e.delta;
            if (!forward) {
                // reversal: start sheet at e.a is s ^ parity
                step = -((s_u == 0 ? 1.0 : -1.0) * e.delta);
            }
            int next = 2 * u + s_u;
            if (seen[next]) {
                cotree.emplace_back(node, ei);
                continue;
            }
            seen[next] = 1;
            raw[next] = raw[node] + step;
            queue.push_back(next);
        }
    }
    for (int nidx = 0; nidx < nc; ++nidx)
        if (!seen[nidx])
            throw std::runtime_error("immersion_mesh: double cover not reached by the spanning tree");

    // Closure of every co-tree edge modulo the lattice.
    Eigen::Matrix3d gen = lattice.generators;
    Eigen::Matrix3d inv = gen.inverse();
    double closure = 0.0;
    for (const auto& [node, ei] : cotree) {
        const GridEdge& e = edges[ei];
        int v = node / 2, s = node % 2;
        bool forward = (e.a == v);
        int u = forward ? e.b : e.a;
        int s_u = s ^ e.parity;
        Eigen::Vector3d step = forward ? Eigen::Vector3d((s == 0 ? 1.0 : -1.0) * e.delta)
                                       : Eigen::Vector3d(-((s_u == 0 ? 1.0 : -1.0) * e.delta));
        Eigen::Vector3d defect = raw[node] + step - raw[2 * u + s_u];
        closure = std::max(closure, mod_reduce(defect, gen, inv, false).norm());
    }

    ImmersionMesh mesh;
    mesh.closure_residual = closure;
    mesh.vertices.resize(nc);
    mesh.source.resize(nc);
    for (int v = 0; v < nz; ++v)
        for (int s = 0; s < 2; ++s) {
            mesh.vertices[2 * v + s] = mod_reduce(raw[2 * v + s], gen, inv, true);
            mesh.source[2 * v + s] = {zs[v], s};
        }

    // Triangles: two per z-triangle unless the sheet parity around it is
    // inconsistent (a branch point sits inside; such triangles are dropped).
    auto eid = [&](int a, int b) {
        for (int ei : incident[a]) {
            const GridEdge& e = edges[ei];
            if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return ei;
        }
        throw std::logic_error("immersion_mesh: missing grid edge");
    };

    auto emit = [&](int v1, int v2, int v3) {
        int p12 = edges[eid(v1, v2)].parity;
        int p23 = edges[eid(v2, v3)].parity;
        int p31 = edges[eid(v3, v1)].parity;
        if ((p12 ^ p23 ^ p31) != 0) return;  // encloses a branch point
        for (int s = 0; s < 2; ++s)
            mesh.triangles.push_back(
                {2 * v1 + s, 2 * v2 + (s ^ p12), 2 * v3 + (s ^ p12 ^ p23)});
    };
    for (int j = 0; j < res; ++j)
        for (int i = 0; i < res; ++i) {
            emit(vid(i, j), vid(i + 1, j), vid(i + 1, j + 1));
            emit(vid(i, j), vid(i + 1, j + 1), vid(i, j + 1));
        }
    return mesh;
}

void export_obj(const ImmersionMesh& mesh, std::ostream& out) {
    char buf[160];
    for (const Eigen::Vector3d& v : mesh.vertices) {
        std::snprintf(buf, sizeof(buf), "v %.9g %.9g %.9g\n", v(0), v(1), v(2));
        out << buf;
    }
    for (const auto& tri : mesh.triangles) {
        std::snprintf(buf, sizeof(buf), "f %d %d %d\n", tri[0] + 1, tri[1] + 1, tri[2] + 1);
        out << buf;
    }
}

void export_obj(const ImmersionMesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("export_obj: cannot open " + path);
    export_obj(mesh, out);
    if (!out.good()) throw std::runtime_error("export_obj: write failure on " + path);
}

}  // namespace subc
