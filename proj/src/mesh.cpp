#include "revolve/mesh.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <numeric>
#include <ostream>
#include <thread>

#include "revolve/error.hpp"

namespace revolve {

namespace {

constexpr double pole_tolerance = 1e-12;

Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

template <class Fn>
void parallel_for(int n, Fn&& fn)
{
    const int workers = std::min(thread_count(), std::max(1, n / 256));
    if (workers <= 1) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        const int lo = static_cast<int>(static_cast<long long>(n) * w / workers);
        const int hi = static_cast<int>(static_cast<long long>(n) * (w + 1) / workers);
        pool.emplace_back([lo, hi, &fn] {
            for (int i = lo; i < hi; ++i)
                fn(i);
        });
    }
    for (auto& t : pool)
        t.join();
}

struct Edge {
    int a;
    int b;
    int face;
    bool forward;  // a < b in the face's winding
};

std::vector<Edge> sorted_edges(const SurfaceMesh& mesh)
{
    std::vector<Edge> edges;
    edges.reserve(mesh.triangles.size() * 3);
    for (int f = 0; f < static_cast<int>(mesh.triangles.size()); ++f) {
        const auto& t = mesh.triangles[f];
        for (int j = 0; j < 3; ++j) {
            const int u = t[j];
            const int v = t[(j + 1) % 3];
            edges.push_back({std::min(u, v), std::max(u, v), f, u < v});
        }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) {
        return l.a != r.a ? l.a < r.a : l.b != r.b ? l.b < r.b : l.face < r.face;
    });
    return edges;
}

// Calls fn(first, count) for every run of equal undirected edges.
template <class Fn>
void for_each_edge(const std::vector<Edge>& edges, Fn&& fn)
{
    for (std::size_t i = 0; i < edges.size();) {
        std::size_t j = i + 1;
        while (j < edges.size() && edges[j].a == edges[i].a && edges[j].b == edges[i].b)
            ++j;
        fn(i, j - i);
        i = j;
    }
}

}  // namespace

int thread_count()
{
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0)
        n = 1;
    if (const char* env = std::getenv("REVOLVE_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1)
            n = std::min<long>(n, cap);
    }
    return n;
}

SurfaceMesh revolve_profile(const Profile& profile, int n_theta)
{
    if (n_theta < 8)
        throw Error(ErrorKind::InvalidArgument, "n_theta must be at least 8");
    const auto& samples = profile.samples;
    if (samples.size() < 2)
        throw Error(ErrorKind::DegenerateProfile, "a profile needs at least two samples");
    double scale = 0.0;
    for (const auto& p : samples) {
        if (!std::isfinite(p.x) || !std::isfinite(p.z))
            throw Error(ErrorKind::DegenerateProfile, "profile has non-finite samples");
        scale = std::max({scale, std::abs(p.x), std::abs(p.z)});
    }
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (samples[i].x == samples[i - 1].x && samples[i].z == samples[i - 1].z)
            throw Error(ErrorKind::DegenerateProfile,
                        "profile repeats a point at sample " + std::to_string(i));
    }

    const int n = static_cast<int>(samples.size());
    const auto& first = samples.front();
    const auto& last = samples.back();
    const bool welded = n > 2 && std::hypot(last.x - first.x, last.z - first.z)
                                     <= 1e-12 * std::max(1.0, scale);
    const int rings = welded ? n - 1 : n;

    SurfaceMesh mesh;
    mesh.n_theta = n_theta;
    mesh.rings.resize(n);
    std::vector<double> cos_t(n_theta), sin_t(n_theta);
    for (int k = 0; k < n_theta; ++k) {
        const double t = 2 * std::numbers::pi * k / n_theta;
        cos_t[k] = std::cos(t);
        sin_t[k] = std::sin(t);
    }
    for (int i = 0; i < rings; ++i) {
        const auto& p = samples[i];
        if (std::abs(p.x) < pole_tolerance) {
            mesh.rings[i] = {static_cast<int>(mesh.vertices.size())};
            mesh.vertices.push_back({0.0, 0.0, p.z});
            mesh.source_sample.push_back(i);
            continue;
        }
        for (int k = 0; k < n_theta; ++k) {
            mesh.rings[i].push_back(static_cast<int>(mesh.vertices.size()));
            mesh.vertices.push_back({p.x * cos_t[k], p.x * sin_t[k], p.z});
            mesh.source_sample.push_back(i);
        }
    }
    if (welded)
        mesh.rings[n - 1] = mesh.rings[0];

    auto at = [&mesh](int i, int k) {
        const auto& ring = mesh.rings[i];
        return ring.size() == 1 ? ring[0] : ring[k % ring.size()];
    };
    auto emit = [&mesh](int a, int b, int c) {
        if (a != b && b != c && a != c)
            mesh.triangles.push_back({a, b, c});
    };
    for (int i = 0; i + 1 < n; ++i) {
        if (mesh.rings[i].size() == 1 && mesh.rings[i + 1].size() == 1)
            throw Error(ErrorKind::DegenerateProfile, "consecutive samples on the axis");
        for (int k = 0; k < n_theta; ++k) {
            emit(at(i, k), at(i + 1, k + 1), at(i + 1, k));
            emit(at(i, k), at(i, k + 1), at(i + 1, k + 1));
        }
    }
    return mesh;
}

FundamentalForms fundamental_forms(const Momentum& m, double x)
{
    if (std::abs(x) < axis_tolerance(m.domain()))
        throw Error(ErrorKind::AxisSingularity, "fundamental forms degenerate on the axis");
    const double k = m.eval(x);
    return {1.0, x * x, m.deriv(x), x * k};
}

const std::vector<VertexCurvature>& discrete_mesh_curvature(SurfaceMesh& mesh)
{
    const int nv = static_cast<int>(mesh.vertices.size());
    const auto edges = sorted_edges(mesh);
    std::vector<char> boundary(nv, 0);
    for_each_edge(edges, [&](std::size_t first, std::size_t count) {
        const Edge& e = edges[first];
        if (count > 2 || (count == 2 && e.forward == edges[first + 1].forward))
            throw Error(ErrorKind::NonManifold, "edge (" + std::to_string(e.a) + ", "
                                                    + std::to_string(e.b)
                                                    + ") is not a manifold edge");
        if (count == 1)
            boundary[e.a] = boundary[e.b] = 1;
    });

    std::vector<int> offset(nv + 1, 0);
    for (const auto& t : mesh.triangles)
        for (int v : t)
            ++offset[v + 1];
    std::partial_sum(offset.begin(), offset.end(), offset.begin());
    std::vector<int> incident(offset.back());
    {
        std::vector<int> fill(offset.begin(), offset.end() - 1);
        for (int f = 0; f < static_cast<int>(mesh.triangles.size()); ++f)
            for (int v : mesh.triangles[f])
                incident[fill[v]++] = f;
    }

    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    mesh.per_vertex.assign(nv, {nan, nan});
    parallel_for(nv, [&](int i) {
        if (boundary[i] || offset[i] == offset[i + 1])
            return;
        const Vec3& p = mesh.vertices[i];
        double area = 0.0;
        double angle_sum = 0.0;
        Vec3 laplacian{0, 0, 0};
        Vec3 face_normal{0, 0, 0};
        for (int idx = offset[i]; idx < offset[i + 1]; ++idx) {
            const auto& t = mesh.triangles[incident[idx]];
            const int at = t[0] == i ? 0 : t[1] == i ? 1 : 2;
            const Vec3& pj = mesh.vertices[t[(at + 1) % 3]];
            const Vec3& pk = mesh.vertices[t[(at + 2) % 3]];
            const Vec3 eij = pj - p;
            const Vec3 eik = pk - p;
            const Vec3 ejk = pk - pj;
            const Vec3 n = cross(eij, eik);
            const double twice_area = norm(n);
            face_normal = face_normal + n;
            const double cos_i = dot(eij, eik);
            const double cos_j = -dot(eij, ejk);
            const double cos_k = dot(eik, ejk);
            angle_sum += std::atan2(twice_area, cos_i);
            const double cot_j = cos_j / twice_area;
            const double cot_k = cos_k / twice_area;
            laplacian = laplacian + cot_k * eij + cot_j * eik;
            if (cos_i < 0)
                area += twice_area / 4;
            else if (cos_j < 0 || cos_k < 0)
                area += twice_area / 8;
            else
                area += (dot(eij, eij) * cot_k + dot(eik, eik) * cot_j) / 8;
        }
        const double n_len = norm(face_normal);
        // Faces are wound against the reporting normal.
        const Vec3 normal = (-1.0 / n_len) * face_normal;
        const Vec3 lb = (0.5 / area) * laplacian;
        mesh.per_vertex[i] = {0.5 * dot(lb, normal), (2 * std::numbers::pi - angle_sum) / area};
    });
    return mesh.per_vertex;
}

int euler_characteristic(const SurfaceMesh& mesh)
{
    const auto edges = sorted_edges(mesh);
    int unique = 0;
    for_each_edge(edges, [&unique](std::size_t, std::size_t) { ++unique; });
    return static_cast<int>(mesh.vertices.size()) - unique
           + static_cast<int>(mesh.triangles.size());
}

int boundary_loops(const SurfaceMesh& mesh)
{
    const auto edges = sorted_edges(mesh);
    std::vector<int> parent(mesh.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<char> on_boundary(mesh.vertices.size(), 0);
    for_each_edge(edges, [&](std::size_t first, std::size_t count) {
        if (count != 1)
            return;
        const Edge& e = edges[first];
        on_boundary[e.a] = on_boundary[e.b] = 1;
        parent[find(e.a)] = find(e.b);
    });
    int loops = 0;
    for (std::size_t v = 0; v < parent.size(); ++v)
        loops += on_boundary[v] && find(static_cast<int>(v)) == static_cast<int>(v);
    return loops;
}

void write_obj(std::ostream& out, const SurfaceMesh& mesh)
{
    char line[128];
    out << "# surface of revolution: faces wound with normal X_theta x X_s\n";
    for (const auto& v : mesh.vertices) {
        std::snprintf(line, sizeof line, "v %.17g %.17g %.17g\n", v[0], v[1], v[2]);
        out << line;
    }
    for (const auto& t : mesh.triangles) {
        std::snprintf(line, sizeof line, "f %d %d %d\n", t[0] + 1, t[1] + 1, t[2] + 1);
        out << line;
    }
}

namespace {

void put_u32(std::ostream& out, std::uint32_t v)
{
    const char bytes[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                           static_cast<char>((v >> 16) & 0xff),
                           static_cast<char>((v >> 24) & 0xff)};
    out.write(bytes, 4);
}

void put_f32(std::ostream& out, double v)
{
    put_u32(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
}

}  // namespace

void write_stl(std::ostream& out, const SurfaceMesh& mesh)
{
    char header[80] = {};
    const char title[] = "revolve binary STL";
    std::copy(title, title + sizeof title - 1, header);
    out.write(header, sizeof header);
    put_u32(out, static_cast<std::uint32_t>(mesh.triangles.size()));
    for (const auto& t : mesh.triangles) {
        const Vec3& a = mesh.vertices[t[0]];
        const Vec3& b = mesh.vertices[t[1]];
        const Vec3& c = mesh.vertices[t[2]];
        Vec3 n = cross(b - a, c - a);
        const double len = norm(n);
        if (len > 0)
            n = (1 / len) * n;
        for (double v : n)
            put_f32(out, v);
        for (const Vec3* p : {&a, &b, &c})
            for (double v : *p)
                put_f32(out, v);
        out.write("\0\0", 2);
    }
}

}  // namespace revolve
