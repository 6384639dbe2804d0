#include "dnbv/trimesh.hpp"

#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "dnbv/errors.hpp"

namespace dnbv {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Symmetry-breaking azimuth offset per ring vertex (radians). Small enough to
// stay far below the spiral ring quantum (1e-6 rad), large enough to dominate
// floating-point noise.
constexpr double kAzimuthOffset = 1e-8;

std::uint64_t edge_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

Vec3 TriMesh::face_centroid(int face) const {
    const auto& f = faces[face];
    return (vertices[f[0]] + vertices[f[1]] + vertices[f[2]]) / 3.0;
}

std::size_t TriMesh::edge_count() const {
    std::unordered_map<std::uint64_t, int> seen;
    for (const auto& f : faces)
        for (int k = 0; k < 3; ++k) seen[edge_key(f[k], f[(k + 1) % 3])]++;
    return seen.size();
}

void build_adjacency(TriMesh& mesh) {
    std::unordered_map<std::uint64_t, std::array<int, 2>> edge_faces;
    edge_faces.reserve(mesh.faces.size() * 2);
    for (int f = 0; f < static_cast<int>(mesh.faces.size()); ++f) {
        for (int k = 0; k < 3; ++k) {
            auto key = edge_key(mesh.faces[f][k], mesh.faces[f][(k + 1) % 3]);
            auto it = edge_faces.find(key);
            if (it == edge_faces.end()) {
                edge_faces[key] = {f, -1};
            } else {
                if (it->second[1] != -1)
                    throw RuntimeError("non-manifold edge: shared by more than two faces");
                it->second[1] = f;
            }
        }
    }
    mesh.adjacency.assign(mesh.faces.size(), {-1, -1, -1});
    for (int f = 0; f < static_cast<int>(mesh.faces.size()); ++f) {
        for (int k = 0; k < 3; ++k) {
            auto key = edge_key(mesh.faces[f][k], mesh.faces[f][(k + 1) % 3]);
            const auto& pair = edge_faces[key];
            mesh.adjacency[f][k] = (pair[0] == f) ? pair[1] : pair[0];
        }
    }
}

TriMesh build_icosahedron() {
    TriMesh mesh;
    mesh.vertices.reserve(12);

    // Pole vertex first, then the two five-vertex rings at z = +-1/sqrt(5).
    const double ring_z = 1.0 / std::sqrt(5.0);
    const double ring_r = 2.0 / std::sqrt(5.0);

    mesh.vertices.push_back({0.0, 0.0, 1.0});
    for (int k = 0; k < 5; ++k) {
        double az = 2.0 * kPi * k / 5.0 + k * kAzimuthOffset;
        mesh.vertices.push_back({ring_r * std::cos(az), ring_r * std::sin(az), ring_z});
    }
    for (int k = 0; k < 5; ++k) {
        double az = 2.0 * kPi * k / 5.0 + kPi / 5.0 + (k + 5) * kAzimuthOffset;
        mesh.vertices.push_back({ring_r * std::cos(az), ring_r * std::sin(az), -ring_z});
    }
    mesh.vertices.push_back({0.0, 0.0, -1.0});

    auto upper = [](int k) { return 1 + k % 5; };
    auto lower = [](int k) { return 6 + k % 5; };

    for (int k = 0; k < 5; ++k) {
        mesh.faces.push_back({0, upper(k), upper(k + 1)});
        mesh.faces.push_back({upper(k), lower(k), upper(k + 1)});
        mesh.faces.push_back({lower(k), lower(k + 1), upper(k + 1)});
        mesh.faces.push_back({11, lower(k + 1), lower(k)});
    }

    // Orient counter-clockwise as seen from outside.
    for (auto& f : mesh.faces) {
        Vec3 a = mesh.vertices[f[0]];
        Vec3 b = mesh.vertices[f[1]];
        Vec3 c = mesh.vertices[f[2]];
        if (dot(cross(b - a, c - a), a + b + c) < 0.0) std::swap(f[1], f[2]);
    }

    build_adjacency(mesh);
    return mesh;
}

TriMesh subdivide(const TriMesh& mesh, int levels) {
    if (levels < 0) throw ValidationError("subdivision levels must be >= 0");
    if (levels > 8) throw ValidationError("subdivision levels > 8 rejected (face count overflow)");

    TriMesh cur = mesh;
    for (int level = 0; level < levels; ++level) {
        TriMesh next;
        next.vertices = cur.vertices;
        next.faces.reserve(cur.faces.size() * 4);

        std::unordered_map<std::uint64_t, int> midpoint;
        midpoint.reserve(cur.faces.size() * 2);
        auto midpoint_of = [&](int a, int b) {
            auto key = edge_key(a, b);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            int idx = static_cast<int>(next.vertices.size());
            next.vertices.push_back(normalized(next.vertices[a] + next.vertices[b]));
            midpoint[key] = idx;
            return idx;
        };

        for (const auto& f : cur.faces) {
            int ab = midpoint_of(f[0], f[1]);
            int bc = midpoint_of(f[1], f[2]);
            int ca = midpoint_of(f[2], f[0]);
            next.faces.push_back({f[0], ab, ca});
            next.faces.push_back({ab, f[1], bc});
            next.faces.push_back({ca, bc, f[2]});
            next.faces.push_back({ab, bc, ca});
        }
        cur = std::move(next);
    }
    build_adjacency(cur);
    return cur;
}

TriMesh restrict_hemisphere(const TriMesh& mesh, const Vec3& n) {
    TriMesh out;
    std::vector<int> remap(mesh.vertices.size(), -1);
    for (int f = 0; f < static_cast<int>(mesh.faces.size()); ++f) {
        if (dot(mesh.face_centroid(f), n) <= 0.0) continue;
        std::array<int, 3> nf{};
        for (int k = 0; k < 3; ++k) {
            int v = mesh.faces[f][k];
            if (remap[v] == -1) {
                remap[v] = static_cast<int>(out.vertices.size());
                out.vertices.push_back(mesh.vertices[v]);
            }
            nf[k] = remap[v];
        }
        out.faces.push_back(nf);
    }
    build_adjacency(out);
    return out;
}

}  // namespace dnbv
