#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "dnbv/vec3.hpp"

namespace dnbv {

// Triangle mesh on the unit sphere. Vertices are unit directions and every
// face is counter-clockwise when viewed from outside the sphere.
// Immutable after construction; safe to share across threads.
struct TriMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;
    // adjacency[f][k] is the face sharing edge (faces[f][k], faces[f][(k+1)%3]),
    // or -1 on a boundary edge.
    std::vector<std::array<int, 3>> adjacency;

    Vec3 face_centroid(int face) const;
    std::size_t edge_count() const;
};

// Regular icosahedron inscribed in the unit sphere with one vertex exactly at
// the pole. Ring vertices carry a deterministic ~1e-8 rad azimuth offset each,
// so that face polar angles are pairwise distinct; an exactly symmetric build
// leaves whole rings of faces at equal angle and angle-threshold counts can
// then only change in ring-sized jumps.
TriMesh build_icosahedron();

// Loop-style icosphere subdivision: each face splits into four, new midpoint
// vertices are re-projected onto the unit sphere. Rejects levels > 8.
TriMesh subdivide(const TriMesh& mesh, int levels);

// Keeps exactly the faces whose centroid has strictly positive component
// along n. Vertices are compacted and adjacency rebuilt.
TriMesh restrict_hemisphere(const TriMesh& mesh, const Vec3& n);

// Recomputes the adjacency table from the face list.
void build_adjacency(TriMesh& mesh);

}  // namespace dnbv
