#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dnbv/trimesh.hpp"
#include "dnbv/vec3.hpp"

namespace dnbv {

struct Viewpoint {
    int index = 0;      // 1-based spiral index
    Vec3 position;      // on the dome surface, meters
    Vec3 direction;     // unit vector from the dome center toward position
    double theta = 0.0; // angle from the up normal, radians
    int face_id = -1;   // face in the dome mesh
};

// Angle limit that keeps exactly 44 viewpoints at subdivision level 2
// (default workcell configuration). Recorded from a sweep over face angles;
// see theta_lim_for_count.
extern const double kThetaLim44;

struct DomeConfig {
    int subdiv = 2;
    double radius = 0.7;       // meters
    Vec3 center{0.0, 0.0, 0.0};
    Vec3 up{0.0, 0.0, 1.0};
    double theta_lim = kThetaLim44;  // radians; ignored when auto_count > 0
    int auto_count = 0;              // when > 0, sweep theta_lim to keep this many viewpoints
};

// Tessellated view hemisphere. Immutable once built; safe to share across
// concurrent readers.
struct Dome {
    TriMesh mesh;          // hemisphere tessellation
    int subdivision_level = 0;
    double radius = 0.0;
    Vec3 center;
    Vec3 up;
    double theta_lim = 0.0;

    std::vector<Viewpoint> spiral;   // every hemisphere face in spiral order (1..F)
    std::vector<Viewpoint> allowed;  // theta <= theta_lim, re-indexed 1..K
    std::vector<int> face_to_allowed;  // face id -> allowed index, 0 = excluded

    // Projection support, precomputed at build time.
    std::vector<Vec3> centroid_dirs;                    // per face, unit
    std::unordered_map<std::uint64_t, int> corner_to_face;  // sorted vertex triple -> face

    const Viewpoint& at(int allowed_index) const;       // 1-based
    double geodesic_distance(int i, int j) const;       // between allowed viewpoints, meters
    int face_for_corners(int a, int b, int c) const;    // -1 when the triple spans no face
};

// Orthonormal basis (e1, e2) of the plane orthogonal to n; e1 is the
// projection of +x unless n is nearly parallel to x, in which case +y.
void frame_from_normal(const Vec3& n, Vec3& e1, Vec3& e2);

// Orders hemisphere face centers pole-to-equator: faces are grouped into
// rings by quantizing theta to 1e-6 rad, then sorted by (ring, azimuth from
// the e1 meridian, face id). Index 1 is a face nearest the pole.
std::vector<Viewpoint> spiral_index(const TriMesh& hemisphere, const Vec3& n,
                                    const Vec3& center = {0, 0, 0}, double radius = 1.0);

// Subset with theta <= theta_lim, re-indexed contiguously 1..K in spiral
// order. Throws ValidationError when the result is empty.
std::vector<Viewpoint> allowed_viewpoints(const std::vector<Viewpoint>& spiral, double theta_lim);

// Sweeps the angle limit over face angles until exactly `count` viewpoints
// pass; returns a limit halfway between the count-th and (count+1)-th angle.
// Throws ValidationError when no threshold isolates `count`.
double theta_lim_for_count(const std::vector<Viewpoint>& spiral, int count);

Dome build_dome(const DomeConfig& cfg);

}  // namespace dnbv
