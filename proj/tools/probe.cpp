// Temporary development probe for dome numerics.
#include <cstdio>
#include <map>

#include "dnbv/dome.hpp"
#include "dnbv/trimesh.hpp"

using namespace dnbv;

int main() {
    TriMesh ico = build_icosahedron();
    std::printf("ico: V=%zu F=%zu E=%zu\n", ico.vertices.size(), ico.faces.size(),
                ico.edge_count());

    for (int L = 0; L <= 2; ++L) {
        TriMesh sphere = subdivide(ico, L);
        TriMesh hemi = restrict_hemisphere(sphere, {0, 0, 1});
        std::printf("level %d: sphere F=%zu hemi F=%zu\n", L, sphere.faces.size(),
                    hemi.faces.size());
    }

    TriMesh sphere2 = subdivide(ico, 2);
    TriMesh hemi2 = restrict_hemisphere(sphere2, {0, 0, 1});
    auto spiral = spiral_index(hemi2, {0, 0, 1});

    // ring structure
    std::map<long, int> rings;
    for (const auto& vp : spiral) rings[std::lround(vp.theta / 1e-6)]++;
    std::printf("rings (%zu):", rings.size());
    int cum = 0;
    for (auto& [k, c] : rings) {
        cum += c;
        std::printf(" %.4f:%d(cum %d)", k * 1e-6, c, cum);
    }
    std::printf("\n");

    // sorted thetas around the 44 cut
    std::vector<double> th;
    for (const auto& vp : spiral) th.push_back(vp.theta);
    std::sort(th.begin(), th.end());
    for (int i = 39; i < 50; ++i) std::printf("theta[%d] = %.17g\n", i + 1, th[i]);
    std::printf("gap44 = %.3g\n", th[44] - th[43]);

    double tl = theta_lim_for_count(spiral, 44);
    std::printf("theta_lim_for_count(44) = %.17g\n", tl);
    auto allowed = allowed_viewpoints(spiral, tl);
    std::printf("allowed = %zu\n", allowed.size());

    // level-0 spiral
    TriMesh hemi0 = restrict_hemisphere(ico, {0, 0, 1});
    auto spiral0 = spiral_index(hemi0, {0, 0, 1});
    for (const auto& vp : spiral0)
        std::printf("idx %d face %d theta %.6f\n", vp.index, vp.face_id, vp.theta);
    return 0;
}
