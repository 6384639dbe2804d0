#include "dnbv/dome.hpp"

#include <algorithm>
#include <cmath>

#include "dnbv/errors.hpp"
#include "dnbv/ioutil.hpp"

namespace dnbv {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kRingQuantum = 1e-6;  // radians; ring grouping for the spiral order

std::uint64_t corner_key(int a, int b, int c) {
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 42) | (static_cast<std::uint64_t>(b) << 21) |
           static_cast<std::uint64_t>(c);
}

}  // namespace

const double kThetaLim44 = 0.0;  // placeholder, computed by sweep during bring-up

void frame_from_normal(const Vec3& n, Vec3& e1, Vec3& e2) {
    Vec3 ref{1.0, 0.0, 0.0};
    if (std::abs(dot(ref, n)) > 0.9) ref = {0.0, 1.0, 0.0};
    e1 = normalized(ref - n * dot(ref, n));
    e2 = cross(n, e1);
}

const Viewpoint& Dome::at(int allowed_index) const {
    if (allowed_index < 1 || allowed_index > static_cast<int>(allowed.size()))
        throw ValidationError("viewpoint index out of range: " + std::to_string(allowed_index));
    return allowed[allowed_index - 1];
}

double Dome::geodesic_distance(int i, int j) const {
    return radius * angle_between_units(at(i).direction, at(j).direction);
}

int Dome::face_for_corners(int a, int b, int c) const {
    auto it = corner_to_face.find(corner_key(a, b, c));
    return it == corner_to_face.end() ? -1 : it->second;
}

std::vector<Viewpoint> spiral_index(const TriMesh& hemisphere, const Vec3& n,
                                    const Vec3& center, double radius) {
    Vec3 e1, e2;
    frame_from_normal(n, e1, e2);

    struct Entry {
        long ring;
        double azimuth;
        int face_id;
        Vec3 dir;
        double theta;
    };
    std::vector<Entry> entries;
    entries.reserve(hemisphere.faces.size());
    for (int f = 0; f < static_cast<int>(hemisphere.faces.size()); ++f) {
        Vec3 dir = normalized(hemisphere.face_centroid(f));
        double theta = angle_between_units(dir, n);
        double az = std::atan2(dot(dir, e2), dot(dir, e1));
        if (az < 0.0) az += kTwoPi;
        entries.push_back({std::lround(theta / kRingQuantum), az, f, dir, theta});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.ring != b.ring) return a.ring < b.ring;
        if (a.azimuth != b.azimuth) return a.azimuth < b.azimuth;
        return a.face_id < b.face_id;
    });

    std::vector<Viewpoint> out;
    out.reserve(entries.size());
    for (int i = 0; i < static_cast<int>(entries.size()); ++i) {
        const Entry& e = entries[i];
        out.push_back({i + 1, center + e.dir * radius, e.dir, e.theta, e.face_id});
    }
    return out;
}

std::vector<Viewpoint> allowed_viewpoints(const std::vector<Viewpoint>& spiral, double theta_lim) {
    std::vector<Viewpoint> out;
    for (const Viewpoint& vp : spiral) {
        if (vp.theta <= theta_lim) {
            Viewpoint v = vp;
            v.index = static_cast<int>(out.size()) + 1;
            out.push_back(v);
        }
    }
    if (out.empty())
        throw ValidationError("theta_lim " + fmt9(theta_lim) +
                              " excludes every viewpoint; dome misconfigured");
    return out;
}

double theta_lim_for_count(const std::vector<Viewpoint>& spiral, int count) {
    if (count < 1 || count > static_cast<int>(spiral.size()))
        throw ValidationError("viewpoint count " + std::to_string(count) +
                              " not reachable on a dome of " + std::to_string(spiral.size()) +
                              " faces");
    std::vector<double> thetas;
    thetas.reserve(spiral.size());
    for (const Viewpoint& vp : spiral) thetas.push_back(vp.theta);
    std::sort(thetas.begin(), thetas.end());

    double limit = thetas[count - 1];
    if (count < static_cast<int>(thetas.size())) {
        if (thetas[count] <= limit)
            throw ValidationError("no angle limit isolates exactly " + std::to_string(count) +
                                  " viewpoints (tie at theta = " + fmt9(limit) + ")");
        limit = 0.5 * (limit + thetas[count]);
    }
    return limit;
}

Dome build_dome(const DomeConfig& cfg) {
    if (cfg.radius <= 0.0) throw ValidationError("dome radius must be positive");
    double up_norm = norm(cfg.up);
    if (std::abs(up_norm - 1.0) > 1e-9) throw ValidationError("dome up normal must be unit length");

    Dome dome;
    dome.subdivision_level = cfg.subdiv;
    dome.radius = cfg.radius;
    dome.center = cfg.center;
    dome.up = cfg.up;

    TriMesh sphere = subdivide(build_icosahedron(), cfg.subdiv);
    dome.mesh = restrict_hemisphere(sphere, cfg.up);
    dome.spiral = spiral_index(dome.mesh, cfg.up, cfg.center, cfg.radius);

    dome.theta_lim = cfg.auto_count > 0 ? theta_lim_for_count(dome.spiral, cfg.auto_count)
                                        : cfg.theta_lim;
    if (dome.theta_lim <= 0.0) throw ValidationError("theta_lim must be positive");
    dome.allowed = allowed_viewpoints(dome.spiral, dome.theta_lim);

    dome.face_to_allowed.assign(dome.mesh.faces.size(), 0);
    for (const Viewpoint& vp : dome.allowed) dome.face_to_allowed[vp.face_id] = vp.index;

    dome.centroid_dirs.reserve(dome.mesh.faces.size());
    for (int f = 0; f < static_cast<int>(dome.mesh.faces.size()); ++f)
        dome.centroid_dirs.push_back(normalized(dome.mesh.face_centroid(f)));
    dome.corner_to_face.reserve(dome.mesh.faces.size() * 2);
    for (int f = 0; f < static_cast<int>(dome.mesh.faces.size()); ++f) {
        const auto& fc = dome.mesh.faces[f];
        dome.corner_to_face[corner_key(fc[0], fc[1], fc[2])] = f;
    }
    return dome;
}

}  // namespace dnbv
