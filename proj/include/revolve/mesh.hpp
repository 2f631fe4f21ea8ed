#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "revolve/curvature.hpp"
#include "revolve/momentum.hpp"
#include "revolve/reconstruct.hpp"

namespace revolve {

using Vec3 = std::array<double, 3>;

struct VertexCurvature {
    double H = 0.0;
    double K_G = 0.0;
};

/// Triangle mesh of a surface of revolution.
///
/// Vertex (i, k) lies on profile sample i at angle 2 pi k / n_theta. Faces are
/// wound so their normal is X_theta x X_s, which points away from the axis on a
/// sphere traced upward from its south pole. Mean curvature is reported against
/// the opposite normal X_s x X_theta, the one in which 2H = K' + K/x.
struct SurfaceMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> triangles;
    /// rings[i] holds the vertex indices of profile sample i: n_theta entries,
    /// or one entry for a pole.
    std::vector<std::vector<int>> rings;
    std::vector<int> source_sample;  ///< profile sample index of each vertex
    int n_theta = 0;
    /// Filled by discrete_mesh_curvature; NaN on boundary vertices.
    std::vector<VertexCurvature> per_vertex;
};

/// Revolves the profile about the z-axis. Samples with |x| < 1e-12 become
/// single pole vertices joined by triangle fans; when the last sample coincides
/// with the first, the last ring is welded onto the first.
SurfaceMesh revolve_profile(const Profile& profile, int n_theta);

/// Coefficients of the fundamental forms in the (s, theta) chart:
/// I = ds^2 + x^2 dtheta^2 and II = K' ds^2 + x K dtheta^2.
struct FundamentalForms {
    double E = 1.0;
    double G = 0.0;
    double L = 0.0;
    double N = 0.0;

    /// Eigenvalues of the shape operator, (L/E, N/G) = (k_m, k_p).
    PrincipalCurvatures principal() const { return {L / E, N / G}; }
};

FundamentalForms fundamental_forms(const Momentum& m, double x);

/// Angle-defect Gauss curvature and cotangent-Laplacian mean curvature over
/// mixed Voronoi areas. Stores the result in mesh.per_vertex and returns it.
/// Throws NonManifold if an edge has more than two faces or inconsistent
/// orientation.
const std::vector<VertexCurvature>& discrete_mesh_curvature(SurfaceMesh& mesh);

int euler_characteristic(const SurfaceMesh& mesh);
/// Number of closed loops formed by edges with a single incident face.
int boundary_loops(const SurfaceMesh& mesh);

/// Worker count: hardware concurrency, capped by REVOLVE_THREADS when set.
int thread_count();

void write_obj(std::ostream& out, const SurfaceMesh& mesh);
void write_stl(std::ostream& out, const SurfaceMesh& mesh);

}  // namespace revolve
