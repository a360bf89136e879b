#pragma once

#include "magnet/graph.hpp"
#include "magnet/mesh.hpp"
#include "magnet/training.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace magnet::fem {

using Mat3 = Eigen::Matrix3d;
// dP_iJ / dF_kL at row 3*i+J, column 3*k+L.
using Tangent = Eigen::Matrix<double, 9, 9>;

// lambda = E nu / ((1+nu)(1-2nu)), mu = E / (2(1+nu)).
// Throws ArgumentError unless E > 0 and -1 < nu < 0.5.
std::pair<double, double> lame_from_E_nu(double E, double nu);

struct Material {
  double E = 500.0;     // Pa
  double nu = 0.4;
  double lambda = 0.0;  // Pa
  double mu = 0.0;      // Pa

  static Material from_E_nu(double E, double nu);
};

// Compressible Neo-Hookean energy density
//   W = mu/2 (I_c - 3 - 2 ln J) + lambda/4 (J^2 - 1 - 2 ln J).
// All constitutive functions throw ElementInversionError for det F <= 0.
double strain_energy(const Mat3 &F, const Material &mat);
// P = dW/dF = mu (F - F^-T) + lambda/2 (J^2 - 1) F^-T
Mat3 pk1_stress(const Mat3 &F, const Material &mat);
Tangent pk1_tangent(const Mat3 &F, const Material &mat);
Mat3 cauchy_stress(const Mat3 &F, const Material &mat);
double von_mises(const Mat3 &F, const Material &mat);

// Plane-strain quadrature data in the reference configuration: tri3 with
// one point, quad4 with 2x2 Gauss.
struct QuadraturePoint {
  std::size_t element;
  double weight;                 // Gauss weight * |det J0| (unit thickness)
  Eigen::Matrix<double, 4, 2> grad;  // dN_a/dX_J, rows beyond the element's node count unused
};
std::vector<QuadraturePoint> reference_quadrature(const Mesh &mesh);

// F = I + grad u at a quadrature point, embedded with F33 = 1.
Mat3 deformation_gradient(const Mesh &mesh, const QuadraturePoint &qp, const Eigen::VectorXd &u);

struct Assembly {
  Eigen::VectorXd f_int;                 // N*dim, dof index node*dim + component
  Eigen::SparseMatrix<double> K;         // exact derivative of f_int
};

// Throws ElementInversionError naming the first inverted element.
Assembly internal_force_and_tangent(const Mesh &mesh, const Material &mat, const Eigen::VectorXd &u,
                                    bool with_tangent = true);
Eigen::VectorXd internal_force(const Mesh &mesh, const Material &mat, const Eigen::VectorXd &u);
double total_strain_energy(const Mesh &mesh, const Material &mat, const Eigen::VectorXd &u);

// Lowest det F over all quadrature points.
double min_jacobian(const Mesh &mesh, const Eigen::VectorXd &u);

struct BoundaryValueProblem {
  Mesh mesh;
  Material material;
  std::vector<char> fixed;          // per dof, 1 = prescribed zero displacement
  std::vector<NodeId> load_region;  // candidate nodes for point loads

  // Throws StructuralError when fixed is empty/mis-sized or the load region
  // touches a fixed node.
  void validate() const;
  std::vector<Eigen::Index> free_dofs() const;
};

// Nodes with xmin <= x <= xmax and ymin <= y <= ymax (tolerance tol).
std::vector<NodeId> nodes_in_box(const Mesh &mesh, double xmin, double xmax, double ymin, double ymax,
                                 double tol = 1e-9);
void fix_nodes(BoundaryValueProblem &bvp, std::span<const NodeId> nodes);

struct NewtonOptions {
  double tol_abs = 1e-10;    // N
  double tol_rel = 1e-9;
  int max_iterations = 50;   // per load step
  int max_depth = 10;        // load-increment halvings
};

struct SolveResult {
  Eigen::VectorXd u;
  int iterations = 0;
  double residual_norm = 0.0;   // free-dof residual, N
  bool converged = false;
  int load_steps = 0;
  int depth = 0;
  std::vector<double> residual_history;  // of the final load step
};

// Solves f_int(u) = f_ext on free dofs from u = 0, halving the load
// increment on divergence. Throws SolverError when halving is exhausted.
SolveResult newton_solve(const BoundaryValueProblem &bvp, const Eigen::VectorXd &f_ext,
                         const NewtonOptions &options = {});

struct ForceRange {
  double lo = -1.0;  // N, per component
  double hi = 1.0;
};

struct GenerationLog {
  std::size_t redraws = 0;
  std::vector<std::string> messages;
};

// Point-load samples: load nodes are visited in load_region order,
// samples_per_node draws each, cycling until num_samples. Throws
// ArgumentError for num_samples == 0. Force components are uniform in the
// range; a draw that fails to converge is redrawn. Throws GenerationError
// after more than 100 consecutive failures for one sample.
Dataset generate_dataset(const BoundaryValueProblem &bvp, std::size_t num_samples, ForceRange range,
                         std::size_t samples_per_node, std::uint64_t seed, GenerationLog *log = nullptr,
                         const NewtonOptions &options = {});

Eigen::VectorXd to_dofs(const FeatureMatrix &m);
FeatureMatrix from_dofs(const Eigen::VectorXd &v, std::size_t nodes, std::size_t dim);

} // namespace magnet::fem
