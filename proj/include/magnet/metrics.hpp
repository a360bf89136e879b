#pragma once

#include "magnet/features.hpp"
#include "magnet/fem.hpp"
#include "magnet/network.hpp"
#include "magnet/training.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace magnet {

// e_m = (1/F) sum_i |pred_i - truth_i| over all F = N * dim dofs.
double sample_error(const FeatureMatrix &pred, const FeatureMatrix &truth);

struct Aggregate {
  double e_bar = 0.0;
  std::optional<double> sigma_e;  // corrected, absent below 2 samples
};
// Throws ArgumentError for an empty list.
Aggregate aggregate(std::span<const double> per_sample_e);

// max over samples and dofs of |pred - truth|. Throws ArgumentError when empty.
double max_dof_error(std::span<const FeatureMatrix> preds, std::span<const FeatureMatrix> truths);

// Per-node Euclidean norm of the displacement error.
std::vector<double> l2_error_field(const FeatureMatrix &pred, const FeatureMatrix &truth);

// Largest nodal displacement magnitude.
double max_nodal_displacement(const FeatureMatrix &u);

struct ResidualCheck {
  bool valid = true;
  long inverted_element = -1;
  std::string message;
  FeatureMatrix residual;          // f_int(u) - f_ext per node, N
  double free_residual_norm = 0.0; // N
  // Sum of internal forces over Dirichlet nodes plus the total applied load.
  // Zero at equilibrium.
  std::vector<double> reaction_mismatch;
  double reaction_mismatch_norm = 0.0;
  std::optional<double> reaction_mismatch_relative;  // / ||sum f_ext||
  // Residual on loaded nodes relative to the applied nodal force.
  std::optional<double> neumann_error_relative;
};
ResidualCheck residual_check(const fem::BoundaryValueProblem &bvp, const FeatureMatrix &u,
                             const FeatureMatrix &f_ext);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  double slope_through_origin = 0.0;
};
// Least squares y = slope x + intercept. Throws ArgumentError for fewer than
// two points or constant x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

// Forward passes in batches of `batch`.
std::vector<FeatureMatrix> predict(const Model &model, std::span<const Sample *const> samples,
                                   std::size_t batch = 32);

struct EvalReport {
  std::vector<double> per_sample_e;
  double e_bar = 0.0;
  std::optional<double> sigma_e;
  double e_max = 0.0;
  std::optional<std::vector<double>> residual_norms;  // free-dof, N
};
EvalReport evaluate(std::span<const FeatureMatrix> preds, std::span<const FeatureMatrix> truths);

// Columns: label, M_te, e_bar [m], sigma(e) [m], e_max [m], then the same
// three divided by the characteristic length.
void write_eval_table(std::ostream &out, const std::string &label, const EvalReport &report,
                      double characteristic_length = 1.0);

} // namespace magnet
