#pragma once

#include "magnet/fem.hpp"
#include "magnet/meshgen.hpp"
#include "magnet/network.hpp"
#include "magnet/training.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace magnet {

struct MeshSpec {
  std::string generator = "file";  // file | lshape | beam_hole
  double size_m = 1.0;
  double cut_m = 0.4;
  int divisions = 10;
  BeamHoleGeometry beam;
};

struct RunConfig {
  // [paths], resolved against the config file's directory
  std::string mesh;
  std::string plan;
  std::string dataset;
  std::string model_file;
  std::string state;
  std::string train_report;
  std::string eval_report;
  std::string field;

  MeshSpec mesh_spec;

  // [bvp]
  double young_pa = 500.0;
  double poisson_ratio = 0.4;
  std::optional<fem::Box> fixed_box;
  std::optional<fem::Box> load_box;
  fem::ForceRange force_range;
  std::size_t samples_per_node = 1000;
  std::size_t num_samples = 0;  // 0: samples_per_node * |load region|
  double split_ratio = 0.95;
  fem::NewtonOptions newton;

  ModelConfig model;
  TrainConfig train;

  // [eval]
  double characteristic_length_m = 1.0;
  std::size_t export_sample = 0;

  // [run]
  std::uint64_t seed = 0;
  int threads = 0;  // 0: OpenMP default
};

// Sectioned `key = value` text; '#' starts a comment. Unknown sections or
// keys, duplicates and malformed values throw ParseError with the line.
RunConfig parse_run_config(std::istream &in, const std::string &base_dir = "");
RunConfig read_run_config(const std::string &path);
void write_run_config(std::ostream &out, const RunConfig &config);

Mesh make_mesh(const RunConfig &config);
fem::BoundaryValueProblem make_problem(const RunConfig &config, const Mesh &mesh);
// Total sample count implied by the config for a given problem.
std::size_t requested_samples(const RunConfig &config, const fem::BoundaryValueProblem &bvp);

} // namespace magnet
