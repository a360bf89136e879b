#pragma once

#include "magnet/fem.hpp"
#include "magnet/mesh.hpp"

namespace magnet {

// Structured nx x ny quad mesh of [x0, x0+width] x [y0, y0+height].
Mesh rectangle_quad(double width, double height, int nx, int ny, double x0 = 0.0, double y0 = 0.0);
// Same grid with every quad split into two triangles.
Mesh rectangle_tri(double width, double height, int nx, int ny, double x0 = 0.0, double y0 = 0.0);

// [0, size]^2 minus (cut, size] x (cut, size] on a uniform grid of
// `divisions` cells per side. `cut` must fall on a grid line.
Mesh lshape_quad(double size = 1.0, double cut = 0.4, int divisions = 10);

struct BeamHoleGeometry {
  double length = 1.5;
  double height = 0.5;
  double hole_x = 0.75;   // hole centre; the O-grid block is height x height around it
  double radius = 0.1;
  int ring_divisions = 4;  // segments per side of the O-grid block
  int radial_layers = 2;
  int side_columns = 4;    // columns of each structured side block
};

// Triangular beam with a circular hole: an O-grid around the hole joined to
// structured side blocks, all quads split into triangles. Element size
// shrinks towards the hole.
Mesh beam_hole_tri(const BeamHoleGeometry &geometry = {});

// Splits quads of a quad mesh into two triangles each, counter-clockwise.
Mesh split_quads(const Mesh &quads);

namespace fem {

// Fixed top edge of the vertical arm, loads on the free end of the
// horizontal arm.
BoundaryValueProblem lshape_problem(const Material &material, double size = 1.0, double cut = 0.4,
                                    int divisions = 10);
// Clamped left end, loads on the right end.
BoundaryValueProblem beam_hole_problem(const Material &material, const BeamHoleGeometry &geometry = {});

// Fixed nodes and load region selected by boxes on an arbitrary mesh.
struct Box {
  double xmin, xmax, ymin, ymax;
};
BoundaryValueProblem box_problem(Mesh mesh, const Material &material, const Box &fixed, const Box &load);

} // namespace fem

} // namespace magnet
