#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/kernels.hpp"

namespace wck {

// Sampling of one field over a rectangle in the upper half-plane. The grid
// point (i, j) sits at x = xmin + i dx, y = ymin + j dy (single-row and
// single-column grids collapse to xmin / ymin). Rows stream y-major with x
// varying fastest, matching the CSV layout below.
struct GridRequest {
  std::string fn;  // K_s | E_par | E_hyp | E_ell | G_s | heat_M
  double xmin = -0.5, xmax = 0.5;
  double ymin = 0.5, ymax = 2.0;
  int nx = 16, ny = 16;
  std::map<std::string, Complex> params;  // overrides of the fn's defaults
  TruncationBudget budget;
  QuadratureConfig quad;
};

// Names of the samplable fields, in listing order.
std::vector<std::string> grid_functions();

// CSV text: one comment line echoing fn and parameters, one column header
// "x,y,re,im,tail_estimate", then nx*ny data rows. Cells where the field is
// singular (cone points, coincidence z = w) print nan entries instead of
// failing the whole grid. Requires ymin > 0 and nx, ny >= 1.
std::string grid_csv(const GridRequest& req);

}  // namespace wck
