#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kehl/cauchy.hpp"
#include "kehl/types.hpp"

namespace kehl {

using JumpFn = std::function<Mat2(cplx)>;

// Oriented straight segment with its 2x2 jump. Panels are graded toward
// `grade_toward` (one of the endpoints) when refine_scale > 0.
struct RHSegment {
  cplx z0, z1;     // traversed z0 -> z1; contour plus side is to the left
  JumpFn jump;
  std::string name;
  // panelization hints
  double first_panel = 0.1;  // size of the panel at the graded end
  double growth = 2.0;       // geometric growth away from the graded end
  double max_panel = 1e9;
  bool grade_at_z0 = true;
  // local phase frequency |d(phase)/d arclen|; panels are capped so that
  // freq * panel_len <= 0.75 * order. Null disables the cap.
  std::function<double(cplx)> local_freq;
};

struct ContourRH {
  std::vector<RHSegment> segments;
};

struct RHOptions {
  int panel_order = 12;
  int max_panels_per_segment = 64;
  double cond_limit = 1e12;
  double residual_tol = 1e-6;
  bool check_residual = true;
};

struct RHSolution {
  std::vector<Panel> panels;
  std::vector<Mat2> mu;        // minus boundary values at the nodes
  cplx m_coeff{};              // lim k (M - I)_{12}
  Mat2 m1{};                   // full lim k (M - I)
  double residual = 0;         // collocation equation at staggered points
  double rcond = 0;            // reciprocal condition estimate of the system
  int n_nodes = 0;
};

// Solves mu = I + C_-(mu (J - I)) by per-panel Legendre collocation and
// returns the large-k coefficient -1/(2 pi i) * int mu (J-I) dk.
RHSolution solve_rh(const ContourRH& contour, const RHOptions& opts = {});

// Off-contour evaluation M(z) = I + C(mu W)(z).
Mat2 evaluate_m(const RHSolution& sol, const ContourRH& contour, cplx z);

// Panelization of a segment (exposed for tests/diagnostics).
std::vector<Panel> panelize_segment(const RHSegment& seg, int order,
                                    int max_panels, int segment_id);

}  // namespace kehl
