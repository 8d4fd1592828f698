#include "kehl/rh_solver.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace kehl {

std::vector<Panel> panelize_segment(const RHSegment& seg, int order,
                                    int max_panels, int segment_id) {
  double len = std::abs(seg.z1 - seg.z0);
  cplx dir = (seg.z1 - seg.z0) / len;
  cplx origin = seg.grade_at_z0 ? seg.z0 : seg.z1;
  cplx away = seg.grade_at_z0 ? dir : -dir;

  // positions along the ray measured from the graded end
  std::vector<double> edges{0.0};
  double pos = 0.0, size = std::min(seg.first_panel, len);
  while (pos < len - 1e-12 * len) {
    double cap = std::min(size, seg.max_panel);
    if (seg.local_freq) {
      // resolve the phase oscillation: freq * panel_len <= 0.75 * order;
      // evaluate at the tentative far end too (frequency may grow outward)
      double here = seg.local_freq(origin + away * pos);
      if (here > 0) cap = std::min(cap, 0.75 * order / here);
      double there = seg.local_freq(origin + away * std::min(pos + cap, len));
      if (there > 0) cap = std::min(cap, 0.75 * order / there);
    }
    double next = std::min(pos + cap, len);
    edges.push_back(next);
    pos = next;
    size *= seg.growth;
    if (int(edges.size()) > max_panels)
      throw ResolutionError("panelize: panel budget exceeded on segment " +
                                seg.name,
                            double(edges.size()));
  }
  std::vector<Panel> panels;
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    cplx a = origin + away * edges[i];
    cplx b = origin + away * edges[i + 1];
    if (!seg.grade_at_z0) std::swap(a, b);  // keep contour orientation
    panels.push_back(make_panel(a, b, order, segment_id));
  }
  if (!seg.grade_at_z0) std::reverse(panels.begin(), panels.end());
  return panels;
}

namespace {

struct NodeRef {
  int panel;
  int local;
};

}  // namespace

RHSolution solve_rh(const ContourRH& contour, const RHOptions& opts) {
  RHSolution sol;
  std::vector<const RHSegment*> segs;
  for (const auto& s : contour.segments) segs.push_back(&s);

  for (size_t si = 0; si < segs.size(); ++si) {
    auto pan = panelize_segment(*segs[si], opts.panel_order,
                                opts.max_panels_per_segment, int(si));
    sol.panels.insert(sol.panels.end(), pan.begin(), pan.end());
  }
  const int P = int(sol.panels.size());
  const int N = opts.panel_order;
  const int n = P * N;  // scalar nodes
  sol.n_nodes = n;

  // jump deviations W = J - I at the nodes
  std::vector<Mat2> W(n);
  for (int p = 0; p < P; ++p) {
    const auto& seg = *segs[sol.panels[p].segment_id];
    for (int j = 0; j < N; ++j)
      W[p * N + j] = seg.jump(sol.panels[p].nodes[j]) - Mat2::Identity();
  }

  // scalar Cauchy matrix K[i][q*N+j]: C_-( density on panel q )(node i)
  Eigen::MatrixXcd K(n, n);
  for (int i = 0; i < n; ++i) {
    int pi = i / N, li = i % N;
    cplx target = sol.panels[pi].nodes[li];
    for (int q = 0; q < P; ++q) {
      auto row = cauchy_row(sol.panels[q], target, (q == pi) ? -1 : 0);
      for (int j = 0; j < N; ++j) K(i, q * N + j) = row[j];
    }
  }

  // Unknown rows of mu: for row alpha, X = [mu_a1(nodes); mu_a2(nodes)],
  //   X_c(i) - sum_j K(i,j) [X_1(j) W_1c(j) + X_2(j) W_2c(j)] = delta_{alpha c}
  Eigen::MatrixXcd Asys = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    Asys(i, i) += 1.0;
    Asys(n + i, n + i) += 1.0;
    for (int j = 0; j < n; ++j) {
      cplx k = K(i, j);
      // column c=1 equation gets W_11, W_21; c=2 gets W_12, W_22
      Asys(i, j) -= k * W[j](0, 0);
      Asys(i, n + j) -= k * W[j](1, 0);
      Asys(n + i, j) -= k * W[j](0, 1);
      Asys(n + i, n + j) -= k * W[j](1, 1);
    }
  }
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(Asys);
  sol.rcond = lu.rcond();
  if (sol.rcond < 1.0 / opts.cond_limit)
    throw ResolutionError("solve_rh: collocation matrix ill-conditioned",
                          1.0 / std::max(sol.rcond, 1e-300));

  Eigen::VectorXcd rhs1 = Eigen::VectorXcd::Zero(2 * n);
  Eigen::VectorXcd rhs2 = Eigen::VectorXcd::Zero(2 * n);
  for (int i = 0; i < n; ++i) {
    rhs1(i) = 1.0;      // row 1 of the identity
    rhs2(n + i) = 1.0;  // row 2
  }
  Eigen::VectorXcd x1 = lu.solve(rhs1);
  Eigen::VectorXcd x2 = lu.solve(rhs2);

  sol.mu.resize(n);
  for (int i = 0; i < n; ++i) {
    sol.mu[i](0, 0) = x1(i);
    sol.mu[i](0, 1) = x1(n + i);
    sol.mu[i](1, 0) = x2(i);
    sol.mu[i](1, 1) = x2(n + i);
  }

  // m1 = -(1/2 pi i) int mu W dk  (Gauss quadrature with complex jacobian)
  const auto& g = gauss_legendre(N);
  Mat2 acc = Mat2::Zero();
  for (int p = 0; p < P; ++p)
    for (int j = 0; j < N; ++j)
      acc += (sol.mu[p * N + j] * W[p * N + j]) *
             (g.w[j] * sol.panels[p].half);
  sol.m1 = -acc / (2.0 * pi * iu);
  sol.m_coeff = sol.m1(0, 1);

  if (opts.check_residual) {
    // re-evaluate the collocation equation at staggered (Chebyshev) points
    double res = 0;
    const int nc = 5;
    for (int p = 0; p < P; ++p) {
      const auto& seg = *segs[sol.panels[p].segment_id];
      for (int c = 1; c <= nc; ++c) {
        double w = std::cos(pi * (c - 0.25) / nc);  // avoid panel endpoints
        cplx zc = sol.panels[p].center + sol.panels[p].half * w;
        Mat2 muc;
        {
          std::vector<cplx> nodal(N);
          for (int r = 0; r < 2; ++r)
            for (int cc = 0; cc < 2; ++cc) {
              for (int j = 0; j < N; ++j) nodal[j] = sol.mu[p * N + j](r, cc);
              muc(r, cc) = panel_interp(sol.panels[p], nodal, w);
            }
        }
        Mat2 cw = Mat2::Zero();
        for (int q = 0; q < P; ++q) {
          auto row = cauchy_row(sol.panels[q], zc, (q == p) ? -1 : 0);
          for (int j = 0; j < N; ++j)
            cw += row[j] * (sol.mu[q * N + j] * W[q * N + j]);
        }
        Mat2 r = muc - Mat2::Identity() - cw;
        // length-weighted: a pointwise mismatch on a panel of length L moves
        // any Cauchy functional of the solution by O(L * mismatch), so tiny
        // panels (e.g. the log-winding neighborhood of a corner) are judged
        // by their actual influence
        double wgt = std::min(1.0, 2.0 * std::abs(sol.panels[p].half));
        res = std::max(res, wgt * r.cwiseAbs().maxCoeff());
        (void)seg;
      }
    }
    sol.residual = res;
    if (res > opts.residual_tol)
      throw ResolutionError("solve_rh: residual above tolerance", res);
  }
  return sol;
}

Mat2 evaluate_m(const RHSolution& sol, const ContourRH& contour, cplx z) {
  const int N = sol.panels.empty() ? 0 : sol.panels[0].order;
  std::vector<const RHSegment*> segs;
  for (const auto& s : contour.segments) segs.push_back(&s);
  Mat2 acc = Mat2::Identity();
  for (size_t p = 0; p < sol.panels.size(); ++p) {
    const auto& seg = *segs[sol.panels[p].segment_id];
    auto row = cauchy_row(sol.panels[p], z, 0);
    for (int j = 0; j < N; ++j) {
      Mat2 w = seg.jump(sol.panels[p].nodes[j]) - Mat2::Identity();
      acc += row[j] * (sol.mu[p * N + j] * w);
    }
  }
  return acc;
}

}  // namespace kehl
