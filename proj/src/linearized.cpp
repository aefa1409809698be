#include "qlmass/linearized.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace qlmass {

AxisymTensor2 AxisymTensor2::zero(ThetaGridPtr grid) {
  AxisymTensor2 h;
  const int n = grid->size();
  h.grid = std::move(grid);
  h.tt = Vec::Zero(n);
  h.pp = Vec::Zero(n);
  h.tp = Vec::Zero(n);
  return h;
}

AxisymTensor2 AxisymTensor2::round_multiple(double c, ThetaGridPtr grid) {
  AxisymTensor2 h;
  const int n = grid->size();
  h.grid = std::move(grid);
  h.tt = Vec::Constant(n, c);
  h.pp = (c * (1.0 - h.grid->x().array().square())).matrix();
  h.tp = Vec::Zero(n);
  return h;
}

AxisymTensor2 AxisymTensor2::lie_rotational(const Vec& w, ThetaGridPtr grid) {
  require(w.size() == grid->size(), ErrorKind::InvalidParameter,
          "field length does not match grid");
  AxisymTensor2 h;
  const int n = grid->size();
  h.grid = std::move(grid);
  h.tt = Vec::Zero(n);
  h.pp = Vec::Zero(n);
  Vec wp = h.grid->differentiate(w, 1);
  h.tp = ((1.0 - h.grid->x().array().square()) * wp.array()).matrix();
  return h;
}

namespace {

struct ModeTables {
  // P_l(x_i) and P_l'(x_i) for l = 0..L at every node.
  Mat P, dP;
  int L;
};

ModeTables build_tables(const ThetaGrid& g, int L) {
  ModeTables t;
  t.L = L;
  const int n = g.size();
  t.P.resize(n, L + 1);
  t.dP.resize(n, L + 1);
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l <= L; ++l) {
      t.P(i, l) = legendre::p(l, g.x()[i]);
      t.dP(i, l) = legendre::dp(l, g.x()[i]);
    }
  }
  return t;
}

}  // namespace

void LinearizedSolution::evaluate(Vec& a_out, Vec& ap, Vec& b_out, Vec& bp,
                                  Vec& b_over_sin, Vec& c_out, Vec& cp,
                                  Vec& c_over_sin) const {
  const ThetaGrid& g = *grid;
  const int n = g.size();
  const int L = static_cast<int>(alpha.size()) - 1;
  a_out = Vec::Zero(n);
  ap = Vec::Zero(n);
  b_out = Vec::Zero(n);
  bp = Vec::Zero(n);
  b_over_sin = Vec::Zero(n);
  c_out = Vec::Zero(n);
  cp = Vec::Zero(n);
  c_over_sin = Vec::Zero(n);
  for (int i = 0; i < n; ++i) {
    const double x = g.x()[i], s = g.sin_theta()[i];
    for (int l = 0; l <= L; ++l) {
      const double P = legendre::p(l, x), dPx = legendre::dp(l, x);
      a_out[i] += alpha[l] * P;
      ap[i] += alpha[l] * (-s * dPx);
      if (l >= 1) {
        const double V = s * dPx;                    // basis for b, c
        const double dV = l * (l + 1) * P - x * dPx;  // dV/dtheta
        b_out[i] += beta[l - 1] * V;
        bp[i] += beta[l - 1] * dV;
        b_over_sin[i] += beta[l - 1] * dPx;
        c_out[i] += gamma[l - 1] * V;
        cp[i] += gamma[l - 1] * dV;
        c_over_sin[i] += gamma[l - 1] * dPx;
      }
    }
  }
}

LinearizedSolution linearized_embedding_round(const AxisymTensor2& h) {
  require(h.grid != nullptr, ErrorKind::InvalidParameter, "tensor has no grid");
  const ThetaGrid& g = *h.grid;
  const int n = g.size();
  require(h.tt.size() == n && h.pp.size() == n && h.tp.size() == n,
          ErrorKind::InvalidParameter, "tensor component length mismatch");

  const int L = n / 2;
  ModeTables tab = build_tables(g, L);

  // Regularized components: pp/(sin^2), tp/sin are smooth for admissible h.
  Vec pp_s(n), tp_s(n);
  for (int i = 0; i < n; ++i) {
    const double s2 = (1.0 - g.x()[i]) * (1.0 + g.x()[i]);
    pp_s[i] = h.pp[i] / s2;
    tp_s[i] = h.tp[i] / g.sin_theta()[i];
  }

  // Coupled (a, b) block: rows tt then scaled pp, plus the pole constraint
  // killing the axial-translation kernel.
  const int na = L + 1, nb = L;
  Mat M1 = Mat::Zero(2 * n + 1, na + nb);
  Vec r1 = Vec::Zero(2 * n + 1);
  for (int i = 0; i < n; ++i) {
    const double x = g.x()[i];
    for (int l = 0; l <= L; ++l) {
      M1(i, l) = 2.0 * tab.P(i, l);
      M1(n + i, l) = 2.0 * tab.P(i, l);
      if (l >= 1) {
        M1(i, na + l - 1) = 2.0 * (l * (l + 1) * tab.P(i, l) - x * tab.dP(i, l));
        M1(n + i, na + l - 1) = 2.0 * x * tab.dP(i, l);
      }
    }
    r1[i] = h.tt[i];
    r1[n + i] = pp_s[i];
  }
  for (int l = 0; l <= L; ++l) M1(2 * n, l) = 1.0;  // a(north pole) = 0

  Eigen::ColPivHouseholderQR<Mat> qr1(M1);
  require(qr1.info() == Eigen::Success, ErrorKind::LinearSolveFailure,
          "QR factorization failed");
  Vec sol1 = qr1.solve(r1);

  // Azimuthal block: pure gamma, with the axial-rotation mode pinned.
  Mat M2 = Mat::Zero(n + 1, L);
  Vec r2 = Vec::Zero(n + 1);
  for (int i = 0; i < n; ++i) {
    const double x = g.x()[i];
    for (int l = 1; l <= L; ++l)
      M2(i, l - 1) = l * (l + 1) * tab.P(i, l) - 2.0 * x * tab.dP(i, l);
    r2[i] = tp_s[i];
  }
  M2(n, 0) = 1.0;  // gamma_1 = 0

  Eigen::ColPivHouseholderQR<Mat> qr2(M2);
  Vec sol2 = qr2.solve(r2);

  LinearizedSolution out;
  out.grid = h.grid;
  out.alpha = sol1.head(na);
  out.beta = sol1.tail(nb);
  out.gamma = sol2;

  // Remove the residual axial translation and rotation exactly; both are in
  // the kernel of the equations, so the residual is untouched.
  const double tshift = out.alpha.sum();
  out.alpha[1] -= tshift;
  out.beta[0] += tshift;
  out.gamma[0] = 0.0;

  Vec a, ap, b, bp, bos, c, cp, cos_;
  out.evaluate(a, ap, b, bp, bos, c, cp, cos_);
  out.a = a;
  out.b = b;
  out.c = c;

  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = g.x()[i];
    res = std::max(res, std::abs(2.0 * (a[i] + bp[i]) - h.tt[i]));
    res = std::max(res, std::abs(2.0 * (a[i] + x * bos[i]) - pp_s[i]));
    res = std::max(res, std::abs(cp[i] - x * cos_[i] - tp_s[i]));
  }
  out.residual = res;
  out.pole_norm = std::abs(out.alpha.sum());

  require(std::isfinite(res), ErrorKind::LinearSolveFailure,
          "non-finite solve residual");
  return out;
}

QuadraticCloseness quadratic_closeness_check(const AxisymTensor2& h,
                                             const std::vector<double>& ts) {
  require(ts.size() >= 4, ErrorKind::InvalidParameter,
          "need at least 4 step sizes");
  for (size_t k = 0; k < ts.size(); ++k) {
    require(ts[k] > 0.0, ErrorKind::InvalidParameter, "steps must be positive");
    if (k > 0)
      require(ts[k] < ts[k - 1], ErrorKind::InvalidParameter,
              "steps must decrease");
  }

  const ThetaGrid& g = *h.grid;
  const int n = g.size();
  LinearizedSolution Y = linearized_embedding_round(h);
  Vec a, ap, b, bp, bos, c, cp, cos_;
  Y.evaluate(a, ap, b, bp, bos, c, cp, cos_);

  Vec pp_s(n), tp_s(n);
  for (int i = 0; i < n; ++i) {
    const double s2 = (1.0 - g.x()[i]) * (1.0 + g.x()[i]);
    pp_s[i] = h.pp[i] / s2;
    tp_s[i] = h.tp[i] / g.sin_theta()[i];
  }

  QuadraticCloseness out;
  out.t = ts;
  out.defect.resize(ts.size());
  for (size_t k = 0; k < ts.size(); ++k) {
    const double t = ts[k];
    double d = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = g.x()[i], s = g.sin_theta()[i];
      const double P = 1.0 + t * a[i], Pp = t * ap[i];
      const double Q = t * b[i], Qp = t * bp[i], Qs = t * bos[i];
      const double S = t * c[i], Sp = t * cp[i], Ss = t * cos_[i];
      // Induced metric of G = (P, Q, S) in the (n, th, ph) frame, with the
      // phi components scaled by sin and sin^2 to stay regular at the poles.
      const double tau_tt = (Pp - Q) * (Pp - Q) + (P + Qp) * (P + Qp) + Sp * Sp;
      const double proj = P + Qs * x;
      const double tau_pp_s = Ss * Ss + proj * proj;
      const double tau_tp_s = -(Pp - Q) * S - (P + Qp) * Ss * x + Sp * proj;
      d = std::max(d, std::abs(tau_tt - 1.0 - t * h.tt[i]));
      d = std::max(d, std::abs(tau_pp_s - 1.0 - t * pp_s[i]));
      d = std::max(d, std::abs(tau_tp_s - t * tp_s[i]));
    }
    out.defect[k] = d;
  }

  double dmax = 0.0;
  for (double d : out.defect) dmax = std::max(dmax, d);
  require(dmax > 1e-13, ErrorKind::DegenerateMeasurement,
          "metric defect at rounding noise for every step");

  // Log-log least-squares slope.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int m = static_cast<int>(ts.size());
  for (int k = 0; k < m; ++k) {
    double lx = std::log(ts[k]), ly = std::log(out.defect[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  out.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return out;
}

}  // namespace qlmass
