#include "tmlift/lifts.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace tmlift {

std::string lift_name(LiftKind k) {
  switch (k) {
    case LiftKind::CompleteLift: return "g2";
    case LiftKind::HomogeneousLift: return "gt2";
    case LiftKind::TwinJ: return "hJ";
    case LiftKind::TwinQ: return "hQ";
  }
  return "?";
}

Eigen::MatrixXd frame_metric(const TmContext& ctx, LiftKind k) {
  const int n = ctx.n;
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  switch (k) {
    case LiftKind::CompleteLift:
      G.topRightCorner(n, n) = 2.0 * ctx.g;
      G.bottomLeftCorner(n, n) = 2.0 * ctx.g;
      break;
    case LiftKind::HomogeneousLift:
      G.topRightCorner(n, n) = (2.0 / ctx.norm) * ctx.g;
      G.bottomLeftCorner(n, n) = (2.0 / ctx.norm) * ctx.g;
      break;
    case LiftKind::TwinJ:
      G.topLeftCorner(n, n) = -2.0 * ctx.g;
      G.bottomRightCorner(n, n) = (2.0 / (ctx.norm * ctx.norm)) * ctx.g;
      break;
    case LiftKind::TwinQ:
      G.topLeftCorner(n, n) = 2.0 * ctx.g;
      G.bottomRightCorner(n, n) = (2.0 / (ctx.norm * ctx.norm)) * ctx.g;
      break;
  }
  return G;
}

Grid2<Jet2> frame_metric_jets(const TmContext& ctx, LiftKind k) {
  const int n = ctx.n;
  Grid2<Jet2> G(2 * n, Jet2(0.0, 2 * n));
  const Jet2 two(2.0, 2 * n);
  switch (k) {
    case LiftKind::CompleteLift:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Jet2 v = two * ctx.g_jets(i, j);
          G(i, n + j) = v;
          G(n + j, i) = v;
        }
      break;
    case LiftKind::HomogeneousLift: {
      const Jet2 f = two * ctx.norm_jet.reciprocal();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Jet2 v = f * ctx.g_jets(i, j);
          G(i, n + j) = v;
          G(n + j, i) = v;
        }
      break;
    }
    case LiftKind::TwinJ:
    case LiftKind::TwinQ: {
      const double hsign = (k == LiftKind::TwinJ) ? -1.0 : 1.0;
      const Jet2 f = two * (ctx.norm_jet * ctx.norm_jet).reciprocal();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          G(i, j) = (2.0 * hsign) * ctx.g_jets(i, j);
          G(n + i, n + j) = f * ctx.g_jets(i, j);
        }
      break;
    }
  }
  return G;
}

MetricProducer lift_producer(LiftKind k) {
  return [k](const MetricSpec& spec, const TangentPoint& u) {
    return frame_metric(make_context(spec, u), k);
  };
}

Eigen::MatrixXd pullback_homothety(const MetricSpec& spec, const TangentPoint& u, double t,
                                   const MetricProducer& producer) {
  const int n = spec.dim();
  const TmContext here = make_context(spec, u);
  const TangentPoint ut = homothety(u, t);
  const TmContext there = make_context(spec, ut);

  const Eigen::MatrixXd G_frame_there = producer(spec, ut);
  const Eigen::MatrixXd P_there_inv = frame_basis_matrix(there).inverse();
  const Eigen::MatrixXd G_ind_there =
      P_there_inv.transpose() * G_frame_there * P_there_inv;

  Eigen::MatrixXd Jac = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  Jac.bottomRightCorner(n, n) *= t;

  const Eigen::MatrixXd G_ind_here = Jac.transpose() * G_ind_there * Jac;
  const Eigen::MatrixXd P_here = frame_basis_matrix(here);
  return P_here.transpose() * G_ind_here * P_here;
}

namespace {

StructureKind omega_structure(OmegaKind k) {
  return k == OmegaKind::TwinJWithProduct ? StructureKind::WeightedProduct
                                          : StructureKind::WeightedComplex;
}

LiftKind omega_twin(OmegaKind k) {
  return k == OmegaKind::TwinJWithProduct ? LiftKind::TwinJ : LiftKind::TwinQ;
}

}  // namespace

Eigen::MatrixXd omega(const TmContext& ctx, OmegaKind k) {
  const Eigen::MatrixXd h = frame_metric(ctx, omega_twin(k));
  const Eigen::MatrixXd M = structure_matrix(ctx, omega_structure(k));
  return M.transpose() * h;
}

Grid2<Jet2> omega_jets(const TmContext& ctx, OmegaKind k) {
  const int n2 = 2 * ctx.n;
  const Grid2<Jet2> h = frame_metric_jets(ctx, omega_twin(k));
  const Grid2<Jet2> M = structure_matrix_jets(ctx, omega_structure(k));
  Grid2<Jet2> W(n2, Jet2(0.0, n2));
  for (int A = 0; A < n2; ++A)
    for (int B = 0; B < n2; ++B) {
      Jet2 v(0.0, n2);
      for (int C = 0; C < n2; ++C) v += M(C, A) * h(C, B);
      W(A, B) = v;
    }
  return W;
}

Eigen::MatrixXd omega_display(const TmContext& ctx, OmegaKind k) {
  const int n = ctx.n;
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  const Eigen::MatrixXd block = (4.0 / ctx.norm) * ctx.g;
  if (k == OmegaKind::TwinJWithProduct) {
    W.topRightCorner(n, n) = block;             // coefficient on dx^i ^ dy-slot^j
    W.bottomLeftCorner(n, n) = -block.transpose();
  } else {
    W.bottomLeftCorner(n, n) = block;           // coefficient on dy-slot^i ^ dx^j
    W.topRightCorner(n, n) = -block.transpose();
  }
  return W;
}

Grid2<Jet2> base_symplectic_jets(const TmContext& ctx) {
  const int n = ctx.n;
  Grid2<Jet2> W(2 * n, Jet2(0.0, 2 * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      W(i, n + j) = ctx.g_jets(i, j);
      W(n + j, i) = -ctx.g_jets(i, j);
    }
  return W;
}

Grid3<double> exterior_derivative_2form(const TmContext& ctx, const FormField& form) {
  const int d = 2 * ctx.n;
  const Grid2<Jet2> w = form(ctx);
  const Grid2<FrameVector> br = bracket_table(ctx);

  Eigen::MatrixXd wval(d, d);
  for (int A = 0; A < d; ++A)
    for (int B = 0; B < d; ++B) wval(A, B) = w(A, B).value();

  // w(V, X_C) for a frame vector V
  const auto pair_with = [&](const FrameVector& V, int C) {
    double acc = 0.0;
    for (int D = 0; D < d; ++D) acc += V.coeff(D, ctx.n) * wval(D, C);
    return acc;
  };

  Grid3<double> out(d, 0.0);
  for (int A = 0; A < d; ++A)
    for (int B = A + 1; B < d; ++B)
      for (int C = B + 1; C < d; ++C) {
        double v = frame_derivative(ctx, w(B, C), A) - frame_derivative(ctx, w(A, C), B) +
                   frame_derivative(ctx, w(A, B), C);
        v -= pair_with(br(A, B), C);
        v += pair_with(br(A, C), B);
        v -= pair_with(br(B, C), A);

        out(A, B, C) = v;
        out(B, C, A) = v;
        out(C, A, B) = v;
        out(A, C, B) = -v;
        out(C, B, A) = -v;
        out(B, A, C) = -v;
      }
  return out;
}

double max_component(const Grid3<double>& t) {
  const int d = t.extent();
  double m = 0.0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) m = std::max(m, std::abs(t(a, b, c)));
  return m;
}

ProportionalityFit proportionality_fit_domega(const TmContext& ctx, OmegaKind k) {
  const int d = 2 * ctx.n;
  const Grid3<double> dW =
      exterior_derivative_2form(ctx, [k](const TmContext& c) { return omega_jets(c, k); });
  const Eigen::MatrixXd W = omega(ctx, k);

  // d||y|| in the adapted coframe: zero dx components, y_i/||y|| on the
  // vertical slots; divided by ||y|| for the fit normalization.
  Eigen::VectorXd alpha = Eigen::VectorXd::Zero(d);
  for (int i = 0; i < ctx.n; ++i) alpha[ctx.n + i] = ctx.y_low[i] / (ctx.norm * ctx.norm);

  double tw = 0.0, ww = 0.0;
  std::vector<std::array<int, 3>> triples;
  for (int A = 0; A < d; ++A)
    for (int B = A + 1; B < d; ++B)
      for (int C = B + 1; C < d; ++C) {
        const double wedge =
            alpha[A] * W(B, C) - alpha[B] * W(A, C) + alpha[C] * W(A, B);
        tw += dW(A, B, C) * wedge;
        ww += wedge * wedge;
        triples.push_back({A, B, C});
      }

  ProportionalityFit fit;
  if (ww < 1e-14) return fit;  // wedge vanishes, nothing to fit against
  fit.conclusive = true;
  fit.kappa = tw / ww;
  for (const auto& [A, B, C] : triples) {
    const double wedge = alpha[A] * W(B, C) - alpha[B] * W(A, C) + alpha[C] * W(A, B);
    fit.residual = std::max(fit.residual, std::abs(dW(A, B, C) - fit.kappa * wedge));
  }
  return fit;
}

}  // namespace tmlift
