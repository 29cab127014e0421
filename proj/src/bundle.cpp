#include "tmlift/bundle.hpp"

#include <cmath>

namespace tmlift {

TmContext make_context(const MetricSpec& spec, const TangentPoint& u) {
  const int n = spec.dim();
  if (u.x.size() != n || u.y.size() != n) throw ModelError("point dimension mismatch");
  if (u.y.norm() == 0.0) throw ModelError("slit bundle violated: y = 0");
  if (!spec.admissible(u.x)) throw ModelError("point is not admissible for this metric");

  TmContext ctx;
  ctx.spec = &spec;
  ctx.u = u;
  ctx.n = n;

  const MetricAt m = metric_at(spec, u.x);
  ctx.g = m.g;
  ctx.ginv = m.ginv;
  ctx.gamma = christoffel(spec, u.x);
  ctx.curv = curvature(spec, u.x);
  ctx.y_low = m.g * u.y;
  ctx.norm = std::sqrt(u.y.dot(ctx.y_low));

  ctx.nlc.setZero(n, n);
  for (int mm = 0; mm < n; ++mm)
    for (int j = 0; j < n; ++j) {
      double v = 0.0;
      for (int a = 0; a < n; ++a) v += u.y[a] * ctx.gamma(mm, a, j);
      ctx.nlc(mm, j) = v;
    }

  // jets over the 2n bundle coordinates, x first then y
  Eigen::VectorXd xy(2 * n);
  xy << u.x, u.y;
  ctx.xy = lift_vars(xy);
  const std::span<const Jet2> xj(ctx.xy.data(), static_cast<size_t>(n));

  ctx.g_jets = spec.components(xj);
  ctx.gamma_jets = christoffel_t<Jet2>(spec, xj);

  ctx.nlc_jets = Grid2<Jet2>(n, Jet2(0.0, 2 * n));
  for (int mm = 0; mm < n; ++mm)
    for (int j = 0; j < n; ++j) {
      Jet2 v(0.0, 2 * n);
      for (int a = 0; a < n; ++a) v += ctx.xy[n + a] * ctx.gamma_jets(mm, a, j);
      ctx.nlc_jets(mm, j) = v;
    }

  Jet2 q(0.0, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q += ctx.g_jets(i, j) * ctx.xy[n + i] * ctx.xy[n + j];
  ctx.norm_jet = sqrt(q);

  return ctx;
}

double norm_y(const MetricSpec& spec, const TangentPoint& u) {
  if (u.y.norm() == 0.0) throw ModelError("slit bundle violated: y = 0");
  const MetricAt m = metric_at(spec, u.x);
  return std::sqrt(u.y.dot(m.g * u.y));
}

Eigen::MatrixXd nonlinear_connection(const MetricSpec& spec, const TangentPoint& u) {
  return make_context(spec, u).nlc;
}

TangentPoint homothety(const TangentPoint& u, double t) {
  if (t <= 0.0) throw ModelError("homothety parameter must be positive");
  return TangentPoint{u.x, t * u.y};
}

Eigen::MatrixXd frame_basis_matrix(const TmContext& ctx) {
  const int n = ctx.n;
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  P.topLeftCorner(n, n).setIdentity();
  P.bottomLeftCorner(n, n) = -ctx.nlc;
  P.bottomRightCorner(n, n).setIdentity();
  return P;
}

Eigen::VectorXd frame_to_coords(const TmContext& ctx, const FrameVector& V) {
  const int n = ctx.n;
  Eigen::VectorXd out(2 * n);
  out.head(n) = V.h;
  out.tail(n) = V.v - ctx.nlc * V.h;
  return out;
}

FrameVector coords_to_frame(const TmContext& ctx, const Eigen::VectorXd& W) {
  const int n = ctx.n;
  FrameVector out;
  out.h = W.head(n);
  out.v = W.tail(n) + ctx.nlc * W.head(n);
  return out;
}

double frame_derivative(const TmContext& ctx, const Jet2& f, int A) {
  const int n = ctx.n;
  if (A < n) {
    double v = f.grad()[A];
    for (int m = 0; m < n; ++m) v -= ctx.nlc(m, A) * f.grad()[n + m];
    return v;
  }
  return f.grad()[A];
}

Eigen::VectorXd frame_derivatives(const TmContext& ctx, const Jet2& f) {
  const int n = ctx.n;
  Eigen::VectorXd out(2 * n);
  for (int A = 0; A < 2 * n; ++A) out[A] = frame_derivative(ctx, f, A);
  return out;
}

FieldJets frame_field_jets(const TmContext& ctx, int A) {
  const int n = ctx.n;
  FieldJets F;
  F.c.assign(2 * n, Jet2(0.0, 2 * n));
  if (A < n) {
    F.c[A] = Jet2(1.0, 2 * n);
    for (int m = 0; m < n; ++m) F.c[n + m] = -ctx.nlc_jets(m, A);
  } else {
    F.c[A] = Jet2(1.0, 2 * n);
  }
  return F;
}

FieldJets scale_field(const Jet2& s, const FieldJets& F) {
  FieldJets out;
  out.c.reserve(F.c.size());
  for (const Jet2& ck : F.c) out.c.push_back(s * ck);
  return out;
}

Eigen::VectorXd lie_bracket_values(const FieldJets& V, const FieldJets& W) {
  const int d = static_cast<int>(V.c.size());
  Eigen::VectorXd out(d);
  for (int k = 0; k < d; ++k) {
    double v = 0.0;
    for (int m = 0; m < d; ++m)
      v += V.c[m].value() * W.c[k].grad()[m] - W.c[m].value() * V.c[k].grad()[m];
    out[k] = v;
  }
  return out;
}

FieldLin lie_bracket_fields(const FieldJets& V, const FieldJets& W) {
  const int d = static_cast<int>(V.c.size());
  FieldLin out;
  out.val = lie_bracket_values(V, W);
  out.jac.setZero(d, d);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) {
      double v = 0.0;
      for (int m = 0; m < d; ++m)
        v += V.c[m].grad()[l] * W.c[k].grad()[m] + V.c[m].value() * W.c[k].hess()(l, m) -
             W.c[m].grad()[l] * V.c[k].grad()[m] - W.c[m].value() * V.c[k].hess()(l, m);
      out.jac(k, l) = v;
    }
  return out;
}

Eigen::VectorXd lie_bracket_values(const FieldJets& V, const FieldLin& W) {
  const int d = static_cast<int>(V.c.size());
  Eigen::VectorXd out(d);
  for (int k = 0; k < d; ++k) {
    double v = 0.0;
    for (int m = 0; m < d; ++m)
      v += V.c[m].value() * W.jac(k, m) - W.val[m] * V.c[k].grad()[m];
    out[k] = v;
  }
  return out;
}

FrameVector lie_bracket_closed(const TmContext& ctx, int A, int B) {
  const int n = ctx.n;
  FrameVector out{Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n)};
  const bool Abar = is_vertical(A, n);
  const bool Bbar = is_vertical(B, n);

  if (!Abar && !Bbar) {
    // [X_i, X_j] = y^a K_{jia}^m X_mbar
    const int i = A, j = B;
    for (int m = 0; m < n; ++m) {
      double v = 0.0;
      for (int a = 0; a < n; ++a) v += ctx.u.y[a] * ctx.curv(j, i, a, m);
      out.v[m] = v;
    }
  } else if (!Abar && Bbar) {
    // [X_i, X_jbar] = Gamma^m_{ji} X_mbar
    const int i = A, j = B - n;
    for (int m = 0; m < n; ++m) out.v[m] = ctx.gamma(m, j, i);
  } else if (Abar && !Bbar) {
    const int i = B, j = A - n;
    for (int m = 0; m < n; ++m) out.v[m] = -ctx.gamma(m, j, i);
  }
  // vertical-vertical brackets vanish
  return out;
}

FrameVector lie_bracket_generic(const TmContext& ctx, int A, int B) {
  const FieldJets FA = frame_field_jets(ctx, A);
  const FieldJets FB = frame_field_jets(ctx, B);
  return coords_to_frame(ctx, lie_bracket_values(FA, FB));
}

Grid2<FrameVector> bracket_table(const TmContext& ctx) {
  const int n = ctx.n;
  const int d = 2 * n;
  std::vector<FieldJets> fields;
  fields.reserve(d);
  for (int A = 0; A < d; ++A) fields.push_back(frame_field_jets(ctx, A));

  Grid2<FrameVector> table(d, FrameVector{Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n)});
  for (int A = 0; A < d; ++A)
    for (int B = A + 1; B < d; ++B) {
      FrameVector br = coords_to_frame(ctx, lie_bracket_values(fields[A], fields[B]));
      table(B, A) = FrameVector{-br.h, -br.v};
      table(A, B) = std::move(br);
    }
  return table;
}

}  // namespace tmlift
