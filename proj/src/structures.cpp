#include "tmlift/structures.hpp"

#include <cmath>

namespace tmlift {

int structure_epsilon(StructureKind k) {
  return (k == StructureKind::PlainComplex || k == StructureKind::WeightedComplex) ? -1 : 1;
}

std::string structure_name(StructureKind k) {
  switch (k) {
    case StructureKind::PlainComplex: return "J";
    case StructureKind::PlainProduct: return "Q";
    case StructureKind::WeightedComplex: return "J~";
    case StructureKind::WeightedProduct: return "Q~";
  }
  return "?";
}

namespace {

// horizontal weight: coefficient of X_ibar in K(X_i); vertical weight:
// coefficient of X_i in K(X_ibar).
void weights(const TmContext& ctx, StructureKind k, double& wh, double& wv) {
  switch (k) {
    case StructureKind::PlainComplex: wh = -1.0; wv = 1.0; break;
    case StructureKind::PlainProduct: wh = 1.0; wv = 1.0; break;
    case StructureKind::WeightedComplex: wh = -ctx.norm; wv = 1.0 / ctx.norm; break;
    case StructureKind::WeightedProduct: wh = ctx.norm; wv = 1.0 / ctx.norm; break;
  }
}

void weight_jets(const TmContext& ctx, StructureKind k, Jet2& wh, Jet2& wv) {
  const Jet2 one(1.0, 2 * ctx.n);
  switch (k) {
    case StructureKind::PlainComplex: wh = -one; wv = one; break;
    case StructureKind::PlainProduct: wh = one; wv = one; break;
    case StructureKind::WeightedComplex: wh = -ctx.norm_jet; wv = ctx.norm_jet.reciprocal(); break;
    case StructureKind::WeightedProduct: wh = ctx.norm_jet; wv = ctx.norm_jet.reciprocal(); break;
  }
}

}  // namespace

FrameVector apply_structure(const TmContext& ctx, StructureKind k, const FrameVector& V) {
  double wh, wv;
  weights(ctx, k, wh, wv);
  return FrameVector{wv * V.v, wh * V.h};
}

Eigen::MatrixXd structure_matrix(const TmContext& ctx, StructureKind k) {
  const int n = ctx.n;
  double wh, wv;
  weights(ctx, k, wh, wv);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  M.bottomLeftCorner(n, n) = wh * Eigen::MatrixXd::Identity(n, n);
  M.topRightCorner(n, n) = wv * Eigen::MatrixXd::Identity(n, n);
  return M;
}

Grid2<Jet2> structure_matrix_jets(const TmContext& ctx, StructureKind k) {
  const int n = ctx.n;
  Jet2 wh, wv;
  weight_jets(ctx, k, wh, wv);
  Grid2<Jet2> M(2 * n, Jet2(0.0, 2 * n));
  for (int i = 0; i < n; ++i) {
    M(n + i, i) = wh;
    M(i, n + i) = wv;
  }
  return M;
}

FieldJets structure_field(const TmContext& ctx, StructureKind k, int A) {
  const int n = ctx.n;
  Jet2 wh, wv;
  weight_jets(ctx, k, wh, wv);
  if (A < n) return scale_field(wh, frame_field_jets(ctx, A + n));
  return scale_field(wv, frame_field_jets(ctx, A - n));
}

SigmaDefects metric_compatibility_sigma(const TmContext& ctx, StructureKind k,
                                        const Eigen::MatrixXd& G) {
  const Eigen::MatrixXd M = structure_matrix(ctx, k);
  const Eigen::MatrixXd GK = M.transpose() * G * M;
  SigmaDefects d;
  d.plus = (GK - G).cwiseAbs().maxCoeff();
  d.minus = (GK + G).cwiseAbs().maxCoeff();
  return d;
}

double structure_square_defect(const TmContext& ctx, StructureKind k) {
  const int n = ctx.n;
  const double eps = structure_epsilon(k);
  const Eigen::MatrixXd M = structure_matrix(ctx, k);
  return (M * M - eps * Eigen::MatrixXd::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff();
}

Grid2<FrameVector> nijenhuis_generic(const TmContext& ctx, StructureKind k) {
  const int n = ctx.n;
  const int d = 2 * n;
  const double eps = structure_epsilon(k);

  std::vector<FieldJets> base, mapped;
  base.reserve(d);
  mapped.reserve(d);
  for (int A = 0; A < d; ++A) {
    base.push_back(frame_field_jets(ctx, A));
    mapped.push_back(structure_field(ctx, k, A));
  }

  const FrameVector zero{Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n)};
  Grid2<FrameVector> N(d, zero);
  for (int A = 0; A < d; ++A)
    for (int B = A + 1; B < d; ++B) {
      const FrameVector t1 =
          coords_to_frame(ctx, lie_bracket_values(mapped[A], mapped[B]));
      const FrameVector t2 = apply_structure(
          ctx, k, coords_to_frame(ctx, lie_bracket_values(mapped[A], base[B])));
      const FrameVector t3 = apply_structure(
          ctx, k, coords_to_frame(ctx, lie_bracket_values(base[A], mapped[B])));
      const FrameVector t4 = coords_to_frame(ctx, lie_bracket_values(base[A], base[B]));

      FrameVector val;
      val.h = t1.h - t2.h - t3.h + eps * t4.h;
      val.v = t1.v - t2.v - t3.v + eps * t4.v;
      N(B, A) = FrameVector{-val.h, -val.v};
      N(A, B) = std::move(val);
    }
  return N;
}

Grid2<FrameVector> nijenhuis_weighted_complex_closed(const TmContext& ctx) {
  const int n = ctx.n;
  const int d = 2 * n;
  const double r2 = ctx.norm * ctx.norm;

  // common core C^s_{ij} = y_i d_j^s - y_j d_i^s - y^a K_{jia}^s
  Grid3<double> core(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int s = 0; s < n; ++s) {
        double v = ctx.y_low[i] * (j == s ? 1.0 : 0.0) - ctx.y_low[j] * (i == s ? 1.0 : 0.0);
        for (int a = 0; a < n; ++a) v -= ctx.u.y[a] * ctx.curv(j, i, a, s);
        core(i, j, s) = v;
      }

  const FrameVector zero{Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n)};
  Grid2<FrameVector> N(d, zero);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j) {
        FrameVector hh = zero;
        FrameVector vv = zero;
        for (int s = 0; s < n; ++s) {
          hh.v[s] = core(i, j, s);
          vv.v[s] = -core(i, j, s) / r2;
        }
        N(i, j) = hh;
        N(n + i, n + j) = vv;
      }
      FrameVector hv = zero;
      for (int s = 0; s < n; ++s) hv.h[s] = core(i, j, s) / r2;
      N(i, n + j) = hv;
      N(n + j, i) = FrameVector{-hv.h, -hv.v};
    }
  return N;
}

double max_component(const Grid2<FrameVector>& N) {
  double m = 0.0;
  const int d = N.extent();
  for (int A = 0; A < d; ++A)
    for (int B = 0; B < d; ++B) {
      const FrameVector& f = N(A, B);
      if (f.h.size() > 0) m = std::max({m, f.h.cwiseAbs().maxCoeff(), f.v.cwiseAbs().maxCoeff()});
    }
  return m;
}

double max_difference(const Grid2<FrameVector>& A, const Grid2<FrameVector>& B) {
  double m = 0.0;
  const int d = A.extent();
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      m = std::max(m, (A(p, q).h - B(p, q).h).cwiseAbs().maxCoeff());
      m = std::max(m, (A(p, q).v - B(p, q).v).cwiseAbs().maxCoeff());
    }
  return m;
}

Eigen::MatrixXd structure_pullback_homothety(const MetricSpec& spec, const TangentPoint& u,
                                             double t, StructureKind k) {
  const int n = spec.dim();
  const TmContext here = make_context(spec, u);
  const TmContext there = make_context(spec, homothety(u, t));

  // induced-coordinate matrix of K at h_t(u)
  const Eigen::MatrixXd P_there = frame_basis_matrix(there);
  const Eigen::MatrixXd K_there =
      P_there * structure_matrix(there, k) * P_there.inverse();

  Eigen::MatrixXd Jac = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  Jac.bottomRightCorner(n, n) *= t;

  const Eigen::MatrixXd K_pulled = Jac.inverse() * K_there * Jac;
  const Eigen::MatrixXd P_here = frame_basis_matrix(here);
  return P_here.inverse() * K_pulled * P_here;
}

Eigen::MatrixXd twin_generic(const TmContext& ctx, StructureKind k, const Eigen::MatrixXd& G) {
  const Eigen::MatrixXd M = structure_matrix(ctx, k);
  return M.transpose() * G;
}

}  // namespace tmlift
