// The slit tangent bundle over a chart: norm of y, nonlinear connection,
// adapted frame {X_h, X_hbar}, frame-directional derivatives and Lie
// brackets (closed form and a generic jet-based oracle), and the fiber
// homothety h_t.
//
// Adapted indices run 0..2n-1 with the vertical (barred) half stored as
// n..2n-1. A vector field on TM is represented by its 2n induced-coordinate
// coefficient functions evaluated as jets at the working point, which is
// enough to take one bracket exactly and a second bracket to value level.

#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "tmlift/grid.hpp"
#include "tmlift/jet.hpp"
#include "tmlift/metric.hpp"

namespace tmlift {

struct TangentPoint {
  Eigen::VectorXd x, y;
};

struct FrameVector {
  Eigen::VectorXd h, v;

  double coeff(int A, int n) const { return A < n ? h[A] : v[A - n]; }
  Eigen::VectorXd stacked() const {
    Eigen::VectorXd out(h.size() + v.size());
    out << h, v;
    return out;
  }
  static FrameVector from_stacked(const Eigen::VectorXd& s) {
    const int n = static_cast<int>(s.size()) / 2;
    return FrameVector{s.head(n), s.tail(n)};
  }
};

inline bool is_vertical(int A, int n) { return A >= n; }

// Everything repeatedly needed at one point of the slit bundle, precomputed.
// Jet quantities carry 2n active variables (x first, then y).
struct TmContext {
  const MetricSpec* spec = nullptr;
  TangentPoint u;
  int n = 0;

  // numeric data
  Eigen::MatrixXd g, ginv;       // g_ij(x), g^ij(x)
  Grid3<double> gamma;           // Gamma^k_{ij}
  Grid4<double> curv;            // K_{jih}^s
  Eigen::MatrixXd nlc;           // N^m_j = y^a Gamma^m_{aj}
  Eigen::VectorXd y_low;         // y_i = g_ij y^j
  double norm = 0.0;             // ||y||

  // jet data over the 2n bundle coordinates
  std::vector<Jet2> xy;          // lifted coordinates
  Grid2<Jet2> g_jets;
  Grid3<Jet2> gamma_jets;
  Grid2<Jet2> nlc_jets;          // N^m_j, index order (m, j)
  Jet2 norm_jet;
};

TmContext make_context(const MetricSpec& spec, const TangentPoint& u);

double norm_y(const MetricSpec& spec, const TangentPoint& u);

Eigen::MatrixXd nonlinear_connection(const MetricSpec& spec, const TangentPoint& u);

// t > 0 scales the fiber coordinate: (x, y) -> (x, t y).
TangentPoint homothety(const TangentPoint& u, double t);

// Change of basis between the adapted frame and the induced coordinate
// frame (d/dx, d/dy). Columns of frame_basis_matrix are X_A in coordinates.
Eigen::VectorXd frame_to_coords(const TmContext& ctx, const FrameVector& V);
FrameVector coords_to_frame(const TmContext& ctx, const Eigen::VectorXd& W);
Eigen::MatrixXd frame_basis_matrix(const TmContext& ctx);

// Directional derivative of a scalar function along X_A, from the function's
// jet at the context point: X_i f = df/dx^i - N^m_i df/dy^m, X_ibar f = df/dy^i.
double frame_derivative(const TmContext& ctx, const Jet2& f, int A);

// Same, returning all 2n directional derivatives at once.
Eigen::VectorXd frame_derivatives(const TmContext& ctx, const Jet2& f);

// A vector field near the context point: 2n induced-coordinate coefficients
// as jets. Good for one exact bracket; a second application keeps values only.
struct FieldJets {
  std::vector<Jet2> c;
};

// Bracket value plus first derivatives of its coefficients.
struct FieldLin {
  Eigen::VectorXd val;
  Eigen::MatrixXd jac;  // jac(k, m) = d_m [bracket]^k
};

FieldJets frame_field_jets(const TmContext& ctx, int A);
FieldJets scale_field(const Jet2& s, const FieldJets& F);

FieldLin lie_bracket_fields(const FieldJets& V, const FieldJets& W);
Eigen::VectorXd lie_bracket_values(const FieldJets& V, const FieldJets& W);
// Outer bracket for nested expressions such as the Jacobi identity; W is only
// known to first order, so the result is value-level.
Eigen::VectorXd lie_bracket_values(const FieldJets& V, const FieldLin& W);

// Lemma-style closed forms of the adapted-frame brackets:
//   [X_i, X_j] = y^a K_{jia}^m X_mbar, [X_i, X_jbar] = Gamma^m_{ji} X_mbar,
//   [X_ibar, X_jbar] = 0.
FrameVector lie_bracket_closed(const TmContext& ctx, int A, int B);

// Oracle: the same bracket computed in induced coordinates from jets of the
// frame coefficient functions.
FrameVector lie_bracket_generic(const TmContext& ctx, int A, int B);

// All pairs at once (generic), as frame components; table(A,B) row = [X_A,X_B].
Grid2<FrameVector> bracket_table(const TmContext& ctx);

}  // namespace tmlift
