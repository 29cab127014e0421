// Metric lifts on the slit tangent bundle, in adapted-frame components:
// the complete lift, its norm-weighted 0-homogeneous variant, the two twin
// metrics, the associated almost symplectic forms, homothety pullbacks and a
// numerical exterior derivative for 2-forms in the adapted frame.

#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>

#include "tmlift/bundle.hpp"
#include "tmlift/structures.hpp"

namespace tmlift {

enum class LiftKind {
  CompleteLift,     // g2:  HV = VH = 2 g(x), HH = VV = 0
  HomogeneousLift,  // gt2: HV = VH = (2/||y||) g(x)
  TwinJ,            // hJ:  HH = -2 g, VV = (2/||y||^2) g
  TwinQ,            // hQ:  HH =  2 g, VV = (2/||y||^2) g
};

std::string lift_name(LiftKind k);

// 2n x 2n frame-component matrix G(X_A, X_B) at the point.
Eigen::MatrixXd frame_metric(const TmContext& ctx, LiftKind k);

// The same components as functions of the point, evaluated as jets.
Grid2<Jet2> frame_metric_jets(const TmContext& ctx, LiftKind k);

// Any frame metric evaluable at an arbitrary point, for pullbacks.
using MetricProducer =
    std::function<Eigen::MatrixXd(const MetricSpec&, const TangentPoint&)>;
MetricProducer lift_producer(LiftKind k);

// h_t-pullback of a frame metric, expressed in the adapted frame at u:
// evaluate at h_t(u), convert to induced components, contract with the
// homothety Jacobian diag(I, tI), convert back to the frame at u.
Eigen::MatrixXd pullback_homothety(const MetricSpec& spec, const TangentPoint& u, double t,
                                   const MetricProducer& producer);

enum class OmegaKind {
  TwinJWithProduct,  // Omega(X, Y) = hJ(Qt X, Y)
  TwinQWithComplex,  // Omega(X, Y) = hQ(Jt X, Y)
};

// Almost symplectic form from its definition through the twin metric.
Eigen::MatrixXd omega(const TmContext& ctx, OmegaKind k);
Grid2<Jet2> omega_jets(const TmContext& ctx, OmegaKind k);

// The closed-form coefficient displays, read with the same product
// convention as the metrics (no 1/2 in the wedge): the value at the basis
// slot equals the printed coefficient.
Eigen::MatrixXd omega_display(const TmContext& ctx, OmegaKind k);

// The weight-free 2-form g_ij(x) dx^i ^ dy-slot form whose exterior
// derivative vanishes identically; used as the reference closed form.
Grid2<Jet2> base_symplectic_jets(const TmContext& ctx);

// Exterior derivative of a 2-form given by its frame-component functions:
//   dw(A,B,C) = X_A w(B,C) - X_B w(A,C) + X_C w(A,B)
//             - w([X_A,X_B],C) + w([X_A,X_C],B) - w([X_B,X_C],A).
using FormField = std::function<Grid2<Jet2>(const TmContext&)>;
Grid3<double> exterior_derivative_2form(const TmContext& ctx, const FormField& form);

double max_component(const Grid3<double>& t);

// Least-squares fit of dW = kappa * (d||y||/||y||) ^ W over frame triples at
// the point; inconclusive when the wedge factor vanishes on the triples used
// (as it does for directions tangent to a norm level set).
struct ProportionalityFit {
  double kappa = 0.0;
  double residual = 0.0;
  bool conclusive = false;
};
ProportionalityFit proportionality_fit_domega(const TmContext& ctx, OmegaKind k);
ProportionalityFit proportionality_fit_domega(const TmContext& ctx, OmegaKind k,
                                              const std::vector<int>& directions);

}  // namespace tmlift
