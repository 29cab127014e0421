// Endomorphism fields K with K^2 = eps I on the slit bundle: the plain and
// norm-weighted almost complex / almost product structures, their metric
// compatibility signs, and Nijenhuis tensors (generic field computation and
// the closed form for the weighted complex structure).

#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>

#include "tmlift/bundle.hpp"

namespace tmlift {

enum class StructureKind {
  PlainComplex,     // J:  X_i -> -X_ibar,       X_ibar -> X_i
  PlainProduct,     // Q:  X_i ->  X_ibar,       X_ibar -> X_i
  WeightedComplex,  // Jt: X_i -> -||y|| X_ibar, X_ibar -> X_i / ||y||
  WeightedProduct,  // Qt: X_i ->  ||y|| X_ibar, X_ibar -> X_i / ||y||
};

int structure_epsilon(StructureKind k);
std::string structure_name(StructureKind k);

FrameVector apply_structure(const TmContext& ctx, StructureKind k, const FrameVector& V);

// Frame-component matrix of K at the point: column A holds K(X_A).
Eigen::MatrixXd structure_matrix(const TmContext& ctx, StructureKind k);
Grid2<Jet2> structure_matrix_jets(const TmContext& ctx, StructureKind k);

// K(X_A) as a genuine vector field: the norm-weighted coefficients are
// functions of the point and get differentiated by the bracket machinery.
FieldJets structure_field(const TmContext& ctx, StructureKind k, int A);

// max_{A,B} |G(K X_A, K X_B) - sigma G(X_A, X_B)| for sigma = +1 / -1.
struct SigmaDefects {
  double plus, minus;
};
SigmaDefects metric_compatibility_sigma(const TmContext& ctx, StructureKind k,
                                        const Eigen::MatrixXd& G);

// Largest |K(K V) - eps V| over the frame basis.
double structure_square_defect(const TmContext& ctx, StructureKind k);

// Nijenhuis tensor values N(X_A, X_B) for all basis pairs, computed from
// generic brackets of the fields K X_A:
//   N(X, Y) = [KX, KY] - K[KX, Y] - K[X, KY] + eps [X, Y].
Grid2<FrameVector> nijenhuis_generic(const TmContext& ctx, StructureKind k);

// Closed form of the Nijenhuis tensor of the weighted complex structure:
//   N(X_i, X_j)       = (y_i d_j^s - y_j d_i^s - y^a K_{jia}^s) X_sbar
//   N(X_i, X_jbar)    = (y_i d_j^s - y_j d_i^s - y^a K_{jia}^s) X_s / ||y||^2
//   N(X_ibar, X_jbar) = (y_j d_i^s - y_i d_j^s + y^a K_{jia}^s) X_sbar / ||y||^2
Grid2<FrameVector> nijenhuis_weighted_complex_closed(const TmContext& ctx);

double max_component(const Grid2<FrameVector>& N);
double max_difference(const Grid2<FrameVector>& A, const Grid2<FrameVector>& B);

// Pullback of K through the fiber homothety, as a frame-component matrix at u:
// (dh_t)^{-1} K(h_t u) dh_t expressed in the adapted frame at u. Equals
// structure_matrix(ctx, k) exactly when K is fiber-homogeneous.
Eigen::MatrixXd structure_pullback_homothety(const MetricSpec& spec, const TangentPoint& u,
                                             double t, StructureKind k);

// Twin tensor h(X_A, X_B) = G(K X_A, X_B) of a (G, K) pair.
Eigen::MatrixXd twin_generic(const TmContext& ctx, StructureKind k, const Eigen::MatrixXd& G);

}  // namespace tmlift
