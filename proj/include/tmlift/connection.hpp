// Levi-Civita connections of the lifted metrics in the adapted frame.
//
// The Koszul solver is the ground truth: it derives the connection from the
// metric component functions and generic Lie brackets alone. The printed
// closed forms are treated as claims and compared family by family; the
// eight families are the barred/unbarred type combinations of (A, B, C) in
// nabla_{X_C} X_B = Gamma^A_{BC} X_A.

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "tmlift/bundle.hpp"
#include "tmlift/lifts.hpp"
#include "tmlift/structures.hpp"

namespace tmlift {

// gamma(A, B, C) with nabla_{X_C} X_B = gamma(A,B,C) X_A, adapted indices.
struct ConnectionCoeffs {
  Grid3<double> gamma;
  int n = 0;
};

// Levi-Civita connection of the frame metric G (components given as jets at
// the context point), solved from the frame Koszul formula. Throws
// ModelError on a degenerate Gram matrix.
ConnectionCoeffs koszul_levi_civita(const TmContext& ctx, const Grid2<Jet2>& G);

// Closed-form coefficient tables as printed, one per lifted metric.
// Items whose printed indices are defective are populated under a declared
// reading; connection_item_comparison reports how each family fares against
// the oracle and, for mismatches, the best-matching index pattern.
ConnectionCoeffs closed_form_connection(const TmContext& ctx, LiftKind k);

// max over basis pairs of |nabla_{X_A} X_B - nabla_{X_B} X_A - [X_A, X_B]|.
double torsion_defect(const TmContext& ctx, const ConnectionCoeffs& conn);

// Residuals of the six index-symmetry relations that torsion-freeness
// induces on the coefficient families (horizontal pair, mixed pairs,
// vertical pair), evaluated against the base data.
std::vector<double> torsion_symmetry_residuals(const TmContext& ctx,
                                               const ConnectionCoeffs& conn);

// max over (A,B,C) of |X_C G(A,B) - G(nabla_C A, B) - G(A, nabla_C B)|.
double metric_compatibility_defect(const TmContext& ctx, const ConnectionCoeffs& conn,
                                   const Grid2<Jet2>& G);

// The same residual split into the six (type(A), type(B) | type(C)) slices:
// (HH|H), (HV|H), (VV|H), (HH|V), (HV|V), (VV|V).
std::vector<double> compatibility_slices(const TmContext& ctx, const ConnectionCoeffs& conn,
                                         const Grid2<Jet2>& G);

// max component of (nabla_{X_C} K) X_B over the basis, where K's variable
// frame coefficients are differentiated along the frame.
double parallel_structure_defect(const TmContext& ctx, const ConnectionCoeffs& conn,
                                 StructureKind k);

// Comparison of one printed coefficient family against the oracle.
struct ItemReport {
  int item = 0;               // 1..8 as printed
  std::string printed;        // the reading in force
  double defect = 0.0;        // oracle vs printed reading
  bool matched = false;
  std::string best_pattern;   // filled for mismatches
  double best_defect = 0.0;
};

std::vector<ItemReport> connection_item_comparison(const TmContext& ctx, LiftKind k,
                                                   const ConnectionCoeffs& oracle,
                                                   double tol);

}  // namespace tmlift
