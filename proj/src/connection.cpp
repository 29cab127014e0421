#include "tmlift/connection.hpp"

#include <cmath>

namespace tmlift {

ConnectionCoeffs koszul_levi_civita(const TmContext& ctx, const Grid2<Jet2>& G) {
  const int n = ctx.n;
  const int d = 2 * n;

  Eigen::MatrixXd Gval(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) Gval(a, b) = G(a, b).value();

  Eigen::FullPivLU<Eigen::MatrixXd> lu(2.0 * Gval);
  if (!lu.isInvertible()) throw ModelError("degenerate frame metric in the Koszul solve");

  // X_A G(B,C) for all triples, from the component jets.
  std::vector<Eigen::VectorXd> dG(static_cast<size_t>(d) * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) dG[a * d + b] = frame_derivatives(ctx, G(a, b));

  const Grid2<FrameVector> br = bracket_table(ctx);
  const auto pair_with = [&](const FrameVector& V, int A) {
    double acc = 0.0;
    for (int E = 0; E < d; ++E) acc += V.coeff(E, n) * Gval(E, A);
    return acc;
  };

  ConnectionCoeffs conn;
  conn.n = n;
  conn.gamma = Grid3<double>(d, 0.0);

  Eigen::VectorXd rhs(d);
  for (int B = 0; B < d; ++B)
    for (int C = 0; C < d; ++C) {
      for (int A = 0; A < d; ++A) {
        rhs[A] = dG[B * d + A][C]      // X_C G(B, A)
                 + dG[C * d + A][B]    // X_B G(C, A)
                 - dG[C * d + B][A];   // X_A G(C, B)
        rhs[A] += pair_with(br(C, B), A) - pair_with(br(C, A), B) - pair_with(br(B, A), C);
      }
      const Eigen::VectorXd gam = lu.solve(rhs);
      for (int A = 0; A < d; ++A) conn.gamma(A, B, C) = gam[A];
    }
  return conn;
}

ConnectionCoeffs closed_form_connection(const TmContext& ctx, LiftKind kind) {
  const int n = ctx.n;
  const int d = 2 * n;
  const double r2 = ctx.norm * ctx.norm;
  const auto& y = ctx.u.y;
  const auto& yl = ctx.y_low;
  const auto kron = [](int a, int b) { return a == b ? 1.0 : 0.0; };

  ConnectionCoeffs conn;
  conn.n = n;
  conn.gamma = Grid3<double>(d, 0.0);
  auto& gm = conn.gamma;

  if (kind == LiftKind::HomogeneousLift) {
    for (int h = 0; h < n; ++h)
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
          gm(h, j, i) = ctx.gamma(h, j, i);                                   // (1)
          double c2 = 0.0;                                                    // (2), printed
          for (int a = 0; a < n; ++a) c2 += y[a] * ctx.curv(a, j, i, h);      //  reading K_{aji}^h
          gm(n + h, j, i) = c2;
          gm(h, n + j, i) = (ctx.g(i, j) * y[h] - kron(i, h) * yl[j]) / (2.0 * r2);  // (3)
          gm(h, j, n + i) = (ctx.g(i, j) * y[h] - kron(j, h) * yl[i]) / (2.0 * r2);  // (4)
          gm(n + h, n + j, i) = ctx.gamma(h, j, i);                           // (5)
          // (6), (7) stay zero
          gm(n + h, n + j, n + i) = -(kron(i, h) * yl[j] + kron(j, h) * yl[i]) / (2.0 * r2);  // (8)
        }
    return conn;
  }

  if (kind == LiftKind::TwinJ || kind == LiftKind::TwinQ) {
    // the two tables differ only in the sign of the curvature items (3), (4)
    const double s = (kind == LiftKind::TwinJ) ? -1.0 : 1.0;
    for (int h = 0; h < n; ++h)
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
          gm(h, j, i) = ctx.gamma(h, j, i);                                   // (1)
          double c2 = 0.0, c3 = 0.0, c4 = 0.0;
          for (int a = 0; a < n; ++a) {
            c2 += y[a] * ctx.curv(j, i, a, h);  // (2): (1/2) y^a K_{jia}^h
            c3 += y[a] * ctx.curv(a, j, i, h);  // (3): y^a K_{aji}^h
            c4 += y[a] * ctx.curv(a, i, j, h);  // (4): reading K_{aij}^h
          }
          gm(n + h, j, i) = 0.5 * c2;
          gm(h, n + j, i) = s * c3 / (2.0 * r2);
          gm(h, j, n + i) = s * c4 / (2.0 * r2);
          gm(n + h, n + j, i) = ctx.gamma(h, j, i);                           // (5)
          // (6), (7) stay zero
          gm(n + h, n + j, n + i) =
              (ctx.g(j, i) * y[h] - kron(j, h) * yl[i] - kron(i, h) * yl[j]) / r2;  // (8)
        }
    return conn;
  }

  throw ModelError("no printed closed form for this lift");
}

double torsion_defect(const TmContext& ctx, const ConnectionCoeffs& conn) {
  const int n = ctx.n;
  const int d = 2 * n;
  const Grid2<FrameVector> br = bracket_table(ctx);

  double m = 0.0;
  for (int A = 0; A < d; ++A)
    for (int B = A + 1; B < d; ++B)
      for (int E = 0; E < d; ++E) {
        const double v =
            conn.gamma(E, B, A) - conn.gamma(E, A, B) - br(A, B).coeff(E, n);
        m = std::max(m, std::abs(v));
      }
  return m;
}

std::vector<double> torsion_symmetry_residuals(const TmContext& ctx,
                                               const ConnectionCoeffs& conn) {
  const int n = ctx.n;
  const auto& gm = conn.gamma;
  std::vector<double> r(6, 0.0);

  for (int h = 0; h < n; ++h)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        // (1) horizontal pair, horizontal output
        r[0] = std::max(r[0], std::abs(gm(h, j, i) - gm(h, i, j)));
        // (2) horizontal pair, vertical output, curvature offset
        double k = 0.0;
        for (int a = 0; a < n; ++a) k += ctx.u.y[a] * ctx.curv(j, i, a, h);
        r[1] = std::max(r[1], std::abs(gm(n + h, j, i) - gm(n + h, i, j) - k));
        // (3), (4) mixed pair written from both sides
        r[2] = std::max(r[2], std::abs(gm(h, n + j, i) - gm(h, i, n + j)));
        r[3] = std::max(r[3],
                        std::abs(gm(n + h, n + j, i) - gm(n + h, i, n + j) - ctx.gamma(h, j, i)));
        // (5) mixed pair, horizontal output
        r[4] = std::max(r[4], std::abs(gm(h, j, n + i) - gm(h, n + i, j)));
        // (6) vertical pair symmetry (both outputs)
        r[5] = std::max(r[5], std::abs(gm(h, n + j, n + i) - gm(h, n + i, n + j)));
        r[5] = std::max(r[5], std::abs(gm(n + h, n + j, n + i) - gm(n + h, n + i, n + j)));
      }
  return r;
}

double metric_compatibility_defect(const TmContext& ctx, const ConnectionCoeffs& conn,
                                   const Grid2<Jet2>& G) {
  const auto slices = compatibility_slices(ctx, conn, G);
  double m = 0.0;
  for (double s : slices) m = std::max(m, s);
  return m;
}

std::vector<double> compatibility_slices(const TmContext& ctx, const ConnectionCoeffs& conn,
                                         const Grid2<Jet2>& G) {
  const int n = ctx.n;
  const int d = 2 * n;

  Eigen::MatrixXd Gval(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) Gval(a, b) = G(a, b).value();

  std::vector<double> slices(6, 0.0);
  const auto slice_of = [n](int A, int B, int C) {
    const int ta = A < n ? 0 : 1;
    const int tb = B < n ? 0 : 1;
    const int tc = C < n ? 0 : 1;
    const int pair = ta + tb;  // 0: HH, 1: HV, 2: VV
    return tc * 3 + pair;
  };

  for (int C = 0; C < d; ++C)
    for (int A = 0; A < d; ++A)
      for (int B = A; B < d; ++B) {
        double v = frame_derivative(ctx, G(A, B), C);
        for (int E = 0; E < d; ++E)
          v -= conn.gamma(E, A, C) * Gval(E, B) + conn.gamma(E, B, C) * Gval(A, E);
        auto& s = slices[slice_of(A, B, C)];
        s = std::max(s, std::abs(v));
      }
  return slices;
}

double parallel_structure_defect(const TmContext& ctx, const ConnectionCoeffs& conn,
                                 StructureKind k) {
  const int n = ctx.n;
  const int d = 2 * n;

  const Grid2<Jet2> M = structure_matrix_jets(ctx, k);
  // w[B]: the single nonzero coefficient of K X_B, sigma[B]: its frame slot.
  std::vector<Jet2> w(d);
  std::vector<int> sig(d);
  for (int B = 0; B < d; ++B) {
    sig[B] = B < n ? B + n : B - n;
    w[B] = M(sig[B], B);
  }

  double m = 0.0;
  Eigen::VectorXd out(d);
  for (int C = 0; C < d; ++C)
    for (int B = 0; B < d; ++B) {
      out.setZero();
      out[sig[B]] += frame_derivative(ctx, w[B], C);
      for (int E = 0; E < d; ++E) {
        out[E] += w[B].value() * conn.gamma(E, sig[B], C);
        out[sig[E]] -= conn.gamma(E, B, C) * w[E].value();
      }
      m = std::max(m, out.cwiseAbs().maxCoeff());
    }
  return m;
}

namespace {

// Curvature contraction sum_a y^a K_{(slots)}^h where the three lower slots
// hold (a, j, i) in the order given by perm.
double contract_pattern(const TmContext& ctx, int perm, int j, int i, int h) {
  double acc = 0.0;
  const int n = ctx.n;
  for (int a = 0; a < n; ++a) {
    int s0 = 0, s1 = 0, s2 = 0;
    switch (perm) {
      case 0: s0 = a; s1 = j; s2 = i; break;
      case 1: s0 = a; s1 = i; s2 = j; break;
      case 2: s0 = j; s1 = a; s2 = i; break;
      case 3: s0 = j; s1 = i; s2 = a; break;
      case 4: s0 = i; s1 = a; s2 = j; break;
      case 5: s0 = i; s1 = j; s2 = a; break;
    }
    acc += ctx.u.y[a] * ctx.curv(s0, s1, s2, h);
  }
  return acc;
}

const char* pattern_name(int perm) {
  switch (perm) {
    case 0: return "y^a K_{aji}^h";
    case 1: return "y^a K_{aij}^h";
    case 2: return "y^a K_{jai}^h";
    case 3: return "y^a K_{jia}^h";
    case 4: return "y^a K_{iaj}^h";
    case 5: return "y^a K_{ija}^h";
  }
  return "?";
}

struct ItemSlice {
  // maps (h, j, i) to the gamma entry of this family
  int abar, bbar, cbar;  // 0/1 type of output, field, direction index
};

// items 1..8 in the printed order shared by the three tables
constexpr ItemSlice kSlices[8] = {
    {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1},
};

}  // namespace

std::vector<ItemReport> connection_item_comparison(const TmContext& ctx, LiftKind kind,
                                                   const ConnectionCoeffs& oracle,
                                                   double tol) {
  const int n = ctx.n;
  const ConnectionCoeffs closed = closed_form_connection(ctx, kind);
  const double r2 = ctx.norm * ctx.norm;

  static const char* kPrintedHomogeneous[8] = {
      "Gamma^h_{ji}",
      "y^a K_{aji}^h  (printed with an index missing)",
      "(g_ij y^h - d_i^h y_j) / (2||y||^2)",
      "(g_ij y^h - d_j^h y_i) / (2||y||^2)",
      "Gamma^h_{ji}",
      "0",
      "0",
      "-(d_i^h y_j + d_j^h y_i) / (2||y||^2)",
  };
  static const char* kPrintedTwin[8] = {
      "Gamma^h_{ji}",
      "(1/2) y^a K_{jia}^h",
      "-+ y^a K_{aji}^h / (2||y||^2)",
      "-+ y^a K_{aij}^h / (2||y||^2)  (printed with a stray bar)",
      "Gamma^h_{ji}",
      "0",
      "0",
      "(g_ji y^h - d_j^h y_i - d_i^h y_j) / ||y||^2",
  };

  std::vector<ItemReport> out;
  for (int item = 0; item < 8; ++item) {
    const ItemSlice& sl = kSlices[item];
    ItemReport rep;
    rep.item = item + 1;
    rep.printed = (kind == LiftKind::HomogeneousLift) ? kPrintedHomogeneous[item]
                                                      : kPrintedTwin[item];

    double defect = 0.0;
    for (int h = 0; h < n; ++h)
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
          const int A = sl.abar ? n + h : h;
          const int B = sl.bbar ? n + j : j;
          const int C = sl.cbar ? n + i : i;
          defect = std::max(defect,
                            std::abs(closed.gamma(A, B, C) - oracle.gamma(A, B, C)));
        }
    rep.defect = defect;
    rep.matched = defect <= tol;

    // For mismatching curvature-contraction items, search index patterns and
    // coefficients for the best fit to the oracle.
    const bool curvature_item =
        (item == 1) || (kind != LiftKind::HomogeneousLift && (item == 2 || item == 3));
    if (!rep.matched && curvature_item) {
      double best = defect;
      std::string best_name;
      const double scale = (item == 1) ? 1.0 : 1.0 / r2;
      for (int perm = 0; perm < 6; ++perm)
        for (const double coeff : {1.0, 0.5, -1.0, -0.5}) {
          double d = 0.0;
          for (int h = 0; h < n; ++h)
            for (int j = 0; j < n; ++j)
              for (int i = 0; i < n; ++i) {
                const int A = sl.abar ? n + h : h;
                const int B = sl.bbar ? n + j : j;
                const int C = sl.cbar ? n + i : i;
                const double v = coeff * scale * contract_pattern(ctx, perm, j, i, h);
                d = std::max(d, std::abs(v - oracle.gamma(A, B, C)));
              }
          if (d < best) {
            best = d;
            best_name = (coeff == 1.0   ? ""
                         : coeff == 0.5 ? "(1/2) "
                         : coeff == -1.0 ? "-"
                                         : "-(1/2) ") +
                        std::string(pattern_name(perm)) +
                        (item == 1 ? "" : " / ||y||^2");
          }
        }
      rep.best_defect = best;
      rep.best_pattern = best_name;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace tmlift
