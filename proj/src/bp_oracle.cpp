#include "netalign/bp_oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace netalign {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Unnormalized log-value tables over {0, 1}.
struct Tables {
  Eigen::VectorXd v0, v1;

  void zero(Eigen::Index n) {
    v0 = Eigen::VectorXd::Zero(n);
    v1 = Eigen::VectorXd::Zero(n);
  }
};

}  // namespace

BpMessages oracle_max_product(const ProblemInstance& inst, double alpha,
                              double beta, int t, int edge_cap,
                              int square_cap) {
  const CandidateGraph& l = inst.l;
  const SquaresMatrix& s = inst.squares;
  const int m = l.edge_count();
  const Eigen::Index nnz = s.nnz();
  if (m > edge_cap || s.square_count() > square_cap) {
    throw OracleScaleError(
        "max-product oracle refused: " + std::to_string(m) + " edges / " +
        std::to_string(s.square_count()) + " squares exceed cap " +
        std::to_string(edge_cap) + "/" + std::to_string(square_cap));
  }
  if (t < 0 || t > 10) {
    throw OracleScaleError("max-product oracle supports 0 <= t <= 10");
  }

  // Variable-to-factor tables. The edge variable's local potential
  // exp(alpha w x) is folded into its outgoing messages; f and g are pure
  // matching constraints and the square factor carries exp(beta/2 x_s).
  // Square variables have degree one, so their messages stay uniform.
  Tables var_f, var_g, var_h;   // from edge e toward f, g, h per slot (e,f)
  Tables fac_f, fac_g, fac_h;   // toward edge e; fac_h per slot (e,f)
  var_f.zero(m);
  var_g.zero(m);
  var_h.zero(nnz);

  for (int iter = 1; iter <= t; ++iter) {
    fac_f.zero(m);
    fac_g.zero(m);
    fac_h.zero(nnz);

    // Matching factor at each A vertex: with x_e = 1 every other edge is
    // off; with x_e = 0 at most one other edge may be on.
    for (int i = 0; i < l.rows(); ++i) {
      auto edges = l.edges_at_a(i);
      double sum0 = 0.0;
      for (int e : edges) sum0 += var_f.v0[e];
      double best = kNegInf, second = kNegInf;
      int best_e = -1;
      for (int e : edges) {
        const double gain = var_f.v1[e] - var_f.v0[e];
        if (gain > best) {
          second = best;
          best = gain;
          best_e = e;
        } else if (gain > second) {
          second = gain;
        }
      }
      for (int e : edges) {
        const double others0 = sum0 - var_f.v0[e];
        const double comp = best_e == e ? second : best;
        fac_f.v1[e] = others0;
        fac_f.v0[e] = others0 + std::max(0.0, comp);
      }
    }
    for (int ip = 0; ip < l.cols(); ++ip) {
      auto edges = l.edges_at_b(ip);
      double sum0 = 0.0;
      for (int e : edges) sum0 += var_g.v0[e];
      double best = kNegInf, second = kNegInf;
      int best_e = -1;
      for (int e : edges) {
        const double gain = var_g.v1[e] - var_g.v0[e];
        if (gain > best) {
          second = best;
          best = gain;
          best_e = e;
        } else if (gain > second) {
          second = gain;
        }
      }
      for (int e : edges) {
        const double others0 = sum0 - var_g.v0[e];
        const double comp = best_e == e ? second : best;
        fac_g.v1[e] = others0;
        fac_g.v0[e] = others0 + std::max(0.0, comp);
      }
    }

    // Square factor h_{ef} toward e: maximize over x_f and x_s = x_e x_f,
    // with the uniform square-variable message contributing nothing.
    for (int e = 0; e < m; ++e) {
      for (int k = s.row_begin(e); k < s.row_end(e); ++k) {
        const int kt = s.transpose_perm[k];  // slot (f,e): message f -> h
        fac_h.v1[k] =
            std::max(var_h.v0[kt], beta / 2.0 + var_h.v1[kt]);
        fac_h.v0[k] = std::max(var_h.v0[kt], var_h.v1[kt]);
      }
    }

    // Variable updates.
    Tables nvar_f, nvar_g, nvar_h;
    nvar_f.zero(m);
    nvar_g.zero(m);
    nvar_h.zero(nnz);
    for (int e = 0; e < m; ++e) {
      double hsum0 = 0.0, hsum1 = 0.0;
      for (int k = s.row_begin(e); k < s.row_end(e); ++k) {
        hsum0 += fac_h.v0[k];
        hsum1 += fac_h.v1[k];
      }
      const double w1 = alpha * l.weight(e);
      nvar_f.v0[e] = fac_g.v0[e] + hsum0;
      nvar_f.v1[e] = w1 + fac_g.v1[e] + hsum1;
      nvar_g.v0[e] = fac_f.v0[e] + hsum0;
      nvar_g.v1[e] = w1 + fac_f.v1[e] + hsum1;
      for (int k = s.row_begin(e); k < s.row_end(e); ++k) {
        nvar_h.v0[k] = fac_f.v0[e] + fac_g.v0[e] + hsum0 - fac_h.v0[k];
        nvar_h.v1[k] = w1 + fac_f.v1[e] + fac_g.v1[e] + hsum1 - fac_h.v1[k];
      }
    }
    var_f = std::move(nvar_f);
    var_g = std::move(nvar_g);
    var_h = std::move(nvar_h);
  }

  BpMessages out;
  out.y = var_f.v1 - var_f.v0;
  out.z = var_g.v1 - var_g.v0;
  out.sq = var_h.v1 - var_h.v0;
  return out;
}

}  // namespace netalign
