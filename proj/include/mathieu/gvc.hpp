#pragma once

#include <optional>
#include <vector>

#include "mathieu/image_map.hpp"
#include "mathieu/matrix.hpp"
#include "mathieu/weyl.hpp"

namespace mathieu {

using PolynomialMatrix = Matrix<Polynomial>;

/// Lambda^m(P^m) and Lambda^m(Q P^m) for m = 1..m_max, computed by applying
/// the operator and, independently, as L(f^m) and L(Q f^m) with
/// f = Lambda(w) P(z).
struct GvcScan {
  std::vector<Polynomial> premise_values;   // Lambda^m(P^m)
  std::vector<Polynomial> q_values;         // Lambda^m(Q P^m)
  std::vector<Polynomial> l_premise_values;  // L(f^m)
  std::vector<Polynomial> l_q_values;        // L(Q f^m)
  bool routes_agree = false;
  /// Largest m with Lambda^k(P^k) = 0 for all k <= m.
  int premise_held_through = 0;
  bool premise_holds = false;
  /// Least m0 with Lambda^m(Q P^m) = 0 for m0 <= m <= m_max.
  std::optional<int> stabilization_index;
  /// One variable with the premise holding: m > deg Q forces vanishing,
  /// so the stabilization index is at most deg Q + 1.
  std::optional<long> one_dimensional_bound;
  /// Every m with order(Lambda^m) > deg(Q P^m) gave zero, and the
  /// stabilization index respects one_dimensional_bound.
  bool bound_respected = true;
};

/// Lambda must have constant coefficients and act on phase.coordinates.
GvcScan gvc_scan(const WeylElement& lambda, const Polynomial& p, const Polynomial& q, int m_max,
                 const PhaseSpace& phase);

/// [dH_i/dz_j] over the variables of the H_i.
PolynomialMatrix jacobian_matrix(const std::vector<Polynomial>& h);
/// J^n == 0 for an n x n matrix.
bool is_nilpotent(const PolynomialMatrix& j);

struct Prop74Report {
  bool nilpotent = false;
  Polynomial f;  // sum w_i H_i
  PowerScan scan;
  /// nilpotent and every L(f^m) vanished, or not nilpotent and some
  /// L(f^m) was nonzero in range.
  bool agree = false;
};

/// H over phase.coordinates with no terms of degree <= 1 (checked).
Prop74Report prop74_crosscheck(const std::vector<Polynomial>& h, int m_max, const PhaseSpace& phase);

}  // namespace mathieu
