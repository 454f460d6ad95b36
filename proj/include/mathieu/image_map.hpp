#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mathieu/polynomial.hpp"
#include "mathieu/weyl.hpp"

namespace mathieu {

/// L(w^a z^b) = d^a(z^b), extended linearly. `f` lives over phase.symbols;
/// the result over phase.coordinates.
Polynomial l_map(const Polynomial& f, const PhaseSpace& phase);

/// f = sum_a t^a f_a with t_i = w_i - d/dz_i acting on k[w, z] and every
/// f_a a polynomial in z alone.
struct Decomposition {
  PhaseSpace phase;
  Ring ring;
  /// Multi-index a -> f_a over phase.coordinates. Zero components omitted.
  std::map<Exponents, Polynomial> components;

  /// f_0, the component at a = 0 (zero when absent).
  Polynomial constant_component() const;
};

/// t_i g = w_i g - dg/dz_i for g over phase.symbols.
Polynomial apply_t(const Polynomial& g, std::size_t i, const PhaseSpace& phase);
/// t^a g.
Polynomial apply_t_power(const Polynomial& g, const Exponents& a, const PhaseSpace& phase);

/// Eliminates w_order[0] first, then w_order[1], ...; the default order is
/// w1, w2, ..., wn. Characteristic zero only (integration divides by j+1).
Decomposition decompose(const Polynomial& f, const PhaseSpace& phase,
                        std::vector<std::size_t> order = {});
Polynomial recompose(const Decomposition& d);

/// Either h with sum_i (d/dz_i - w_i) h_i = f, or the obstruction L(f).
struct MembershipCertificate {
  bool member = false;
  std::vector<Polynomial> witness;   // over phase.symbols, one per i
  std::optional<Polynomial> residue;  // over phase.coordinates, nonzero
};

/// sum_i (d/dz_i - w_i) h_i.
Polynomial apply_witness(const std::vector<Polynomial>& h, const PhaseSpace& phase);
bool verify_witness(const Polynomial& f, const std::vector<Polynomial>& h, const PhaseSpace& phase);

/// Characteristic zero. Throws VerificationFailure if the decomposition
/// disagrees with l_map or the witness does not reproduce f.
MembershipCertificate certify_image(const Polynomial& f, const PhaseSpace& phase);

struct PowerScan {
  std::vector<Polynomial> values;  // L(f^m), m = 1..m_max
  std::optional<int> first_nonzero;
};

/// L(f^m) for m = 1..m_max with f^m built incrementally.
PowerScan power_scan(const Polynomial& f, int m_max, const PhaseSpace& phase);

/// sum c * prod a_i! for f = sum c u^a. Every variable carrying an exponent
/// must be named u<k> or u.
Scalar factorial_functional(const Polynomial& f);

/// Substitutes the k-th variable of f by w_k z_k.
Polynomial u_to_phase(const Polynomial& f, const PhaseSpace& phase);
/// Inverse of u_to_phase on polynomials all of whose terms are w^a z^a.
/// Throws DomainError otherwise.
Polynomial phase_to_u(const Polynomial& f, const PhaseSpace& phase);

struct MonomialCountScan {
  std::size_t monomials = 0;  // N
  int bound = 0;
  std::vector<Scalar> values;  // factorial_functional(f^m), m = 1..bound
  std::optional<int> first_nonzero;
  bool within_monomial_count = false;
};

/// Scans m = 1..bound for the first nonzero factorial_functional(f^m).
/// Defaults to bound = N; f must be nonzero and bound >= N.
MonomialCountScan monomial_count_scan(const Polynomial& f, std::optional<int> bound = {});

struct WitnessSearch {
  bool found = false;
  int degree_bound = 0;
  std::vector<Polynomial> witness;  // over D.coordinates()
};

/// Exact linear solve for p_i of total degree <= bound with
/// sum D_i(p_i) = b. Default bound: deg b + D.size(). A found witness is
/// re-verified; "not found" only means nothing exists up to the bound.
WitnessSearch bounded_witness_search(const DiffOperatorSpec& d, const Polynomial& b,
                                     std::optional<int> degree_bound = {});

/// The one-variable argument that L(f^m) = 0 for almost all m forces
/// Deg f <= -1: shift by w^r to Deg 0, keep the Deg-0 part, read it as
/// P(u) and scan the factorial functional of its powers.
struct Ic1Report {
  Degree deg;
  bool deg_negative = false;
  PowerScan scan;
  /// Present when Deg f >= 0.
  std::optional<Polynomial> shifted;  // w^r f
  std::optional<Polynomial> top_part;  // Deg-0 component of w^r f
  std::optional<Polynomial> u_polynomial;
  std::optional<MonomialCountScan> count_scan;
};

Ic1Report ic1_pipeline(const Polynomial& f, int m_max, const PhaseSpace& phase);

}  // namespace mathieu
