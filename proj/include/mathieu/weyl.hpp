#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mathieu/polynomial.hpp"

namespace mathieu {

/// Name of the derivation symbol paired with a coordinate: z3 -> d3,
/// anything else x -> d_x.
std::string derivation_name(const std::string& coordinate);

/// Coordinates followed by their derivation symbols; the variable set used
/// to write operators as text ("d1^2 + d2^2", "z1*d1 + 1").
VariablesPtr operator_variables(const VariablesPtr& coordinates);

/// Element of the Weyl algebra over the coordinates of a variable set, with
/// [d_i, x_j] = delta_ij. Stored in right-normal order x^a d^b.
class WeylElement {
 public:
  /// (coordinate exponents a, derivation exponents b) for x^a d^b.
  using Key = std::pair<Exponents, Exponents>;
  using TermMap = std::map<Key, Scalar>;

  /// The zero operator.
  WeylElement(Ring ring, VariablesPtr coordinates);

  static WeylElement scalar(Ring ring, VariablesPtr coordinates, const Scalar& c);
  static WeylElement scalar(Ring ring, VariablesPtr coordinates, long c);
  static WeylElement coordinate(Ring ring, VariablesPtr coordinates, const std::string& name);
  static WeylElement derivation(Ring ring, VariablesPtr coordinates, const std::string& name);
  /// Multiplication by a polynomial in the coordinates.
  static WeylElement multiplication(const Polynomial& p);
  static WeylElement normal_ordered(Ring ring, VariablesPtr coordinates, Exponents a,
                                    Exponents b, const Scalar& c);
  /// Reads a polynomial over operator_variables(coordinates) as a sum of
  /// right-normal monomials x^a d^b.
  static WeylElement from_right_normal(const Polynomial& p, const VariablesPtr& coordinates);

  const Ring& ring() const { return ring_; }
  const VariablesPtr& coordinates() const { return coords_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// No coordinate appears: an element of k[d_1, ..., d_n].
  bool is_constant_coefficient() const;
  /// Lowest total derivation degree among the terms; nullopt for zero.
  Degree order() const;

  WeylElement& operator+=(const WeylElement& rhs);
  WeylElement& operator-=(const WeylElement& rhs);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  /// Composition w1 o w2 (apply w2 first).
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  WeylElement operator-() const;
  WeylElement scaled(const Scalar& c) const;
  WeylElement pow(unsigned m) const;

  /// Action on polynomials in the coordinates.
  Polynomial apply(const Polynomial& f) const;

  /// The right-normal form as a polynomial over operator_variables().
  Polynomial to_polynomial() const;
  std::string to_string() const { return to_polynomial().to_string(); }

  friend bool operator==(const WeylElement& a, const WeylElement& b);

 private:
  void check_compatible(const WeylElement& rhs) const;
  void add_term(const Exponents& a, const Exponents& b, const Scalar& c);

  Ring ring_;
  VariablesPtr coords_;
  TermMap terms_;
};

WeylElement compose(const WeylElement& first, const WeylElement& second);
Polynomial apply(const WeylElement& w, const Polynomial& f);

/// Left symbol: write w as a combination of d^a z^b and map to w^a z^b in
/// the phase-space ring (w_i standing for zeta_i). `w` must act on
/// phase.coordinates.
Polynomial left_symbol(const WeylElement& w, const PhaseSpace& phase);
WeylElement left_symbol_inverse(const Polynomial& symbol, const PhaseSpace& phase);
/// Right symbol: z^a d^b maps to z^a w^b.
Polynomial right_symbol(const WeylElement& w, const PhaseSpace& phase);
WeylElement right_symbol_inverse(const Polynomial& symbol, const PhaseSpace& phase);

/// pi: sets every symbol variable w_i to zero, landing in k[z].
Polynomial kill_symbols(const Polynomial& f, const PhaseSpace& phase);

/// L computed through the symbol maps: pi o R o L^{-1}.
Polynomial l_map_via_symbols(const Polynomial& f, const PhaseSpace& phase);

/// A finite set of pairwise commuting operators; the generators of ImD.
class DiffOperatorSpec {
 public:
  /// Throws DomainError unless every pair commutes (compared in normal form).
  explicit DiffOperatorSpec(std::vector<WeylElement> operators);

  /// The operators d/dx_i - a_i over `coordinates`, one per listed
  /// coordinate name.
  static DiffOperatorSpec affine_shifts(const VariablesPtr& coordinates,
                                        const std::vector<std::string>& differentiated,
                                        const std::vector<Polynomial>& shifts);

  const std::vector<WeylElement>& operators() const { return operators_; }
  std::size_t size() const { return operators_.size(); }
  const Ring& ring() const { return operators_.front().ring(); }
  const VariablesPtr& coordinates() const { return operators_.front().coordinates(); }

  /// sum_i D_i(h_i).
  Polynomial apply(const std::vector<Polynomial>& witness) const;

 private:
  std::vector<WeylElement> operators_;
};

}  // namespace mathieu
