#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mathieu {

class VariableSet;
using VariablesPtr = std::shared_ptr<const VariableSet>;

/// Ordered list of distinct variable names. A variable flagged Laurent
/// admits negative exponents.
class VariableSet {
 public:
  struct Variable {
    std::string name;
    bool laurent = false;
    friend bool operator==(const Variable&, const Variable&) = default;
  };

  static VariablesPtr make(std::vector<Variable> variables);
  static VariablesPtr make(const std::vector<std::string>& names);
  /// Single Laurent variable, e.g. t for k[t, 1/t].
  static VariablesPtr laurent(const std::string& name);

  std::size_t size() const { return variables_.size(); }
  const Variable& operator[](std::size_t i) const { return variables_[i]; }
  const std::string& name(std::size_t i) const { return variables_[i].name; }
  bool is_laurent(std::size_t i) const { return variables_[i].laurent; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  /// Throws DomainError for unknown names.
  std::size_t require(const std::string& name) const;
  bool contains(const std::string& name) const { return index_of(name).has_value(); }

  friend bool operator==(const VariableSet& a, const VariableSet& b) {
    return a.variables_ == b.variables_;
  }

  std::string to_string() const;

 private:
  explicit VariableSet(std::vector<Variable> variables) : variables_(std::move(variables)) {}
  std::vector<Variable> variables_;
};

bool same_variables(const VariablesPtr& a, const VariablesPtr& b);

/// Coordinates of IC(n): symbol variables w1..wn (standing for zeta_i) and
/// z1..zn. `symbols` orders them w1..wn, z1..zn.
struct PhaseSpace {
  std::size_t n = 0;
  VariablesPtr coordinates;  // z1..zn
  VariablesPtr symbols;      // w1..wn, z1..zn

  static PhaseSpace make(std::size_t n);
  std::size_t symbol_index(std::size_t i) const { return i; }
  std::size_t coordinate_index(std::size_t i) const { return n + i; }
};

/// u1..un for polynomials in u_i = zeta_i z_i.
VariablesPtr u_variables(std::size_t n);

}  // namespace mathieu
