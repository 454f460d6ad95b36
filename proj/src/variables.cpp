#include "mathieu/variables.hpp"

#include <set>

#include "mathieu/errors.hpp"

namespace mathieu {

VariablesPtr VariableSet::make(std::vector<Variable> variables) {
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.name.empty()) throw DomainError("empty variable name");
    if (!seen.insert(v.name).second) throw DomainError("duplicate variable '" + v.name + "'");
  }
  return VariablesPtr(new VariableSet(std::move(variables)));
}

VariablesPtr VariableSet::make(const std::vector<std::string>& names) {
  std::vector<Variable> vars;
  vars.reserve(names.size());
  for (const auto& n : names) vars.push_back({n, false});
  return make(std::move(vars));
}

VariablesPtr VariableSet::laurent(const std::string& name) { return make(std::vector<Variable>{Variable{name, true}}); }

std::optional<std::size_t> VariableSet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t VariableSet::require(const std::string& name) const {
  if (auto i = index_of(name)) return *i;
  throw DomainError("unknown variable '" + name + "' (expected one of " + to_string() + ")");
}

std::string VariableSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) out += ", ";
    out += variables_[i].name;
    if (variables_[i].laurent) out += "^+-";
  }
  return out + "}";
}

bool same_variables(const VariablesPtr& a, const VariablesPtr& b) {
  return a == b || (a && b && *a == *b);
}

PhaseSpace PhaseSpace::make(std::size_t n) {
  std::vector<std::string> coords;
  std::vector<std::string> symbols;
  for (std::size_t i = 1; i <= n; ++i) symbols.push_back("w" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) coords.push_back("z" + std::to_string(i));
  symbols.insert(symbols.end(), coords.begin(), coords.end());
  return PhaseSpace{n, VariableSet::make(coords), VariableSet::make(symbols)};
}

VariablesPtr u_variables(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("u" + std::to_string(i));
  return VariableSet::make(names);
}

}  // namespace mathieu
