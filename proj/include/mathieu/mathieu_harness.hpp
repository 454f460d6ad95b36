#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mathieu/errors.hpp"
#include "mathieu/image_map.hpp"
#include "mathieu/matrix.hpp"
#include "mathieu/ortho.hpp"
#include "mathieu/polynomial.hpp"

namespace mathieu {

/// Outcome of one membership test, with the quantity that decided it
/// (L(f), a constant term, a trace, ...) in text form.
struct Membership {
  bool member = false;
  std::string value;
};

/// Algebra operations the harness needs from an element type.
template <class T>
struct AlgebraOps;

template <>
struct AlgebraOps<Polynomial> {
  static Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
  static Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }
  static Polynomial scale(const Polynomial& a, const Scalar& c) { return a.scaled(c); }
  static Polynomial one_like(const Polynomial& a) { return a.one_like(); }
  static Ring ring(const Polynomial& a) { return a.ring(); }
  static std::string to_string(const Polynomial& a) { return a.to_string(); }
};

template <>
struct AlgebraOps<ScalarMatrix> {
  static ScalarMatrix add(const ScalarMatrix& a, const ScalarMatrix& b) { return a + b; }
  static ScalarMatrix mul(const ScalarMatrix& a, const ScalarMatrix& b) { return a * b; }
  static ScalarMatrix scale(const ScalarMatrix& a, const Scalar& c) {
    ScalarMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * c;
    }
    return out;
  }
  static ScalarMatrix one_like(const ScalarMatrix& a) { return scalar_identity(ring(a), a.rows()); }
  static Ring ring(const ScalarMatrix& a) { return a.zero().ring(); }
  static std::string to_string(const ScalarMatrix& a) { return mathieu::to_string(a); }
};

/// A named linear subspace M of an algebra, given by an exact membership
/// test. The test throws RingMismatch for elements of another algebra.
template <class T>
class SubspaceOracle {
 public:
  using Test = std::function<Membership(const T&)>;

  /// Runs the linearity self-test on `samples` (sums and scalar multiples
  /// of members stay members); throws DomainError when it fails.
  SubspaceOracle(std::string name, std::string algebra, Test test, const std::vector<T>& samples = {})
      : name_(std::move(name)), algebra_(std::move(algebra)), test_(std::move(test)) {
    self_test(samples);
  }

  const std::string& name() const { return name_; }
  const std::string& algebra() const { return algebra_; }
  Membership test(const T& x) const { return test_(x); }
  bool contains(const T& x) const { return test_(x).member; }

  void self_test(const std::vector<T>& samples) const {
    using Ops = AlgebraOps<T>;
    std::vector<T> members;
    for (const auto& s : samples) {
      if (contains(s)) members.push_back(s);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Ring ring = Ops::ring(members[i]);
      Scalar c = Scalar::from_integer(ring, 2);
      if (c.is_zero()) c = Scalar::one(ring);
      if (!contains(Ops::scale(members[i], c)) || !contains(Ops::scale(members[i], -c))) {
        throw DomainError(name_ + " is not closed under scalar multiples");
      }
      for (std::size_t j = i; j < members.size(); ++j) {
        if (!contains(Ops::add(members[i], members[j]))) {
          throw DomainError(name_ + " is not closed under addition");
        }
      }
    }
  }

 private:
  std::string name_;
  std::string algebra_;
  Test test_;
};

struct Violation {
  int m = 0;
  std::string element;
  std::string value;
};

struct GResult {
  std::string g;
  /// Least m0 with g f^m in M for every m0 <= m <= m_max.
  std::optional<int> stabilization_index;
  /// Set when g f^{m_max} is not in M.
  std::optional<Violation> violation;
  std::vector<int> failing_m;
};

enum class Verdict { premise_failed, consistent, violation_witness };

std::string to_string(Verdict v);

struct ScanReport {
  std::string oracle;
  std::string f;
  int m_max = 0;
  /// Largest m with f^1..f^m in M.
  int premise_held_through = 0;
  std::optional<Violation> premise_failure;
  std::vector<GResult> g_results;
  Verdict verdict = Verdict::consistent;
};

/// Tests f^m in M for m <= m_max; if that holds throughout, tests g f^m for
/// every g. A bounded scan reports either consistency up to m_max or a
/// concrete element outside M; it never proves the Mathieu property.
template <class T>
ScanReport mathieu_scan(const SubspaceOracle<T>& oracle, const T& f, const std::vector<T>& gs, int m_max) {
  using Ops = AlgebraOps<T>;
  if (m_max < 1) throw DomainError("m_max must be at least 1");
  ScanReport report;
  report.oracle = oracle.name();
  report.f = Ops::to_string(f);
  report.m_max = m_max;
  std::vector<T> powers;
  powers.reserve(static_cast<std::size_t>(m_max));
  for (int m = 1; m <= m_max; ++m) {
    powers.push_back(m == 1 ? f : Ops::mul(powers.back(), f));
    const Membership result = oracle.test(powers.back());
    if (!result.member) {
      report.premise_failure = Violation{m, Ops::to_string(powers.back()), result.value};
      report.verdict = Verdict::premise_failed;
      return report;
    }
    report.premise_held_through = m;
  }
  for (const T& g : gs) {
    GResult row;
    row.g = Ops::to_string(g);
    std::optional<Violation> last;
    for (int m = 1; m <= m_max; ++m) {
      const T element = Ops::mul(g, powers[static_cast<std::size_t>(m - 1)]);
      const Membership result = oracle.test(element);
      if (!result.member) {
        row.failing_m.push_back(m);
        last = Violation{m, Ops::to_string(element), result.value};
      }
    }
    if (row.failing_m.empty()) {
      row.stabilization_index = 1;
    } else if (row.failing_m.back() < m_max) {
      row.stabilization_index = row.failing_m.back() + 1;
    } else {
      row.violation = last;
      report.verdict = Verdict::violation_witness;
    }
    report.g_results.push_back(std::move(row));
  }
  return report;
}

/// Recomputes g f^m and confirms it lies outside M and matches the stored
/// element text.
template <class T>
bool reverify_violation(const SubspaceOracle<T>& oracle, const T& f, const T& g, const Violation& v) {
  using Ops = AlgebraOps<T>;
  T power = f;
  for (int m = 2; m <= v.m; ++m) power = Ops::mul(power, f);
  const T element = Ops::mul(g, power);
  return Ops::to_string(element) == v.element && !oracle.contains(element);
}

struct OnePropertyProbe {
  bool one_in_subspace = false;
  std::string one_value;
  /// First basis element outside M when 1 is in M: M cannot be Mathieu.
  std::optional<std::string> refuting_element;
  bool refuted() const { return refuting_element.has_value(); }
};

template <class T>
OnePropertyProbe one_property_probe(const SubspaceOracle<T>& oracle, const T& one,
                                    const std::vector<T>& basis) {
  OnePropertyProbe probe;
  const Membership m = oracle.test(one);
  probe.one_in_subspace = m.member;
  probe.one_value = m.value;
  if (!m.member) return probe;
  for (const T& b : basis) {
    if (!oracle.contains(b)) {
      probe.refuting_element = AlgebraOps<T>::to_string(b);
      break;
    }
  }
  return probe;
}

/// Polynomials with L(f) = 0.
SubspaceOracle<Polynomial> kerl_oracle(const PhaseSpace& phase, const Ring& ring);
/// Laurent polynomials in `var` with zero constant term.
SubspaceOracle<Polynomial> laurent_constant_oracle(const Ring& ring, const std::string& var = "t");
/// Polynomials in `var` with integral zero against the weight of `m`.
/// Moments are extended on demand.
SubspaceOracle<Polynomial> moment_oracle(const MomentFunctional& m, const std::string& var = "t");
/// Trace-zero dim x dim matrices; needs characteristic 0 or above dim.
SubspaceOracle<ScalarMatrix> trace_oracle(std::size_t dim, const Ring& ring);
/// The image of d/dz on F_p[z]: z^k is hit iff (k+1) is nonzero mod p.
SubspaceOracle<Polynomial> derivative_image_oracle(std::uint64_t p, const std::string& var = "z");
/// M = R.
SubspaceOracle<Polynomial> whole_ring_oracle(const Ring& ring, const VariablesPtr& vars);

/// All monomials of total degree <= bound (Laurent variables range over
/// -bound..bound), in grlex order.
std::vector<Polynomial> monomial_basis(const Ring& ring, const VariablesPtr& vars, int bound);

}  // namespace mathieu
