#include "mathieu/image_map.hpp"

#include <cctype>

#include "mathieu/errors.hpp"
#include "mathieu/matrix.hpp"
#include "mathieu/number_theory.hpp"

namespace mathieu {
namespace {

void require_symbols(const Polynomial& f, const PhaseSpace& phase) {
  if (!same_variables(f.variables(), phase.symbols)) {
    throw RingMismatch("expected a polynomial in " + phase.symbols->to_string() + ", got one in " +
                       f.variables()->to_string());
  }
}

void require_char0(const Ring& ring, const char* what) {
  if (ring.characteristic() != 0) {
    throw DomainError(std::string(what) + " needs characteristic 0 (got " + ring.name() + ")");
  }
}

// f = sum_j t_i^j f_j with every f_j free of w_i.
std::map<int, Polynomial> decompose_along(const Polynomial& f, std::size_t i,
                                          const PhaseSpace& phase) {
  const std::size_t wi = phase.symbol_index(i);
  std::map<int, Polynomial> out;
  if (f.is_zero()) return out;
  const Degree deg = f.degree_in(wi);
  if (!deg || *deg == 0) {
    out.emplace(0, f);
    return out;
  }
  Polynomial integrated = f.zero_like();
  for (const auto& [j, g] : decompose_along(f.derivative(wi), i, phase)) {
    const Polynomial gj = g.scaled(Scalar::from_rational(f.ring(), Rational(1, j + 1)));
    Exponents a(phase.n, 0);
    a[i] = j + 1;
    integrated += apply_t_power(gj, a, phase);
    out.emplace(j + 1, gj);
  }
  const Polynomial f0 = f - integrated;
  if (f0.degree_in(wi).value_or(0) > 0) {
    throw VerificationFailure("integration step left w" + std::to_string(i + 1) + " behind");
  }
  if (!f0.is_zero()) out.emplace(0, f0);
  return out;
}

bool is_u_name(const std::string& name) {
  if (name.empty() || name[0] != 'u') return false;
  for (std::size_t k = 1; k < name.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(name[k]))) return false;
  }
  return true;
}

void enumerate_monomials(std::size_t nv, int bound, Exponents& current, std::size_t var,
                         int remaining, std::vector<Exponents>& out) {
  if (var == nv) {
    out.push_back(current);
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    current[var] = k;
    enumerate_monomials(nv, bound, current, var + 1, remaining - k, out);
  }
  current[var] = 0;
}

}  // namespace

Polynomial l_map(const Polynomial& f, const PhaseSpace& phase) {
  require_symbols(f, phase);
  const std::size_t n = phase.n;
  std::vector<std::pair<Exponents, Scalar>> terms;
  for (const auto& [e, c] : f.terms()) {
    Integer factor = 1;
    Exponents z(n);
    bool vanishes = false;
    for (std::size_t i = 0; i < n && !vanishes; ++i) {
      const int a = e[phase.symbol_index(i)];
      const int b = e[phase.coordinate_index(i)];
      if (a > b) {
        vanishes = true;
        break;
      }
      factor *= falling_factorial(b, static_cast<unsigned long>(a));
      z[i] = b - a;
    }
    if (vanishes) continue;
    terms.emplace_back(std::move(z), c * Scalar::from_integer(f.ring(), factor));
  }
  return Polynomial::from_terms(f.ring(), phase.coordinates, std::move(terms));
}

Polynomial Decomposition::constant_component() const {
  auto it = components.find(Exponents(phase.n, 0));
  return it == components.end() ? Polynomial(ring, phase.coordinates) : it->second;
}

Polynomial apply_t(const Polynomial& g, std::size_t i, const PhaseSpace& phase) {
  require_symbols(g, phase);
  return g.shifted([&] {
    Exponents e(2 * phase.n, 0);
    e[phase.symbol_index(i)] = 1;
    return e;
  }()) - g.derivative(phase.coordinate_index(i));
}

Polynomial apply_t_power(const Polynomial& g, const Exponents& a, const PhaseSpace& phase) {
  Polynomial out = g;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int k = 0; k < a[i]; ++k) out = apply_t(out, i, phase);
  }
  return out;
}

Decomposition decompose(const Polynomial& f, const PhaseSpace& phase,
                        std::vector<std::size_t> order) {
  require_symbols(f, phase);
  require_char0(f.ring(), "decomposition");
  if (order.empty()) {
    for (std::size_t i = 0; i < phase.n; ++i) order.push_back(i);
  }
  {
    std::vector<bool> seen(phase.n, false);
    if (order.size() != phase.n) throw DomainError("elimination order must list every index once");
    for (std::size_t i : order) {
      if (i >= phase.n || seen[i]) throw DomainError("elimination order must list every index once");
      seen[i] = true;
    }
  }
  std::map<Exponents, Polynomial> current;
  if (!f.is_zero()) current.emplace(Exponents(phase.n, 0), f);
  for (std::size_t i : order) {
    std::map<Exponents, Polynomial> next;
    for (const auto& [a, comp] : current) {
      for (auto& [j, part] : decompose_along(comp, i, phase)) {
        Exponents b = a;
        b[i] = j;
        next.emplace(std::move(b), std::move(part));
      }
    }
    current = std::move(next);
  }
  Decomposition out{phase, f.ring(), {}};
  for (const auto& [a, comp] : current) out.components.emplace(a, comp.embed(phase.coordinates));
  return out;
}

Polynomial recompose(const Decomposition& d) {
  Polynomial out(d.ring, d.phase.symbols);
  for (const auto& [a, comp] : d.components) {
    out += apply_t_power(comp.embed(d.phase.symbols), a, d.phase);
  }
  return out;
}

Polynomial apply_witness(const std::vector<Polynomial>& h, const PhaseSpace& phase) {
  if (h.size() != phase.n) throw DomainError("witness needs one polynomial per variable pair");
  if (h.empty()) throw DomainError("empty witness");
  Polynomial out = h.front().zero_like();
  for (std::size_t i = 0; i < h.size(); ++i) {
    require_symbols(h[i], phase);
    out -= apply_t(h[i], i, phase);
  }
  return out;
}

bool verify_witness(const Polynomial& f, const std::vector<Polynomial>& h, const PhaseSpace& phase) {
  return apply_witness(h, phase) == f;
}

MembershipCertificate certify_image(const Polynomial& f, const PhaseSpace& phase) {
  const Decomposition d = decompose(f, phase);
  const Polynomial f0 = d.constant_component();
  if (!(f0 == l_map(f, phase))) {
    throw VerificationFailure("decomposition constant part differs from L(f) for " + f.to_string());
  }
  MembershipCertificate cert;
  if (!f0.is_zero()) {
    cert.residue = f0;
    return cert;
  }
  cert.member = true;
  cert.witness.assign(phase.n, f.zero_like());
  // t_i = -(d/dz_i - w_i), so t^a f_a = (d/dz_i - w_i)(-t^(a - e_i) f_a)
  // for the first i with a_i > 0.
  for (const auto& [a, comp] : d.components) {
    std::size_t i = 0;
    while (i < a.size() && a[i] == 0) ++i;
    if (i == a.size()) continue;
    Exponents rest = a;
    --rest[i];
    cert.witness[i] -= apply_t_power(comp.embed(phase.symbols), rest, phase);
  }
  if (!verify_witness(f, cert.witness, phase)) {
    throw VerificationFailure("witness does not reproduce " + f.to_string());
  }
  return cert;
}

PowerScan power_scan(const Polynomial& f, int m_max, const PhaseSpace& phase) {
  if (m_max < 1) throw DomainError("m_max must be at least 1");
  require_symbols(f, phase);
  PowerScan scan;
  Polynomial power = f;
  for (int m = 1; m <= m_max; ++m) {
    if (m > 1) power = power * f;
    scan.values.push_back(l_map(power, phase));
    if (!scan.first_nonzero && !scan.values.back().is_zero()) scan.first_nonzero = m;
  }
  return scan;
}

Scalar factorial_functional(const Polynomial& f) {
  const VariableSet& vars = *f.variables();
  Scalar total = Scalar::zero(f.ring());
  for (const auto& [e, c] : f.terms()) {
    Integer factor = 1;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!is_u_name(vars.name(k))) {
        throw DomainError("factorial functional takes u-variables only, found " + vars.name(k));
      }
      if (e[k] < 0) throw DomainError("negative exponent in factorial functional");
      factor *= factorial(static_cast<unsigned long>(e[k]));
    }
    total += c * Scalar::from_integer(f.ring(), factor);
  }
  return total;
}

Polynomial u_to_phase(const Polynomial& f, const PhaseSpace& phase) {
  const VariableSet& vars = *f.variables();
  if (vars.size() > phase.n) throw DomainError("more u-variables than variable pairs");
  std::map<std::string, Polynomial> bindings;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    bindings.emplace(vars.name(k),
                     Polynomial::variable(f.ring(), phase.symbols, phase.symbols->name(phase.symbol_index(k))) *
                         Polynomial::variable(f.ring(), phase.symbols,
                                              phase.symbols->name(phase.coordinate_index(k))));
  }
  return f.substitute(bindings, phase.symbols);
}

Polynomial phase_to_u(const Polynomial& f, const PhaseSpace& phase) {
  require_symbols(f, phase);
  std::vector<std::pair<Exponents, Scalar>> terms;
  for (const auto& [e, c] : f.terms()) {
    Exponents u(phase.n);
    for (std::size_t i = 0; i < phase.n; ++i) {
      if (e[phase.symbol_index(i)] != e[phase.coordinate_index(i)]) {
        throw DomainError("term of " + f.to_string() + " is not a monomial in u_i = w_i z_i");
      }
      u[i] = e[phase.symbol_index(i)];
    }
    terms.emplace_back(std::move(u), c);
  }
  return Polynomial::from_terms(f.ring(), u_variables(phase.n), std::move(terms));
}

MonomialCountScan monomial_count_scan(const Polynomial& f, std::optional<int> bound) {
  if (f.is_zero()) throw DomainError("monomial count scan of the zero polynomial");
  MonomialCountScan scan;
  scan.monomials = f.term_count();
  scan.bound = bound.value_or(static_cast<int>(scan.monomials));
  if (scan.bound < static_cast<int>(scan.monomials)) {
    throw DomainError("scan bound " + std::to_string(scan.bound) + " is below the monomial count " +
                      std::to_string(scan.monomials));
  }
  Polynomial power = f;
  for (int m = 1; m <= scan.bound; ++m) {
    if (m > 1) power = power * f;
    scan.values.push_back(factorial_functional(power));
    if (!scan.first_nonzero && !scan.values.back().is_zero()) scan.first_nonzero = m;
  }
  scan.within_monomial_count =
      scan.first_nonzero && *scan.first_nonzero <= static_cast<int>(scan.monomials);
  return scan;
}

WitnessSearch bounded_witness_search(const DiffOperatorSpec& d, const Polynomial& b,
                                     std::optional<int> degree_bound) {
  const VariablesPtr& coords = d.coordinates();
  if (!same_variables(b.variables(), coords) || !(b.ring() == d.ring())) {
    throw RingMismatch("target polynomial does not live where the operators act");
  }
  WitnessSearch out;
  out.degree_bound = degree_bound.value_or(static_cast<int>(b.total_degree().value_or(0)) +
                                           static_cast<int>(d.size()));
  if (out.degree_bound < 0) throw DomainError("negative degree bound");
  const std::size_t nv = coords->size();
  for (std::size_t k = 0; k < nv; ++k) {
    if (coords->is_laurent(k)) throw DomainError("witness search over Laurent variables");
  }

  std::vector<Exponents> basis;
  Exponents scratch(nv, 0);
  enumerate_monomials(nv, out.degree_bound, scratch, 0, out.degree_bound, basis);

  const Ring ring = d.ring();
  std::vector<Polynomial> images;
  std::map<Exponents, std::size_t, GrlexGreater> rows;
  auto row_of = [&](const Exponents& e) {
    auto [it, inserted] = rows.try_emplace(e, rows.size());
    return it->second;
  };
  for (const auto& op : d.operators()) {
    for (const auto& mono : basis) {
      images.push_back(op.apply(Polynomial::monomial(ring, coords, mono, Scalar::one(ring))));
      for (const auto& [e, c] : images.back().terms()) row_of(e);
    }
  }
  for (const auto& [e, c] : b.terms()) row_of(e);

  ScalarMatrix a = scalar_matrix(ring, rows.size(), images.size());
  for (std::size_t col = 0; col < images.size(); ++col) {
    for (const auto& [e, c] : images[col].terms()) a(rows.at(e), col) = c;
  }
  std::vector<Scalar> rhs(rows.size(), Scalar::zero(ring));
  for (const auto& [e, c] : b.terms()) rhs[rows.at(e)] = c;

  const auto solution = solve(std::move(a), std::move(rhs));
  if (!solution) return out;
  out.found = true;
  for (std::size_t k = 0; k < d.size(); ++k) {
    std::vector<std::pair<Exponents, Scalar>> terms;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      terms.emplace_back(basis[j], (*solution)[k * basis.size() + j]);
    }
    out.witness.push_back(Polynomial::from_terms(ring, coords, std::move(terms)));
  }
  if (!(d.apply(out.witness) == b)) {
    throw VerificationFailure("linear solve produced a witness that does not verify");
  }
  return out;
}

Ic1Report ic1_pipeline(const Polynomial& f, int m_max, const PhaseSpace& phase) {
  if (phase.n != 1) throw DomainError("the one-variable pipeline needs n = 1");
  require_symbols(f, phase);
  const Grading deg = Grading::zeta_z(phase);
  Ic1Report report;
  report.deg = f.grade_degree(deg);
  report.deg_negative = !report.deg || *report.deg < 0;
  report.scan = power_scan(f, m_max, phase);
  if (report.deg_negative) return report;
  Exponents shift(2, 0);
  shift[phase.symbol_index(0)] = static_cast<int>(*report.deg);
  report.shifted = f.shifted(shift);
  const auto parts = report.shifted->homogeneous_components(deg);
  report.top_part = parts.at(0);
  report.u_polynomial = phase_to_u(*report.top_part, phase);
  report.count_scan = monomial_count_scan(*report.u_polynomial);
  return report;
}

}  // namespace mathieu
