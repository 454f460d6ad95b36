// Command-line front end: parses polynomial input, runs one computation and
// prints a report. Exit codes: 0 done, 1 usage or input error, 2 a witness
// or cross-check failed to verify.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

#include "mathieu/charp.hpp"
#include "mathieu/errors.hpp"
#include "mathieu/gvc.hpp"
#include "mathieu/image_map.hpp"
#include "mathieu/mathieu_harness.hpp"
#include "mathieu/ortho.hpp"
#include "mathieu/parser.hpp"
#include "mathieu/report.hpp"

using namespace mathieu;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string ring = "q";
  std::uint64_t p = 0;
  int n = 0;
  int m_max = 24;
  int bound = -1;
  std::string format = "json";
  std::string oracle = "kerl";
  std::string file;
  std::string family = "hermite";
  int alpha = 0;
  int beta = 0;
  int d_max = 4;
  int k_max = 3;
  std::vector<std::uint64_t> candidates;
  std::vector<std::string> inputs;

  CLI::Option* m_max_option = nullptr;
  CLI::Option* bound_option = nullptr;
  CLI::Option* p_option = nullptr;
};

Ring make_ring(const Config& c) {
  if (c.ring == "q") return Ring::rationals();
  if (c.ring == "qi") return Ring::gaussian_rationals();
  if (c.ring == "fp") {
    if (c.p == 0) throw UsageError("--ring fp needs --p");
    return Ring::prime_field(c.p);
  }
  throw UsageError("unknown ring '" + c.ring + "' (expected q, qi or fp)");
}

std::uint64_t require_p(const Config& c) {
  if (c.p == 0) throw UsageError("this command needs --p");
  return c.p;
}

std::vector<std::string> inputs(const Config& c) {
  std::vector<std::string> out = c.inputs;
  if (!c.file.empty()) {
    std::ifstream in(c.file);
    if (!in) throw UsageError("cannot read " + c.file);
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos && line[line.find_first_not_of(" \t")] != '#') {
        out.push_back(line);
      }
    }
  }
  return out;
}

std::vector<std::string> need_inputs(const Config& c, std::size_t min, std::size_t max, const std::string& what) {
  auto in = inputs(c);
  if (in.size() < min || in.size() > max) throw UsageError("expected " + what);
  return in;
}

// Largest index k among names w<k>, z<k>, d<k>, u<k> in the inputs.
int infer_n(const Config& c, const std::vector<std::string>& texts, int fallback = 1) {
  if (c.n > 0) return c.n;
  static const std::regex name(R"(\b[wzdu]([0-9]+)\b)");
  int n = 0;
  for (const auto& t : texts) {
    for (auto it = std::sregex_iterator(t.begin(), t.end(), name); it != std::sregex_iterator(); ++it) {
      n = std::max(n, std::stoi((*it)[1].str()));
    }
  }
  return n > 0 ? n : fallback;
}

WeightSpec weight_from(const Config& c, const std::string& text) {
  WeightSpec w = WeightSpec::parse(text);
  if (text.find('(') == std::string::npos) {
    if (w.family == WeightSpec::Family::laguerre) w = WeightSpec::laguerre(c.alpha);
    if (w.family == WeightSpec::Family::jacobi) w = WeightSpec::jacobi(c.alpha, c.beta);
  }
  return w;
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else if (j.is_array()) {
    if (j.empty()) out << prefix << ": []\n";
    for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], prefix + "[" + std::to_string(k) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Config& c, const Json& report, const std::string& csv = {}) {
  if (c.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else if (c.format == "text") {
    flatten(report, "", std::cout);
  } else if (c.format == "csv") {
    if (csv.empty()) throw UsageError("csv output is available for moments, powerscan and scan only");
    std::cout << csv;
  } else {
    throw UsageError("unknown format '" + c.format + "'");
  }
}

// ------------------------------------------------------------ commands

void cmd_lmap(const Config& c) {
  const auto in = need_inputs(c, 1, 1, "one polynomial in w_i, z_i");
  const PhaseSpace phase = PhaseSpace::make(static_cast<std::size_t>(infer_n(c, in)));
  const Polynomial f = parse_polynomial(in[0], phase.symbols, make_ring(c));
  Json out;
  out["input"] = f.to_string();
  out["n"] = phase.n;
  out["l_value"] = l_map(f, phase).to_string();
  out["via_symbols"] = l_map_via_symbols(f, phase).to_string();
  if (out["l_value"] != out["via_symbols"]) throw VerificationFailure("the two routes for L disagree");
  emit(c, out);
}

void cmd_decompose(const Config& c) {
  const auto in = need_inputs(c, 1, 1, "one polynomial in w_i, z_i");
  const PhaseSpace phase = PhaseSpace::make(static_cast<std::size_t>(infer_n(c, in)));
  const Polynomial f = parse_polynomial(in[0], phase.symbols, make_ring(c));
  const Decomposition d = decompose(f, phase);
  if (!(recompose(d) == f)) throw VerificationFailure("decomposition does not reassemble");
  Json out;
  out["input"] = f.to_string();
  const Json body = to_json(d);
  for (const auto& [k, v] : body.items()) out[k] = v;
  emit(c, out);
}

void cmd_certify(const Config& c) {
  const auto in = need_inputs(c, 1, 1, "one polynomial in w_i, z_i");
  const PhaseSpace phase = PhaseSpace::make(static_cast<std::size_t>(infer_n(c, in)));
  const Ring ring = make_ring(c);
  const Polynomial f = parse_polynomial(in[0], phase.symbols, ring);
  if (ring.characteristic() == 0) {
    emit(c, to_json(certify_image(f, phase)));
    return;
  }
  // Positive characteristic: bounded search for h with sum (d_i - w_i) h_i = f.
  std::vector<std::string> names;
  std::vector<Polynomial> shifts;
  for (std::size_t i = 0; i < phase.n; ++i) {
    names.push_back(phase.symbols->name(phase.coordinate_index(i)));
    shifts.push_back(Polynomial::variable(ring, phase.symbols, phase.symbols->name(phase.symbol_index(i))));
  }
  const auto spec = DiffOperatorSpec::affine_shifts(phase.symbols, names, shifts);
  const WitnessSearch s =
      bounded_witness_search(spec, f, c.bound >= 0 ? std::optional<int>(c.bound) : std::nullopt);
  Json out;
  out["status"] = s.found ? "member" : "unknown";
  out["witness"] = polynomial_list(s.witness);
  out["residue"] = nullptr;
  out["degree_bound"] = s.degree_bound;
  emit(c, out);
}

void cmd_powerscan(const Config& c) {
  const auto in = need_inputs(c, 1, 1, "one polynomial in w_i, z_i");
  const PhaseSpace phase = PhaseSpace::make(static_cast<std::size_t>(infer_n(c, in)));
  const Polynomial f = parse_polynomial(in[0], phase.symbols, make_ring(c));
  const PowerScan s = power_scan(f, c.m_max, phase);
  std::ostringstream csv;
  csv << "m,value\n";
  for (std::size_t m = 0; m < s.values.size(); ++m) csv << m + 1 << "," << s.values[m].to_string() << "\n";
  Json out;
  out["f"] = f.to_string();
  out["m_max"] = c.m_max;
  const Json body = to_json(s);
  out["values"] = body["values"];
  out["first_nonzero"] = body["first_nonzero"];
  emit(c, out, csv.str());
}

std::string scan_csv(const ScanReport& r) {
  std::ostringstream csv;
  csv << "g,stabilization_index,violation_m,failing_m\n";
  for (const auto& g : r.g_results) {
    csv << "\"" << g.g << "\"," << (g.stabilization_index ? std::to_string(*g.stabilization_index) : "")
        << "," << (g.violation ? std::to_string(g.violation->m) : "") << ",\"";
    for (std::size_t k = 0; k < g.failing_m.size(); ++k) csv << (k ? " " : "") << g.failing_m[k];
    csv << "\"\n";
  }
  return csv.str();
}

void cmd_scan(const Config& c) {
  auto in = need_inputs(c, 1, 10000, "f followed by optional g elements");
  const std::vector<std::string> g_texts(in.begin() + 1, in.end());
  const int bound = c.bound >= 0 ? c.bound : 2;
  ScanReport report;
  if (c.oracle == "trace") {
    const Ring ring = make_ring(c);
    const ScalarMatrix f = parse_matrix(in[0], ring);
    const auto oracle = trace_oracle(f.rows(), ring);
    std::vector<ScalarMatrix> gs;
    for (const auto& t : g_texts) gs.push_back(parse_matrix(t, ring));
    if (gs.empty()) {
      for (std::size_t i = 0; i < f.rows(); ++i) {
        for (std::size_t j = 0; j < f.rows(); ++j) {
          ScalarMatrix e = scalar_matrix(ring, f.rows(), f.rows());
          e(i, j) = Scalar::one(ring);
          gs.push_back(e);
        }
      }
    }
    report = mathieu_scan(oracle, f, gs, c.m_max);
  } else {
    std::optional<SubspaceOracle<Polynomial>> oracle;
    VariablesPtr vars;
    Ring ring = make_ring(c);
    int m_max = c.m_max;
    if (c.oracle == "kerl") {
      const PhaseSpace phase = PhaseSpace::make(static_cast<std::size_t>(infer_n(c, in)));
      vars = phase.symbols;
      oracle.emplace(kerl_oracle(phase, ring));
    } else if (c.oracle == "laurent") {
      vars = VariableSet::laurent("t");
      oracle.emplace(laurent_constant_oracle(ring, "t"));
      if (!c.m_max_option->count() && ring.characteristic() != 0) {
        const auto p = static_cast<int>(ring.characteristic());
        m_max = p * p * p - 1;
      }
    } else if (c.oracle.rfind("moment:", 0) == 0) {
      if (ring.kind() != RingKind::rationals) throw UsageError("moment oracles work over q");
      const WeightSpec w = weight_from(c, c.oracle.substr(7));
      vars = VariableSet::make(std::vector<std::string>{"t"});
      oracle.emplace(moment_oracle(moments(w, 8), "t"));
    } else {
      throw UsageError("unknown oracle '" + c.oracle + "' (kerl, laurent, trace, moment:<family>)");
    }
    const Polynomial f = parse_polynomial(in[0], vars, ring);
    std::vector<Polynomial> gs;
    for (const auto& t : g_texts) gs.push_back(parse_polynomial(t, vars, ring));
    if (gs.empty()) gs = monomial_basis(ring, vars, bound);
    report = mathieu_scan(*oracle, f, gs, m_max);
    for (std::size_t k = 0; k < report.g_results.size(); ++k) {
      const auto& row = report.g_results[k];
      if (row.violation && !reverify_violation(*oracle, f, gs[k], *row.violation)) {
        throw VerificationFailure("violation for g = " + row.g + " did not re-verify");
      }
    }
  }
  emit(c, to_json(report), scan_csv(report));
}

void cmd_gvc(const Config& c) {
  const auto in = need_inputs(c, 3, 3, "an operator, P and Q");
  const PhaseSpace phase = PhaseSpace::make(static_cast<std::size_t>(infer_n(c, in)));
  const Ring ring = make_ring(c);
  const WeylElement lambda = parse_operator(in[0], phase.coordinates, ring);
  const Polynomial p = parse_polynomial(in[1], phase.coordinates, ring);
  const Polynomial q = parse_polynomial(in[2], phase.coordinates, ring);
  const GvcScan s = gvc_scan(lambda, p, q, c.m_max_option->count() ? c.m_max : 8, phase);
  if (!s.routes_agree) throw VerificationFailure("operator route and L route disagree");
  Json out;
  out["operator"] = lambda.to_string();
  out["p"] = p.to_string();
  out["q"] = q.to_string();
  const Json body = to_json(s);
  for (const auto& [k, v] : body.items()) out[k] = v;
  emit(c, out);
}

void cmd_jacobian(const Config& c) {
  const auto in = need_inputs(c, 1, 16, "the components H_1 .. H_n");
  const PhaseSpace phase = PhaseSpace::make(in.size());
  const Ring ring = make_ring(c);
  std::vector<Polynomial> h;
  for (const auto& t : in) h.push_back(parse_polynomial(t, phase.coordinates, ring));
  const PolynomialMatrix j = jacobian_matrix(h);
  Json rows = Json::array();
  for (std::size_t r = 0; r < j.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t k = 0; k < j.cols(); ++k) row.push_back(j(r, k).to_string());
    rows.push_back(row);
  }
  const Prop74Report r = prop74_crosscheck(h, c.m_max_option->count() ? c.m_max : 8, phase);
  Json out;
  out["h"] = polynomial_list(h);
  out["jacobian"] = rows;
  const Json body = to_json(r);
  for (const auto& [k, v] : body.items()) out[k] = v;
  emit(c, out);
}

void cmd_ortho(const Config& c) {
  const WeightSpec w = weight_from(c, c.family);
  const auto rows = compare_routes(w, c.d_max);
  const MomentFunctional m = moments(w, 2 * c.d_max);
  bool orthogonal = true;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      orthogonal = orthogonal && inner_product(rows[a].rodrigues, rows[b].rodrigues, m).is_zero();
    }
  }
  bool agree = orthogonal;
  for (const auto& r : rows) agree = agree && r.rodrigues_equals_lambda && r.scale.has_value();
  if (!agree) throw VerificationFailure("the three constructions disagree for " + w.name());
  Json out;
  out["family"] = w.name();
  out["d_max"] = c.d_max;
  out["routes"] = to_json(rows);
  out["orthogonal"] = orthogonal;
  emit(c, out);
}

void cmd_moments(const Config& c) {
  const WeightSpec w = weight_from(c, c.family);
  const MomentFunctional m = moments(w, c.d_max);
  std::ostringstream csv;
  csv << "degree,numerator,denominator\n";
  for (std::size_t n = 0; n < m.size(); ++n) {
    csv << n << "," << m[n].numerator().get_str() << "," << m[n].denominator().get_str() << "\n";
  }
  Json out = to_json(m);
  out["hankel_nonsingular"] = hankel_nonsingular(m, c.d_max / 2);
  emit(c, out, csv.str());
}

CharPProblem charp_problem(const Config& c, const std::vector<std::string>& in, int fallback_n = 1) {
  return CharPProblem::make(require_p(c), static_cast<std::size_t>(infer_n(c, in, fallback_n)));
}

void cmd_theorem51(const Config& c) {
  const auto in = need_inputs(c, 2, 2, "f and g");
  const CharPProblem prob = charp_problem(c, in);
  const Polynomial f = parse_polynomial(in[0], prob.phase.symbols, prob.ring);
  const Polynomial g = parse_polynomial(in[1], prob.phase.symbols, prob.ring);
  Json out = to_json(theorem51_pipeline(f, g, prob));
  emit(c, out);
}

void cmd_willems(const Config& c) { emit(c, to_json(willems_scan(require_p(c), c.k_max))); }

void cmd_example12(const Config& c) {
  emit(c, to_json(example12_refutation(require_p(c), c.bound >= 0 ? std::optional<int>(c.bound) : std::nullopt)));
}

void cmd_crucial(const Config& c) {
  const auto in = need_inputs(c, 3, 3, "b, p and q");
  const CharPProblem prob = CharPProblem::make(require_p(c), 2);
  const Polynomial b = parse_polynomial(in[0], prob.phase.symbols, prob.ring);
  const Polynomial p = parse_polynomial(in[1], prob.phase.symbols, prob.ring);
  const Polynomial q = parse_polynomial(in[2], prob.phase.symbols, prob.ring);
  emit(c, to_json(crucial_lemma_descent(b, p, q, prob)));
}

void cmd_sufficient(const Config& c) {
  const auto in = need_inputs(c, 1, 1, "one polynomial b");
  const CharPProblem prob = charp_problem(c, in);
  emit(c, to_json(sufficient_membership(parse_polynomial(in[0], prob.phase.symbols, prob.ring), prob)));
}

VariablesPtr u_vars_for(const Config& c, const std::vector<std::string>& in) {
  for (const auto& t : in) {
    if (std::regex_search(t, std::regex(R"(\bu\b)"))) return VariableSet::make(std::vector<std::string>{"u"});
  }
  return u_variables(static_cast<std::size_t>(infer_n(c, in)));
}

void cmd_lemma81(const Config& c) {
  const auto in = need_inputs(c, 1, 1, "one polynomial in u");
  const Polynomial g = parse_polynomial(in[0], u_vars_for(c, in), Ring::rationals());
  const Lemma81Report r = lemma81_nonvanishing(g, c.candidates);
  emit(c, to_json(r));
}

void cmd_frobenius(const Config& c) {
  const auto in = need_inputs(c, 1, 1, "one polynomial in u");
  const Polynomial g = parse_polynomial(in[0], u_vars_for(c, in), Ring::rationals());
  const FrobeniusReport r = frobenius_expansion_check(g, require_p(c));
  if (!r.divisible) throw VerificationFailure("remainder of g^p is not divisible by p");
  emit(c, to_json(r));
}

void cmd_conj73(const Config& c) {
  const auto in = need_inputs(c, 1, 1, "one polynomial in u_i");
  const Polynomial f = parse_polynomial(in[0], u_vars_for(c, in), make_ring(c));
  const int m_max = c.m_max_option->count() ? c.m_max : 8;
  Json values = Json::array();
  std::optional<int> first;
  Polynomial power = f;
  for (int m = 1; m <= m_max; ++m) {
    if (m > 1) power = power * f;
    const Scalar v = factorial_functional(power);
    values.push_back(v.to_string());
    if (!first && !v.is_zero()) first = m;
  }
  Json out;
  out["f"] = f.to_string();
  out["m_max"] = m_max;
  out["values"] = values;
  out["first_nonzero"] = first ? Json(*first) : Json(nullptr);
  out["count_scan"] = f.is_zero() ? Json(nullptr) : to_json(monomial_count_scan(f));
  emit(c, out);
}

void cmd_ic1(const Config& c) {
  const auto in = need_inputs(c, 1, 1, "one polynomial in w1, z1");
  const PhaseSpace phase = PhaseSpace::make(1);
  const Polynomial f = parse_polynomial(in[0], phase.symbols, make_ring(c));
  Json out = to_json(ic1_pipeline(f, c.m_max_option->count() ? c.m_max : 12, phase));
  emit(c, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with the map L, Mathieu subspaces and classical orthogonal polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;

  app.add_option("--ring", c.ring, "Coefficient field: q, qi or fp")->check(CLI::IsMember({"q", "qi", "fp"}));
  c.p_option = app.add_option("--p", c.p, "Prime for fp and characteristic-p commands");
  app.add_option("--n", c.n, "Number of variable pairs (default: inferred from the input)");
  c.m_max_option = app.add_option("--mmax", c.m_max, "Largest power scanned");
  c.bound_option = app.add_option("--bound", c.bound, "Degree bound (witness search, g lists)");
  app.add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--oracle", c.oracle, "kerl, laurent, trace or moment:<family>");
  app.add_option("--file", c.file, "Read input expressions from a file, one per line");
  app.add_option("--family", c.family, "hermite, laguerre, jacobi, uniform01 or legendre");
  app.add_option("--alpha", c.alpha, "Weight parameter alpha");
  app.add_option("--beta", c.beta, "Weight parameter beta");
  app.add_option("--dmax", c.d_max, "Largest degree");
  app.add_option("--kmax", c.k_max, "Largest k in m = p^k - 1");
  app.add_option("--candidates", c.candidates, "Candidate primes, comma separated")->delimiter(',')->allow_extra_args(false);

  std::function<void(const Config&)> action;
  auto sub = [&](const std::string& name, const std::string& help, void (*fn)(const Config&), CLI::App* parent = nullptr) {
    CLI::App* s = (parent ? parent : &app)->add_subcommand(name, help);
    s->fallthrough();
    s->add_option("inputs", c.inputs, "Input expressions");
    s->callback([&action, fn] { action = fn; });
    return s;
  };
  sub("lmap", "Evaluate L(f)", cmd_lmap);
  sub("decompose", "Write f as sum t^a f_a", cmd_decompose);
  sub("certify", "Membership of f in the image of the operators d/dz_i - w_i", cmd_certify);
  sub("powerscan", "L(f^m) for m = 1..mmax", cmd_powerscan);
  sub("scan", "Mathieu-property scan of f against an oracle", cmd_scan);
  sub("gvc", "Vanishing scan for Lambda^m(P^m) and Lambda^m(Q P^m)", cmd_gvc);
  sub("jacobian", "Nilpotency of JH against the vanishing of L(f^m), f = sum w_i H_i", cmd_jacobian);
  sub("ortho", "Orthogonal family by Rodrigues, Lambda powers and Gram-Schmidt", cmd_ortho);
  sub("moments", "Normalized moment table", cmd_moments);
  sub("willems", "Constant terms of powers of t^-1 + t^(p-1) over F_p", cmd_willems);
  sub("lemma81", "Certify L(g^p) != 0 through a p-adic valuation", cmd_lemma81);
  sub("frobenius", "Check the expansion of g^p modulo p", cmd_frobenius);
  sub("conj73", "Factorial functional of f^m for f in u_1..u_n", cmd_conj73);
  sub("ic1", "One-variable degree argument for L(f^m)", cmd_ic1);
  CLI::App* charp = app.add_subcommand("charp", "Positive-characteristic computations");
  charp->require_subcommand(1);
  charp->fallthrough();
  sub("theorem51", "Coefficients of g f^m in J for m >= p^2", cmd_theorem51, charp);
  sub("willems", "Constant terms of powers of t^-1 + t^(p-1) over F_p", cmd_willems, charp);
  sub("example12", "1 is in the image of d/dz over F_p but z^(p-1) is not", cmd_example12, charp);
  sub("crucial", "Degree descent for b = (d1 - w1) p + (d2 - w2) q", cmd_crucial, charp);
  sub("sufficient", "Witness for b with all coefficients in J", cmd_sufficient, charp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    if (!action) throw UsageError("no command given");
    action(c);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
