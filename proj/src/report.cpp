#include "mathieu/report.hpp"

namespace mathieu {
namespace {

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json degree(const Degree& d) { return d ? Json(*d) : Json("-inf"); }

Json violation(const Violation& v) {
  Json out;
  out["m"] = v.m;
  out["value"] = v.value;
  out["element"] = v.element;
  return out;
}

Json scalars(const std::vector<Scalar>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

}  // namespace

Json polynomial_list(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

Json to_json(const MembershipCertificate& c) {
  Json out;
  out["status"] = c.member ? "member" : "nonmember";
  out["witness"] = polynomial_list(c.witness);
  out["residue"] = c.residue ? Json(c.residue->to_string()) : Json(nullptr);
  return out;
}

Json to_json(const Decomposition& d) {
  Json out;
  out["n"] = d.phase.n;
  Json comps = Json::array();
  for (const auto& [a, f] : d.components) {
    Json row;
    row["index"] = a;
    row["component"] = f.to_string();
    comps.push_back(row);
  }
  out["components"] = comps;
  out["l_value"] = d.constant_component().to_string();
  return out;
}

Json to_json(const PowerScan& s) {
  Json out;
  out["values"] = polynomial_list(s.values);
  out["first_nonzero"] = optional_int(s.first_nonzero);
  return out;
}

Json to_json(const MonomialCountScan& s) {
  Json out;
  out["monomials"] = s.monomials;
  out["bound"] = s.bound;
  out["values"] = scalars(s.values);
  out["first_nonzero"] = optional_int(s.first_nonzero);
  out["within_monomial_count"] = s.within_monomial_count;
  return out;
}

Json to_json(const WitnessSearch& s) {
  Json out;
  out["status"] = s.found ? "member" : "unknown";
  out["degree_bound"] = s.degree_bound;
  out["witness"] = polynomial_list(s.witness);
  return out;
}

Json to_json(const Ic1Report& r) {
  Json out;
  out["deg"] = degree(r.deg);
  out["deg_negative"] = r.deg_negative;
  out["power_scan"] = to_json(r.scan);
  out["shifted"] = r.shifted ? Json(r.shifted->to_string()) : Json(nullptr);
  out["top_part"] = r.top_part ? Json(r.top_part->to_string()) : Json(nullptr);
  out["u_polynomial"] = r.u_polynomial ? Json(r.u_polynomial->to_string()) : Json(nullptr);
  out["count_scan"] = r.count_scan ? to_json(*r.count_scan) : Json(nullptr);
  return out;
}

Json to_json(const ScanReport& r) {
  Json out;
  out["oracle"] = r.oracle;
  out["f"] = r.f;
  out["m_max"] = r.m_max;
  out["premise_held_through"] = r.premise_held_through;
  out["premise_failure"] = r.premise_failure ? violation(*r.premise_failure) : Json(nullptr);
  Json rows = Json::array();
  for (const auto& g : r.g_results) {
    Json row;
    row["g"] = g.g;
    if (g.violation) {
      row["violation"] = violation(*g.violation);
    } else {
      row["stabilization_index"] = optional_int(g.stabilization_index);
    }
    row["failing_m"] = g.failing_m;
    rows.push_back(row);
  }
  out["g_results"] = rows;
  out["verdict"] = to_string(r.verdict);
  return out;
}

Json to_json(const OnePropertyProbe& p) {
  Json out;
  out["one_in_subspace"] = p.one_in_subspace;
  out["one_value"] = p.one_value;
  out["refuting_element"] = p.refuting_element ? Json(*p.refuting_element) : Json(nullptr);
  out["refuted"] = p.refuted();
  return out;
}

Json to_json(const GvcScan& s) {
  Json out;
  out["premise_values"] = polynomial_list(s.premise_values);
  out["q_values"] = polynomial_list(s.q_values);
  out["routes_agree"] = s.routes_agree;
  out["premise_held_through"] = s.premise_held_through;
  out["premise_holds"] = s.premise_holds;
  out["stabilization_index"] = optional_int(s.stabilization_index);
  out["one_dimensional_bound"] = s.one_dimensional_bound ? Json(*s.one_dimensional_bound) : Json(nullptr);
  out["bound_respected"] = s.bound_respected;
  return out;
}

Json to_json(const Prop74Report& r) {
  Json out;
  out["nilpotent"] = r.nilpotent;
  out["f"] = r.f.to_string();
  out["power_scan"] = to_json(r.scan);
  out["agree"] = r.agree;
  return out;
}

Json to_json(const std::vector<RouteComparison>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["degree"] = r.degree;
    row["rodrigues"] = r.rodrigues.to_string();
    row["lambda_route"] = r.lambda_route.to_string();
    row["monic"] = r.monic.to_string();
    row["rodrigues_equals_lambda"] = r.rodrigues_equals_lambda;
    row["scale"] = r.scale ? Json(r.scale->to_string()) : Json(nullptr);
    out.push_back(row);
  }
  return out;
}

Json to_json(const MomentFunctional& m) {
  Json out;
  out["family"] = m.weight().name();
  Json values = Json::array();
  for (std::size_t n = 0; n < m.size(); ++n) {
    Json row;
    row["degree"] = n;
    row["numerator"] = m[n].numerator().get_str();
    row["denominator"] = m[n].denominator().get_str();
    values.push_back(row);
  }
  out["moments"] = values;
  return out;
}

Json to_json(const ImPrimeMembership& m) {
  Json out;
  out["member"] = m.member;
  out["f0"] = m.f0.to_string();
  out["moment_value"] = m.moment_value.to_string();
  Json expansion = Json::array();
  for (const auto& [a, c] : m.expansion) {
    Json row;
    row["index"] = a;
    row["coefficient"] = c.to_string();
    expansion.push_back(row);
  }
  out["expansion"] = expansion;
  out["hypothesis"] = m.hypothesis;
  return out;
}

Json to_json(const SufficientWitness& w) {
  Json out;
  out["status"] = w.found ? "member" : "declined";
  out["witness"] = polynomial_list(w.witness);
  out["reason"] = w.reason.empty() ? Json(nullptr) : Json(w.reason);
  return out;
}

Json to_json(const DescentWitness& w) {
  Json out;
  out["d"] = degree(w.d);
  out["g_top"] = w.g_top.to_string();
  out["g_next"] = w.g_next.to_string();
  out["b_top"] = w.b_top.to_string();
  out["identity_rhs"] = w.identity_rhs.to_string();
  out["identity_holds"] = w.identity_holds;
  out["top_in_i"] = w.top_in_i;
  return out;
}

Json to_json(const Theorem51Report& r) {
  Json out;
  out["premise"] = r.premise;
  out["premise_failures"] = r.premise_failures;
  out["f_p2_in_j"] = r.f_p2_in_j;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json row;
    row["m"] = c.m;
    row["coefficients_in_j"] = c.coefficients_in_j;
    row["witness_verified"] = c.witness_verified;
    checks.push_back(row);
  }
  out["checks"] = checks;
  out["passed"] = r.passed;
  return out;
}

Json to_json(const WillemsReport& r) {
  Json out;
  out["p"] = r.p;
  out["k_max"] = r.k_max;
  out["m_max"] = r.m_max;
  out["constant_terms_vanish"] = r.constant_terms_vanish;
  out["first_nonzero_constant"] = optional_int(r.first_nonzero_constant);
  out["violations"] = r.violations;
  out["expected"] = r.expected;
  out["expected_all_nonzero"] = r.expected_all_nonzero;
  out["other_violations"] = r.other_violations;
  return out;
}

Json to_json(const Example12Report& r) {
  Json out;
  out["p"] = r.p;
  out["bound"] = r.bound;
  out["one_in_image"] = r.one_in_image;
  out["one_witness"] = r.one_witness;
  Json images = Json::array();
  for (const auto& [k, img] : r.images) {
    Json row;
    row["k"] = k;
    row["image"] = img;
    images.push_back(row);
  }
  out["images"] = images;
  out["target_in_span"] = r.target_in_span;
  out["probe"] = to_json(r.probe);
  out["refuted"] = r.refuted;
  return out;
}

Json to_json(const FrobeniusReport& r) {
  Json out;
  out["p"] = r.p;
  out["s"] = r.s;
  out["remainder"] = r.remainder.to_string();
  Json h = Json::array();
  for (const auto& [i, v] : r.h) {
    Json row;
    row["i"] = i;
    row["h"] = v.get_str();
    h.push_back(row);
  }
  out["h"] = h;
  out["divisible"] = r.divisible;
  return out;
}

Json to_json(const Lemma81Report& r) {
  Json out;
  out["normalized"] = r.normalized.to_string();
  out["s"] = r.s;
  out["d"] = r.d;
  Json rejected = Json::array();
  for (const auto& [p, why] : r.rejected) {
    Json row;
    row["p"] = p;
    row["reason"] = why;
    rejected.push_back(row);
  }
  out["rejected"] = rejected;
  out["prime"] = r.prime ? Json(*r.prime) : Json(nullptr);
  out["l_value"] = r.l_value.to_string();
  out["ratio"] = r.v_ratio.to_string();
  out["ratio_valuation"] = r.ratio_valuation ? Json(r.ratio_valuation->to_string()) : Json(nullptr);
  Json trace = Json::array();
  for (const auto& t : r.trace) {
    Json row;
    row["summand"] = t.label;
    row["i"] = t.index;
    row["value"] = t.value.to_string();
    row["valuation"] = t.valuation.to_string();
    trace.push_back(row);
  }
  out["trace"] = trace;
  out["certified"] = r.certified;
  return out;
}

}  // namespace mathieu
