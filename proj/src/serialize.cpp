#include "sgforge/serialize.hpp"

#include <sstream>

namespace sgforge {
namespace {

using nlohmann::json;

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::string join(const std::vector<int>& values, char sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(values[i]);
  }
  return s;
}

json to_json(const HypCert& c) {
  return {{"low_multiplicity", c.low_multiplicity}, {"shift", optional_int(c.shift)},
          {"colength_two", c.colength_two},         {"square_eq_mi", c.square_eq_mi},
          {"square_eq_m2", c.square_eq_m2},         {"edim_three", c.edim_three},
          {"m2_shift", optional_int(c.m2_shift)}};
}

json to_json(const QdWitness& w) { return {{"f", w.f}, {"a1", w.a1}, {"checked", w.checked}}; }

}  // namespace

json to_json(const NumericalSemigroup& h, const CoreInvariants& core) {
  return {{"gens", h.min_generators()}, {"e", core.multiplicity},   {"edim", core.embedding_dim},
          {"type", core.type},          {"genus", core.genus},      {"frobenius", core.frobenius},
          {"conductor", core.conductor}, {"n_of_H", core.n_of_h},  {"pf", pseudo_frobenius(h)}};
}

json to_json(const RelativeIdeal& e) {
  return {{"min", e.min_elt()},
          {"tail", e.tail()},
          {"elements", e.elements_below_tail()},
          {"text", e.to_string()}};
}

json to_json(const ClassificationReport& r) {
  return {{"gens", r.generators},
          {"e", r.core.multiplicity},
          {"edim", r.core.embedding_dim},
          {"type", r.core.type},
          {"genus", r.core.genus},
          {"frobenius", r.core.frobenius},
          {"symmetric", r.symmetric},
          {"uesy_core", r.uesy ? json(r.uesy->core_generators) : json(nullptr)},
          {"self_dual_max", r.self_dual_max},
          {"almost_symmetric", r.almost_symmetric},
          {"nearly_gorenstein", r.nearly_gorenstein},
          {"min_mult", r.minimal_multiplicity},
          {"rho", r.canonical_index},
          {"endo_gens", r.endo_semigroup.min_generators()},
          {"endo_type", r.endo_type},
          {"hypersurface_endo", r.hypersurface_endo ? to_json(*r.hypersurface_endo) : json(nullptr)},
          {"qd_witness", r.quasi_decomposable ? to_json(*r.quasi_decomposable) : json(nullptr)}};
}

json to_json(const BgBounds& bg) {
  const auto& c = bg.upper_cert;
  json cert = {{"route", to_string(c.route)}, {"colength", c.colength}, {"removed", c.removed}};
  if (!c.subsemigroup_generators.empty()) cert["subsemigroup_gens"] = c.subsemigroup_generators;
  if (c.shift) cert["shift"] = *c.shift;
  return {{"lower", bg.lower},
          {"upper", bg.upper},
          {"lower_reason", bg.lower_reason},
          {"conditional_lower", optional_int(bg.conditional_lower)},
          {"upper_cert", cert}};
}

json to_json(const SurveyRow& row) {
  return {{"gens", row.generators},
          {"trace_colength", row.trace_colength},
          {"sd_min", row.sd_min},
          {"bg_lower", row.bg.lower},
          {"bg_upper", row.bg.upper},
          {"conditional_lower", optional_int(row.bg.conditional_lower)},
          {"trace_exceeds_sd", row.trace_exceeds_sd},
          {"trace_exceeds_bg", row.trace_exceeds_bg},
          {"sd_exceeds_bg", row.sd_exceeds_bg},
          {"violation", row.violation()}};
}

json to_json(const VerificationOutcome& o) {
  json cex = nullptr;
  if (o.first_counterexample) {
    const auto& c = *o.first_counterexample;
    cex = {{"gens", c.generators},
           {"detail", c.detail},
           {"report", c.report ? to_json(*c.report) : json(nullptr)}};
  }
  return {{"theorem", o.theorem_id}, {"description", o.description}, {"genus_bound", o.genus_bound},
          {"tested", o.tested},      {"pass", o.pass},               {"first_counterexample", cex}};
}

std::string report_csv_header() {
  return "gens,e,edim,type,genus,frobenius,symmetric,uesy_core,self_dual_max,almost_symmetric,"
         "nearly_gorenstein,min_mult,rho,endo_gens,endo_type,hypersurface_endo,qd_witness";
}

std::string to_csv(const ClassificationReport& r) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::ostringstream os;
  os << join(r.generators, ' ') << ',' << r.core.multiplicity << ',' << r.core.embedding_dim << ','
     << r.core.type << ',' << r.core.genus << ',' << r.core.frobenius << ',' << b(r.symmetric) << ','
     << (r.uesy ? join(r.uesy->core_generators, ' ') : std::string()) << ',' << b(r.self_dual_max)
     << ',' << b(r.almost_symmetric) << ',' << b(r.nearly_gorenstein) << ','
     << b(r.minimal_multiplicity) << ',' << r.canonical_index << ','
     << join(r.endo_semigroup.min_generators(), ' ') << ',' << r.endo_type << ','
     << b(r.hypersurface_endo.has_value()) << ',' << b(r.quasi_decomposable.has_value());
  return os.str();
}

}  // namespace sgforge
