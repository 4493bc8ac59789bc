#include "pscode/report.hpp"

namespace pscode {

namespace {

std::string dec(std::uint64_t v) { return std::to_string(v); }

Json histogram_json(const std::map<std::uint64_t, std::uint64_t>& h) {
  Json out = Json::object();
  for (const auto& [value, count] : h) out[dec(value)] = dec(count);
  return out;
}

Json witness_json(const CodeInstance& code, const std::vector<WitnessItem>& w) {
  Json out = Json::array();
  for (const auto& item : w) {
    const auto& set = item.set == 'M' ? code.messages()
                      : item.set == 'T' ? code.transmitter_rules()
                                        : code.receiver_rules();
    out.push_back({{"role", item.role},
                   {"set", item.set == 'M' ? "M" : item.set == 'T' ? "E_T" : "E_R"},
                   {"index", item.index},
                   {"basis", to_json(set[item.index])}});
  }
  return out;
}

Json probability_json(const CodeInstance& code, const ProbabilityResult& p) {
  Json out;
  out["name"] = p.name;
  if (p.value) {
    out["value"] = p.value->to_string();
    out["decimal"] = p.value->decimal();
  } else {
    out["value"] = nullptr;
    out["nullReason"] = p.nullReason;
  }
  out["expected"] = p.expected.to_string();
  out["match"] = p.match() ? Json(*p.match()) : Json(nullptr);
  out["witness"] = witness_json(code, p.witness);
  if (p.witnessK) out["witnessK"] = *p.witnessK;
  return out;
}

Json check_json(const ParameterCheck& c) {
  return {{"name", c.name}, {"expected", c.expected.str()}, {"observed", c.observed.str()}, {"pass", c.pass()}};
}

}  // namespace

Json to_json(const Mat& basis) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    Json row = Json::array();
    for (Fe x : basis.row(r)) row.push_back(x.bits);
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Subspace& x) { return to_json(x.basis()); }

Json params_json(const CodeParams& p) {
  return {{"qExp", p.field.degree()},
          {"q", p.field.order()},
          {"modulus", p.field.modulus()},
          {"delta", 2},
          {"nu", p.nu},
          {"s", p.s},
          {"m0", p.m0},
          {"s0", p.s0}};
}

Json validation_json(const Validation& v) {
  Json out;
  out["valid"] = v.ok();
  out["errors"] = Json::array();
  for (const auto& d : v.errors) out["errors"].push_back({{"rule", d.rule}, {"message", d.message}});
  out["warnings"] = Json::array();
  for (const auto& d : v.warnings) out["warnings"].push_back({{"rule", d.rule}, {"message", d.message}});
  return out;
}

Json code_json(const CodeInstance& code) {
  auto list = [](const std::vector<Subspace>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(to_json(x));
    return out;
  };
  Json out;
  out["schemaVersion"] = kSchemaVersion;
  out["params"] = params_json(code.params());
  out["form"] = to_json(code.space().form());
  out["anchor"] = to_json(code.frame().anchor);
  out["P0"] = to_json(code.frame().p0);
  out["sizes"] = {{"S", dec(code.sources().size())},
                  {"E_T", dec(code.transmitter_rules().size())},
                  {"E_R", dec(code.receiver_rules().size())},
                  {"M", dec(code.messages().size())}};
  out["S"] = list(code.sources());
  out["E_T"] = list(code.transmitter_rules());
  out["E_R"] = list(code.receiver_rules());
  out["M"] = list(code.messages());
  return out;
}

Json theorem1_json(const ParametersReport& r) {
  Json out;
  out["pass"] = r.pass();
  out["anzahl"] = Json::array();
  for (const auto& g : r.gates) {
    out["anzahl"].push_back({{"label", g.label},
                             {"m", g.m},
                             {"s", g.s},
                             {"n", g.nDim},
                             {"closedForm", g.closedForm.str()},
                             {"oracle", g.oracle ? Json(g.oracle->str()) : Json(nullptr)},
                             {"note", g.note},
                             {"pass", g.pass()}});
  }
  out["sizes"] = Json::array();
  for (const auto& c : r.sizes) out["sizes"].push_back(check_json(c));
  out["checks"] = Json::array();
  for (const auto& c : r.checks) out["checks"].push_back(check_json(c));
  return out;
}

Json uniform_json(const UniformCount& u) {
  Json out = {{"expected", dec(u.expected)},
              {"min", dec(u.min)},
              {"max", dec(u.max)},
              {"domainSize", dec(u.domainSize)},
              {"pass", u.pass()}};
  if (!u.pass()) out["histogram"] = histogram_json(u.histogram);
  return out;
}

Json lemma6_json(const IncidenceCountsReport& r) {
  return {{"pass", r.a.pass() && r.b.pass()}, {"a", uniform_json(r.a)}, {"b", uniform_json(r.b)}};
}

Json lemma8_json(const IncidenceCountsReport& r) {
  return {{"pass", r.c.pass() && r.d.pass()}, {"c", uniform_json(r.c)}, {"d", uniform_json(r.d)}};
}

Json lemma9_json(const IncidenceCountsReport& r) {
  return {{"pass", r.lemma9.pass()}, {"count", uniform_json(r.lemma9)}};
}

Json lemma10_json(const CodeInstance& code, const PairLemmaReport& r) {
  Json out;
  out["pass"] = r.pass();
  out["sampled"] = r.sampled;
  out["qualifyingPairs"] = dec(r.qualifyingPairs);
  out["pairsChecked"] = dec(r.pairsChecked);
  Json hist = Json::object();
  for (const auto& [k, n] : r.kHistogram) hist[std::to_string(k)] = dec(n);
  out["kHistogram"] = std::move(hist);
  out["failures"] = dec(r.failures);
  if (!r.emptyReason.empty()) out["emptyReason"] = r.emptyReason;
  Json fails = Json::array();
  for (const auto& f : r.firstFailures) {
    fails.push_back({{"m1", to_json(code.messages()[f.m1])},
                     {"m2", to_json(code.messages()[f.m2])},
                     {"k", f.k},
                     {"detail", f.detail}});
  }
  out["firstFailures"] = std::move(fails);
  return out;
}

Json theorem2_json(const CodeInstance& code, const AttackReport& r) {
  Json out;
  out["pass"] = r.all_match();
  out["P_I"] = probability_json(code, r.pI);
  out["P_S"] = probability_json(code, r.pS);
  out["P_T"] = probability_json(code, r.pT);
  out["P_R0"] = probability_json(code, r.pR0);
  out["P_R1"] = probability_json(code, r.pR1);
  return out;
}

}  // namespace pscode
