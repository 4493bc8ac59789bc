#include "pscode/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "pscode/a2code.hpp"
#include "pscode/attacks.hpp"
#include "pscode/report.hpp"

namespace pscode {

namespace {

struct CsvRow {
  std::string section, item, expected, observed, pass;
};

class Emitter {
 public:
  explicit Emitter(std::ostream& log) : log_(log) {}

  void check(const std::string& section, const std::string& item, const std::string& expected,
             const std::string& observed, std::optional<bool> pass) {
    const std::string verdict = !pass ? "N/A" : *pass ? "PASS" : "FAIL";
    log_ << verdict << ' ' << section << ' ' << item << " expected=" << expected << " observed=" << observed << '\n';
    rows_.push_back({section, item, expected, observed, !pass ? "n/a" : *pass ? "true" : "false"});
    if (pass == false) ok_ = false;
  }

  bool ok() const { return ok_; }

  std::string csv() const {
    std::ostringstream os;
    os << "section,item,expected,observed,pass\n";
    for (const auto& r : rows_) {
      os << quote(r.section) << ',' << quote(r.item) << ',' << quote(r.expected) << ',' << quote(r.observed) << ','
         << r.pass << '\n';
    }
    return os.str();
  }

 private:
  static std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + '"';
  }

  std::ostream& log_;
  std::vector<CsvRow> rows_;
  bool ok_ = true;
};

Field make_field(const RunConfig& cfg) {
  return cfg.modulus ? Field(cfg.qExp, *cfg.modulus) : Field(cfg.qExp);
}

CodeParams make_params(const RunConfig& cfg) { return {make_field(cfg), cfg.nu, cfg.s, cfg.m0, cfg.s0}; }

void emit_uniform(Emitter& em, const std::string& section, const UniformCount& u) {
  const std::string observed = u.min == u.max ? std::to_string(u.min)
                                              : "[" + std::to_string(u.min) + "," + std::to_string(u.max) + "]";
  em.check(section, u.name, std::to_string(u.expected), observed, u.pass());
}

void emit_theorem1(Emitter& em, const ParametersReport& r) {
  for (const auto& g : r.gates) {
    em.check("theorem1", g.label + "=N(" + std::to_string(g.m) + "," + std::to_string(g.s) + ";" +
                             std::to_string(g.nDim) + ") oracle",
             g.closedForm.str(), g.oracle ? g.oracle->str() : "skipped", g.oracle ? std::optional(g.pass()) : std::nullopt);
  }
  for (const auto& c : r.sizes) em.check("theorem1", c.name, c.expected.str(), c.observed.str(), c.pass());
  for (const auto& c : r.checks) em.check("theorem1", c.name, c.expected.str(), c.observed.str(), c.pass());
}

void emit_counts(Emitter& em, const IncidenceCountsReport& r) {
  emit_uniform(em, "lemma6", r.a);
  emit_uniform(em, "lemma6", r.b);
  emit_uniform(em, "lemma8", r.c);
  emit_uniform(em, "lemma8", r.d);
  emit_uniform(em, "lemma9", r.lemma9);
}

void emit_lemma10(Emitter& em, const PairLemmaReport& r) {
  if (!r.emptyReason.empty()) {
    em.check("lemma10", "pairs", "-", r.emptyReason, std::nullopt);
    return;
  }
  em.check("lemma10", "pairs checked", std::to_string(r.pairsChecked) + " without failure",
           std::to_string(r.failures) + " failures", r.pass());
}

void emit_theorem2(Emitter& em, const AttackReport& r) {
  for (const auto* p : r.all()) {
    em.check("theorem2", p->name, p->expected.to_string(), p->value ? p->value->to_string() : "null", p->match());
  }
}

void write(const RunConfig& cfg, std::ostream& out, const std::string& doc) {
  if (cfg.outputPath) {
    std::ofstream f(*cfg.outputPath, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + *cfg.outputPath);
    f << doc;
  } else {
    out << doc;
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int run_count(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const Field f = make_field(cfg);
  if (cfg.n % 2 != 0) {
    log << "error: --n must be even (symplectic dimension)\n";
    return exit_code::kUsage;
  }
  const BigInt closed = count_N(cfg.m, cfg.s, cfg.n, f);
  const BigInt gb = gaussian_binomial(cfg.n, cfg.m, f.order());
  std::optional<BigInt> oracle;
  std::string note;
  try {
    oracle = count_N_oracle(cfg.m, cfg.s, cfg.n, f, cfg.oracleBudget);
  } catch (const BudgetExceeded& e) {
    note = e.what();
  }
  Emitter em(log);
  em.check("count", "N oracle", closed.str(), oracle ? oracle->str() : "skipped",
           oracle ? std::optional(*oracle == closed) : std::nullopt);
  if (cfg.format == Format::Csv) {
    std::ostringstream os;
    os << "m,s,n,q,N,gaussianBinomial,oracle\n"
       << cfg.m << ',' << cfg.s << ',' << cfg.n << ',' << f.order() << ',' << closed.str() << ',' << gb.str() << ','
       << (oracle ? oracle->str() : "") << '\n';
    write(cfg, out, os.str());
  } else {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["command"] = "count";
    j["params"] = {{"m", cfg.m}, {"s", cfg.s}, {"n", cfg.n}, {"qExp", f.degree()}, {"q", f.order()},
                   {"modulus", f.modulus()}};
    j["N"] = closed.str();
    j["gaussianBinomial"] = gb.str();
    j["oracle"] = oracle ? Json(oracle->str()) : Json(nullptr);
    if (!note.empty()) j["oracleNote"] = note;
    j["match"] = oracle ? Json(*oracle == closed) : Json(nullptr);
    write(cfg, out, dump(j));
  }
  return em.ok() ? exit_code::kOk : exit_code::kCheckFailed;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const auto start = std::chrono::steady_clock::now();
  try {
    if (cfg.command == Command::Count) return run_count(cfg, out, log);

    const CodeParams params = make_params(cfg);
    const Validation v = validate_params(params);
    for (const auto& d : v.errors) log << "error [" << d.rule << "]: " << d.message << '\n';
    for (const auto& d : v.warnings) log << "warning [" << d.rule << "]: " << d.message << '\n';

    if (cfg.command == Command::Validate) {
      if (cfg.format == Format::Csv) {
        std::ostringstream os;
        os << "severity,rule,message\n";
        for (const auto& d : v.errors) os << "error," << d.rule << ",\"" << d.message << "\"\n";
        for (const auto& d : v.warnings) os << "warning," << d.rule << ",\"" << d.message << "\"\n";
        write(cfg, out, os.str());
      } else {
        Json j;
        j["schemaVersion"] = kSchemaVersion;
        j["command"] = "validate";
        j["params"] = params_json(params);
        j.update(validation_json(v));
        write(cfg, out, dump(j));
      }
      return v.ok() ? exit_code::kOk : exit_code::kUsage;
    }
    if (!v.ok()) return exit_code::kUsage;

    const CodeInstance code = build_code(params);
    log << "built code: |S|=" << code.sources().size() << " |E_T|=" << code.transmitter_rules().size()
        << " |E_R|=" << code.receiver_rules().size() << " |M|=" << code.messages().size() << '\n';

    if (cfg.command == Command::Build) {
      if (cfg.format == Format::Csv) {
        log << "error: build emits JSON only (nested bases)\n";
        return exit_code::kUsage;
      }
      write(cfg, out, dump(code_json(code)));
      return exit_code::kOk;
    }

    const IncidenceTables inc = IncidenceTables::build(code);
    Emitter em(log);
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["params"] = params_json(params);

    const bool verify = cfg.command == Command::Verify || cfg.command == Command::Report;
    const bool attack = cfg.command == Command::Attack || cfg.command == Command::Report;
    if (verify) {
      const auto t1 = verify_parameters(code, cfg.oracleBudget);
      const auto counts = verify_incidence_counts(code, inc);
      const auto pairs = verify_pair_lemma(code, inc, cfg.pairSample.value_or(default_pair_sample(code)));
      emit_theorem1(em, t1);
      emit_counts(em, counts);
      emit_lemma10(em, pairs);
      j["theorem1"] = theorem1_json(t1);
      j["lemma6"] = lemma6_json(counts);
      j["lemma8"] = lemma8_json(counts);
      j["lemma9"] = lemma9_json(counts);
      j["lemma10"] = lemma10_json(code, pairs);
    }
    if (attack) {
      const auto rep = attack_probabilities(code, inc);
      emit_theorem2(em, rep);
      j["theorem2"] = theorem2_json(code, rep);
    }
    if (cfg.command == Command::Report) {
      j["runtimeMillis"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    }
    write(cfg, out, cfg.format == Format::Csv ? em.csv() : dump(j));
    return em.ok() ? exit_code::kOk : exit_code::kCheckFailed;
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const std::out_of_range& e) {
    log << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  }
}

}  // namespace pscode
