#include "pscode/attacks.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pscode {

namespace {

std::uint64_t ipow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

constexpr const char* kDegenerate = "s = 1: a single source state, substitution maxima are not meaningful";

// Keeps the first strict maximum seen.
struct Best {
  std::optional<Ratio> value;
  std::vector<WitnessItem> witness;

  bool offer(const Ratio& r) { return !value || r > *value; }
};

void finish(ProbabilityResult& out, Best best, const std::string& emptyReason) {
  out.value = best.value;
  out.witness = std::move(best.witness);
  if (!out.value) out.nullReason = emptyReason;
}

std::size_t source_overlap(const CodeInstance& code, std::size_t m1, std::size_t m2) {
  const auto& src = code.sources();
  return subspace_intersect(code.field(), src[code.message_sources()[m1]], src[code.message_sources()[m2]]).dim();
}

void record(UniformCount& u, std::uint64_t value) {
  if (u.domainSize == 0) {
    u.min = u.max = value;
  } else {
    u.min = std::min(u.min, value);
    u.max = std::max(u.max, value);
  }
  ++u.domainSize;
  ++u.histogram[value];
}

// Intersection of every member of a non-empty set.
Subspace common_core(const Field& f, const std::vector<Subspace>& set) {
  if (set.empty()) return {};
  Subspace core = set.front();
  for (const auto& x : set) {
    if (core.dim() == 0) break;
    core = subspace_intersect(f, core, x);
  }
  return core;
}

// Marks the members of the sorted `set` that lie inside `x`. When every member
// has the same dimension k and contains `core`, the members inside x are among
// the k-dimensional subspaces between core and x, which is usually a far
// shorter list than the set itself.
void mark_contained(const Field& f, const std::vector<Subspace>& set, const Subspace& core, const Subspace& x,
                    Bits& out) {
  if (set.empty()) return;
  const std::size_t k = set.front().dim();
  const bool uniform = std::all_of(set.begin(), set.end(), [&](const Subspace& y) { return y.dim() == k; });
  if (uniform) {
    if (k > x.dim() || !is_subset(f, core, x)) return;
    if (gaussian_binomial(x.dim() - core.dim(), k - core.dim(), f.order()) < set.size()) {
      for_each_subspace_between(f, {core, x, k, std::nullopt}, [&](const Subspace& y) {
        auto it = std::lower_bound(set.begin(), set.end(), y);
        if (it != set.end() && *it == y) out.set(static_cast<std::size_t>(it - set.begin()));
      });
      return;
    }
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (is_subset(f, set[i], x)) out.set(i);
  }
}

// Sparse tally of how many listed objects each message contains, tracking the
// first message (lowest index) with the largest tally.
class MessageTally {
 public:
  explicit MessageTally(std::size_t messages) : counts_(messages, 0) {}

  void add(const std::vector<std::size_t>& messages, std::size_t skip) {
    for (auto m : messages) {
      if (m == skip) continue;
      if (counts_[m]++ == 0) touched_.push_back(m);
    }
  }

  // (count, message) maximizing count, lowest index on ties; m' = first index != skip when all are zero.
  std::pair<std::size_t, std::size_t> best(std::size_t skip) const {
    std::pair<std::size_t, std::size_t> out{0, skip == 0 ? 1 : 0};
    for (auto m : touched_) {
      if (counts_[m] > out.first || (counts_[m] == out.first && m < out.second)) out = {counts_[m], m};
    }
    return out;
  }

  void reset() {
    for (auto m : touched_) counts_[m] = 0;
    touched_.clear();
  }

 private:
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> touched_;
};

}  // namespace

Ratio::Ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::domain_error("ratio with zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Ratio::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::string Ratio::decimal() const {
  // Exact rounding to 6 places: floor((num * 10^6 + den/2) / den).
  const unsigned __int128 scaled = static_cast<unsigned __int128>(num_) * 1'000'000u + den_ / 2;
  const auto micro = static_cast<std::uint64_t>(scaled / den_);
  std::ostringstream os;
  os << micro / 1'000'000 << '.' << std::setw(6) << std::setfill('0') << micro % 1'000'000;
  return os.str();
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  const auto lhs = static_cast<unsigned __int128>(a.num_) * b.den_;
  const auto rhs = static_cast<unsigned __int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t Bits::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::size_t> Bits::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) out.push_back(i);
  }
  return out;
}

std::size_t count_and(const Bits& a, const Bits& b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
  return c;
}

std::vector<std::size_t> and_indices(const Bits& a, const Bits& b) {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    for (std::uint64_t bits = a.words_[w] & b.words_[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

std::size_t count_and(const Bits& a, const Bits& b, const Bits& c) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    n += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i] & c.words_[i]));
  }
  return n;
}

IncidenceTables IncidenceTables::build(const CodeInstance& code) {
  const Field& f = code.field();
  const auto& M = code.messages();
  const auto& T = code.transmitter_rules();
  const auto& R = code.receiver_rules();
  const Subspace coreT = common_core(f, T);
  const Subspace coreR = common_core(f, R);
  IncidenceTables t;
  t.receiverInMessage.assign(M.size(), Bits(R.size()));
  t.transmitterInMessage.assign(M.size(), Bits(T.size()));
  t.receiverInTransmitter.assign(T.size(), Bits(R.size()));
  t.transmitterOverReceiver.assign(R.size(), Bits(T.size()));
  t.messagesWithReceiver.assign(R.size(), {});
  t.messagesWithTransmitter.assign(T.size(), {});
  for (std::size_t i = 0; i < M.size(); ++i) {
    mark_contained(f, R, coreR, M[i], t.receiverInMessage[i]);
    mark_contained(f, T, coreT, M[i], t.transmitterInMessage[i]);
    for (auto r : t.receiverInMessage[i].indices()) t.messagesWithReceiver[r].push_back(i);
    for (auto e : t.transmitterInMessage[i].indices()) t.messagesWithTransmitter[e].push_back(i);
  }
  for (std::size_t e = 0; e < T.size(); ++e) {
    mark_contained(f, R, coreR, T[e], t.receiverInTransmitter[e]);
    for (auto r : t.receiverInTransmitter[e].indices()) t.transmitterOverReceiver[r].set(e);
  }
  return t;
}

bool AttackReport::all_match() const {
  for (const auto* p : all()) {
    if (p->match() == false) return false;
  }
  return true;
}

AttackReport attack_probabilities(const CodeInstance& code) {
  return attack_probabilities(code, IncidenceTables::build(code));
}

AttackReport attack_probabilities(const CodeInstance& code, const IncidenceTables& inc) {
  const auto& p = code.params();
  const std::uint64_t q = code.field().order();
  const std::size_t nM = code.messages().size();
  const std::size_t nT = code.transmitter_rules().size();
  const std::size_t nR = code.receiver_rules().size();
  const Ratio small(1, ipow(q, 2 * (p.nu - p.s)));
  const Ratio inv_q(1, q);

  AttackReport rep;
  rep.pI.name = "P_I";
  rep.pS.name = "P_S";
  rep.pT.name = "P_T";
  rep.pR0.name = "P_R0";
  rep.pR1.name = "P_R1";
  rep.pI.expected = small;
  rep.pS.expected = inv_q;
  rep.pT.expected = inv_q;
  rep.pR0.expected = small;
  rep.pR1.expected = inv_q;

  {
    Best best;
    for (std::size_t m = 0; m < nM && nR > 0; ++m) {
      const Ratio r(inc.receiverInMessage[m].count(), nR);
      if (best.offer(r)) best = {r, {{"m", 'M', m}}};
    }
    finish(rep.pI, std::move(best), "no messages or no receiver rules");
  }
  {
    Best best;
    MessageTally tally(nM);
    for (std::size_t m = 0; m < nM && nM >= 2 && p.s >= 2; ++m) {
      const auto inside = inc.receiverInMessage[m].indices();
      if (inside.empty()) continue;
      for (auto r : inside) tally.add(inc.messagesWithReceiver[r], m);
      const auto [num, m2] = tally.best(m);
      tally.reset();
      const Ratio r(num, inside.size());
      if (best.offer(r)) best = {r, {{"m", 'M', m}, {"m'", 'M', m2}}};
    }
    finish(rep.pS, std::move(best), p.s < 2 ? kDegenerate : "fewer than two messages: no substitute m' != m exists");
    if (rep.pS.value) rep.pS.witnessK = source_overlap(code, rep.pS.witness[0].index, rep.pS.witness[1].index);
  }
  {
    Best best;
    for (std::size_t e = 0; e < nT; ++e) {
      const std::size_t den = inc.receiverInTransmitter[e].count();
      if (den == 0) continue;
      for (std::size_t m = 0; m < nM; ++m) {
        if (inc.transmitterInMessage[m].test(e)) continue;
        const Ratio r(count_and(inc.receiverInMessage[m], inc.receiverInTransmitter[e]), den);
        if (best.offer(r)) best = {r, {{"eT", 'T', e}, {"m", 'M', m}}};
      }
    }
    finish(rep.pT, std::move(best), "every message contains every transmitter rule: no m with eT not in m");
  }
  {
    Best best;
    for (std::size_t r = 0; r < nR; ++r) {
      const std::size_t den = inc.transmitterOverReceiver[r].count();
      if (den == 0) continue;
      for (std::size_t m = 0; m < nM; ++m) {
        const Ratio v(count_and(inc.transmitterInMessage[m], inc.transmitterOverReceiver[r]), den);
        if (best.offer(v)) best = {v, {{"eR", 'R', r}, {"m", 'M', m}}};
      }
    }
    finish(rep.pR0, std::move(best), "no receiver rule is incident with a transmitter rule");
  }
  {
    Best best;
    MessageTally tally(nM);
    for (std::size_t r = 0; r < nR && nM >= 2 && p.s >= 2; ++r) {
      // eR ⊆ eT ⊆ m forces eR ⊆ m, so only those messages have a nonzero denominator.
      for (auto m : inc.messagesWithReceiver[r]) {
        const auto between = and_indices(inc.transmitterInMessage[m], inc.transmitterOverReceiver[r]);
        if (between.empty()) continue;
        for (auto e : between) tally.add(inc.messagesWithTransmitter[e], m);
        const auto [num, m2] = tally.best(m);
        tally.reset();
        const Ratio v(num, between.size());
        if (best.offer(v)) best = {v, {{"eR", 'R', r}, {"m", 'M', m}, {"m'", 'M', m2}}};
      }
    }
    finish(rep.pR1, std::move(best), p.s < 2 ? kDegenerate : "fewer than two messages: no substitute m' != m exists");
    if (rep.pR1.value) rep.pR1.witnessK = source_overlap(code, rep.pR1.witness[1].index, rep.pR1.witness[2].index);
  }
  return rep;
}

IncidenceCountsReport verify_incidence_counts(const CodeInstance& code, const IncidenceTables& inc) {
  const auto& p = code.params();
  const std::uint64_t q = code.field().order();
  IncidenceCountsReport rep;
  auto expect = [](UniformCount& u, std::string name, std::uint64_t value) {
    u.name = std::move(name);
    u.expected = value;
  };
  expect(rep.a, "a", ipow(q, 4 * (p.s - 1)));
  expect(rep.b, "b", ipow(q, 2 * p.s));
  expect(rep.c, "c", ipow(q, 2));
  expect(rep.d, "d", ipow(q, 2 * (p.nu - 1)));
  expect(rep.lemma9, "lemma9", ipow(q, 2 * (p.s - 1)));
  for (std::size_t m = 0; m < code.messages().size(); ++m) {
    record(rep.a, inc.transmitterInMessage[m].count());
    record(rep.b, inc.receiverInMessage[m].count());
    for (auto r : inc.receiverInMessage[m].indices()) {
      record(rep.lemma9, count_and(inc.transmitterInMessage[m], inc.transmitterOverReceiver[r]));
    }
  }
  for (const auto& bits : inc.receiverInTransmitter) record(rep.c, bits.count());
  for (const auto& bits : inc.transmitterOverReceiver) record(rep.d, bits.count());
  return rep;
}

std::size_t default_pair_sample(const CodeInstance& code) {
  return code.messages().size() <= 320 ? kAllPairs : 20000;
}

PairLemmaReport verify_pair_lemma(const CodeInstance& code, const IncidenceTables& inc, std::size_t samplePairs) {
  PairLemmaReport rep;
  const auto& p = code.params();
  const Field& f = code.field();
  const std::uint64_t q = f.order();
  if (p.s < 2) {
    rep.emptyReason = "s < 2: no two distinct source states can share the anchor";
    return rep;
  }
  const auto& M = code.messages();
  const auto& S = code.sources();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<bool> seen(M.size(), false);
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<std::size_t> partners;
    for (auto e : inc.transmitterInMessage[i].indices()) {
      for (auto j : inc.messagesWithTransmitter[e]) {
        if (j > i && !seen[j]) {
          seen[j] = true;
          partners.push_back(j);
        }
      }
    }
    std::sort(partners.begin(), partners.end());
    for (auto j : partners) {
      seen[j] = false;
      pairs.emplace_back(i, j);
    }
  }
  rep.qualifyingPairs = pairs.size();
  if (pairs.empty()) {
    rep.emptyReason = "no two distinct messages share a transmitter rule";
    return rep;
  }
  if (samplePairs > 0 && samplePairs < pairs.size()) {
    std::mt19937_64 rng(0x5eedULL);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(samplePairs);
    std::sort(pairs.begin(), pairs.end());
    rep.sampled = true;
  }

  for (const auto& [i, j] : pairs) {
    ++rep.pairsChecked;
    const Subspace common_src = subspace_intersect(f, S[code.message_sources()[i]], S[code.message_sources()[j]]);
    const std::size_t k = common_src.dim();
    ++rep.kHistogram[k];
    std::vector<std::string> problems;
    if (k < 2 || k > 2 * p.s - 1) problems.push_back("k outside [2, 2s-1]");
    const Subspace meet = subspace_intersect(f, M[i], M[j]);
    if (meet.dim() != k + 2) problems.push_back("dim(m1 ∩ m2) = " + std::to_string(meet.dim()));
    // m1 ∩ m2 = (s1 ∩ s2) + e_T' for any shared e_T'.
    std::size_t shared_idx = 0;
    while (!inc.transmitterInMessage[i].test(shared_idx) || !inc.transmitterInMessage[j].test(shared_idx)) {
      ++shared_idx;
    }
    if (subspace_sum(f, common_src, code.transmitter_rules()[shared_idx]) != meet) {
      problems.push_back("m1 ∩ m2 != (s1 ∩ s2) + eT'");
    }
    const std::size_t er = count_and(inc.receiverInMessage[i], inc.receiverInMessage[j]);
    if (er != ipow(q, k)) problems.push_back("eR count " + std::to_string(er));
    if (k >= 2) {
      for (auto r : and_indices(inc.receiverInMessage[i], inc.receiverInMessage[j])) {
        const std::size_t et =
            count_and(inc.transmitterInMessage[i], inc.transmitterInMessage[j], inc.transmitterOverReceiver[r]);
        if (et != ipow(q, k - 2)) {
          problems.push_back("eT count " + std::to_string(et) + " for eR #" + std::to_string(r));
          break;
        }
      }
    }
    if (!problems.empty()) {
      ++rep.failures;
      if (rep.firstFailures.size() < 10) {
        std::string detail;
        for (const auto& s : problems) detail += (detail.empty() ? "" : "; ") + s;
        rep.firstFailures.push_back({i, j, k, detail});
      }
    }
  }
  return rep;
}

bool ParametersReport::pass() const {
  return std::all_of(gates.begin(), gates.end(), [](const auto& g) { return g.pass(); }) &&
         std::all_of(sizes.begin(), sizes.end(), [](const auto& c) { return c.pass(); }) &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass(); });
}

ParametersReport verify_parameters(const CodeInstance& code, std::uint64_t oracleBudget) {
  const auto& p = code.params();
  const Field& f = code.field();
  const std::uint64_t q = f.order();
  ParametersReport rep;

  auto gate = [&](std::string label, std::size_t m, std::size_t s, std::size_t nDim) {
    OracleGate g{std::move(label), m, s, nDim, count_N(m, s, nDim, f), std::nullopt, ""};
    try {
      g.oracle = count_N_oracle(m, s, nDim, f, oracleBudget);
    } catch (const BudgetExceeded& e) {
      g.note = e.what();
    }
    rep.gates.push_back(std::move(g));
    return rep.gates.back().closedForm;
  };
  const BigInt n1 = gate("n1", 2 * p.s - 2, p.s - 1, 2 * p.nu - 2);
  const BigInt n2 = gate("n2", p.m0 - 2 * p.s, p.s0 + 1 - p.s, 2 * (p.nu - p.s));
  const BigInt n3 = gate("n3", p.m0 - 2, p.s0, 2 * p.nu - 2);

  const BigInt sizeS = code.sources().size();
  const BigInt sizeT = code.transmitter_rules().size();
  const BigInt sizeR = code.receiver_rules().size();
  const BigInt sizeM = code.messages().size();

  // A non-integral quotient can never equal an observed size; -1 marks it.
  const BigInt formulaS = (n3 != 0 && (n1 * n2) % n3 == 0) ? BigInt(n1 * n2 / n3) : BigInt(-1);
  rep.sizes.push_back({"|S|", formulaS, sizeS});
  rep.sizes.push_back({"|E_T|", BigInt(ipow(q, 4 * (p.nu - 1))), sizeT});
  rep.sizes.push_back({"|E_R|", BigInt(ipow(q, 2 * p.nu)), sizeR});
  rep.sizes.push_back({"|M|", BigInt(ipow(q, 4 * (p.nu - p.s))) * formulaS, sizeM});

  rep.checks.push_back({"n1*n2 = n3*|S|", n1 * n2, n3 * sizeS});
  rep.checks.push_back({"|M|*a = |S|*|E_T|", sizeS * sizeT, sizeM * ipow(q, 4 * (p.s - 1))});

  const auto param = parametrized_transmitter_rules(code);
  std::size_t found = 0;
  for (const auto& x : param) found += code.transmitter_index(x) ? 1 : 0;
  rep.checks.push_back({"parametrized E_T size", sizeT, BigInt(param.size())});
  rep.checks.push_back({"parametrized E_T members in E_T", BigInt(param.size()), BigInt(found)});

  if (gaussian_binomial(2 * p.nu, 2 * p.s, q) <= oracleBudget) {
    const auto by_def = messages_by_definition(code);
    std::size_t in_both = 0;
    for (const auto& x : by_def) in_both += code.message_index(x) ? 1 : 0;
    rep.checks.push_back({"M by definition size", sizeM, BigInt(by_def.size())});
    rep.checks.push_back({"M by definition members in M", BigInt(by_def.size()), BigInt(in_both)});
  }
  return rep;
}

}  // namespace pscode
