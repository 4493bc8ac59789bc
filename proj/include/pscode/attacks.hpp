#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pscode/a2code.hpp"
#include "pscode/enumeration.hpp"

namespace pscode {

/// Exact non-negative rational, always reduced, positive denominator.
class Ratio {
 public:
  Ratio(std::uint64_t num = 0, std::uint64_t den = 1);

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }

  std::string to_string() const;   // "1/4"
  std::string decimal() const;     // "0.250000"

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

 private:
  std::uint64_t num_;
  std::uint64_t den_;
};

/// Fixed-size bitset with the AND-popcount queries the attack maxima need.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  std::size_t size() const { return size_; }
  std::size_t count() const;
  std::vector<std::size_t> indices() const;

  friend std::size_t count_and(const Bits& a, const Bits& b);
  friend std::vector<std::size_t> and_indices(const Bits& a, const Bits& b);
  friend std::size_t count_and(const Bits& a, const Bits& b, const Bits& c);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Containment relations between the four materialized sets.
struct IncidenceTables {
  std::vector<Bits> receiverInMessage;      // per m: bits over E_R
  std::vector<Bits> transmitterInMessage;   // per m: bits over E_T
  std::vector<Bits> receiverInTransmitter;  // per e_T: bits over E_R
  std::vector<Bits> transmitterOverReceiver;  // per e_R: bits over E_T
  std::vector<std::vector<std::size_t>> messagesWithReceiver;     // per e_R: ascending m indices
  std::vector<std::vector<std::size_t>> messagesWithTransmitter;  // per e_T: ascending m indices

  static IncidenceTables build(const CodeInstance& code);
};

struct WitnessItem {
  std::string role;  // "m", "m'", "eT", "eR"
  char set;          // 'M', 'T' (E_T), 'R' (E_R)
  std::size_t index;
};

struct ProbabilityResult {
  std::string name;
  std::optional<Ratio> value;   // empty when the maximum ranges over an empty set
  std::string nullReason;
  Ratio expected;
  std::vector<WitnessItem> witness;
  std::optional<std::size_t> witnessK;  // dim(s ∩ s') for message-pair witnesses

  /// Empty when value is empty (not applicable).
  std::optional<bool> match() const {
    if (!value) return std::nullopt;
    return *value == expected;
  }
};

struct AttackReport {
  ProbabilityResult pI, pS, pT, pR0, pR1;

  std::vector<const ProbabilityResult*> all() const { return {&pI, &pS, &pT, &pR0, &pR1}; }
  /// True iff every applicable probability matches its formula value.
  bool all_match() const;
};

AttackReport attack_probabilities(const CodeInstance& code, const IncidenceTables& inc);
AttackReport attack_probabilities(const CodeInstance& code);

/// A per-object count that should be constant over its domain.
struct UniformCount {
  std::string name;
  std::uint64_t expected = 0;
  std::uint64_t domainSize = 0;
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;  // value -> number of objects

  bool pass() const { return domainSize > 0 && min == expected && max == expected; }
};

struct IncidenceCountsReport {
  UniformCount a;       // e_T inside each m: q^{4(s-1)}
  UniformCount b;       // e_R inside each m: q^{2s}
  UniformCount c;       // e_R inside each e_T: q^2
  UniformCount d;       // e_T containing each e_R: q^{2(nu-1)}
  UniformCount lemma9;  // e_T with e_R ⊆ e_T ⊆ m, per (m, e_R ⊆ m): q^{2(s-1)}

  bool pass() const { return a.pass() && b.pass() && c.pass() && d.pass() && lemma9.pass(); }
};

IncidenceCountsReport verify_incidence_counts(const CodeInstance& code, const IncidenceTables& inc);

struct PairFailure {
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  std::size_t k = 0;
  std::string detail;
};

struct PairLemmaReport {
  bool sampled = false;
  std::uint64_t qualifyingPairs = 0;  // unordered pairs m1 != m2 sharing some e_T
  std::uint64_t pairsChecked = 0;
  std::map<std::size_t, std::uint64_t> kHistogram;
  std::uint64_t failures = 0;
  std::vector<PairFailure> firstFailures;  // at most 10
  std::string emptyReason;

  bool pass() const { return emptyReason.empty() && pairsChecked > 0 && failures == 0; }
};

inline constexpr std::size_t kAllPairs = 0;

/// All pairs up to |M| = 320, a 20000-pair sample beyond.
std::size_t default_pair_sample(const CodeInstance& code);

/// samplePairs == kAllPairs checks every qualifying pair; otherwise a deterministic sample of that size.
PairLemmaReport verify_pair_lemma(const CodeInstance& code, const IncidenceTables& inc,
                                  std::size_t samplePairs = kAllPairs);

struct ParameterCheck {
  std::string name;
  BigInt expected;
  BigInt observed;
  bool pass() const { return expected == observed; }
};

struct OracleGate {
  std::string label;  // "n1", "n2", "n3"
  std::size_t m = 0, s = 0, nDim = 0;
  BigInt closedForm;
  std::optional<BigInt> oracle;  // empty when the oracle exceeded its budget
  std::string note;

  bool pass() const { return !oracle || *oracle == closedForm; }
};

struct ParametersReport {
  std::vector<OracleGate> gates;
  std::vector<ParameterCheck> sizes;   // |S|, |E_T|, |E_R|, |M| vs formulas
  std::vector<ParameterCheck> checks;  // double counts and cross-checks
  bool pass() const;
};

ParametersReport verify_parameters(const CodeInstance& code, std::uint64_t oracleBudget = kDefaultOracleBudget);

}  // namespace pscode
