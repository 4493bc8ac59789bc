#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pscode/field.hpp"
#include "pscode/geometry.hpp"
#include "pscode/linalg.hpp"

namespace pscode {

/// Parameters of the delta = 2 construction over GF(q), q = 2^e.
struct CodeParams {
  Field field{1};
  std::size_t nu = 0;
  std::size_t s = 0;
  std::size_t m0 = 0;
  std::size_t s0 = 0;
};

struct Diagnostic {
  std::string rule;
  std::string message;
};

struct Validation {
  std::vector<Diagnostic> errors;
  std::vector<Diagnostic> warnings;

  bool ok() const { return errors.empty(); }
};

/// Checks s-1 <= s0 <= nu, 2s <= m0, 2s0 <= m0 and the derived feasibility
/// conditions (m0 >= 2 s0 + 2, m0 <= 2 nu, m0 <= nu + s0 + 1, s <= nu).
Validation validate_params(const CodeParams& p);

struct Frame {
  Vec nu0;           // e_1
  Subspace anchor;   // <e_1, e_{2nu+1}>
  Subspace p0;       // type (m0, 2s0, s0, 1), anchor ⊆ P0 ⊆ anchor^⊥
};

/// The fixed frame in which the construction is carried out.
Frame canonical_frame(const CodeParams& p);

struct Reject {
  friend bool operator==(Reject, Reject) { return true; }
};

/// Result of the decoding map: a source state or reject.
using DecodeResult = std::variant<Subspace, Reject>;

inline bool is_reject(const DecodeResult& r) { return std::holds_alternative<Reject>(r); }

/// Types of the four sets for given s.
SubspaceType source_type(std::size_t s);
SubspaceType transmitter_type();
SubspaceType receiver_type();
SubspaceType message_type(std::size_t s);

/// A fully materialized code. All four sets are sorted by canonical basis.
class CodeInstance {
 public:
  const CodeParams& params() const { return params_; }
  const PsSpace& space() const { return space_; }
  const Field& field() const { return space_.field(); }
  const Frame& frame() const { return frame_; }

  const std::vector<Subspace>& sources() const { return sources_; }
  const std::vector<Subspace>& transmitter_rules() const { return transmitter_; }
  const std::vector<Subspace>& receiver_rules() const { return receiver_; }
  const std::vector<Subspace>& messages() const { return messages_; }

  /// Index into sources() of m ∩ P0, for every message.
  const std::vector<std::size_t>& message_sources() const { return message_sources_; }

  std::optional<std::size_t> source_index(const Subspace& x) const;
  std::optional<std::size_t> transmitter_index(const Subspace& x) const;
  std::optional<std::size_t> receiver_index(const Subspace& x) const;
  std::optional<std::size_t> message_index(const Subspace& x) const;

  /// f(src, e_T) = src + e_T.
  Subspace encode(const Subspace& src, const Subspace& eT) const;
  /// g(m, e_R) = m ∩ P0 if e_R ⊆ m, reject otherwise.
  DecodeResult decode(const Subspace& m, const Subspace& eR) const;
  /// e_R authenticates what e_T encodes iff e_R ⊆ e_T.
  bool incidence(const Subspace& eR, const Subspace& eT) const;

 private:
  friend CodeInstance build_code(const CodeParams& p);
  CodeInstance(CodeParams p, PsSpace space, Frame frame);

  CodeParams params_;
  PsSpace space_;
  Frame frame_;
  std::vector<Subspace> sources_;
  std::vector<Subspace> transmitter_;
  std::vector<Subspace> receiver_;
  std::vector<Subspace> messages_;
  std::vector<std::size_t> message_sources_;
};

/// Materializes S, E_T, E_R and M by exhaustive enumeration. Throws
/// std::invalid_argument for invalid parameters and std::logic_error when a
/// member fails its defining property.
CodeInstance build_code(const CodeParams& p);

/// The transmitter rules written in parametrized normal form
///   rows e_1, e_{2nu+1}, (0,R2,R3,1,R5,R6,0,0), (0,L2,L3,0,L5,L6,0,1)
/// with all blocks free, sorted. Used to cross-check the enumerated E_T.
std::vector<Subspace> parametrized_transmitter_rules(const CodeInstance& code);

/// Every (2s+2)-dimensional subspace containing the anchor that satisfies the
/// set-builder definition of a message. Independent of encode(); only viable
/// for small parameters.
std::vector<Subspace> messages_by_definition(const CodeInstance& code);

}  // namespace pscode
