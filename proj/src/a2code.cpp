#include "pscode/a2code.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pscode/enumeration.hpp"

namespace pscode {

namespace {

std::optional<std::size_t> find_sorted(const std::vector<Subspace>& set, const Subspace& x) {
  auto it = std::lower_bound(set.begin(), set.end(), x);
  if (it == set.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - set.begin());
}

std::string str(std::size_t v) { return std::to_string(v); }

[[noreturn]] void consistency_failure(const std::string& what) {
  throw std::logic_error("construction consistency check failed: " + what);
}

}  // namespace

Validation validate_params(const CodeParams& p) {
  Validation v;
  auto fail = [&](std::string rule, std::string msg) { v.errors.push_back({std::move(rule), std::move(msg)}); };
  if (p.nu < 1) fail("nu>=1", "nu must be at least 1");
  if (p.s < 1) fail("s>=1", "s must be at least 1");
  if (p.s >= 1 && p.s0 + 1 < p.s) fail("s-1<=s0", "s-1 <= s0 violated: s=" + str(p.s) + ", s0=" + str(p.s0));
  if (p.s0 > p.nu) fail("s0<=nu", "s0 <= nu violated: s0=" + str(p.s0) + ", nu=" + str(p.nu));
  if (2 * p.s > p.m0) fail("2s<=m0", "2s <= m0 violated: s=" + str(p.s) + ", m0=" + str(p.m0));
  if (2 * p.s0 > p.m0) fail("2s0<=m0", "2s0 <= m0 violated: s0=" + str(p.s0) + ", m0=" + str(p.m0));
  if (p.m0 < 2 * p.s0 + 2) {
    fail("m0>=2s0+2", "derived feasibility m0 >= 2*s0+2 violated; S would be empty (the anchor lies in the "
                      "radical of P0, so P0 needs 2 dimensions beyond its 2*s0 form rank)");
  }
  if (p.m0 > 2 * p.nu) {
    fail("m0<=2nu", "derived feasibility m0 <= 2*nu violated; P0 must fit inside the 2*nu-dimensional anchor perp");
  } else if (p.m0 > p.nu + p.s0 + 1) {
    fail("m0<=nu+s0+1", "derived feasibility m0 <= nu+s0+1 violated; no subspace of type (m0,2s0,s0,1) lies "
                        "between the anchor and its perp");
  }
  if (p.s > p.nu) fail("s<=nu", "derived feasibility s <= nu violated; messages of dimension 2s+2 cannot exist");
  if (v.ok() && p.s == 1) {
    v.warnings.push_back({"s>=2", "degenerate s=1: |S|=1 and the substitution probabilities are reported as null"});
  }
  return v;
}

Frame canonical_frame(const CodeParams& p) {
  const Validation v = validate_params(p);
  if (!v.ok()) throw std::invalid_argument("invalid parameters: " + v.errors.front().message);
  const std::size_t nu = p.nu;
  const std::size_t n = 2 * nu + 2;
  const std::size_t star = 2 * nu;  // 0-indexed e_{2nu+1}

  Frame fr;
  fr.nu0 = unit_vector(n, 0);
  Mat anchor_rows(0, n);
  anchor_rows.append_row(fr.nu0);
  anchor_rows.append_row(unit_vector(n, star));
  fr.anchor = span(p.field, n, anchor_rows);

  // e_1, e_{2nu+1}; pairs (e_{1+i}, e_{nu+1+i}) for i = 1..s0; isotropic fillers after that.
  Mat rows = anchor_rows;
  for (std::size_t i = 1; i <= p.s0; ++i) {
    rows.append_row(unit_vector(n, i));
    rows.append_row(unit_vector(n, nu + i));
  }
  for (std::size_t idx = p.s0 + 1; rows.rows() < p.m0; ++idx) {
    if (idx >= nu) throw std::invalid_argument("canonical frame: isotropic fillers exhausted before reaching m0");
    rows.append_row(unit_vector(n, idx));
  }
  fr.p0 = span(p.field, n, rows);

  const PsSpace space(p.field, nu, 2);
  const SubspaceType expected = SubspaceType::of(p.m0, 2 * p.s0, p.s0, 1);
  if (classify(space, fr.p0) != expected) consistency_failure("P0 has type " + classify(space, fr.p0).to_string());
  if (classify(space, fr.anchor) != SubspaceType::of(2, 0, 0, 1)) consistency_failure("anchor type");
  if (!is_subset(p.field, fr.anchor, fr.p0) || !is_subset(p.field, fr.p0, perp(space, fr.anchor))) {
    consistency_failure("anchor ⊆ P0 ⊆ anchor^⊥");
  }
  return fr;
}

SubspaceType source_type(std::size_t s) { return SubspaceType::of(2 * s, 2 * (s - 1), s - 1, 1); }
SubspaceType transmitter_type() { return SubspaceType::of(4, 4, 1, 1); }
SubspaceType receiver_type() { return SubspaceType::of(2, 2, 0, 1); }
SubspaceType message_type(std::size_t s) { return SubspaceType::of(2 * s + 2, 2 * s + 2, s, 1); }

CodeInstance::CodeInstance(CodeParams p, PsSpace space, Frame frame)
    : params_(std::move(p)), space_(std::move(space)), frame_(std::move(frame)) {}

std::optional<std::size_t> CodeInstance::source_index(const Subspace& x) const { return find_sorted(sources_, x); }
std::optional<std::size_t> CodeInstance::transmitter_index(const Subspace& x) const {
  return find_sorted(transmitter_, x);
}
std::optional<std::size_t> CodeInstance::receiver_index(const Subspace& x) const { return find_sorted(receiver_, x); }
std::optional<std::size_t> CodeInstance::message_index(const Subspace& x) const { return find_sorted(messages_, x); }

Subspace CodeInstance::encode(const Subspace& src, const Subspace& eT) const {
  if (!source_index(src)) throw std::invalid_argument("encode: argument is not a source state");
  if (!transmitter_index(eT)) throw std::invalid_argument("encode: argument is not a transmitter rule");
  return subspace_sum(field(), src, eT);
}

DecodeResult CodeInstance::decode(const Subspace& m, const Subspace& eR) const {
  if (!message_index(m)) throw std::invalid_argument("decode: argument is not a message");
  if (!receiver_index(eR)) throw std::invalid_argument("decode: argument is not a receiver rule");
  if (!is_subset(field(), eR, m)) return Reject{};
  return subspace_intersect(field(), m, frame_.p0);
}

bool CodeInstance::incidence(const Subspace& eR, const Subspace& eT) const {
  if (!receiver_index(eR)) throw std::invalid_argument("incidence: argument is not a receiver rule");
  if (!transmitter_index(eT)) throw std::invalid_argument("incidence: argument is not a transmitter rule");
  return is_subset(field(), eR, eT);
}

CodeInstance build_code(const CodeParams& p) {
  const Validation v = validate_params(p);
  if (!v.ok()) throw std::invalid_argument("invalid parameters: " + v.errors.front().message);
  const Field& f = p.field;
  PsSpace space(f, p.nu, 2);
  Frame frame = canonical_frame(p);
  const std::size_t n = space.n();
  CodeInstance code(p, space, frame);

  code.sources_ = subspaces_typed(space, {frame.anchor, frame.p0, 2 * p.s, source_type(p.s)});

  // eps = 1 forces e_{2nu+1} into every receiver rule, so the enumeration can start there.
  Mat star_row(0, n);
  star_row.append_row(space.e_star());
  code.receiver_ = subspaces_typed(space, {span(f, n, star_row), Subspace::full(n), 2, receiver_type()});

  for (auto& x : subspaces_typed(space, {frame.anchor, Subspace::full(n), 4, transmitter_type()})) {
    if (subspace_intersect(f, x, frame.p0) == frame.anchor) code.transmitter_.push_back(std::move(x));
  }

  // Images of different sources never coincide (m ∩ P0 recovers the source), so
  // deduplicating per source bounds the working set; the global sort-unique
  // below still catches any cross-source collision.
  for (const auto& src : code.sources_) {
    std::vector<Subspace> images;
    images.reserve(code.transmitter_.size());
    for (const auto& eT : code.transmitter_) images.push_back(subspace_sum(f, src, eT));
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    code.messages_.insert(code.messages_.end(), std::make_move_iterator(images.begin()),
                          std::make_move_iterator(images.end()));
  }
  std::sort(code.messages_.begin(), code.messages_.end());
  code.messages_.erase(std::unique(code.messages_.begin(), code.messages_.end()), code.messages_.end());

  const SubspaceType mt = message_type(p.s);
  code.message_sources_.reserve(code.messages_.size());
  for (const auto& m : code.messages_) {
    if (classify(space, m) != mt) consistency_failure("message of type " + classify(space, m).to_string());
    if (!is_subset(f, frame.anchor, m)) consistency_failure("message does not contain the anchor");
    const auto idx = code.source_index(subspace_intersect(f, m, frame.p0));
    if (!idx) consistency_failure("m ∩ P0 is not a source state");
    code.message_sources_.push_back(*idx);
  }
  return code;
}

std::vector<Subspace> parametrized_transmitter_rules(const CodeInstance& code) {
  const Field& f = code.field();
  const std::size_t nu = code.params().nu;
  const std::size_t n = 2 * nu + 2;
  // Free coordinates: 1..nu-1 and nu+1..2nu-1 (0-indexed), i.e. every K coordinate but e_1 and e_{nu+1}.
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 1; c < 2 * nu; ++c) {
    if (c != nu) free_cols.push_back(c);
  }
  const std::size_t slots = 2 * free_cols.size();
  const std::uint32_t q = f.order();
  std::vector<std::uint32_t> digit(slots, 0);
  std::vector<Subspace> out;
  while (true) {
    Vec u1 = unit_vector(n, nu);
    Vec u2 = unit_vector(n, n - 1);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
      u1[free_cols[i]] = Fe{digit[i]};
      u2[free_cols[i]] = Fe{digit[free_cols.size() + i]};
    }
    Mat rows = code.frame().anchor.basis();
    rows.append_row(u1);
    rows.append_row(u2);
    out.push_back(span(f, n, rows));
    std::size_t pos = 0;
    for (; pos < slots; ++pos) {
      if (++digit[pos] < q) break;
      digit[pos] = 0;
    }
    if (pos == slots) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> messages_by_definition(const CodeInstance& code) {
  const Field& f = code.field();
  const auto& p = code.params();
  const std::size_t n = code.space().n();
  const SubspaceType mt = message_type(p.s);
  const SubspaceType st = source_type(p.s);
  std::vector<Subspace> out;
  IntervalQuery q{code.frame().anchor, Subspace::full(n), 2 * p.s + 2, std::nullopt};
  for_each_subspace_between(f, q, [&](const Subspace& x) {
    if (classify(code.space(), x) != mt) return;
    if (classify(code.space(), subspace_intersect(f, x, code.frame().p0)) == st) out.push_back(x);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pscode
