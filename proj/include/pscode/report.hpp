#pragma once

#include "json.hpp"

#include "pscode/a2code.hpp"
#include "pscode/attacks.hpp"

namespace pscode {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Mat& basis);
Json to_json(const Subspace& x);
Json params_json(const CodeParams& p);
Json validation_json(const Validation& v);

/// Versioned CodeInstance document; byte-stable for equal parameters.
Json code_json(const CodeInstance& code);

Json theorem1_json(const ParametersReport& r);
Json uniform_json(const UniformCount& u);
Json lemma6_json(const IncidenceCountsReport& r);
Json lemma8_json(const IncidenceCountsReport& r);
Json lemma9_json(const IncidenceCountsReport& r);
Json lemma10_json(const CodeInstance& code, const PairLemmaReport& r);
Json theorem2_json(const CodeInstance& code, const AttackReport& r);

}  // namespace pscode
