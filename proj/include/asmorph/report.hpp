#pragma once

// JSON views of the domain types. Integers that may exceed 64 bits are
// emitted as decimal strings.

#include <string>

#include <json.hpp>

#include "asmorph/autgroup.hpp"
#include "asmorph/curve.hpp"
#include "asmorph/galois.hpp"
#include "asmorph/infinity.hpp"
#include "asmorph/morphism.hpp"
#include "asmorph/quotient.hpp"
#include "asmorph/zeta.hpp"

namespace asmorph {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = ASMORPH_VERSION;

Json big(const BigInt& v);
Json big(const Rational& v);

Json to_json(const FieldElem& a);  // coefficient list, low degree first
Json to_json(const CurvePoint& pt);
Json to_json(const LPolynomial& L);
Json to_json(const RRMonomial& mono);
Json to_json(const DivisibilityWitness& w);
Json to_json(const DegreeBound& b);
Json to_json(const MorphismSpec& spec);
Json to_json(const FiberCensus& census);
Json to_json(const RamificationVerdict& v);
Json to_json(const Automorphism& g);
Json to_json(const SubgroupParams& params);
Json to_json(const QuotientGenusReport& rep);
Json to_json(const OrbitReport& rep);
Json to_json(const Eq61Solution& s);
Json to_json(const GeneralDivReport& rep);
Json to_json(const NoSolutionReport& rep);
Json to_json(const ChainReport& rep);
Json to_json(const Thm42Verdict& v);
Json to_json(const GaloisVerdict& v);

/// {tool_version, command, params, result}
Json envelope(const std::string& command, Json params, Json result);

/// Plain rendering: scalars on one line, objects as "key: value" lines,
/// arrays one element per line.
std::string render_text(const Json& result);

}  // namespace asmorph
