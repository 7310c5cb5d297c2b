#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "sesqui/hoffman.hpp"
#include "sesqui/quasiclique.hpp"
#include "sesqui/regularity.hpp"
#include "sesqui/spectral.hpp"
#include "sesqui/verifier.hpp"

namespace sesqui {

/// Values within 1e-9 of an integer print as that integer; otherwise ten
/// significant digits. Never prints "-0".
std::string format_number(double value);

/// Same rounding applied to a JSON number.
double snapped(double value);

nlohmann::json to_json(const RegularityProfile& p);
nlohmann::json to_json(const SymmetricSpectrum& s);
nlohmann::json to_json(const HoffmanGraph& h);
nlohmann::json to_json(const QuasiCliqueSystem& s);
nlohmann::json to_json(const Claim1Report& r);
nlohmann::json to_json(const std::vector<Claim2Result>& r);
nlohmann::json to_json(const std::vector<FamilyHit>& hits);
nlohmann::json to_json(const NeumaierReport& r);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const MPrimeResult& r);
nlohmann::json to_json(const ExpansionOrder& r);
nlohmann::json to_json(const IsolatedVertexReport& r);
nlohmann::json to_json(const CorpusEntry& e);

/// Single-line "key=value" renderings used by the text output mode.
std::string to_text(const RegularityProfile& p);
std::string to_text(const VerificationReport& r);
std::string to_text(const NeumaierReport& r);

}  // namespace sesqui
