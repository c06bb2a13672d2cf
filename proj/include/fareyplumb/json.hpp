#pragma once

// JSON encodings of the library's records (nlohmann/json).

#include <json.hpp>

#include "fareyplumb/changemaker.hpp"
#include "fareyplumb/configuration.hpp"
#include "fareyplumb/smoothing.hpp"

namespace fareyplumb {

nlohmann::json to_json(const IntVector& v);
nlohmann::json to_json(const RingConfiguration& c);
/// {path, spec, chain, sigma, a, b, simply_connected}
nlohmann::json to_json(const RingConfiguration& c, const SmoothingSpec& spec, const SmoothedChain& s);
/// {sigma, vectors}
nlohmann::json to_json(const EmbeddingCertificate& cert);
EmbeddingCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace fareyplumb
