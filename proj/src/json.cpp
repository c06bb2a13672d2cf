#include "fareyplumb/json.hpp"

namespace fareyplumb {

using nlohmann::json;

json to_json(const IntVector& v) { return json(v.coords); }

json to_json(const RingConfiguration& c) {
    json pairing = json::array();
    for (std::size_t i = 1; i <= c.n(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < c.sphere_count(); ++j) row.push_back(c.pairing(i, j));
        pairing.push_back(std::move(row));
    }
    json classes = json::array(), w = json::array(), meridians = json::array();
    for (std::size_t j = 0; j < c.sphere_count(); ++j) {
        classes.push_back(to_json(c.sphere_class(j)));
        w.push_back(to_json(c.w(j)));
        meridians.push_back({c.meridian_coeffs()[j].q, c.meridian_coeffs()[j].p});
    }
    return json{{"path", to_string(c.path())}, {"n", c.n()},          {"squares", c.squares()}, {"pairing", pairing},
                {"classes", classes},          {"w", w},                {"meridian_coeffs", meridians}};
}

json to_json(const RingConfiguration& c, const SmoothingSpec& spec, const SmoothedChain& s) {
    return json{{"path", to_string(c.path())},
                {"spec", to_string(spec)},
                {"chain", s.chain},
                {"sigma", to_json(s.sigma)},
                {"a", s.a},
                {"b", s.b},
                {"simply_connected", s.simply_connected}};
}

json to_json(const EmbeddingCertificate& cert) {
    json vectors = json::array();
    for (const auto& v : cert.vectors) vectors.push_back(to_json(v));
    return json{{"sigma", to_json(cert.sigma)}, {"vectors", vectors}};
}

EmbeddingCertificate certificate_from_json(const json& j) {
    EmbeddingCertificate cert;
    cert.sigma = IntVector(j.at("sigma").get<std::vector<Int>>());
    for (const auto& v : j.at("vectors")) cert.vectors.emplace_back(v.get<std::vector<Int>>());
    return cert;
}

}  // namespace fareyplumb
