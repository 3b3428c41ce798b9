#pragma once

#include "floodpoly/poly.hpp"

#include <json.hpp>

namespace floodpoly {

/// {"coeffs": ["0","0","2","4","1"]} — decimal strings, lowest degree first.
inline nlohmann::json poly_to_json(const IntPolynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const BigInt& c : p.coeffs()) coeffs.push_back(c.to_string());
    return nlohmann::json{{"coeffs", std::move(coeffs)}, {"text", p.to_string()}};
}

inline IntPolynomial poly_from_json(const nlohmann::json& j) {
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(BigInt::from_string(c.get<std::string>()));
    return IntPolynomial(std::move(coeffs));
}

} // namespace floodpoly
