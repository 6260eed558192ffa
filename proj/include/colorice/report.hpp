#pragma once

// Deterministic reporting for the command-line driver and the acceptance
// battery.  Every check emits the same shape: which identity was exercised,
// the parameters it ran with, how many boundary instances were enumerated,
// and the list of violations (empty means the identity held everywhere).
//
// All payloads are assembled from ordered containers, so serializing the same
// run twice produces byte-identical output.

#include <json.hpp>

#include <string>
#include <vector>

#include "laurent.hpp"

namespace colorice {

using Json = nlohmann::ordered_json;

inline Json laurent_json(const Laurent& f, const std::string& base = "z") {
    Json terms = Json::array();
    for (const auto& [exps, coeff] : f.terms()) {
        Json t;
        t["coeff"] = coeff.to_string();
        t["exponents"] = exps;
        terms.push_back(std::move(t));
    }
    Json out;
    out["variable"] = base;
    out["terms"] = std::move(terms);
    out["display"] = f.to_string(base);
    return out;
}

struct RunReport {
    std::string identity;
    Json parameters = Json::object();
    long long boundaries_checked = 0;
    std::vector<std::string> violations;
    Json values = Json::object();  // identity-specific payload

    bool ok() const { return violations.empty(); }

    Json to_json() const {
        Json j;
        j["identity"] = identity;
        j["status"] = ok() ? "pass" : "fail";
        j["parameters"] = parameters;
        j["boundaries_checked"] = boundaries_checked;
        j["violations"] = violations;
        if (!values.empty()) j["values"] = values;
        return j;
    }

    std::string to_text() const {
        std::string out;
        out += "identity: " + identity + "\n";
        out += "status: " + std::string(ok() ? "pass" : "fail") + "\n";
        out += "boundaries_checked: " + std::to_string(boundaries_checked) + "\n";
        if (!parameters.empty()) out += "parameters: " + parameters.dump() + "\n";
        for (const auto& [key, val] : values.items()) {
            out += key + ": ";
            out += val.is_string() ? val.get<std::string>() : val.dump();
            out += "\n";
        }
        if (violations.empty()) {
            out += "violations: none\n";
        } else {
            out += "violations: " + std::to_string(violations.size()) + "\n";
            for (const auto& v : violations) out += "  - " + v + "\n";
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Convention audit registry.  Each entry records an interface ambiguity that
// had more than one self-consistent reading, together with the resolution the
// implementation commits to and machine-checks.  The suite output includes
// this registry so downstream users can see which conventions are in force.

struct Convention {
    std::string key;
    std::string resolution;
};

inline const std::vector<Convention>& conventions() {
    static const std::vector<Convention> registry = {
        {"functional-equation-normalizer",
         "the equal-color exchange identity holds with the uniform monomial epsilon = "
         "z^{-alpha_i}; the alternatives 1 and z^{+alpha_i} fail on the same grid"},
        {"train-shift-direction",
         "the unfused exchange check attaches the reference color ell to the left crossing "
         "and ell+1 to the right; the opposite direction fails for palettes larger than 1"},
        {"reversed-flow-column-rule",
         "reversed-flow tables carry the column residue k mod m and conserve {top,right} "
         "against {left,bottom}: paths travel right to left and exit on the left boundary"},
        {"spectral-reversal-placement",
         "reversed-flow values are compared through the substitution z -> w0 z (variable "
         "order reversed) applied to the straight-flow value"},
        {"arrangement-constant-exponent",
         "the q-exponent of the closed-form constant is l(w0 w') - l(w') computed from the "
         "column-color arrangement w'; the exponent l(w0 w) - l(w) read off the exit "
         "arrangement w deviates by a recorded q-power whenever w differs from w'"},
        {"proportionality-extraction",
         "z-free constants are extracted by full-product proportionality (a coefficient of "
         "the candidate divisor must be an invertible monomial); polynomial division of "
         "coefficient sums is never used"},
        {"power-map-deformation",
         "the power-substituted dressed-character identity is exact at deformation v = 1; "
         "at v = q^2 it fails once the substitution degree and the rank both exceed 1, and "
         "the residual is recorded instead of suppressed"},
        {"series-product-normalization",
         "the degree-k coefficient in the exponentiated current series is (1 - q^{2k})/k; "
         "the 1/k is forced by the slot-sum definition of the currents and is confirmed by "
         "the exact transfer-matrix comparison"},
        {"palette-extension-anchor",
         "palette extension embeds column residues through a strictly increasing map fixing "
         "residue 0; order-preserving maps on raw color labels flip the negated-index order "
         "and change the value"},
    };
    return registry;
}

inline Json conventions_json() {
    Json arr = Json::array();
    for (const auto& c : conventions()) {
        Json j;
        j["key"] = c.key;
        j["resolution"] = c.resolution;
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace colorice
