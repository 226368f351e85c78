// JSON map descriptions: the input format of the command-line tools and the
// dump format for failing fuzz instances.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "padicdyn/ratmap.hpp"
#include "padicdyn/valuation.hpp"

namespace padicdyn {

// {"p": 3, "num": ["0","1","0","-1"], "den": ["1"], "z0": "0"} with
// coefficients in ascending degree and rationals as "a" or "a/b".
struct MapSpec {
    long p = 0;
    std::vector<std::string> num;
    std::vector<std::string> den;
    std::optional<std::string> z0;

    static MapSpec from_json(const nlohmann::json& j) {
        MapSpec ms;
        if (!j.is_object()) throw std::invalid_argument("map spec must be a JSON object");
        if (!j.contains("p") || !j["p"].is_number_integer())
            throw std::invalid_argument("map spec: missing integer field 'p'");
        ms.p = j["p"].get<long>();
        auto read_coeffs = [&](const char* key, std::vector<std::string>& out) {
            if (!j.contains(key) || !j[key].is_array())
                throw std::invalid_argument(std::string("map spec: missing coefficient array '") +
                                            key + "'");
            for (const auto& e : j[key]) {
                if (!e.is_string())
                    throw std::invalid_argument(std::string("map spec: '") + key +
                                                "' entries must be rational strings");
                out.push_back(e.get<std::string>());
            }
        };
        read_coeffs("num", ms.num);
        read_coeffs("den", ms.den);
        if (j.contains("z0")) {
            if (!j["z0"].is_string())
                throw std::invalid_argument("map spec: 'z0' must be a rational string");
            ms.z0 = j["z0"].get<std::string>();
        }
        return ms;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["p"] = p;
        j["num"] = num;
        j["den"] = den;
        if (z0) j["z0"] = *z0;
        return j;
    }

    PadicContext context() const { return PadicContext(p); }

    RatMap map() const {
        auto parse = [](const std::vector<std::string>& strs) {
            std::vector<Rat> c;
            c.reserve(strs.size());
            for (const auto& s : strs) c.push_back(parse_rational(s));
            return Poly(std::move(c));
        };
        return RatMap(parse(num), parse(den));
    }

    Rat z0_value() const {
        if (!z0) throw std::invalid_argument("map spec: missing 'z0'");
        return parse_rational(*z0);
    }

    static MapSpec from_map(const PadicContext& ctx, const RatMap& Q,
                            std::optional<Rat> base = {}) {
        MapSpec ms;
        ms.p = ctx.p();
        for (long i = 0; i <= Q.num().degree(); ++i) ms.num.push_back(rational_to_string(Q.num()[i]));
        for (long i = 0; i <= Q.den().degree(); ++i) ms.den.push_back(rational_to_string(Q.den()[i]));
        if (base) ms.z0 = rational_to_string(*base);
        return ms;
    }
};

}  // namespace padicdyn
