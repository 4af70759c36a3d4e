#include "shuffle/json_io.hpp"

#include <json.hpp>

#include "shuffle/errors.hpp"

namespace shuffle {

namespace {

using nlohmann::json;

// Largest integer a double-backed JSON reader keeps exact; anything bigger is
// written as a decimal string.
constexpr std::int64_t kSafeIntegerMax = 9007199254740991;  // 2^53 - 1

json coeff_to_json(std::int64_t c) {
    if (c > kSafeIntegerMax || c < -kSafeIntegerMax) return json(std::to_string(c));
    return json(c);
}

std::int64_t coeff_from_json(const json& j) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_string()) {
        const std::string& text = j.get_ref<const std::string&>();
        std::size_t consumed = 0;
        const std::int64_t value = std::stoll(text, &consumed);
        if (consumed != text.size()) throw std::invalid_argument("trailing characters");
        return value;
    }
    throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

json poly_to_json(const QtPolynomial& p) {
    json out = json::array();
    for (const QtTerm& term : p.terms())
        out.push_back(json::array({term.q_exp, term.t_exp, coeff_to_json(term.coeff)}));
    return out;
}

QtPolynomial poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be an array");
    QtPolynomial p;
    for (const json& entry : j) {
        if (!entry.is_array() || entry.size() != 3)
            throw std::invalid_argument("polynomial term must be [qexp, texp, coeff]");
        p.add_term(entry[0].get<int>(), entry[1].get<int>(), coeff_from_json(entry[2]));
    }
    return p;
}

json subset_to_json(SubsetMask s) {
    json out = json::array();
    for (int e : subset_elements(s)) out.push_back(e);
    return out;
}

json fexpansion_to_json(const FExpansion& f) {
    json terms = json::array();
    for (const auto& [s, p] : f.terms())
        terms.push_back(json{{"S", subset_to_json(s)}, {"poly", poly_to_json(p)}});
    return json{{"n", f.degree()}, {"terms", std::move(terms)}};
}

FExpansion fexpansion_from_json(const json& j) {
    FExpansion f(j.at("n").get<int>());
    for (const json& entry : j.at("terms")) {
        const SubsetMask s =
            subset_from_elements(entry.at("S").get<std::vector<int>>());
        f.add(s, poly_from_json(entry.at("poly")));
    }
    return f;
}

json schur_to_json(const SchurExpansion& s) {
    json terms = json::array();
    for (const auto& [lambda, p] : s.terms())
        terms.push_back(json{{"lambda", lambda.parts()}, {"poly", poly_to_json(p)}});
    return json{{"n", s.degree()}, {"terms", std::move(terms)}};
}

SchurExpansion schur_from_json(const json& j) {
    SchurExpansion s(j.at("n").get<int>());
    for (const json& entry : j.at("terms")) {
        const Partition lambda(entry.at("lambda").get<std::vector<int>>());
        s.add(lambda, poly_from_json(entry.at("poly")));
    }
    return s;
}

json result_to_json(const ShuffleResult& r) {
    json by_touch = json::array();
    for (const auto& [alpha, expansion] : r.by_touch)
        by_touch.push_back(json{{"alpha", alpha.parts()},
                                {"expansion", fexpansion_to_json(expansion)}});
    return json{{"schema", 1},
                {"n", r.n},
                {"engine_version", r.engine_version},
                {"order_tag", r.order_tag},
                {"full", fexpansion_to_json(r.full)},
                {"by_touch", std::move(by_touch)},
                {"schur", schur_to_json(r.schur)}};
}

}  // namespace

std::string to_json_text(const QtPolynomial& p) { return poly_to_json(p).dump(); }
std::string to_json_text(const FExpansion& f) { return fexpansion_to_json(f).dump(); }
std::string to_json_text(const SchurExpansion& s) { return schur_to_json(s).dump(); }
std::string to_json_text(const ShuffleResult& r) { return result_to_json(r).dump(); }

QtPolynomial qt_polynomial_from_json_text(const std::string& text) {
    return poly_from_json(json::parse(text));
}

FExpansion fexpansion_from_json_text(const std::string& text) {
    return fexpansion_from_json(json::parse(text));
}

SchurExpansion schur_expansion_from_json_text(const std::string& text) {
    return schur_from_json(json::parse(text));
}

ShuffleResult shuffle_result_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw CacheError(CacheError::Kind::Corrupt,
                         std::string("cache is not valid JSON: ") + e.what());
    }
    try {
        if (!j.is_object() || !j.contains("schema"))
            throw std::invalid_argument("missing schema field");
        if (!j.at("schema").is_number_integer() || j.at("schema").get<int>() != 1)
            throw CacheError(CacheError::Kind::Version,
                             "unsupported cache schema version");
        ShuffleResult r;
        r.n = j.at("n").get<int>();
        r.engine_version = j.at("engine_version").get<std::string>();
        r.order_tag = j.at("order_tag").get<std::string>();
        r.full = fexpansion_from_json(j.at("full"));
        for (const json& entry : j.at("by_touch")) {
            Composition alpha(entry.at("alpha").get<std::vector<int>>());
            FExpansion expansion = fexpansion_from_json(entry.at("expansion"));
            if (!r.by_touch.emplace(std::move(alpha), std::move(expansion)).second)
                throw std::invalid_argument("duplicate touch composition");
        }
        r.schur = schur_from_json(j.at("schur"));
        return r;
    } catch (const CacheError&) {
        throw;
    } catch (const std::exception& e) {
        throw CacheError(CacheError::Kind::Corrupt,
                         std::string("malformed cache contents: ") + e.what());
    }
}

}  // namespace shuffle
