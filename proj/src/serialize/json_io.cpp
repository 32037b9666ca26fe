#include "serialize/json_io.hpp"

#include <json.hpp>

namespace qw {

namespace {

using json = nlohmann::ordered_json;

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw invalid_argument("expected an integer or integer string");
}

json qlaurent_to_json(const QLaurent& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms())
        arr.push_back(json::array({json(e), int_to_json(c.get_num()), int_to_json(c.get_den())}));
    if (p.is_zero()) arr.push_back(json::array({0, 0, 1}));
    return arr;
}

QLaurent qlaurent_from_json(const json& arr) {
    QLaurent out;
    for (const auto& triple : arr) {
        if (!triple.is_array() || triple.size() != 3) throw invalid_argument("bad s_terms entry");
        long e = triple[0].get<long>();
        Rat c(int_from_json(triple[1]), int_from_json(triple[2]));
        c.canonicalize();
        out += QLaurent::s_power(e, c);
    }
    return out;
}

} // namespace

std::string value_to_json(const LaurentPoly& value, const std::vector<std::string>& names) {
    json root;
    json vars = json::array();
    for (int i = 0; i < value.nvars(); ++i)
        vars.push_back(i < static_cast<int>(names.size()) ? names[i] : "z" + std::to_string(i + 1));
    root["vars"] = vars;
    json terms = json::array();
    // descending lexicographic: leading monomials first
    for (auto it = value.terms().rbegin(); it != value.terms().rend(); ++it) {
        json term;
        term["exp"] = it->first;
        json coeff;
        coeff["s_terms"] = qlaurent_to_json(it->second.num());
        if (!it->second.den().is_one()) coeff["den_s_terms"] = qlaurent_to_json(it->second.den());
        term["coeff"] = std::move(coeff);
        terms.push_back(std::move(term));
    }
    root["terms"] = std::move(terms);
    return root.dump();
}

LaurentPoly value_from_json(const std::string& text) {
    json root = json::parse(text);
    if (!root.contains("vars") || !root.contains("terms")) throw invalid_argument("missing fields");
    int nvars = static_cast<int>(root["vars"].size());
    LaurentPoly out(nvars);
    for (const auto& term : root["terms"]) {
        LaurentPoly::Exp e = term.at("exp").get<LaurentPoly::Exp>();
        if (static_cast<int>(e.size()) != nvars) throw invalid_argument("exponent length mismatch");
        const auto& coeff = term.at("coeff");
        QLaurent num = qlaurent_from_json(coeff.at("s_terms"));
        QLaurent den = coeff.contains("den_s_terms") ? qlaurent_from_json(coeff.at("den_s_terms"))
                                                     : QLaurent::one();
        out.add_term(e, Scalar(std::move(num), std::move(den)));
    }
    return out;
}

std::string value_to_text(const LaurentPoly& value, const std::vector<std::string>& names) {
    return value.to_string(names);
}

} // namespace qw
