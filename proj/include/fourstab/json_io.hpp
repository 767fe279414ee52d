#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fourstab/errors.hpp"
#include "fourstab/expr.hpp"
#include "fourstab/forms.hpp"
#include "fourstab/manifolds.hpp"
#include "fourstab/pin2.hpp"

namespace fourstab::io {

using json = nlohmann::json;

// Reads the documented form format {"matrix": [[int,...],...]}: square,
// symmetric, exact integer entries. Violations are parse-level errors naming
// the first offending entry pair.
inline lattice::IntegralForm form_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("matrix"))
        throw ParseError("form document must be an object with a \"matrix\" field");
    const json& m = doc.at("matrix");
    if (!m.is_array()) throw ParseError("\"matrix\" must be an array of rows");
    const size_t n = m.size();
    std::vector<std::vector<Int>> rows;
    rows.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        const json& row = m.at(i);
        if (!row.is_array() || row.size() != n)
            throw ParseError("matrix must be square: row " + std::to_string(i) + " has " +
                             std::to_string(row.size()) + " entries, expected " + std::to_string(n));
        std::vector<Int> r(n);
        for (size_t j = 0; j < n; ++j) {
            const json& e = row.at(j);
            if (!e.is_number_integer())
                throw ParseError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") is not an exact integer");
            r[j] = e.get<Int>();
        }
        rows.push_back(std::move(r));
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (rows[i][j] != rows[j][i])
                throw ParseError("matrix is not symmetric: entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") = " + std::to_string(rows[i][j]) +
                                 " but entry (" + std::to_string(j) + "," + std::to_string(i) +
                                 ") = " + std::to_string(rows[j][i]));
    return lattice::IntegralForm(std::move(rows));
}

inline json form_to_json(const lattice::IntegralForm& form) {
    json m = json::array();
    for (size_t i = 0; i < form.rank(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < form.rank(); ++j) row.push_back(form.entry(i, j));
        m.push_back(std::move(row));
    }
    return json{{"matrix", std::move(m)}};
}

inline json to_json(const lattice::FormInvariants& inv) {
    return json{{"rank", inv.rank},
                {"b_plus", inv.b_plus},
                {"b_minus", inv.b_minus},
                {"signature", inv.signature},
                {"parity", std::string(lattice::parity_name(inv.parity))},
                {"definiteness", std::string(lattice::definiteness_name(inv.definiteness))}};
}

inline lattice::FormInvariants invariants_from_json(const json& doc) {
    lattice::FormInvariants inv;
    inv.rank = doc.at("rank").get<Int>();
    inv.b_plus = doc.at("b_plus").get<Int>();
    inv.b_minus = doc.at("b_minus").get<Int>();
    inv.signature = doc.at("signature").get<Int>();
    const auto parity = doc.at("parity").get<std::string>();
    if (parity != "even" && parity != "odd") throw ParseError("parity must be \"even\" or \"odd\"");
    inv.parity = parity == "even" ? lattice::Parity::Even : lattice::Parity::Odd;
    const auto defin = doc.at("definiteness").get<std::string>();
    if (defin == "positive")
        inv.definiteness = lattice::Definiteness::Positive;
    else if (defin == "negative")
        inv.definiteness = lattice::Definiteness::Negative;
    else if (defin == "indefinite")
        inv.definiteness = lattice::Definiteness::Indefinite;
    else if (defin == "zero")
        inv.definiteness = lattice::Definiteness::Zero;
    else
        throw ParseError("unknown definiteness \"" + defin + "\"");
    return inv;
}

inline json to_json(const lattice::StableClass& cls) {
    json out{{"kind", std::string(lattice::stable_kind_name(cls.kind))},
             {"representative", render(cls.representative)}};
    if (cls.kind == lattice::StableKind::EvenClass) out["k3_count"] = cls.k3_count;
    if (cls.kind == lattice::StableKind::OddClass) out["signature"] = cls.odd_signature;
    return out;
}

inline lattice::StableClass stable_class_from_json(const json& doc) {
    const auto kind = doc.at("kind").get<std::string>();
    lattice::StableClass cls;
    if (kind == "Sphere")
        cls = lattice::sphere_class();
    else if (kind == "EvenClass")
        cls = lattice::even_class(doc.at("k3_count").get<Int>());
    else if (kind == "OddClass")
        cls = lattice::odd_class(doc.at("signature").get<Int>());
    else
        throw ParseError("unknown stable class kind \"" + kind + "\"");
    if (render(cls.representative) != doc.at("representative").get<std::string>())
        throw ParseError("representative does not match the class data");
    return cls;
}

inline json to_json(const pin2::PinMonomial& m) {
    return json{{"text", pin2::render(m)},
                {"coeff", m.coeff},
                {"nd", m.nd},
                {"nh", m.nh},
                {"ne", m.ne},
                {"source", pin2::render(pin2::source_degree(m))},
                {"target", pin2::render(pin2::target_degree(m))}};
}

inline pin2::PinMonomial monomial_from_json(const json& doc) {
    return pin2::parse_monomial(doc.at("text").get<std::string>());
}

inline json to_json(const pin2::LocalizedElem& x) {
    return json{{"text", pin2::render(x)},
                {"num", pin2::render(x.num)},
                {"den_gen", std::string(pin2::den_gen_name(x.den_gen))},
                {"den_pow", x.den_pow}};
}

inline json to_json(const mfd::VirtualIndex& idx) {
    return json{{"flavor", idx.flavor == mfd::IndexFlavor::P ? "P" : "T"},
                {"index_part", idx.index_part},
                {"bplus_part", idx.bplus_part}};
}

}  // namespace fourstab::io
