/*
   Copyright 2026 The superharrison Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SUPERHARRISON_IO_HPP
#define SUPERHARRISON_IO_HPP

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "algebra.hpp"
#include "cochain.hpp"
#include "rational.hpp"

namespace superharrison::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline Rational coefficient(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(mpz_class(j.dump(), 10));
    throw ArgumentError("coefficients must be \"p/q\" strings or integers, got " + j.dump());
}

inline std::size_t index(const Json& j, std::size_t bound, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ArgumentError(std::string(what) + " must be a non-negative integer, got " + j.dump());
    const auto v = j.get<unsigned long long>();
    if (v >= bound)
        throw ArgumentError(std::string(what) + " " + std::to_string(v) + " out of range (< " + std::to_string(bound) +
                            ")");
    return static_cast<std::size_t>(v);
}

inline const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw ArgumentError(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline std::size_t parse_size(const std::string& s, const std::string& context) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ArgumentError("expected a non-negative integer in " + context + ", got \"" + s + "\"");
    return static_cast<std::size_t>(std::stoull(s));
}

inline SuperAlgebra builtin(const std::vector<std::string>& tokens, std::size_t& pos, const std::string& spec) {
    if (pos >= tokens.size()) throw ArgumentError("incomplete builtin algebra name: " + spec);
    const std::string head = tokens[pos++];
    if (head == "field") return ground_field();
    if (head == "exterior" || head == "truncpoly") {
        if (pos >= tokens.size()) throw ArgumentError(head + " needs a size argument in " + spec);
        const std::size_t n = parse_size(tokens[pos++], spec);
        return head == "exterior" ? exterior_algebra(n) : truncated_polynomial(n);
    }
    if (head == "tensor") {
        SuperAlgebra a = builtin(tokens, pos, spec);
        SuperAlgebra b = builtin(tokens, pos, spec);
        return tensor_product(a, b);
    }
    throw ArgumentError("unknown builtin algebra \"" + head + "\" in " + spec);
}

}  // namespace detail

/// Parses the algebra-definition JSON document.
inline SuperAlgebra parse_algebra(const Json& j) {
    const std::size_t dim = detail::index(detail::field(j, "dim"), SIZE_MAX, "dim");
    const Json& basis = detail::field(j, "basis");
    const Json& parity = detail::field(j, "parity");
    if (!basis.is_array() || basis.size() != dim) throw ArgumentError("\"basis\" must be an array of dim names");
    if (!parity.is_array() || parity.size() != dim) throw ArgumentError("\"parity\" must be an array of dim entries");
    std::vector<std::string> names;
    ParityVector par;
    for (const auto& b : basis) {
        if (!b.is_string()) throw ArgumentError("basis names must be strings");
        names.push_back(b.get<std::string>());
    }
    for (const auto& p : parity) par.push_back(static_cast<Parity>(detail::index(p, 2, "parity")));
    std::optional<std::size_t> unit;
    if (j.contains("unit") && !j.at("unit").is_null()) unit = detail::index(j.at("unit"), dim, "unit");
    std::vector<ProductRule> rules;
    if (j.contains("products")) {
        const Json& products = j.at("products");
        if (!products.is_array()) throw ArgumentError("\"products\" must be an array");
        for (const auto& rec : products) {
            ProductRule r{detail::index(detail::field(rec, "i"), dim, "i"),
                          detail::index(detail::field(rec, "j"), dim, "j"),
                          {}};
            const Json& terms = detail::field(rec, "terms");
            if (!terms.is_array()) throw ArgumentError("\"terms\" must be an array");
            for (const auto& t : terms)
                r.terms.push_back(Term{detail::index(detail::field(t, "k"), dim, "k"),
                                       detail::coefficient(detail::field(t, "coeff"))});
            rules.push_back(std::move(r));
        }
    }
    return SuperAlgebra::from_rules(std::move(names), std::move(par), rules, unit);
}

inline Json algebra_to_json(const SuperAlgebra& alg) {
    Json j;
    j["dim"] = alg.dim();
    j["basis"] = alg.basis_names();
    Json parity = Json::array();
    for (auto p : alg.parity()) parity.push_back(static_cast<int>(p));
    j["parity"] = parity;
    if (alg.unit_index()) j["unit"] = *alg.unit_index();
    Json products = Json::array();
    for (const auto& r : alg.rules()) {
        Json terms = Json::array();
        for (const auto& t : r.terms) terms.push_back(Json{{"k", t.index}, {"coeff", to_string(t.coeff)}});
        products.push_back(Json{{"i", r.i}, {"j", r.j}, {"terms", terms}});
    }
    j["products"] = products;
    return j;
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ArgumentError("invalid JSON in " + path + ": " + e.what());
    }
}

/// "builtin:exterior:K", "builtin:truncpoly:N", "builtin:field" or
/// "builtin:tensor:<a>:<b>" (factors written without the prefix, e.g.
/// builtin:tensor:truncpoly:2:exterior:1); anything else is a file path.
inline SuperAlgebra load_algebra(const std::string& spec) {
    constexpr std::string_view prefix = "builtin:";
    if (spec.rfind(prefix, 0) == 0) {
        const auto tokens = detail::split(std::string_view(spec).substr(prefix.size()), ':');
        std::size_t pos = 0;
        SuperAlgebra alg = detail::builtin(tokens, pos, spec);
        if (pos != tokens.size()) throw ArgumentError("trailing tokens in builtin algebra name: " + spec);
        return alg;
    }
    try {
        return parse_algebra(read_json_file(spec));
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError("malformed algebra file " + spec + ": " + e.what());
    }
}

/// Parses {"degree": n, "entries": [{"i": [...], "l": l, "coeff": "p/q"}]}.
/// Repeated entries add up.
inline Cochain parse_cochain(const Json& j, const SuperAlgebra& alg, const SuperModule& mod) {
    const std::size_t degree = detail::index(detail::field(j, "degree"), SIZE_MAX, "degree");
    Cochain f = Cochain::zero(alg, mod, degree);
    const Json& entries = detail::field(j, "entries");
    if (!entries.is_array()) throw ArgumentError("\"entries\" must be an array");
    for (const auto& e : entries) {
        const Json& args = detail::field(e, "i");
        if (!args.is_array() || args.size() != degree)
            throw ArgumentError("entry argument list must have exactly degree = " + std::to_string(degree) +
                                " indices");
        std::vector<std::size_t> idx;
        for (const auto& a : args) idx.push_back(detail::index(a, alg.dim(), "argument index"));
        const std::size_t l = detail::index(detail::field(e, "l"), mod.dim(), "l");
        f.at(idx, l) += detail::coefficient(detail::field(e, "coeff"));
    }
    return f;
}

inline Cochain load_cochain(const std::string& path, const SuperAlgebra& alg, const SuperModule& mod) {
    try {
        return parse_cochain(read_json_file(path), alg, mod);
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError("malformed cochain file " + path + ": " + e.what());
    }
}

/// Cochain in the file format, with basis-name labels alongside the indices.
inline Json cochain_to_json(const Cochain& f, const SuperAlgebra& alg, const SuperModule& mod) {
    Json entries = Json::array();
    for (std::size_t pos = 0; pos < f.size(); ++pos) {
        if (sgn(f[pos]) == 0) continue;
        const auto args = f.decode_tuple(pos / f.target_dim());
        const std::size_t l = pos % f.target_dim();
        Json names = Json::array();
        for (auto a : args) names.push_back(alg.basis_names()[a]);
        entries.push_back(Json{{"i", args},
                               {"l", l},
                               {"coeff", to_string(f[pos])},
                               {"args", names},
                               {"value", mod.basis_names()[l]}});
    }
    return Json{{"degree", f.degree()}, {"entries", entries}};
}

/// Human-readable form such as "f(t1,t1) = 1 + 2*x".
inline std::string describe_cochain(const Cochain& f, const SuperAlgebra& alg, const SuperModule& mod) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t t = 0; t < f.tuple_count(); ++t) {
        std::string rhs;
        for (std::size_t l = 0; l < mod.dim(); ++l) {
            const Rational& c = f[t * mod.dim() + l];
            if (sgn(c) == 0) continue;
            std::string coeff = to_string(c);
            if (!rhs.empty()) rhs += sgn(c) < 0 ? " - " : " + ";
            else if (sgn(c) < 0) rhs += "-";
            if (sgn(c) < 0) coeff.erase(0, 1);
            rhs += (coeff == "1" ? "" : coeff + "*") + mod.basis_names()[l];
        }
        if (rhs.empty()) continue;
        const auto args = f.decode_tuple(t);
        std::string lhs = "f(";
        for (std::size_t k = 0; k < args.size(); ++k) lhs += (k ? "," : "") + alg.basis_names()[args[k]];
        if (any) os << "; ";
        os << lhs << ") = " << rhs;
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

/// 64-bit FNV-1a of the canonical JSON form, as 16 hex digits.
inline std::string digest(const SuperAlgebra& alg) {
    const std::string text = algebra_to_json(alg).dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace superharrison::io

#endif  // SUPERHARRISON_IO_HPP
