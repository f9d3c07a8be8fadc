#ifndef IDPOLY_JSON_IO_HPP
#define IDPOLY_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "graph.hpp"
#include "graph_io.hpp"
#include "polynomial.hpp"
#include "roots.hpp"
#include "verify.hpp"

namespace idpoly {

using json = nlohmann::json;

/// {"coeffs": ["0","1","1"]}: decimal strings, index = exponent.
inline json poly_to_json(const IntPoly& p)
{
    json coeffs = json::array();
    for (const auto& c : p.coeffs())
        coeffs.push_back(c.str());
    return json{{"coeffs", coeffs}};
}

inline IntPoly poly_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array())
        throw parse_error("polynomial JSON must be an object with a \"coeffs\" array");
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) {
        if (!c.is_string())
            throw parse_error("polynomial coefficients must be decimal strings");
        const auto text = c.get<std::string>();
        const std::size_t start = !text.empty() && text[0] == '-' ? 1 : 0;
        if (text.size() == start || text.find_first_not_of("0123456789", start) != std::string::npos)
            throw parse_error("'" + text + "' is not a decimal integer");
        coeffs.emplace_back(text);
    }
    return IntPoly(std::move(coeffs));
}

/// Parses "0,1,1" (ascending exponents) into a polynomial.
inline IntPoly poly_from_csv(const std::string& text)
{
    json j{{"coeffs", json::array()}};
    std::string token;
    auto flush = [&] {
        const auto first = token.find_first_not_of(" \t");
        const auto last = token.find_last_not_of(" \t");
        if (first == std::string::npos)
            throw parse_error("empty coefficient in '" + text + "'");
        j["coeffs"].push_back(token.substr(first, last - first + 1));
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',')
            flush();
        else
            token.push_back(ch);
    }
    flush();
    return poly_from_json(j);
}

inline json root_report_to_json(const RootReport& r)
{
    json real = json::array();
    for (const auto& root : r.real_roots)
        real.push_back({{"lo", root.lo.str()},
                        {"hi", root.hi.str()},
                        {"multiplicity", root.multiplicity},
                        {"exact", root.exact ? json(root.exact->str()) : json(nullptr)},
                        {"approx", root.approx}});
    json complex = json::array();
    for (const auto& root : r.complex_roots)
        complex.push_back({{"re", root.value.real()},
                           {"im", root.value.imag()},
                           {"residual", root.residual},
                           {"multiplicity", root.multiplicity}});
    return json{{"real_rooted", r.real_rooted},
                {"certification", r.certification},
                {"real_roots", real},
                {"complex_roots", complex},
                {"max_modulus", r.max_modulus},
                {"converged", r.converged}};
}

inline json verify_report_to_json(const VerifyReport& r)
{
    return json{{"family", r.family},
                {"params", r.params},
                {"closed_form", poly_to_json(r.closed_form)},
                {"oracle", r.skipped ? json(nullptr) : poly_to_json(r.oracle)},
                {"match", r.match},
                {"note", r.note}};
}

inline json graph_to_json(const Graph& g)
{
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return json{{"n", g.order()}, {"graph6", to_graph6(g)}, {"edges", edges}};
}

}  // namespace idpoly

#endif  // IDPOLY_JSON_IO_HPP
