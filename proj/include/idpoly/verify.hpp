#ifndef IDPOLY_VERIFY_HPP
#define IDPOLY_VERIFY_HPP

#include <array>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "enumeration.hpp"
#include "families.hpp"
#include "family_graphs.hpp"
#include "polynomial.hpp"

namespace idpoly {

/// One closed form checked against enumeration at one parameter tuple.
struct VerifyReport {
    std::string family;
    std::vector<long> params;
    IntPoly closed_form;
    IntPoly oracle;
    bool match = false;
    bool skipped = false;  // instance not evaluated; see note
    std::string note;
};

struct VerifyOptions {
    unsigned workers = 1;
    /// Instances whose graph is larger than this are skipped.
    std::size_t max_order = max_mask_order;
};

/// A checkable closed form: its parameter names, the formula, and the graph
/// the enumeration oracle runs on. `oracle` defaults to D_i of `graph`.
struct VerifiableFamily {
    std::string_view name;
    std::vector<std::string_view> param_names;
    std::function<IntPoly(const std::vector<long>&)> closed_form;
    std::function<Graph(const std::vector<long>&)> graph;
    std::function<IntPoly(const Graph&, EnumOptions)> oracle;
    std::function<std::string(const std::vector<long>&, bool match)> annotate;
};

namespace detail {

inline std::size_t as_size(long v)
{
    if (v < 0)
        throw std::invalid_argument("parameter must be nonnegative");
    return static_cast<std::size_t>(v);
}

inline std::string default_note(bool match)
{
    return match ? "agrees with enumeration" : "closed form disagrees with enumeration (erratum candidate)";
}

inline IntPoly enumerate_di(const Graph& g, EnumOptions opts) { return di_polynomial(g, opts); }

inline const std::vector<VerifiableFamily>& verifiable_families()
{
    static const std::vector<VerifiableFamily> table = [] {
        std::vector<VerifiableFamily> t;
        t.push_back({"path", {"n"}, [](const auto& p) { return di_path(p[0]); },
                     [](const auto& p) { return path_graph(as_size(p[0])); }, enumerate_di, nullptr});
        t.push_back({"book", {"n"}, [](const auto& p) { return di_book(p[0]); },
                     [](const auto& p) { return book_graph(as_size(p[0])); }, enumerate_di, nullptr});
        t.push_back({"generalized_book", {"n", "m"},
                     [](const auto& p) { return di_generalized_book_paper(p[0], p[1]); },
                     [](const auto& p) { return generalized_book_graph(as_size(p[0]), as_size(p[1])); },
                     enumerate_di, [](const auto& p, bool match) {
                         if (!match && p[1] < 5)
                             return std::string("published generalized-book formula fails for m < 5 (erratum)");
                         return default_note(match);
                     }});
        t.push_back({"friendship", {"n"}, [](const auto& p) { return di_friendship(p[0]); },
                     [](const auto& p) { return friendship_graph(as_size(p[0])); }, enumerate_di, nullptr});
        t.push_back({"generalized_friendship_paper", {"q", "n"},
                     [](const auto& p) { return di_generalized_friendship_paper(p[0], p[1]); },
                     [](const auto& p) { return generalized_friendship_graph(as_size(p[0]), as_size(p[1])); },
                     enumerate_di, [](const auto&, bool match) {
                         return match ? default_note(true)
                                      : std::string("published flower formula overcounts sets using endpoints of "
                                                    "several petals (erratum)");
                     }});
        t.push_back({"generalized_friendship", {"q", "n"},
                     [](const auto& p) { return di_generalized_friendship_corrected(p[0], p[1]); },
                     [](const auto& p) { return generalized_friendship_graph(as_size(p[0]), as_size(p[1])); },
                     enumerate_di, [](const auto&, bool match) {
                         return match ? std::string("corrected formula (derived) agrees with enumeration")
                                      : std::string("corrected formula disagrees with enumeration");
                     }});
        t.push_back({"complete_multipartite_special", {"m", "n"},
                     [](const auto& p) { return di_complete_multipartite_special(p[0], p[1]); },
                     [](const auto& p) { return complete_multipartite_special_graph(p[0], p[1]); }, enumerate_di,
                     nullptr});
        t.push_back({"h_graph", {"n"},
                     [](const auto& p) {
                         const auto n = as_size(p[0]);
                         if (n == 0)
                             return IntPoly::constant(1);
                         return compound_combine(independence_polynomial(path_graph(n)), IntPoly::monomial(1, 2),
                                                 h_graph_cover(n).size());
                     },
                     [](const auto& p) { return h_graph(as_size(p[0])); }, enumerate_di, nullptr});
        t.push_back({"gamma_i_generalized_book", {"n", "m"},
                     [](const auto& p) { return IntPoly::constant(gamma_i_generalized_book_paper(p[0], p[1])); },
                     [](const auto& p) { return generalized_book_graph(as_size(p[0]), as_size(p[1])); },
                     [](const Graph& g, EnumOptions opts) {
                         return IntPoly::constant(static_cast<long>(gamma_i(g, opts)));
                     },
                     [](const auto&, bool match) {
                         return std::string(match ? "comparison only: published gamma_i expression agrees"
                                                  : "comparison only: published gamma_i expression differs from "
                                                    "enumeration");
                     }});
        return t;
    }();
    return table;
}

}  // namespace detail

inline std::vector<std::string_view> verifiable_family_names()
{
    std::vector<std::string_view> names;
    for (const auto& f : detail::verifiable_families())
        names.push_back(f.name);
    return names;
}

inline const VerifiableFamily& find_verifiable_family(std::string_view name)
{
    for (const auto& f : detail::verifiable_families())
        if (f.name == name)
            return f;
    throw std::invalid_argument("unknown verifiable family '" + std::string(name) + "'");
}

/// Cartesian product of inclusive ranges, first parameter varying slowest.
inline std::vector<std::vector<long>> parameter_grid(const std::vector<std::pair<long, long>>& ranges)
{
    std::vector<std::vector<long>> out{{}};
    for (auto [lo, hi] : ranges) {
        std::vector<std::vector<long>> next;
        for (const auto& prefix : out)
            for (long v = lo; v <= hi; ++v) {
                auto row = prefix;
                row.push_back(v);
                next.push_back(std::move(row));
            }
        out = std::move(next);
    }
    return out;
}

/// Checks one family's closed form against enumeration on each parameter
/// tuple. Reports come back in input order; out-of-domain or oversized
/// instances are skipped with a note rather than failing the sweep.
inline std::vector<VerifyReport> verify_family(std::string_view name, const std::vector<std::vector<long>>& tuples,
                                               VerifyOptions opts = {})
{
    const auto& fam = find_verifiable_family(name);
    std::vector<VerifyReport> reports(tuples.size());
    detail::for_each_subtree(tuples.size(), opts.workers, [&](std::size_t i) {
        auto& rep = reports[i];
        rep.family = std::string(fam.name);
        rep.params = tuples[i];
        if (tuples[i].size() != fam.param_names.size()) {
            rep.skipped = true;
            rep.note = "skipped: expected " + std::to_string(fam.param_names.size()) + " parameter(s)";
            return;
        }
        try {
            rep.closed_form = fam.closed_form(tuples[i]);
        } catch (const std::exception& e) {
            rep.skipped = true;
            rep.note = std::string("skipped: closed form undefined here: ") + e.what();
            return;
        }
        try {
            const Graph g = fam.graph(tuples[i]);
            if (g.order() > opts.max_order) {
                rep.skipped = true;
                rep.note = "skipped: graph order " + std::to_string(g.order()) + " exceeds the size guard " +
                           std::to_string(opts.max_order);
                return;
            }
            rep.oracle = fam.oracle(g, EnumOptions{1});
        } catch (const std::exception& e) {
            rep.skipped = true;
            rep.note = std::string("skipped: ") + e.what();
            return;
        }
        rep.match = rep.closed_form == rep.oracle;
        rep.note = fam.annotate ? fam.annotate(tuples[i], rep.match) : detail::default_note(rep.match);
    });
    return reports;
}

}  // namespace idpoly

#endif  // IDPOLY_VERIFY_HPP
