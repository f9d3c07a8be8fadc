#ifndef IDPOLY_CLI_HPP
#define IDPOLY_CLI_HPP

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "enumeration.hpp"
#include "families.hpp"
#include "family_graphs.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "json_io.hpp"
#include "operators.hpp"
#include "polynomial.hpp"
#include "roots.hpp"
#include "shape.hpp"
#include "verify.hpp"

namespace idpoly::cli {

enum ExitCode : int { ok = 0, usage = 1, computation = 2, mismatch = 3 };

/// Bad flag combinations detected after parsing (exit code 1).
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

struct GraphSource {
    std::string graph6;
    std::string file;
    std::string family;
    std::string n, m, q, k, parts;

    int count() const { return !graph6.empty() + !file.empty() + !family.empty(); }
};

struct Common {
    bool json = false;
    unsigned workers = 1;
    double tol = default_root_tol;
    std::optional<std::size_t> max_n;
};

inline long parse_long(const std::string& flag, const std::string& text)
{
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(text, &used);
    } catch (const std::exception&) {
        throw usage_error("--" + flag + ": '" + text + "' is not an integer");
    }
    if (used != text.size())
        throw usage_error("--" + flag + ": '" + text + "' is not an integer");
    return v;
}

/// "a" or "a..b" -> inclusive range.
inline std::pair<long, long> parse_range(const std::string& flag, const std::string& text)
{
    if (auto dots = text.find(".."); dots != std::string::npos) {
        const long lo = parse_long(flag, text.substr(0, dots));
        const long hi = parse_long(flag, text.substr(dots + 2));
        if (lo > hi)
            throw usage_error("--" + flag + ": empty range '" + text + "'");
        return {lo, hi};
    }
    const long v = parse_long(flag, text);
    return {v, v};
}

inline std::size_t parse_count(const std::string& flag, const std::string& text)
{
    const long v = parse_long(flag, text);
    if (v < 0)
        throw usage_error("--" + flag + " must be nonnegative");
    return static_cast<std::size_t>(v);
}

inline const std::string& family_param(const GraphSource& src, std::string_view name)
{
    const std::string* value = name == "n" ? &src.n : name == "m" ? &src.m : name == "q" ? &src.q : &src.k;
    if (value->empty())
        throw usage_error("family '" + src.family + "' needs --" + std::string(name));
    return *value;
}

inline FamilySpec family_spec(const GraphSource& src)
{
    const auto fam = family_from_string(src.family);
    if (!fam)
        throw usage_error("unknown family '" + src.family + "'");
    FamilySpec spec{*fam, {}};
    std::vector<std::string_view> names;
    switch (*fam) {
    case Family::complete_multipartite: {
        if (src.parts.empty())
            throw usage_error("complete_multipartite needs --parts, e.g. --parts 2,1,1");
        std::stringstream ss(src.parts);
        std::string item;
        while (std::getline(ss, item, ','))
            spec.params.push_back(parse_count("parts", item));
        return spec;
    }
    case Family::generalized_book:
        names = {"n", "m"};
        break;
    case Family::generalized_friendship:
        names = {"q", "n"};
        break;
    case Family::k_path:
        names = {"k", "n"};
        break;
    default:
        names = {"n"};
        break;
    }
    for (auto name : names)
        spec.params.push_back(parse_count(std::string(name), family_param(src, name)));
    return spec;
}

inline Graph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return read_edge_list(in);
}

inline Graph load_graph(const GraphSource& src)
{
    if (src.count() != 1)
        throw usage_error("exactly one input source is required: --graph6, --file or --family");
    if (!src.graph6.empty())
        return from_graph6(src.graph6);
    if (!src.file.empty())
        return read_graph_file(src.file);
    return family_graph(family_spec(src));
}

inline void add_source(CLI::App* cmd, GraphSource& src)
{
    cmd->add_option("--graph6", src.graph6, "Input graph as a graph6 string");
    cmd->add_option("--file", src.file, "Input graph as an edge-list file");
    cmd->add_option("--family", src.family, "Input graph from a named family");
    cmd->add_option("--n", src.n, "Family parameter n");
    cmd->add_option("--m", src.m, "Family parameter m");
    cmd->add_option("--q", src.q, "Family parameter q");
    cmd->add_option("--k", src.k, "Family parameter k");
    cmd->add_option("--parts", src.parts, "Part sizes for complete_multipartite, comma separated");
}

inline void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_flag("--json", c.json, "Machine-readable JSON output");
    cmd->add_option("--workers", c.workers, "Worker threads for enumeration")->check(CLI::PositiveNumber);
    cmd->add_option("--tol", c.tol, "Tolerance for numeric root finding")->check(CLI::PositiveNumber);
    cmd->add_option("--max-n", c.max_n, "Override the exhaustive-search size guard (at your own risk)");
}

inline std::size_t exhaustive_guard(const Common& c, std::ostream& err)
{
    if (c.max_n) {
        err << "warning: size guard overridden to n <= " << *c.max_n << "\n";
        return *c.max_n;
    }
    return exhaustive_max_order;
}

// Two-column table with right-aligned columns.
inline void print_table(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows,
                        const std::string& left, const std::string& right)
{
    std::size_t wl = left.size(), wr = right.size();
    for (const auto& [a, b] : rows) {
        wl = std::max(wl, a.size());
        wr = std::max(wr, b.size());
    }
    out << std::setw(static_cast<int>(wl)) << left << "  " << std::setw(static_cast<int>(wr)) << right << "\n";
    for (const auto& [a, b] : rows)
        out << std::setw(static_cast<int>(wl)) << a << "  " << std::setw(static_cast<int>(wr)) << b << "\n";
}

inline void print_poly(std::ostream& out, const std::string& name, const IntPoly& p)
{
    out << name << " = " << to_string(p) << "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        if (p.coeffs()[k] != 0)
            rows.emplace_back(std::to_string(k), p.coeffs()[k].str());
    print_table(out, rows, "k", "coefficient");
}

inline void print_kv(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows)
{
    std::size_t w = 0;
    for (const auto& row : rows)
        w = std::max(w, row.first.size());
    for (const auto& [key, value] : rows)
        out << std::left << std::setw(static_cast<int>(w)) << key << std::right << "  " << value << "\n";
}

inline void print_graph(std::ostream& out, const Graph& g, const std::string& format, bool as_json)
{
    if (as_json)
        out << graph_to_json(g).dump() << "\n";
    else if (format == "edge-list")
        out << to_edge_list(g);
    else
        out << to_graph6(g) << "\n";
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline void print_root_report(std::ostream& out, const RootReport& r)
{
    print_kv(out, {{"real_rooted", yes_no(r.real_rooted) + " (" + r.certification + ")"},
                   {"max_modulus", [&] {
                        std::ostringstream s;
                        s << std::setprecision(17) << r.max_modulus;
                        return s.str();
                    }()},
                   {"converged", yes_no(r.converged)}});
    std::vector<std::pair<std::string, std::string>> real;
    for (const auto& root : r.real_roots) {
        std::ostringstream s;
        s << std::setprecision(17) << root.approx;
        real.emplace_back(root.exact ? root.exact->str() : "(" + root.lo.str() + ", " + root.hi.str() + "]",
                          s.str() + " x" + std::to_string(root.multiplicity));
    }
    out << "real roots:\n";
    print_table(out, real, "root", "value x multiplicity");
    std::vector<std::pair<std::string, std::string>> cplx;
    for (const auto& root : r.complex_roots) {
        std::ostringstream a, b;
        a << std::setprecision(17) << root.value.real() << (root.value.imag() < 0 ? " - " : " + ")
          << std::abs(root.value.imag()) << "i";
        b << std::setprecision(3) << root.residual << " x" << root.multiplicity;
        cplx.emplace_back(a.str(), b.str());
    }
    out << "numeric nonzero roots:\n";
    print_table(out, cplx, "root", "residual x multiplicity");
}

struct Cli {
    CLI::App app{"Independent domination polynomials: compute, analyze, construct and verify"};
    Common common;
    GraphSource src;

    // roots
    std::string coeffs, of = "di";
    // family / product / construct output
    std::string format = "graph6";
    // product
    std::string op, g6, h6, gfile, hfile, cover_file;
    std::size_t r = 0;
    // verify
    bool allow_mismatch = false;
    // construct
    std::optional<long> alternating, integer_root;

    CLI::App *poly, *ipoly, *roots, *analyze, *family, *product, *verify, *construct;

    Cli()
    {
        app.require_subcommand(1);
        // Long-only help, so subcommands can use --h for the second graph.
        app.set_help_flag("--help", "Print this help message and exit");
        poly = app.add_subcommand("poly", "Independent domination polynomial D_i(G,x)");
        ipoly = app.add_subcommand("ipoly", "Independence polynomial I(G,x)");
        roots = app.add_subcommand("roots", "Root report for D_i(G,x), I(G,x) or a coefficient list");
        analyze = app.add_subcommand("analyze", "Graph parameters and coefficient-shape checks");
        family = app.add_subcommand("family", "Emit a family graph");
        product = app.add_subcommand("product", "Graph products and transforms");
        verify = app.add_subcommand("verify", "Check closed forms against enumeration");
        construct = app.add_subcommand("construct", "Graphs with prescribed D_i(G,-1) or integer roots");

        for (auto* cmd : {poly, ipoly, roots, analyze, family}) {
            add_source(cmd, src);
            add_common(cmd, common);
        }
        roots->add_option("--coeffs", coeffs, "Polynomial as ascending coefficients, e.g. 0,1,1");
        roots->add_option("--of", of, "Which polynomial of the graph: di or ipoly")
            ->check(CLI::IsMember({"di", "ipoly"}));
        family->add_option("--format", format, "graph6 or edge-list")->check(CLI::IsMember({"graph6", "edge-list"}));

        add_common(product, common);
        product->add_option("--op", op, "join | lex | corona | compound | expansion")
            ->required()
            ->check(CLI::IsMember({"join", "lex", "corona", "compound", "expansion"}));
        product->add_option("--g", g6, "First graph (graph6)");
        product->add_option("--h", h6, "Second graph (graph6)");
        product->add_option("--g-file", gfile, "First graph (edge-list file)");
        product->add_option("--h-file", hfile, "Second graph (edge-list file)");
        product->add_option("--cover", cover_file, "Clique cover file for compound (default: greedy)");
        product->add_option("--r", r, "Clique size for expansion");
        product->add_option("--format", format, "graph6 or edge-list")
            ->check(CLI::IsMember({"graph6", "edge-list"}));

        add_common(verify, common);
        verify->add_option("--family", src.family, "Closed form to check")->required();
        verify->add_option("--n", src.n, "Parameter n (value or a..b)");
        verify->add_option("--m", src.m, "Parameter m (value or a..b)");
        verify->add_option("--q", src.q, "Parameter q (value or a..b)");
        verify->add_option("--k", src.k, "Parameter k (value or a..b)");
        verify->add_flag("--allow-mismatch", allow_mismatch, "Exit 0 even when a closed form disagrees");

        add_common(construct, common);
        auto* alt = construct->add_option("--alternating-sum", alternating, "Graph with D_i(G,-1) = n");
        auto* root = construct->add_option("--integer-root", integer_root, "Graph with root -n");
        alt->excludes(root);
        construct->add_option("--format", format, "graph6 or edge-list")
            ->check(CLI::IsMember({"graph6", "edge-list"}));
    }

    int dispatch(std::ostream& out, std::ostream& err)
    {
        if (poly->parsed())
            return run_poly(out);
        if (ipoly->parsed())
            return run_ipoly(out);
        if (roots->parsed())
            return run_roots(out);
        if (analyze->parsed())
            return run_analyze(out, err);
        if (family->parsed())
            return run_family(out);
        if (product->parsed())
            return run_product(out);
        if (verify->parsed())
            return run_verify(out, err);
        return run_construct(out);
    }

    EnumOptions enum_options() const { return EnumOptions{common.workers}; }

    int run_poly(std::ostream& out)
    {
        const auto d = di_polynomial(load_graph(src), enum_options());
        if (common.json)
            out << poly_to_json(d).dump() << "\n";
        else
            print_poly(out, "D_i(G,x)", d);
        return ok;
    }

    int run_ipoly(std::ostream& out)
    {
        const auto i = independence_polynomial(load_graph(src));
        if (common.json)
            out << poly_to_json(i).dump() << "\n";
        else
            print_poly(out, "I(G,x)", i);
        return ok;
    }

    int run_roots(std::ostream& out)
    {
        IntPoly p;
        if (!coeffs.empty()) {
            if (src.count() != 0)
                throw usage_error("--coeffs cannot be combined with a graph input");
            p = poly_from_csv(coeffs);
        } else {
            const Graph g = load_graph(src);
            p = of == "ipoly" ? independence_polynomial(g) : di_polynomial(g, enum_options());
        }
        const auto report = complex_roots(p, common.tol);
        if (common.json) {
            auto j = root_report_to_json(report);
            j["polynomial"] = poly_to_json(p);
            out << j.dump() << "\n";
        } else {
            out << "p(x) = " << to_string(p) << "\n";
            print_root_report(out, report);
        }
        return ok;
    }

    int run_analyze(std::ostream& out, std::ostream& err)
    {
        const Graph g = load_graph(src);
        if (g.order() == 0)
            throw std::invalid_argument("analyze needs a graph with at least one vertex");
        const auto guard = exhaustive_guard(common, err);
        const auto d = di_polynomial(g, enum_options());
        const auto ip = independence_polynomial(g);
        std::optional<std::size_t> dom;
        if (g.order() <= std::min(guard, std::size_t{62}))
            dom = gamma(g, guard);
        else
            err << "note: domination number skipped (order " << g.order() << " above the size guard)\n";
        const bool real_rooted = d.degree() >= 1 ? is_real_rooted(d) : true;
        const auto at_minus_one = evaluate(d, Rational(-1));
        const auto at_one = evaluate(d, Rational(1));
        const std::size_t a = static_cast<std::size_t>(d.degree());
        const std::size_t gi = static_cast<std::size_t>(d.valuation());
        const bool wc = std::count_if(d.coeffs().begin(), d.coeffs().end(), [](const BigInt& c) { return c != 0; }) == 1;

        if (common.json) {
            json j{{"n", g.order()},
                   {"edges", g.size()},
                   {"graph6", to_graph6(g)},
                   {"di", poly_to_json(d)},
                   {"ipoly", poly_to_json(ip)},
                   {"gamma", dom ? json(*dom) : json(nullptr)},
                   {"gamma_i", gi},
                   {"alpha", a},
                   {"well_covered", wc},
                   {"claw_free", is_claw_free(g)},
                   {"unimodal", is_unimodal(d)},
                   {"log_concave", is_log_concave(d)},
                   {"symmetric", is_symmetric(d)},
                   {"newton", newton_check(d)},
                   {"real_rooted", real_rooted},
                   {"mis_count", at_one.str()},
                   {"di_at_minus_one", at_minus_one.str()}};
            out << j.dump() << "\n";
            return ok;
        }
        print_kv(out, {{"order", std::to_string(g.order())},
                       {"edges", std::to_string(g.size())},
                       {"graph6", to_graph6(g)},
                       {"D_i(G,x)", to_string(d)},
                       {"I(G,x)", to_string(ip)},
                       {"gamma", dom ? std::to_string(*dom) : "skipped"},
                       {"gamma_i", std::to_string(gi)},
                       {"alpha", std::to_string(a)},
                       {"well_covered", yes_no(wc)},
                       {"claw_free", yes_no(is_claw_free(g))},
                       {"unimodal", yes_no(is_unimodal(d))},
                       {"log_concave", yes_no(is_log_concave(d))},
                       {"symmetric", yes_no(is_symmetric(d))},
                       {"newton", yes_no(newton_check(d))},
                       {"real_rooted", yes_no(real_rooted)},
                       {"mis_count", at_one.str()},
                       {"D_i(G,-1)", at_minus_one.str()}});
        return ok;
    }

    int run_family(std::ostream& out)
    {
        if (src.family.empty() || src.count() != 1)
            throw usage_error("family needs --family (and no other input source)");
        print_graph(out, load_graph(src), format, common.json);
        return ok;
    }

    Graph product_input(const std::string& g6_text, const std::string& file, const char* which) const
    {
        if (g6_text.empty() == file.empty())
            throw usage_error(std::string("product needs exactly one of --") + which + " and --" + which + "-file");
        return g6_text.empty() ? read_graph_file(file) : from_graph6(g6_text);
    }

    int run_product(std::ostream& out)
    {
        const Graph g = product_input(g6, gfile, "g");
        Graph result;
        if (op == "expansion") {
            if (!h6.empty() || !hfile.empty())
                throw usage_error("expansion takes one graph and --r");
            if (r == 0)
                throw usage_error("expansion needs --r >= 1");
            result = expansion(g, r);
        } else {
            const Graph h = product_input(h6, hfile, "h");
            if (!cover_file.empty() && op != "compound")
                throw usage_error("--cover only applies to --op compound");
            if (op == "join")
                result = join(g, h);
            else if (op == "lex")
                result = lexicographic(g, h);
            else if (op == "corona")
                result = corona(g, h);
            else {
                CliqueCover cover = greedy_clique_cover(g);
                if (!cover_file.empty()) {
                    std::ifstream in(cover_file);
                    if (!in)
                        throw std::runtime_error("cannot open '" + cover_file + "'");
                    cover = CliqueCover::make(g, read_cover_blocks(in));
                }
                result = compound(g, cover, h);
            }
        }
        print_graph(out, result, format, common.json);
        return ok;
    }

    int run_verify(std::ostream& out, std::ostream& err)
    {
        const auto& fam = find_verifiable_family(src.family);
        std::vector<std::pair<long, long>> ranges;
        for (auto name : fam.param_names)
            ranges.push_back(parse_range(std::string(name), family_param(src, name)));
        VerifyOptions opts{common.workers, max_mask_order};
        if (common.max_n)
            opts.max_order = exhaustive_guard(common, err);
        const auto reports = verify_family(src.family, parameter_grid(ranges), opts);
        const bool any_mismatch =
            std::any_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return !r.skipped && !r.match; });
        if (common.json) {
            json arr = json::array();
            for (const auto& rep : reports)
                arr.push_back(verify_report_to_json(rep));
            out << arr.dump() << "\n";
        } else {
            std::vector<std::vector<std::string>> rows{{"params", "closed form", "enumeration", "match", "note"}};
            for (const auto& rep : reports) {
                std::string params;
                for (std::size_t i = 0; i < rep.params.size(); ++i)
                    params += (i ? "," : "") + std::to_string(rep.params[i]);
                rows.push_back({params, to_string(rep.closed_form), rep.skipped ? "-" : to_string(rep.oracle),
                                rep.skipped ? "skip" : yes_no(rep.match), rep.note});
            }
            std::vector<std::size_t> width(rows[0].size(), 0);
            for (const auto& row : rows)
                for (std::size_t c = 0; c < row.size(); ++c)
                    width[c] = std::max(width[c], row[c].size());
            out << "family " << fam.name << "\n";
            for (const auto& row : rows) {
                for (std::size_t c = 0; c < row.size(); ++c)
                    out << std::left << std::setw(static_cast<int>(c + 1 == row.size() ? 0 : width[c])) << row[c]
                        << (c + 1 == row.size() ? "" : "  ");
                out << std::right << "\n";
            }
        }
        if (any_mismatch && !allow_mismatch) {
            err << "verify: at least one closed form disagrees with enumeration\n";
            return mismatch;
        }
        return ok;
    }

    int run_construct(std::ostream& out)
    {
        if (!alternating && !integer_root)
            throw usage_error("construct needs --alternating-sum n or --integer-root n");
        const Graph g = alternating ? construct_alternating_sum_graph(*alternating)
                                    : construct_integer_root_graph(*integer_root);
        const auto d = di_polynomial(g, enum_options());
        if (common.json) {
            auto j = graph_to_json(g);
            j["di"] = poly_to_json(d);
            j["di_at_minus_one"] = evaluate(d, Rational(-1)).str();
            out << j.dump() << "\n";
        } else {
            print_graph(out, g, format, false);
            out << "D_i(G,x) = " << to_string(d) << "\n";
            out << "D_i(G,-1) = " << evaluate(d, Rational(-1)).str() << "\n";
        }
        return ok;
    }
};

}  // namespace detail

/// Parses argv and runs one subcommand. Results go to `out`, diagnostics to
/// `err`. Returns 0 on success, 1 on usage errors, 2 on computation errors
/// and 3 when verify finds a mismatch (unless --allow-mismatch).
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    detail::Cli cli;
    try {
        cli.app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        cli.app.exit(e, out, err);
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        cli.app.exit(e, out, err);
        return ok;
    } catch (const CLI::ParseError& e) {
        cli.app.exit(e, out, err);
        return usage;
    }
    try {
        return cli.dispatch(out, err);
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return computation;
    }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"idpoly"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace idpoly::cli

#endif  // IDPOLY_CLI_HPP
