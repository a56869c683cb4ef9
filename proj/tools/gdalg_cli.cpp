// gdalg: command-line front end for the Novikov and special GD bases.

#include "gdalg/errors.hpp"
#include "gdalg/identities.hpp"
#include "gdalg/novikov.hpp"
#include "gdalg/sgd.hpp"
#include "gdalg/syntax.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

using namespace gdalg;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 2, kDomain = 3, kInternal = 4 };

struct Options {
    bool json = false;
    int gens = 1;
    int degree = 1;
    bool multilinear = false;
    std::string algebra = "sgd";
    bool count_only = false;
    std::string op = "circ";
    std::string identity = "all";
    int max_degree = 5;
    std::string lhs, rhs;
};

json terms_json(const std::string& algebra, int degree, const TermComb& c) {
    json terms = json::array();
    for (const auto& [t, q] : c) terms.push_back({{"coeff", to_string(q)}, {"term", to_string(t)}});
    return {{"algebra", algebra}, {"degree", degree}, {"terms", terms}, {"count", c.size()}};
}

std::string render(const Options& o, int degree, const TermComb& c) {
    if (o.json) return terms_json(o.algebra, degree, c).dump(2) + "\n";
    return to_string(c) + "\n";
}

int degree_of(const TermComb& c) { return c.empty() ? 0 : c.begin()->first.degree(); }

std::string cmd_basis(const Options& o) {
    const auto basis = o.algebra == "nov" ? nov_basis(o.gens, o.degree, o.multilinear)
                                          : sgd_basis(o.gens, o.degree, o.multilinear);
    if (o.json) {
        json terms = json::array();
        for (const auto& t : basis) terms.push_back({{"coeff", "1"}, {"term", to_string(t)}});
        return json{{"algebra", o.algebra}, {"degree", o.degree}, {"terms", terms}, {"count", basis.size()}}.dump(2) +
               "\n";
    }
    std::ostringstream out;
    if (!o.count_only)
        for (const auto& t : basis) out << to_string(t) << "\n";
    out << basis.size() << "\n";
    return out.str();
}

std::string cmd_reduce(const Options& o) {
    if (o.algebra == "nov") {
        const CDPoly p = parse_cd(o.lhs);
        const int deg = p.empty() ? 0 : p.begin()->first.degree();
        return render(o, deg, nov_reduce(p));
    }
    const PoisPoly p = parse_pois(o.lhs);
    const int deg = p.empty() ? 0 : p.begin()->first.degree();
    return render(o, deg, sgd_reduce(p));
}

std::string cmd_multiply(const Options& o) {
    const Term a = parse_term(o.lhs), b = parse_term(o.rhs);
    TermComb r;
    if (o.algebra == "nov") {
        if (o.op != "circ") throw CLI::ValidationError("--op", "the Novikov algebra has only circ");
        r = nov_multiply(a, b);
    } else {
        r = sgd_multiply(a, b, o.op == "circ" ? SgdOp::Circ : SgdOp::Bracket);
    }
    return render(o, a.degree() + b.degree(), r);
}

std::string cmd_expand(const Options& o) {
    const TermComb c = parse_term_comb(o.lhs);
    std::string text;
    json terms = json::array();
    if (o.algebra == "nov") {
        CDPoly p;
        for (const auto& [t, q] : c) p.add(tau_nov(t), q);
        text = to_string(p);
        for (const auto& [m, q] : p) terms.push_back({{"coeff", to_string(q)}, {"term", to_string(m)}});
    } else {
        PoisPoly p;
        for (const auto& [t, q] : c) p.add(tau2(t), q);
        text = to_string(p);
        for (const auto& [m, q] : p) terms.push_back({{"coeff", to_string(q)}, {"term", to_string(m)}});
    }
    if (o.json)
        return json{{"algebra", o.algebra}, {"degree", degree_of(c)}, {"terms", terms}, {"count", terms.size()}}.dump(2) +
               "\n";
    return text + "\n";
}

std::string cmd_check(const Options& o) {
    std::vector<int> ids;
    if (o.identity == "all") {
        ids = {1, 2, 3, 4, 5, 6, 7, 8, kWronskianId};
    } else if (o.identity == "w" || o.identity == "wronskian") {
        ids = {kWronskianId};
    } else {
        int id = 0;
        try {
            id = std::stoi(o.identity);
        } catch (const std::exception&) {
        }
        if (id < 1 || id > 8) throw CLI::ValidationError("--identity", "expected 1..8, w or all");
        ids = {id};
    }
    json reports = json::array();
    std::ostringstream out;
    for (int id : ids) {
        const IdentityReport r = check_identity(id);
        const std::string label = id == kWronskianId ? "w" : std::to_string(id);
        out << "identity " << label << " (" << r.name << "): " << (r.holds ? "holds" : "fails") << "\n";
        for (const auto& p : r.parts) out << "  " << p.statement << "\n";
        if (!r.holds) out << "  witness: " << r.witness << "\n";
        reports.push_back({{"identity", label}, {"name", r.name}, {"holds", r.holds}, {"witness", r.witness}});
    }
    if (o.json) return reports.dump(2) + "\n";
    return out.str();
}

std::string cmd_dims(const Options& o) {
    std::vector<std::size_t> dims;
    for (int d = 1; d <= o.max_degree; ++d) {
        dims.push_back(o.algebra == "nov" ? nov_basis(o.gens, d, o.multilinear).size()
                                          : sgd_basis(o.gens, d, o.multilinear).size());
    }
    if (o.json)
        return json{{"algebra", o.algebra}, {"gens", o.gens}, {"multilinear", o.multilinear}, {"dims", dims}}.dump(2) +
               "\n";
    std::ostringstream out;
    out << "degree  dimension\n";
    for (std::size_t i = 0; i < dims.size(); ++i) out << std::setw(6) << i + 1 << "  " << dims[i] << "\n";
    for (std::size_t i = 0; i < dims.size(); ++i) out << (i ? "," : "") << dims[i];
    out << "\n";
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bases of free Novikov and special Gelfand-Dorfman algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "JSON output");
    app.add_option("--gens", o.gens, "number of generators")->check(CLI::PositiveNumber);
    app.add_option("--degree", o.degree, "degree")->check(CLI::PositiveNumber);
    app.add_flag("--multilinear", o.multilinear, "each of x1..x<degree> exactly once");
    app.add_option("--algebra", o.algebra, "nov or sgd")->check(CLI::IsMember({"nov", "sgd"}));

    auto* basis = app.add_subcommand("basis", "list the basis of a homogeneous component");
    basis->add_flag("--count-only", o.count_only, "print only the number of basis terms");
    auto* reduce = app.add_subcommand("reduce", "express a weight -1 polynomial in the basis");
    reduce->add_option("poly", o.lhs, "polynomial, e.g. \"x2*x1'\" or \"{x2, x1}*x3'\"")->required();
    auto* multiply = app.add_subcommand("multiply", "product of two terms in the basis");
    multiply->add_option("--op", o.op, "circ or bracket")->check(CLI::IsMember({"circ", "bracket"}));
    multiply->add_option("a", o.lhs, "left factor")->required();
    multiply->add_option("b", o.rhs, "right factor")->required();
    auto* expand = app.add_subcommand("expand", "image of a term combination in the differential algebra");
    expand->add_option("term", o.lhs, "term combination")->required();
    auto* check = app.add_subcommand("check", "verify identities 1-8 and the Wronskian identity");
    check->add_option("--identity", o.identity, "1..8, w, or all");
    auto* dims = app.add_subcommand("dims", "dimensions by degree");
    dims->add_option("--max-degree", o.max_degree, "largest degree")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        std::string out;
        if (*basis) out = cmd_basis(o);
        else if (*reduce) out = cmd_reduce(o);
        else if (*multiply) out = cmd_multiply(o);
        else if (*expand) out = cmd_expand(o);
        else if (*check) out = cmd_check(o);
        else out = cmd_dims(o);
        std::cout << out << std::flush;
        return kOk;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n" << e.caret_diagnostic() << "\n";
        return kUsage;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const WeightError& e) {
        std::cerr << "weight error: " << e.what() << "\n";
        return kDomain;
    } catch (const NotLSError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const NotLieElementError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const StructureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}
