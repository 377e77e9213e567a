#include "modcount/cli.hpp"

#include "modcount/bernoulli.hpp"
#include "modcount/errors.hpp"
#include "modcount/fatgraph.hpp"
#include "modcount/hurwitz.hpp"
#include "modcount/json_io.hpp"
#include "modcount/laplace.hpp"
#include "modcount/moduli.hpp"
#include "modcount/polytope.hpp"
#include "modcount/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace modcount {

namespace {

std::vector<std::vector<long long>> parse_matrix(const std::string& text) {
    std::vector<std::vector<long long>> rows;
    std::istringstream in(text);
    std::string row_text;
    while (std::getline(in, row_text, ';')) {
        std::vector<long long> row;
        std::istringstream row_in(row_text);
        std::string cell;
        while (std::getline(row_in, cell, ','))
            try {
                row.push_back(std::stoll(cell));
            } catch (const std::exception&) {
                throw UsageError("malformed matrix entry '" + cell + "'");
            }
        if (row.empty()) throw UsageError("empty matrix row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw UsageError("empty matrix");
    return rows;
}

Partition partition_from(const std::vector<int>& parts) {
    Partition mu{parts};
    mu.validate();
    return mu;
}

BranchData branch_data_from(int degree, const std::string& classes) {
    BranchData data;
    data.degree = degree;
    std::istringstream in(classes);
    std::string part;
    while (std::getline(in, part, ';')) {
        std::vector<int> parts;
        std::istringstream pin(part);
        std::string cell;
        while (std::getline(pin, cell, ','))
            try {
                parts.push_back(std::stoi(cell));
            } catch (const std::exception&) {
                throw UsageError("malformed class entry '" + cell + "'");
            }
        data.profiles.push_back(Partition{parts});
    }
    data.validate();
    return data;
}

nlohmann::json series_to_json(const TruncatedSeries& series) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [exp, coef] : series.coeffs())
        terms.push_back({{"exp", exp}, {"coef", coef.to_string()}});
    return {{"vars", series.vars()}, {"order", series.order()}, {"terms", terms}};
}

void print_series(std::ostream& out, const TruncatedSeries& series, const std::string& format) {
    if (format == "json") {
        out << series_to_json(series).dump(2) << "\n";
        return;
    }
    for (const auto& [exp, coef] : series.coeffs()) {
        out << "z^(";
        for (size_t i = 0; i < exp.size(); ++i) out << (i ? "," : "") << exp[i];
        out << "): " << coef.to_string() << "\n";
    }
}

void print_polynomial(std::ostream& out, const Polynomial& poly, const std::string& format) {
    if (format == "json") out << to_json(poly).dump(2) << "\n";
    else out << poly.to_string() << "\n";
}

} // namespace

Command parse_command(const std::vector<std::string>& argv) {
    Command cmd;
    CLI::App app{"exact lattice-point counts on the moduli of curves, with cross-checks"};
    app.name("modcount");
    app.require_subcommand(1);

    std::string matrix_text, mu_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cmd.format, "table|json")
            ->check(CLI::IsMember({"table", "json"}));
        sub->add_option("--cache-dir", cmd.cache_dir, "quasi-polynomial cache directory");
        sub->add_option("--jobs", cmd.jobs, "worker threads (default: all cores)")
            ->check(CLI::NonNegativeNumber);
    };

    auto* fatgraphs = app.add_subcommand("fatgraphs", "enumerate or analyze fatgraphs");
    fatgraphs->add_option("--genus", cmd.genus)->check(CLI::NonNegativeNumber);
    fatgraphs->add_option("--boundaries", cmd.boundaries)->check(CLI::PositiveNumber);
    fatgraphs->add_option("--graph", cmd.graph_text, "analyze one fatgraph in text form");
    add_common(fatgraphs);

    auto* count = app.add_subcommand("count", "lattice count N_{g,n}(b)");
    count->add_option("--genus", cmd.genus)->required()->check(CLI::NonNegativeNumber);
    count->add_option("--lengths", cmd.lengths)->required()->delimiter(',');
    count->add_option("--method", cmd.method, "recursion|direct|belyi|hz")
        ->check(CLI::IsMember({"recursion", "direct", "belyi", "hz"}));
    add_common(count);

    auto* poly = app.add_subcommand("poly", "quasi-polynomial of N_{g,n}");
    poly->add_option("--genus", cmd.genus)->required()->check(CLI::NonNegativeNumber);
    poly->add_option("--boundaries", cmd.boundaries)->required()->check(CLI::PositiveNumber);
    add_common(poly);

    auto* euler = app.add_subcommand("euler", "orbifold Euler characteristic");
    euler->add_option("--genus", cmd.genus)->required()->check(CLI::NonNegativeNumber);
    euler->add_option("--boundaries", cmd.boundaries)->required()->check(CLI::PositiveNumber);
    euler->add_option("--method", cmd.method, "lattice|zeta")
        ->required()
        ->check(CLI::IsMember({"lattice", "zeta"}));
    add_common(euler);

    auto* volume = app.add_subcommand("volume", "volume polynomial");
    volume->add_option("--genus", cmd.genus)->required()->check(CLI::NonNegativeNumber);
    volume->add_option("--boundaries", cmd.boundaries)->required()->check(CLI::PositiveNumber);
    add_common(volume);

    auto* intersections = app.add_subcommand("intersections", "psi intersection numbers");
    intersections->add_option("--genus", cmd.genus)->required()->check(CLI::NonNegativeNumber);
    intersections->add_option("--boundaries", cmd.boundaries)->required()->check(CLI::PositiveNumber);
    add_common(intersections);

    auto* dilaton = app.add_subcommand("dilaton", "dilaton identity check");
    dilaton->add_option("--genus", cmd.genus)->required()->check(CLI::NonNegativeNumber);
    dilaton->add_option("--boundaries", cmd.boundaries)->required()->check(CLI::PositiveNumber);
    dilaton->add_option("--lengths", cmd.lengths)->required()->delimiter(',');
    add_common(dilaton);

    auto* hz = app.add_subcommand("hz", "polygon-gluing pipeline for n = 1");
    hz->add_option("--genus", cmd.genus)->check(CLI::NonNegativeNumber);
    hz->add_option("--length", cmd.hz_length, "boundary length b (even)");
    std::vector<int> table_bounds;
    hz->add_option("--table", table_bounds, "NMAX,KMAX: print the c-table")->delimiter(',');
    add_common(hz);

    auto* hurwitz = app.add_subcommand("hurwitz", "branched-cover counts");
    hurwitz->require_subcommand(1);
    auto* simple = hurwitz->add_subcommand("simple", "simple Hurwitz number");
    simple->add_option("--genus", cmd.genus)->required()->check(CLI::NonNegativeNumber);
    simple->add_option("--mu", cmd.mu)->required()->delimiter(',');
    add_common(simple);
    auto* belyi = hurwitz->add_subcommand("belyi", "three-point branched covers");
    belyi->add_option("--genus", cmd.genus)->required()->check(CLI::NonNegativeNumber);
    belyi->add_option("--lengths", cmd.lengths)->required()->delimiter(',');
    belyi->add_flag("--allow-units", cmd.allow_units, "allow unramified sheets over 0");
    add_common(belyi);
    auto* trace = hurwitz->add_subcommand("trace", "disconnected class-algebra count");
    trace->add_option("--degree", cmd.degree)->required()->check(CLI::PositiveNumber);
    trace->add_option("--classes", cmd.classes)->required();
    add_common(trace);
    auto* elsv = hurwitz->add_subcommand("elsv", "ELSV formula evaluation");
    elsv->add_option("--genus", cmd.genus)->required()->check(CLI::NonNegativeNumber);
    elsv->add_option("--mu", cmd.mu)->required()->delimiter(',');
    add_common(elsv);

    auto* vpf = app.add_subcommand("vpf", "vector partition functions");
    vpf->require_subcommand(1);
    auto* vcount = vpf->add_subcommand("count", "lattice points of P_A(b)");
    vcount->add_option("--matrix", matrix_text)->required();
    vcount->add_option("--b", cmd.b)->required()->delimiter(',');
    vcount->add_flag("--non-strict", [&cmd](size_t) { cmd.strict = false; },
                     "count x >= 0 instead of x >= 1");
    add_common(vcount);
    auto* vindex = vpf->add_subcommand("index", "lattice index of the column span");
    vindex->add_option("--matrix", matrix_text)->required();
    add_common(vindex);
    auto* vvolume = vpf->add_subcommand("volume", "quotient volume via dilation");
    vvolume->add_option("--matrix", matrix_text)->required();
    vvolume->add_option("--b", cmd.b)->required()->delimiter(',');
    add_common(vvolume);
    auto* vlaplace = vpf->add_subcommand("laplace", "discrete Laplace product expansion");
    vlaplace->add_option("--matrix", matrix_text)->required();
    vlaplace->add_option("--order", cmd.order)->required()->check(CLI::PositiveNumber);
    add_common(vlaplace);
    auto* vehrhart = vpf->add_subcommand("ehrhart", "dilation count polynomial");
    vehrhart->add_option("--matrix", matrix_text)->required();
    vehrhart->add_option("--b0", cmd.b0)->required()->delimiter(',');
    vehrhart->add_option("--T", cmd.dilation_steps)->required()->check(CLI::PositiveNumber);
    add_common(vehrhart);

    auto* laplace = app.add_subcommand("laplace", "Laplace-transform identities");
    laplace->require_subcommand(1);
    auto* series = laplace->add_subcommand("series", "total-derivative series");
    series->add_option("--genus", cmd.genus)->required()->check(CLI::NonNegativeNumber);
    series->add_option("--boundaries", cmd.boundaries)->required()->check(CLI::PositiveNumber);
    series->add_option("--order", cmd.order)->required()->check(CLI::PositiveNumber);
    series->add_flag("--compare-form", cmd.compare_form, "diff against the printed closed form");
    add_common(series);

    auto* verify = app.add_subcommand("verify", "run the full cross-check suite");
    verify->add_option("--artifact-dir", cmd.artifact_dir);
    add_common(verify);

    std::vector<const char*> cargs;
    cargs.push_back("modcount");
    for (const auto& a : argv) cargs.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp& e) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    for (CLI::App* sub : app.get_subcommands()) {
        cmd.verb = sub->get_name();
        auto nested = sub->get_subcommands();
        if (!nested.empty()) cmd.subverb = nested.front()->get_name();
    }
    if (!matrix_text.empty()) cmd.matrix = parse_matrix(matrix_text);
    if (table_bounds.size() == 2) {
        cmd.hz_nmax = table_bounds[0];
        cmd.hz_kmax = table_bounds[1];
    } else if (!table_bounds.empty()) {
        throw UsageError("--table expects NMAX,KMAX");
    }
    return cmd;
}

int run_command(const Command& cmd, std::ostream& out) {
#ifdef _OPENMP
    if (cmd.jobs > 0) omp_set_num_threads(cmd.jobs);
#endif
    std::string cache = cmd.cache_dir;
    if (const char* env = std::getenv("MODCOUNT_CACHE")) cache = env;
    if (!cache.empty()) set_cache_directory(cache);

    const int g = cmd.genus, n = cmd.boundaries;

    if (cmd.verb == "fatgraphs") {
        if (!cmd.graph_text.empty()) {
            Fatgraph graph = fatgraph_from_text(cmd.graph_text);
            auto [genus, boundaries] = boundary_profile(graph);
            if (cmd.format == "json") {
                nlohmann::json j;
                j["genus"] = genus;
                j["aut_order"] = automorphism_order(graph);
                j["boundaries"] = nlohmann::json::array();
                for (const auto& b : boundaries)
                    j["boundaries"].push_back({{"label", b.label}, {"length", b.length_half_edges}});
                j["incidence"] = incidence_matrix(graph);
                out << j.dump(2) << "\n";
            } else {
                out << "genus " << genus << ", aut order " << automorphism_order(graph) << "\n";
                for (const auto& b : boundaries)
                    out << "boundary " << b.label << ": length " << b.length_half_edges << "\n";
                for (const auto& row : incidence_matrix(graph)) {
                    for (size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
                    out << "\n";
                }
            }
            return 0;
        }
        if (g < 0 || n < 0) throw UsageError("fatgraphs needs --genus and --boundaries (or --graph)");
        const FatgraphCatalog& catalog = cached_catalog(g, n);
        if (cmd.format == "json") {
            out << to_json(catalog).dump(2) << "\n";
        } else {
            out << catalog.entries.size() << " labeled classes ("
                << catalog.unlabeled_classes << " unlabeled)\n";
            std::map<int, long> by_edges;
            for (const auto& e : catalog.entries) ++by_edges[e.graph.edge_count()];
            for (const auto& [edges, num] : by_edges)
                out << "  E=" << edges << ": " << num << "\n";
        }
        return 0;
    }

    if (cmd.verb == "count") {
        const int nn = static_cast<int>(cmd.lengths.size());
        std::string method = cmd.method.empty() ? "recursion" : cmd.method;
        Rational value;
        if (method == "recursion") value = lattice_count_recursive(g, nn, cmd.lengths);
        else if (method == "direct") value = lattice_count_direct(g, nn, cmd.lengths);
        else if (method == "belyi") value = belyi_count(g, cmd.lengths, true);
        else {
            if (nn != 1) throw UsageError("--method hz needs a single length");
            value = lattice_count_g1_hz(g, cmd.lengths[0]);
        }
        out << value.to_string() << "\n";
        return 0;
    }

    if (cmd.verb == "poly") {
        const QuasiPolynomial& qp = lattice_count_quasipolynomial(g, n);
        if (cmd.format == "json") {
            out << to_json(qp).dump(2) << "\n";
        } else {
            for (const auto& [parity, poly] : qp.classes()) {
                out << "parity (";
                for (size_t i = 0; i < parity.size(); ++i) out << (i ? "," : "") << parity[i];
                out << "): " << poly.to_string() << "\n";
            }
        }
        return 0;
    }

    if (cmd.verb == "euler") {
        EulerMethod method = cmd.method == "zeta" ? EulerMethod::Zeta : EulerMethod::Lattice;
        out << euler_characteristic(g, n, method).to_string() << "\n";
        return 0;
    }

    if (cmd.verb == "volume") {
        print_polynomial(out, kontsevich_volume(g, n), cmd.format);
        return 0;
    }

    if (cmd.verb == "intersections") {
        auto numbers = intersection_numbers(g, n);
        if (cmd.format == "json") {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& [d, value] : numbers)
                j.push_back({{"d", d}, {"value", value.to_string()}});
            out << j.dump(2) << "\n";
        } else {
            for (const auto& [d, value] : numbers) {
                out << "<";
                for (size_t i = 0; i < d.size(); ++i) out << (i ? " " : "") << "tau_" << d[i];
                out << "> = " << value.to_string() << "\n";
            }
        }
        return 0;
    }

    if (cmd.verb == "dilaton") {
        if (static_cast<int>(cmd.lengths.size()) != n)
            throw UsageError("dilaton needs --lengths with --boundaries entries");
        auto [lhs, rhs] = dilaton_check(g, n, cmd.lengths);
        if (cmd.format == "json") {
            out << nlohmann::json{{"lhs", lhs.to_string()},
                                  {"rhs", rhs.to_string()},
                                  {"equal", lhs == rhs}}
                       .dump(2)
                << "\n";
        } else {
            out << "lhs " << lhs.to_string() << ", rhs " << rhs.to_string() << ", "
                << (lhs == rhs ? "equal" : "DIFFER") << "\n";
        }
        return 0;
    }

    if (cmd.verb == "hz") {
        if (cmd.hz_nmax >= 0) {
            HZTable table = hz_c_table(cmd.hz_nmax, cmd.hz_kmax);
            for (int i = 0; i <= table.nmax; ++i) {
                for (int k = 0; k <= table.kmax; ++k) out << (k ? " " : "") << table.c[i][k].str();
                out << "\n";
            }
            return 0;
        }
        if (g >= 1 && cmd.hz_length > 0) {
            out << lattice_count_g1_hz(g, cmd.hz_length).to_string() << "\n";
            return 0;
        }
        throw UsageError("hz needs --table NMAX,KMAX or --genus G --length B");
    }

    if (cmd.verb == "hurwitz") {
        Rational value;
        if (cmd.subverb == "simple") value = simple_hurwitz(g, partition_from(cmd.mu));
        else if (cmd.subverb == "belyi") value = belyi_count(g, cmd.lengths, !cmd.allow_units);
        else if (cmd.subverb == "trace") value = class_trace(branch_data_from(cmd.degree, cmd.classes));
        else value = elsv_hurwitz(g, partition_from(cmd.mu));
        out << value.to_string() << "\n";
        return 0;
    }

    if (cmd.verb == "vpf") {
        ConstraintSystem sys{cmd.matrix};
        if (cmd.subverb == "count") {
            out << count_lattice_points(sys, cmd.b, cmd.strict).str() << "\n";
        } else if (cmd.subverb == "index") {
            out << lattice_index(sys).str() << "\n";
        } else if (cmd.subverb == "volume") {
            out << polytope_volume(sys, cmd.b).to_string() << "\n";
        } else if (cmd.subverb == "laplace") {
            print_series(out, expand_laplace_form(vpf_laplace_form(sys), cmd.order), cmd.format);
        } else {
            Polynomial p = ehrhart_polynomial(sys, cmd.b0, cmd.dilation_steps, true);
            print_polynomial(out, p, cmd.format);
        }
        return 0;
    }

    if (cmd.verb == "laplace") {
        if (cmd.compare_form) {
            SeriesDiff diff = compare_omega_series(g, n, cmd.order);
            out << to_json(diff).dump(2) << "\n";
            return 0;
        }
        print_series(out, discrete_omega_series(g, n, cmd.order), cmd.format);
        return 0;
    }

    if (cmd.verb == "verify") {
        VerifyOptions options;
        options.artifact_dir = cmd.artifact_dir;
        VerifyReport report = run_verification(options);
        for (const auto& r : report.results) {
            out << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  ("
                << static_cast<long>(r.seconds * 10) / 10.0 << "s)  " << r.detail << "\n";
        }
        out << (report.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
        return report.all_pass() ? 0 : 1;
    }

    throw UsageError("unknown verb '" + cmd.verb + "'");
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        Command cmd = parse_command(args);
        return run_command(cmd, std::cout);
    } catch (const HelpRequested& help) {
        std::cout << help.text;
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const FrontierError& e) {
        std::cerr << "frontier: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace modcount
