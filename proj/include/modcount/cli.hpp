/**
 * @file cli.hpp
 * @brief Command-line front end: parsing argv into a validated Command and
 *        dispatching it. Split from main() so the parser and renderer are
 *        unit-testable.
 *
 * Exit codes: 0 success, 1 usage error, 2 frontier exceeded / unsupported
 * size. The environment variable MODCOUNT_CACHE overrides --cache-dir.
 */
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace modcount {

struct Command {
    std::string verb;    // fatgraphs|count|poly|euler|volume|intersections|dilaton|hz|hurwitz|vpf|laplace|verify
    std::string subverb; // hurwitz: simple|belyi|trace|elsv ; vpf: count|index|volume|laplace|ehrhart ; laplace: series

    int genus = -1;
    int boundaries = -1;
    std::vector<long long> lengths;
    std::string method; // count: direct|recursion|belyi|hz ; euler: lattice|zeta

    std::vector<std::vector<long long>> matrix;
    std::vector<long long> b;
    std::vector<long long> b0;
    int dilation_steps = 0; // vpf ehrhart --T
    bool strict = true;

    std::vector<int> mu;
    int degree = 0;
    std::string classes; // "4;2,2;4"
    bool allow_units = false;

    int order = 0;
    bool compare_form = false;

    long long hz_length = 0;
    int hz_nmax = -1, hz_kmax = -1;

    std::string format = "table"; // table|json
    std::string cache_dir;
    std::string artifact_dir = "verify_artifacts";
    int jobs = 0;
    std::string graph_text; // fatgraphs --graph
};

class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// --help is not an error; carries the rendered help text.
struct HelpRequested {
    std::string text;
};

// Throws UsageError on unknown verbs, missing or malformed flags.
Command parse_command(const std::vector<std::string>& argv);

// Dispatches; writes rendered output to `out`. Returns the exit code.
int run_command(const Command& cmd, std::ostream& out);

// parse + run + error rendering; the whole body of main().
int cli_main(int argc, char** argv);

} // namespace modcount
