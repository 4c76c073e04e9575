#ifndef BRCALC_CLI_HPP
#define BRCALC_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace brcalc {

/// A fully resolved command invocation; every report embeds it so runs are
/// reproducible from their own output.
struct JobSpec {
    std::string command;
    int dim = 2;
    std::string relations;
    std::string ideals;  // tuple text ('|'-separated)
    std::string ideal;   // single ideal (hs)
    std::string module;  // tuple generating M (reduction/sally/verify)
    std::string matrix_n;
    std::string matrix_m;
    std::string identity;      // verify: sally | rn1 | jointred
    std::string route = "lattice"; // bf: lattice | general | both
    std::string elem_a, elem_b;    // jointred witnesses
    std::string ideal_i, ideal_j;  // jointred ideals
    long n_max = 16;
    int s_max = 6;
    long c_max = 256;
    long fit_n_max = 24;
    std::optional<uint64_t> seed;
    long trials = 0;
    int rank = 2;
    int min_gens = 2, max_gens = 4, min_deg = 1, max_deg = 5;
    bool equal_ideals = false;
    bool parameter = false;
    bool verify_reductions = false;
    std::string field = "rat"; // rat | fp
    std::string format = "table"; // table | json | csv
    std::string out_path;
};

/// Exit codes: 0 success, 1 error, 2 a verified inequality violation was
/// found by `search`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace brcalc

#endif
