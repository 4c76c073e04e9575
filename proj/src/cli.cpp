#include "brcalc/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "brcalc/parse.hpp"
#include "brcalc/report.hpp"
#include "brcalc/search.hpp"
#include "brcalc/version.hpp"

namespace brcalc {

namespace {

nlohmann::json jobspec_json(const JobSpec& js) {
    nlohmann::json j{
        {"command", js.command},
        {"dim", js.dim},
        {"relations", js.relations},
        {"ideals", js.ideals},
        {"ideal", js.ideal},
        {"module", js.module},
        {"matrix_N", js.matrix_n},
        {"matrix_M", js.matrix_m},
        {"identity", js.identity},
        {"route", js.route},
        {"a", js.elem_a},
        {"b", js.elem_b},
        {"I", js.ideal_i},
        {"J", js.ideal_j},
        {"n_max", js.n_max},
        {"s_max", js.s_max},
        {"c_max", js.c_max},
        {"fit_n_max", js.fit_n_max},
        {"trials", js.trials},
        {"rank", js.rank},
        {"profile",
         {{"min_gens", js.min_gens},
          {"max_gens", js.max_gens},
          {"min_deg", js.min_deg},
          {"max_deg", js.max_deg},
          {"equal_ideals", js.equal_ideals},
          {"parameter", js.parameter}}},
        {"verify_reductions", js.verify_reductions},
        {"field", js.field},
        {"format", js.format},
        {"out", js.out_path},
    };
    if (js.seed)
        j["seed"] = *js.seed;
    else
        j["seed"] = nullptr;
    return j;
}

// Inline text, @file, or a plain path to an existing file.
std::string expand_arg(const std::string& arg) {
    std::string path;
    if (!arg.empty() && arg[0] == '@')
        path = arg.substr(1);
    else if (std::filesystem::exists(arg))
        path = arg;
    else
        return arg;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RingPtr ring_from(const JobSpec& js) {
    std::vector<Monomial> rels;
    if (!js.relations.empty()) {
        RingPtr plain = make_ring(js.dim);
        rels = parse_ideal(js.relations, plain).gens();
    }
    return make_ring(js.dim, std::move(rels));
}

FieldKind field_from(const JobSpec& js) {
    if (js.field == "fp" || js.field == "fp32003") return FieldKind::fp32003;
    if (js.field == "rat" || js.field == "rationals") return FieldKind::rationals;
    throw std::runtime_error("unknown field '" + js.field + "' (use rat or fp)");
}

FitOptions fit_from(const JobSpec& js) {
    FitOptions f;
    f.n_max = js.fit_n_max;
    return f;
}

ReesOptions rees_from(const JobSpec& js) {
    ReesOptions r;
    r.field = field_from(js);
    r.c_max = js.c_max;
    return r;
}

GeneratorMatrix module_matrix(const JobSpec& js, const RingPtr& ring) {
    if (!js.matrix_m.empty()) return parse_matrix(expand_arg(js.matrix_m), ring);
    if (!js.module.empty()) return direct_sum_matrix(parse_tuple(js.module, ring));
    throw std::runtime_error("need --module or --matrix-M");
}

struct CommandOutput {
    nlohmann::json result;
    std::string table;
    int exit_code = 0;
};

CommandOutput run_hs(const JobSpec& js) {
    RingPtr ring = ring_from(js);
    MonomialIdeal I = parse_ideal(js.ideal.empty() ? js.ideals : js.ideal, ring);
    auto [poly, diag] = hs_polynomial(I, fit_from(js));
    CommandOutput out;
    out.result = {{"ring", to_json(*ring)},
                  {"ideal", to_string(I)},
                  {"colength", colength(I).str()},
                  {"hs", to_json(poly)},
                  {"diagnostics", to_json(diag)}};
    std::ostringstream t;
    t << "ideal: " << to_string(I) << "\n";
    t << "l(R/I) = " << colength(I).str() << "\n";
    t << "P_I(n) = " << binomial_string(poly) << "\n";
    t << "e = [";
    for (int i = 0; i <= poly.degree(); ++i) t << (i ? ", " : "") << poly.coeff(i).str();
    t << "]\n";
    t << "fit: window [" << diag.window_start << ".." << diag.window_start + diag.window_len - 1
      << "], verified through n = " << diag.verified_through << "\n";
    out.table = t.str();
    return out;
}

CommandOutput run_bhatt(const JobSpec& js) {
    RingPtr ring = ring_from(js);
    IdealTuple T = parse_tuple(js.ideals, ring);
    auto [poly, diag] = bhatt_polynomial(T, fit_from(js));
    CommandOutput out;
    nlohmann::json es = nlohmann::json::array();
    for (int i = 0; i <= poly.maxdeg; ++i) es.push_back(mixed_E(poly, i).str());
    out.result = {{"ring", to_json(*ring)},
                  {"tuple", to_string(T)},
                  {"bhatt", to_json(poly)},
                  {"E", es},
                  {"diagnostics", to_json(diag)}};
    std::ostringstream t;
    t << "tuple: " << to_string(T) << "\n";
    for (const auto& [alpha, e] : poly.coeffs) {
        t << "e_(";
        for (size_t i = 0; i < alpha.size(); ++i) t << (i ? "," : "") << alpha[i];
        t << ") = " << e.str() << "\n";
    }
    for (int i = 0; i <= poly.maxdeg; ++i) t << "E_" << i << " = " << mixed_E(poly, i).str() << "\n";
    out.table = t.str();
    return out;
}

CommandOutput run_bf(const JobSpec& js) {
    RingPtr ring = ring_from(js);
    CommandOutput out;
    nlohmann::json values = nlohmann::json::array();
    std::ostringstream t;
    if (js.route == "general" || js.route == "both") {
        GeneratorMatrix M = js.ideals.empty() ? module_matrix(js, ring)
                                              : direct_sum_matrix(parse_tuple(js.ideals, ring));
        std::optional<IdealTuple> T;
        if (!js.ideals.empty()) T = parse_tuple(js.ideals, ring);
        for (long n = 0; n <= js.n_max; ++n) {
            Int general = bf_general(M, n, rees_from(js));
            if (js.route == "both") {
                if (!T) throw std::runtime_error("--route both needs --ideals");
                Int lattice = bf_direct_sum(*T, n);
                if (lattice != general)
                    throw std::logic_error("bf: lattice and linear-algebra routes disagree at n = " +
                                           std::to_string(n));
            }
            values.push_back(general.str());
            t << "BF(" << n << ") = " << general.str() << "\n";
        }
    } else {
        IdealTuple T = parse_tuple(js.ideals, ring);
        for (long n = 0; n <= js.n_max; ++n) {
            Int v = bf_direct_sum(T, n);
            values.push_back(v.str());
            t << "BF(" << n << ") = " << v.str() << "\n";
        }
    }
    out.result = {{"ring", to_json(*ring)}, {"route", js.route}, {"values", values}};
    out.table = t.str();
    return out;
}

CommandOutput run_northcott(const JobSpec& js) {
    RingPtr ring = ring_from(js);
    IdealTuple T = parse_tuple(js.ideals, ring);
    std::optional<GeneratorMatrix> N;
    if (!js.matrix_n.empty()) N = parse_matrix(expand_arg(js.matrix_n), ring);
    NorthcottOptions opts;
    opts.fit = fit_from(js);
    opts.s_max = js.s_max;
    opts.c_max = js.c_max;
    opts.field = field_from(js);
    NorthcottReport report = northcott_report(T, N, opts);
    CommandOutput out;
    out.result = to_json(report);
    out.result["ring"] = to_json(*ring);
    out.result["tuple"] = to_string(T);
    std::ostringstream t;
    t << "tuple: " << to_string(T) << "\n";
    t << "d = " << report.d << ", r = " << report.r << "\n";
    t << "l(F/M) = " << report.colength_FM.str() << "\n";
    t << "BP(n) = " << binomial_string(report.br) << "\n";
    t << "br0 = " << report.br0().str() << ", br1 = " << report.br1().str()
      << ", br0 - br1 = " << (report.br0() - report.br1()).str() << "\n";
    t << "slack = " << report.slack.str() << "\n";
    t << "inequality br0 - br1 <= l(F/M): " << (report.inequality_holds ? "holds" : "VIOLATED")
      << (report.equality ? " (equality)" : "") << "\n";
    if (report.reduction_evidence) {
        t << "reduction evidence: ";
        if (report.reduction_evidence->reduction_number)
            t << "red_N(M) = " << *report.reduction_evidence->reduction_number;
        else
            t << "not a reduction within s_max";
        t << " (s_max " << report.reduction_evidence->s_max << ")\n";
    }
    for (const std::string& w : report.warnings) t << "warning: " << w << "\n";
    out.table = t.str();
    return out;
}

CommandOutput run_reduction(const JobSpec& js) {
    RingPtr ring = ring_from(js);
    GeneratorMatrix M = module_matrix(js, ring);
    if (js.matrix_n.empty()) throw std::runtime_error("need --matrix-N");
    GeneratorMatrix N = parse_matrix(expand_arg(js.matrix_n), ring);
    auto rn = reduction_number(N, M, js.s_max, rees_from(js));
    CommandOutput out;
    out.result = {{"ring", to_json(*ring)},
                  {"matrix_N", to_string(N)},
                  {"matrix_M", to_string(M)},
                  {"s_max", js.s_max}};
    std::ostringstream t;
    if (rn) {
        out.result["reduction_number"] = *rn;
        t << "red_N(M) = " << *rn << "\n";
    } else {
        out.result["reduction_number"] = nullptr;
        t << "N is not a reduction of M within s_max = " << js.s_max << "\n";
    }
    out.table = t.str();
    return out;
}

CommandOutput run_sally(const JobSpec& js) {
    RingPtr ring = ring_from(js);
    GeneratorMatrix M = module_matrix(js, ring);
    if (js.matrix_n.empty()) throw std::runtime_error("need --matrix-N");
    GeneratorMatrix N = parse_matrix(expand_arg(js.matrix_n), ring);
    SallyTable table = sally_table(M, N, js.n_max, rees_from(js));
    CommandOutput out;
    out.result = {{"ring", to_json(*ring)},
                  {"matrix_N", to_string(N)},
                  {"matrix_M", to_string(M)},
                  {"sally", to_json(table)}};
    std::ostringstream t;
    for (size_t n = 0; n < table.values.size(); ++n)
        t << "l(S_" << n << ") = " << table.values[n].str() << "\n";
    t << (table.all_zero() ? "S = 0 on the tested range (red_N(M) <= 1 there)\n"
                           : "S is nonzero (red_N(M) >= 2)\n");
    out.table = t.str();
    return out;
}

CommandOutput run_verify(const JobSpec& js) {
    RingPtr ring = ring_from(js);
    CommandOutput out;
    std::ostringstream t;
    if (js.identity == "sally") {
        IdealTuple T = parse_tuple(js.module.empty() ? js.ideals : js.module, ring);
        if (js.matrix_n.empty()) throw std::runtime_error("need --matrix-N");
        GeneratorMatrix N = parse_matrix(expand_arg(js.matrix_n), ring);
        nlohmann::json rows = nlohmann::json::array();
        bool all = true;
        for (long n = 0; n <= js.n_max; ++n) {
            SallyIdentity id = verify_sally_identity(T, N, n, rees_from(js), fit_from(js));
            rows.push_back({{"n", n}, {"lhs", id.lhs.str()}, {"rhs", id.rhs.str()}, {"equal", id.equal}});
            t << "n = " << n << ": BF = " << id.lhs.str() << ", rhs = " << id.rhs.str()
              << (id.equal ? " (equal)" : " (MISMATCH)") << "\n";
            all = all && id.equal;
        }
        out.result = {{"identity", "sally"}, {"rows", rows}, {"all_equal", all}};
        t << (all ? "identity holds on the range\n" : "identity FAILED\n");
        if (!all) out.exit_code = 1;
    } else if (js.identity == "rn1") {
        GeneratorMatrix M = module_matrix(js, ring);
        if (js.matrix_n.empty()) throw std::runtime_error("need --matrix-N");
        GeneratorMatrix N = parse_matrix(expand_arg(js.matrix_n), ring);
        nlohmann::json rows = nlohmann::json::array();
        bool all = true;
        for (long n = 0; n <= js.n_max; ++n) {
            bool ok = verify_rn1_formula(M, N, n, rees_from(js));
            rows.push_back({{"n", n}, {"holds", ok}});
            t << "n = " << n << ": " << (ok ? "holds" : "FAILS") << "\n";
            all = all && ok;
        }
        out.result = {{"identity", "rn1"}, {"rows", rows}, {"all_hold", all}};
        if (!all) out.exit_code = 1;
    } else if (js.identity == "jointred") {
        MonomialIdeal I = parse_ideal(js.ideal_i, ring);
        MonomialIdeal J = parse_ideal(js.ideal_j, ring);
        Poly a = parse_poly(js.elem_a, ring);
        Poly b = parse_poly(js.elem_b, ring);
        bool ok = verify_joint_reduction(a, b, I, J, rees_from(js));
        out.result = {{"identity", "jointred"}, {"holds", ok}};
        t << "aJ + bI " << (ok ? "=" : "!=") << " IJ\n";
    } else {
        throw std::runtime_error("unknown identity '" + js.identity +
                                 "' (use sally, rn1 or jointred)");
    }
    out.table = t.str();
    return out;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

CommandOutput run_search(const JobSpec& js) {
    SearchOptions opts;
    opts.dim = js.dim;
    if (!js.relations.empty()) {
        RingPtr plain = make_ring(js.dim);
        opts.relations = parse_ideal(js.relations, plain).gens();
    }
    opts.rank = js.rank;
    opts.trials = js.trials;
    opts.seed = js.seed.value_or(0);
    opts.profile.min_gens = js.min_gens;
    opts.profile.max_gens = js.max_gens;
    opts.profile.min_deg = js.min_deg;
    opts.profile.max_deg = js.max_deg;
    opts.profile.equal_ideals = js.equal_ideals;
    opts.profile.parameter = js.parameter;
    opts.verify_reductions = js.verify_reductions;
    opts.fit = fit_from(js);
    opts.rees = rees_from(js);
    std::vector<SearchRecord> records = search(opts);

    CommandOutput out;
    nlohmann::json rows = nlohmann::json::array();
    long violations = 0, equalities = 0, errors = 0;
    std::ostringstream t;
    std::ostringstream csv;
    csv << "trial,trial_seed,d,r,br0,br1,colength_FM,slack,flag,reduction_le1,tuple,error\n";
    for (const SearchRecord& rec : records) {
        nlohmann::json row{{"trial", rec.trial}, {"trial_seed", rec.trial_seed},
                           {"tuple", rec.tuple}, {"d", rec.d},   {"r", rec.r},
                           {"flag", rec.flag}};
        if (rec.flag == "error") {
            row["error"] = rec.error;
            ++errors;
        } else {
            row["br0"] = rec.br0.str();
            row["br1"] = rec.br1.str();
            row["colength_FM"] = rec.colength_FM.str();
            row["slack"] = rec.slack.str();
            if (rec.flag == "violation") ++violations;
            if (rec.flag == "equality") ++equalities;
        }
        if (rec.reduction_le1) row["reduction_le1"] = *rec.reduction_le1;
        rows.push_back(row);
        csv << rec.trial << "," << rec.trial_seed << "," << rec.d << "," << rec.r << ","
            << rec.br0.str() << "," << rec.br1.str() << "," << rec.colength_FM.str() << ","
            << rec.slack.str() << "," << rec.flag << ","
            << (rec.reduction_le1 ? (*rec.reduction_le1 ? "true" : "false") : "") << ","
            << csv_quote(rec.tuple) << "," << csv_quote(rec.error) << "\n";
        if (rec.flag == "violation" || rec.flag == "equality" || rec.flag == "error") {
            t << "trial " << rec.trial << " [" << rec.flag << "] " << rec.tuple;
            if (rec.flag != "error")
                t << "  br0=" << rec.br0.str() << " br1=" << rec.br1.str()
                  << " l(F/M)=" << rec.colength_FM.str() << " slack=" << rec.slack.str();
            if (rec.reduction_le1) t << " red<=1: " << (*rec.reduction_le1 ? "yes" : "no");
            if (!rec.error.empty()) t << "  error: " << rec.error;
            t << "\n";
        }
    }
    t << records.size() << " trials: " << violations << " violations, " << equalities
      << " equalities, " << errors << " errors\n";
    out.result = {{"records", rows},
                  {"violations", violations},
                  {"equalities", equalities},
                  {"errors", errors}};
    out.table = (js.format == "csv") ? csv.str() : t.str();
    out.exit_code = violations > 0 ? 2 : 0;
    return out;
}

void add_common(CLI::App* cmd, JobSpec& js) {
    cmd->add_option("--dim", js.dim, "ambient dimension (number of variables)");
    cmd->add_option("--relations", js.relations, "monomial relations ideal of the ambient ring");
    cmd->add_option("--n-max", js.n_max, "largest n for tables/identities");
    cmd->add_option("--s-max", js.s_max, "reduction-number search bound");
    cmd->add_option("--c-max", js.c_max, "truncation cap for certified lengths");
    cmd->add_option("--fit-n-max", js.fit_n_max, "largest sample index for polynomial fitting");
    cmd->add_option("--field", js.field, "linear-algebra field: rat (exact) or fp (F_32003)");
    cmd->add_option("--format", js.format, "output format: table, json or csv");
    cmd->add_option("--out", js.out_path, "write the report document to a file");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    JobSpec js;
    CLI::App app{"Buchsbaum-Rim multiplicity toolkit"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    CLI::App* hs = app.add_subcommand("hs", "Hilbert-Samuel polynomial of an m-primary ideal");
    hs->add_option("--ideal", js.ideal, "generators, e.g. \"x^3,y^2\"");
    hs->add_option("--ideals", js.ideals, "alias for --ideal");
    add_common(hs, js);

    CLI::App* bh = app.add_subcommand("bhatt", "Bhattacharya polynomial and mixed multiplicities");
    bh->add_option("--ideals", js.ideals, "tuple, e.g. \"x,y | x^2,y\"")->required();
    add_common(bh, js);

    CLI::App* bf = app.add_subcommand("bf", "Buchsbaum-Rim function values");
    bf->add_option("--ideals", js.ideals, "direct-sum tuple");
    bf->add_option("--matrix-M", js.matrix_m, "matrix module (route general)");
    bf->add_option("--route", js.route, "lattice | general | both");
    add_common(bf, js);

    CLI::App* no = app.add_subcommand("northcott", "Northcott inequality report");
    no->add_option("--ideals", js.ideals, "direct-sum tuple")->required();
    no->add_option("--matrix-N", js.matrix_n, "optional reduction candidate for evidence");
    add_common(no, js);

    CLI::App* re = app.add_subcommand("reduction", "reduction number of N inside M");
    re->add_option("--module", js.module, "M as a direct-sum tuple");
    re->add_option("--matrix-M", js.matrix_m, "M as a matrix");
    re->add_option("--matrix-N", js.matrix_n, "N as a matrix")->required();
    add_common(re, js);

    CLI::App* sa = app.add_subcommand("sally", "Sally-module Hilbert function");
    sa->add_option("--module", js.module, "M as a direct-sum tuple");
    sa->add_option("--matrix-M", js.matrix_m, "M as a matrix");
    sa->add_option("--matrix-N", js.matrix_n, "reduction N as a matrix")->required();
    add_common(sa, js);

    CLI::App* ve = app.add_subcommand("verify", "check the length identities");
    ve->add_option("--identity", js.identity, "sally | rn1 | jointred")->required();
    ve->add_option("--module", js.module, "M as a direct-sum tuple");
    ve->add_option("--ideals", js.ideals, "alias for --module");
    ve->add_option("--matrix-M", js.matrix_m, "M as a matrix (rn1)");
    ve->add_option("--matrix-N", js.matrix_n, "N as a matrix");
    ve->add_option("--I", js.ideal_i, "jointred: first ideal");
    ve->add_option("--J", js.ideal_j, "jointred: second ideal");
    ve->add_option("--a", js.elem_a, "jointred: witness in I");
    ve->add_option("--b", js.elem_b, "jointred: witness in J");
    add_common(ve, js);

    CLI::App* se = app.add_subcommand("search", "seeded randomized Northcott exploration");
    se->add_option("--rank", js.rank, "number of ideals per tuple");
    se->add_option("--trials", js.trials, "number of tuples")->required();
    uint64_t seed_value = 0;
    CLI::Option* seed_opt = se->add_option("--seed", seed_value, "sweep seed");
    se->add_option("--min-gens", js.min_gens, "profile: min generator count");
    se->add_option("--max-gens", js.max_gens, "profile: max generator count");
    se->add_option("--min-deg", js.min_deg, "profile: min generator degree");
    se->add_option("--max-deg", js.max_deg, "profile: max generator degree");
    se->add_flag("--equal-ideals", js.equal_ideals, "one ideal repeated r times");
    se->add_flag("--parameter", js.parameter, "parameter (pure-power) ideals only");
    se->add_flag("--verify-reductions", js.verify_reductions,
                 "test red <= 1 via random minimal reductions");
    add_common(se, js);

    std::vector<std::string> argv(args);
    try {
        app.parse(argv.empty() ? std::vector<std::string>{"--help"} : argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    js.command = app.get_subcommands().front()->get_name();
    if (seed_opt->count()) js.seed = seed_value;

    try {
        CommandOutput result;
        if (js.command == "hs") result = run_hs(js);
        else if (js.command == "bhatt") result = run_bhatt(js);
        else if (js.command == "bf") result = run_bf(js);
        else if (js.command == "northcott") result = run_northcott(js);
        else if (js.command == "reduction") result = run_reduction(js);
        else if (js.command == "sally") result = run_sally(js);
        else if (js.command == "verify") result = run_verify(js);
        else if (js.command == "search") result = run_search(js);
        else throw std::runtime_error("unknown command");

        std::string document;
        if (js.format == "json") {
            nlohmann::json envelope{{"schema", kReportSchema},
                                    {"tool", {{"name", kToolName}, {"version", kToolVersion}}},
                                    {"jobspec", jobspec_json(js)},
                                    {"result", result.result}};
            document = envelope.dump(2) + "\n";
        } else {
            document = result.table;
        }
        if (!js.out_path.empty()) {
            std::ofstream f(js.out_path);
            if (!f) throw std::runtime_error("cannot write " + js.out_path);
            f << document;
            out << "wrote " << js.out_path << "\n";
        } else {
            out << document;
        }
        return result.exit_code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace brcalc
