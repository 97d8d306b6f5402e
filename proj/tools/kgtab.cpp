#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kgtab/errors.hpp"
#include "kgtab/tableau.hpp"
#include "kgtab/translate.hpp"

using namespace kgtab;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kError = 2, kLimit = 3 };

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError(path, "cannot write file");
    out << bytes;
}

std::size_t default_max_branches() {
    if (const char* env = std::getenv("KGTAB_MAX_BRANCHES")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw FormatError("KGTAB_MAX_BRANCHES", "expected a positive integer, got '" + std::string(env) + "'");
        }
    }
    return 100000;
}

json value_json(const ValuePair& v) { return {{"pos", to_string(v.pos)}, {"negv", to_string(v.negv)}}; }

struct ProveArgs {
    std::string formula;
    std::string logic = "kginv";
    std::size_t max_branches = 0;
    std::string trace;
    std::string out = "countermodel.json";
    bool json = false;
    bool nonstrict = false;
};

int cmd_prove(const ProveArgs& a) {
    Logic logic = parse_logic(a.logic);
    Formula f = parse(a.formula);
    check_language(f, logic);
    SearchOptions opts;
    opts.max_expansions = a.max_branches ? a.max_branches : default_max_branches();
    opts.root = a.nonstrict ? RootEncoding::NonStrict : RootEncoding::Strict;

    auto start = std::chrono::steady_clock::now();
    json report = {{"formula", print(f)}, {"logic", std::string(logic_name(logic))}};
    ProveResult pr;
    try {
        pr = prove(f, logic, opts);
    } catch (const ResourceLimit& e) {
        report["status"] = "LIMIT";
        report["reason"] = e.what();
        if (a.json) std::cout << report.dump(2) << "\n";
        else std::cout << "LIMIT: " << e.what() << "\n";
        return kLimit;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (!a.trace.empty()) {
        std::string text;
        for (const auto& t : pr.tableaux) text += format_trace(t);
        write_file(a.trace, text);
        report["trace"] = a.trace;
    }
    json stats = json::array();
    for (const auto& t : pr.tableaux)
        stats.push_back({{"tableau", t.tableau},
                         {"closed", t.closed},
                         {"expansions", t.stats.expansions},
                         {"closed_branches", t.stats.closed_branches},
                         {"open_branches", t.stats.open_branches},
                         {"max_world_depth", t.stats.max_world_depth}});
    report["tableaux"] = stats;
    report["time_ms"] = ms;
    report["status"] = pr.valid ? "VALID" : "INVALID";

    if (!pr.valid) {
        const CountermodelReport& cm = pr.tableaux.back().open->report;
        json doc = json::parse(save_model(cm.model));
        doc["root"] = cm.root;
        doc["achieved"] = value_json(cm.achieved);
        doc["tableau"] = cm.tableau;
        write_file(a.out, doc.dump(2) + "\n");
        report["countermodel"] = a.out;
        report["root"] = cm.root;
        report["achieved"] = value_json(cm.achieved);
    }

    if (a.json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << (pr.valid ? "VALID" : "INVALID") << "\n";
        for (const auto& t : pr.tableaux)
            std::cout << "tableau " << t.tableau << ": " << (t.closed ? "closed" : "open")
                      << ", expansions " << t.stats.expansions << ", closed branches " << t.stats.closed_branches
                      << "\n";
        if (!pr.valid) {
            const auto& cm = pr.tableaux.back().open->report;
            std::cout << "countermodel written to " << a.out << "\n"
                      << "value at " << cm.root << ": pos " << to_string(cm.achieved.pos) << ", negv "
                      << to_string(cm.achieved.negv) << "\n";
        }
    }
    return pr.valid ? kOk : kNegative;
}

struct EvalArgs {
    std::string model;
    std::string formula;
    std::string world = "w";
    std::string logic = "kgbl";
    bool fmodel = false;
    bool all = false;
    bool json = false;
};

int cmd_eval(const EvalArgs& a) {
    Logic logic = parse_logic(a.logic);
    bool has_t = false;
    FModel m = load_model(read_file(a.model), &has_t);
    Formula f = parse(a.formula);
    check_language(f, logic);

    std::vector<std::pair<std::string, ValuePair>> rows;
    if (a.all) {
        auto vals = a.fmodel ? eval_fmodel_all(m, f, logic) : eval_standard_all(m.base, f, logic);
        for (std::size_t w = 0; w < vals.size(); ++w) rows.emplace_back(m.base.worlds()[w], vals[w]);
    } else {
        rows.emplace_back(a.world, a.fmodel ? eval_fmodel(m, f, a.world, logic) : eval_standard(m.base, f, a.world, logic));
    }

    if (a.json) {
        json out = json::array();
        for (const auto& [w, v] : rows) {
            json row = value_json(v);
            row["world"] = w;
            out.push_back(row);
        }
        std::cout << (a.all ? out : out[0]).dump(2) << "\n";
    } else if (a.all) {
        for (const auto& [w, v] : rows)
            std::cout << w << ": pos " << to_string(v.pos) << ", negv " << to_string(v.negv) << "\n";
    } else {
        std::cout << "pos " << to_string(rows[0].second.pos) << "\nnegv " << to_string(rows[0].second.negv) << "\n";
    }
    return kOk;
}

int cmd_translate(const std::string& text, const std::string& dir) {
    Formula f = parse(text);
    Formula out;
    if (dir == "oplus") out = oplus(f);
    else if (dir == "ominus") out = ominus(f);
    else if (dir == "join") out = join(f);
    else if (dir == "embed-bl") out = embed_inv_to_bl(f);
    else out = embed_bl_to_inv(f);
    std::cout << print(out) << "\n";
    return kOk;
}

int cmd_solve(const std::string& path, bool explain, bool as_json) {
    LinearSystem sys = translate_branch(parse_constraints(read_file(path)));
    SolveResult r = solve(sys);
    if (as_json) {
        json out = {{"status", r.sat ? "SAT" : "UNSAT"}, {"splits", r.splits}};
        if (r.sat) {
            json wit = json::object();
            for (std::size_t v = 0; v < sys.variables.size(); ++v) wit[sys.variables[v]] = to_string(r.witness.values[v]);
            out["witness"] = wit;
        }
        if (explain) out["system"] = dump_system(sys);
        std::cout << out.dump(2) << "\n";
    } else {
        if (explain) std::cout << dump_system(sys) << "\n";
        std::cout << (r.sat ? "SAT" : "UNSAT") << "\n";
        if (r.sat)
            for (std::size_t v = 0; v < sys.variables.size(); ++v)
                std::cout << sys.variables[v] << " = " << to_string(r.witness.values[v]) << "\n";
    }
    return r.sat ? kOk : kNegative;
}

int cmd_parse(const std::string& text, const std::string& logic_text, bool as_json) {
    Formula f = parse(text);
    json out = {{"formula", print(f)}, {"size", size(f)}, {"modal_depth", modal_depth(f)}};
    if (!logic_text.empty()) {
        Logic logic = parse_logic(logic_text);
        out["core"] = print(desugar(f, logic));
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << print(f) << "\nsize " << size(f) << "\nmodal depth " << modal_depth(f) << "\n";
        if (out.contains("core")) std::cout << "core " << out["core"].get<std::string>() << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tableau prover and model evaluator for Goedel modal logics with involution and bi-lattice connectives"};
    app.require_subcommand(1);
    const std::vector<std::string> logics = {"kginv", "kginv2", "kgbl"};

    ProveArgs pa;
    auto* prove_cmd = app.add_subcommand("prove", "decide validity; writes a countermodel when the formula is invalid");
    prove_cmd->add_option("formula", pa.formula)->required();
    prove_cmd->add_option("--logic", pa.logic)->check(CLI::IsMember(logics));
    prove_cmd->add_option("--max-branches", pa.max_branches,
                          "rule application bound (default: $KGTAB_MAX_BRANCHES or 100000)");
    prove_cmd->add_option("--trace", pa.trace, "write the proof trace to this file");
    prove_cmd->add_option("--out", pa.out, "countermodel file")->capture_default_str();
    prove_cmd->add_flag("--nonstrict-root", pa.nonstrict, "start from w:1:phi <= c instead of <");
    prove_cmd->add_flag("--json", pa.json);

    EvalArgs ea;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula in a model file");
    eval_cmd->add_option("formula", ea.formula)->required();
    eval_cmd->add_option("--model", ea.model)->required();
    eval_cmd->add_option("--world", ea.world)->capture_default_str();
    eval_cmd->add_option("--logic", ea.logic)->check(CLI::IsMember(logics))->capture_default_str();
    eval_cmd->add_flag("--fmodel", ea.fmodel, "snap modal values into the T sets of the file");
    eval_cmd->add_flag("--all", ea.all, "report every world");
    eval_cmd->add_flag("--json", ea.json);

    std::string tr_formula, tr_dir;
    auto* tr_cmd = app.add_subcommand("translate", "apply a translation between the logics");
    tr_cmd->add_option("formula", tr_formula)->required();
    tr_cmd->add_option("--dir", tr_dir)
        ->required()
        ->check(CLI::IsMember({"oplus", "ominus", "join", "embed-bl", "embed-inv"}));

    std::string constraints_path;
    bool explain = false, solve_json = false;
    auto* solve_cmd = app.add_subcommand("solve", "check a constraint file for satisfiability");
    solve_cmd->add_option("--constraints", constraints_path)->required();
    solve_cmd->add_flag("--explain", explain, "print the order system before the verdict");
    solve_cmd->add_flag("--json", solve_json);

    std::string parse_formula, parse_logic_text;
    bool parse_json = false;
    auto* parse_cmd = app.add_subcommand("parse", "pretty-print a formula");
    parse_cmd->add_option("formula", parse_formula)->required();
    parse_cmd->add_option("--logic", parse_logic_text, "also print the desugared core formula")
        ->check(CLI::IsMember(logics));
    parse_cmd->add_flag("--json", parse_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kError;
    }

    try {
        if (*prove_cmd) return cmd_prove(pa);
        if (*eval_cmd) return cmd_eval(ea);
        if (*tr_cmd) return cmd_translate(tr_formula, tr_dir);
        if (*solve_cmd) return cmd_solve(constraints_path, explain, solve_json);
        if (*parse_cmd) return cmd_parse(parse_formula, parse_logic_text, parse_json);
    } catch (const ResourceLimit& e) {
        std::cerr << "limit: " << e.what() << "\n";
        return kLimit;
    } catch (const VerificationFailure& e) {
        std::cerr << "internal error, countermodel failed verification: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
