#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "spmech/audit.hpp"
#include "spmech/catalog.hpp"
#include "spmech/io.hpp"
#include "spmech/menus.hpp"
#include "spmech/prices.hpp"
#include "spmech/repro.hpp"
#include "spmech/stochastic.hpp"
#include "spmech/voting.hpp"

namespace {

using namespace spmech;
using io::Json;

constexpr int kExitPass = 0;
constexpr int kExitPropertyFailure = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInput = 4;

void print_report_line(const AuditReport& report) {
    std::cout << (report.pass ? "pass" : "FAIL") << "  " << report.property;
    if (!report.note.empty()) std::cout << "  [" << report.note << "]";
    if (!report.pass && report.counterexample) {
        std::cout << "  {";
        bool first = true;
        for (const auto& [key, value] : report.counterexample->fields) {
            if (!first) std::cout << ", ";
            first = false;
            std::cout << key << "=" << value;
        }
        std::cout << "}";
    }
    std::cout << "\n";
}

int run_audit(const std::string& rule_path, const std::string& checks_csv, const std::string& out_path,
              int workers) {
    const RuleSpec spec = io::load_rule(rule_path);
    const audit::Audited audited = audit::Audited::build(spec, workers);

    std::vector<std::string> checks;
    std::stringstream ss(checks_csv);
    std::string token;
    while (std::getline(ss, token, ',')) checks.push_back(token);

    std::vector<AuditReport> reports;
    for (const std::string& check : checks) {
        if (check == "sp") reports.push_back(audit::check_strategy_proof(audited));
        else if (check == "hammond") reports.push_back(audit::check_hammond(audited));
        else if (check == "gsp") reports.push_back(audit::check_group_sp(audited, audit::GroupSpMode::Papai));
        else if (check == "gsp-direct") reports.push_back(audit::check_group_sp(audited, audit::GroupSpMode::Direct));
        else if (check == "eff") reports.push_back(audit::check_efficiency(audited));
        else if (check == "nonbossy") reports.push_back(audit::check_nonbossy(audited));
        else if (check == "nonautarky") reports.push_back(audit::check_nonautarkic(audited));
        else if (check == "realloc") reports.push_back(audit::check_reallocation_proof(audited));
        else if (check == "transitivity") reports.push_back(audit::check_power_transitivity(audited));
        else if (check == "balanced") reports.push_back(audit::check_balanced(audited));
        else if (check == "fibers") reports.push_back(audit::verify_lemma_fibers(audited));
        else if (check == "superset") reports.push_back(audit::verify_prop_menu_superset(audited));
        else if (check == "extreme") reports.push_back(audit::verify_extreme_menus(audited));
        else throw InputError("unknown check '" + check + "'");
    }

    bool all_pass = true;
    for (const AuditReport& report : reports) {
        print_report_line(report);
        all_pass &= report.pass;
    }
    if (!out_path.empty()) {
        Json j;
        j["rule"] = io::rule_to_json(spec);
        j["budget"] = default_profile_budget();
        j["seed"] = 0;
        j["workers"] = resolve_workers(workers);
        Json list = Json::array();
        for (const AuditReport& report : reports) list.push_back(io::report_to_json(report));
        j["checks"] = list;
        io::write_text_file(out_path, j.dump(2) + "\n");
    }
    return all_pass ? kExitPass : kExitPropertyFailure;
}

int run_menu(const std::string& rule_path, int agent, const std::string& opposing,
             const std::string& group_csv, const std::string& format) {
    const RuleSpec spec = io::load_rule(rule_path);
    const OpposingProfile opp = opposing_from_string(opposing, agent);
    if (opp.agent_count() != spec.n) throw InputError("opposing profile must list n-1 orders");

    if (group_csv.empty()) {
        const Menu menu = menu_self(spec, agent, opp);
        std::string items;
        for (ObjectId x : menu.sorted_items()) items += object_letter(x);
        if (format == "json") {
            Json j;
            j["agent"] = agent;
            j["menu"] = items;
            j["delta"] = menu.size();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "menu: " << items << "\n" << "delta: " << menu.size() << "\n";
        }
        return kExitPass;
    }

    std::vector<AgentId> group;
    std::stringstream ss(group_csv);
    std::string token;
    while (std::getline(ss, token, ',')) group.push_back(std::stoi(token));
    const GroupMenu menu = menu_group(spec, agent, group, opp);

    if (format == "json") {
        Json j;
        j["agent"] = agent;
        j["group"] = menu.group;
        Json tuples = Json::array();
        for (const auto& tuple : menu.items) {
            std::string s;
            for (ObjectId x : tuple) s += object_letter(x);
            tuples.push_back(s);
        }
        j["menu"] = tuples;
        j["delta"] = menu.size();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "menu[";
        for (size_t k = 0; k < menu.group.size(); ++k) std::cout << (k ? "," : "") << menu.group[k];
        std::cout << "]:";
        for (const auto& tuple : menu.items) {
            std::cout << " (";
            for (size_t k = 0; k < tuple.size(); ++k) std::cout << (k ? "," : "") << object_letter(tuple[k]);
            std::cout << ")";
        }
        std::cout << "\n" << "delta: " << menu.size() << "\n";
    }
    return kExitPass;
}

int run_dist(const std::string& rule_path, int agent, const std::string& law, const std::string& format,
             const std::string& out_path, int workers) {
    const RuleSpec spec = io::load_rule(rule_path);
    const RuleTable table = build_rule_table(spec, workers);

    std::string text;
    if (law == "rank" || law == "delta") {
        stochastic::ExactDistribution d;
        if (law == "rank") {
            d = stochastic::exact_rank_distribution(table, agent);
        } else {
            d = stochastic::exact_delta_distribution(build_menu_masks(table), agent);
        }
        text = format == "json" ? io::distribution_json(d).dump(2) + "\n" : io::distribution_csv(d);
    } else if (law == "conditional") {
        const MenuMasks menus = build_menu_masks(table);
        const AuditReport check = stochastic::verify_conditional_law(table, menus, agent);
        if (!check.pass) {
            print_report_line(check);
            return kExitPropertyFailure;
        }
        if (format == "json") {
            Json rows = Json::array();
            for (int r = 1; r <= spec.m - 1; ++r)
                for (int s = 1; s <= spec.m - 1; ++s) {
                    const Rational value = stochastic::closed_form_conditional(spec.m, r, s);
                    Json row;
                    row["r"] = r;
                    row["s"] = s;
                    row["numerator"] = value.num().str();
                    row["denominator"] = value.den().str();
                    row["decimal"] = value.to_double();
                    rows.push_back(row);
                }
            text = rows.dump(2) + "\n";
        } else {
            std::ostringstream os;
            os << "value,numerator,denominator,decimal\n";
            for (int r = 1; r <= spec.m - 1; ++r)
                for (int s = 1; s <= spec.m - 1; ++s) {
                    const Rational value = stochastic::closed_form_conditional(spec.m, r, s);
                    char decimal[64];
                    std::snprintf(decimal, sizeof decimal, "%.12g", value.to_double());
                    os << r << "|" << s << "," << value.num().str() << "," << value.den().str() << ","
                       << decimal << "\n";
                }
            text = os.str();
        }
    } else {
        throw InputError("unknown law '" + law + "' (rank, delta or conditional)");
    }

    if (out_path.empty()) std::cout << text;
    else io::write_text_file(out_path, text);
    return kExitPass;
}

int run_prices(const std::string& rule_path, const std::string& profile_text, bool witness) {
    const RuleSpec spec = io::load_rule(rule_path);
    if (spec.kind != RuleKind::TTC) throw InputError("the prices command expects a ttc rule");
    const PreferenceProfile profile = profile_from_string(profile_text);
    const Assignment assignment = evaluate(spec, profile);
    const prices::PriceConstraintSystem system = prices::support_constraints(spec, profile, assignment);

    std::cout << "assignment: " << assignment_to_string(assignment) << "\n";
    std::cout << "constraints:\n";
    for (const auto& edge : system.edges)
        std::cout << "  p_" << object_letter(edge.lo) << (edge.strict ? " < " : " <= ") << "p_"
                  << object_letter(edge.hi) << "\n";
    std::cout << "feasible: " << (prices::feasible(system) ? "yes" : "no") << "\n";

    if (witness) {
        const auto vector = prices::sample_price_vector(system);
        std::cout << "witness:";
        for (int x = 0; x < spec.m; ++x) std::cout << " p_" << object_letter(x) << "=" << vector[x].str();
        std::cout << "\n";
    }

    bool all_equal = true;
    for (AgentId i = 0; i < spec.n; ++i) {
        const prices::BudgetSet budget = prices::budget_intersection(system, i, spec.endowment);
        const Menu menu = menu_self(spec, i, OpposingProfile::drop(profile, i));
        std::string budget_items, menu_items;
        for (ObjectId x : budget.sorted_items(spec.m)) budget_items += object_letter(x);
        for (ObjectId x : menu.sorted_items()) menu_items += object_letter(x);
        const bool equal = budget.objects_mask == menu.items_mask;
        all_equal &= equal;
        std::cout << "agent " << i << ": budget-intersection=" << budget_items << " menu=" << menu_items
                  << (equal ? " (equal)" : " (MISMATCH)") << "\n";
    }
    return all_equal ? kExitPass : kExitPropertyFailure;
}

voting::BinaryRule parse_game(const std::string& text) {
    // "[q; w1, w2, ...]" with optional spaces
    std::string body = text;
    body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == ' ' || c == '[' || c == ']'; }),
               body.end());
    const size_t semi = body.find(';');
    if (semi == std::string::npos) throw InputError("game descriptor must look like [q;w1,w2,...]");
    const int64_t quota = std::stoll(body.substr(0, semi));
    std::vector<int64_t> weights;
    std::stringstream ss(body.substr(semi + 1));
    std::string token;
    while (std::getline(ss, token, ',')) weights.push_back(std::stoll(token));
    if (weights.empty()) throw InputError("game descriptor lists no weights");
    return voting::BinaryRule::weighted_majority(quota, weights);
}

voting::BinaryRule load_game_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open game file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("game file is not valid JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("table")) throw InputError("game file needs fields 'n' and 'table'");
    std::vector<uint8_t> table;
    for (const auto& v : j["table"]) table.push_back(static_cast<uint8_t>(v.get<int>()));
    return voting::BinaryRule::from_table(j["n"].get<int>(), std::move(table));
}

int run_voting(const std::string& game, const std::string& table_path, const std::string& format) {
    const voting::BinaryRule rule = !game.empty() ? parse_game(game) : load_game_table(table_path);
    const voting::PowerIndexReport report = voting::power_indices(rule);

    if (format == "csv") {
        std::cout << "voter,banzhaf,shapley_shubik,edelta_bernoulli,edelta_homogeneity\n";
        for (int i = 0; i < rule.n; ++i)
            std::cout << i << "," << report.banzhaf[i].str() << "," << report.shapley_shubik[i].str() << ","
                      << report.expected_delta_bernoulli[i].str() << ","
                      << report.expected_delta_homogeneity[i].str() << "\n";
    } else {
        Json j;
        j["n"] = rule.n;
        j["monotone"] = rule.monotone();
        Json voters = Json::array();
        for (int i = 0; i < rule.n; ++i) {
            Json v;
            v["voter"] = i;
            v["banzhaf"] = report.banzhaf[i].str();
            v["shapley_shubik"] = report.shapley_shubik[i].str();
            v["edelta_bernoulli"] = report.expected_delta_bernoulli[i].str();
            v["edelta_homogeneity"] = report.expected_delta_homogeneity[i].str();
            voters.push_back(v);
        }
        j["voters"] = voters;
        std::cout << j.dump(2) << "\n";
    }
    return kExitPass;
}

int run_repro(const std::string& id, bool all, int n, int workers) {
    std::vector<std::string> ids;
    if (all) ids = repro::all_ids();
    else if (!id.empty()) ids.push_back(id);
    else throw InputError("repro needs --id or --all");

    bool pass = true;
    for (const std::string& one : ids) {
        const repro::ReproResult result = repro::run(one, n, workers);
        std::cout << (result.pass ? "PASS" : "FAIL") << " " << result.id << "\n";
        for (const AuditReport& report : result.reports) {
            std::cout << "  ";
            print_report_line(report);
        }
        pass &= result.pass;
    }
    return pass ? kExitPass : kExitPropertyFailure;
}

int run_validate(const std::string& rule_path) {
    const RuleSpec spec = io::load_rule(rule_path);
    if (spec.table.empty()) {
        std::cout << R"({"valid": true, "issues": []})" << "\n";
        return kExitPass;
    }
    const ValidationReport report = validate_control_rights(spec.table, spec.n, spec.m);
    std::cout << io::validation_to_json(report).dump(2) << "\n";
    return report.valid ? kExitPass : kExitPropertyFailure;
}

int run_catalog_emit(const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    for (int n : {3, 4}) {
        for (const auto& e : catalog::standard_catalog(n))
            io::save_rule(e.spec, dir + "/" + e.spec.name + std::to_string(n) + ".json");
    }
    for (const auto& e : catalog::structural_case_rules())
        io::save_rule(e.spec, dir + "/" + e.spec.name + "4.json");
    std::cout << "wrote rule files to " << dir << "\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spmech: exact menus, freedom and power indices for strategy-proof mechanisms"};
    app.require_subcommand(1);

    std::string rule_path, checks = "sp", out_path, opposing, group_csv, format = "text";
    std::string profile_text, game, table_path, repro_id, emit_dir, law = "rank";
    int agent = 0, n = 3, workers = 0;
    bool all_ids = false, witness = false;

    CLI::App* audit_cmd = app.add_subcommand("audit", "exhaustive property checks for a rule");
    audit_cmd->add_option("--rule", rule_path, "rule spec JSON file")->required();
    audit_cmd->add_option("--checks", checks, "comma list: sp,hammond,gsp,gsp-direct,eff,nonbossy,nonautarky,realloc,transitivity,balanced,fibers,superset,extreme");
    audit_cmd->add_option("--out", out_path, "write a JSON report here");
    audit_cmd->add_option("--workers", workers, "sweep workers (0 = all cores, 1 = serial)");

    CLI::App* menu_cmd = app.add_subcommand("menu", "menus and cardinal indices at an opposing profile");
    menu_cmd->add_option("--rule", rule_path)->required();
    menu_cmd->add_option("--agent", agent)->required();
    menu_cmd->add_option("--opposing", opposing, "n-1 comma-separated orders")->required();
    menu_cmd->add_option("--group", group_csv, "agent list for a menu-for-others");
    menu_cmd->add_option("--format", format, "text or json");

    CLI::App* dist_cmd = app.add_subcommand("dist", "exact impartial-culture laws");
    dist_cmd->add_option("--rule", rule_path)->required();
    dist_cmd->add_option("--agent", agent)->required();
    dist_cmd->add_option("--law", law, "rank, delta or conditional");
    dist_cmd->add_option("--format", format, "csv or json");
    dist_cmd->add_option("--out", out_path);
    dist_cmd->add_option("--workers", workers);

    CLI::App* prices_cmd = app.add_subcommand("prices", "supporting prices for a TTC outcome");
    prices_cmd->add_option("--rule", rule_path)->required();
    prices_cmd->add_option("--profile", profile_text)->required();
    prices_cmd->add_flag("--witness", witness, "print a feasible price vector");

    CLI::App* voting_cmd = app.add_subcommand("voting", "power indices of a binary voting game");
    voting_cmd->add_option("--game", game, "weighted descriptor like [3;2,1,1]");
    voting_cmd->add_option("--table", table_path, "JSON file with fields n and table");
    voting_cmd->add_option("--format", format, "json or csv");

    CLI::App* repro_cmd = app.add_subcommand("repro", "reproduction cookbook");
    repro_cmd->add_option("--id", repro_id, "one recipe id");
    repro_cmd->add_flag("--all", all_ids, "run every recipe");
    repro_cmd->add_option("--n", n, "environment size");
    repro_cmd->add_option("--workers", workers);

    CLI::App* validate_cmd = app.add_subcommand("validate", "validate a control-rights table");
    validate_cmd->add_option("--rule", rule_path)->required();

    CLI::App* catalog_cmd = app.add_subcommand("catalog", "write the built-in rule catalog as JSON files");
    catalog_cmd->add_option("--emit", emit_dir, "target directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitInput;
    }

    try {
        if (audit_cmd->parsed()) return run_audit(rule_path, checks, out_path, workers);
        if (menu_cmd->parsed()) return run_menu(rule_path, agent, opposing, group_csv, format);
        if (dist_cmd->parsed()) return run_dist(rule_path, agent, law, format, out_path, workers);
        if (prices_cmd->parsed()) return run_prices(rule_path, profile_text, witness);
        if (voting_cmd->parsed()) return run_voting(game, table_path, format);
        if (repro_cmd->parsed()) return run_repro(repro_id, all_ids, n, workers);
        if (validate_cmd->parsed()) return run_validate(rule_path);
        if (catalog_cmd->parsed()) return run_catalog_emit(emit_dir);
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
