// Command-line front end: multisegment enumeration, good words, orbit
// classification, relation verification, Gelfand-Tsetlin utilities and the
// intertwiner check.  All numeric I/O is exact-rational text.

#include "CLI11.hpp"
#include "json.hpp"

#include "klrw/graded.hpp"
#include "klrw/gt.hpp"
#include "klrw/multisegment.hpp"
#include "klrw/ogz.hpp"
#include "klrw/quiver.hpp"
#include "klrw/relations.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace klrw;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::istringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) out.push_back(std::stoi(piece));
    return out;
}

Problem problem_from_flags(int m, int n, const std::string& v_text, const std::string& chi_text) {
    std::vector<int> v = parse_int_list(v_text);
    std::vector<int> chi = parse_int_list(chi_text);
    if (static_cast<int>(chi.size()) != n && n >= 0 && chi.empty())
        chi.assign(n, 0);
    return Problem(m, n, std::move(v), std::move(chi));
}

QuiverRep quiver_rep_from_json(const json& j) {
    int m = j.at("m").get<int>();
    int n = j.at("n").get<int>();
    std::vector<int> v = j.at("v").get<std::vector<int>>();
    std::vector<int> chi = j.at("chi").get<std::vector<int>>();
    Problem p(m, n, std::move(v), std::move(chi));
    std::vector<Matrix> maps;
    for (const auto& jm : j.at("maps")) {
        std::vector<std::vector<Rational>> rows;
        for (const auto& jrow : jm) {
            std::vector<Rational> row;
            for (const auto& entry : jrow) {
                if (entry.is_number_integer()) row.push_back(Rational(entry.get<long>()));
                else row.push_back(parse_rational(entry.get<std::string>()));
            }
            rows.push_back(std::move(row));
        }
        maps.push_back(Matrix::from_rows(rows));
    }
    return QuiverRep(std::move(p), std::move(maps));
}

GTWeight gt_weight_from_json(const json& j) {
    std::vector<std::vector<int>> rows;
    for (const auto& jrow : j) rows.push_back(jrow.get<std::vector<int>>());
    return GTWeight(std::move(rows));
}

json multisegment_to_json(const FlavoredMultisegment& ms) {
    json out = json::array();
    for (const auto& s : ms.unflavored())
        out.push_back({{"start", s.start}, {"end", s.end}});
    for (const auto& f : ms.flavored())
        out.push_back({{"start", f.segment.start}, {"end", f.segment.end}, {"flavor", f.flavor}});
    return out;
}

int cmd_multisegments(int m, int n, const std::string& v_text, const std::string& chi_text,
                      const std::string& format) {
    Problem p = problem_from_flags(m, n, v_text, chi_text);
    auto all = enumerate_flavored(p);
    if (format == "json") {
        json out;
        out["count"] = all.size();
        out["multisegments"] = json::array();
        for (const auto& ms : all) out["multisegments"].push_back(multisegment_to_json(ms));
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "multisegment\n";
        for (const auto& ms : all) std::cout << "\"" << ms.str() << "\"\n";
        std::cout << "count," << all.size() << "\n";
    } else {
        for (const auto& ms : all) std::cout << ms.str() << "\n";
        std::cout << "count: " << all.size() << "\n";
    }
    return 0;
}

int cmd_good_word(const std::string& input, int m) {
    FlavoredMultisegment ms = FlavoredMultisegment::parse(input);
    int max_letter = m;
    if (max_letter == 0) {
        for (const auto& f : ms.flavored()) max_letter = std::max(max_letter, f.segment.end);
        for (const auto& s : ms.unflavored()) max_letter = std::max(max_letter, s.end + 1);
    }
    std::cout << good_word(ms, max_letter).str() << "\n";
    return 0;
}

int cmd_classify(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return 1;
    }
    json j = json::parse(in);
    QuiverRep rep = quiver_rep_from_json(j);
    FlavoredMultisegment ms = classify(rep);
    RankInvariants inv = rank_invariants(rep);
    int orbit = orbit_dimension(rep);
    int stab = stabilizer_dimension(rep);
    if (format == "json") {
        json out;
        out["multisegment"] = ms.str();
        out["segments"] = multisegment_to_json(ms);
        out["segment_ranks"] = inv.segment_ranks;
        out["flag_preimage_dims"] = inv.preimage_dims;
        out["orbit_dimension"] = orbit;
        out["stabilizer_dimension"] = stab;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "multisegment: " << ms.str() << "\n";
        std::cout << "segment ranks:";
        for (int r : inv.segment_ranks) std::cout << " " << r;
        std::cout << "\nflag preimage dims:";
        for (int d : inv.preimage_dims) std::cout << " " << d;
        std::cout << "\norbit dimension: " << orbit << "\n";
        std::cout << "stabilizer dimension: " << stab << "\n";
    }
    return 0;
}

int cmd_verify_relations(int max_m, int max_strands, bool inject_sign_flip) {
    RelationSuiteOptions opts;
    opts.max_m = max_m;
    opts.max_strands = max_strands;
    opts.flip_adjacent_sign = inject_sign_flip;
    RelationSuiteReport report = run_relation_suite(opts);
    if (report.pass()) {
        std::cout << "all " << report.checks << " relation checks pass\n";
        return 0;
    }
    std::cout << report.failures.size() << " of " << report.checks << " relation checks fail\n";
    for (const auto& f : report.failures) std::cout << "  " << f << "\n";
    return 1;
}

int cmd_gt_word(const std::string& input) {
    GTWeight lambda = gt_weight_from_json(json::parse(input));
    std::cout << word_of_gt_weight(lambda).str() << "\n";
    return 0;
}

int cmd_gt_patterns(const std::string& chi_text, bool count_only, const std::string& format) {
    CentralCharacter chi = parse_int_list(chi_text);
    std::sort(chi.begin(), chi.end());
    auto patterns = enumerate_gt_patterns(chi);
    if (format == "json") {
        json out;
        out["count"] = patterns.size();
        if (!count_only) {
            out["patterns"] = json::array();
            for (const auto& p : patterns) {
                json rows = json::array();
                for (const auto& row : p.rows()) rows.push_back(row);
                out["patterns"].push_back(rows);
            }
        }
        std::cout << out.dump(2) << "\n";
    } else {
        if (!count_only)
            for (const auto& p : patterns) std::cout << p.str() << "\n";
        std::cout << "count: " << patterns.size() << "\n";
    }
    return 0;
}

int cmd_translate(const std::string& chi_text, const std::string& op, int times) {
    CentralCharacter chi = parse_int_list(chi_text);
    std::sort(chi.begin(), chi.end());
    if (op.empty() || (op[0] != '+' && op[0] != '-')) {
        std::cerr << "error: --op must look like +1 or -2\n";
        return 1;
    }
    int i = std::stoi(op.substr(1));
    auto result = op[0] == '+' ? chi_plus_power(chi, i, times) : chi_minus_power(chi, i, times);
    if (!result) {
        std::cout << "undefined\n";
        return 1;
    }
    std::ostringstream out;
    for (size_t k = 0; k < result->size(); ++k) {
        if (k) out << ",";
        out << (*result)[k];
    }
    std::cout << out.str() << "\n";
    return 0;
}

Polynomial named_symmetric_polynomial(const std::string& name, int nvars) {
    if (name == "1") return Polynomial::constant(nvars, 1);
    if (name == "e1" || name == "e2") {
        int k = name == "e1" ? 1 : 2;
        Polynomial p(nvars);
        if (k > nvars) return p;
        std::vector<int> pick(k);
        auto rec = [&](auto&& self, int from, int depth) -> void {
            if (depth == k) {
                Exponents e(nvars, 0);
                for (int idx : pick) e[idx] = 1;
                p.add_term(e, 1);
                return;
            }
            for (int idx = from; idx <= nvars - (k - depth); ++idx) {
                pick[depth] = idx;
                self(self, idx + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
        return p;
    }
    throw std::invalid_argument("unknown symmetric polynomial: " + name);
}

int cmd_check_intertwiner(int n, int i, int s, const std::string& p_name,
                          const std::string& lambda_text, bool drop_c) {
    IntertwinerOptions opts;
    opts.drop_c_factor = drop_c;

    std::vector<std::vector<int>> rows;
    if (!lambda_text.empty()) {
        rows.push_back(gt_weight_from_json(json::parse(lambda_text)).row(n));
    } else {
        // sweep every bottom row with entries in [0, 2] containing an i
        std::vector<int> cur(n, 0);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == n) {
                if (std::find(cur.begin(), cur.end(), i) != cur.end()) rows.push_back(cur);
                return;
            }
            for (int e = (pos ? cur[pos - 1] : 0); e <= 2; ++e) {
                cur[pos] = e;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
    }

    int failures = 0, checks = 0;
    for (const auto& row : rows) {
        std::vector<int> sorted_row = row;
        std::sort(sorted_row.begin(), sorted_row.end());
        std::vector<int> nu_prime = sorted_row;
        for (int j = n - 1; j >= 0; --j) {
            if (nu_prime[j] == i) {
                nu_prime[j] = i + 1;
                break;
            }
        }
        int alphabet = 0;
        for (int value : nu_prime)
            if (value == i) ++alphabet;
        Polynomial p = named_symmetric_polynomial(p_name, alphabet);
        ++checks;
        auto report = check_intertwiner(n, i, p, s, sorted_row, opts);
        if (!report.pass) {
            ++failures;
            std::cout << "FAIL row=(";
            for (size_t k = 0; k < row.size(); ++k) std::cout << (k ? "," : "") << row[k];
            std::cout << ")\n";
            for (const auto& msg : report.mismatches) std::cout << msg << "\n";
        }
    }
    if (failures == 0) {
        std::cout << "pass: " << checks << " intertwiner checks\n";
        return 0;
    }
    std::cout << failures << " of " << checks << " intertwiner checks fail\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in deformed KLRW algebras and their combinatorics"};
    app.require_subcommand(1);

    int m = 2, n = 1, times = 1;
    int max_m = 3, max_strands = 4;
    int og_n = 1, og_i = 0, og_s = 0;
    std::string v_text, chi_text, format = "pretty", input, op_text, p_name = "1", lambda_text;
    bool count_only = false, inject = false, drop_c = false;
    long seed = 0;

    auto* ms_cmd = app.add_subcommand("multisegments", "enumerate chi-flavored multisegments");
    ms_cmd->add_option("--m", m)->required();
    ms_cmd->add_option("--n", n)->required();
    ms_cmd->add_option("--v", v_text, "comma list, m-1 entries");
    ms_cmd->add_option("--chi", chi_text, "comma list, n entries")->required();
    ms_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "pretty"}));

    auto* gw_cmd = app.add_subcommand("good-word", "good word of a flavored multisegment");
    gw_cmd->add_option("--input", input, "multisegment text, e.g. {(1),(3,2)@5}")->required();
    gw_cmd->add_option("--m", m, "number of labels (default: inferred)")->default_val(0);

    auto* cl_cmd = app.add_subcommand("classify", "classify a quiver representation");
    cl_cmd->add_option("--input", input, "JSON file")->required();
    cl_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "pretty"}));

    auto* vr_cmd = app.add_subcommand("verify-relations", "run the local relation suite");
    vr_cmd->add_option("--max-m", max_m);
    vr_cmd->add_option("--max-strands", max_strands);
    vr_cmd->add_flag("--inject-sign-flip", inject)->group(""); // hidden test hook

    auto* gtw_cmd = app.add_subcommand("gt-word", "word of a Gelfand-Tsetlin weight");
    gtw_cmd->add_option("--input", input, "JSON rows, e.g. [[1],[4,4],[1,2,3]]")->required();

    auto* gtp_cmd = app.add_subcommand("gt-patterns", "enumerate Gelfand-Tsetlin patterns");
    gtp_cmd->add_option("--chi", chi_text)->required();
    gtp_cmd->add_flag("--count-only", count_only);
    gtp_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "pretty"}));

    auto* tr_cmd = app.add_subcommand("translate", "apply chi^{+i} or chi^{-i}");
    tr_cmd->add_option("--chi", chi_text)->required();
    tr_cmd->add_option("--op", op_text, "+i or -i")->required();
    tr_cmd->add_option("--times", times, "apply the operation a times");

    auto* ci_cmd = app.add_subcommand("check-intertwiner", "translated-operator identity check");
    ci_cmd->add_option("--n", og_n)->required();
    ci_cmd->add_option("--i", og_i)->required();
    ci_cmd->add_option("--s", og_s);
    ci_cmd->add_option("--p", p_name)->check(CLI::IsMember({"1", "e1", "e2"}));
    ci_cmd->add_option("--lambda", lambda_text, "JSON rows; default sweeps entries in [0,2]");
    ci_cmd->add_flag("--drop-c-factor", drop_c)->group("");

    app.add_option("--seed", seed, "seed for randomized subcommands");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ms_cmd->parsed()) return cmd_multisegments(m, n, v_text, chi_text, format);
        if (gw_cmd->parsed()) return cmd_good_word(input, m);
        if (cl_cmd->parsed()) return cmd_classify(input, format);
        if (vr_cmd->parsed()) return cmd_verify_relations(max_m, max_strands, inject);
        if (gtw_cmd->parsed()) return cmd_gt_word(input);
        if (gtp_cmd->parsed()) return cmd_gt_patterns(chi_text, count_only, format);
        if (tr_cmd->parsed()) return cmd_translate(chi_text, op_text, times);
        if (ci_cmd->parsed())
            return cmd_check_intertwiner(og_n, og_i, og_s, p_name, lambda_text, drop_c);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
