#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "knotoid/json_io.hpp"
#include "knotoid/property_suites.hpp"

namespace knotoid {

// Exit codes: 0 = success / verdict reached, 1 = invalid input,
// 2 = inconclusive (Unknown verdicts or property violations),
// 3 = budget misconfiguration. Scripts can branch on these alone.
enum ExitStatus : int {
    kExitOk = 0,
    kExitInvalidInput = 1,
    kExitInconclusive = 2,
    kExitBadBudget = 3,
};

namespace cli_detail {

inline bool read_file(const std::string& path, std::string& out, std::ostream& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "cannot open " << path << "\n";
        return false;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    out = buffer.str();
    return true;
}

struct BudgetFlags {
    std::size_t max_nodes = 100000;
    std::size_t max_depth = 12;
    std::size_t max_chords = 0;  // 0 = chord count + 2

    void attach(CLI::App* cmd) {
        cmd->add_option("--max-nodes", max_nodes, "search node budget")
            ->envname("KNOTOID_MAX_NODES");
        cmd->add_option("--max-depth", max_depth, "search depth budget")
            ->envname("KNOTOID_MAX_DEPTH");
        cmd->add_option("--max-chords", max_chords, "chord cap for add moves (0 = input + 2)")
            ->envname("KNOTOID_MAX_CHORDS");
    }

    bool valid() const { return max_nodes >= 1; }

    SearchBudget budget() const { return SearchBudget{max_nodes, max_depth, max_chords}; }
};

inline int load_records(const std::string& path, std::ostream& out, std::ostream& err,
                        std::vector<InputRecord>& records) {
    std::string text;
    if (!read_file(path, text, err)) return kExitInvalidInput;
    ParsedInput parsed = parse_input_codes(text);
    if (!parsed.issues.empty()) {
        for (const InputIssue& issue : parsed.issues) {
            out << json{{"line", issue.line}, {"ok", false}, {"error", to_string(issue.code)},
                        {"detail", issue.detail}}
                       .dump()
                << "\n";
        }
        return kExitInvalidInput;
    }
    records = std::move(parsed.records);
    return kExitOk;
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gauss-code calculator for open knot diagrams in the welded setting"};
    app.require_subcommand(1);

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "check codes in a file");
    std::string validate_path;
    validate_cmd->add_option("file", validate_path, "input file")->required();

    // invariants
    auto* invariants_cmd = app.add_subcommand("invariants", "per-diagram invariant reports");
    std::string invariants_path;
    bool invariants_check = false;
    bool invariants_pretty = false;
    std::string alternation = "cyclic";
    invariants_cmd->add_option("file", invariants_path, "input file")->required();
    invariants_cmd->add_flag("--check", invariants_check,
                             "additionally assert the degree identities on each code");
    invariants_cmd->add_flag("--pretty", invariants_pretty, "human-readable output");
    invariants_cmd->add_option("--alternation", alternation, "cyclic|linear")
        ->check(CLI::IsMember({"cyclic", "linear"}));

    // simplify
    auto* simplify_cmd = app.add_subcommand("simplify", "bounded triviality search");
    std::string simplify_path;
    std::string simplify_cert_out;
    cli_detail::BudgetFlags simplify_budget;
    simplify_cmd->add_option("file", simplify_path, "input file")->required();
    simplify_cmd->add_option("--cert-out", simplify_cert_out, "write certificates (JSONL)");
    simplify_budget.attach(simplify_cmd);

    // unknot
    auto* unknot_cmd = app.add_subcommand("unknot", "unknotting-number upper bounds");
    std::string unknot_path;
    std::string unknot_op = "change";
    std::size_t unknot_max_k = 2;
    std::string unknot_cert_out;
    cli_detail::BudgetFlags unknot_budget;
    unknot_cmd->add_option("file", unknot_path, "input file")->required();
    unknot_cmd->add_option("--op", unknot_op, "change|virtualize")
        ->check(CLI::IsMember({"change", "virtualize"}));
    unknot_cmd->add_option("--max-k", unknot_max_k, "largest modification-set size");
    unknot_cmd->add_option("--cert-out", unknot_cert_out, "write certificates (JSONL)");
    unknot_budget.attach(unknot_cmd);

    // closure
    auto* closure_cmd = app.add_subcommand("closure", "virtual-closure warping data");
    std::string closure_path;
    closure_cmd->add_option("file", closure_path, "input file")->required();

    // enumerate
    auto* enumerate_cmd = app.add_subcommand("enumerate", "generate codes, one per line");
    std::size_t enumerate_chords = 0;
    std::size_t enumerate_random = 0;
    std::uint64_t enumerate_seed = 1;
    bool enumerate_dedupe = false;
    std::size_t enumerate_ceiling = 3;
    enumerate_cmd->add_option("--chords", enumerate_chords, "number of chords")->required();
    enumerate_cmd->add_option("--random", enumerate_random, "emit this many random codes");
    enumerate_cmd->add_option("--seed", enumerate_seed, "random seed");
    enumerate_cmd->add_flag("--dedupe", enumerate_dedupe, "drop canonical-key duplicates");
    enumerate_cmd->add_option("--max-exhaustive", enumerate_ceiling,
                              "ceiling for exhaustive enumeration");

    // verify-cert
    auto* verify_cmd = app.add_subcommand("verify-cert", "replay certificates independently");
    std::string verify_path;
    verify_cmd->add_option("file", verify_path, "certificate JSON or JSONL file")->required();

    // check
    auto* check_cmd = app.add_subcommand("check", "run a property suite over a corpus");
    std::string check_suite = "all";
    std::size_t check_chords = 3;
    std::size_t check_random = 0;
    std::uint64_t check_seed = 0x9e3779b97f4a7c15ull;
    bool check_pretty = false;
    check_cmd->add_option("--suite", check_suite, "suite id or 'all'");
    check_cmd->add_option("--chords", check_chords, "exhaustive corpus ceiling");
    check_cmd->add_option("--random", check_random, "extra random codes");
    check_cmd->add_option("--seed", check_seed, "random seed");
    check_cmd->add_flag("--pretty", check_pretty, "aligned table output");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitInvalidInput;
    }

    try {
        if (validate_cmd->parsed()) {
            std::string text;
            if (!cli_detail::read_file(validate_path, text, err)) return kExitInvalidInput;
            ParsedInput parsed = parse_input_codes(text);
            for (const InputRecord& rec : parsed.records) {
                out << json{{"line", rec.line}, {"ok", true}}.dump() << "\n";
            }
            for (const InputIssue& issue : parsed.issues) {
                out << json{{"line", issue.line}, {"ok", false}, {"error", to_string(issue.code)},
                            {"detail", issue.detail}}
                           .dump()
                    << "\n";
            }
            return parsed.issues.empty() ? kExitOk : kExitInvalidInput;
        }

        if (invariants_cmd->parsed()) {
            std::vector<InputRecord> records;
            if (int rc = cli_detail::load_records(invariants_path, out, err, records); rc != 0) {
                return rc;
            }
            const AlternationRule rule =
                alternation == "linear" ? AlternationRule::Linear : AlternationRule::Cyclic;
            bool violation = false;
            for (const InputRecord& rec : records) {
                InvariantReport rep = report(rec.code, rule);
                json j = report_to_json(rep);
                j["code"] = serialize_code(rec.code);
                if (invariants_check) {
                    std::vector<std::string> failed;
                    const GaussCode rev = reverse(rec.code);
                    for (std::size_t b = 0; b < base_class_count(rec.code); ++b) {
                        if (warping_degree_at(rec.code, b) +
                                warping_degree_at(rev, reversed_base_class(rec.code, b)) !=
                            rec.code.chord_count()) {
                            failed.push_back("degree_sum");
                            break;
                        }
                    }
                    std::set<int> chords;
                    for (const Passage& p : rec.code.passages) chords.insert(p.chord);
                    bool cut_ok = true;
                    for (std::size_t b = 0; b < base_class_count(rec.code) && cut_ok; ++b) {
                        auto warping = warping_crossings(rec.code, b);
                        for (int chord : chords) {
                            const int cut = cutting_number(rec.code, b, chord);
                            if (cut == 0 || cut % 2 == 0 ||
                                (cut > 0) != (warping.count(chord) > 0)) {
                                cut_ok = false;
                                break;
                            }
                        }
                    }
                    if (!cut_ok) failed.push_back("cut_sign");
                    if (!rec.code.empty()) {
                        const std::size_t m = rec.code.passage_count();
                        for (std::size_t b = 0; b < m; ++b) {
                            const int step = rec.code.passages[b].role == Role::Over ? 1 : -1;
                            if (static_cast<int>(rep.d_at[(b + 1) % m]) !=
                                static_cast<int>(rep.d_at[b]) + step) {
                                failed.push_back("adjacent_step");
                                break;
                            }
                        }
                    }
                    if (rec.code.chord_count() >= 3) {
                        const bool equality = rep.d + rep.d_rev + 1 == rep.cr;
                        if (rep.d + rep.d_rev + 1 > rep.cr || equality != rep.alternating) {
                            failed.push_back("alternating_bound");
                        }
                    }
                    if (!failed.empty()) {
                        violation = true;
                        j["violations"] = failed;
                    }
                }
                if (invariants_pretty) {
                    out << serialize_code(rec.code) << ": cr=" << rep.cr << " d=" << rep.d
                        << " d_rev=" << rep.d_rev
                        << (rep.alternating ? " alternating" : " non-alternating")
                        << (rep.descending ? " descending" : "") << "\n";
                } else {
                    out << j.dump() << "\n";
                }
            }
            return violation ? kExitInconclusive : kExitOk;
        }

        if (simplify_cmd->parsed()) {
            if (!simplify_budget.valid()) {
                err << "budget misconfiguration: --max-nodes must be at least 1\n";
                return kExitBadBudget;
            }
            std::vector<InputRecord> records;
            if (int rc = cli_detail::load_records(simplify_path, out, err, records); rc != 0) {
                return rc;
            }
            std::ofstream cert_stream;
            if (!simplify_cert_out.empty()) {
                cert_stream.open(simplify_cert_out, std::ios::binary);
                if (!cert_stream) {
                    err << "cannot open " << simplify_cert_out << "\n";
                    return kExitInvalidInput;
                }
            }
            bool any_unknown = false;
            for (std::size_t i = 0; i < records.size(); ++i) {
                TrivialityVerdict verdict =
                    bounded_trivialize(records[i].code, simplify_budget.budget());
                if (!verdict.trivial()) any_unknown = true;
                json j = verdict_to_json(verdict);
                j["code"] = serialize_code(records[i].code);
                out << j.dump() << "\n";
                if (cert_stream.is_open() && verdict.certificate) {
                    cert_stream << json{{"record", i + 1},
                                        {"certificate", certificate_to_json(*verdict.certificate)}}
                                       .dump()
                                << "\n";
                }
            }
            return any_unknown ? kExitInconclusive : kExitOk;
        }

        if (unknot_cmd->parsed()) {
            if (!unknot_budget.valid()) {
                err << "budget misconfiguration: --max-nodes must be at least 1\n";
                return kExitBadBudget;
            }
            std::vector<InputRecord> records;
            if (int rc = cli_detail::load_records(unknot_path, out, err, records); rc != 0) {
                return rc;
            }
            std::ofstream cert_stream;
            if (!unknot_cert_out.empty()) {
                cert_stream.open(unknot_cert_out, std::ios::binary);
                if (!cert_stream) {
                    err << "cannot open " << unknot_cert_out << "\n";
                    return kExitInvalidInput;
                }
            }
            const UnknotOp op = unknot_op == "change" ? UnknotOp::Change : UnknotOp::Virtualize;
            bool any_unknown = false;
            for (std::size_t i = 0; i < records.size(); ++i) {
                UnknotResult res =
                    unknot_search(records[i].code, op, unknot_max_k, unknot_budget.budget());
                if (!res.found) any_unknown = true;
                json j = unknot_result_to_json(res);
                j["code"] = serialize_code(records[i].code);
                out << j.dump() << "\n";
                if (cert_stream.is_open() && res.certificate) {
                    cert_stream << json{{"record", i + 1},
                                        {"certificate", certificate_to_json(*res.certificate)}}
                                       .dump()
                                << "\n";
                }
            }
            return any_unknown ? kExitInconclusive : kExitOk;
        }

        if (closure_cmd->parsed()) {
            std::vector<InputRecord> records;
            if (int rc = cli_detail::load_records(closure_path, out, err, records); rc != 0) {
                return rc;
            }
            for (const InputRecord& rec : records) {
                json j = closure_to_json(closure_unknot_data(rec.code));
                j["code"] = serialize_code(rec.code);
                j["closure"] = serialize_code(virtual_closure(rec.code));
                out << j.dump() << "\n";
            }
            return kExitOk;
        }

        if (enumerate_cmd->parsed()) {
            std::set<std::string> seen;
            auto emit = [&](const GaussCode& code) {
                if (enumerate_dedupe && !seen.insert(canonical_key(code)).second) return;
                out << serialize_code(code) << "\n";
            };
            if (enumerate_random > 0) {
                for (std::size_t i = 0; i < enumerate_random; ++i) {
                    emit(random_code(enumerate_chords, enumerate_seed + i));
                }
            } else {
                for (const GaussCode& code : all_codes(enumerate_chords, enumerate_ceiling)) {
                    emit(code);
                }
            }
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            std::string text;
            if (!cli_detail::read_file(verify_path, text, err)) return kExitInvalidInput;
            bool all_ok = true;
            std::size_t record = 0;
            std::istringstream lines(text);
            std::string line;
            auto handle = [&](const json& j) {
                ++record;
                const json& cert_json = j.contains("certificate") ? j["certificate"] : j;
                VerifyResult vr = verify_certificate(certificate_from_json(cert_json));
                json outj = verify_result_to_json(vr);
                outj["record"] = record;
                out << outj.dump() << "\n";
                if (!vr.ok()) all_ok = false;
            };
            // A file may hold one JSON object or one object per line.
            const json whole = json::parse(text, nullptr, false);
            if (!whole.is_discarded()) {
                handle(whole);
            } else {
                while (std::getline(lines, line)) {
                    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                    json j = json::parse(line, nullptr, false);
                    if (j.is_discarded()) {
                        err << "record " << record + 1 << ": malformed JSON\n";
                        return kExitInvalidInput;
                    }
                    handle(j);
                }
            }
            return all_ok ? kExitOk : kExitInvalidInput;
        }

        if (check_cmd->parsed()) {
            SuiteOptions opt;
            opt.max_chords = check_chords;
            opt.random_count = check_random;
            opt.seed = check_seed;
            bool all_pass = true;
            bool any_ran = false;
            for (const auto& [name, fn] : suite_registry()) {
                if (check_suite != "all" && check_suite != name) continue;
                any_ran = true;
                SuiteResult res = fn(opt);
                if (!res.pass()) all_pass = false;
                if (check_pretty) {
                    out << std::left << std::setw(24) << res.suite << std::right << std::setw(8)
                        << res.cases << " cases " << std::setw(4) << res.violations
                        << " violations  " << (res.pass() ? "pass" : "FAIL") << "\n";
                } else {
                    out << json{{"suite", res.suite},
                                {"cases", res.cases},
                                {"violations", res.violations},
                                {"pass", res.pass()},
                                {"samples", res.samples}}
                               .dump()
                        << "\n";
                }
            }
            if (!any_ran) {
                err << "unknown suite " << check_suite << "\n";
                return kExitInvalidInput;
            }
            return all_pass ? kExitOk : kExitInconclusive;
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return e.code() == ErrorCode::CeilingExceeded ? kExitBadBudget : kExitInvalidInput;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitInvalidInput;
    }
    err << "no subcommand\n";
    return kExitInvalidInput;
}

}  // namespace knotoid
