#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "knotoid/moves.hpp"
#include "knotoid/simplify.hpp"
#include "knotoid/unknot.hpp"
#include "knotoid/warping.hpp"

namespace knotoid {

using json = nlohmann::json;

inline json passages_to_json(const std::vector<Passage>& passages) {
    json arr = json::array();
    for (const Passage& p : passages) {
        arr.push_back({{"chord", p.chord},
                       {"role", p.role == Role::Over ? "O" : "U"},
                       {"sign", p.sign}});
    }
    return arr;
}

inline GaussCode code_from_json(const json& j) {
    if (j.is_string()) return parse_code(j.get<std::string>());
    if (!j.is_object() || !j.contains("passages") || !j["passages"].is_array()) {
        throw Error(ErrorCode::BadInput, "expected a code string or {\"passages\": [...]}");
    }
    GaussCode code;
    for (const json& e : j["passages"]) {
        Passage p;
        p.chord = e.at("chord").get<int>();
        const std::string role = e.at("role").get<std::string>();
        if (role == "O") {
            p.role = Role::Over;
        } else if (role == "U") {
            p.role = Role::Under;
        } else {
            throw Error(ErrorCode::BadInput, "role must be \"O\" or \"U\"");
        }
        p.sign = e.at("sign").get<int>();
        code.passages.push_back(p);
    }
    if (auto issue = validate(code)) throw Error(issue->code, issue->detail);
    return code;
}

// --- moves -----------------------------------------------------------------

inline json move_to_json(const Move& move) {
    json j;
    j["kind"] = to_string(kind_of(move));
    if (const auto* mv = std::get_if<R1AddMove>(&move)) {
        j["pos"] = mv->pos;
        j["chord"] = mv->chord;
        j["first_role"] = mv->first_role == Role::Over ? "O" : "U";
        j["sign"] = mv->sign;
    } else if (const auto* mv = std::get_if<R1RemoveMove>(&move)) {
        j["pos"] = mv->pos;
        j["chord"] = mv->chord;
        j["first_role"] = mv->first_role == Role::Over ? "O" : "U";
        j["sign"] = mv->sign;
    } else if (const auto* mv = std::get_if<R2AddMove>(&move)) {
        j["over_gap"] = mv->over_gap;
        j["under_gap"] = mv->under_gap;
        j["over_site_first"] = mv->over_site_first;
        j["chord_first"] = mv->chord_first;
        j["chord_second"] = mv->chord_second;
        j["sign_first"] = mv->sign_first;
        j["antiparallel"] = mv->antiparallel;
    } else if (const auto* mv = std::get_if<R2RemoveMove>(&move)) {
        j["over_pos"] = mv->over_pos;
        j["under_pos"] = mv->under_pos;
        j["chord_first"] = mv->chord_first;
        j["chord_second"] = mv->chord_second;
        j["sign_first"] = mv->sign_first;
        j["antiparallel"] = mv->antiparallel;
    } else if (const auto* mv = std::get_if<R3Move>(&move)) {
        j["pos1"] = mv->pos1;
        j["pos2"] = mv->pos2;
        j["pos3"] = mv->pos3;
    } else if (const auto* mv = std::get_if<FOverSwapMove>(&move)) {
        j["pos"] = mv->pos;
    } else if (const auto* mv = std::get_if<FPlusAddMove>(&move)) {
        j["chord"] = mv->chord;
        j["end"] = mv->end == End::Tail ? "tail" : "head";
        j["under_pos"] = mv->under_pos;
        j["sign"] = mv->sign;
    } else if (const auto* mv = std::get_if<FPlusRemoveMove>(&move)) {
        j["chord"] = mv->chord;
        j["end"] = mv->end == End::Tail ? "tail" : "head";
        j["under_pos"] = mv->under_pos;
        j["sign"] = mv->sign;
    } else if (const auto* mv = std::get_if<CrossingChangeMove>(&move)) {
        j["chord"] = mv->chord;
    } else if (const auto* mv = std::get_if<VirtualizeMove>(&move)) {
        j["chord"] = mv->chord;
    }
    return j;
}

inline Move move_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    auto role_of = [&](const json& v) {
        const std::string s = v.get<std::string>();
        if (s == "O") return Role::Over;
        if (s == "U") return Role::Under;
        throw Error(ErrorCode::BadInput, "first_role must be \"O\" or \"U\"");
    };
    auto end_of = [&](const json& v) {
        const std::string s = v.get<std::string>();
        if (s == "tail") return End::Tail;
        if (s == "head") return End::Head;
        throw Error(ErrorCode::BadInput, "end must be \"tail\" or \"head\"");
    };
    if (kind == "R1Add") {
        return R1AddMove{j.at("pos").get<std::size_t>(), j.at("chord").get<int>(),
                         role_of(j.at("first_role")), j.at("sign").get<int>()};
    }
    if (kind == "R1Remove") {
        return R1RemoveMove{j.at("pos").get<std::size_t>(), j.at("chord").get<int>(),
                            role_of(j.at("first_role")), j.at("sign").get<int>()};
    }
    if (kind == "R2Add") {
        return R2AddMove{j.at("over_gap").get<std::size_t>(),  j.at("under_gap").get<std::size_t>(),
                         j.at("over_site_first").get<bool>(),  j.at("chord_first").get<int>(),
                         j.at("chord_second").get<int>(),      j.at("sign_first").get<int>(),
                         j.at("antiparallel").get<bool>()};
    }
    if (kind == "R2Remove") {
        return R2RemoveMove{j.at("over_pos").get<std::size_t>(), j.at("under_pos").get<std::size_t>(),
                            j.at("chord_first").get<int>(),      j.at("chord_second").get<int>(),
                            j.at("sign_first").get<int>(),       j.at("antiparallel").get<bool>()};
    }
    if (kind == "R3") {
        return R3Move{j.at("pos1").get<std::size_t>(), j.at("pos2").get<std::size_t>(),
                      j.at("pos3").get<std::size_t>()};
    }
    if (kind == "FOverSwap") {
        return FOverSwapMove{j.at("pos").get<std::size_t>()};
    }
    if (kind == "FPlusAdd") {
        return FPlusAddMove{j.at("chord").get<int>(), end_of(j.at("end")),
                            j.at("under_pos").get<std::size_t>(), j.at("sign").get<int>()};
    }
    if (kind == "FPlusRemove") {
        return FPlusRemoveMove{j.at("chord").get<int>(), end_of(j.at("end")),
                               j.at("under_pos").get<std::size_t>(), j.at("sign").get<int>()};
    }
    if (kind == "CrossingChange") {
        return CrossingChangeMove{j.at("chord").get<int>()};
    }
    if (kind == "Virtualize") {
        return VirtualizeMove{j.at("chord").get<int>()};
    }
    throw Error(ErrorCode::BadInput, "unknown move kind " + kind);
}

// --- certificates ----------------------------------------------------------

inline json certificate_to_json(const Certificate& cert) {
    json steps = json::array();
    for (const CertificateStep& step : cert.steps) {
        steps.push_back({{"move", move_to_json(step.move)}, {"key", step.key}});
    }
    return json{{"start", serialize_code(cert.start)},
                {"steps", std::move(steps)},
                {"flags",
                 {{"uses_crossing_change", cert.uses_crossing_change},
                  {"uses_virtualization", cert.uses_virtualization}}}};
}

inline Certificate certificate_from_json(const json& j) {
    Certificate cert;
    cert.start = code_from_json(j.at("start"));
    for (const json& s : j.at("steps")) {
        cert.steps.push_back({move_from_json(s.at("move")), s.at("key").get<std::string>()});
    }
    const json& flags = j.at("flags");
    cert.uses_crossing_change = flags.at("uses_crossing_change").get<bool>();
    cert.uses_virtualization = flags.at("uses_virtualization").get<bool>();
    return cert;
}

// --- reports & results -----------------------------------------------------

inline json report_to_json(const InvariantReport& r) {
    json j;
    j["cr"] = r.cr;
    j["d_at"] = r.d_at;
    j["d"] = r.d;
    j["d_rev"] = r.d_rev;
    j["alternating"] = r.alternating;
    j["descending"] = r.descending;
    j["bound_warping"] = r.bound_warping;
    if (r.bound_half_cr) {
        j["bound_half_cr"] = *r.bound_half_cr;
    } else {
        j["bound_half_cr"] = nullptr;
    }
    return j;
}

inline json verdict_to_json(const TrivialityVerdict& v) {
    json j;
    j["status"] = v.trivial() ? "trivial" : "unknown";
    j["nodes"] = v.nodes_generated;
    if (v.certificate) j["certificate"] = certificate_to_json(*v.certificate);
    return j;
}

inline json unknot_result_to_json(const UnknotResult& r) {
    json j;
    j["op"] = to_string(r.op);
    j["status"] = r.found ? "found" : "unknown";
    j["exhaustive_below"] = r.exhaustive_below;
    j["budget"] = {{"max_nodes", r.budget.max_nodes},
                   {"max_depth", r.budget.max_depth},
                   {"max_chords", r.budget.max_chords}};
    if (r.found) {
        j["upper_bound"] = r.upper_bound;
        j["modified_chords"] = r.modified_chords;
        j["orientation"] = r.used_reverse_orientation ? "reverse" : "forward";
        if (r.certificate) j["certificate"] = certificate_to_json(*r.certificate);
    }
    return j;
}

inline json verify_result_to_json(const VerifyResult& r) {
    json j;
    j["ok"] = r.ok();
    if (r.ok()) {
        j["final"] = serialize_code(r.final_code);
        j["crossing_changes"] = r.crossing_changes;
        j["virtualizations"] = r.virtualizations;
        j["relation"] = r.relation();
    } else {
        j["error"] = to_string(r.status);
        j["step"] = r.step_index;
        if (r.status == VerifyResult::Status::StepIllegal) j["reason"] = to_string(r.reason);
        j["detail"] = r.detail;
    }
    return j;
}

inline json closure_to_json(const ClosureData& c) {
    return json{{"cyclic_d", c.cyclic_d}, {"monotone_closure", c.monotone_closure}};
}

// --- input files -----------------------------------------------------------

struct InputRecord {
    std::size_t line = 0;  // 1-based source line (or array index + 1 for JSON)
    GaussCode code;
};

struct InputIssue {
    std::size_t line = 0;
    ErrorCode code = ErrorCode::BadInput;
    std::string detail;
};

struct ParsedInput {
    std::vector<InputRecord> records;
    std::vector<InputIssue> issues;
};

// Accepts one code per line in text format, or a JSON array of code strings
// / {"passages": [...]} objects. Blank lines are skipped.
inline ParsedInput parse_input_codes(const std::string& text) {
    ParsedInput out;
    std::size_t first_printable = text.find_first_not_of(" \t\r\n");
    if (first_printable != std::string::npos && text[first_printable] == '[') {
        json arr = json::parse(text, nullptr, false);
        if (arr.is_discarded() || !arr.is_array()) {
            out.issues.push_back({1, ErrorCode::BadInput, "input is not a JSON array"});
            return out;
        }
        for (std::size_t i = 0; i < arr.size(); ++i) {
            try {
                out.records.push_back({i + 1, code_from_json(arr[i])});
            } catch (const Error& e) {
                out.issues.push_back({i + 1, e.code(), e.what()});
            }
        }
        return out;
    }
    std::size_t line_no = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        const std::string line = text.substr(
            begin, end == std::string::npos ? std::string::npos : end - begin);
        ++line_no;
        bool blank = true;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        }
        if (!blank) {
            try {
                out.records.push_back({line_no, parse_code(line)});
            } catch (const Error& e) {
                out.issues.push_back({line_no, e.code(), e.what()});
            }
        }
        if (end == std::string::npos) break;
        begin = end + 1;
    }
    return out;
}

}  // namespace knotoid
