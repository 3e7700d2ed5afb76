#include "powdiag/serialize.hpp"

#include <sstream>

namespace powdiag::io {

namespace {

std::string power_string(Prime p, std::uint32_t n) { return std::to_string(p.value()) + "^" + std::to_string(n); }

Json rationals(const std::vector<Rational>& rs) {
    Json a = Json::array();
    for (const auto& r : rs) a.push_back(format_rational(r));
    return a;
}

std::string csv_cell(const Json& v) {
    std::string s;
    if (v.is_string()) s = v.get<std::string>();
    else if (v.is_null()) s = "";
    else s = v.dump();
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

std::string csv_table(const Json& arr, const std::string& column) {
    std::ostringstream out;
    if (!arr.empty() && arr.front().is_object()) {
        std::vector<std::string> keys;
        for (auto it = arr.front().begin(); it != arr.front().end(); ++it) keys.push_back(it.key());
        for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << csv_cell(keys[i]);
        out << '\n';
        for (const auto& row : arr) {
            for (std::size_t i = 0; i < keys.size(); ++i) {
                out << (i ? "," : "") << csv_cell(row.contains(keys[i]) ? row.at(keys[i]) : Json());
            }
            out << '\n';
        }
        return out.str();
    }
    out << csv_cell(column) << '\n';
    for (const auto& v : arr) out << csv_cell(v) << '\n';
    return out.str();
}

}  // namespace

Json to_json(const JointSolution& sol) {
    return Json{{"value", format_integer(sol.value)}, {"p_side", sol.p_side.to_string()}, {"q_side", sol.q_side.to_string()}};
}

Json to_json(const std::vector<JointSolution>& sols) {
    Json a = Json::array();
    for (const auto& s : sols) a.push_back(to_json(s));
    return a;
}

Json to_json(const PowerSet& set) {
    Json j{{"base", set.base.value()}, {"powers", set.to_strings()}};
    auto m = set.max_exponent();
    j["max"] = m ? Json(power_string(set.base, *m)) : Json();
    return j;
}

Json to_json(const std::set<BigInt>& values) {
    Json a = Json::array();
    for (const auto& v : values) a.push_back(format_integer(v));
    return a;
}

Json to_json(const WeightTable& table) {
    Json entries = Json::array();
    for (std::uint32_t n = 0; n <= table.max_domain_exponent(); ++n) {
        const auto& e = table.entry(n);
        entries.push_back({{"power", power_string(table.p(), n)}, {"weight", format_rational(e.weight)}, {"min_s", e.min_s}});
    }
    return Json{{"p", table.p().value()},     {"q", table.q().value()},
                {"s_max", table.s_max()},     {"max_exp", table.max_exp()},
                {"entries", std::move(entries)}};
}

WeightTable weight_table_from_json(const Json& j) {
    try {
        const Prime p(j.at("p").get<std::uint64_t>()), q(j.at("q").get<std::uint64_t>());
        const auto s_max = j.at("s_max").get<std::uint32_t>();
        const auto max_exp = j.at("max_exp").get<std::uint32_t>();
        const auto& entries = j.at("entries");
        if (s_max < 1 || entries.empty()) throw PreconditionError("weight table: empty table");
        std::vector<std::uint32_t> fmax(s_max, 0);
        for (std::size_t n = 0; n < entries.size(); ++n) {
            const auto& e = entries[n];
            if (e.at("power").get<std::string>() != power_string(p, static_cast<std::uint32_t>(n))) {
                throw PreconditionError("weight table: entries must list consecutive powers from exponent 0");
            }
            const auto s = e.at("min_s").get<std::uint32_t>();
            if (s < 1 || s > s_max) throw PreconditionError("weight table: min_s out of range");
            for (std::uint32_t t = s; t <= s_max; ++t) fmax[t - 1] = static_cast<std::uint32_t>(n);
        }
        WeightTable table(p, q, s_max, max_exp, std::move(fmax));
        if (to_json(table) != j) throw PreconditionError("weight table: entries are inconsistent with their min_s");
        return table;
    } catch (const Json::exception& e) {
        throw PreconditionError(std::string("weight table: ") + e.what());
    }
}

JointSolution solution_from_json(const Json& j, Prime p, Prime q) {
    try {
        JointSolution sol{SignedPowerSum::parse(p, j.at("p_side").get<std::string>()),
                          SignedPowerSum::parse(q, j.at("q_side").get<std::string>()),
                          parse_integer(j.at("value").get<std::string>())};
        if (eval(sol.p_side) != sol.value || eval(sol.q_side) != sol.value) {
            throw PreconditionError("solution record: sides do not evaluate to " + format_integer(sol.value));
        }
        return sol;
    } catch (const Json::exception& e) {
        throw PreconditionError(std::string("solution record: ") + e.what());
    }
}

Json to_json(const NormBound& bound) {
    return Json{{"upper_bound", format_rational(bound.upper_bound)}, {"rep", bound.rep.to_string()}};
}

Json to_json(const WeightCheck& check) {
    return Json{{"passed", check.passed},
                {"s", check.s},
                {"threshold", format_rational(check.threshold)},
                {"p_total", format_rational(check.p_total)},
                {"q_total", format_rational(check.q_total)},
                {"p_margins", rationals(check.p_margins)},
                {"q_margins", rationals(check.q_margins)}};
}

Json to_json(const DiscretenessReport& report) {
    Json values = Json::array();
    for (const auto& v : report.values) values.push_back(format_integer(v));
    return Json{{"status", report.passed ? "PASS" : "FAIL"},
                {"p", report.p.value()},
                {"q", report.q.value()},
                {"s", report.s},
                {"max_exp", report.max_exp},
                {"solutions_checked", report.solutions_checked},
                {"values", std::move(values)},
                {"failures", to_json(report.failures)}};
}

Json to_json(const SaturationReport& report) {
    Json rows = Json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"max_exp", r.max_exp}, {"count", r.count}, {"added", to_json(r.added)}});
    }
    Json j{{"rows", std::move(rows)}};
    if (report.saturated) j["saturated"] = *report.saturated;
    return j;
}

Json to_json(const ConvergenceResult& result) {
    if (const auto* cert = std::get_if<ConvergenceCertificate>(&result)) {
        Json w = Json::array();
        for (const auto& r : cert->witnesses) w.push_back(r.to_string());
        return Json{{"status", "certificate"}, {"k", cert->k}, {"tail_start", cert->tail_start}, {"witnesses", std::move(w)}};
    }
    const auto& ref = std::get<ConvergenceRefusal>(result);
    return Json{{"status", "refusal"},
                {"index", ref.index},
                {"element", format_integer(ref.element)},
                {"min_terms", ref.min_terms_lower_bound},
                {"min_terms_exact", ref.min_terms_exact}};
}

Json to_json(const std::vector<std::pair<BigInt, BigInt>>& pairs) {
    Json a = Json::array();
    for (const auto& [x, y] : pairs) a.push_back({{"first", format_integer(x)}, {"second", format_integer(y)}});
    return a;
}

Json to_json(const AnnihilatorDerivation& derivation) {
    return Json{{"p", derivation.p.value()},
                {"q", derivation.q.value()},
                {"annihilator", derivation.annihilator_trivial ? Json::array({"0"}) : Json::array()},
                {"derivation", derivation.steps}};
}

Json to_json(const X1Witness& witness) {
    return Json{{"witness", "(" + format_integer(witness.u) + "," + format_integer(witness.v) + ")"},
                {"derivation", witness.derivation.steps}};
}

std::string to_csv(const Json& doc, const std::string& table_key) {
    if (!table_key.empty() && doc.is_object() && doc.contains(table_key) && doc.at(table_key).is_array()) {
        return csv_table(doc.at(table_key), table_key);
    }
    if (doc.is_array()) return csv_table(doc, "value");
    if (doc.is_object()) return csv_table(Json::array({doc}), "value");
    return csv_table(Json::array({doc}), "value");
}

std::string to_text(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace powdiag::io
