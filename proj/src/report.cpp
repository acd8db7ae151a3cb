#include "bcdaha/report.hpp"

#include <sstream>

namespace bcd {

nlohmann::json rational_json(const Rational& r) { return rat_to_string(r); }

namespace {
Rational rational_from(const nlohmann::json& j, const std::string& field) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("field " + field + " must be a rational string \"a/b\"");
}
}  // namespace

FunctorParams params_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("parameter document must be a JSON object");
    for (const char* field : {"p", "q", "n", "mu", "nvec", "xi", "nu"})
        if (!j.contains(field))
            throw std::invalid_argument(std::string("missing field: ") + field);
    FunctorParams p;
    p.p = j.at("p").get<long>();
    p.q = j.at("q").get<long>();
    p.n = j.at("n").get<long>();
    p.mu = rational_from(j.at("mu"), "mu");
    for (const auto& v : j.at("nvec")) p.nvec.push_back(v.get<long>());
    for (const auto& v : j.at("xi")) p.xi.push_back(v.get<long>());
    for (const auto& v : j.at("nu")) p.nu.push_back(rational_from(v, "nu"));
    p.check_well_formed();
    return p;
}

nlohmann::json params_to_json(const FunctorParams& p) {
    nlohmann::json j;
    j["p"] = p.p;
    j["q"] = p.q;
    j["n"] = p.n;
    j["mu"] = rational_json(p.mu);
    j["nvec"] = p.nvec;
    j["xi"] = p.xi;
    nlohmann::json nu = nlohmann::json::array();
    for (const auto& v : p.nu) nu.push_back(rational_json(v));
    j["nu"] = nu;
    return j;
}

nlohmann::json spectrum_json(const std::vector<std::pair<Rational, long>>& spectrum) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [value, mult] : spectrum) {
        nlohmann::json e;
        e["value"] = rational_json(value);
        e["multiplicity"] = mult;
        arr.push_back(e);
    }
    return arr;
}

nlohmann::json verify_report_json(const VerifyReport& report) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : report.relations) {
        nlohmann::json e;
        e["relation"] = r.name;
        e["pass"] = r.pass;
        if (!r.pass) e["max_violation"] = rational_json(r.max_violation);
        arr.push_back(e);
    }
    nlohmann::json j;
    j["all_pass"] = report.all_pass;
    j["relations"] = arr;
    return j;
}

nlohmann::json RunReport::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["params"] = params;
    j["results"] = results;
    j["discrepancies"] = discrepancies;
    j["status"] = pass() ? "pass" : "fail";
    j["timing_ms"] = timingMs;
    return j;
}

std::string RunReport::to_text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    if (!params.empty()) os << "params: " << params.dump() << "\n";
    os << "results: " << results.dump(2) << "\n";
    for (const auto& d : discrepancies) os << "discrepancy: " << d << "\n";
    os << "status: " << (pass() ? "pass" : "fail") << " (" << timingMs << " ms)\n";
    return os.str();
}

}  // namespace bcd
