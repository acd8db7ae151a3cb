#pragma once

// JSON wire formats: parameter files, run reports, spectra. Reports use
// alphabetically ordered keys and string-encoded rationals so that emitted
// documents re-parse and re-serialize byte-identically.

#include "bcdaha/functor_params.hpp"
#include "bcdaha/presentation.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace bcd {

inline constexpr int kExitPass = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitRejected = 2;
inline constexpr int kExitGuardrail = 3;

nlohmann::json rational_json(const Rational& r);
FunctorParams params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const FunctorParams& p);

nlohmann::json spectrum_json(const std::vector<std::pair<Rational, long>>& spectrum);
nlohmann::json verify_report_json(const VerifyReport& report);

struct RunReport {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::vector<std::string> discrepancies;
    long timingMs = 0;

    bool pass() const { return discrepancies.empty(); }
    nlohmann::json to_json() const;
    std::string to_text() const;
};

}  // namespace bcd
