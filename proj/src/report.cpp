#include "yangcheck/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace yangcheck {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Inconclusive: return "inconclusive";
        case CheckStatus::NotApplicable: return "n/a";
    }
    return "?";
}

namespace {

CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::Pass;
    if (s == "fail") return CheckStatus::Fail;
    if (s == "inconclusive") return CheckStatus::Inconclusive;
    if (s == "n/a") return CheckStatus::NotApplicable;
    throw std::invalid_argument("unknown check status: " + s);
}

}  // namespace

std::size_t VerificationReport::count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (c.status == s) ++n;
    return n;
}

bool VerificationReport::all_passed() const {
    return count(CheckStatus::Pass) == checks.size();
}

int VerificationReport::exit_code() const {
    if (count(CheckStatus::Fail) > 0) return 1;
    if (count(CheckStatus::Inconclusive) > 0) return 2;
    return 0;
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) j["params"][k] = v;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["status"] = to_string(c.status);
        e["details"] = c.details;
        e["elapsed_ms"] = c.elapsed_ms;
        j["checks"].push_back(std::move(e));
    }
    nlohmann::ordered_json summary;
    summary["pass"] = count(CheckStatus::Pass);
    summary["fail"] = count(CheckStatus::Fail);
    summary["inconclusive"] = count(CheckStatus::Inconclusive);
    summary["n/a"] = count(CheckStatus::NotApplicable);
    j["summary"] = std::move(summary);
    return j.dump(2);
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "== " << command << " ==\n";
    for (const auto& [k, v] : params) out << "  " << k << " = " << v << "\n";
    for (const auto& c : checks) {
        out << "  [" << to_string(c.status) << "] " << c.name;
        if (c.elapsed_ms > 0) out << " (" << c.elapsed_ms << " ms)";
        out << "\n";
        if (!c.details.empty()) {
            std::istringstream lines(c.details);
            std::string line;
            while (std::getline(lines, line)) out << "      " << line << "\n";
        }
    }
    out << "  summary: " << count(CheckStatus::Pass) << " pass, " << count(CheckStatus::Fail)
        << " fail, " << count(CheckStatus::Inconclusive) << " inconclusive, "
        << count(CheckStatus::NotApplicable) << " n/a\n";
    return out.str();
}

VerificationReport VerificationReport::from_json(const std::string& text) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
    VerificationReport r;
    r.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("params").items())
        r.params[k] = v.get<std::string>();
    for (const auto& e : j.at("checks")) {
        CheckResult c;
        c.name = e.at("name").get<std::string>();
        c.status = status_from_string(e.at("status").get<std::string>());
        c.details = e.at("details").get<std::string>();
        c.elapsed_ms = e.at("elapsed_ms").get<long long>();
        r.checks.push_back(std::move(c));
    }
    return r;
}

}  // namespace yangcheck
