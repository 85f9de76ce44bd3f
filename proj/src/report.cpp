#include "liftq/report.hpp"

#include <algorithm>
#include <ostream>

#include <nlohmann/json.hpp>

namespace liftq {

void Report::pass(std::string law, std::string ref, std::string budget) {
    add(Verdict{std::move(law), std::move(ref), true, "", std::move(budget)});
}

void Report::fail(std::string law, std::string ref, std::string budget, std::string witness) {
    add(Verdict{std::move(law), std::move(ref), false, std::move(witness), std::move(budget)});
}

void Report::law(std::string law, std::string ref, std::string budget,
                 const std::optional<Violation>& v) {
    if (v)
        fail(std::move(law), std::move(ref), std::move(budget), v->law + ": " + v->witness);
    else
        pass(std::move(law), std::move(ref), std::move(budget));
}

bool Report::all_pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const Verdict& v) { return v.pass; });
}

void Report::print(std::ostream& os) const {
    os << "== " << command << " ==\n";
    for (const auto& v : verdicts) {
        os << (v.pass ? "PASS" : "FAIL") << "  " << v.law;
        if (!v.ref.empty()) os << "  [" << v.ref << "]";
        if (!v.budget.empty()) os << "  over " << v.budget;
        os << "\n";
        if (!v.pass) os << "      witness: " << v.witness << "\n";
    }
    os << (all_pass() ? "RESULT pass" : "RESULT fail") << "  (" << verdicts.size()
       << " laws, input digest " << input_digest << ")\n";
}

std::string Report::to_json_records() const {
    std::string out;
    for (const auto& v : verdicts) {
        nlohmann::json rec{{"command", command},
                           {"input_digest", input_digest},
                           {"law", v.law},
                           {"ref", v.ref},
                           {"pass", v.pass},
                           {"witness", v.witness},
                           {"budget", v.budget}};
        out += rec.dump();
        out += "\n";
    }
    return out;
}

}  // namespace liftq
