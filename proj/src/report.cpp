#include "chern/report.hpp"

#include <algorithm>

namespace chern {

bool all_pass(const Report& report) {
    return std::all_of(report.begin(), report.end(),
                       [](const IdentityCheck& c) { return c.pass; });
}

njson report_to_json(const Report& report) {
    njson out = njson::array();
    for (const auto& check : report) {
        out.push_back(njson{{"n", check.n},
                            {"identity", check.identity},
                            {"pass", check.pass},
                            {"lhs", combo_to_json(check.lhs)},
                            {"rhs", combo_to_json(check.rhs)}});
    }
    return out;
}

Report report_from_json(const njson& j) {
    Report out;
    for (const auto& entry : j) {
        out.push_back(IdentityCheck{entry.at("n").get<int>(),
                                    entry.at("identity").get<std::string>(),
                                    entry.at("pass").get<bool>(),
                                    combo_from_json(entry.at("lhs")),
                                    combo_from_json(entry.at("rhs"))});
    }
    return out;
}

}  // namespace chern
