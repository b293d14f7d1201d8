#include "support/report_json.hpp"

#include <json.hpp>

namespace tqft {

std::string report_to_json(const VerificationReport &rep) {
    nlohmann::json j;
    j["name"] = rep.name;
    j["passed"] = rep.passed();
    j["max_residual"] = rep.max_residual();
    j["checks"] = nlohmann::json::array();
    for (const auto &c : rep.checks) {
        nlohmann::json jc;
        jc["id"] = c.id;
        jc["residual"] = c.residual;
        jc["pass"] = c.pass;
        if (!c.detail.empty())
            jc["detail"] = c.detail;
        j["checks"].push_back(jc);
    }
    return j.dump(2);
}

} // namespace tqft
