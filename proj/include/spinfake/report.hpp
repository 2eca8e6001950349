/*
   Copyright 2026 The spinfake Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace spinfake {

/// Outcome of one verification routine; fail-soft, keeps the first discrepancy.
struct VerificationReport {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    bool passed = true;
    std::string first_discrepancy;
    long long cases = 0;

    VerificationReport() = default;
    VerificationReport(std::string name, nlohmann::json p = nlohmann::json::object())
        : check(std::move(name)), params(std::move(p)) {}

    /// Counts one case; records msg as the first discrepancy when ok is false.
    bool expect(bool ok, const std::string& msg) {
        ++cases;
        if (!ok && passed) {
            passed = false;
            first_discrepancy = msg;
        }
        return ok;
    }

    /// Folds a sub-report into this one.
    void absorb(const VerificationReport& sub) {
        cases += sub.cases;
        if (!sub.passed && passed) {
            passed = false;
            first_discrepancy = sub.check + ": " + sub.first_discrepancy;
        }
    }

    nlohmann::json to_json() const {
        nlohmann::json j = {{"check", check}, {"params", params},
                            {"status", passed ? "pass" : "fail"}, {"cases", cases}};
        if (!passed) j["first_discrepancy"] = first_discrepancy;
        return j;
    }
};

}  // namespace spinfake
