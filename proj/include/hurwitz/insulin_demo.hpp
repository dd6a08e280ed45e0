#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/lift_family.hpp"
#include "hurwitz/positive_systems.hpp"

namespace hurwitz {

struct DemoStage {
    int index = 0;
    std::string name;
    enum class Status { Pass, Fail, Skipped } status = Status::Pass;
    std::string detail;
};

struct InsulinDemoOptions {
    std::size_t family_count = 500;
    std::uint64_t seed = 0;
};

struct InsulinDemoReport {
    std::vector<DemoStage> stages;
    std::optional<Matrix> b6;
    std::optional<FamilyReport> family;
    std::optional<Equilibrium> equilibrium;  // exact
    std::vector<double> equilibrium_float;

    bool ok() const;
    /// First failing stage, if any.
    const DemoStage* failure() const;
};

/// End-to-end insulin pipeline over `a7_json` (the bundled text unless the
/// caller substitutes another file):
///   1. load and reduce A7, check B6 against A6 with (6,6) = -23158/13875
///   2. rebuild A7 from B6 with the nominal fiber parameters
///   3. sample the restricted family and certify every member (skipped for count 0)
///   4. certify A7 and solve x_bar = -A7^{-1} b for the default input
/// Stops at the first failing stage.
InsulinDemoReport run_insulin_demo(std::string_view a7_json, const InsulinDemoOptions& options);

}  // namespace hurwitz
