#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adapta/activity.hpp"
#include "adapta/codec.hpp"

namespace testsupport {

using namespace adapta;

struct ActivityVariant {
    std::string name;
    ProfileRecord record;
    ActivitySpec spec;
};

/// One concept and one laterality activity for each disability.
std::vector<ActivityVariant> activityVariants();

struct PropertyReport {
    std::size_t sequences = 0;
    std::size_t inputs = 0;
    std::size_t completedRepetitions = 0;
    std::size_t negatives = 0;
    std::size_t finishedRuns = 0;
    std::vector<std::string> failures;  // first few only

    bool ok() const { return failures.empty(); }
};

/// Drives the engine with random input sequences (biased toward the scene's
/// elements so that repetitions actually complete) and checks determinism,
/// feedback accounting, modality, laterality monotonicity and the state
/// invariants after every step.
PropertyReport checkActivityProperties(const ActivityVariant& variant, std::uint32_t seed, int sequences);

}  // namespace testsupport
