#include <random>

#include <benchmark/benchmark.h>

#include "adapta/activity.hpp"
#include "adapta/adaptation.hpp"
#include "adapta/analytics.hpp"
#include "adapta/evaluation_data.hpp"
#include "adapta/gesture.hpp"
#include "adapta/skeleton.hpp"
#include "adapta/ueq.hpp"

namespace {

using namespace adapta;

SkeletonFrame standingFrame(std::int64_t t, double leftHandY, double rightHandY) {
    SkeletonFrame f;
    f.timestampMs = t;
    for (std::size_t j = 0; j < kJointCount; ++j) f.joints[j] = JointPosition{0.0, 0.0, 2.0};
    f.set(JointId::Head, {0.0, 0.6, 2.0});
    f.set(JointId::ShoulderLeft, {-0.2, 0.4, 2.0});
    f.set(JointId::ShoulderRight, {0.2, 0.4, 2.0});
    f.set(JointId::HandLeft, {-0.3, leftHandY, 2.0});
    f.set(JointId::HandRight, {0.3, rightHandY, 2.0});
    return f;
}

Trace randomTrace(std::size_t frames, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> y(0.0, 1.0);
    std::uniform_int_distribution<int> dt(10, 400);
    Trace trace;
    std::int64_t t = 0;
    for (std::size_t i = 0; i < frames; ++i) {
        t += dt(rng);
        trace.frames.push_back(standingFrame(t, y(rng), y(rng)));
    }
    return trace;
}

void BM_DeriveConfig(benchmark::State& state) {
    const std::vector<RuleInput> inputs = {
        {Disability::Visual, ArmMobility::bothArms(Side::Right), Posture::Standing},
        {Disability::Physical, ArmMobility::leftArmOnly(), Posture::Seated},
        {Disability::Autism, ArmMobility::rightArmOnly(), Posture::Standing},
        {Disability::Hearing, ArmMobility::bothArms(Side::Left), Posture::Seated},
    };
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(deriveConfig(inputs[i++ % inputs.size()]));
    }
}
BENCHMARK(BM_DeriveConfig);

void BM_RecognizeTrace(benchmark::State& state) {
    const auto trace = randomTrace(static_cast<std::size_t>(state.range(0)), 7);
    const auto defs = defaultGestures();
    for (auto _ : state) {
        benchmark::DoNotOptimize(recognizeTrace(trace, defs));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RecognizeTrace)->Arg(200)->Arg(5000);

void BM_DescriptiveStats(benchmark::State& state) {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> d(1.0, 60.0);
    std::vector<double> values(static_cast<std::size_t>(state.range(0)));
    for (auto& v : values) v = d(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(descriptiveStats(values));
    }
}
BENCHMARK(BM_DescriptiveStats)->Arg(30)->Arg(10000);

void BM_Table4(benchmark::State& state) {
    const auto logs = evaluation::publishedLogs();
    for (auto _ : state) {
        benchmark::DoNotOptimize(userTimeStats(logs, 1));
        benchmark::DoNotOptimize(userTimeStats(logs, 2));
    }
}
BENCHMARK(BM_Table4);

void BM_ApplyInput(benchmark::State& state) {
    const UserProfile profile{"p", "Bench", 10, Sex::F, LateralityProblem::CannotRecognizeRight, Disability::Hearing};
    const DeviceInteractionModel device;
    const auto start = startActivity(profile, device, ActivitySpec{ConceptAssociation{Topic::Animals}});
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    ActivityState s = start.state;
    std::int64_t t = 0;
    for (auto _ : state) {
        t += 33;
        auto step = applyInput(s, start.config, CursorMoved{unit(rng), unit(rng), t});
        s = step.state.phase == ActivityPhase::Done ? start.state : std::move(step.state);
        if (s.lastInputMs && *s.lastInputMs > t) t = *s.lastInputMs;
        if (!s.lastInputMs) t = 0;
    }
}
BENCHMARK(BM_ApplyInput);

void BM_UeqPipeline(benchmark::State& state) {
    const auto& responses = evaluation::publishedUeqResponses();
    for (auto _ : state) {
        benchmark::DoNotOptimize(aggregateScales(responses));
    }
}
BENCHMARK(BM_UeqPipeline);

}  // namespace

BENCHMARK_MAIN();
