#include "activity_properties.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "test_support.hpp"

namespace testsupport {

std::vector<ActivityVariant> activityVariants() {
    const ActivitySpec animals{ConceptAssociation{Topic::Animals}};
    const ActivitySpec vehicles{ConceptAssociation{Topic::Vehicles}};
    const auto visual = visualStudent();
    const auto hearing = hearingStudent();
    const auto physical = physicalStudent(Posture::Seated, ArmMobility::leftArmOnly());
    const auto autism = autismStudent();
    return {
        {"visual/concept", visual, animals},
        {"visual/laterality", visual, lateralitySpecFor(visual)},
        {"hearing/concept", hearing, vehicles},
        {"hearing/laterality", hearing, lateralitySpecFor(hearing)},
        {"physical/concept", physical, animals},
        {"physical/laterality", physical, lateralitySpecFor(physical)},
        {"autism/concept", autism, vehicles},
        {"autism/laterality", autism, lateralitySpecFor(autism)},
    };
}

namespace {

struct Run {
    std::vector<FeedbackEvent> events;
    std::vector<RepetitionResult> results;
    ActivityState finalState;
};

class Checker {
public:
    Checker(PropertyReport& report, const std::string& variant, std::size_t sequence)
        : report_(report), variant_(variant), sequence_(sequence) {}

    void fail(const std::string& what) {
        ok_ = false;
        if (report_.failures.size() < 10) {
            std::ostringstream os;
            os << variant_ << " sequence " << sequence_ << ": " << what;
            report_.failures.push_back(os.str());
        }
    }

    void expect(bool condition, const std::string& what) {
        if (!condition) fail(what);
    }

    bool ok() const { return ok_; }

private:
    PropertyReport& report_;
    std::string variant_;
    std::size_t sequence_;
    bool ok_ = true;
};

ActivityInput randomInput(std::mt19937& rng, const ActivityState& s, std::int64_t t) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = unit(rng);
    if (r < 0.1) return Tick{t};
    if (r < 0.25) {
        return GestureRecognized{unit(rng) < 0.5 ? GestureId::RaiseLeftArm : GestureId::RaiseRightArm, t};
    }
    if (r < 0.4) return CursorMoved{-0.2 + 1.4 * unit(rng), -0.2 + 1.4 * unit(rng), t};
    if (r < 0.55 || s.elements.empty()) return CursorMoved{0.5, 0.95, t};
    std::uniform_int_distribution<std::size_t> pick(0, s.elements.size() - 1);
    const auto& e = s.elements[pick(rng)];
    const double jitter = 0.05;
    return CursorMoved{e.u + jitter * (unit(rng) - 0.5), e.v + jitter * (unit(rng) - 0.5), t};
}

void checkState(Checker& c, const ActivityState& s, const ActivityConfig& config) {
    c.expect(s.repetitionIndex >= 1 && s.repetitionIndex <= s.spec.repetitions, "repetitionIndex out of range");
    c.expect(s.completedRepetitions <= s.spec.repetitions, "too many completed repetitions");
    c.expect(s.errorsThisRepetition >= 0, "negative error count");
    c.expect(!s.dragging || config.interactionMode == InteractionMode::DragAndDrop, "dragging outside drag-and-drop");
    for (const auto& e : s.elements) {
        c.expect(e.u >= 0.0 && e.u <= 1.0 && e.v >= 0.0 && e.v <= 1.0, "element " + e.id + " off screen");
        c.expect(e.radius > 0.0, "element " + e.id + " has no radius");
        const bool wantsPictogram =
            config.showPictograms && (e.role == ElementRole::Option || e.role == ElementRole::Target);
        c.expect(e.pictogramId.has_value() == wantsPictogram, "pictogram presence wrong on " + e.id);
    }
}

Run drive(Checker& c, const ActivityStart& start, const std::vector<ActivityInput>& inputs) {
    Run run;
    run.events = start.events;
    ActivityState state = start.state;
    for (const auto& in : inputs) {
        if (state.phase == ActivityPhase::Done) break;
        try {
            auto step = applyInput(state, start.config, in);
            run.events.insert(run.events.end(), step.events.begin(), step.events.end());
            if (step.completed) run.results.push_back(*step.completed);
            state = std::move(step.state);
        } catch (const std::exception& e) {
            c.fail(std::string("engine threw: ") + e.what());
            break;
        }
    }
    run.finalState = state;
    return run;
}

}  // namespace

PropertyReport checkActivityProperties(const ActivityVariant& variant, std::uint32_t seed, int sequences) {
    PropertyReport report;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> lengthDist(1, 400);
    std::uniform_int_distribution<std::int64_t> gap(0, 1500);
    const std::vector<int> repetitionChoices = {1, 2, 3, 10};
    std::uniform_int_distribution<std::size_t> pickReps(0, repetitionChoices.size() - 1);

    const auto* lat = std::get_if<Laterality>(&variant.spec.kind);
    const double towards = lat && lat->side == Side::Left ? -1.0 : 1.0;

    for (int n = 0; n < sequences; ++n) {
        Checker c(report, variant.name, static_cast<std::size_t>(n));
        ActivitySpec spec = variant.spec;
        spec.repetitions = repetitionChoices[pickReps(rng)];
        const auto start = startActivity(variant.record.profile, variant.record.device, spec);
        const auto& config = start.config;

        c.expect(start.events.size() == 2 && start.events[0].kind == FeedbackKind::Instructions &&
                     start.events[0].modalities == config.instructionModality &&
                     start.events[1].kind == FeedbackKind::SceneChanged,
                 "start must emit Instructions then SceneChanged");

        // Generate the sequence while stepping, so inputs can aim at the live scene.
        std::vector<ActivityInput> inputs;
        ActivityState state = start.state;
        std::int64_t t = 0;
        const int length = lengthDist(rng);
        std::vector<int> negativesPerRep;
        int negatives = 0;
        int positives = 0;
        std::vector<RepetitionResult> results;
        double lastBall = 0.5;
        double lastBasket = -1.0;

        checkState(c, state, config);
        for (int i = 0; i < length && state.phase != ActivityPhase::Done && c.ok(); ++i) {
            t += gap(rng);
            const ActivityInput in = randomInput(rng, state, t);
            inputs.push_back(in);
            ActivityStep step;
            try {
                step = applyInput(state, config, in);
            } catch (const std::exception& e) {
                c.fail(std::string("engine threw: ") + e.what());
                break;
            }

            if (std::holds_alternative<Tick>(in) && state.phase == ActivityPhase::AwaitingInput) {
                ActivityState before = state;
                before.lastInputMs = step.state.lastInputMs;
                c.expect(step.events.empty() && step.state == before, "idle tick changed the activity");
            }

            for (const auto& e : step.events) {
                if (e.kind == FeedbackKind::Positive || e.kind == FeedbackKind::Negative) {
                    c.expect(e.modalities == config.feedbackModality, "feedback modality differs from config");
                }
                if (e.kind == FeedbackKind::Negative) ++negatives;
                if (e.kind == FeedbackKind::Positive) ++positives;
            }
            if (step.completed) {
                const auto& r = *step.completed;
                c.expect(r.errors == negatives, "repetition errors differ from Negative events");
                c.expect(r.durationSeconds >= 0, "negative duration");
                c.expect(r.repetitionIndex == static_cast<int>(results.size()) + 1, "repetitions out of order");
                results.push_back(r);
                negatives = 0;
                report.negatives += static_cast<std::size_t>(r.errors);
            }
            c.expect(positives == static_cast<int>(results.size()), "Positive events differ from completions");

            if (lat) {
                const auto* ball = step.state.element("ball");
                const auto* basket = step.state.element("basket");
                c.expect(ball != nullptr, "laterality scene lost its ball");
                if (ball) {
                    c.expect(ball->u >= 0.0 && ball->u <= 1.0, "ball left the screen");
                    const bool newRepetition = step.completed.has_value();
                    if (config.interactionMode != InteractionMode::DragAndDrop && !newRepetition) {
                        c.expect((ball->u - lastBall) * towards >= -1e-12, "ball moved away from the trained side");
                    }
                    lastBall = ball->u;
                }
                if (basket) {
                    if (lastBasket >= 0.0) {
                        c.expect((basket->u - lastBasket) * towards >= -1e-12, "basket moved away from the trained side");
                    }
                    lastBasket = basket->u;
                }
            }
            state = std::move(step.state);
            checkState(c, state, config);
        }

        c.expect(state.completedRepetitions == static_cast<int>(results.size()), "completed count mismatch");
        if (state.phase == ActivityPhase::Done) {
            ++report.finishedRuns;
            c.expect(static_cast<int>(results.size()) == spec.repetitions, "Done before every repetition");
            bool threw = false;
            try {
                applyInput(state, config, Tick{t + 1});
            } catch (const ActivityError& e) {
                threw = e.kind() == ActivityError::Kind::InputAfterDone;
            }
            c.expect(threw, "Done is not absorbing");
        }

        // Determinism: a second run over the recorded inputs agrees exactly.
        const auto again = startActivity(variant.record.profile, variant.record.device, spec);
        const auto first = drive(c, start, inputs);
        const auto second = drive(c, again, inputs);
        c.expect(first.events == second.events && first.results == second.results && first.finalState == second.finalState,
                 "replaying the same inputs diverged");
        c.expect(first.finalState == state && first.results == results, "recorded run differs from the live run");

        ++report.sequences;
        report.inputs += inputs.size();
        report.completedRepetitions += results.size();
    }
    return report;
}

}  // namespace testsupport
