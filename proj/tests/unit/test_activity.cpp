#include <doctest.h>

#include <algorithm>

#include "activity_properties.hpp"
#include "adapta/activity.hpp"
#include "adapta/replay.hpp"
#include "test_support.hpp"

using namespace adapta;
using namespace testsupport;

namespace {

const ActivitySpec kAnimals{ConceptAssociation{Topic::Animals}};

std::vector<const SceneElement*> withRole(const ActivityState& s, ElementRole role) {
    std::vector<const SceneElement*> out;
    for (const auto& e : s.elements) {
        if (e.role == role) out.push_back(&e);
    }
    return out;
}

ActivityStart begin(const ProfileRecord& r, const ActivitySpec& spec) {
    return startActivity(r.profile, r.device, spec);
}

std::size_t count(const std::vector<FeedbackEvent>& events, FeedbackKind kind) {
    return static_cast<std::size_t>(
        std::count_if(events.begin(), events.end(), [&](const FeedbackEvent& e) { return e.kind == kind; }));
}

}  // namespace

TEST_CASE("visual concept association lays out three options") {
    const auto start = begin(visualStudent(), kAnimals);
    CHECK(start.config.backgroundStyle == BackgroundStyle::Black);
    CHECK(withRole(start.state, ElementRole::Option).size() == 3);
    CHECK(withRole(start.state, ElementRole::Prompt).size() == 1);
    REQUIRE(start.events.size() == 2);
    CHECK(start.events[0] == FeedbackEvent{FeedbackKind::Instructions, Modality::Audio, {}});
    CHECK(start.events[1].kind == FeedbackKind::SceneChanged);
    CHECK(start.state.element(start.state.promptTargetId) != nullptr);
}

TEST_CASE("gestures mode shows exactly two options, left and right") {
    const auto start = begin(hearingStudent(), kAnimals);
    const auto options = withRole(start.state, ElementRole::Option);
    REQUIRE(options.size() == 2);
    CHECK(options[0]->u == doctest::Approx(0.25));
    CHECK(options[1]->u == doctest::Approx(0.75));
    CHECK(start.events[0].modalities == Modality::Visual);
}

TEST_CASE("seated physical layout halves the offsets from the centre") {
    const auto standing = begin(physicalStudent(Posture::Standing), kAnimals);
    const auto seated = begin(physicalStudent(Posture::Seated), kAnimals);
    const auto a = withRole(standing.state, ElementRole::Option);
    const auto b = withRole(seated.state, ElementRole::Option);
    REQUIRE(a.size() == 3);
    REQUIRE(b.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(b[i]->u - 0.5 == doctest::Approx((a[i]->u - 0.5) * 0.5));
        CHECK(b[i]->v == a[i]->v);
    }
}

TEST_CASE("laterality starts with the ball in the middle") {
    const auto visual = visualStudent();
    const auto start = begin(visual, lateralitySpecFor(visual));
    const auto* ball = start.state.element("ball");
    REQUIRE(ball);
    CHECK(ball->u == 0.5);
    CHECK(ball->v == 0.5);
    CHECK(start.state.element("basket") == nullptr);

    const auto autism = autismStudent(LateralityProblem::CannotRecognizeRight);
    const auto a = begin(autism, lateralitySpecFor(autism));
    const auto* basket = a.state.element("basket");
    REQUIRE(basket);
    CHECK(basket->u > 0.5);
    CHECK(basket->role == ElementRole::Basket);
}

TEST_CASE("pictograms only on options and targets of autism scenes") {
    const auto a = begin(autismStudent(), kAnimals);
    for (const auto& e : a.state.elements) {
        CHECK(e.pictogramId.has_value() == (e.role == ElementRole::Option || e.role == ElementRole::Target));
    }
    const auto v = begin(visualStudent(), kAnimals);
    for (const auto& e : v.state.elements) CHECK_FALSE(e.pictogramId.has_value());
}

TEST_CASE("four collisions push the ball to 0.9 and complete the repetition") {
    auto visual = visualStudent();
    visual.profile.laterality = LateralityProblem::CannotRecognizeRight;
    const auto start = begin(visual, ActivitySpec{Laterality{Side::Right}});
    ActivityState s = start.state;
    std::int64_t t = 0;
    std::vector<FeedbackEvent> events;
    std::optional<RepetitionResult> done;
    for (int hit = 0; hit < 4; ++hit) {
        const double u = s.element("ball")->u;
        auto step = applyInput(s, start.config, CursorMoved{u, 0.5, t += 500});
        events.insert(events.end(), step.events.begin(), step.events.end());
        done = step.completed;
        s = step.state;
        if (hit < 3) {
            CHECK(s.element("ball")->u == doctest::Approx(0.5 + 0.1 * (hit + 1)));
            s = applyInput(s, start.config, CursorMoved{0.5, 0.95, t += 500}).state;
        }
    }
    REQUIRE(done);
    CHECK(done->errors == 0);
    CHECK(done->durationSeconds == 4);  // 3500 ms, half up
    CHECK(count(events, FeedbackKind::Positive) == 1);
    CHECK(s.repetitionIndex == 2);
    CHECK(s.element("ball")->u == 0.5);
}

TEST_CASE("reduced spacing halves the laterality step") {
    const auto physical = physicalStudent(Posture::Seated, ArmMobility::leftArmOnly(), LateralityProblem::CannotRecognizeLeft);
    const auto start = begin(physical, lateralitySpecFor(physical));
    CHECK(lateralityStep(start.config) == kLateralityReducedStep);
    const auto step = applyInput(start.state, start.config, CursorMoved{0.5, 0.5, 10});
    CHECK(step.state.element("ball")->u == doctest::Approx(0.45));
}

TEST_CASE("wrong raise in gestures mode is a visual error") {
    const auto start = begin(hearingStudent(), kAnimals);
    const auto* prompt = start.state.element(start.state.promptTargetId);
    REQUIRE(prompt);
    REQUIRE(prompt->u < 0.5);  // first repetition asks for the left element
    const auto step = applyInput(start.state, start.config, GestureRecognized{GestureId::RaiseRightArm, 700});
    CHECK(count(step.events, FeedbackKind::Negative) == 1);
    for (const auto& e : step.events) {
        if (e.kind == FeedbackKind::Negative) CHECK(e.modalities == Modality::Visual);
    }
    CHECK(step.state.errorsThisRepetition == 1);
    CHECK(step.state.repetitionIndex == 1);
    CHECK_FALSE(step.completed);

    const auto right = applyInput(step.state, start.config, GestureRecognized{GestureId::RaiseLeftArm, 1600});
    REQUIRE(right.completed);
    CHECK(right.completed->errors == 1);
    CHECK(right.completed->durationSeconds == 2);
}

TEST_CASE("idle tick changes nothing but the input clock") {
    const auto start = begin(visualStudent(), kAnimals);
    const auto step = applyInput(start.state, start.config, Tick{500});
    CHECK(step.events.empty());
    CHECK_FALSE(step.completed);
    ActivityState expected = start.state;
    expected.lastInputMs = 500;
    CHECK(step.state == expected);
}

TEST_CASE("a selection can be revised inside the confirm window") {
    const auto start = begin(visualStudent(), kAnimals);
    const auto& cfg = start.config;
    const auto* correct = start.state.element(start.state.promptTargetId);
    const SceneElement* wrong = nullptr;
    for (const auto* o : withRole(start.state, ElementRole::Option)) {
        if (o->id != correct->id) wrong = o;
    }
    REQUIRE(wrong);

    auto s1 = applyInput(start.state, cfg, CursorMoved{wrong->u, wrong->v, 1000});
    CHECK(s1.state.phase == ActivityPhase::ConfirmWindow);
    CHECK(s1.events == std::vector<FeedbackEvent>{{FeedbackKind::SelectionFrame, Modality::Visual, wrong->id}});
    auto s2 = applyInput(s1.state, cfg, CursorMoved{correct->u, correct->v, 2000});
    CHECK(s2.state.selectedId == correct->id);
    CHECK(s2.state.deadlineMs == 4000);
    auto s3 = applyInput(s2.state, cfg, Tick{3999});
    CHECK_FALSE(s3.completed);
    auto s4 = applyInput(s3.state, cfg, Tick{4100});
    REQUIRE(s4.completed);
    CHECK(s4.completed->errors == 0);
    CHECK(s4.completed->durationSeconds == 4);
}

TEST_CASE("committing the wrong option counts an error and keeps the repetition") {
    const auto start = begin(visualStudent(), kAnimals);
    const SceneElement* wrong = nullptr;
    for (const auto* o : withRole(start.state, ElementRole::Option)) {
        if (o->id != start.state.promptTargetId) wrong = o;
    }
    auto s = applyInput(start.state, start.config, CursorMoved{wrong->u, wrong->v, 100}).state;
    const auto step = applyInput(s, start.config, Tick{2100});
    CHECK(step.state.errorsThisRepetition == 1);
    CHECK(step.state.phase == ActivityPhase::AwaitingInput);
    CHECK(count(step.events, FeedbackKind::Negative) == 1);
}

TEST_CASE("drag and drop onto the wrong target sends the option home") {
    const auto start = begin(autismStudent(), kAnimals);
    const auto& cfg = start.config;
    const auto options = withRole(start.state, ElementRole::Option);
    const auto* item = options.front();
    const auto home = *item;
    const std::string match = "target:" + defaultContent().find(item->id)->matchesTargetId;
    const SceneElement* wrongTarget = nullptr;
    for (const auto* t : withRole(start.state, ElementRole::Target)) {
        if (t->id != match) wrongTarget = t;
    }
    REQUIRE(wrongTarget);

    auto grab = applyInput(start.state, cfg, CursorMoved{item->u, item->v, 100});
    CHECK(grab.state.dragging == item->id);
    auto drop = applyInput(grab.state, cfg, CursorMoved{wrongTarget->u, wrongTarget->v, 900});
    CHECK(drop.state.errorsThisRepetition == 1);
    CHECK_FALSE(drop.state.dragging);
    CHECK(drop.state.element(item->id)->u == home.u);
    CHECK(drop.state.element(item->id)->v == home.v);

    auto away = applyInput(drop.state, cfg, CursorMoved{0.5, 0.95, 1000});
    auto regrab = applyInput(away.state, cfg, CursorMoved{home.u, home.v, 1100});
    const auto* target = regrab.state.element(match);
    REQUIRE(target);
    auto done = applyInput(regrab.state, cfg, CursorMoved{target->u, target->v, 2600});
    REQUIRE(done.completed);
    CHECK(done.completed->errors == 1);
    CHECK(done.completed->durationSeconds == 3);
}

TEST_CASE("engine errors") {
    const auto visual = visualStudent();  // cannot recognise left
    CHECK_THROWS_WITH_AS(begin(visual, ActivitySpec{Laterality{Side::Right}}), doctest::Contains("laterality"), ActivityError);
    auto none = visual;
    none.profile.laterality = LateralityProblem::None;
    try {
        begin(none, ActivitySpec{Laterality{Side::Left}});
        FAIL("expected SpecMismatch");
    } catch (const ActivityError& e) {
        CHECK(e.kind() == ActivityError::Kind::SpecMismatch);
    }

    const auto start = begin(visual, ActivitySpec{ConceptAssociation{}, 1});
    auto s = applyInput(start.state, start.config, Tick{100}).state;
    try {
        applyInput(s, start.config, Tick{99});
        FAIL("expected NonMonotonicTimestamp");
    } catch (const ActivityError& e) {
        CHECK(e.kind() == ActivityError::Kind::NonMonotonicTimestamp);
    }
    CHECK_NOTHROW(applyInput(s, start.config, Tick{100}));

    const auto* correct = s.element(s.promptTargetId);
    s = applyInput(s, start.config, CursorMoved{correct->u, correct->v, 200}).state;
    s = applyInput(s, start.config, Tick{2200}).state;
    REQUIRE(s.phase == ActivityPhase::Done);
    try {
        applyInput(s, start.config, Tick{3000});
        FAIL("expected InputAfterDone");
    } catch (const ActivityError& e) {
        CHECK(e.kind() == ActivityError::Kind::InputAfterDone);
    }
}

TEST_CASE("activity names round-trip") {
    for (const char* name : {"concept:animals", "concept:vehicles", "laterality:left", "laterality:right"}) {
        const auto spec = parseActivity(name);
        REQUIRE(spec);
        CHECK(toString(*spec) == name);
    }
    CHECK_FALSE(parseActivity("concept:plants"));
    CHECK_FALSE(parseActivity("laterality"));
    CHECK_FALSE(parseActivity("laterality:up"));
}

TEST_CASE("durations round half up to whole seconds") {
    CHECK(roundedSeconds(0) == 0);
    CHECK(roundedSeconds(499) == 0);
    CHECK(roundedSeconds(500) == 1);
    CHECK(roundedSeconds(1499) == 1);
    CHECK(roundedSeconds(1500) == 2);
}

TEST_CASE("a scripted student finishes every variant") {
    for (const auto& v : activityVariants()) {
        CAPTURE(v.name);
        const auto script = scriptedStudent(v.record, v.spec, defaultContent(), {2, 5});
        const auto log = runInputs(v.record, v.spec, defaultContent(), script.inputs);
        CHECK_FALSE(log.incomplete);
        REQUIRE(log.results.size() == 10);
        int errors = 0;
        for (const auto& r : log.results) errors += r.errors;
        const bool canErr = !(v.spec.isLaterality() && v.record.profile.disability != Disability::Hearing);
        CHECK(errors == (canErr ? 2 : 0));
    }
}

TEST_CASE("random input sequences respect the activity properties") {
    std::uint32_t seed = 100;
    for (const auto& v : activityVariants()) {
        CAPTURE(v.name);
        const auto report = checkActivityProperties(v, seed++, 150);
        for (const auto& f : report.failures) MESSAGE(f);
        CHECK(report.ok());
        CHECK(report.sequences == 150);
        CHECK(report.completedRepetitions > 0);
    }
}
