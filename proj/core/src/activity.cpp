#include "adapta/activity.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace adapta {

namespace {

constexpr std::array<double, 3> kColumnV = {0.25, 0.5, 0.75};

template <typename... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <typename... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

double spread(double u, const ActivityConfig& config) {
    return config.elementSpacing == ElementSpacing::Reduced ? 0.5 + (u - 0.5) * kReducedSpacingFactor : u;
}

int optionCount(const ActivityConfig& config) { return config.interactionMode == InteractionMode::Gestures ? 2 : 3; }

double sign(Side side) { return side == Side::Right ? 1.0 : -1.0; }

std::string targetElementId(const std::string& targetId) { return "target:" + targetId; }

SceneElement optionElement(const ContentItem& item, double u, double v, const ActivityConfig& config) {
    SceneElement e{item.optionId, item.label, u, v, kOptionRadius, ElementRole::Option, std::nullopt};
    if (config.showPictograms) e.pictogramId = item.pictogramId;
    return e;
}

SceneElement targetElement(const std::string& targetId, const std::vector<ContentItem>& content, double u, double v,
                           const ActivityConfig& config) {
    auto it = std::find_if(content.begin(), content.end(), [&](const ContentItem& c) { return c.optionId == targetId; });
    SceneElement e{targetElementId(targetId), it != content.end() ? it->label : targetId, u, v, kOptionRadius,
                   ElementRole::Target, std::nullopt};
    if (config.showPictograms) e.pictogramId = it != content.end() ? it->pictogramId : "pic-" + targetId;
    return e;
}

void layoutConcept(ActivityState& s, const ActivityConfig& config) {
    const int k = optionCount(config);
    const std::size_t n = s.content.size();
    const std::size_t first = static_cast<std::size_t>(s.repetitionIndex - 1);
    std::vector<const ContentItem*> chosen;
    for (int j = 0; j < k; ++j) chosen.push_back(&s.content[(first + static_cast<std::size_t>(j)) % n]);

    s.elements.clear();
    s.promptTargetId.clear();

    if (config.interactionMode == InteractionMode::DragAndDrop) {
        for (int j = 0; j < k; ++j) {
            s.elements.push_back(optionElement(*chosen[j], spread(0.25, config), kColumnV[j], config));
        }
        // Targets on the opposite side, shifted one row so no option sits
        // level with its own match.
        std::vector<std::string> targets;
        for (const auto* item : chosen) {
            if (std::find(targets.begin(), targets.end(), item->matchesTargetId) == targets.end()) {
                targets.push_back(item->matchesTargetId);
            }
        }
        for (std::size_t i = 0; i < targets.size(); ++i) {
            s.elements.push_back(targetElement(targets[i], s.content, spread(0.75, config),
                                               kColumnV[(i + 1) % static_cast<std::size_t>(k)], config));
        }
        return;
    }

    const std::vector<double> columns = k == 2 ? std::vector<double>{0.25, 0.75} : std::vector<double>{0.25, 0.5, 0.75};
    for (int j = 0; j < k; ++j) {
        s.elements.push_back(optionElement(*chosen[j], spread(columns[j], config), kOptionRowV, config));
    }
    const ContentItem& target = *chosen[static_cast<std::size_t>((s.repetitionIndex - 1) % k)];
    s.promptTargetId = target.optionId;
    s.elements.push_back({"prompt", target.label, 0.5, kPromptV, kOptionRadius, ElementRole::Prompt, std::nullopt});
}

void layoutLaterality(ActivityState& s, const ActivityConfig& config, Side side) {
    s.elements.clear();
    s.promptTargetId.clear();
    s.elements.push_back({"ball", "Ball", 0.5, 0.5, kBallRadius, ElementRole::Ball, std::nullopt});
    if (config.interactionMode == InteractionMode::DragAndDrop) {
        const double offset = std::min(0.2 + lateralityStep(config) * (s.repetitionIndex - 1), 0.4);
        s.elements.push_back(
            {"basket", "Basket", 0.5 + sign(side) * offset, 0.5, kBasketRadius, ElementRole::Basket, std::nullopt});
    }
}

void layoutRepetition(ActivityState& s, const ActivityConfig& config) {
    s.ballSteps = 0;
    s.dragging.reset();
    s.phase = ActivityPhase::AwaitingInput;
    s.selectedId.clear();
    std::visit(Overloaded{
                   [&](const ConceptAssociation&) { layoutConcept(s, config); },
                   [&](const Laterality& l) { layoutLaterality(s, config, l.side); },
               },
               s.spec.kind);
}

SceneElement* mutableElement(ActivityState& s, std::string_view id) {
    auto it = std::find_if(s.elements.begin(), s.elements.end(), [&](const SceneElement& e) { return e.id == id; });
    return it == s.elements.end() ? nullptr : &*it;
}

bool overlaps(double u, double v, double r, const SceneElement& e) { return std::hypot(u - e.u, v - e.v) < r + e.radius; }

/// Nearest element of the given role under a disc; ties go to the first.
const SceneElement* hitTest(const ActivityState& s, double u, double v, double radius, ElementRole role,
                            std::string_view exclude = {}) {
    const SceneElement* best = nullptr;
    double bestDistance = 0.0;
    for (const auto& e : s.elements) {
        if (e.role != role || e.id == exclude || !overlaps(u, v, radius, e)) continue;
        const double d = std::hypot(u - e.u, v - e.v);
        if (!best || d < bestDistance) {
            best = &e;
            bestDistance = d;
        }
    }
    return best;
}

class Transition {
public:
    Transition(const ActivityState& state, const ActivityConfig& config) : config_(config) { step_.state = state; }

    ActivityStep finish() && { return std::move(step_); }

    ActivityState& s() { return step_.state; }

    void emit(FeedbackKind kind, Modality modalities, std::string elementId = {}) {
        step_.events.push_back({kind, modalities, std::move(elementId)});
    }
    void sceneChanged() { emit(FeedbackKind::SceneChanged, Modality::Visual); }
    void selection(const std::string& id) { emit(FeedbackKind::SelectionFrame, Modality::Visual, id); }

    void wrong() {
        emit(FeedbackKind::Negative, config_.feedbackModality);
        ++s().errorsThisRepetition;
    }

    void completeRepetition(std::int64_t t) {
        emit(FeedbackKind::Positive, config_.feedbackModality);
        ActivityState& st = s();
        step_.completed = RepetitionResult{st.repetitionIndex, roundedSeconds(t - st.repetitionStartMs),
                                           st.errorsThisRepetition};
        ++st.completedRepetitions;
        st.dragging.reset();
        st.selectedId.clear();
        if (st.repetitionIndex >= st.spec.repetitions) {
            st.phase = ActivityPhase::Done;
            return;
        }
        ++st.repetitionIndex;
        st.errorsThisRepetition = 0;
        st.repetitionStartMs = t;
        st.awaitingRelease = true;
        layoutRepetition(st, config_);
        sceneChanged();
    }

    void commitChoice(const std::string& optionId, std::int64_t t) {
        s().phase = ActivityPhase::AwaitingInput;
        s().selectedId.clear();
        s().awaitingRelease = true;
        if (optionId == s().promptTargetId) {
            completeRepetition(t);
        } else {
            wrong();
        }
    }

    void handleConcept(const CursorMoved& in) {
        ActivityState& st = s();
        if (config_.interactionMode == InteractionMode::Gestures) return;
        if (config_.interactionMode == InteractionMode::DragAndDrop) {
            handleDrag(in, ElementRole::Option);
            return;
        }
        const SceneElement* hit = hitTest(st, in.u, in.v, kCursorRadius, ElementRole::Option);
        if (st.awaitingRelease) {
            if (!hit) st.awaitingRelease = false;
            return;
        }
        if (!hit) return;
        if (st.phase == ActivityPhase::ConfirmWindow && hit->id == st.selectedId) return;
        st.phase = ActivityPhase::ConfirmWindow;
        st.selectedId = hit->id;
        st.deadlineMs = in.tMs + kConfirmWindowMs;
        selection(st.selectedId);
    }

    void handleConcept(const GestureRecognized& in) {
        if (config_.interactionMode != InteractionMode::Gestures) return;
        const SceneElement* pick = nullptr;
        for (const auto& e : s().elements) {
            if (e.role != ElementRole::Option) continue;
            const bool better = !pick || (in.id == GestureId::RaiseLeftArm ? e.u < pick->u : e.u > pick->u);
            if (better) pick = &e;
        }
        if (!pick) return;
        const std::string id = pick->id;
        selection(id);
        commitChoice(id, in.tMs);
    }

    void handleLaterality(const CursorMoved& in, Side side) {
        ActivityState& st = s();
        if (config_.interactionMode == InteractionMode::Gestures) return;
        if (config_.interactionMode == InteractionMode::DragAndDrop) {
            handleDrag(in, ElementRole::Ball);
            return;
        }
        const SceneElement* ball = st.element("ball");
        const bool hit = ball && overlaps(in.u, in.v, kCursorRadius, *ball);
        if (st.awaitingRelease) {
            if (!hit) st.awaitingRelease = false;
            return;
        }
        if (!hit) return;
        st.awaitingRelease = true;
        shiftBall(side, in.tMs);
    }

    void handleLaterality(const GestureRecognized& in, Side side) {
        if (config_.interactionMode != InteractionMode::Gestures) return;
        const GestureId expected = side == Side::Right ? GestureId::RaiseRightArm : GestureId::RaiseLeftArm;
        if (in.id == expected) {
            shiftBall(side, in.tMs);
        } else {
            wrong();
        }
    }

    void shiftBall(Side side, std::int64_t t) {
        ActivityState& st = s();
        ++st.ballSteps;
        SceneElement* ball = mutableElement(st, "ball");
        ball->u = std::clamp(0.5 + sign(side) * lateralityStep(config_) * st.ballSteps, 0.0, 1.0);
        sceneChanged();
        constexpr double kSlack = 1e-9;
        const bool reached = side == Side::Right ? ball->u >= kLateralityGoalRight - kSlack
                                                 : ball->u <= kLateralityGoalLeft + kSlack;
        if (reached) completeRepetition(t);
    }

    /// Shared drag-and-drop mechanics. The grabbed element follows the
    /// cursor; contact with a drop zone commits.
    void handleDrag(const CursorMoved& in, ElementRole grabbable) {
        ActivityState& st = s();
        if (!st.dragging) {
            const SceneElement* hit = hitTest(st, in.u, in.v, kCursorRadius, grabbable);
            if (st.awaitingRelease) {
                if (!hit) st.awaitingRelease = false;
                return;
            }
            if (!hit) return;
            st.dragging = hit->id;
            selection(hit->id);
        }
        const std::string id = *st.dragging;
        SceneElement* dragged = mutableElement(st, id);
        dragged->u = in.u;
        dragged->v = in.v;
        sceneChanged();

        if (grabbable == ElementRole::Ball) {
            const SceneElement* basket = st.element("basket");
            if (basket && overlaps(dragged->u, dragged->v, dragged->radius, *basket)) completeRepetition(in.tMs);
            return;
        }

        const SceneElement* zone = hitTest(st, dragged->u, dragged->v, dragged->radius, ElementRole::Target);
        if (!zone) return;
        const auto item = std::find_if(st.content.begin(), st.content.end(),
                                       [&](const ContentItem& c) { return c.optionId == id; });
        const bool correct = item != st.content.end() && zone->id == targetElementId(item->matchesTargetId);
        if (correct) {
            completeRepetition(in.tMs);
            return;
        }
        wrong();
        returnHome(id);
        st.dragging.reset();
        st.awaitingRelease = true;
        sceneChanged();
    }

    void returnHome(const std::string& id) {
        ActivityState fresh = s();
        layoutRepetition(fresh, config_);
        const SceneElement* home = fresh.element(id);
        SceneElement* current = mutableElement(s(), id);
        if (home && current) {
            current->u = home->u;
            current->v = home->v;
        }
    }

private:
    const ActivityConfig& config_;
    ActivityStep step_;
};

}  // namespace

std::string toString(const ActivitySpec& spec) {
    return std::visit(Overloaded{
                          [](const ConceptAssociation& c) { return "concept:" + std::string(toString(c.topic)); },
                          [](const Laterality& l) { return std::string(l.side == Side::Left ? "laterality:left" : "laterality:right"); },
                      },
                      spec.kind);
}

std::optional<ActivitySpec> parseActivity(std::string_view text, int repetitions) {
    if (repetitions <= 0) return std::nullopt;
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) return std::nullopt;
    const auto head = text.substr(0, colon);
    const auto tail = text.substr(colon + 1);
    if (head == "concept") {
        if (auto topic = parseTopic(tail)) return ActivitySpec{ConceptAssociation{*topic}, repetitions};
    } else if (head == "laterality") {
        if (tail == "left") return ActivitySpec{Laterality{Side::Left}, repetitions};
        if (tail == "right") return ActivitySpec{Laterality{Side::Right}, repetitions};
    }
    return std::nullopt;
}

std::string_view toString(ElementRole role) {
    switch (role) {
        case ElementRole::Option: return "Option";
        case ElementRole::Target: return "Target";
        case ElementRole::Ball: return "Ball";
        case ElementRole::Basket: return "Basket";
        case ElementRole::Prompt: return "Prompt";
    }
    return "";
}

std::string_view toString(FeedbackKind kind) {
    switch (kind) {
        case FeedbackKind::Positive: return "Positive";
        case FeedbackKind::Negative: return "Negative";
        case FeedbackKind::SelectionFrame: return "SelectionFrame";
        case FeedbackKind::Instructions: return "Instructions";
        case FeedbackKind::SceneChanged: return "SceneChanged";
    }
    return "";
}

const SceneElement* ActivityState::element(std::string_view id) const {
    auto it = std::find_if(elements.begin(), elements.end(), [&](const SceneElement& e) { return e.id == id; });
    return it == elements.end() ? nullptr : &*it;
}

std::int64_t timestampOf(const ActivityInput& input) {
    return std::visit([](const auto& in) { return in.tMs; }, input);
}

int roundedSeconds(std::int64_t elapsedMs) { return static_cast<int>((std::max<std::int64_t>(elapsedMs, 0) + 500) / 1000); }

double lateralityStep(const ActivityConfig& config) {
    return config.elementSpacing == ElementSpacing::Reduced ? kLateralityReducedStep : kLateralityStep;
}

ActivityStart startActivity(const UserProfile& profile, const DeviceInteractionModel& device, const ActivitySpec& spec,
                            const ContentLibrary& content, std::int64_t startMs) {
    if (const auto v = validateProfile(profile); !v.ok()) {
        throw ActivityError(ActivityError::Kind::InvalidProfile, "invalid profile: " + v.violations.front().message);
    }
    if (spec.repetitions <= 0) throw ActivityError(ActivityError::Kind::SpecMismatch, "repetitions must be positive");

    ActivityState state;
    state.spec = spec;
    state.repetitionStartMs = startMs;

    if (const auto* lat = std::get_if<Laterality>(&spec.kind)) {
        const auto expected = lat->side == Side::Left ? LateralityProblem::CannotRecognizeLeft
                                                      : LateralityProblem::CannotRecognizeRight;
        if (profile.laterality != expected) {
            throw ActivityError(ActivityError::Kind::SpecMismatch,
                                "laterality:" + std::string(lat->side == Side::Left ? "left" : "right") +
                                    " does not match the profile's laterality " + std::string(toString(profile.laterality)));
        }
    }

    ActivityStart start;
    start.config = deriveConfig(profile, device);

    if (const auto* ca = std::get_if<ConceptAssociation>(&spec.kind)) {
        state.content = content.forTopic(ca->topic);
        const auto needed = static_cast<std::size_t>(optionCount(start.config));
        if (state.content.size() < needed) {
            throw ActivityError(ActivityError::Kind::InsufficientContent,
                                "topic " + std::string(toString(ca->topic)) + " needs at least " +
                                    std::to_string(needed) + " content items");
        }
    }

    layoutRepetition(state, start.config);
    start.state = std::move(state);
    start.events.push_back({FeedbackKind::Instructions, start.config.instructionModality, {}});
    start.events.push_back({FeedbackKind::SceneChanged, Modality::Visual, {}});
    return start;
}

ActivityStep applyInput(const ActivityState& state, const ActivityConfig& config, const ActivityInput& input) {
    if (state.phase == ActivityPhase::Done) {
        throw ActivityError(ActivityError::Kind::InputAfterDone, "activity already finished");
    }
    const std::int64_t t = timestampOf(input);
    if (state.lastInputMs && t < *state.lastInputMs) {
        throw ActivityError(ActivityError::Kind::NonMonotonicTimestamp,
                            "input at " + std::to_string(t) + " ms after " + std::to_string(*state.lastInputMs) + " ms");
    }

    Transition tr(state, config);
    tr.s().lastInputMs = t;

    if (tr.s().phase == ActivityPhase::ConfirmWindow && t >= tr.s().deadlineMs) {
        const std::string selected = tr.s().selectedId;
        tr.commitChoice(selected, t);
    }
    if (tr.s().phase == ActivityPhase::Done) return std::move(tr).finish();

    const ActivityInput clamped = std::visit(
        Overloaded{
            [](const CursorMoved& c) -> ActivityInput {
                return CursorMoved{std::clamp(c.u, 0.0, 1.0), std::clamp(c.v, 0.0, 1.0), c.tMs};
            },
            [](const auto& other) -> ActivityInput { return other; },
        },
        input);

    std::visit(Overloaded{
                   [&](const ConceptAssociation&) {
                       std::visit(Overloaded{
                                      [&](const CursorMoved& c) { tr.handleConcept(c); },
                                      [&](const GestureRecognized& g) { tr.handleConcept(g); },
                                      [](const Tick&) {},
                                  },
                                  clamped);
                   },
                   [&](const Laterality& l) {
                       std::visit(Overloaded{
                                      [&](const CursorMoved& c) { tr.handleLaterality(c, l.side); },
                                      [&](const GestureRecognized& g) { tr.handleLaterality(g, l.side); },
                                      [](const Tick&) {},
                                  },
                                  clamped);
                   },
               },
               state.spec.kind);
    return std::move(tr).finish();
}

}  // namespace adapta
