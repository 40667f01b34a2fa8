#include "adapta/content.hpp"

#include <algorithm>

namespace adapta {

std::string_view toString(Topic topic) { return topic == Topic::Animals ? "animals" : "vehicles"; }

std::optional<Topic> parseTopic(std::string_view text) {
    if (text == "animals") return Topic::Animals;
    if (text == "vehicles") return Topic::Vehicles;
    return std::nullopt;
}

std::vector<ContentItem> ContentLibrary::forTopic(Topic topic) const {
    std::vector<ContentItem> selected;
    std::copy_if(items.begin(), items.end(), std::back_inserter(selected),
                 [&](const ContentItem& item) { return item.topic == topic; });
    return selected;
}

const ContentItem* ContentLibrary::find(std::string_view optionId) const {
    auto it = std::find_if(items.begin(), items.end(), [&](const ContentItem& i) { return i.optionId == optionId; });
    return it == items.end() ? nullptr : &*it;
}

ContentLibrary defaultContent() {
    auto item = [](Topic topic, const char* id, const char* label, const char* target) {
        return ContentItem{topic, id, label, std::string("pic-") + id, target};
    };
    return ContentLibrary{{
        item(Topic::Animals, "hen", "Hen", "egg"),
        item(Topic::Animals, "cow", "Cow", "milk"),
        item(Topic::Animals, "bee", "Bee", "honey"),
        item(Topic::Animals, "sheep", "Sheep", "wool"),
        item(Topic::Animals, "dog", "Dog", "bone"),
        item(Topic::Animals, "rabbit", "Rabbit", "carrot"),
        item(Topic::Vehicles, "car", "Car", "road"),
        item(Topic::Vehicles, "boat", "Boat", "sea"),
        item(Topic::Vehicles, "plane", "Plane", "sky"),
        item(Topic::Vehicles, "train", "Train", "rails"),
        item(Topic::Vehicles, "bicycle", "Bicycle", "helmet"),
        item(Topic::Vehicles, "bus", "Bus", "bus-stop"),
    }};
}

}  // namespace adapta
