#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace adapta {

enum class Topic { Animals, Vehicles };

std::string_view toString(Topic topic);
std::optional<Topic> parseTopic(std::string_view text);

/// One concept shown as an option. In drag-and-drop association the
/// option must be dropped on the element named by matchesTargetId.
struct ContentItem {
    Topic topic = Topic::Animals;
    std::string optionId;
    std::string label;
    std::string pictogramId;
    std::string matchesTargetId;

    friend bool operator==(const ContentItem&, const ContentItem&) = default;
};

struct ContentLibrary {
    std::vector<ContentItem> items;

    std::vector<ContentItem> forTopic(Topic topic) const;
    const ContentItem* find(std::string_view optionId) const;

    friend bool operator==(const ContentLibrary&, const ContentLibrary&) = default;
};

/// Six animals and six vehicles, each paired with an associated concept.
ContentLibrary defaultContent();

}  // namespace adapta
