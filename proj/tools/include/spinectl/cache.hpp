#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "spine/relations.hpp"

namespace spinectl {

// Relation graphs on disk, keyed by the geometry digest. Graphs are stored as
// run-length rows and come back through the same decoder as imported graphs.
class GraphCache {
public:
    GraphCache(std::filesystem::path root, std::string digest);

    bool enabled() const noexcept { return !root_.empty(); }
    std::optional<spine::LineGraph> load(spine::Delta d) const;
    void store(const spine::LineGraph& g) const;

private:
    std::filesystem::path file(spine::Delta d) const;

    std::filesystem::path root_;
    std::string digest_;
};

}  // namespace spinectl
