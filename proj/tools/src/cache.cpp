#include "spinectl/cache.hpp"

#include <fstream>

#include <json.hpp>

#include "spine/errors.hpp"

namespace spinectl {

GraphCache::GraphCache(std::filesystem::path root, std::string digest)
    : root_(std::move(root)), digest_(std::move(digest)) {}

std::filesystem::path GraphCache::file(spine::Delta d) const {
    return root_ / digest_ / ("relation-" + std::string(spine::to_string(d)) + ".json");
}

std::optional<spine::LineGraph> GraphCache::load(spine::Delta d) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(file(d));
    if (!in) return std::nullopt;
    try {
        nlohmann::json j;
        in >> j;
        const auto rows = j.at("rows").get<std::vector<std::string>>();
        return spine::decode_rle(d, rows);
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;  // a damaged entry is a miss
    } catch (const spine::InputError&) {
        return std::nullopt;
    }
}

void GraphCache::store(const spine::LineGraph& g) const {
    if (!enabled()) return;
    const auto path = file(g.kind());
    std::filesystem::create_directories(path.parent_path());
    const nlohmann::json j{{"kind", spine::to_string(g.kind())}, {"lines", g.size()}, {"rows", spine::encode_rle(g)}};
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace spinectl
