#include "rahp/io.hpp"

#include <cctype>

#include "rahp/canonical.hpp"
#include "rahp/error.hpp"

namespace rahp {

nlohmann::json polyhedron_to_json(const AbstractPolyhedron& P, bool include_tags)
{
    nlohmann::json j;
    j["faces"] = P.faces();
    if (include_tags) {
        nlohmann::json tags = nlohmann::json::array();
        for (const auto& t : P.face_tags()) {
            if (t.empty()) {
                tags.push_back(nullptr);
                continue;
            }
            nlohmann::json entry{{"class", t.cls}};
            if (t.has_anchor()) entry["anchor"] = {t.anchor_u, t.anchor_v};
            tags.push_back(entry);
        }
        j["tags"] = tags;
    }
    return j;
}

AbstractPolyhedron polyhedron_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("faces") || !j["faces"].is_array())
        throw Error(ErrorCode::BadInput, "polyhedron JSON needs a \"faces\" array");
    std::vector<std::vector<int>> faces;
    try {
        faces = j["faces"].get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::BadInput, std::string("malformed faces: ") + e.what());
    }
    std::vector<FaceTag> tags;
    if (j.contains("tags") && j["tags"].is_array()) {
        for (const auto& t : j["tags"]) {
            FaceTag tag;
            if (t.is_object()) {
                tag.cls = t.value("class", "");
                if (t.contains("anchor")) {
                    tag.anchor_u = t["anchor"].at(0).get<int>();
                    tag.anchor_v = t["anchor"].at(1).get<int>();
                }
            }
            tags.push_back(tag);
        }
    }
    return AbstractPolyhedron::from_faces(faces, std::move(tags));
}

AbstractPolyhedron read_polyhedron(const std::string& text)
{
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) throw Error(ErrorCode::BadInput, "empty polyhedron input");
    if (text[i] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorCode::BadInput, std::string("invalid JSON: ") + e.what());
        }
        return polyhedron_from_json(j);
    }
    return decode(text.substr(i));
}

} // namespace rahp
