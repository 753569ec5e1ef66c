#pragma once

#include <srg/rat.hpp>

#include <json.hpp>

namespace srg {

/// Insertion-ordered JSON keeps report serialization byte-deterministic.
using Json = nlohmann::ordered_json;

/// {"num": "...", "den": "..."} with decimal strings; no precision loss.
inline Json rat_json(const Rat& q) {
    return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

}  // namespace srg
