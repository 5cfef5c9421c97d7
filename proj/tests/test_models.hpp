#pragma once

#include <map>
#include <memory>
#include <string>

#include "yangcheck/yangian.hpp"

namespace yangcheck::testutil {

// Read-only models shared across test cases so each lazily completed
// rewrite system is built once per process.  Never call mutators on these.
inline YangianModel& shared_model(const std::string& tags, int m, int n) {
    static std::map<std::string, std::unique_ptr<YangianModel>> cache;
    auto& slot = cache[tags + "|" + std::to_string(m) + "," + std::to_string(n)];
    if (!slot)
        slot = std::make_unique<YangianModel>(BorelChoice::from_tag_string(tags, m, n), 4);
    return *slot;
}

}  // namespace yangcheck::testutil
