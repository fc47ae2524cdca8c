#pragma once

#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "lexkb.hpp"

namespace testing_support {

inline std::string fixture(const std::string& name) { return std::string(LEXKB_FIXTURES) + "/" + name; }
inline std::string data(const std::string& name = "") { return std::string(LEXKB_DATA) + (name.empty() ? "" : "/" + name); }

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline std::shared_ptr<const lexkb::Resources> resources() {
    static auto r = std::make_shared<const lexkb::Resources>(lexkb::Resources::load(data()));
    return r;
}

// Engines are cached per (file, phrase_split) since several suites share them.
inline const lexkb::Engine& engine(const std::string& name, bool phrase_split = true) {
    static std::map<std::pair<std::string, bool>, std::unique_ptr<lexkb::Engine>> cache;
    auto& slot = cache[{name, phrase_split}];
    if (!slot) {
        lexkb::IndexOptions io;
        io.phrase_split = phrase_split;
        auto path = name.find('/') == std::string::npos ? fixture(name) : name;
        slot = std::make_unique<lexkb::Engine>(lexkb::parse_corpus_file(path), *resources(), io);
    }
    return *slot;
}

inline lexkb::Engine engine_from_text(const std::string& corpus, bool phrase_split = true) {
    lexkb::IndexOptions io;
    io.phrase_split = phrase_split;
    return lexkb::Engine(lexkb::parse_corpus_string(corpus), *resources(), io);
}

} // namespace testing_support
