#pragma once

#include <stdexcept>
#include <string>

namespace lexkb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// lookups that miss: unknown head, dangling sense, word absent from a paragraph
struct NotFound : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : Error(source + ":" + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

// bad flags, bad weights, unreadable data files
struct ConfigError : Error {
    using Error::Error;
};

} // namespace lexkb
