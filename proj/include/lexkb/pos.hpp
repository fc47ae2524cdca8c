#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>

namespace lexkb {

// order matters: paragraphs of a head are stored and printed in this order
enum class Pos { N = 0, ADJ, VB, ADV, INT };

inline constexpr std::array<Pos, 5> kAllPos{Pos::N, Pos::ADJ, Pos::VB, Pos::ADV, Pos::INT};

inline std::string_view pos_label(Pos p) {
    switch (p) {
    case Pos::N: return "N.";
    case Pos::ADJ: return "ADJ.";
    case Pos::VB: return "VB.";
    case Pos::ADV: return "ADV.";
    case Pos::INT: return "INT.";
    }
    return "?";
}

// accepts "N.", "n", "Adj.", "vb", "noun", "verb" ...
inline std::optional<Pos> parse_pos(std::string_view s) {
    std::string t;
    for (char c : s)
        if (c != '.' && !std::isspace(static_cast<unsigned char>(c)))
            t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "n" || t == "noun") return Pos::N;
    if (t == "adj" || t == "a" || t == "adjective") return Pos::ADJ;
    if (t == "vb" || t == "v" || t == "verb") return Pos::VB;
    if (t == "adv" || t == "r" || t == "adverb") return Pos::ADV;
    if (t == "int" || t == "interjection") return Pos::INT;
    return std::nullopt;
}

} // namespace lexkb
