#pragma once
// Random small corpora in the .kbt format, for oracle comparisons.

#include <random>
#include <string>
#include <vector>

namespace oracle {

// Up to `max_heads` heads spread over two classes, with shared vocabulary so
// that words are polysemous. Words are plain lower-case tokens.
inline std::string synthetic_corpus(unsigned seed, int max_heads = 5) {
    std::mt19937 rng(seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    static const std::vector<std::string> vocab = {"amber", "birch", "cobalt", "dune",  "ember", "fjord", "garnet",
                                                   "heron", "iris",  "jade",   "kelp",  "lumen", "moss",  "nectar",
                                                   "opal",  "pine",  "quartz", "reed",  "slate", "thorn"};
    static const char* pos[] = {"N.", "ADJ.", "VB.", "ADV."};
    int heads = pick(2, max_heads);
    std::string out;
    int head = 10;
    int cls = 0, sec = 0, hg_left = 0;
    std::string sub;
    std::vector<int> hg;
    for (int i = 0; i < heads; ++i) {
        head += pick(1, 3);
        if (hg_left == 0) {
            // maybe move up the taxonomy before opening a new head group
            int r = pick(0, 3);
            if (cls == 0 || r == 0) {
                ++cls;
                sec = 0;
                out += "#class " + std::to_string(cls) + " | class " + std::to_string(cls) + "\n";
            }
            if (sec == 0 || r <= 1) {
                ++sec;
                sub.clear();
                out += "#section " + std::to_string(sec) + " | section " + std::to_string(sec) + "\n";
            }
            if (sub.empty() || r <= 2) {
                sub = "sub " + std::to_string(head);
                if (pick(0, 4) == 0)
                    sub.clear();   // no subsection for this run of heads
                else
                    out += "#subsection " + sub + "\n";
            }
            int size = std::min(pick(1, 3), heads - i);
            hg.clear();
            for (int k = 0; k < size; ++k) hg.push_back(head + k);
            std::string list;
            for (int k = 0; k < size; ++k) list += (k ? "," : "") + std::to_string(hg[static_cast<std::size_t>(k)]);
            out += "#headgroup " + list + "\n";
            hg_left = size;
        }
        int me = hg[hg.size() - static_cast<std::size_t>(hg_left)];
        head = me;
        --hg_left;
        out += "#head " + std::to_string(me) + " | head " + std::to_string(me) + "\n";
        int npos = pick(1, 3);
        for (int p = 0; p < npos; ++p) {
            out += std::string("#pos ") + pos[p] + "\n";
            int paras = pick(1, 2);
            for (int k = 0; k < paras; ++k) {
                std::string kw = vocab[static_cast<std::size_t>(pick(0, static_cast<int>(vocab.size()) - 1))] +
                                 std::to_string(me) + std::string(1, static_cast<char>('a' + p)) + std::to_string(k);
                out += "#para " + kw + "\n" + kw;
                int groups = pick(1, 3);
                for (int g = 0; g < groups; ++g) {
                    if (g) out += "\n";
                    int n = pick(1, 3);
                    std::vector<std::string> used;
                    for (int w = 0; w < n; ++w) {
                        auto word = vocab[static_cast<std::size_t>(pick(0, static_cast<int>(vocab.size()) - 1))];
                        if (std::find(used.begin(), used.end(), word) != used.end()) continue;
                        used.push_back(word);
                        out += (g == 0 || w ? "; " : "") + word;
                    }
                    if (used.empty()) out += g == 0 ? "" : "moss";
                }
                out += "\n";
            }
        }
    }
    return out;
}

} // namespace oracle
