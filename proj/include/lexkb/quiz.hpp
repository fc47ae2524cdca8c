#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "similarity.hpp"

namespace lexkb {

// Worse than any real path, so an unindexed choice never wins.
inline constexpr int kNotFoundDistance = 17;

struct Question {
    std::string problem;
    std::array<std::string, 4> choices;
    int answer_index = 0;   // shipped files list the key first
};

inline std::vector<Question> parse_questions(std::istream& in, const std::string& source = "<questions>") {
    std::vector<Question> out;
    std::string raw;
    std::size_t ln = 0;
    while (std::getline(in, raw)) {
        ++ln;
        auto line = text::trim(raw);
        if (line.empty() || line[0] == '#') continue;
        auto fields = text::split(line, '|');
        if (fields.size() != 5) throw ParseError(source, ln, "expected 'problem | c1 | c2 | c3 | c4'");
        Question q;
        q.problem = text::join(text::words(fields[0]), " ");
        for (std::size_t i = 0; i < 4; ++i) q.choices[i] = text::join(text::words(fields[i + 1]), " ");
        if (q.problem.empty() || std::any_of(q.choices.begin(), q.choices.end(), [](auto& c) { return c.empty(); }))
            throw ParseError(source, ln, "empty field in question");
        out.push_back(std::move(q));
    }
    if (out.empty()) throw ParseError(source, ln, "no questions in file");
    return out;
}

inline std::vector<Question> load_questions(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open question file " + path);
    return parse_questions(in, path);
}

struct ChoiceReport {
    std::string choice;
    bool found = false;
    int distance = kNotFoundDistance;
    std::size_t path_count = 0;
    std::optional<Path> best;   // first minimum-length path
    bool decomposed = false;    // scored through the words of a phrase
};

// Tokens skipped when a phrase is scored word by word.
inline bool phrase_filler(const std::string& t) { return t == "and" || t == "to" || t == "be"; }

// Score an unindexed phrase by its closest word. A phrase with no indexed
// word reports found=false and distance 16.
inline ChoiceReport phrase_distance(const Index& idx, const std::string& problem, const std::string& phrase) {
    ChoiceReport r;
    r.choice = phrase;
    r.decomposed = true;
    r.distance = kMaxDistance;
    for (auto& tok : text::words(text::normalize(phrase))) {
        if (phrase_filler(tok) || idx.lookup(tok).empty()) continue;
        auto ps = all_paths(idx, problem, tok);
        if (!r.found || ps.min_length < r.distance ||
            (ps.min_length == r.distance && ps.min_path_count > r.path_count)) {
            r.found = true;
            r.distance = ps.min_length;
            r.path_count = ps.min_path_count;
            r.best = ps.paths.front();
            r.best->word2 = phrase;
        }
    }
    return r;
}

inline ChoiceReport score_choice(const Index& idx, const std::string& problem, const std::string& choice) {
    if (!idx.lookup(choice).empty()) {
        auto ps = all_paths(idx, problem, choice);
        ChoiceReport r;
        r.choice = choice;
        r.found = true;
        r.distance = ps.min_length;
        r.path_count = ps.min_path_count;
        r.best = ps.paths.front();
        return r;
    }
    if (text::words(choice).size() > 1) {
        auto r = phrase_distance(idx, problem, choice);
        if (r.found) return r;
    }
    ChoiceReport r;
    r.choice = choice;
    return r;
}

enum class Verdict { correct, incorrect, tie, question_not_found };

inline std::string_view verdict_label(Verdict v) {
    switch (v) {
    case Verdict::correct: return "correct";
    case Verdict::incorrect: return "incorrect";
    case Verdict::tie: return "tie";
    case Verdict::question_not_found: return "question_not_found";
    }
    return "?";
}

struct QuizOptions {
    bool partial_credit = false;
};

struct QuestionResult {
    Question question;
    Verdict verdict = Verdict::incorrect;
    int chosen = -1;   // -1 when nothing could be chosen
    std::vector<ChoiceReport> choices;
    bool tie_broken = false;   // distance tie settled by path count in favour of the key
    bool tie_lost = false;     // distance tie settled by path count against the key
    bool residual_tie = false; // equal distance and equal path count: first listed wins
    int tied = 1;              // choices sharing the minimum distance
    Rational score{0};
    int answer_not_found = 0, other_not_found = 0;
};

inline QuestionResult answer(const Index& idx, const Question& q, const QuizOptions& opt = {}) {
    QuestionResult res;
    res.question = q;
    if (idx.lookup(q.problem).empty()) {
        res.verdict = Verdict::question_not_found;
        return res;
    }
    for (int i = 0; i < 4; ++i) {
        res.choices.push_back(score_choice(idx, q.problem, q.choices[static_cast<std::size_t>(i)]));
        if (!res.choices.back().found) (i == q.answer_index ? res.answer_not_found : res.other_not_found)++;
    }
    int best = kNotFoundDistance;
    for (auto& c : res.choices) best = std::min(best, c.distance);
    if (best == kNotFoundDistance) {
        res.verdict = Verdict::incorrect;
        return res;
    }
    std::vector<int> at_min;
    for (int i = 0; i < 4; ++i)
        if (res.choices[static_cast<std::size_t>(i)].distance == best) at_min.push_back(i);
    res.tied = static_cast<int>(at_min.size());

    std::size_t most = 0;
    for (int i : at_min) most = std::max(most, res.choices[static_cast<std::size_t>(i)].path_count);
    std::vector<int> survivors;
    for (int i : at_min)
        if (res.choices[static_cast<std::size_t>(i)].path_count == most) survivors.push_back(i);
    res.chosen = survivors.front();
    res.residual_tie = survivors.size() > 1;

    bool key_tied = std::find(at_min.begin(), at_min.end(), q.answer_index) != at_min.end();
    if (at_min.size() > 1 && key_tied && !res.residual_tie) {
        res.tie_broken = res.chosen == q.answer_index;
        res.tie_lost = !res.tie_broken;
    }

    if (opt.partial_credit && at_min.size() > 1) {
        res.verdict = key_tied ? Verdict::tie : Verdict::incorrect;
        res.score = key_tied ? Rational(1, static_cast<long long>(at_min.size())) : Rational(0);
    } else {
        res.verdict = res.chosen == q.answer_index ? Verdict::correct : Verdict::incorrect;
        res.score = res.verdict == Verdict::correct ? Rational(1) : Rational(0);
    }
    return res;
}

struct QuizResult {
    std::vector<QuestionResult> questions;
    int correct = 0, incorrect = 0, ties = 0, questions_not_found = 0;
    int ties_broken = 0, ties_lost = 0, residual_ties = 0;
    int answer_words_not_found = 0, other_words_not_found = 0;
    Rational score{0};

    double percent() const {
        return questions.empty() ? 0.0 : 100.0 * boost::rational_cast<double>(score) / static_cast<double>(questions.size());
    }
};

inline QuizResult run_quiz(const Index& idx, const std::vector<Question>& qs, const QuizOptions& opt = {}) {
    if (qs.empty()) throw Error("no questions to answer");
    QuizResult r;
    for (auto& q : qs) {
        auto a = answer(idx, q, opt);
        switch (a.verdict) {
        case Verdict::correct: ++r.correct; break;
        case Verdict::incorrect: ++r.incorrect; break;
        case Verdict::tie: ++r.ties; break;
        case Verdict::question_not_found: ++r.questions_not_found; break;
        }
        r.ties_broken += a.tie_broken;
        r.ties_lost += a.tie_lost;
        r.residual_ties += a.residual_tie;
        r.answer_words_not_found += a.answer_not_found;
        r.other_words_not_found += a.other_not_found;
        r.score += a.score;
        r.questions.push_back(std::move(a));
    }
    return r;
}

inline std::string format_score(const Rational& s) {
    if (s.denominator() == 1) return std::to_string(s.numerator());
    std::ostringstream o;
    o << std::fixed << std::setprecision(2) << boost::rational_cast<double>(s);
    return o.str();
}

namespace detail {

inline std::string choice_line(const std::string& problem, const ChoiceReport& c, bool brackets) {
    const auto& p = *c.best;
    std::string s = problem + " " + std::string(pos_label(p.ref1.sense.pos));
    if (brackets) s += " [" + p.ref1.matched + "]";
    s += " to " + c.choice + " " + std::string(pos_label(p.ref2.sense.pos));
    if (brackets) s += " [" + p.ref2.matched + "]";
    return s + ", length = " + std::to_string(c.distance) + ", " + std::to_string(c.path_count) +
           " path(s) of this length";
}

} // namespace detail

// The per-question block and footer of the quiz listing. As in the original
// listings, the last choice line omits the bracketed index forms.
inline std::string render_question(const QuestionResult& r, std::size_t number,
                                   const QuizOptions& opt = {}) {
    const auto& q = r.question;
    std::ostringstream o;
    o << "Question " << number << "\n\n";
    o << q.problem;
    for (auto& c : q.choices) o << " | " << c;
    o << "\n";
    if (r.verdict == Verdict::question_not_found) {
        o << q.problem << " (PROBLEM) not found in the index!!\n";
        return o.str();
    }
    for (std::size_t i = 0; i < r.choices.size(); ++i) {
        auto& c = r.choices[i];
        if (!c.found)
            o << c.choice << (static_cast<int>(i) == q.answer_index ? " (ANSWER)" : "") << " is NOT IN THE INDEX\n";
        else
            o << detail::choice_line(q.problem, c, i + 1 < r.choices.size()) << "\n";
    }
    if (r.chosen < 0)
        o << "No choice is in the index\n";
    else
        o << "Roget thinks that " << q.problem << " means " << q.choices[static_cast<std::size_t>(r.chosen)] << "\n";
    if (r.tie_broken) o << "TIE BROKEN\n";
    if (r.tie_lost) o << "TIE LOST\n";
    if (r.residual_tie) o << "RESIDUAL TIE\n";
    if (opt.partial_credit && r.verdict == Verdict::tie)
        o << "PARTIAL CREDIT " << r.score.numerator() << "/" << r.score.denominator() << "\n";
    else
        o << (r.verdict == Verdict::correct ? "CORRECT" : "INCORRECT") << "\n";
    return o.str();
}

inline std::string render_quiz(const QuizResult& r, const QuizOptions& opt = {}) {
    std::ostringstream o;
    for (std::size_t i = 0; i < r.questions.size(); ++i) o << render_question(r.questions[i], i + 1, opt) << "\n";
    o << "Final score: " << format_score(r.score) << "/" << r.questions.size() << ". " << r.ties_broken
      << " ties broken, " << r.ties_lost << " ties lost.\n\n";
    o << "Question word not in index: " << r.questions_not_found << " times.\n";
    o << "Answer word not in index: " << r.answer_words_not_found << " times.\n";
    o << "Other word not in index: " << r.other_words_not_found << " times.\n";
    return o.str();
}

// ---- correlation with human judgments

struct JudgmentRow {
    std::string word1, word2;
    double human = 0;
};

inline std::vector<JudgmentRow> load_judgments(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open judgment file " + path);
    std::vector<JudgmentRow> rows;
    std::string raw;
    std::size_t ln = 0;
    while (std::getline(in, raw)) {
        ++ln;
        auto line = text::trim(raw);
        if (line.empty() || line[0] == '#') continue;
        auto f = text::split(line, ',');
        if (f.size() != 3) throw ParseError(path, ln, "expected word1,word2,score");
        auto num = std::string(text::trim(f[2]));
        double v = 0;
        auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
        if (ec != std::errc() || p != num.data() + num.size()) {
            if (ln == 1) continue;   // header
            throw ParseError(path, ln, "score is not a number");
        }
        rows.push_back({std::string(text::trim(f[0])), std::string(text::trim(f[1])), v});
    }
    return rows;
}

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 3) throw Error("correlation needs at least 3 paired rows");
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0 || syy == 0) throw Error("correlation undefined: zero variance");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

struct CorrelationReport {
    double r = 0;
    std::size_t pairs = 0, not_found = 0;
    std::vector<int> sim1;   // per row; 0 for unindexed pairs
};

inline CorrelationReport correlate(const Index& idx, const std::vector<JudgmentRow>& rows) {
    CorrelationReport rep;
    std::vector<double> human, machine;
    for (auto& row : rows) {
        int s = 0;
        try {
            s = sim1(idx, row.word1, row.word2);
        } catch (const WordNotFound&) {
            ++rep.not_found;
        }
        rep.sim1.push_back(s);
        human.push_back(row.human);
        machine.push_back(s);
    }
    rep.pairs = rows.size();
    rep.r = pearson(human, machine);
    return rep;
}

} // namespace lexkb
