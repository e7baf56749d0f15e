#include "relsent/textproc.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

// Porter's 1980 suffix-stripping algorithm. Within each step the longest
// matching suffix is selected; if its condition fails, no rule of that
// step applies. Measure m counts VC sequences in [C](VC){m}[V].

namespace relsent {
namespace {

bool is_cons(const std::string& w, std::size_t i) {
    switch (w[i]) {
        case 'a': case 'e': case 'i': case 'o': case 'u':
            return false;
        case 'y':
            return i == 0 ? true : !is_cons(w, i - 1);
        default:
            return true;
    }
}

int measure(const std::string& stem) {
    int m = 0;
    bool prev_vowel = false;
    for (std::size_t i = 0; i < stem.size(); ++i) {
        bool cons = is_cons(stem, i);
        if (cons && prev_vowel) ++m;
        prev_vowel = !cons;
    }
    return m;
}

bool has_vowel(const std::string& stem) {
    for (std::size_t i = 0; i < stem.size(); ++i)
        if (!is_cons(stem, i)) return true;
    return false;
}

bool ends_double_cons(const std::string& w) {
    std::size_t n = w.size();
    return n >= 2 && w[n - 1] == w[n - 2] && is_cons(w, n - 1);
}

// Stem ends consonant-vowel-consonant and the final consonant is not w, x, y.
bool ends_cvc(const std::string& w) {
    std::size_t n = w.size();
    if (n < 3) return false;
    if (!is_cons(w, n - 1) || is_cons(w, n - 2) || !is_cons(w, n - 3)) return false;
    char c = w[n - 1];
    return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(const std::string& w, const char* suf) {
    std::size_t len = std::char_traits<char>::length(suf);
    return w.size() >= len && w.compare(w.size() - len, len, suf) == 0;
}

enum class Cond { none, m_gt_0, m_gt_1, m_gt_1_ends_s_or_t };

struct Rule {
    const char* suffix;
    const char* replacement;
    Cond cond;
};

bool cond_holds(Cond c, const std::string& stem) {
    switch (c) {
        case Cond::none: return true;
        case Cond::m_gt_0: return measure(stem) > 0;
        case Cond::m_gt_1: return measure(stem) > 1;
        case Cond::m_gt_1_ends_s_or_t:
            return measure(stem) > 1 && !stem.empty() &&
                   (stem.back() == 's' || stem.back() == 't');
    }
    return false;
}

// Applies the longest matching rule of a step, if its condition holds.
template <std::size_t N>
std::string apply_step(const std::string& w, const Rule (&rules)[N]) {
    const Rule* best = nullptr;
    std::size_t best_len = 0;
    for (const Rule& r : rules) {
        std::size_t len = std::char_traits<char>::length(r.suffix);
        if (len > best_len && ends_with(w, r.suffix)) {
            best = &r;
            best_len = len;
        }
    }
    if (!best) return w;
    std::string stem = w.substr(0, w.size() - best_len);
    if (!cond_holds(best->cond, stem)) return w;
    return stem + best->replacement;
}

std::string step1a(const std::string& w) {
    static const Rule rules[] = {
        {"sses", "ss", Cond::none},
        {"ies", "i", Cond::none},
        {"ss", "ss", Cond::none},
        {"s", "", Cond::none},
    };
    return apply_step(w, rules);
}

std::string step1b(std::string w) {
    if (ends_with(w, "eed")) {
        std::string stem = w.substr(0, w.size() - 3);
        if (measure(stem) > 0) return stem + "ee";
        return w;
    }
    bool fired = false;
    if (ends_with(w, "ed")) {
        std::string stem = w.substr(0, w.size() - 2);
        if (has_vowel(stem)) { w = stem; fired = true; }
    } else if (ends_with(w, "ing")) {
        std::string stem = w.substr(0, w.size() - 3);
        if (has_vowel(stem)) { w = stem; fired = true; }
    }
    if (fired) {
        if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) return w + "e";
        if (ends_double_cons(w) && w.back() != 'l' && w.back() != 's' && w.back() != 'z')
            return w.substr(0, w.size() - 1);
        if (measure(w) == 1 && ends_cvc(w)) return w + "e";
    }
    return w;
}

std::string step1c(const std::string& w) {
    if (w.size() >= 2 && w.back() == 'y' && has_vowel(w.substr(0, w.size() - 1)))
        return w.substr(0, w.size() - 1) + "i";
    return w;
}

std::string step2(const std::string& w) {
    static const Rule rules[] = {
        {"ational", "ate", Cond::m_gt_0},  {"tional", "tion", Cond::m_gt_0},
        {"enci", "ence", Cond::m_gt_0},    {"anci", "ance", Cond::m_gt_0},
        {"izer", "ize", Cond::m_gt_0},     {"abli", "able", Cond::m_gt_0},
        {"alli", "al", Cond::m_gt_0},      {"entli", "ent", Cond::m_gt_0},
        {"eli", "e", Cond::m_gt_0},        {"ousli", "ous", Cond::m_gt_0},
        {"ization", "ize", Cond::m_gt_0},  {"ation", "ate", Cond::m_gt_0},
        {"ator", "ate", Cond::m_gt_0},     {"alism", "al", Cond::m_gt_0},
        {"iveness", "ive", Cond::m_gt_0},  {"fulness", "ful", Cond::m_gt_0},
        {"ousness", "ous", Cond::m_gt_0},  {"aliti", "al", Cond::m_gt_0},
        {"iviti", "ive", Cond::m_gt_0},    {"biliti", "ble", Cond::m_gt_0},
    };
    return apply_step(w, rules);
}

std::string step3(const std::string& w) {
    static const Rule rules[] = {
        {"icate", "ic", Cond::m_gt_0}, {"ative", "", Cond::m_gt_0},
        {"alize", "al", Cond::m_gt_0}, {"iciti", "ic", Cond::m_gt_0},
        {"ical", "ic", Cond::m_gt_0},  {"ful", "", Cond::m_gt_0},
        {"ness", "", Cond::m_gt_0},
    };
    return apply_step(w, rules);
}

std::string step4(const std::string& w) {
    static const Rule rules[] = {
        {"al", "", Cond::m_gt_1},    {"ance", "", Cond::m_gt_1},
        {"ence", "", Cond::m_gt_1},  {"er", "", Cond::m_gt_1},
        {"ic", "", Cond::m_gt_1},    {"able", "", Cond::m_gt_1},
        {"ible", "", Cond::m_gt_1},  {"ant", "", Cond::m_gt_1},
        {"ement", "", Cond::m_gt_1}, {"ment", "", Cond::m_gt_1},
        {"ent", "", Cond::m_gt_1},   {"ion", "", Cond::m_gt_1_ends_s_or_t},
        {"ou", "", Cond::m_gt_1},    {"ism", "", Cond::m_gt_1},
        {"ate", "", Cond::m_gt_1},   {"iti", "", Cond::m_gt_1},
        {"ous", "", Cond::m_gt_1},   {"ive", "", Cond::m_gt_1},
        {"ize", "", Cond::m_gt_1},
    };
    return apply_step(w, rules);
}

std::string step5a(const std::string& w) {
    if (!w.empty() && w.back() == 'e') {
        std::string stem = w.substr(0, w.size() - 1);
        int m = measure(stem);
        if (m > 1 || (m == 1 && !ends_cvc(stem))) return stem;
    }
    return w;
}

std::string step5b(const std::string& w) {
    if (w.size() >= 2 && w.back() == 'l' && ends_double_cons(w) && measure(w) > 1)
        return w.substr(0, w.size() - 1);
    return w;
}

}  // namespace

std::string porter_stem(const std::string& word) {
    if (word.size() <= 2) return word;
    for (char c : word)
        if (c < 'a' || c > 'z') return word;  // non-alphabetic tokens pass through
    std::string w = step1a(word);
    w = step1b(w);
    w = step1c(w);
    w = step2(w);
    w = step3(w);
    w = step4(w);
    w = step5a(w);
    w = step5b(w);
    return w;
}

}  // namespace relsent
