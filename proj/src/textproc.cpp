#include "relsent/textproc.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "relsent/errors.hpp"

#include "stopwords_data.inc"

namespace relsent {

std::string to_string(StopwordMode m) {
    return m == StopwordMode::remove ? "remove" : "keep";
}

StopwordMode stopword_mode_from_string(const std::string& s) {
    if (s == "remove") return StopwordMode::remove;
    if (s == "keep") return StopwordMode::keep;
    throw UsageError("unknown stopword mode '" + s + "' (expected remove|keep)");
}

// ---------------------------------------------------------------------------
// StopwordList

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string ascii_lower(std::string s) {
    for (char& c : s)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return s;
}

StopwordList parse_stopword_stream(std::istream& in, const std::string& origin) {
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        std::string w = trim(line);
        if (w.empty() || w[0] == '#') continue;
        if (w.find_first_of(" \t") != std::string::npos)
            throw DataError(origin + ": stopword entry contains whitespace: '" + w + "'");
        words.push_back(ascii_lower(w));
    }
    return StopwordList::from_words(std::move(words));
}

}  // namespace

StopwordList StopwordList::bundled() {
    std::istringstream in(kDefaultStopwordsText);
    return parse_stopword_stream(in, "<bundled stopwords>");
}

StopwordList StopwordList::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open stopword file: " + path);
    return parse_stopword_stream(in, path);
}

StopwordList StopwordList::from_words(std::vector<std::string> words) {
    StopwordList list;
    for (auto& w : words) list.words_.insert(ascii_lower(std::move(w)));
    if (list.words_.empty()) throw DataError("stopword list is empty");
    return list;
}

std::vector<std::string> StopwordList::sorted_words() const {
    std::vector<std::string> out(words_.begin(), words_.end());
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Tokenizer

namespace {

// ASCII whitespace plus the common Unicode space/line separators, matched
// on their UTF-8 byte sequences.
bool match_space(const std::string& s, std::size_t i, std::size_t& len) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
        len = 1;
        return true;
    }
    auto at = [&](std::size_t k) {
        return k < s.size() ? static_cast<unsigned char>(s[k]) : 0u;
    };
    if (c == 0xC2 && at(i + 1) == 0xA0) { len = 2; return true; }           // NBSP
    if (c == 0xE2 && at(i + 1) == 0x80 &&
        ((at(i + 2) >= 0x80 && at(i + 2) <= 0x8A) ||                         // U+2000..200A
         at(i + 2) == 0xA8 || at(i + 2) == 0xA9 || at(i + 2) == 0xAF)) {
        len = 3;
        return true;
    }
    if (c == 0xE3 && at(i + 1) == 0x80 && at(i + 2) == 0x80) { len = 3; return true; }  // U+3000
    return false;
}

bool is_strip_punct(unsigned char c) {
    return c < 0x80 && std::ispunct(c);
}

}  // namespace

std::vector<std::string> tokenize(const std::string& text, bool lowercase) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        std::size_t len = 0;
        if (match_space(text, i, len)) {
            i += len;
            continue;
        }
        std::size_t start = i;
        while (i < n && !match_space(text, i, len)) ++i;
        std::string tok = text.substr(start, i - start);
        std::size_t b = 0, e = tok.size();
        while (b < e && is_strip_punct(static_cast<unsigned char>(tok[b]))) ++b;
        while (e > b && is_strip_punct(static_cast<unsigned char>(tok[e - 1]))) --e;
        if (e > b) {
            std::string t = tok.substr(b, e - b);
            if (lowercase) t = ascii_lower(std::move(t));
            tokens.push_back(std::move(t));
        }
    }
    return tokens;
}

std::vector<std::string> preprocess(const std::string& text, const PipelineConfig& config,
                                    const StopwordList& stopwords) {
    std::vector<std::string> terms = tokenize(text, config.lowercase);
    std::vector<std::string> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (config.stopword_mode == StopwordMode::remove && stopwords.contains(t)) continue;
        out.push_back(config.stem ? porter_stem(t) : std::move(t));
    }
    return out;
}

// ---------------------------------------------------------------------------
// POS tags

namespace {

const std::array<std::string, kPosTagCount> kTagNames = {
    "CC",  "CD",  "DT",   "EX",  "FW",  "IN",  "JJ",  "JJR", "JJS",
    "LS",  "MD",  "NN",   "NNS", "NNP", "NNPS", "PDT", "POS", "PRP",
    "PRP$", "RB", "RBR",  "RBS", "RP",  "SYM", "TO",  "UH",  "VB",
    "VBD", "VBG", "VBN",  "VBP", "VBZ", "WDT", "WP",  "WP$", "WRB",
};

}  // namespace

const std::array<std::string, kPosTagCount>& pos_tag_names() { return kTagNames; }

int pos_tag_index(const std::string& tag) {
    for (int i = 0; i < kPosTagCount; ++i)
        if (kTagNames[static_cast<std::size_t>(i)] == tag) return i;
    return -1;
}

const std::string& pos_tag_name(int index) {
    return kTagNames.at(static_cast<std::size_t>(index));
}

std::array<double, kPosTagCount> pos_frequencies(const std::vector<int>& tags) {
    std::array<double, kPosTagCount> counts{};
    for (int t : tags) {
        if (t < 0 || t >= kPosTagCount) throw DataError("POS tag index out of range");
        counts[static_cast<std::size_t>(t)] += 1.0;
    }
    return counts;
}

// ---------------------------------------------------------------------------
// Fallback tagger

namespace {

struct LexEntry {
    const char* word;
    const char* tag;
};

// Closed-class words only; open-class words go through the suffix rules.
const LexEntry kClosedClass[] = {
    {"a", "DT"}, {"an", "DT"}, {"the", "DT"}, {"this", "DT"}, {"that", "DT"},
    {"these", "DT"}, {"those", "DT"}, {"each", "DT"}, {"every", "DT"},
    {"some", "DT"}, {"any", "DT"}, {"no", "DT"}, {"all", "PDT"}, {"both", "DT"},
    {"half", "PDT"},
    {"i", "PRP"}, {"you", "PRP"}, {"he", "PRP"}, {"she", "PRP"}, {"it", "PRP"},
    {"we", "PRP"}, {"they", "PRP"}, {"him", "PRP"}, {"her", "PRP"}, {"them", "PRP"},
    {"me", "PRP"}, {"us", "PRP"}, {"himself", "PRP"}, {"herself", "PRP"},
    {"itself", "PRP"}, {"themselves", "PRP"},
    {"my", "PRP$"}, {"your", "PRP$"}, {"his", "PRP$"}, {"its", "PRP$"},
    {"our", "PRP$"}, {"their", "PRP$"},
    {"in", "IN"}, {"on", "IN"}, {"at", "IN"}, {"by", "IN"}, {"for", "IN"},
    {"with", "IN"}, {"from", "IN"}, {"of", "IN"}, {"into", "IN"}, {"onto", "IN"},
    {"over", "IN"}, {"under", "IN"}, {"between", "IN"}, {"among", "IN"},
    {"through", "IN"}, {"during", "IN"}, {"except", "IN"}, {"about", "IN"},
    {"against", "IN"}, {"after", "IN"}, {"before", "IN"}, {"if", "IN"},
    {"because", "IN"}, {"while", "IN"}, {"than", "IN"}, {"per", "IN"},
    {"what", "WP"}, {"who", "WP"}, {"whom", "WP"}, {"whose", "WP$"},
    {"which", "WDT"}, {"how", "WRB"}, {"when", "WRB"}, {"where", "WRB"},
    {"why", "WRB"},
    {"can", "MD"}, {"could", "MD"}, {"may", "MD"}, {"might", "MD"},
    {"must", "MD"}, {"shall", "MD"}, {"should", "MD"}, {"will", "MD"},
    {"would", "MD"},
    {"and", "CC"}, {"or", "CC"}, {"but", "CC"}, {"nor", "CC"}, {"so", "CC"},
    {"yet", "CC"},
    {"to", "TO"},
    {"there", "EX"},
    {"not", "RB"}, {"n't", "RB"}, {"very", "RB"}, {"only", "RB"},
    {"is", "VBZ"}, {"are", "VBP"}, {"am", "VBP"}, {"was", "VBD"},
    {"were", "VBD"}, {"be", "VB"}, {"been", "VBN"}, {"being", "VBG"},
    {"has", "VBZ"}, {"have", "VBP"}, {"had", "VBD"}, {"do", "VBP"},
    {"does", "VBZ"}, {"did", "VBD"},
    {"one", "CD"}, {"two", "CD"}, {"three", "CD"}, {"four", "CD"},
    {"five", "CD"}, {"six", "CD"}, {"seven", "CD"}, {"eight", "CD"},
    {"nine", "CD"}, {"ten", "CD"}, {"eleven", "CD"}, {"twelve", "CD"},
    {"twenty", "CD"}, {"thirty", "CD"}, {"forty", "CD"}, {"fifty", "CD"},
    {"hundred", "CD"}, {"thousand", "CD"},
    {"many", "JJ"}, {"more", "JJR"}, {"most", "JJS"}, {"few", "JJ"},
    {"equal", "JJ"}, {"same", "JJ"}, {"other", "JJ"},
};

bool is_number_token(const std::string& t) {
    bool digit = false;
    for (char c : t) {
        if (c >= '0' && c <= '9') {
            digit = true;
        } else if (c != '.' && c != ',' && c != '-' && c != '/') {
            return false;
        }
    }
    return digit;
}

bool ends_with_str(const std::string& w, const char* suf) {
    std::size_t len = std::char_traits<char>::length(suf);
    return w.size() > len && w.compare(w.size() - len, len, suf) == 0;
}

}  // namespace

FallbackTagger::FallbackTagger() {
    for (const auto& e : kClosedClass) {
        int idx = pos_tag_index(e.tag);
        lexicon_.emplace(e.word, idx);
    }
}

void FallbackTagger::load_lexicon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open tagger lexicon: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t tab = t.find('\t');
        if (tab == std::string::npos)
            throw DataError(path + ":" + std::to_string(lineno) + ": expected word<TAB>TAG");
        std::string word = ascii_lower(trim(t.substr(0, tab)));
        std::string tag = trim(t.substr(tab + 1));
        int idx = pos_tag_index(tag);
        if (idx < 0)
            throw DataError(path + ":" + std::to_string(lineno) + ": unknown POS tag '" + tag + "'");
        lexicon_[word] = idx;
    }
}

std::vector<int> FallbackTagger::tag(const std::vector<std::string>& tokens) const {
    std::vector<int> tags;
    tags.reserve(tokens.size());
    for (const auto& raw : tokens) {
        std::string t = ascii_lower(raw);
        auto it = lexicon_.find(t);
        if (it != lexicon_.end()) {
            tags.push_back(it->second);
        } else if (is_number_token(t)) {
            tags.push_back(pos_tag_index("CD"));
        } else if (ends_with_str(t, "ly")) {
            tags.push_back(pos_tag_index("RB"));
        } else if (ends_with_str(t, "ing")) {
            tags.push_back(pos_tag_index("VBG"));
        } else if (ends_with_str(t, "ed")) {
            tags.push_back(pos_tag_index("VBD"));
        } else if (ends_with_str(t, "s")) {
            tags.push_back(pos_tag_index("NNS"));
        } else {
            tags.push_back(pos_tag_index("NN"));
        }
    }
    return tags;
}

}  // namespace relsent
