#ifndef RELSENT_TEXTPROC_HPP
#define RELSENT_TEXTPROC_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace relsent {

enum class StopwordMode { remove, keep };

std::string to_string(StopwordMode m);
StopwordMode stopword_mode_from_string(const std::string& s);

/// Preprocessing switches shared by every model. Stemming is always on in
/// the experiment grids; the flag exists for diagnostics.
struct PipelineConfig {
    StopwordMode stopword_mode = StopwordMode::remove;
    bool stem = true;
    bool lowercase = true;

    bool operator==(const PipelineConfig&) const = default;
};

/// Immutable set of lowercase stopwords.
class StopwordList {
public:
    static StopwordList bundled();
    /// Plain text, one word per line, '#' starts a comment.
    static StopwordList from_file(const std::string& path);
    static StopwordList from_words(std::vector<std::string> words);

    bool contains(const std::string& word) const { return words_.count(word) > 0; }
    std::size_t size() const { return words_.size(); }
    std::vector<std::string> sorted_words() const;

private:
    std::unordered_set<std::string> words_;
};

/// Splits on whitespace, strips leading/trailing punctuation from each
/// token, drops tokens that become empty. Pure-number tokens survive.
std::vector<std::string> tokenize(const std::string& text, bool lowercase = true);

/// Classic Porter suffix-stripping algorithm (all five steps). Words of
/// length <= 2 and tokens containing non-alphabetic characters pass
/// through unchanged.
std::string porter_stem(const std::string& word);

/// tokenize -> lowercase -> stopword filter (before stemming) -> stem.
/// Term order and duplicates are preserved.
std::vector<std::string> preprocess(const std::string& text, const PipelineConfig& config,
                                    const StopwordList& stopwords);

// ---------------------------------------------------------------------------
// Part-of-speech tags: the 36 word-level Penn Treebank tags.

inline constexpr int kPosTagCount = 36;

/// Index of a tag in the canonical 36-tag table, or -1 if unknown.
int pos_tag_index(const std::string& tag);
const std::string& pos_tag_name(int index);
const std::array<std::string, kPosTagCount>& pos_tag_names();

/// Closed-class lexicon plus suffix rules. A deliberately crude stand-in
/// for a statistical tagger; accuracy is enough to populate POS-count
/// features, nothing more.
class FallbackTagger {
public:
    FallbackTagger();
    /// Lexicon override: one "word<TAB>TAG" entry per line, '#' comments.
    void load_lexicon(const std::string& path);

    /// One tag index per token.
    std::vector<int> tag(const std::vector<std::string>& tokens) const;

private:
    std::unordered_map<std::string, int> lexicon_;
};

/// Counts per tag. `tags` holds tag indices (one per token).
std::array<double, kPosTagCount> pos_frequencies(const std::vector<int>& tags);

}  // namespace relsent

#endif
