#ifndef RELSENT_CORPUS_HPP
#define RELSENT_CORPUS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relsent/textproc.hpp"

namespace relsent {

enum class Role { question, statement };
enum class Label { relevant, irrelevant, unlabeled };

std::string to_string(Role r);
std::string to_string(Label l);

/// Hard cap on statement sentences per problem: joint inference enumerates
/// all 2^N labelings, so N is bounded at load time.
inline constexpr int kMaxStatements = 20;

struct Sentence {
    std::string id;
    std::string text;
    Role role = Role::statement;
    Label label = Label::unlabeled;
    /// One tag index per token of tokenize(text); empty when untagged.
    std::vector<int> pos_tags;
    bool has_pos_tags = false;
};

struct WordProblem {
    std::string id;
    std::vector<Sentence> sentences;

    const Sentence& question() const;
    /// Indices into `sentences` for the statement sentences, in order.
    std::vector<std::size_t> statement_indices() const;
    int irrelevant_count() const;
};

struct Corpus {
    std::string name;
    std::vector<WordProblem> problems;

    std::size_t statement_count() const;
    bool fully_labeled() const;
};

// ---------------------------------------------------------------------------
// JSONL I/O. One problem per line:
// {"id": str, "sentences": [{"id": str, "text": str, "role": "question"|
//  "statement", "label": "relevant"|"irrelevant"|null, "pos_tags": [str]|null}]}

Corpus load_corpus(const std::string& path);
void save_corpus(const Corpus& corpus, const std::string& path);
std::string corpus_to_jsonl(const Corpus& corpus);
Corpus corpus_from_jsonl(const std::string& text, const std::string& origin);

/// Validates every type invariant; throws DataError with problem/sentence ids.
void validate_problem(const WordProblem& problem);

// ---------------------------------------------------------------------------
// Grouped splitting

enum class Grouping { by_irrelevant_count, none };

struct SplitSpec {
    double train_fraction = 0.25;
    std::uint64_t seed = 0;
    Grouping grouping = Grouping::by_irrelevant_count;
};

struct SplitResult {
    Corpus train;
    Corpus test;
    std::vector<std::string> warnings;
    /// Group key -> (train count, test count). Keys: "0", "1", "2", "3+"
    /// (or "all" when grouping == none).
    std::map<std::string, std::pair<int, int>> group_sizes;
};

/// Within each irrelevant-count group {0, 1, 2, >=3}, floor(fraction * size)
/// problems (at least 1 for a non-empty group) are drawn into train by a
/// seeded shuffle; the rest go to test.
SplitResult split_corpus(const Corpus& corpus, const SplitSpec& spec);

// ---------------------------------------------------------------------------
// Statistics

struct LabelStats {
    int sentence_count = 0;
    double avg_len_stop_removed = 0.0;  // mean terms per sentence, stopwords removed
    double avg_len_stop_kept = 0.0;     // mean terms per sentence, stopwords kept
    std::array<double, kPosTagCount> pos_avg{};  // mean tag count per sentence
};

struct StatsReport {
    int problem_count = 0;
    int question_count = 0;
    LabelStats relevant;
    LabelStats irrelevant;
    std::map<std::string, int> irrelevant_group_sizes;  // keys "0","1","2","3+"

    std::string to_text() const;
    std::string to_json() const;
};

StatsReport corpus_stats(const Corpus& corpus, const StopwordList& stopwords);

// ---------------------------------------------------------------------------
// Synthetic corpus generator. Substitute for the private textbook corpus:
// every problem is a question plus themed relevant sentences and distractor
// irrelevant sentences, so that intra-class similarity beats cross-class
// similarity and question overlap marks relevant sentences.

struct GenConfig {
    int n_problems = 120;
    /// irrelevant-sentence count -> probability; must sum to 1.
    std::map<int, double> irrelevant_count_distribution = {
        {1, 0.47}, {2, 0.33}, {3, 0.15}, {4, 0.05}};
    int relevant_theme_vocab = 220;   // pool eligible for relevant themes
    int irrelevant_theme_vocab = 80;  // pool used only by distractor themes
    int shared_vocab = 40;            // stopword-like filler pool
    int theme_terms_per_problem = 6;
    int relevant_min = 2;
    int relevant_max = 4;
    int sentence_len_min = 4;
    int sentence_len_max = 9;
    /// Fraction of relevant statements built from the half of the theme the
    /// question does not mention (low question similarity, high similarity
    /// to sibling relevant sentences).
    double hard_relevant_prob = 0.35;
    /// Fraction of distractor-theme draws taken from the relevant-theme pool
    /// (dilutes the lexical signal without touching per-problem structure).
    double distractor_crossover = 0.75;
    double relevant_number_prob = 0.9;
    double irrelevant_number_prob = 0.25;
};

Corpus generate_synthetic(const GenConfig& config, std::uint64_t seed);

}  // namespace relsent

#endif
