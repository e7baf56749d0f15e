#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "relsent/corpus.hpp"
#include "relsent/errors.hpp"
#include "relsent/rng.hpp"

namespace relsent {
namespace {

// Nonsense content words: CV(C) syllables, no stemmer-active endings, so
// they cannot collide with the filler stopwords.
const char* const kOnsets[] = {"b", "d",  "f",  "g",  "k",  "l",  "m",  "n",  "p",  "r",
                               "s", "t",  "v",  "z",  "br", "dr", "gr", "kl", "pl", "tr"};
const char* const kVowels[] = {"a", "e", "i", "o", "u"};
const char* const kCodas[] = {"n", "r", "k", "m", "d", "p"};

std::string content_word(std::size_t index) {
    constexpr std::size_t n_on = std::size(kOnsets);
    constexpr std::size_t n_vo = std::size(kVowels);
    constexpr std::size_t n_co = std::size(kCodas);
    std::size_t x = index;
    std::string w = kOnsets[x % n_on];
    x /= n_on;
    w += kVowels[x % n_vo];
    x /= n_vo;
    w += kOnsets[x % n_on];
    x /= n_on;
    w += kVowels[x % n_vo];
    x /= n_vo;
    w += kCodas[x % n_co];
    return w;
}

// Filler pool: very common stopwords (all present in the bundled list).
const char* const kFillers[] = {
    "the", "a",    "of",   "to",   "in",   "is",   "are",  "was",  "for",  "on",
    "with", "as",  "by",   "at",   "this", "that", "it",   "be",   "or",   "an",
    "will", "has", "have", "had",  "not",  "they", "their", "there", "then", "than",
    "each", "some", "all",  "into", "from", "more", "most", "other", "such", "only"};

const char* const kQuestionMarkers[] = {"how", "many", "what", "much", "if", "will", "there", "be"};

void validate_config(const GenConfig& cfg) {
    if (cfg.n_problems <= 0) throw DataError("gen config: n_problems must be positive");
    if (cfg.relevant_theme_vocab <= 0 || cfg.irrelevant_theme_vocab <= 0 || cfg.shared_vocab <= 0)
        throw DataError("gen config: vocab sizes must be positive");
    if (cfg.shared_vocab > static_cast<int>(std::size(kFillers)))
        throw DataError("gen config: shared_vocab exceeds the filler pool size of " +
                        std::to_string(std::size(kFillers)));
    if (cfg.theme_terms_per_problem < 2)
        throw DataError("gen config: theme_terms_per_problem must be at least 2");
    if (cfg.theme_terms_per_problem > cfg.relevant_theme_vocab ||
        cfg.theme_terms_per_problem > cfg.irrelevant_theme_vocab)
        throw DataError("gen config: theme size exceeds a theme vocabulary");
    if (cfg.relevant_min < 1 || cfg.relevant_max < cfg.relevant_min)
        throw DataError("gen config: bad relevant sentence count range");
    if (cfg.sentence_len_min < 2 || cfg.sentence_len_max < cfg.sentence_len_min)
        throw DataError("gen config: bad sentence length range");
    if (cfg.irrelevant_count_distribution.empty())
        throw DataError("gen config: irrelevant_count_distribution is empty");
    double total = 0;
    int max_irr = 0;
    for (const auto& [count, prob] : cfg.irrelevant_count_distribution) {
        if (count < 0 || prob < 0) throw DataError("gen config: bad distribution entry");
        total += prob;
        max_irr = std::max(max_irr, count);
    }
    if (std::fabs(total - 1.0) > 1e-9)
        throw DataError("gen config: irrelevant_count_distribution must sum to 1");
    if (cfg.relevant_max + max_irr > kMaxStatements)
        throw DataError("gen config: relevant_max + max irrelevant count exceeds the cap of " +
                        std::to_string(kMaxStatements));
    if (cfg.hard_relevant_prob < 0 || cfg.hard_relevant_prob > 1 ||
        cfg.distractor_crossover < 0 || cfg.distractor_crossover > 1 ||
        cfg.relevant_number_prob < 0 || cfg.relevant_number_prob > 1 ||
        cfg.irrelevant_number_prob < 0 || cfg.irrelevant_number_prob > 1)
        throw DataError("gen config: probabilities must be in [0,1]");
}

std::vector<std::size_t> sample_distinct(Rng& rng, std::size_t pool_size, std::size_t k,
                                         const std::set<std::size_t>& exclude) {
    std::vector<std::size_t> out;
    std::set<std::size_t> used(exclude);
    while (out.size() < k) {
        auto idx = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(pool_size) - 1));
        if (used.insert(idx).second) out.push_back(idx);
    }
    return out;
}

std::string number_token(Rng& rng, int lo, int hi) {
    return std::to_string(rng.uniform_int(lo, hi));
}

std::string render(std::vector<std::string> tokens, bool question) {
    std::string text;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) text += ' ';
        text += tokens[i];
    }
    if (!text.empty() && text[0] >= 'a' && text[0] <= 'z')
        text[0] = static_cast<char>(text[0] - 'a' + 'A');
    text += question ? '?' : '.';
    return text;
}

}  // namespace

Corpus generate_synthetic(const GenConfig& cfg, std::uint64_t seed) {
    validate_config(cfg);
    Rng rng(seed);
    FallbackTagger tagger;

    // Relevant-theme pool occupies content-word indices [0, R); the
    // irrelevant-only pool [R, R+I).
    const auto rel_pool = static_cast<std::size_t>(cfg.relevant_theme_vocab);
    const auto irr_pool = static_cast<std::size_t>(cfg.irrelevant_theme_vocab);

    std::vector<int> irr_counts;
    std::vector<double> irr_probs;
    for (const auto& [count, prob] : cfg.irrelevant_count_distribution) {
        irr_counts.push_back(count);
        irr_probs.push_back(prob);
    }

    Corpus corpus;
    corpus.name = "synthetic";
    for (int pi = 0; pi < cfg.n_problems; ++pi) {
        const int n_irr = irr_counts[rng.pick_weighted(irr_probs)];
        const int n_rel = static_cast<int>(rng.uniform_int(cfg.relevant_min, cfg.relevant_max));

        // Problem theme: the first half anchors the question, the second
        // half ties "hard" relevant sentences to their siblings instead.
        const auto theme_k = static_cast<std::size_t>(cfg.theme_terms_per_problem);
        std::vector<std::size_t> theme = sample_distinct(rng, rel_pool, theme_k, {});
        std::set<std::size_t> theme_set(theme.begin(), theme.end());
        const std::size_t q_count = (theme_k + 1) / 2;
        std::vector<std::string> q_terms, nonq_terms;
        for (std::size_t t = 0; t < theme.size(); ++t)
            (t < q_count ? q_terms : nonq_terms).push_back(content_word(theme[t]));

        // Distractor theme: mostly relevant-pool words (other problems use
        // them as relevant themes, so they carry no global label signal),
        // the rest from the irrelevant-only pool.
        std::vector<std::string> d_terms;
        std::set<std::size_t> d_used_rel(theme_set);
        std::set<std::size_t> d_used_irr;
        for (std::size_t t = 0; t < theme_k; ++t) {
            if (rng.next_unit() < cfg.distractor_crossover) {
                auto pick = sample_distinct(rng, rel_pool, 1, d_used_rel);
                d_used_rel.insert(pick[0]);
                d_terms.push_back(content_word(pick[0]));
            } else {
                auto pick = sample_distinct(rng, irr_pool, 1, d_used_irr);
                d_used_irr.insert(pick[0]);
                d_terms.push_back(content_word(rel_pool + pick[0]));
            }
        }

        auto pick_some = [&](const std::vector<std::string>& pool, int lo, int hi) {
            int k = static_cast<int>(rng.uniform_int(lo, std::min<int>(hi, static_cast<int>(pool.size()))));
            std::vector<std::size_t> order(pool.size());
            for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
            rng.shuffle(order);
            std::vector<std::string> out;
            for (int t = 0; t < k; ++t) out.push_back(pool[order[static_cast<std::size_t>(t)]]);
            return out;
        };
        auto pad_with_fillers = [&](std::vector<std::string>& tokens) {
            auto target = static_cast<std::size_t>(
                rng.uniform_int(cfg.sentence_len_min, cfg.sentence_len_max));
            while (tokens.size() < target) {
                auto f = static_cast<std::size_t>(rng.uniform_int(0, cfg.shared_vocab - 1));
                tokens.push_back(kFillers[f]);
            }
            rng.shuffle(tokens);
        };

        struct Draft {
            std::string text;
            Label label;
        };
        std::vector<Draft> statements;

        for (int r = 0; r < n_rel; ++r) {
            const bool hard = r > 0 && rng.next_unit() < cfg.hard_relevant_prob;
            std::vector<std::string> tokens =
                hard ? pick_some(nonq_terms, 2, 3) : pick_some(q_terms, 2, 3);
            if (!hard && !nonq_terms.empty() && rng.next_unit() < 0.5) {
                tokens.push_back(nonq_terms[static_cast<std::size_t>(
                    rng.uniform_int(0, static_cast<std::int64_t>(nonq_terms.size()) - 1))]);
            }
            if (rng.next_unit() < cfg.relevant_number_prob)
                tokens.push_back(number_token(rng, 2, 30));
            pad_with_fillers(tokens);
            statements.push_back({render(std::move(tokens), false), Label::relevant});
        }
        for (int r = 0; r < n_irr; ++r) {
            std::vector<std::string> tokens = pick_some(d_terms, 2, 3);
            if (rng.next_unit() < cfg.irrelevant_number_prob)
                tokens.push_back(number_token(rng, 2, 999));
            pad_with_fillers(tokens);
            statements.push_back({render(std::move(tokens), false), Label::irrelevant});
        }
        rng.shuffle(statements);

        std::vector<std::string> q_tokens = pick_some(q_terms, 2, 3);
        {
            auto markers = static_cast<std::size_t>(rng.uniform_int(2, 3));
            for (std::size_t t = 0; t < markers; ++t)
                q_tokens.push_back(kQuestionMarkers[static_cast<std::size_t>(
                    rng.uniform_int(0, static_cast<std::int64_t>(std::size(kQuestionMarkers)) - 1))]);
            if (rng.next_unit() < 0.5) q_tokens.push_back(number_token(rng, 2, 30));
            rng.shuffle(q_tokens);
        }
        Draft question{render(std::move(q_tokens), true), Label::unlabeled};

        std::size_t q_pos = statements.size();
        if (rng.next_unit() >= 0.8)
            q_pos = static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<std::int64_t>(statements.size())));

        WordProblem problem;
        char pid[16];
        std::snprintf(pid, sizeof(pid), "p%04d", pi + 1);
        problem.id = pid;
        int sid = 0;
        auto add_sentence = [&](const Draft& d, Role role) {
            Sentence s;
            s.id = "s" + std::to_string(++sid);
            s.text = d.text;
            s.role = role;
            s.label = role == Role::statement ? d.label : Label::unlabeled;
            s.pos_tags = tagger.tag(tokenize(s.text));
            s.has_pos_tags = true;
            problem.sentences.push_back(std::move(s));
        };
        for (std::size_t t = 0; t < statements.size(); ++t) {
            if (t == q_pos) add_sentence(question, Role::question);
            add_sentence(statements[t], Role::statement);
        }
        if (q_pos >= statements.size()) add_sentence(question, Role::question);

        validate_problem(problem);
        corpus.problems.push_back(std::move(problem));
    }
    return corpus;
}

}  // namespace relsent
