#include "relsent/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "relsent/errors.hpp"
#include "relsent/rng.hpp"

namespace relsent {

using json = nlohmann::ordered_json;

std::string to_string(Role r) {
    return r == Role::question ? "question" : "statement";
}

std::string to_string(Label l) {
    switch (l) {
        case Label::relevant: return "relevant";
        case Label::irrelevant: return "irrelevant";
        default: return "unlabeled";
    }
}

const Sentence& WordProblem::question() const {
    for (const auto& s : sentences)
        if (s.role == Role::question) return s;
    throw DataError("problem '" + id + "' has no question sentence");
}

std::vector<std::size_t> WordProblem::statement_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < sentences.size(); ++i)
        if (sentences[i].role == Role::statement) out.push_back(i);
    return out;
}

int WordProblem::irrelevant_count() const {
    int n = 0;
    for (const auto& s : sentences)
        if (s.role == Role::statement && s.label == Label::irrelevant) ++n;
    return n;
}

std::size_t Corpus::statement_count() const {
    std::size_t n = 0;
    for (const auto& p : problems) n += p.statement_indices().size();
    return n;
}

bool Corpus::fully_labeled() const {
    for (const auto& p : problems)
        for (const auto& s : p.sentences)
            if (s.role == Role::statement && s.label == Label::unlabeled) return false;
    return true;
}

void validate_problem(const WordProblem& problem) {
    if (problem.id.empty()) throw DataError("problem with empty id");
    int questions = 0;
    int statements = 0;
    std::set<std::string> ids;
    for (const auto& s : problem.sentences) {
        if (s.id.empty())
            throw DataError("problem '" + problem.id + "': sentence with empty id");
        if (!ids.insert(s.id).second)
            throw DataError("problem '" + problem.id + "': duplicate sentence id '" + s.id + "'");
        std::string t = s.text;
        if (t.find_first_not_of(" \t\r\n") == std::string::npos)
            throw DataError("problem '" + problem.id + "', sentence '" + s.id + "': empty text");
        if (s.role == Role::question) ++questions;
        else ++statements;
        if (s.has_pos_tags) {
            std::size_t n_tokens = tokenize(s.text).size();
            if (s.pos_tags.size() != n_tokens)
                throw DataError("problem '" + problem.id + "', sentence '" + s.id +
                                "': pos_tags length " + std::to_string(s.pos_tags.size()) +
                                " does not match token count " + std::to_string(n_tokens));
        }
    }
    if (questions == 0)
        throw DataError("problem '" + problem.id + "': no question sentence");
    if (questions > 1)
        throw DataError("problem '" + problem.id + "': multiple question sentences");
    if (statements < 1)
        throw DataError("problem '" + problem.id + "': no statement sentences");
    if (statements > kMaxStatements)
        throw DataError("problem '" + problem.id + "': " + std::to_string(statements) +
                        " statement sentences exceed the enumeration cap of " +
                        std::to_string(kMaxStatements));
}

// ---------------------------------------------------------------------------
// JSONL

namespace {

Sentence sentence_from_json(const json& j, const std::string& where) {
    Sentence s;
    if (!j.is_object()) throw DataError(where + ": sentence is not an object");
    try {
        s.id = j.at("id").get<std::string>();
        s.text = j.at("text").get<std::string>();
        std::string role = j.at("role").get<std::string>();
        if (role == "question") s.role = Role::question;
        else if (role == "statement") s.role = Role::statement;
        else throw DataError(where + ": unknown role '" + role + "'");
        if (j.contains("label") && !j.at("label").is_null()) {
            std::string label = j.at("label").get<std::string>();
            if (label == "relevant") s.label = Label::relevant;
            else if (label == "irrelevant") s.label = Label::irrelevant;
            else throw DataError(where + ": unknown label '" + label + "'");
        }
        if (j.contains("pos_tags") && !j.at("pos_tags").is_null()) {
            s.has_pos_tags = true;
            for (const auto& t : j.at("pos_tags")) {
                std::string name = t.get<std::string>();
                int idx = pos_tag_index(name);
                if (idx < 0) throw DataError(where + ": unknown POS tag '" + name + "'");
                s.pos_tags.push_back(idx);
            }
        }
    } catch (const json::exception& e) {
        throw DataError(where + ": " + e.what());
    }
    return s;
}

json sentence_to_json(const Sentence& s) {
    json j;
    j["id"] = s.id;
    j["text"] = s.text;
    j["role"] = to_string(s.role);
    if (s.label == Label::unlabeled) j["label"] = nullptr;
    else j["label"] = to_string(s.label);
    if (s.has_pos_tags) {
        json tags = json::array();
        for (int t : s.pos_tags) tags.push_back(pos_tag_name(t));
        j["pos_tags"] = std::move(tags);
    } else {
        j["pos_tags"] = nullptr;
    }
    return j;
}

}  // namespace

Corpus corpus_from_jsonl(const std::string& text, const std::string& origin) {
    Corpus corpus;
    corpus.name = origin;
    std::set<std::string> problem_ids;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::string where = origin + ":" + std::to_string(lineno);
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) throw DataError(where + ": malformed JSON record");
        if (!j.is_object()) throw DataError(where + ": record is not an object");
        WordProblem p;
        try {
            p.id = j.at("id").get<std::string>();
            for (const auto& sj : j.at("sentences"))
                p.sentences.push_back(sentence_from_json(sj, where));
        } catch (const json::exception& e) {
            throw DataError(where + ": " + e.what());
        }
        if (!problem_ids.insert(p.id).second)
            throw DataError(where + ": duplicate problem id '" + p.id + "'");
        try {
            validate_problem(p);
        } catch (const DataError& e) {
            throw DataError(where + ": " + e.what());
        }
        corpus.problems.push_back(std::move(p));
    }
    return corpus;
}

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open corpus file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return corpus_from_jsonl(buf.str(), path);
}

std::string corpus_to_jsonl(const Corpus& corpus) {
    std::string out;
    for (const auto& p : corpus.problems) {
        json j;
        j["id"] = p.id;
        json sents = json::array();
        for (const auto& s : p.sentences) sents.push_back(sentence_to_json(s));
        j["sentences"] = std::move(sents);
        out += j.dump();
        out += '\n';
    }
    return out;
}

void save_corpus(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open output file: " + path);
    out << corpus_to_jsonl(corpus);
}

// ---------------------------------------------------------------------------
// Splitting

namespace {

std::string group_key(int irrelevant_count) {
    if (irrelevant_count <= 0) return "0";
    if (irrelevant_count == 1) return "1";
    if (irrelevant_count == 2) return "2";
    return "3+";
}

}  // namespace

SplitResult split_corpus(const Corpus& corpus, const SplitSpec& spec) {
    if (corpus.problems.empty()) throw DataError("cannot split an empty corpus");
    if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0))
        throw DataError("train_fraction must be in (0,1)");
    if (!corpus.fully_labeled())
        throw DataError("cannot split: corpus has unlabeled statement sentences");

    SplitResult result;
    result.train.name = corpus.name + "/train";
    result.test.name = corpus.name + "/test";

    // Group order is fixed; indices within a group follow corpus order.
    const std::vector<std::string> group_order = {"0", "1", "2", "3+"};
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < corpus.problems.size(); ++i)
        groups[group_key(corpus.problems[i].irrelevant_count())].push_back(i);

    Rng rng(spec.seed);
    std::vector<bool> in_train(corpus.problems.size(), false);
    for (const auto& key : group_order) {
        auto it = groups.find(key);
        if (it == groups.end()) continue;
        std::vector<std::size_t>& members = it->second;
        if (spec.grouping == Grouping::none) continue;  // handled below
        std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
            return corpus.problems[a].id < corpus.problems[b].id;
        });
        rng.shuffle(members);
        std::size_t take = static_cast<std::size_t>(
            std::floor(spec.train_fraction * static_cast<double>(members.size())));
        if (take == 0 && !members.empty()) {
            take = 1;
            result.warnings.push_back("group '" + key + "' too small for fraction " +
                                      std::to_string(spec.train_fraction) +
                                      "; taking 1 problem into train");
        }
        for (std::size_t k = 0; k < take; ++k) in_train[members[k]] = true;
        result.group_sizes[key] = {static_cast<int>(take),
                                   static_cast<int>(members.size() - take)};
    }

    if (spec.grouping == Grouping::none) {
        std::vector<std::size_t> members(corpus.problems.size());
        for (std::size_t i = 0; i < members.size(); ++i) members[i] = i;
        std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
            return corpus.problems[a].id < corpus.problems[b].id;
        });
        rng.shuffle(members);
        std::size_t take = static_cast<std::size_t>(
            std::floor(spec.train_fraction * static_cast<double>(members.size())));
        if (take == 0) {
            take = 1;
            result.warnings.push_back("corpus too small for fraction; taking 1 problem into train");
        }
        for (std::size_t k = 0; k < take; ++k) in_train[members[k]] = true;
        result.group_sizes["all"] = {static_cast<int>(take),
                                     static_cast<int>(members.size() - take)};
    }

    for (std::size_t i = 0; i < corpus.problems.size(); ++i) {
        (in_train[i] ? result.train : result.test).problems.push_back(corpus.problems[i]);
    }
    if (result.test.problems.empty())
        result.warnings.push_back("test split is empty");
    return result;
}

// ---------------------------------------------------------------------------
// Statistics

StatsReport corpus_stats(const Corpus& corpus, const StopwordList& stopwords) {
    StatsReport report;
    report.problem_count = static_cast<int>(corpus.problems.size());
    report.irrelevant_group_sizes = {{"0", 0}, {"1", 0}, {"2", 0}, {"3+", 0}};

    PipelineConfig removed;
    removed.stopword_mode = StopwordMode::remove;
    PipelineConfig kept;
    kept.stopword_mode = StopwordMode::keep;

    struct Acc {
        long long sentences = 0;
        long long terms_removed = 0;
        long long terms_kept = 0;
        std::array<double, kPosTagCount> pos_sum{};
    };
    Acc rel, irr;

    for (const auto& p : corpus.problems) {
        report.irrelevant_group_sizes[group_key(p.irrelevant_count())] += 1;
        for (const auto& s : p.sentences) {
            if (s.role == Role::question) {
                ++report.question_count;
                continue;
            }
            if (s.label == Label::unlabeled) continue;
            Acc& acc = (s.label == Label::relevant) ? rel : irr;
            ++acc.sentences;
            acc.terms_removed += static_cast<long long>(preprocess(s.text, removed, stopwords).size());
            acc.terms_kept += static_cast<long long>(preprocess(s.text, kept, stopwords).size());
            if (s.has_pos_tags) {
                auto freqs = pos_frequencies(s.pos_tags);
                for (int t = 0; t < kPosTagCount; ++t)
                    acc.pos_sum[static_cast<std::size_t>(t)] += freqs[static_cast<std::size_t>(t)];
            }
        }
    }

    auto fill = [](const Acc& acc, LabelStats& out) {
        out.sentence_count = static_cast<int>(acc.sentences);
        if (acc.sentences > 0) {
            out.avg_len_stop_removed =
                static_cast<double>(acc.terms_removed) / static_cast<double>(acc.sentences);
            out.avg_len_stop_kept =
                static_cast<double>(acc.terms_kept) / static_cast<double>(acc.sentences);
            for (int t = 0; t < kPosTagCount; ++t)
                out.pos_avg[static_cast<std::size_t>(t)] =
                    acc.pos_sum[static_cast<std::size_t>(t)] / static_cast<double>(acc.sentences);
        }
    };
    fill(rel, report.relevant);
    fill(irr, report.irrelevant);
    return report;
}

std::string StatsReport::to_json() const {
    json j;
    j["problem_count"] = problem_count;
    j["question_count"] = question_count;
    auto label_json = [](const LabelStats& s) {
        json lj;
        lj["sentence_count"] = s.sentence_count;
        lj["avg_len_stopwords_removed"] = s.avg_len_stop_removed;
        lj["avg_len_stopwords_kept"] = s.avg_len_stop_kept;
        json pos;
        for (int t = 0; t < kPosTagCount; ++t)
            pos[pos_tag_name(t)] = s.pos_avg[static_cast<std::size_t>(t)];
        lj["pos_avg_per_sentence"] = std::move(pos);
        return lj;
    };
    j["relevant"] = label_json(relevant);
    j["irrelevant"] = label_json(irrelevant);
    j["irrelevant_group_sizes"] = irrelevant_group_sizes;
    return j.dump(2) + "\n";
}

std::string StatsReport::to_text() const {
    std::ostringstream out;
    out << "problems: " << problem_count << "   questions: " << question_count << "\n";
    out << "irrelevant-count groups:";
    for (const auto& [k, v] : irrelevant_group_sizes) out << "  " << k << ": " << v;
    out << "\n\n";
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-12s %10s %22s %20s\n", "type", "sentences",
                  "avg len (stop removed)", "avg len (stop kept)");
    out << buf;
    auto row = [&](const char* name, const LabelStats& s) {
        if (s.sentence_count == 0) {
            std::snprintf(buf, sizeof(buf), "%-12s %10d %22s %20s\n", name, 0, "-", "-");
        } else {
            std::snprintf(buf, sizeof(buf), "%-12s %10d %22.2f %20.2f\n", name,
                          s.sentence_count, s.avg_len_stop_removed, s.avg_len_stop_kept);
        }
        out << buf;
    };
    row("relevant", relevant);
    row("irrelevant", irrelevant);

    bool any_pos = false;
    for (int t = 0; t < kPosTagCount; ++t)
        any_pos = any_pos || relevant.pos_avg[static_cast<std::size_t>(t)] > 0 ||
                  irrelevant.pos_avg[static_cast<std::size_t>(t)] > 0;
    if (any_pos) {
        out << "\nPOS tag averages per sentence (relevant / irrelevant):\n";
        for (int t = 0; t < kPosTagCount; ++t) {
            double r = relevant.pos_avg[static_cast<std::size_t>(t)];
            double i = irrelevant.pos_avg[static_cast<std::size_t>(t)];
            if (r == 0 && i == 0) continue;
            std::snprintf(buf, sizeof(buf), "  %-5s %8.3f %8.3f\n", pos_tag_name(t).c_str(), r, i);
            out << buf;
        }
    }
    return out.str();
}

}  // namespace relsent
