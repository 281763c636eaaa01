#include "larag/generate.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <vector>

namespace larag {
namespace {

// Words too common to signal topical overlap.
const std::set<std::string>& stopwords() {
    static const std::set<std::string> s = {
        "the", "and", "for", "are", "was", "you", "your", "that", "this", "with",
        "how", "can", "what", "its", "has", "have", "not", "all", "use", "when",
        "from", "into", "does", "each", "them", "then", "than", "will", "also",
        "answer", "question", "context", "based", "only", "following", "above",
        "please", "both", "sections", "section", "information"};
    return s;
}

std::vector<std::string> content_words(const std::string& text) {
    std::vector<std::string> out;
    std::string token;
    auto flush = [&] {
        if (token.size() >= 3 && !stopwords().count(token)) out.push_back(token);
        token.clear();
    };
    for (unsigned char c : text) {
        if (std::isalnum(c))
            token.push_back(static_cast<char>(std::tolower(c)));
        else
            flush();
    }
    flush();
    return out;
}

// First `limit` sentences of `text`; a sentence ends at . ! or ? followed by
// whitespace or end of text.
std::string leading_sentences(const std::string& text, std::size_t limit) {
    std::size_t found = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '.' && c != '!' && c != '?') continue;
        if (i + 1 < text.size() && !std::isspace(static_cast<unsigned char>(text[i + 1])))
            continue;
        if (++found == limit) return text.substr(0, i + 1);
    }
    return text;
}

std::vector<std::string> split_blocks(const std::string& text) {
    std::vector<std::string> blocks;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find("\n\n", start);
        if (end == std::string::npos) end = text.size();
        std::string block = text.substr(start, end - start);
        const std::size_t b = block.find_first_not_of(" \t\r\n");
        if (b != std::string::npos) {
            const std::size_t e = block.find_last_not_of(" \t\r\n");
            blocks.push_back(block.substr(b, e - b + 1));
        }
        start = end + 2;
    }
    return blocks;
}

}  // namespace

long count_tokens(const std::string& text) {
    return static_cast<long>((text.size() + 3) / 4);
}

GenerationResult MockGenerator::generate(const std::string& prompt) {
    if (prompt.empty()) throw std::invalid_argument("generate: prompt is empty");

    // Locate the question using the strongest marker the templates use; the
    // text before it holds the context blocks.
    std::string question_part;
    std::string context_part = prompt;
    std::size_t marker;
    if ((marker = prompt.rfind("QUESTION:")) != std::string::npos) {
        question_part = prompt.substr(marker + 9);
        context_part = prompt.substr(0, marker);
    } else if ((marker = prompt.rfind("Question:")) != std::string::npos) {
        question_part = prompt.substr(marker + 9);
        context_part = prompt.substr(0, marker);
    } else if ((marker = prompt.rfind("above context:")) != std::string::npos) {
        question_part = prompt.substr(marker + 14);
        context_part = prompt.substr(0, marker);
    } else {
        const std::vector<std::string> all_blocks = split_blocks(prompt);
        if (!all_blocks.empty()) question_part = all_blocks.back();
    }
    // The question ends where the template resumes.
    for (const char* stop : {"\nANSWER:", "\n\n"}) {
        const std::size_t cut = question_part.find(stop);
        if (cut != std::string::npos) question_part = question_part.substr(0, cut);
    }

    const std::vector<std::string> question_words_vec = content_words(question_part);
    const std::set<std::string> question_words(question_words_vec.begin(),
                                               question_words_vec.end());

    const std::vector<std::string> blocks = split_blocks(context_part);
    std::string best = blocks.empty() ? prompt : blocks.front();
    std::size_t best_overlap = 0;
    for (const auto& block : blocks) {
        std::set<std::string> words;
        for (const auto& w : content_words(block)) words.insert(w);
        std::size_t overlap = 0;
        for (const auto& w : words) overlap += question_words.count(w);
        if (overlap > best_overlap) {
            best_overlap = overlap;
            best = block;
        }
    }

    GenerationResult result;
    result.answer = leading_sentences(best, 3);
    result.prompt_tokens = count_tokens(prompt);
    result.completion_tokens = count_tokens(result.answer);
    result.total_tokens = result.prompt_tokens + result.completion_tokens;
    result.latency_seconds = static_cast<double>(result.total_tokens) / 1000.0;
    result.tokens_estimated = true;
    return result;
}

std::unique_ptr<Generator> make_mock_generator() { return std::make_unique<MockGenerator>(); }

}  // namespace larag
