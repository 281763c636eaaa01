#include "larag/prompt.hpp"

#include <stdexcept>

namespace larag {
namespace {

const std::string kBasicTemplate =
    "Answer the question based only on the following context:\n"
    "\n"
    "{context}\n"
    "\n"
    "---\n"
    "\n"
    "Answer the question based on the above context: {question}";

const std::string kRoleBasedTemplate =
    "You are a technical assistant specializing in Rulex documentation.\n"
    "Answer the question using best practices, potential problems,\n"
    "and expert recommendations.\n"
    "If applicable, include a \"Warning\" or \"Tip\" section.\n"
    "\n"
    "CONTEXT: {context}\n"
    "QUESTION: {question}\n"
    "ANSWER:";

const std::string kReasoningTemplate =
    "Answer the question based only on the following context.\n"
    "If the context does not provide sufficient information, explicitly\n"
    "state which details are missing and supplement them with\n"
    "external documentation.\n"
    "\n"
    "CONTEXT: {context}\n"
    "QUESTION: {question}\n"
    "ANSWER:";

const std::string kHyperlinkedTemplate =
    "Original context:\n"
    "{original_context}\n"
    "\n"
    "---\n"
    "\n"
    "Additional context (linked):\n"
    "{linked_context}\n"
    "\n"
    "---\n"
    "\n"
    "Question:\n"
    "{question}\n"
    "\n"
    "Please use both sections of context to answer the question\n"
    "comprehensively. Carefully consider the information from\n"
    "both the original context and the linked context.";

const std::string kUnifiedTemplate =
    "CONTEXT:\n"
    "{context}\n"
    "\n"
    "QUESTION:\n"
    "{question}\n"
    "\n"
    "Please use the above context to answer the question comprehensively.";

// Replaces the first occurrence only; our templates use each placeholder once.
void substitute(std::string& text, const std::string& placeholder, const std::string& value) {
    const std::size_t at = text.find(placeholder);
    if (at == std::string::npos)
        throw std::logic_error("prompt template is missing placeholder " + placeholder);
    text.replace(at, placeholder.size(), value);
}

std::string join_texts(const RetrievedContext& context, const std::vector<std::string>& ids) {
    std::string out;
    for (const auto& id : ids) {
        const Chunk* chunk = context.chunk_by_id(id);
        if (!chunk) throw std::logic_error("final context id not found in retrieval result: " + id);
        if (!out.empty()) out += "\n\n";
        out += chunk->text;
    }
    return out;
}

}  // namespace

std::string to_string(PromptKind kind) {
    switch (kind) {
        case PromptKind::kBasic: return "basic";
        case PromptKind::kRoleBased: return "role_based";
        case PromptKind::kReasoning: return "reasoning";
        case PromptKind::kHyperlinked: return "hyperlinked";
        case PromptKind::kUnified: return "unified";
    }
    return "basic";
}

PromptKind prompt_kind_from_string(const std::string& s) {
    if (s == "basic") return PromptKind::kBasic;
    if (s == "role_based") return PromptKind::kRoleBased;
    if (s == "reasoning") return PromptKind::kReasoning;
    if (s == "hyperlinked") return PromptKind::kHyperlinked;
    if (s == "unified") return PromptKind::kUnified;
    throw std::invalid_argument("unknown prompt kind: " + s);
}

const std::string& prompt_template(PromptKind kind) {
    switch (kind) {
        case PromptKind::kBasic: return kBasicTemplate;
        case PromptKind::kRoleBased: return kRoleBasedTemplate;
        case PromptKind::kReasoning: return kReasoningTemplate;
        case PromptKind::kHyperlinked: return kHyperlinkedTemplate;
        case PromptKind::kUnified: return kUnifiedTemplate;
    }
    return kBasicTemplate;
}

std::string render_prompt(PromptKind kind, const RetrievedContext& context,
                          const std::string& question, RenderNotes* notes) {
    if (context.final_ids.empty())
        throw std::invalid_argument("render_prompt: final context is empty");

    std::string text = prompt_template(kind);
    if (kind == PromptKind::kHyperlinked) {
        std::vector<std::string> seed_ids;
        std::vector<std::string> linked_ids;
        for (const auto& id : context.final_ids)
            (context.is_seed(id) ? seed_ids : linked_ids).push_back(id);
        if (linked_ids.empty() && notes) notes->empty_linked_block = true;
        substitute(text, "{original_context}", join_texts(context, seed_ids));
        substitute(text, "{linked_context}", join_texts(context, linked_ids));
    } else {
        substitute(text, "{context}", join_texts(context, context.final_ids));
    }
    substitute(text, "{question}", question);
    return text;
}

}  // namespace larag
