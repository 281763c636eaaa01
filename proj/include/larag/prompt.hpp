#pragma once

#include <string>

#include "larag/retrieval.hpp"

namespace larag {

// The five prompt templates. `hyperlinked` presents seed and link-expanded
// chunks as two separate blocks; `unified` is its flat-context counterpart
// used for runs without expansion.
enum class PromptKind {
    kBasic,
    kRoleBased,
    kReasoning,
    kHyperlinked,
    kUnified,
};

std::string to_string(PromptKind kind);
PromptKind prompt_kind_from_string(const std::string& s);

struct RenderNotes {
    bool empty_linked_block = false;  // hyperlinked kind saw no expanded chunks
};

// Instantiates the template for `kind` byte-exactly: chunk texts joined by a
// blank line in final-context order, the question substituted once. The
// hyperlinked kind splits the final context into seed and expanded blocks.
// Throws std::invalid_argument when the context is empty.
std::string render_prompt(PromptKind kind, const RetrievedContext& context,
                          const std::string& question, RenderNotes* notes = nullptr);

// The raw template text for `kind`, with its placeholders unsubstituted.
const std::string& prompt_template(PromptKind kind);

}  // namespace larag
