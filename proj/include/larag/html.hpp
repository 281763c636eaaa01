#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace larag {

// A raw documentation page: absolute URL plus the bytes it was served as.
struct SourceDocument {
    std::string url;
    std::string html;
};

// One normalized outgoing hyperlink.
struct LinkRef {
    std::string target_url;                    // absolute, fragment removed
    std::optional<std::string> target_anchor;  // the fragment, when present
    std::string context;                       // at most twelve words around the link
    bool is_internal = false;                  // lies under the corpus root prefix
};

// Character range of a link's visible text inside its section text.
struct LinkSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

// An anchor-aligned slice of a page, before chunking.
struct Section {
    std::string source_url;
    std::string anchor_name;
    std::string text;
    std::vector<LinkRef> links;        // document order
    std::vector<LinkSpan> link_spans;  // parallel to links, ranges into `text`
};

// Record for a discarded href; serialized as one JSON object per line.
struct LinkWarning {
    std::string href;
    std::string base;
    std::string reason;
};

struct NormalizedLink {
    std::string url;
    std::optional<std::string> anchor;
    bool is_internal = false;
};

// Resolves `href` against `base_url` per RFC 3986 reference resolution and
// splits off the fragment. Internal means the result starts with
// `corpus_prefix`. Returns nullopt for hrefs that cannot name a document
// (empty, or a non-document scheme such as mailto:/javascript:).
std::optional<NormalizedLink> normalize_link(const std::string& href,
                                             const std::string& base_url,
                                             const std::string& corpus_prefix);

// Up to twelve whitespace-delimited words: the link's own text plus the
// surrounding words, the remainder split evenly before/after (biased to
// "before" when odd) and clipped at the section boundaries.
std::string extract_link_context(const std::string& section_text, LinkSpan link_span);

// Parses one HTML page into anchor-aligned sections. Lenient: malformed
// fragments are tolerated; only undecodable bytes are an error. Any element
// whose id starts a heading-led block opens a new section; content before the
// first anchor becomes the synthetic section `page-root`.
std::vector<Section> parse_document(const SourceDocument& doc,
                                    const std::string& corpus_prefix,
                                    std::vector<LinkWarning>* warnings = nullptr);

inline constexpr const char* kSyntheticRootAnchor = "page-root";

}  // namespace larag
