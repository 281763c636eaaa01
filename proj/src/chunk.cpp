#include "larag/chunk.hpp"

#include <array>
#include <cctype>
#include <stdexcept>
#include <string_view>

namespace larag {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
};

// Finds the split position for a window [start, start+chunk_size). Prefers
// the highest-ranked separator whose end falls late enough to guarantee
// forward progress (end > start + overlap). The separator stays with the
// earlier chunk. Returns 0 when no separator fits.
std::size_t separator_split(const std::string& text, std::size_t start, std::size_t window_end,
                            std::size_t overlap) {
    static constexpr std::array<std::string_view, 4> kSeparators = {"\n\n", "\n", ". ", " "};
    for (const auto sep : kSeparators) {
        if (window_end - start < sep.size()) continue;
        const std::size_t last_pos = window_end - sep.size();
        for (std::size_t p = last_pos + 1; p-- > start;) {
            if (text.compare(p, sep.size(), sep) != 0) continue;
            const std::size_t end = p + sep.size();
            if (end > start + overlap) return end;
            break;  // earlier occurrences end even sooner
        }
    }
    return 0;
}

}  // namespace

std::string build_chunk_id(const std::string& source_url, const std::string& anchor_name,
                           std::size_t chunk_index) {
    return source_url + ":" + anchor_name + "-" + std::to_string(chunk_index);
}

std::vector<Chunk> chunk_section(const Section& section, std::size_t chunk_size,
                                 std::size_t overlap) {
    if (chunk_size < 1) throw std::invalid_argument("chunk_section: chunk_size must be >= 1");
    if (overlap >= chunk_size)
        throw std::invalid_argument("chunk_section: overlap must be smaller than chunk_size");

    const std::string& text = section.text;
    const std::size_t n = text.size();

    std::vector<Span> spans;
    std::size_t start = 0;
    while (start < n) {
        if (n - start <= chunk_size) {
            spans.push_back({start, n});
            break;
        }
        const std::size_t window_end = start + chunk_size;
        std::size_t end = separator_split(text, start, window_end, overlap);
        const bool char_fallback = end == 0;
        if (char_fallback) end = window_end;
        spans.push_back({start, end});

        std::size_t next = end - overlap;
        if (!char_fallback) {
            // Snap the overlap start to a word boundary; the overlap becomes
            // approximate but chunks never begin mid-word or mid-separator.
            if (next > 0 && !is_space(text[next]) && !is_space(text[next - 1])) {
                std::size_t w = next;
                while (w < end && !is_space(text[w])) ++w;
                next = w;
            }
            while (next < end && is_space(text[next])) ++next;
        }
        start = next;
    }

    // Trim whitespace off both ends of each span; text stays a substring.
    std::vector<Span> trimmed;
    trimmed.reserve(spans.size());
    for (Span s : spans) {
        while (s.begin < s.end && is_space(text[s.begin])) ++s.begin;
        while (s.end > s.begin && is_space(text[s.end - 1])) --s.end;
        if (s.begin < s.end) trimmed.push_back(s);
    }

    std::vector<Chunk> chunks;
    chunks.reserve(trimmed.size());
    for (std::size_t i = 0; i < trimmed.size(); ++i) {
        Chunk c;
        c.source_url = section.source_url;
        c.anchor_name = section.anchor_name;
        c.chunk_index = i;
        c.id = build_chunk_id(section.source_url, section.anchor_name, i);
        c.text = text.substr(trimmed[i].begin, trimmed[i].end - trimmed[i].begin);
        chunks.push_back(std::move(c));
    }

    // Each link lands in exactly one chunk: the earliest chunk containing
    // the start of its text span. With overlapping windows that is always
    // the earlier chunk, so no link is ever expanded twice, and a link
    // straddling a window boundary stays with the earlier chunk.
    for (std::size_t li = 0; li < section.links.size(); ++li) {
        const LinkSpan& span = section.link_spans[li];
        std::size_t target = chunks.empty() ? 0 : chunks.size() - 1;
        for (std::size_t i = 0; i < trimmed.size(); ++i) {
            if (span.begin < trimmed[i].end) {
                target = i;
                break;
            }
        }
        if (target < chunks.size()) {
            chunks[target].links.push_back(section.links[li]);
            chunks[target].links_context.push_back(section.links[li].context);
        }
    }
    return chunks;
}

}  // namespace larag
