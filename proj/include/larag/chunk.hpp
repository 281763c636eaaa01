#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "larag/html.hpp"

namespace larag {

// The retrieval atom: a bounded slice of a section carrying the full
// hypertext metadata extracted at parse time.
struct Chunk {
    std::string id;  // `<source>:<anchor_name>-<chunk_index>`
    std::string source_url;
    std::string anchor_name;
    std::size_t chunk_index = 0;
    std::string text;
    std::vector<LinkRef> links;              // links assigned to this chunk, document order
    std::vector<std::string> links_context;  // parallel to links
};

// `source_url:anchor_name-chunk_index`, byte-exact, no escaping.
std::string build_chunk_id(const std::string& source_url, const std::string& anchor_name,
                           std::size_t chunk_index);

// Splits a section into chunks of at most `chunk_size` characters with
// roughly `overlap` characters shared between neighbours. Split points prefer
// the separator hierarchy "\n\n", "\n", ". ", " "; when none fits, a fixed
// character window of stride (chunk_size - overlap) is used and the overlap
// is exact. Every chunk text is a contiguous substring of the section text.
// Each section link lands in exactly one chunk: the earliest chunk covering
// the start of its text span, so overlap regions never duplicate a link.
std::vector<Chunk> chunk_section(const Section& section, std::size_t chunk_size,
                                 std::size_t overlap);

}  // namespace larag
