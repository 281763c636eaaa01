#include "larag/html.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

#include "larag/errors.hpp"

namespace larag {
namespace {

bool is_valid_utf8(const std::string& bytes) {
    std::size_t i = 0;
    const std::size_t n = bytes.size();
    while (i < n) {
        const unsigned char c = static_cast<unsigned char>(bytes[i]);
        std::size_t len = 0;
        if (c < 0x80) {
            if (c == 0x00) return false;  // NUL never appears in text documents
            len = 1;
        } else if ((c & 0xE0) == 0xC0) {
            len = 2;
        } else if ((c & 0xF0) == 0xE0) {
            len = 3;
        } else if ((c & 0xF8) == 0xF0) {
            len = 4;
        } else {
            return false;
        }
        if (i + len > n) return false;
        for (std::size_t k = 1; k < len; ++k) {
            if ((static_cast<unsigned char>(bytes[i + k]) & 0xC0) != 0x80) return false;
        }
        i += len;
    }
    return true;
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Decodes the handful of named entities Sphinx output actually uses plus
// numeric references. Unknown entities are kept literally.
std::string decode_entities(const std::string& in) {
    static const std::unordered_map<std::string, const char*> named = {
        {"amp", "&"},  {"lt", "<"},    {"gt", ">"},    {"quot", "\""},
        {"apos", "'"}, {"nbsp", " "},  {"copy", "\xC2\xA9"}, {"reg", "\xC2\xAE"},
        {"ndash", "\xE2\x80\x93"}, {"mdash", "\xE2\x80\x94"}, {"hellip", "\xE2\x80\xA6"},
        {"lsquo", "\xE2\x80\x98"}, {"rsquo", "\xE2\x80\x99"},
        {"ldquo", "\xE2\x80\x9C"}, {"rdquo", "\xE2\x80\x9D"},
    };
    std::string out;
    out.reserve(in.size());
    std::size_t i = 0;
    while (i < in.size()) {
        if (in[i] != '&') {
            out.push_back(in[i++]);
            continue;
        }
        const std::size_t semi = in.find(';', i + 1);
        if (semi == std::string::npos || semi - i > 10) {
            out.push_back(in[i++]);
            continue;
        }
        const std::string body = in.substr(i + 1, semi - i - 1);
        if (!body.empty() && body[0] == '#') {
            std::uint32_t cp = 0;
            bool ok = body.size() > 1;
            if (body.size() > 2 && (body[1] == 'x' || body[1] == 'X')) {
                for (std::size_t k = 2; k < body.size() && ok; ++k) {
                    const char c = body[k];
                    if (!std::isxdigit(static_cast<unsigned char>(c))) ok = false;
                    cp = cp * 16 + static_cast<std::uint32_t>(
                                       std::isdigit(static_cast<unsigned char>(c))
                                           ? c - '0'
                                           : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
                }
            } else {
                for (std::size_t k = 1; k < body.size() && ok; ++k) {
                    if (!std::isdigit(static_cast<unsigned char>(body[k]))) ok = false;
                    cp = cp * 10 + static_cast<std::uint32_t>(body[k] - '0');
                }
            }
            if (ok && cp > 0 && cp <= 0x10FFFF) {
                append_utf8(out, cp);
                i = semi + 1;
                continue;
            }
        } else {
            auto it = named.find(body);
            if (it != named.end()) {
                out += it->second;
                i = semi + 1;
                continue;
            }
        }
        out.push_back(in[i++]);
    }
    return out;
}

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// ---------------------------------------------------------------------------
// URL handling (RFC 3986 reference resolution, the subset docs corpora need)
// ---------------------------------------------------------------------------

struct UrlParts {
    std::string scheme;     // lowercased, no ':'
    std::string authority;  // lowercased, no leading '//'
    std::string path;
    std::string query;  // includes '?' when present
    bool has_authority = false;
};

bool has_scheme(const std::string& s, std::size_t* colon) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (std::size_t i = 1; i < s.size(); ++i) {
        const char c = s[i];
        if (c == ':') {
            *colon = i;
            return true;
        }
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
            return false;
    }
    return false;
}

UrlParts split_url(const std::string& url) {
    UrlParts p;
    std::string rest = url;
    std::size_t colon = 0;
    if (has_scheme(rest, &colon)) {
        p.scheme = to_lower(rest.substr(0, colon));
        rest = rest.substr(colon + 1);
    }
    if (rest.rfind("//", 0) == 0) {
        p.has_authority = true;
        const std::size_t end = rest.find_first_of("/?", 2);
        if (end == std::string::npos) {
            p.authority = to_lower(rest.substr(2));
            rest.clear();
        } else {
            p.authority = to_lower(rest.substr(2, end - 2));
            rest = rest.substr(end);
        }
    }
    const std::size_t q = rest.find('?');
    if (q != std::string::npos) {
        p.query = rest.substr(q);
        rest = rest.substr(0, q);
    }
    p.path = rest;
    return p;
}

std::string join_url(const UrlParts& p) {
    std::string out;
    if (!p.scheme.empty()) out += p.scheme + ":";
    if (p.has_authority) out += "//" + p.authority;
    out += p.path;
    out += p.query;
    return out;
}

// RFC 3986 section 5.2.4.
std::string remove_dot_segments(const std::string& path) {
    std::string in = path;
    std::string out;
    while (!in.empty()) {
        if (in.rfind("../", 0) == 0) {
            in.erase(0, 3);
        } else if (in.rfind("./", 0) == 0) {
            in.erase(0, 2);
        } else if (in.rfind("/./", 0) == 0) {
            in.erase(0, 2);  // "/./x" -> "/x"
        } else if (in == "/.") {
            in = "/";
        } else if (in.rfind("/../", 0) == 0 || in == "/..") {
            if (in == "/..")
                in = "/";
            else
                in.erase(0, 3);
            const std::size_t slash = out.find_last_of('/');
            out.erase(slash == std::string::npos ? 0 : slash);
        } else if (in == "." || in == "..") {
            in.clear();
        } else {
            std::size_t next = in.find('/', 1);
            if (next == std::string::npos) next = in.size();
            out += in.substr(0, next);
            in.erase(0, next);
        }
    }
    return out;
}

std::string merge_paths(const UrlParts& base, const std::string& ref_path) {
    if (base.has_authority && base.path.empty()) return "/" + ref_path;
    const std::size_t slash = base.path.find_last_of('/');
    if (slash == std::string::npos) return ref_path;
    return base.path.substr(0, slash + 1) + ref_path;
}

const std::unordered_set<std::string>& document_schemes() {
    static const std::unordered_set<std::string> s = {"http", "https", "file"};
    return s;
}

}  // namespace

std::optional<NormalizedLink> normalize_link(const std::string& href, const std::string& base_url,
                                             const std::string& corpus_prefix) {
    // Trim surrounding whitespace; hrefs copied out of HTML often carry it.
    std::size_t b = href.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return std::nullopt;
    std::size_t e = href.find_last_not_of(" \t\r\n");
    std::string ref = href.substr(b, e - b + 1);

    std::optional<std::string> anchor;
    const std::size_t hash = ref.find('#');
    if (hash != std::string::npos) {
        if (hash + 1 < ref.size()) anchor = ref.substr(hash + 1);
        ref = ref.substr(0, hash);
    }

    const UrlParts base = split_url(base_url);
    UrlParts target;
    std::size_t colon = 0;
    if (has_scheme(ref, &colon)) {
        target = split_url(ref);
        if (!document_schemes().count(target.scheme)) return std::nullopt;  // mailto:, javascript:, ...
        target.path = remove_dot_segments(target.path);
    } else if (ref.rfind("//", 0) == 0) {
        target = split_url(base.scheme + ":" + ref);
        target.path = remove_dot_segments(target.path);
    } else {
        target = base;
        target.query.clear();
        if (ref.empty()) {
            // Same-document reference: keep the base as-is.
            target.query = base.query;
        } else if (ref[0] == '/') {
            const std::size_t q = ref.find('?');
            target.path = remove_dot_segments(q == std::string::npos ? ref : ref.substr(0, q));
            if (q != std::string::npos) target.query = ref.substr(q);
        } else {
            const std::size_t q = ref.find('?');
            const std::string ref_path = q == std::string::npos ? ref : ref.substr(0, q);
            target.path = remove_dot_segments(merge_paths(base, ref_path));
            if (q != std::string::npos) target.query = ref.substr(q);
        }
    }
    if (target.scheme.empty() && !target.has_authority && target.path.empty()) return std::nullopt;

    NormalizedLink out;
    out.url = join_url(target);
    out.anchor = anchor;
    out.is_internal = !corpus_prefix.empty() && out.url.rfind(corpus_prefix, 0) == 0;
    return out;
}

std::string extract_link_context(const std::string& section_text, LinkSpan link_span) {
    struct Word {
        std::size_t begin, end;
    };
    std::vector<Word> words;
    std::size_t i = 0;
    while (i < section_text.size()) {
        while (i < section_text.size() && std::isspace(static_cast<unsigned char>(section_text[i])))
            ++i;
        if (i >= section_text.size()) break;
        std::size_t start = i;
        while (i < section_text.size() && !std::isspace(static_cast<unsigned char>(section_text[i])))
            ++i;
        words.push_back({start, i});
    }
    if (words.empty()) return "";

    constexpr std::size_t kWindow = 12;

    // Words overlapping the link span are the anchor words.
    std::size_t first = words.size(), last = 0;
    for (std::size_t w = 0; w < words.size(); ++w) {
        if (words[w].begin < link_span.end && words[w].end > link_span.begin) {
            first = std::min(first, w);
            last = std::max(last, w);
        }
    }
    if (first == words.size()) {
        // Span fell on whitespace only; anchor the window at the nearest word.
        first = last = 0;
        for (std::size_t w = 0; w < words.size(); ++w) {
            if (words[w].begin >= link_span.begin) break;
            first = last = w;
        }
    }

    std::size_t anchor_count = last - first + 1;
    if (anchor_count >= kWindow) {
        last = first + kWindow - 1;
        anchor_count = kWindow;
    }
    const std::size_t remainder = kWindow - anchor_count;
    const std::size_t before_quota = (remainder + 1) / 2;  // odd remainder biases "before"
    const std::size_t after_quota = remainder / 2;

    const std::size_t lo = first >= before_quota ? first - before_quota : 0;
    const std::size_t hi = std::min(words.size() - 1, last + after_quota);

    std::string out;
    for (std::size_t w = lo; w <= hi; ++w) {
        if (!out.empty()) out.push_back(' ');
        out += section_text.substr(words[w].begin, words[w].end - words[w].begin);
    }
    return out;
}

namespace {

// ---------------------------------------------------------------------------
// Lenient HTML tokenizer + section builder
// ---------------------------------------------------------------------------

struct Attr {
    std::string name;
    std::string value;
};

struct Tag {
    std::string name;
    std::vector<Attr> attrs;
    bool closing = false;
    bool self_closing = false;

    const std::string* attr(const std::string& key) const {
        for (const auto& a : attrs) {
            if (a.name == key) return &a.value;
        }
        return nullptr;
    }
};

bool is_heading(const std::string& tag) {
    return tag.size() == 2 && tag[0] == 'h' && tag[1] >= '1' && tag[1] <= '6';
}

// Elements whose end marks a paragraph-level break in the extracted text.
const std::unordered_set<std::string>& paragraph_tags() {
    static const std::unordered_set<std::string> s = {
        "p", "h1", "h2", "h3", "h4", "h5", "h6", "ul", "ol", "dl",
        "table", "pre", "blockquote", "section", "div", "article", "main", "figure"};
    return s;
}

// Elements whose boundaries force at least a line break.
const std::unordered_set<std::string>& line_tags() {
    static const std::unordered_set<std::string> s = {"li", "tr", "dt", "dd", "br",
                                                      "caption", "figcaption", "nav",
                                                      "header", "footer", "aside"};
    return s;
}

// Raw-text elements: content skipped until the matching close tag.
const std::unordered_set<std::string>& skipped_containers() {
    static const std::unordered_set<std::string> s = {"script", "style", "head", "title",
                                                      "noscript", "template", "svg"};
    return s;
}

class SectionBuilder {
public:
    SectionBuilder(std::string source_url, std::string corpus_prefix,
                   std::vector<LinkWarning>* warnings)
        : source_url_(std::move(source_url)),
          corpus_prefix_(std::move(corpus_prefix)),
          warnings_(warnings) {}

    void open_section(const std::string& anchor) {
        close_pending_link();
        flush();
        std::string name = anchor;
        const int seen = ++anchor_uses_[name];
        if (seen > 1) name += "--" + std::to_string(seen);  // keep chunk ids unique
        current_anchor_ = name;
        synthetic_ = false;
    }

    void text(const std::string& decoded) {
        for (char c : decoded) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                pending_space_ = true;
            } else {
                if (pending_space_ && !buffer_.empty() && buffer_.back() != '\n')
                    buffer_.push_back(' ');
                pending_space_ = false;
                buffer_.push_back(c);
            }
        }
    }

    void line_break() {
        pending_space_ = false;
        if (!buffer_.empty() && buffer_.back() != '\n') buffer_.push_back('\n');
    }

    void paragraph_break() {
        pending_space_ = false;
        if (buffer_.empty()) return;
        if (buffer_.back() != '\n') buffer_.push_back('\n');
        if (buffer_.size() < 2 || buffer_[buffer_.size() - 2] != '\n') buffer_.push_back('\n');
    }

    void open_link(const std::string& href) {
        close_pending_link();
        // A space pending at link open belongs before the link text.
        if (pending_space_ && !buffer_.empty() && buffer_.back() != '\n') {
            buffer_.push_back(' ');
            pending_space_ = false;
        }
        link_href_ = href;
        link_begin_ = buffer_.size();
        in_link_ = true;
    }

    void close_pending_link() {
        if (!in_link_) return;
        in_link_ = false;
        auto normalized = normalize_link(link_href_, source_url_, corpus_prefix_);
        if (!normalized) {
            if (warnings_)
                warnings_->push_back({link_href_, source_url_, "unresolvable or non-document href"});
            return;
        }
        LinkRef ref;
        ref.target_url = normalized->url;
        ref.target_anchor = normalized->anchor;
        ref.is_internal = normalized->is_internal;
        pending_links_.push_back(std::move(ref));
        pending_spans_.push_back({link_begin_, buffer_.size()});
    }

    void finish(std::vector<Section>& out) {
        close_pending_link();
        flush();
        std::swap(out, sections_);
    }

private:
    void flush() {
        // Trim trailing whitespace; spans only ever point at non-space bytes.
        std::size_t end = buffer_.size();
        while (end > 0 && std::isspace(static_cast<unsigned char>(buffer_[end - 1]))) --end;
        buffer_.resize(end);

        const bool empty = buffer_.empty() && pending_links_.empty();
        const bool keep = synthetic_ ? !empty : true;
        if (keep) {
            Section s;
            s.source_url = source_url_;
            s.anchor_name = current_anchor_;
            s.text = std::move(buffer_);
            for (std::size_t i = 0; i < pending_links_.size(); ++i) {
                pending_links_[i].context = extract_link_context(s.text, pending_spans_[i]);
                s.links.push_back(std::move(pending_links_[i]));
                s.link_spans.push_back(pending_spans_[i]);
            }
            sections_.push_back(std::move(s));
        }
        buffer_.clear();
        pending_links_.clear();
        pending_spans_.clear();
        pending_space_ = false;
    }

    std::string source_url_;
    std::string corpus_prefix_;
    std::vector<LinkWarning>* warnings_;

    std::string current_anchor_ = kSyntheticRootAnchor;
    bool synthetic_ = true;
    std::string buffer_;
    bool pending_space_ = false;

    bool in_link_ = false;
    std::string link_href_;
    std::size_t link_begin_ = 0;

    std::vector<LinkRef> pending_links_;
    std::vector<LinkSpan> pending_spans_;
    std::vector<Section> sections_;
    std::unordered_map<std::string, int> anchor_uses_;
};

// Pulls one token off the input. Returns false at end.
struct Token {
    enum Kind { kText, kTag } kind = kText;
    std::string text;  // decoded text when kText
    Tag tag;           // when kTag
};

class Tokenizer {
public:
    explicit Tokenizer(const std::string& src) : src_(src) {}

    bool next(Token& tok) {
        if (pos_ >= src_.size()) return false;
        if (src_[pos_] != '<') {
            const std::size_t lt = src_.find('<', pos_);
            const std::size_t end = lt == std::string::npos ? src_.size() : lt;
            tok.kind = Token::kText;
            tok.text = decode_entities(src_.substr(pos_, end - pos_));
            pos_ = end;
            return true;
        }
        // Comment.
        if (src_.compare(pos_, 4, "<!--") == 0) {
            const std::size_t end = src_.find("-->", pos_ + 4);
            pos_ = end == std::string::npos ? src_.size() : end + 3;
            return next(tok);
        }
        // Doctype / CDATA / processing instructions: skip to '>'.
        if (pos_ + 1 < src_.size() && (src_[pos_ + 1] == '!' || src_[pos_ + 1] == '?')) {
            const std::size_t end = src_.find('>', pos_);
            pos_ = end == std::string::npos ? src_.size() : end + 1;
            return next(tok);
        }
        // Not actually a tag? Treat the '<' as text.
        if (pos_ + 1 >= src_.size() ||
            (!std::isalpha(static_cast<unsigned char>(src_[pos_ + 1])) && src_[pos_ + 1] != '/')) {
            tok.kind = Token::kText;
            tok.text = "<";
            ++pos_;
            return true;
        }
        tok.kind = Token::kTag;
        tok.tag = parse_tag();
        return true;
    }

    // Skips everything until the close tag of a raw-text element. An
    // unclosed <head> ends implicitly where <body> starts.
    void skip_until_close(const std::string& name) {
        const std::string needle = "</" + name;
        const std::string implicit_end = name == "head" ? "<body" : "";
        std::size_t at = pos_;
        while (at < src_.size()) {
            at = src_.find('<', at);
            if (at == std::string::npos) {
                pos_ = src_.size();
                return;
            }
            if (src_.size() - at >= needle.size() &&
                to_lower(src_.substr(at, needle.size())) == needle) {
                const std::size_t gt = src_.find('>', at);
                pos_ = gt == std::string::npos ? src_.size() : gt + 1;
                return;
            }
            if (!implicit_end.empty() && src_.size() - at >= implicit_end.size() &&
                to_lower(src_.substr(at, implicit_end.size())) == implicit_end) {
                pos_ = at;  // leave <body> for the main loop
                return;
            }
            ++at;
        }
        pos_ = src_.size();
    }

private:
    Tag parse_tag() {
        Tag tag;
        ++pos_;  // consume '<'
        if (pos_ < src_.size() && src_[pos_] == '/') {
            tag.closing = true;
            ++pos_;
        }
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '-'))
            tag.name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(src_[pos_++]))));
        // Attributes.
        while (pos_ < src_.size() && src_[pos_] != '>') {
            if (src_[pos_] == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
                tag.self_closing = true;
                pos_ += 2;
                return tag;
            }
            if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
                continue;
            }
            Attr attr;
            while (pos_ < src_.size() && src_[pos_] != '=' && src_[pos_] != '>' &&
                   src_[pos_] != '/' && !std::isspace(static_cast<unsigned char>(src_[pos_])))
                attr.name.push_back(
                    static_cast<char>(std::tolower(static_cast<unsigned char>(src_[pos_++]))));
            while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (pos_ < src_.size() && src_[pos_] == '=') {
                ++pos_;
                while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
                    ++pos_;
                if (pos_ < src_.size() && (src_[pos_] == '"' || src_[pos_] == '\'')) {
                    const char quote = src_[pos_++];
                    const std::size_t end = src_.find(quote, pos_);
                    attr.value = decode_entities(
                        src_.substr(pos_, (end == std::string::npos ? src_.size() : end) - pos_));
                    pos_ = end == std::string::npos ? src_.size() : end + 1;
                } else {
                    std::size_t start = pos_;
                    while (pos_ < src_.size() && src_[pos_] != '>' &&
                           !std::isspace(static_cast<unsigned char>(src_[pos_])))
                        ++pos_;
                    attr.value = decode_entities(src_.substr(start, pos_ - start));
                }
            }
            if (!attr.name.empty()) tag.attrs.push_back(std::move(attr));
        }
        if (pos_ < src_.size()) ++pos_;  // consume '>'
        return tag;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<Section> parse_document(const SourceDocument& doc, const std::string& corpus_prefix,
                                    std::vector<LinkWarning>* warnings) {
    if (!is_valid_utf8(doc.html))
        throw IngestError("document is not valid UTF-8: " + doc.url);

    Tokenizer tokenizer(doc.html);
    SectionBuilder builder(doc.url, corpus_prefix, warnings);

    // An id-bearing tag that is not itself a section/heading only becomes a
    // boundary if the next meaningful token opens a heading (Sphinx also emits
    // `<span id="x"></span><h2>` for explicit targets).
    std::string pending_anchor;
    std::string pending_tag_name;
    bool have_pending = false;

    Token tok;
    while (tokenizer.next(tok)) {
        if (tok.kind == Token::kText) {
            const bool only_ws = tok.text.find_first_not_of(" \t\r\n") == std::string::npos;
            if (have_pending && !only_ws) have_pending = false;
            builder.text(tok.text);
            continue;
        }

        const Tag& tag = tok.tag;
        if (!tag.closing && skipped_containers().count(tag.name) && !tag.self_closing) {
            tokenizer.skip_until_close(tag.name);
            continue;
        }

        if (have_pending) {
            if (!tag.closing && is_heading(tag.name)) {
                builder.open_section(pending_anchor);
                have_pending = false;
            } else if (tag.closing && tag.name == pending_tag_name) {
                // Empty target element (`<span id="x"></span>`): keep waiting
                // for the heading that usually follows.
                pending_tag_name.clear();
                continue;
            } else {
                have_pending = false;
            }
        }

        if (!tag.closing) {
            const std::string* id = tag.attr("id");
            if (id && !id->empty()) {
                if (tag.name == "section" || is_heading(tag.name)) {
                    builder.open_section(*id);
                } else {
                    pending_anchor = *id;
                    pending_tag_name = tag.name;
                    have_pending = true;
                }
            }
            if (tag.name == "a") {
                const std::string* href = tag.attr("href");
                if (href) builder.open_link(*href);
            } else if (tag.name == "br") {
                builder.line_break();
            } else if (tag.name == "td" || tag.name == "th") {
                builder.text(" ");
            }
        } else {
            if (tag.name == "a") builder.close_pending_link();
            if (paragraph_tags().count(tag.name))
                builder.paragraph_break();
            else if (line_tags().count(tag.name))
                builder.line_break();
        }
    }

    std::vector<Section> sections;
    builder.finish(sections);
    return sections;
}

}  // namespace larag
