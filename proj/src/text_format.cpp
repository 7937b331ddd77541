#include "colsum/text_format.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace colsum {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_positive(std::string_view tok, std::string_view whole) {
    tok = trim(tok);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || v <= 0)
        throw std::invalid_argument("bad part '" + std::string(tok) + "' in '" + std::string(whole) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

}  // namespace

Partition parse_partition(std::string_view text) {
    auto s = trim(text);
    if (s.empty() || s == "-") return Partition{};
    if (s.find('^') == std::string_view::npos) {
        std::vector<int> parts;
        for (auto tok : split(s, ',')) parts.push_back(parse_positive(tok, text));
        return Partition::from_unsorted(std::move(parts));
    }
    // Frequency form: tokens "i^m" separated by blanks or commas.
    std::vector<Partition::Block> blocks;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == ',' || s[i] == '\t')) ++i;
        if (i >= s.size()) break;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != ',' && s[j] != '\t') ++j;
        auto tok = s.substr(i, j - i);
        auto caret = tok.find('^');
        if (caret == std::string_view::npos) {
            blocks.push_back({parse_positive(tok, text), 1});
        } else {
            auto mult_text = trim(tok.substr(caret + 1));
            int mult = 0;
            auto [ptr, ec] = std::from_chars(mult_text.data(), mult_text.data() + mult_text.size(), mult);
            if (mult_text.empty() || ec != std::errc{} || ptr != mult_text.data() + mult_text.size() || mult < 0)
                throw std::invalid_argument("bad multiplicity in '" + std::string(text) + "'");
            blocks.push_back({parse_positive(tok.substr(0, caret), text), mult});
        }
        i = j;
    }
    return Partition::from_blocks(blocks);
}

std::string format_partition(const Partition& p) {
    if (p.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

Bipartition parse_bipartition(std::string_view text) {
    auto pieces = split(trim(text), '|');
    if (pieces.size() != 2)
        throw std::invalid_argument("bipartition must look like 'lambda|mu': '" + std::string(text) + "'");
    if (trim(pieces[1]).empty())
        throw std::invalid_argument("empty mu must be written '-': '" + std::string(text) + "'");
    return Bipartition(parse_partition(pieces[0]), parse_partition(pieces[1]));
}

std::string format_bipartition(const Bipartition& b) {
    return format_partition(b.lambda()) + "|" + format_partition(b.mu());
}

RPartiteType parse_r_partite(std::string_view text) {
    auto s = trim(text);
    if (s.substr(0, 2) != "r=")
        throw std::invalid_argument("r-partite type must start with 'r=': '" + std::string(text) + "'");
    auto colon = s.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("missing ':' after r in '" + std::string(text) + "'");
    int r = parse_positive(s.substr(2, colon - 2), text);
    return parse_r_partite(s.substr(colon + 1), r);
}

RPartiteType parse_r_partite(std::string_view text, int r) {
    auto s = trim(text);
    if (s.substr(0, 2) == "r=") {
        auto t = parse_r_partite(s);
        if (t.r() != r)
            throw std::invalid_argument("type has r=" + std::to_string(t.r()) + " but r=" + std::to_string(r) +
                                        " was requested");
        return t;
    }
    auto pieces = split(s, '|');
    if (static_cast<int>(pieces.size()) != r)
        throw std::invalid_argument("expected " + std::to_string(r) + " components in '" + std::string(text) + "'");
    std::vector<Partition> comps;
    for (auto piece : pieces) comps.push_back(parse_partition(piece));
    return RPartiteType(r, std::move(comps));
}

std::string format_r_partite(const RPartiteType& t) {
    std::string out = "r=" + std::to_string(t.r()) + ": ";
    for (int i = 0; i < t.r(); ++i) {
        if (i) out += '|';
        out += format_partition(t.component(i));
    }
    return out;
}

DnClass parse_dn_class(std::string_view text) {
    auto s = trim(text);
    if (!s.empty() && (s.back() == '+' || s.back() == '-')) {
        auto stripped = s.substr(0, s.size() - 1);
        auto bar = stripped.find('|');
        if (bar != std::string_view::npos && !trim(stripped.substr(bar + 1)).empty()) {
            Bipartition b = parse_bipartition(stripped);
            if (DnClass::is_split(b)) return DnClass(b, s.back() == '+' ? DnSign::plus : DnSign::minus);
        }
    }
    return DnClass(parse_bipartition(s), DnSign::none);
}

std::string format_dn_class(const DnClass& c) {
    std::string out = format_bipartition(c.bip());
    if (c.sign() == DnSign::plus) out += '+';
    if (c.sign() == DnSign::minus) out += '-';
    return out;
}

}  // namespace colsum
