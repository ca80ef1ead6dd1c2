#pragma once

#include <cctype>
#include <string>

#include "blockforest/errors.hpp"

namespace blockforest::detail {

// Minimal hand-rolled scanner for the one-line text formats.
struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool eat_word(const char* w) {
        skip_ws();
        size_t p = pos;
        for (const char* c = w; *c; ++c, ++p)
            if (p >= s.size() || s[p] != *c) return false;
        pos = p;
        return true;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    int number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start)
            throw parse_error("expected a number at column " + std::to_string(start + 1));
        return std::stoi(s.substr(start, pos - start));
    }
};

} // namespace blockforest::detail
