#include "blockforest/prufer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "text_cursor.hpp"

namespace blockforest {

PruferCode make_code(std::vector<int> lambda, std::vector<std::vector<int>> pi) {
    PruferCode c;
    c.lambda = std::move(lambda);
    c.pi = std::move(pi);
    for (auto& part : c.pi) std::sort(part.begin(), part.end());
    std::sort(c.pi.begin(), c.pi.end());
    return c;
}

namespace {

// Selection among an explicit block list; shared by the public operation
// and the encoding loop.
struct Selection {
    size_t index;
    std::optional<int> articulation;
};

Selection select_leaf_block(const std::vector<std::vector<int>>& blocks) {
    if (blocks.empty()) throw domain_error("leaf-block selection on an empty graph");
    if (blocks.size() == 1) return {0, std::nullopt};
    std::map<int, int> occurrences;
    for (const auto& b : blocks)
        for (int v : b) ++occurrences[v];
    size_t best = blocks.size();
    int best_min = 0, best_art = 0;
    for (size_t i = 0; i < blocks.size(); ++i) {
        int articulation = -1;
        int art_count = 0;
        int min_rest = -1;
        for (int v : blocks[i]) {
            if (occurrences[v] >= 2) {
                articulation = v;
                ++art_count;
            } else if (min_rest == -1 || v < min_rest) {
                min_rest = v;
            }
        }
        if (art_count != 1) continue; // not a leaf-block
        if (best == blocks.size() || min_rest < best_min) {
            best = i;
            best_min = min_rest;
            best_art = articulation;
        }
    }
    if (best == blocks.size())
        throw domain_error("no leaf-block found; structure is not a husimi block forest");
    return {best, best_art};
}

} // namespace

LeafBlockChoice leaf_block_select(const HusimiGraph& h) {
    validate_husimi(h);
    if (h.blocks.empty()) throw domain_error("leaf-block selection needs at least one block");
    Selection sel = select_leaf_block(h.blocks);
    return {h.blocks[sel.index], sel.articulation};
}

PruferCode prufer_encode(const HusimiGraph& h) {
    validate_husimi(h);
    if (h.n == 1) return {};
    std::vector<std::vector<int>> blocks = h.blocks;
    std::vector<int> lambda;
    std::vector<std::vector<int>> pi;
    while (blocks.size() > 1) {
        Selection sel = select_leaf_block(blocks);
        const int j = *sel.articulation;
        std::vector<int> part;
        for (int v : blocks[sel.index])
            if (v != j) part.push_back(v);
        lambda.push_back(j);
        pi.push_back(std::move(part));
        blocks.erase(blocks.begin() + static_cast<long>(sel.index));
    }
    // Last remaining block minus the last articulation point.
    std::vector<int> part;
    for (int v : blocks[0])
        if (lambda.empty() || v != lambda.back()) part.push_back(v);
    pi.push_back(std::move(part));
    return make_code(std::move(lambda), std::move(pi));
}

int code_vertex_count(const PruferCode& code) {
    if (code.pi.empty()) return 1;
    int covered = 0;
    for (const auto& part : code.pi) covered += static_cast<int>(part.size());
    return covered + (code.lambda.empty() ? 0 : 1);
}

HusimiGraph prufer_decode(const PruferCode& code, int n) {
    if (n < 1) throw domain_error("decode: n must be >= 1");
    if (n == 1) {
        if (!code.lambda.empty() || !code.pi.empty())
            throw domain_error("decode: nonempty code for a single vertex");
        return HusimiGraph{1, {}};
    }
    const int k = static_cast<int>(code.pi.size());
    if (k == 0) throw domain_error("decode: no parts for n >= 2");
    if (static_cast<int>(code.lambda.size()) != k - 1)
        throw domain_error("decode: sequence length must be one less than the part count");

    std::set<int> covered;
    for (const auto& part : code.pi) {
        if (part.empty()) throw domain_error("decode: empty part");
        for (int v : part) {
            if (v < 1 || v > n) throw domain_error("decode: part vertex out of range 1..n");
            if (!covered.insert(v).second)
                throw domain_error("decode: parts are not disjoint");
        }
    }
    for (int v : code.lambda)
        if (v < 1 || v > n) throw domain_error("decode: sequence vertex out of range 1..n");
    const int expected_cover = k >= 2 ? n - 1 : n;
    if (static_cast<int>(covered.size()) != expected_cover)
        throw domain_error("decode: parts cover the wrong number of vertices");
    if (k >= 2 && covered.count(code.lambda.back()))
        throw domain_error("decode: last sequence element must not lie in any part");

    std::vector<std::vector<int>> pool = code.pi;
    for (auto& part : pool) std::sort(part.begin(), part.end());
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i + 1 < k; ++i) {
        std::set<int> suffix(code.lambda.begin() + i, code.lambda.end());
        size_t chosen = pool.size();
        for (size_t p = 0; p < pool.size(); ++p) {
            bool eligible = true;
            for (int v : pool[p])
                if (suffix.count(v)) {
                    eligible = false;
                    break;
                }
            if (!eligible) continue;
            if (chosen == pool.size() || pool[p].front() < pool[chosen].front()) chosen = p;
        }
        if (chosen == pool.size())
            throw domain_error("decode: no part is free of the remaining sequence");
        std::vector<int> block = pool[chosen];
        block.push_back(code.lambda[static_cast<size_t>(i)]);
        blocks.push_back(std::move(block));
        pool.erase(pool.begin() + static_cast<long>(chosen));
    }
    std::vector<int> last = pool[0];
    if (!code.lambda.empty()) last.push_back(code.lambda.back());
    blocks.push_back(std::move(last));

    HusimiGraph h = make_husimi(n, std::move(blocks));
    try {
        validate_husimi(h);
    } catch (const domain_error& e) {
        throw domain_error(std::string("decode: code yields no husimi graph (") + e.what() + ")");
    }
    return h;
}

std::vector<PruferCode> enumerate_codes(int n) {
    if (n < 1) throw domain_error("code enumeration needs n >= 1");
    std::vector<PruferCode> out;
    if (n == 1) {
        out.push_back({});
        return out;
    }
    for (int k = 1; k <= n - 1; ++k) {
        const int seq_len = k - 1;
        std::vector<int> lambda(seq_len, 1);
        while (true) {
            // Partition [n] minus the last sequence element into k parts.
            std::vector<int> ground;
            for (int v = 1; v <= n; ++v)
                if (seq_len == 0 || v != lambda.back()) ground.push_back(v);
            std::vector<std::vector<int>> parts;
            std::function<void(size_t)> assign = [&](size_t idx) {
                if (idx == ground.size()) {
                    if (static_cast<int>(parts.size()) == k)
                        out.push_back(make_code(lambda, parts));
                    return;
                }
                // Prune: remaining elements must be able to open enough parts.
                const int missing = k - static_cast<int>(parts.size());
                if (missing > static_cast<int>(ground.size() - idx)) return;
                const size_t existing = parts.size();
                for (size_t p = 0; p < existing; ++p) {
                    parts[p].push_back(ground[idx]);
                    assign(idx + 1);
                    parts[p].pop_back();
                }
                if (static_cast<int>(parts.size()) < k) {
                    parts.push_back({ground[idx]});
                    assign(idx + 1);
                    parts.pop_back();
                }
            };
            assign(0);
            if (seq_len == 0) break;
            int pos = seq_len - 1;
            while (pos >= 0 && lambda[pos] == n) lambda[pos--] = 1;
            if (pos < 0) break;
            ++lambda[pos];
        }
    }
    return out;
}

std::string format_code(const PruferCode& code) {
    std::string out = "lambda: ";
    if (code.lambda.empty()) {
        out += "-";
    } else {
        for (size_t i = 0; i < code.lambda.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(code.lambda[i]);
        }
    }
    out += "; pi: ";
    if (code.pi.empty()) {
        out += "-";
    } else {
        for (size_t i = 0; i < code.pi.size(); ++i) {
            if (i) out += "|";
            out += "{";
            for (size_t j = 0; j < code.pi[i].size(); ++j) {
                if (j) out += ",";
                out += std::to_string(code.pi[i][j]);
            }
            out += "}";
        }
    }
    return out;
}

PruferCode parse_code(const std::string& line) {
    detail::Cursor c{line};
    if (!c.eat_word("lambda")) throw parse_error("expected 'lambda'");
    if (!c.eat(':')) throw parse_error("expected ':' after 'lambda'");
    std::vector<int> lambda;
    if (!c.eat('-')) {
        while (true) {
            lambda.push_back(c.number());
            if (!c.eat(',')) break;
        }
    }
    if (!c.eat(';')) throw parse_error("expected ';' after the sequence");
    if (!c.eat_word("pi")) throw parse_error("expected 'pi'");
    if (!c.eat(':')) throw parse_error("expected ':' after 'pi'");
    std::vector<std::vector<int>> pi;
    if (!c.eat('-')) {
        while (true) {
            if (!c.eat('{')) throw parse_error("expected '{' to open a part");
            std::vector<int> part;
            if (!c.eat('}')) {
                while (true) {
                    part.push_back(c.number());
                    if (c.eat('}')) break;
                    if (!c.eat(',')) throw parse_error("expected ',' or '}' in a part");
                }
            }
            pi.push_back(std::move(part));
            if (!c.eat('|')) break;
        }
    }
    if (!c.done()) throw parse_error("trailing input after the code");
    return make_code(std::move(lambda), std::move(pi));
}

} // namespace blockforest
