#include "sombor/trees.hpp"

#include <algorithm>

namespace sombor {

namespace {

using Layout = std::vector<int>;

// Successor of a canonical rooted level sequence (Beyer-Hedetniemi).
// Returns false when the sequence was the last one.
bool next_rooted_tree(Layout& seq, int p) {
    if (p == 0) return false;
    int q = p - 1;
    while (seq[static_cast<std::size_t>(q)] != seq[static_cast<std::size_t>(p)] - 1) --q;
    for (std::size_t i = static_cast<std::size_t>(p); i < seq.size(); ++i)
        seq[i] = seq[i - static_cast<std::size_t>(p) + static_cast<std::size_t>(q)];
    return true;
}

bool next_rooted_tree(Layout& seq) {
    int p = static_cast<int>(seq.size()) - 1;
    while (p >= 0 && seq[static_cast<std::size_t>(p)] == 1) --p;
    if (p <= 0) return false;
    return next_rooted_tree(seq, p);
}

// Splits off the subtree hanging from the first child of the root:
// left = that subtree's levels shifted up by one, rest = the remainder.
void split_tree(const Layout& seq, Layout& left, Layout& rest) {
    std::size_t m = seq.size();
    bool one_found = false;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] == 1) {
            if (one_found) {
                m = i;
                break;
            }
            one_found = true;
        }
    }
    left.clear();
    rest.clear();
    for (std::size_t i = 1; i < m; ++i) left.push_back(seq[i] - 1);
    rest.push_back(0);
    for (std::size_t i = m; i < seq.size(); ++i) rest.push_back(seq[i]);
}

// Advances an arbitrary rooted candidate to the next level sequence that
// encodes a free tree canonically (WROM validity test: the root's first
// subtree must not dominate the rest in height / size / lexicographic
// order). Returns false when the enumeration is exhausted.
bool next_free_tree(Layout& seq) {
    Layout left, rest;
    split_tree(seq, left, rest);
    const int left_height = *std::max_element(left.begin(), left.end());
    const int rest_height = *std::max_element(rest.begin(), rest.end());

    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
        if (left.size() > rest.size()) valid = false;
        else if (left.size() == rest.size() &&
                 std::lexicographical_compare(rest.begin(), rest.end(), left.begin(), left.end()))
            valid = false;
    }
    if (valid) return true;

    const int p = static_cast<int>(left.size());
    const int old_at_p = seq[static_cast<std::size_t>(p)];
    if (!next_rooted_tree(seq, p)) return false;
    if (old_at_p > 2) {
        Layout nleft, nrest;
        split_tree(seq, nleft, nrest);
        const int h = *std::max_element(nleft.begin(), nleft.end());
        // rewrite the tail as the path 1..h+1
        const std::size_t slen = static_cast<std::size_t>(h) + 1;
        for (std::size_t i = 0; i < slen; ++i)
            seq[seq.size() - slen + i] = static_cast<int>(i) + 1;
    }
    return true;
}

Graph layout_to_graph(const Layout& seq) {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!stack.empty()) {
            std::size_t j = stack.back();
            while (seq[j] >= seq[i]) {
                stack.pop_back();
                j = stack.back();
            }
            edges.emplace_back(static_cast<int>(j), static_cast<int>(i));
        }
        stack.push_back(i);
    }
    return Graph::from_edge_list(static_cast<int>(seq.size()), edges);
}

} // namespace

void enumerate_trees(int n, const std::function<void(const Graph&)>& emit) {
    if (n < 1 || n > 12)
        throw SizeUnsupportedError("tree enumeration supports 1 <= n <= 12, got n=" +
                                   std::to_string(n));
    if (n == 1) {
        emit(empty_graph(1));
        return;
    }
    // start from the path rooted at its center
    Layout seq;
    for (int i = 0; i <= n / 2; ++i) seq.push_back(i);
    for (int i = 1; i <= (n + 1) / 2 - 1; ++i) seq.push_back(i);

    for (;;) {
        if (!next_free_tree(seq)) return;
        emit(layout_to_graph(seq));
        if (!next_rooted_tree(seq)) return;
    }
}

std::vector<Graph> all_trees(int n) {
    std::vector<Graph> out;
    enumerate_trees(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

long count_trees(int n) {
    long c = 0;
    enumerate_trees(n, [&](const Graph&) { ++c; });
    return c;
}

} // namespace sombor
