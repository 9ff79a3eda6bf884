#include "domtree/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace domtree {

namespace {

void append_level(std::vector<Label>& out, int level) {
    for (Label v = Label{1} << level; v < (Label{2} << level); ++v) out.push_back(v);
}

VertexSet finish(std::vector<Label> labels) { return VertexSet{std::move(labels)}; }

// Locating-dominating set, hypertree. Recursion step n -> n-4 deletes the
// HT*(3) copies in levels n-2..n plus their level-(n-3) parents; each copy
// contributes kHtStar3LdTemplate through the canonical correspondence.
void ld_hypertree(int n, std::vector<Label>& out) {
    switch (n) {
        case 0: out.push_back(1); return;
        case 1: out.insert(out.end(), {2, 3}); return;
        case 2: out.insert(out.end(), {2, 3, 4}); return;
        case 3: out.insert(out.end(), {2, 3, 8, 9, 10, 15}); return;
        default: break;
    }
    ld_hypertree(n - 4, out);
    const Label half = Label{1} << (n - 3);
    for (Label x = Label{1} << (n - 2); x < (Label{1} << (n - 2)) + half; ++x) {
        const Label y = x + half;
        out.insert(out.end(), {x, y, 4 * x, 4 * x + 1, 4 * x + 2, 4 * y + 3});
    }
}

// Locating-dominating set, sibling tree. Step n -> n-4 deletes the rooted
// ST_3 copies in levels n-3..n; per copy kSt3LdTemplate, which aggregates to
// all of level n-2 plus the even half of level n.
void ld_sibling(int n, std::vector<Label>& out) {
    switch (n) {
        case 0: out.push_back(1); return;
        case 1: out.insert(out.end(), {2, 3}); return;
        case 2: out.insert(out.end(), {2, 4, 6}); return;
        case 3: out.insert(out.end(), {2, 3, 8, 10, 12, 14}); return;
        default: break;
    }
    ld_sibling(n - 4, out);
    append_level(out, n - 2);
    for (Label v = Label{1} << n; v < (Label{2} << n); v += 2) out.push_back(v);
}

// Locating-total dominating set, hypertree. Step n -> n-3 deletes the HT*(2)
// copies in levels n-1..n plus their parents; per copy the paper's {v, v', a}
// = kHtStar2LtdTemplate, aggregating to level n-1 plus the left children of
// its lower half.
void ltd_hypertree(int n, std::vector<Label>& out) {
    switch (n) {
        case 1: out.insert(out.end(), {2, 3}); return;
        case 2: out.insert(out.end(), {2, 3, 4}); return;
        case 3: out.insert(out.end(), {2, 4, 5, 6, 7, 8, 10}); return;
        default: break;
    }
    ltd_hypertree(n - 3, out);
    append_level(out, n - 1);
    const Label lo = Label{1} << (n - 1);
    for (Label x = lo; x < lo + (Label{1} << (n - 2)); ++x) out.push_back(2 * x);
}

// Locating-total dominating set, sibling tree. Step n -> n-3 deletes the
// rooted ST_2 copies in levels n-2..n; per copy the paper's V1 ∪ {u, v}
// = kSt2LtdTemplate, aggregating to level n-1 plus the even half of level n.
void ltd_sibling(int n, std::vector<Label>& out) {
    switch (n) {
        case 1: out.insert(out.end(), {2, 3}); return;
        case 2: out.insert(out.end(), {2, 3, 4, 6}); return;
        case 3: out.insert(out.end(), {2, 4, 5, 6, 7, 8, 10, 12, 14}); return;
        default: break;
    }
    ltd_sibling(n - 3, out);
    append_level(out, n - 1);
    for (Label v = Label{1} << n; v < (Label{2} << n); v += 2) out.push_back(v);
}

}  // namespace

VertexSet dominating_level_pattern(Family family, int n, bool total) {
    if (family != Family::Hypertree && family != Family::SiblingTree)
        throw std::invalid_argument("level patterns exist for ht and st only");
    if (n < 1) throw std::invalid_argument("construction domain starts at n=1");

    std::vector<Label> out;
    const int r = n % 3;
    if (r != 2) out.push_back(2);
    if (r == 1 && total) out.push_back(3);
    const int first = r == 0 ? 2 : r == 1 ? 3 : 1;
    for (int level = first; level <= n - 1; level += 3) append_level(out, level);
    return finish(std::move(out));
}

VertexSet construct(Family family, Variant variant, int n) {
    if (family != Family::Hypertree && family != Family::SiblingTree)
        throw std::invalid_argument("constructions exist for ht and st only");
    if (n < 1) throw std::invalid_argument("construction domain starts at n=1");

    if (!is_locating(variant))
        return dominating_level_pattern(family, n, is_total(variant));

    std::vector<Label> out;
    if (variant == Variant::LocatingDominating) {
        if (family == Family::Hypertree)
            ld_hypertree(n, out);
        else
            ld_sibling(n, out);
    } else {
        if (family == Family::Hypertree)
            ltd_hypertree(n, out);
        else
            ltd_sibling(n, out);
    }
    return finish(std::move(out));
}

}  // namespace domtree
