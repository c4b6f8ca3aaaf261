#include "delta/structure_search.hpp"

#include <algorithm>

#include "delta/errors.hpp"

namespace delta {

namespace {

struct DiffDfs {
    const std::vector<Int>& E_sorted;
    const std::set<Int>& E;
    unsigned level;
    unsigned r;
    Int bound;
    size_t tuple_len;
    std::vector<Int> chosen;
    Int examined{0};

    // d of the tuple formed by prefix positions `head` (0-based) plus the
    // candidate value c at the end: equals c - K where K is determined by the
    // telescoping of the head; compute directly for clarity.
    bool tuple_ok(const std::vector<size_t>& head, const Int& c) const {
        std::vector<Int> vals;
        vals.reserve(tuple_len);
        for (size_t i : head) vals.push_back(chosen[i]);
        vals.push_back(c);
        return E.count(iterated_diff(vals)) > 0;
    }

    bool accepts(const Int& c) {
        // every 2^l-subset ending at the new position must land in E
        size_t t = chosen.size();  // new position index (0-based)
        if (t + 1 < tuple_len) return true;
        bool ok = true;
        for_each_combination(t, tuple_len - 1, [&](const std::vector<size_t>& head) {
            if (!tuple_ok(head, c)) {
                ok = false;
                return false;
            }
            return true;
        });
        return ok;
    }

    bool extend(std::optional<FiniteSequence>& out) {
        size_t t = chosen.size();
        if (t == r) {
            out = FiniteSequence(chosen, "diff-structure witness");
            return true;
        }
        Int remaining(r - t - 1);
        Int hi = bound - remaining;
        if (t == 0) {
            // D_l only sees gaps, so any witness translates down to start at
            // -bound without leaving the box; the lex-least one starts there
            if (-bound > hi) return false;
            ++examined;
            chosen.push_back(-bound);
            if (extend(out)) return true;
            chosen.pop_back();
            return false;
        }
        if (t + 1 < tuple_len) {
            // no tuple completes yet; scan the raw range
            for (Int c = chosen.back() + 1; c <= hi; ++c) {
                ++examined;
                chosen.push_back(c);
                if (extend(out)) return true;
                chosen.pop_back();
            }
            return false;
        }
        // candidates come from one anchor tuple: positions 0..2^l-2 plus the
        // new element; its value must be some e in E, pinning c = K + e
        std::vector<Int> anchor;
        for (size_t i = 0; i + 1 < tuple_len; ++i) anchor.push_back(chosen[i]);
        anchor.push_back(Int(0));
        Int K = -iterated_diff(anchor);  // d(anchor with 0) = 0 - K
        for (const Int& e : E_sorted) {
            Int c = K + e;
            if (c <= chosen.back()) continue;
            if (c > hi) break;
            ++examined;
            if (!accepts(c)) continue;
            chosen.push_back(c);
            if (extend(out)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

StructureSearchResult contains_diff_structure(const std::set<Int>& E, unsigned level, unsigned r,
                                              const Int& bound) {
    if (level < 1) throw MalformedQuery("level must be >= 1");
    size_t tuple_len = size_t(1) << level;
    if (r < tuple_len) throw MalformedQuery("r must be at least 2^level");
    if (bound < 0) throw MalformedQuery("bound must be nonnegative");
    for (const Int& e : E)
        if (e <= 0) throw MalformedQuery("E must contain positive integers only");

    StructureSearchResult res;
    res.bound = bound;
    if (E.empty()) return res;

    std::vector<Int> sorted(E.begin(), E.end());
    DiffDfs dfs{sorted, E, level, r, bound, tuple_len, {}, Int(0)};
    std::optional<FiniteSequence> out;
    dfs.extend(out);
    res.witness = std::move(out);
    res.candidates_examined = dfs.examined;
    return res;
}

StructureSearchResult contains_fs_structure(const std::set<Int>& E, unsigned r, const Int& bound) {
    if (r < 1) throw MalformedQuery("r must be >= 1");
    if (r > 30) throw BoundExceeded("fs generator length > 30");
    for (const Int& e : E)
        if (e <= 0) throw MalformedQuery("E must contain positive integers only");

    StructureSearchResult res;
    res.bound = bound;
    if (E.empty()) return res;

    // singleton sums force generator elements into E
    std::vector<Int> candidates;
    for (const Int& e : E)
        if (e >= 1 && e <= bound) candidates.push_back(e);

    std::vector<Int> chosen;
    std::vector<Int> sums;  // all nonempty subset sums of chosen
    Int examined{0};
    std::optional<FiniteSequence> out;

    std::function<bool(size_t)> extend = [&](size_t from) {
        if (chosen.size() == r) {
            out = FiniteSequence(chosen, "fs-structure witness");
            return true;
        }
        for (size_t i = from; i < candidates.size(); ++i) {
            const Int& c = candidates[i];
            ++examined;
            bool ok = true;
            for (const Int& s : sums)
                if (E.count(s + c) == 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            size_t old = sums.size();
            sums.push_back(c);
            for (size_t j = 0; j < old; ++j) sums.push_back(sums[j] + c);
            chosen.push_back(c);
            if (extend(i + 1)) return true;
            chosen.pop_back();
            sums.resize(old);
        }
        return false;
    };
    extend(0);
    res.witness = std::move(out);
    res.candidates_examined = examined;
    return res;
}

}  // namespace delta
