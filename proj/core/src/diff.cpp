#include "delta/diff.hpp"

#include <algorithm>

#include "delta/errors.hpp"

namespace delta {

IndexTuple::IndexTuple(unsigned lvl, std::vector<size_t> idx) : level(lvl), indices(std::move(idx)) {
    if (level < 1) throw MalformedTuple("index tuple level must be >= 1");
    if (indices.size() != (size_t(1) << level))
        throw MalformedTuple("index tuple must have exactly 2^level entries");
    for (size_t i = 0; i + 1 < indices.size(); ++i)
        if (indices[i] >= indices[i + 1])
            throw MalformedTuple("index tuple must be strictly increasing");
    if (indices[0] < 1) throw MalformedTuple("index tuple positions are 1-based");
}

unsigned tuple_level(size_t len) {
    if (len < 2 || (len & (len - 1)) != 0)
        throw MalformedTuple("tuple length must be a power of two >= 2");
    unsigned l = 0;
    while ((size_t(1) << l) < len) ++l;
    return l;
}

Int iterated_diff(std::span<const Int> values) {
    tuple_level(values.size());
    // pairwise fold; agrees with the half-split recursion by the composition
    // identity d(m_1..m_{2^l}) = d(d(m_1,m_2), ..., d(m_{2^l-1}, m_{2^l}))
    std::vector<Int> cur(values.begin(), values.end());
    while (cur.size() > 1) {
        std::vector<Int> next(cur.size() / 2);
        for (size_t i = 0; i < next.size(); ++i) next[i] = cur[2 * i + 1] - cur[2 * i];
        cur = std::move(next);
    }
    return cur[0];
}

Int iterated_diff(const std::vector<Int>& values) {
    return iterated_diff(std::span<const Int>(values.data(), values.size()));
}

Int iterated_diff_at(const FiniteSequence& s, const IndexTuple& t) {
    std::vector<Int> vals;
    vals.reserve(t.indices.size());
    for (size_t pos : t.indices) {
        if (pos > s.size()) throw MalformedTuple("index tuple position out of range");
        vals.push_back(s[pos - 1]);
    }
    return iterated_diff(vals);
}

void for_each_combination(size_t n, size_t k,
                          const std::function<bool(const std::vector<size_t>&)>& f) {
    if (k == 0 || k > n) return;
    std::vector<size_t> c(k);
    for (size_t i = 0; i < k; ++i) c[i] = i;
    while (true) {
        if (!f(c)) return;
        // advance to next combination
        size_t i = k;
        while (i > 0) {
            --i;
            if (c[i] != i + n - k) {
                ++c[i];
                for (size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

DiffStructure diff_set(const FiniteSequence& s, unsigned level, bool positive_only) {
    if (level < 1) throw MalformedQuery("level must be >= 1");
    size_t k = size_t(1) << level;
    if (s.size() < k) throw TooShort("sequence shorter than 2^level");
    DiffStructure out;
    out.generator = s;
    out.level = level;
    out.positive_only = positive_only;
    std::vector<Int> vals(k);
    for_each_combination(s.size(), k, [&](const std::vector<size_t>& c) {
        for (size_t i = 0; i < k; ++i) vals[i] = s[c[i]];
        Int d = iterated_diff(vals);
        if (!positive_only || d > 0) out.values.push_back(d);
        return true;
    });
    out.value_set = out.values;
    std::sort(out.value_set.begin(), out.value_set.end());
    out.value_set.erase(std::unique(out.value_set.begin(), out.value_set.end()),
                        out.value_set.end());
    return out;
}

FSStructure fs_set(const FiniteSequence& s, unsigned r) {
    if (r < 1) throw MalformedQuery("r must be >= 1");
    if (s.size() < r) throw TooShort("sequence shorter than r");
    if (r > 30) throw BoundExceeded("finite sums set with r > 30");
    FSStructure out;
    out.generator = s;
    out.count = r;
    size_t total = (size_t(1) << r) - 1;
    out.values.reserve(total);
    for (size_t mask = 1; mask <= total; ++mask) {
        Int sum(0);
        for (unsigned i = 0; i < r; ++i)
            if (mask & (size_t(1) << i)) sum += s[i];
        out.values.push_back(sum);
    }
    out.value_set = out.values;
    std::sort(out.value_set.begin(), out.value_set.end());
    out.value_set.erase(std::unique(out.value_set.begin(), out.value_set.end()),
                        out.value_set.end());
    return out;
}

FiniteSequence partial_sums(const FiniteSequence& s) {
    std::vector<Int> out;
    out.reserve(s.size());
    Int acc(0);
    for (const Int& n : s.elements) {
        acc += n;
        out.push_back(acc);
    }
    return FiniteSequence(std::move(out), "partial_sums(" + s.source + ")");
}

}  // namespace delta
