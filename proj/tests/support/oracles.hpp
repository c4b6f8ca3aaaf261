#pragma once

// Independent brute-force oracles used to freeze expected values. These stay
// deliberately naive and separate from the library implementation paths.

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "delta/constants.hpp"
#include "delta/diff.hpp"
#include "delta/errors.hpp"
#include "delta/interval.hpp"

namespace oracle {

using delta::Int;
using delta::Interval;
using delta::Rat;

// recursive definition of the iterated difference, straight off the page
inline Int iterated_diff_recursive(const std::vector<Int>& v) {
    if (v.size() == 2) return v[1] - v[0];
    std::vector<Int> first(v.begin(), v.begin() + v.size() / 2);
    std::vector<Int> second(v.begin() + v.size() / 2, v.end());
    return iterated_diff_recursive(second) - iterated_diff_recursive(first);
}

// Best rational approximations (second kind) by exhaustive scan over
// denominators q <= qmax: records every strict improvement of |q*c - p|.
// Classical fact: all records with q >= 2 are continued-fraction convergents,
// and all convergents from index 1 on appear as records.
inline std::vector<Rat> best_approximations(const delta::NamedConstant& c, const Int& qmax) {
    Interval iv = c.enclosure(512);
    std::vector<Rat> out;
    Rat best_hi(-1);
    for (Int q(1); q <= qmax; ++q) {
        Rat mid = iv.center() * Rat(q);
        Int p = delta::round_int(mid);
        Interval err = iv * Rat(q) - Interval(Rat(p));
        Rat abshi = std::max(abs(err.lo), abs(err.hi));
        Rat abslo = err.contains(Rat(0)) ? Rat(0) : std::min(abs(err.lo), abs(err.hi));
        if (best_hi < 0 || abshi < best_hi) {
            out.emplace_back(Rat(p) / Rat(q));
            best_hi = abshi;
        } else if (abslo < best_hi) {
            // enclosure too wide to order the errors; unreachable at 512 bits
            // for the desk-scale scans used in the tests
            throw delta::PrecisionExhausted("best-approximation oracle");
        }
    }
    return out;
}

// exhaustive search for an r-element increasing sequence in [-bound, bound]
// whose full level-l difference set lies inside E
inline std::optional<std::vector<Int>> brute_diff_witness(const std::set<Int>& E, unsigned level,
                                                          unsigned r, long bound) {
    size_t k = size_t(1) << level;
    std::vector<Int> cur;
    std::optional<std::vector<Int>> found;

    std::function<bool(long)> rec = [&](long from) {
        if (cur.size() == r) {
            found = cur;
            return true;
        }
        for (long c = from; c <= bound; ++c) {
            cur.emplace_back(c);
            // check only tuples that end at the new element
            bool good = true;
            if (cur.size() >= k) {
                delta::for_each_combination(cur.size() - 1, k - 1,
                                            [&](const std::vector<size_t>& head) {
                                                std::vector<Int> vals;
                                                for (size_t i : head) vals.push_back(cur[i]);
                                                vals.push_back(cur.back());
                                                if (!E.count(iterated_diff_recursive(vals))) {
                                                    good = false;
                                                    return false;
                                                }
                                                return true;
                                            });
            }
            if (good && rec(c + 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    rec(-bound);
    return found;
}

// exhaustive search for an r-element generator in N with FS inside E
inline std::optional<std::vector<Int>> brute_fs_witness(const std::set<Int>& E, unsigned r,
                                                        long bound) {
    std::vector<Int> cur;
    std::optional<std::vector<Int>> found;
    std::function<bool(long)> rec = [&](long from) {
        if (cur.size() == r) {
            found = cur;
            return true;
        }
        for (long c = from; c <= bound; ++c) {
            cur.emplace_back(c);
            // all subset sums using the new element
            bool good = true;
            size_t n = cur.size();
            for (size_t mask = 0; mask < (size_t(1) << (n - 1)) && good; ++mask) {
                Int sum = cur.back();
                for (size_t i = 0; i + 1 < n; ++i)
                    if (mask & (size_t(1) << i)) sum += cur[i];
                if (!E.count(sum)) good = false;
            }
            if (good && rec(c + 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    rec(1);
    return found;
}

}  // namespace oracle
