#include "delta/ramsey.hpp"

#include <algorithm>

#include "delta/dioph_search.hpp"
#include "delta/errors.hpp"

namespace delta {

unsigned Coloring::color_of(const std::vector<unsigned>& subset) const {
    auto it = colors.find(subset);
    if (it == colors.end()) throw MalformedInput("coloring not total: missing subset");
    return it->second;
}

unsigned Coloring::color_count() const {
    unsigned m = 0;
    for (const auto& [k, v] : colors) m = std::max(m, v);
    return m;
}

void Coloring::validate_total() const {
    if (arity < 1 || ground < arity) throw MalformedInput("coloring ground/arity out of range");
    bool ok = true;
    for_each_combination(ground, arity, [&](const std::vector<size_t>& c) {
        std::vector<unsigned> subset;
        subset.reserve(arity);
        for (size_t i : c) subset.push_back(unsigned(i + 1));
        if (!colors.count(subset)) {
            ok = false;
            return false;
        }
        return true;
    });
    if (!ok) throw MalformedInput("coloring not total on all subsets");
}

namespace {

Int binom_int(unsigned long n, unsigned long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Int ramsey_bound_rec(unsigned arity, const Int& colors, unsigned r, unsigned long max_bits) {
    if (colors == 1) return Int(r);
    if (r == arity) return Int(arity);
    if (arity == 1) return colors * Int(r - 1) + 1;
    Int m = ramsey_bound_rec(arity - 1, colors, r - 1, max_bits) + 1;
    if (mpz_fits_ulong_p(m.get_mpz_t()) == 0)
        throw BoundExceeded("ramsey bound intermediate exceeds machine range");
    unsigned long mu = mpz_get_ui(m.get_mpz_t());
    Int c = binom_int(mu, arity);
    // size guard: the result has about C(m, arity) * log2(colors) bits
    Rat bits = Rat(c) * Rat(Int(mpz_sizeinbase(colors.get_mpz_t(), 2)));
    if (bits > Rat(Int(max_bits)))
        throw BoundExceeded("ramsey bound exceeds the configured bit budget");
    if (mpz_fits_ulong_p(c.get_mpz_t()) == 0)
        throw BoundExceeded("ramsey bound exponent exceeds machine range");
    Int power;
    mpz_pow_ui(power.get_mpz_t(), colors.get_mpz_t(), mpz_get_ui(c.get_mpz_t()));
    return m + power;
}

}  // namespace

Int ramsey_upper_bound(unsigned level, const Int& colors, unsigned r, unsigned long max_bits) {
    if (level < 1) throw MalformedQuery("level must be >= 1");
    unsigned arity = 1u << level;
    if (r < arity) throw MalformedQuery("r must be at least 2^level");
    if (colors < 1) throw MalformedQuery("colors must be >= 1");
    return ramsey_bound_rec(arity, colors, r, max_bits);
}

std::optional<std::vector<unsigned>> monochromatic_search(const Coloring& c, unsigned r) {
    if (r < c.arity) throw MalformedQuery("target size below the coloring arity");
    if (c.ground > 40 || binom_int(c.ground, c.arity) > Int(2000000))
        throw BoundExceeded("ground set too large for the exhaustive guarantee");
    c.validate_total();
    if (c.ground < r) return std::nullopt;

    std::vector<unsigned> chosen;
    std::optional<unsigned> color;
    std::optional<std::vector<unsigned>> found;

    // all arity-subsets of chosen+e that end at e must match the color
    auto consistent = [&](unsigned e) {
        if (chosen.size() + 1 < c.arity) return true;
        bool ok = true;
        for_each_combination(chosen.size(), c.arity - 1, [&](const std::vector<size_t>& head) {
            std::vector<unsigned> subset;
            subset.reserve(c.arity);
            for (size_t i : head) subset.push_back(chosen[i]);
            subset.push_back(e);
            unsigned col = c.color_of(subset);
            if (color && *color != col) {
                ok = false;
                return false;
            }
            return true;
        });
        return ok;
    };

    std::function<bool(unsigned)> extend = [&](unsigned from) {
        if (chosen.size() == r) {
            found = chosen;
            return true;
        }
        for (unsigned e = from; e <= c.ground; ++e) {
            if (c.ground - e + 1 + unsigned(chosen.size()) < r) break;  // not enough room
            if (!consistent(e)) continue;
            std::optional<unsigned> saved = color;
            chosen.push_back(e);
            if (!color && chosen.size() >= c.arity) {
                // the first completed subset pins the color
                std::vector<unsigned> prefix(chosen.begin(), chosen.begin() + c.arity);
                color = c.color_of(prefix);
            }
            if (extend(e + 1)) return true;
            chosen.pop_back();
            color = saved;
        }
        return false;
    };
    extend(1);
    return found;
}

std::optional<CellIndex> cube_cell(const std::array<RealValue, 3>& point, unsigned N,
                                   const PrecisionPolicy& policy) {
    if (N < 1) throw MalformedQuery("N must be >= 1");
    CellIndex cell;
    long* out[3] = {&cell.k1, &cell.k2, &cell.k3};
    for (int i = 0; i < 3; ++i) {
        const RealValue& x = point[i];
        bool done = false;
        for (unsigned bits = policy.start_bits;; bits *= 2) {
            Interval iv = x.enclosure(bits);
            if (iv.width() < 1) {
                // cell = floor(N * frac(x)) = floor(N x) mod N
                Interval scaled = iv * Rat(long(N));
                Int flo = floor_int(scaled.lo), fhi = floor_int(scaled.hi);
                // a named-constant-backed value never sits exactly on the
                // rational right endpoint, so that case stays in the left cell
                bool pinned = flo == fhi ||
                              (x.base() && fhi == flo + 1 && scaled.hi == Rat(fhi));
                if (pinned) {
                    Int cell_count{long(N)};
                    Int k;
                    mpz_fdiv_r(k.get_mpz_t(), flo.get_mpz_t(), cell_count.get_mpz_t());
                    *out[i] = k.get_si();
                    done = true;
                }
            }
            if (done) break;
            if (bits >= policy.cap_bits || !x.is_refinable()) return std::nullopt;
        }
    }
    return cell;
}

PipelineReport finitistic_cubic_pipeline(const RealValue& alpha, const Rat& eps,
                                         const FiniteSequence& s,
                                         const PrecisionPolicy& policy) {
    if (eps <= 0) throw MalformedQuery("eps must be positive");
    if (alpha.is_exact()) throw MalformedInput("alpha must be irrational-tagged");
    if (s.size() < 6) throw TooShort("pipeline needs at least 6 elements");

    PipelineReport rep;
    // least N with 7/N < eps (trivially 1 once eps swallows everything)
    if (eps >= 7) {
        rep.N = 1;
    } else {
        Int n = floor_int(7 / eps) + 1;
        rep.N = unsigned(n.get_ui());
    }

    // color quadruples through their leading triple
    std::map<std::vector<size_t>, unsigned> triple_cell;
    size_t R = s.size();
    bool cell_failure = false;
    for_each_combination(R, 3, [&](const std::vector<size_t>& t) {
        Int d21 = s[t[1]] - s[t[0]];
        Int d32 = s[t[2]] - s[t[1]];
        std::array<RealValue, 3> point{
            alpha * Rat(pow_int(d21, 3)),
            alpha * Rat(s[t[2]] * d21 * d21),
            alpha * Rat(d32 * d32 * s[t[0]]),
        };
        auto cell = cube_cell(point, rep.N, policy);
        if (!cell) {
            cell_failure = true;
            return false;
        }
        unsigned id = unsigned(((cell->k1 * long(rep.N)) + cell->k2) * long(rep.N) + cell->k3 + 1);
        triple_cell.emplace(t, id);
        return true;
    });
    if (cell_failure) throw PrecisionExhausted("cell assignment straddles a boundary at the cap");

    Coloring coloring;
    coloring.ground = unsigned(R);
    coloring.arity = 4;
    for_each_combination(R, 4, [&](const std::vector<size_t>& q) {
        std::vector<size_t> t{q[0], q[1], q[2]};
        std::vector<unsigned> subset{unsigned(q[0] + 1), unsigned(q[1] + 1), unsigned(q[2] + 1),
                                     unsigned(q[3] + 1)};
        coloring.colors.emplace(std::move(subset), triple_cell.at(t));
        ++rep.quadruples_colored;
        return true;
    });

    auto mono = monochromatic_search(coloring, 6);
    if (!mono) {
        rep.status = PipelineStatus::Incomplete;
        return rep;
    }
    rep.mono_set = *mono;

    const auto& t = rep.mono_set;  // 1-based
    Int a = s[t[3] - 1] - s[t[2] - 1];  // n_{t4} - n_{t3}
    Int b = s[t[1] - 1] - s[t[0] - 1];  // n_{t2} - n_{t1}
    Rat inv_n(1, long(rep.N));
    Rat three_inv_n(3, long(rep.N));

    auto certify = [&](const Int& k, const Rat& bound) {
        SimulCondition c{1, alpha * Rat(k), RealValue::exact(Rat(0)), bound};
        return check_condition(c, Int(1), policy);
    };
    rep.cube_diff_bound = certify(pow_int(a, 3) - pow_int(b, 3), inv_n);
    rep.mixed_bound_1 = certify(3 * a * b * b, three_inv_n);
    rep.mixed_bound_2 = certify(3 * a * a * b, three_inv_n);

    // final quadruple bound: d = a - b, ||d^3 alpha|| < eps
    Int d = a - b;
    rep.witness.sequence_id = s.source;
    rep.witness.indices = IndexTuple(2, {t[0], t[1], t[2], t[3]});
    rep.witness.diff_value = d;
    PolySpec v = PolySpec::monomial(3, alpha, CoeffTag::Irrational);
    Rat eps_clamped = eps > Rat(1, 2) ? Rat(1, 2) : eps;
    rep.witness.bound = poly_eval_mod1(v, d, eps_clamped, policy);
    rep.witness.found = d >= 1 && rep.witness.bound.verdict == Verdict::In;

    bool intermediate_ok = rep.cube_diff_bound.verdict == Verdict::In &&
                           rep.mixed_bound_1.verdict == Verdict::In &&
                           rep.mixed_bound_2.verdict == Verdict::In;
    rep.status = (intermediate_ok && rep.witness.found) ? PipelineStatus::Ok
                                                        : PipelineStatus::Incomplete;
    return rep;
}

}  // namespace delta
