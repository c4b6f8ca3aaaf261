#include "delta/avoider.hpp"

#include <algorithm>
#include <sstream>

#include "delta/diff.hpp"
#include "delta/errors.hpp"

namespace delta {

namespace {

Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }

Mod1Bound certify_shifted(const PolySpec& q, const Int& d, const Rat& shift, const Rat& eps,
                          const PrecisionPolicy& policy) {
    if (q.all_rational()) {
        Mod1Bound b;
        b.eps = eps;
        b.value = Interval(dist_to_int(q.eval_exact(d) - shift));
        b.verdict = b.value.hi < eps ? Verdict::In : Verdict::Out;
        return b;
    }
    Mod1Bound b;
    for (unsigned bits = policy.start_bits;; bits *= 2) {
        b = dist_mod1_shifted(q.eval_enclosure(d, bits), Interval(shift), eps);
        b.bits_used = bits;
        if (b.verdict != Verdict::Unknown || bits >= policy.cap_bits) return b;
    }
}

// success means ||q(d)|| certified strictly above eps
std::pair<Mod1Bound, bool> certify_out_strict(const PolySpec& q, const Int& d, const Rat& eps,
                                              const PrecisionPolicy& policy) {
    if (q.all_rational()) {
        Mod1Bound b;
        b.eps = eps;
        b.value = Interval(dist_to_int(q.eval_exact(d)));
        b.verdict = b.value.lo > eps ? Verdict::Out : Verdict::In;
        return {b, b.value.lo > eps};
    }
    Mod1Bound b;
    for (unsigned bits = policy.start_bits;; bits *= 2) {
        b = dist_mod1_shifted(q.eval_enclosure(d, bits), Interval(Rat(0)), eps);
        b.bits_used = bits;
        if (b.value.lo > eps) return {b, true};
        if (b.value.hi <= eps) return {b, false};
        if (bits >= policy.cap_bits) return {b, false};
    }
}

// structured candidates c * q_r from the convergent denominators of the
// coefficient's base constant, in (low, high], ordered by (r, c)
std::vector<Int> ladder_candidates(const NamedConstant& base, const Int& low, const Int& high,
                                   unsigned c_max) {
    std::vector<Int> qs;
    try {
        for (int depth = 8;; depth *= 2) {
            auto conv = base.convergents(depth);
            qs.clear();
            for (const Rat& pq : conv) qs.emplace_back(pq.get_den());
            if (!qs.empty() && qs.back() > high) break;
            if (depth > 4096) break;
        }
    } catch (const PrecisionExhausted&) {
        // digit-stream constants run dry; use what the stream certified
    }
    std::vector<Int> out;
    for (const Int& q : qs) {
        if (q > high) break;
        for (unsigned c = 1; c <= c_max; ++c) {
            Int n = Int(c) * q;
            if (n <= low || n > high) continue;
            out.push_back(n);
        }
    }
    return out;
}

void check_all_tuples(AvoiderCertificate& cert, const PrecisionPolicy& policy) {
    cert.tuple_bounds.clear();
    const auto& elems = cert.sequence.elements;
    bool all_ok = true;
    std::vector<Int> vals;
    for (unsigned level : cert.levels) {
        size_t k = size_t(1) << level;
        if (elems.size() < k) continue;
        for_each_combination(elems.size(), k, [&](const std::vector<size_t>& c) {
            vals.clear();
            for (size_t i : c) vals.push_back(elems[i]);
            TupleRecord rec;
            rec.level = level;
            for (size_t i : c) rec.indices.push_back(i + 1);
            rec.diff_value = iterated_diff(vals);
            switch (cert.kind) {
                case TupleCheckKind::ShiftedIn: {
                    rec.bound = certify_shifted(cert.check_poly, rec.diff_value, cert.shift,
                                                cert.eps, policy);
                    rec.ok = rec.diff_value >= 1 && rec.bound.verdict == Verdict::In;
                    break;
                }
                case TupleCheckKind::DistOutStrict: {
                    auto [b, ok] =
                        certify_out_strict(cert.check_poly, rec.diff_value, cert.eps, policy);
                    rec.bound = b;
                    rec.ok = rec.diff_value >= 1 && ok;
                    break;
                }
                case TupleCheckKind::InIntervalUnion: {
                    rec.ok = false;
                    for (size_t t = 0; t < cert.intervals.size(); ++t) {
                        if (cert.intervals[t].first <= rec.diff_value &&
                            rec.diff_value <= cert.intervals[t].second) {
                            rec.ok = true;
                            rec.interval_index = long(t);
                            break;
                        }
                    }
                    break;
                }
            }
            all_ok = all_ok && rec.ok;
            cert.tuple_bounds.push_back(std::move(rec));
            return true;
        });
    }
    cert.verified = all_ok && !cert.tuple_bounds.empty();
}

}  // namespace

AvoiderCertificate build_square_avoider(const RealValue& alpha, const Rat& eps, size_t length,
                                        const Int& scan_bound, const PrecisionPolicy& policy) {
    if (alpha.is_exact()) throw MalformedInput("alpha must be irrational-tagged");
    if (!alpha.base()) throw MalformedInput("alpha must be backed by a refinable constant");
    if (!(eps > 0 && eps <= Rat(1, 6))) throw MalformedQuery("eps must lie in (0, 1/6]");
    if (length < 4) throw TooShort("a quadruple certificate needs at least 4 elements");

    AvoiderCertificate cert;
    cert.kind = TupleCheckKind::ShiftedIn;
    cert.check_poly = PolySpec::monomial(2, alpha, CoeffTag::Irrational);
    cert.shift = Rat(4, 3);
    cert.eps = eps;
    cert.levels = {2};

    std::vector<Int> elems;
    for (size_t k = 1; k <= length; ++k) {
        Rat delta_k = rat_min(eps / 16, Rat(1, Int(k) * Int(k)));
        Rat cross_k = rat_min(Rat(1, Int(k)), eps / 16);
        std::vector<SimulCondition> conds;
        conds.push_back({1, alpha, RealValue::exact(Rat(0)), delta_k});
        conds.push_back({2, alpha, RealValue::exact(Rat(1, 3)), delta_k});
        for (const Int& prev : elems)
            conds.push_back({1, alpha * Rat(prev), RealValue::exact(Rat(0)), cross_k});

        Int low = elems.empty() ? Int(0) : elems.back();
        auto cands = ladder_candidates(*alpha.base(), low, scan_bound, 128);
        auto res = simultaneous_search_over(conds, cands, policy);

        ElementScanRecord scan;
        scan.strategy = "convergent ladder c<=128 over " + alpha.base()->name();
        scan.candidates_examined = res.stats.candidates_examined;
        scan.tolerance_used = delta_k;
        if (!res.n) {
            cert.scans.push_back(std::move(scan));
            break;  // scan bound exhausted: partial certificate with prefix
        }
        scan.chosen = *res.n;
        cert.scans.push_back(std::move(scan));
        elems.push_back(*res.n);
    }
    if (elems.size() < 4) throw BoundExceeded("scan bound too small to seed a quadruple");

    std::ostringstream claim;
    claim << "every level-2 difference d of the sequence has ||d^2*(" << alpha.describe()
          << ") - 4/3|| < " << rat_to_string(eps) << ", hence ||d^2*(" << alpha.describe()
          << ")|| >= 1/3 - eps";
    cert.claim = claim.str();
    cert.sequence = FiniteSequence(elems, "square-avoider");
    cert.complete = elems.size() == length;
    check_all_tuples(cert, policy);
    return cert;
}

AvoiderCertificate build_even_avoider(const PolySpec& v, const Rat& eps, unsigned level_max,
                                      size_t length, const Int& scan_bound,
                                      const PrecisionPolicy& policy) {
    if (v.empty() || !v.is_even()) throw MalformedInput("v must be a nonzero even polynomial");
    for (const auto& t : v.terms())
        if (t.degree == 0) throw MalformedInput("v(0) must be 0");
    if (!v.has_irrational_term()) throw MalformedInput("v needs an irrational coefficient");
    if (!(eps > 0 && eps < Rat(1, 3))) throw MalformedQuery("eps must lie in (0, 1/3)");
    if (level_max < 1 || level_max > 2)
        throw BoundExceeded("desk scale supports level_max in {1, 2}");
    if (length < (size_t(1) << level_max)) throw TooShort("too few elements for the top level");

    // mechanism targets the highest irrational-tagged degree
    const PolyTerm* top = nullptr;
    for (const auto& t : v.terms())
        if (t.tag == CoeffTag::Irrational) top = &t;
    if (!top->coeff.base()) throw MalformedInput("irrational coefficient must be refinable");

    // rational terms vanish mod 1 along multiples of their lcm denominator
    Int denom_lcm(1);
    for (const auto& t : v.terms())
        if (t.tag == CoeffTag::Rational)
            mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                    t.coeff.exact_value().get_den().get_mpz_t());

    // error budget: up to 2^level squares near the 1/3 split plus pair
    // crosses must keep ||v(d)|| above eps; split the 1/3 - eps slack
    Rat slack = Rat(1, 3) - eps;
    Rat sq_tol = slack / 6;
    Rat cross_tol = slack / 36;

    AvoiderCertificate cert;
    cert.kind = TupleCheckKind::DistOutStrict;
    cert.check_poly = v;
    cert.eps = eps;
    for (unsigned l = 1; l <= level_max; ++l) cert.levels.push_back(l);

    std::vector<Int> elems;
    for (size_t k = 1; k <= length; ++k) {
        Rat delta_k = rat_min(sq_tol, Rat(1, Int(k) * Int(k)));
        Rat cross_k = rat_min(cross_tol, Rat(1, Int(k)));
        std::vector<SimulCondition> conds;
        for (const auto& t : v.terms()) {
            if (t.tag != CoeffTag::Irrational) continue;
            if (t.degree == top->degree)
                conds.push_back({t.degree, t.coeff, RealValue::exact(Rat(1, 3)), delta_k});
            else
                conds.push_back({t.degree, t.coeff, RealValue::exact(Rat(0)), delta_k});
            // cross terms of the (a - b)^deg expansions, pairwise
            for (const Int& prev : elems) {
                for (unsigned e = 1; e < t.degree; ++e) {
                    Int binom;
                    mpz_bin_uiui(binom.get_mpz_t(), t.degree, e);
                    Rat factor = Rat(binom * pow_int(prev, e));
                    conds.push_back(
                        {t.degree - e, t.coeff * factor, RealValue::exact(Rat(0)), cross_k});
                }
            }
        }

        Int low = elems.empty() ? Int(0) : elems.back();
        auto all_cands = ladder_candidates(*top->coeff.base(), low, scan_bound, 256);
        std::vector<Int> cands;
        for (const Int& n : all_cands)
            if (n % denom_lcm == 0) cands.push_back(n);
        auto res = simultaneous_search_over(conds, cands, policy);

        ElementScanRecord scan;
        scan.strategy = "convergent ladder c<=256 over " + top->coeff.base()->name() +
                        (denom_lcm > 1 ? " filtered to multiples of " + denom_lcm.get_str() : "");
        scan.candidates_examined = res.stats.candidates_examined;
        scan.tolerance_used = delta_k;
        if (!res.n) {
            cert.scans.push_back(std::move(scan));
            break;
        }
        scan.chosen = *res.n;
        cert.scans.push_back(std::move(scan));
        elems.push_back(*res.n);
    }
    if (elems.size() < (size_t(1) << level_max))
        throw BoundExceeded("scan bound too small for the requested top level");

    std::ostringstream claim;
    claim << "every difference-set value d (levels 1.." << level_max << ") of the sequence has ||("
          << v.describe() << ") at d|| > " << rat_to_string(eps);
    cert.claim = claim.str();
    cert.sequence = FiniteSequence(elems, "even-avoider");
    cert.complete = elems.size() == length;
    check_all_tuples(cert, policy);
    return cert;
}

AvoiderCertificate build_high_degree_avoider(const PolySpec& v, unsigned level, size_t length,
                                             const Int& scan_bound,
                                             const std::vector<ConstantPtr>& aux,
                                             const PrecisionPolicy& policy) {
    if (v.empty() || !v.is_odd()) throw MalformedInput("v must be a nonzero odd polynomial");
    const PolyTerm* lead = v.leading_term();
    if (lead->tag != CoeffTag::Irrational)
        throw MalformedInput("v must have an irrational leading coefficient");
    unsigned lp = (v.degree() + 1) / 2;
    if (level >= lp) throw MalformedInput("level must be below (deg(v)+1)/2");
    if (level < 1) throw MalformedQuery("level must be >= 1");
    size_t tuple_len = size_t(1) << level;
    if (length < tuple_len) throw TooShort("length below 2^level");
    if (aux.size() != lp) throw MalformedInput("need (deg(v)+1)/2 auxiliary constants");
    for (const auto& c : aux)
        if (!c) throw MalformedInput("null auxiliary constant");

    unsigned t = lp - 1 - level;  // avoider elements are d-values of 2^t blocks
    size_t block = size_t(1) << t;
    size_t base_len = length * block;

    // the three limit conditions of the converse construction, applied to the
    // base elements at an adaptive tolerance; certificate inequalities on the
    // derived elements are enforced outright
    auto soft_conditions = [&](const Rat& delta) {
        std::vector<SimulCondition> conds;
        conds.push_back({1, RealValue::named(aux[0]), RealValue::exact(Rat(1, 2)), delta});
        for (unsigned j = 1; j < lp; ++j) {
            conds.push_back({1, RealValue::named(aux[j]), RealValue::exact(Rat(0)), delta});
            // c_j = -2^{j-1} * j * (2j+1)
            Rat cj = Rat(-(Int(1) << (j - 1)) * Int(j) * Int(2 * j + 1));
            conds.push_back(
                {2, RealValue::scaled(cj, aux[j]), RealValue::named(aux[j - 1]), delta});
        }
        return conds;
    };

    const Rat hard_margin(7, 32);  // construction margin below the 1/4 claim
    std::vector<Int> base, derived;
    std::vector<ElementScanRecord> scans;
    bool exhausted = false;

    for (size_t j = 1; j <= base_len && !exhausted; ++j) {
        size_t k = (j + block - 1) / block;
        bool block_final = (j % block) == 0;
        Rat delta = rat_min(Rat(1, 64), Rat(1, Int(k) * Int(k)));
        Int cand = base.empty() ? Int(1) : base.back() + 1;
        ElementScanRecord scan;
        std::optional<Int> chosen;
        long since_relax = 0;
        while (cand <= scan_bound) {
            ++scan.candidates_examined;
            ++since_relax;
            bool ok = true;
            for (const auto& c : soft_conditions(delta)) {
                if (check_condition(c, cand, policy).verdict != Verdict::In) {
                    ok = false;
                    break;
                }
            }
            if (ok && block_final) {
                Int m;
                if (block == 1) {
                    m = cand;
                } else {
                    std::vector<Int> blk(base.end() - long(block - 1), base.end());
                    blk.push_back(cand);
                    m = iterated_diff(blk);
                }
                if (m < 1 || (!derived.empty() && m <= derived.back())) ok = false;
                if (ok && derived.size() + 1 >= tuple_len) {
                    std::vector<Int> pool = derived;
                    pool.push_back(m);
                    std::vector<Int> vals;
                    for_each_combination(
                        pool.size() - 1, tuple_len - 1, [&](const std::vector<size_t>& head) {
                            vals.clear();
                            for (size_t i : head) vals.push_back(pool[i]);
                            vals.push_back(m);
                            Int d = iterated_diff(vals);
                            if (d < 1) {
                                ok = false;
                                return false;
                            }
                            Mod1Bound b = certify_shifted(v, d, Rat(1, 2), hard_margin, policy);
                            if (b.verdict != Verdict::In) {
                                ok = false;
                                return false;
                            }
                            return true;
                        });
                }
            }
            if (ok) {
                chosen = cand;
                break;
            }
            ++cand;
            if (since_relax >= 20000) {
                delta = rat_min(delta * 2, Rat(1, 2));
                since_relax = 0;
            }
        }
        scan.tolerance_used = delta;
        scan.strategy = "raw scan, three-condition tolerance adaptive";
        if (!chosen) {
            exhausted = true;
        } else {
            scan.chosen = *chosen;
            base.push_back(*chosen);
            if (block_final) {
                if (block == 1) {
                    derived.push_back(base.back());
                } else {
                    std::vector<Int> blk(base.end() - long(block), base.end());
                    derived.push_back(iterated_diff(blk));
                }
            }
        }
        scans.push_back(std::move(scan));
    }

    if (derived.size() < tuple_len)
        throw BoundExceeded("scan bound too small to build 2^level derived elements");

    AvoiderCertificate cert;
    cert.kind = TupleCheckKind::ShiftedIn;
    cert.check_poly = v;
    cert.shift = Rat(1, 2);
    cert.eps = Rat(1, 4);
    cert.levels = {level};
    cert.scans = std::move(scans);
    std::ostringstream claim;
    claim << "every level-" << level << " difference d of the derived sequence (block size "
          << block << ") has ||(" << v.describe() << ") at d - 1/2|| < 1/4, hence ||v(d)|| >= 1/4";
    cert.claim = claim.str();
    cert.sequence = FiniteSequence(derived, "high-degree-avoider");
    cert.complete = derived.size() == length;
    check_all_tuples(cert, policy);
    return cert;
}

AvoiderCertificate build_nonsyndetic_avoider(const std::vector<std::pair<Int, Int>>& intervals,
                                             unsigned level) {
    if (level < 1) throw MalformedQuery("level must be >= 1");
    size_t tuple_len = size_t(1) << level;
    if (intervals.size() < tuple_len) throw TooShort("need at least 2^level intervals");
    Int running_sum(0);
    for (size_t k = 0; k < intervals.size(); ++k) {
        const auto& [L, R] = intervals[k];
        if (!(L < R)) throw MalformedInput("interval " + std::to_string(k + 1) + " is empty");
        if (k + 1 < intervals.size()) {
            const auto& [Ln, Rn] = intervals[k + 1];
            if (!(R < Ln))
                throw MalformedInput("intervals " + std::to_string(k + 1) + " and " +
                                     std::to_string(k + 2) + " overlap or touch");
            running_sum += R;
            if (!(running_sum + Ln < Rn))
                throw MalformedInput("growth condition fails at k=" + std::to_string(k + 1));
        }
    }

    AvoiderCertificate cert;
    cert.kind = TupleCheckKind::InIntervalUnion;
    cert.intervals = intervals;
    cert.levels = {level};
    std::vector<Int> elems;
    for (const auto& [L, R] : intervals) elems.push_back(R);
    cert.sequence = FiniteSequence(elems, "nonsyndetic-avoider");
    std::ostringstream claim;
    claim << "D_" << level << " of the right endpoints lies inside the union of the "
          << intervals.size() << " supplied intervals";
    cert.claim = claim.str();
    cert.complete = true;
    check_all_tuples(cert, PrecisionPolicy{});
    return cert;
}

std::vector<std::pair<Int, Int>> generate_nonsyndetic_intervals(size_t count) {
    std::vector<std::pair<Int, Int>> intervals{{Int(1), Int(2)}};
    Int sum(2);
    for (size_t k = 1; k < count; ++k) {
        Int L = sum + Int(long(k));
        intervals.emplace_back(L, 2 * L);
        sum += 2 * L;
    }
    return intervals;
}

bool verify_avoider(const AvoiderCertificate& cert, const PrecisionPolicy& policy) {
    AvoiderCertificate copy = cert;
    check_all_tuples(copy, policy);
    if (!copy.verified) return false;
    if (copy.tuple_bounds.size() != cert.tuple_bounds.size()) return false;
    for (size_t i = 0; i < copy.tuple_bounds.size(); ++i) {
        const auto& a = cert.tuple_bounds[i];
        const auto& b = copy.tuple_bounds[i];
        if (a.indices != b.indices || a.diff_value != b.diff_value || !a.ok) return false;
        if (cert.kind != TupleCheckKind::InIntervalUnion) {
            // both enclosures contain the true value, so they must overlap
            if (a.bound.value.lo > b.bound.value.hi || b.bound.value.lo > a.bound.value.hi)
                return false;
        }
    }
    return true;
}

}  // namespace delta
