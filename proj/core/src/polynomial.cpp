#include "delta/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "delta/errors.hpp"

namespace delta {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::In:
            return "In";
        case Verdict::Out:
            return "Out";
        default:
            return "Unknown";
    }
}

PolySpec::PolySpec(std::vector<PolyTerm> terms) : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end(),
              [](const PolyTerm& a, const PolyTerm& b) { return a.degree < b.degree; });
    for (size_t i = 0; i + 1 < terms_.size(); ++i)
        if (terms_[i].degree == terms_[i + 1].degree)
            throw MalformedInput("duplicate degree in polynomial");
    for (const auto& t : terms_)
        if (t.tag == CoeffTag::Rational && !t.coeff.is_exact())
            throw MalformedInput("Rational-tagged coefficient is not an exact rational");
    // drop exact zero terms
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const PolyTerm& t) {
                                    return t.coeff.is_exact() && t.coeff.exact_value() == 0;
                                }),
                 terms_.end());
}

bool PolySpec::empty() const { return terms_.empty(); }

unsigned PolySpec::degree() const { return terms_.empty() ? 0 : terms_.back().degree; }

bool PolySpec::all_rational() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const PolyTerm& t) { return t.tag == CoeffTag::Rational; });
}

bool PolySpec::is_odd() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const PolyTerm& t) { return t.degree % 2 == 1; });
}

bool PolySpec::is_even() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const PolyTerm& t) { return t.degree % 2 == 0; });
}

bool PolySpec::has_irrational_term() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const PolyTerm& t) { return t.tag == CoeffTag::Irrational; });
}

const PolyTerm* PolySpec::leading_term() const {
    return terms_.empty() ? nullptr : &terms_.back();
}

Rat PolySpec::eval_exact(const Int& n) const {
    if (!all_rational()) throw MalformedInput("polynomial has irrational coefficients");
    Rat acc(0);
    for (const auto& t : terms_) acc += t.coeff.exact_value() * Rat(pow_int(n, t.degree));
    return acc;
}

Interval PolySpec::eval_enclosure(const Int& n, unsigned bits) const {
    // pad per-term precision so |n^d| * coeff_width stays below the request
    Interval acc{Rat(0)};
    size_t m = terms_.size();
    for (const auto& t : terms_) {
        Int p = pow_int(n, t.degree);
        unsigned pad = mpz_sizeinbase(p.get_mpz_t(), 2) + (m > 1 ? 8 : 1);
        Interval c = t.coeff.enclosure(bits + pad);
        acc += c * Rat(p);
    }
    return acc;
}

std::string PolySpec::describe() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        os << it->coeff.describe();
        if (it->degree > 0) os << "*x^" << it->degree;
        first = false;
    }
    return os.str();
}

PolySpec PolySpec::monomial(unsigned degree, const RealValue& coeff, CoeffTag tag) {
    return PolySpec({PolyTerm{degree, coeff, tag}});
}

Mod1Bound dist_mod1(const Rat& x) {
    Mod1Bound b;
    b.value = Interval(dist_to_int(x));
    b.verdict = Verdict::Unknown;  // no threshold supplied
    return b;
}

Mod1Bound dist_mod1_shifted(const Interval& value, const Interval& target, const Rat& eps) {
    Mod1Bound b;
    b.eps = eps;
    b.value = dist_to_int_interval(value - target);
    if (b.value.hi < eps)
        b.verdict = Verdict::In;
    else if (b.value.lo >= eps)
        b.verdict = Verdict::Out;
    else
        b.verdict = Verdict::Unknown;
    return b;
}

Mod1Bound dist_mod1(const RealValue& x, const Rat& eps, const PrecisionPolicy& policy) {
    if (eps <= 0 || eps > Rat(1, 2)) throw MalformedQuery("eps must lie in (0, 1/2]");
    if (x.is_exact()) {
        Mod1Bound b = dist_mod1(x.exact_value());
        b.eps = eps;
        b.verdict = b.value.hi < eps ? Verdict::In : Verdict::Out;
        return b;
    }
    Mod1Bound b;
    for (unsigned bits = policy.start_bits;; bits *= 2) {
        b = dist_mod1_shifted(x.enclosure(bits), Interval(Rat(0)), eps);
        b.bits_used = bits;
        if (b.verdict != Verdict::Unknown || bits >= policy.cap_bits || !x.is_refinable()) return b;
    }
}

Mod1Bound poly_eval_mod1(const PolySpec& v, const Int& n, const Rat& eps,
                         const PrecisionPolicy& policy) {
    if (eps <= 0 || eps > Rat(1, 2)) throw MalformedQuery("eps must lie in (0, 1/2]");
    if (v.all_rational()) {
        Rat val = v.eval_exact(n);
        Mod1Bound b;
        b.eps = eps;
        b.value = Interval(dist_to_int(val));
        b.verdict = b.value.hi < eps ? Verdict::In : Verdict::Out;
        return b;
    }
    Mod1Bound b;
    for (unsigned bits = policy.start_bits;; bits *= 2) {
        b = dist_mod1_shifted(v.eval_enclosure(n, bits), Interval(Rat(0)), eps);
        b.bits_used = bits;
        if (b.verdict != Verdict::Unknown || bits >= policy.cap_bits) return b;
    }
}

PolyDecomposition decompose_polynomial(const PolySpec& v) {
    std::vector<PolyTerm> e, o, r;
    for (const auto& t : v.terms()) {
        if (t.tag == CoeffTag::Rational)
            r.push_back(t);
        else if (t.degree % 2 == 0)
            e.push_back(t);
        else
            o.push_back(t);
    }
    return PolyDecomposition{PolySpec(std::move(e)), PolySpec(std::move(o)),
                             PolySpec(std::move(r))};
}

bool is_integer_valued(const PolySpec& v) {
    if (!v.all_rational()) return false;
    // integer values at deg+1 consecutive integers imply integrality on Z
    for (unsigned k = 0; k <= v.degree(); ++k) {
        Rat val = v.eval_exact(Int(k));
        if (val.get_den() != 1) return false;
    }
    return true;
}

namespace {

struct TermAccum {
    Rat rational{1};
    ConstantPtr named;
    unsigned degree = 0;
};

void apply_factor(TermAccum& acc, const std::string& f, const std::string& constant_dir) {
    if (f.empty()) throw MalformedInput("empty factor in polynomial");
    if (f[0] == 'x' || f[0] == 'X') {
        unsigned d = 1;
        if (f.size() > 1) {
            if (f[1] != '^') throw MalformedInput("bad power syntax: " + f);
            d = std::stoul(f.substr(2));
        }
        acc.degree += d;
        return;
    }
    if ((f[0] >= '0' && f[0] <= '9') || f[0] == '-' || f[0] == '.') {
        acc.rational *= rat_from_string(f);
        return;
    }
    if (acc.named) throw MalformedInput("more than one named constant in a term");
    acc.named = resolve_constant(f, constant_dir);
}

}  // namespace

PolySpec parse_poly(const std::string& text, const std::string& constant_dir) {
    // split into +/- separated terms (a '-' binding to the following term)
    std::vector<std::string> parts;
    std::vector<int> signs;
    std::string cur;
    int sign = 1;
    bool expect_term_start = true;
    for (char c : text) {
        if (isspace((unsigned char)c)) continue;
        if ((c == '+' || c == '-') && !expect_term_start) {
            parts.push_back(cur);
            signs.push_back(sign);
            cur.clear();
            sign = c == '-' ? -1 : 1;
            expect_term_start = true;
            continue;
        }
        if (c == '-' && expect_term_start && cur.empty()) {
            sign = -sign;
            continue;
        }
        cur += c;
        expect_term_start = false;
    }
    if (!cur.empty()) {
        parts.push_back(cur);
        signs.push_back(sign);
    }
    if (parts.empty()) throw MalformedInput("empty polynomial");

    std::map<unsigned, TermAccum> by_degree;
    for (size_t i = 0; i < parts.size(); ++i) {
        // factors separated by '*'; a '/q' suffix divides the rational part
        TermAccum acc;
        acc.rational = Rat(signs[i]);
        std::string term = parts[i];
        std::string factor;
        for (size_t j = 0; j <= term.size(); ++j) {
            bool at_end = j == term.size();
            char c = at_end ? '*' : term[j];
            if (c == '*' || c == '/') {
                if (!factor.empty()) apply_factor(acc, factor, constant_dir);
                factor.clear();
                if (c == '/') {
                    // consume the divisor as a rational
                    size_t k = j + 1;
                    std::string div;
                    while (k < term.size() && term[k] != '*') div += term[k++];
                    if (div.empty()) throw MalformedInput("dangling '/' in polynomial");
                    acc.rational /= rat_from_string(div);
                    j = k - 1;
                }
                continue;
            }
            factor += c;
        }
        auto [it, fresh] = by_degree.try_emplace(acc.degree, acc);
        if (!fresh) {
            // merge only pure-rational repeats; mixed constants per degree is
            // almost certainly an input mistake
            if (acc.named || it->second.named)
                throw MalformedInput("duplicate degree with named constants");
            it->second.rational += acc.rational;
        }
    }

    std::vector<PolyTerm> terms;
    for (auto& [deg, acc] : by_degree) {
        PolyTerm t;
        t.degree = deg;
        if (acc.named) {
            t.coeff = RealValue::scaled(acc.rational, acc.named);
            t.tag = CoeffTag::Irrational;
        } else {
            t.coeff = RealValue::exact(acc.rational);
            t.tag = CoeffTag::Rational;
        }
        terms.push_back(std::move(t));
    }
    return PolySpec(std::move(terms));
}

}  // namespace delta
