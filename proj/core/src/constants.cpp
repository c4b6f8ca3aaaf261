#include "delta/constants.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "delta/errors.hpp"

namespace delta {

Interval NamedConstant::enclosure(unsigned bits) const {
    Rat eps = pow2_inv(bits);
    std::lock_guard<std::mutex> lock(mu_);
    if (cached_ && cache_.width() <= eps) return cache_;
    Interval fresh = compute(eps);
    if (cached_) {
        // narrow only; both enclosures contain the constant
        Rat lo = std::max(cache_.lo, fresh.lo);
        Rat hi = std::min(cache_.hi, fresh.hi);
        cache_ = Interval(lo, hi);
    } else {
        cache_ = fresh;
        cached_ = true;
    }
    return cache_;
}

std::vector<Int> rational_cf_terms(const Rat& q, int max_terms) {
    std::vector<Int> out;
    Rat x = q;
    for (int i = 0; i < max_terms; ++i) {
        Int a = floor_int(x);
        out.push_back(a);
        Rat rest = x - Rat(a);
        if (rest == 0) break;
        x = 1 / rest;
    }
    return out;
}

std::vector<Rat> convergents_from_terms(const std::vector<Int>& terms) {
    std::vector<Rat> out;
    Int p_prev(1), p_prev2(0);  // p_{-1}=1, p_{-2}=0
    Int q_prev(0), q_prev2(1);
    for (const Int& a : terms) {
        Int p = a * p_prev + p_prev2;
        Int q = a * q_prev + q_prev2;
        out.emplace_back(Rat(p) / Rat(q));
        p_prev2 = p_prev;
        p_prev = p;
        q_prev2 = q_prev;
        q_prev = q;
    }
    return out;
}

std::vector<Int> NamedConstant::cf_terms(int count) const {
    // Recover partial quotients as the shared prefix of the endpoint
    // expansions, refining until enough terms are certified.
    for (unsigned bits = 64;; bits *= 2) {
        Interval iv = enclosure(bits);  // PrecisionExhausted propagates
        if (iv.is_point())
            throw MalformedInput("constant " + name_ + " refined to an exact rational");
        std::vector<Int> lo = rational_cf_terms(iv.lo, count + 1);
        std::vector<Int> hi = rational_cf_terms(iv.hi, count + 1);
        std::vector<Int> common;
        for (size_t i = 0; i < lo.size() && i < hi.size(); ++i) {
            if (lo[i] != hi[i]) break;
            common.push_back(lo[i]);
        }
        // The last agreeing term can still be off by one if an endpoint
        // expansion terminated there, so only trust a strict prefix.
        if (!common.empty()) common.pop_back();
        if ((int)common.size() >= count) {
            common.resize(count);
            return common;
        }
        if (bits > (1u << 22)) throw PrecisionExhausted("cf terms for " + name_);
    }
}

std::vector<Rat> NamedConstant::convergents(int depth) const {
    if (depth <= 0) return {};
    return convergents_from_terms(cf_terms(depth));
}

namespace {

// floor((m + sqrt(d)) / q) for non-square d, any sign of q; root = isqrt(d).
// Uses floor((m + sqrt(d))/q) = floor((m + root)/q) for q > 0 and
// = floor((-m - root - 1)/(-q)) for q < 0, both exact since sqrt(d) is
// irrational.
Int floor_surd(const Int& m, const Int& q, const Int& root) {
    Int a;
    if (q > 0) {
        Int num = m + root;
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
    } else {
        Int num = -m - root - 1;
        Int den = -q;
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    return a;
}

// x = (p + s*sqrt(d)) / q with periodic continued fraction. Normalized so the
// standard recurrence stays in integers: q | (d' - p'^2) after scaling.
// Negation and rational rescaling of constants live in RealValue, so s and q
// are required positive here.
class SurdConstant final : public NamedConstant {
  public:
    SurdConstant(std::string name, Int p, Int s, unsigned long d, Int q)
        : NamedConstant(std::move(name)) {
        if (q <= 0) throw MalformedInput("surd denominator must be positive");
        if (s <= 0) throw MalformedInput("surd sqrt part must be positive");
        Int dd(d);
        Int root;
        mpz_sqrt(root.get_mpz_t(), dd.get_mpz_t());
        if (root * root == dd) throw MalformedInput("surd discriminant is a perfect square");
        // fold s into the radicand: s*sqrt(d) = sqrt(s^2 d)
        d_ = dd * s * s;
        p_ = p;
        q_ = q;
        // scale so q | (d - p^2)
        Int rem = (d_ - p_ * p_) % q_;
        if (rem != 0) {
            p_ *= q_;
            d_ *= q_ * q_;
            q_ *= q_;
        }
    }

  protected:
    Interval compute(const Rat& eps) const override {
        // run the surd CF, tracking convergents; consecutive convergents
        // bracket the value and |x - p/q| < 1/q^2
        Int m = p_, q = q_;
        Int root;
        mpz_sqrt(root.get_mpz_t(), d_.get_mpz_t());
        Int h1(1), h0(0), k1(0), k0(1);
        Rat prev, cur;
        bool have_prev = false;
        for (int iter = 0; iter < 100000; ++iter) {
            Int a = floor_surd(m, q, root);
            Int h = a * h1 + h0, k = a * k1 + k0;
            h0 = h1;
            h1 = h;
            k0 = k1;
            k1 = k;
            cur = Rat(h) / Rat(k);
            if (have_prev) {
                Rat lo = std::min(prev, cur), hi = std::max(prev, cur);
                if (hi - lo <= eps) return Interval(lo, hi);
            }
            prev = cur;
            have_prev = true;
            m = a * q - m;
            q = (d_ - m * m) / q;
        }
        throw PrecisionExhausted("surd refinement runaway for " + name());
    }

    std::vector<Int> cf_terms(int count) const override {
        std::vector<Int> out;
        Int m = p_, q = q_;
        Int root;
        mpz_sqrt(root.get_mpz_t(), d_.get_mpz_t());
        for (int i = 0; i < count; ++i) {
            Int a = floor_surd(m, q, root);
            out.push_back(a);
            m = a * q - m;
            q = (d_ - m * m) / q;
        }
        return out;
    }

  private:
    Int p_, d_, q_;
};

class DigitStreamConstant final : public NamedConstant {
  public:
    DigitStreamConstant(std::string name, const std::string& literal)
        : NamedConstant(std::move(name)) {
        value_ = rat_from_string(literal);
        auto dot = literal.find('.');
        size_t digits = dot == std::string::npos ? 0 : literal.size() - dot - 1;
        step_ = pow_rat(Rat(1, 10), digits);
    }

  protected:
    Interval compute(const Rat& eps) const override {
        if (step_ > eps)
            throw PrecisionExhausted("digit stream for " + name() + " too short");
        if (value_ >= 0) return Interval(value_, value_ + step_);
        return Interval(value_ - step_, value_);
    }

  private:
    Rat value_;
    Rat step_;
};

}  // namespace

ConstantPtr make_sqrt(unsigned long n) {
    return std::make_shared<SurdConstant>("sqrt" + std::to_string(n), Int(0), Int(1), n, Int(1));
}

ConstantPtr make_golden() {
    return std::make_shared<SurdConstant>("golden", Int(1), Int(1), 5, Int(2));
}

ConstantPtr make_surd(const Int& p, const Int& s, unsigned long d, const Int& q) {
    std::ostringstream name;
    name << "(" << p.get_str() << "+" << s.get_str() << "*sqrt" << d << ")/" << q.get_str();
    return std::make_shared<SurdConstant>(name.str(), p, s, d, q);
}

ConstantPtr make_digit_stream(const std::string& name, const std::string& literal) {
    return std::make_shared<DigitStreamConstant>(name, literal);
}

ConstantPtr load_constant_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open constant file: " + path);
    std::string name, line, digits;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (name.empty()) {
            name = line;
        } else {
            for (char c : line)
                if (!isspace((unsigned char)c)) digits += c;
        }
    }
    if (name.empty() || digits.empty())
        throw MalformedInput("constant file missing identifier or digits: " + path);
    return make_digit_stream(name, digits);
}

ConstantPtr resolve_constant(const std::string& spec, const std::string& constant_dir) {
    if (spec == "golden") return make_golden();
    if (spec.rfind("sqrt", 0) == 0) {
        std::string arg = spec.substr(4);
        if (!arg.empty() && arg[0] == ':') arg = arg.substr(1);
        if (!arg.empty()) {
            unsigned long n = std::strtoul(arg.c_str(), nullptr, 10);
            if (n >= 2) return make_sqrt(n);
        }
        throw MalformedInput("bad sqrt constant spec: " + spec);
    }
    std::string dir = constant_dir;
    if (dir.empty()) {
        const char* env = std::getenv("DELTASETS_CONSTANTS");
        if (env) dir = env;
    }
    std::string path = dir.empty() ? spec : dir + "/" + spec;
    if (path.find('.') == std::string::npos) path += ".txt";
    return load_constant_file(path);
}

}  // namespace delta
