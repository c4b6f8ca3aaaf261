#include "delta/rational.hpp"

#include "delta/errors.hpp"

namespace delta {

Int floor_int(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int round_int(const Rat& q) {
    // floor(q + 1/2)
    return floor_int(q + Rat(1, 2));
}

Rat frac(const Rat& q) {
    Rat r = q - Rat(floor_int(q));
    r.canonicalize();
    return r;
}

Rat dist_to_int(const Rat& q) {
    Rat f = frac(q);
    Rat other = 1 - f;
    return f <= other ? f : other;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    r.canonicalize();
    return r;
}

Rat pow2_inv(unsigned long bits) {
    Rat r(1);
    mpz_mul_2exp(r.get_den().get_mpz_t(), r.get_den().get_mpz_t(), bits);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot);
        std::string fp = s.substr(dot + 1);
        for (char c : fp)
            if (c < '0' || c > '9') throw MalformedInput("bad decimal literal: " + s);
        bool neg = !ip.empty() && ip[0] == '-';
        if (neg) ip = ip.substr(1);
        if (ip.empty()) ip = "0";
        Int scale = pow_int(Int(10), fp.empty() ? 0 : fp.size());
        Int num = Int(ip, 10) * scale + (fp.empty() ? Int(0) : Int(fp, 10));
        Rat r{num, scale};
        r.canonicalize();
        return neg ? Rat(-r) : r;
    }
    Rat r;
    if (r.set_str(s, 10) != 0) throw MalformedInput("bad rational literal: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw MalformedInput("zero denominator: " + s);
    return r;
}

std::string rat_to_decimal(const Rat& q, int digits) {
    bool neg = q < 0;
    Rat a = neg ? Rat(-q) : q;
    Int ip = floor_int(a);
    Rat rest = a - Rat(ip);
    std::string out = (neg ? "-" : "") + ip.get_str() + ".";
    for (int i = 0; i < digits; ++i) {
        rest *= 10;
        Int d = floor_int(rest);
        out += d.get_str();
        rest -= Rat(d);
    }
    return out;
}

}  // namespace delta
