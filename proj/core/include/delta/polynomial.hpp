#pragma once

#include <string>
#include <vector>

#include "delta/interval.hpp"
#include "delta/real_value.hpp"

namespace delta {

enum class CoeffTag { Rational, Irrational };

enum class Verdict { In, Out, Unknown };

std::string verdict_name(Verdict v);

// Certified bound on ||expr|| against a threshold eps.
//   In      iff value.hi <  eps
//   Out     iff value.lo >= eps
//   Unknown when the enclosure straddles eps at the precision cap
struct Mod1Bound {
    Interval value;  // subset of [0, 1/2]
    Verdict verdict = Verdict::Unknown;
    Rat eps;
    unsigned bits_used = 0;
};

struct PolyTerm {
    unsigned degree = 0;
    RealValue coeff;
    CoeffTag tag = CoeffTag::Rational;
};

// A real polynomial presented as tagged terms. Irrationality is an input
// contract: a Rational tag requires an exact coefficient, an Irrational tag
// is trusted (undecidable from approximations).
class PolySpec {
  public:
    PolySpec() = default;
    explicit PolySpec(std::vector<PolyTerm> terms);

    const std::vector<PolyTerm>& terms() const { return terms_; }
    bool empty() const;  // zero polynomial (no nonzero terms)
    unsigned degree() const;
    bool all_rational() const;
    bool is_odd() const;   // only odd-degree terms
    bool is_even() const;  // only even-degree terms
    bool has_irrational_term() const;
    const PolyTerm* leading_term() const;

    Rat eval_exact(const Int& n) const;  // requires all_rational()
    Interval eval_enclosure(const Int& n, unsigned bits) const;

    std::string describe() const;

    static PolySpec monomial(unsigned degree, const RealValue& coeff, CoeffTag tag);

  private:
    std::vector<PolyTerm> terms_;
};

struct PrecisionPolicy {
    unsigned start_bits = 128;
    unsigned cap_bits = 4096;
};

// ||x|| as an exact value / certified interval
Mod1Bound dist_mod1(const Rat& x);
Mod1Bound dist_mod1(const RealValue& x, const Rat& eps, const PrecisionPolicy& policy = {});

// Certified verdict on ||v(n)|| < eps, refining named constants (doubling the
// working precision from policy.start_bits) until In/Out or the cap is hit.
Mod1Bound poly_eval_mod1(const PolySpec& v, const Int& n, const Rat& eps,
                         const PrecisionPolicy& policy = {});

// Certified verdict on ||expr - target|| < eps for expr enclosed by `value`.
Mod1Bound dist_mod1_shifted(const Interval& value, const Interval& target, const Rat& eps);

struct PolyDecomposition {
    PolySpec even;      // irrational-tagged terms of even degree
    PolySpec odd;       // irrational-tagged terms of odd degree
    PolySpec rational;  // rational-tagged terms
};

// v = even + odd + rational, termwise
PolyDecomposition decompose_polynomial(const PolySpec& v);

// exact test for v(Z) subset of Z: rational coefficients and integer values
// at 0..deg (equivalent to integrality everywhere)
bool is_integer_valued(const PolySpec& v);

// Parse e.g. "x^3/2", "sqrt2*x^3", "1/3*x^2 + 7", "golden*x".
PolySpec parse_poly(const std::string& text, const std::string& constant_dir = "");

}  // namespace delta
