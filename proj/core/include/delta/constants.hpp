#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "delta/interval.hpp"

namespace delta {

// A named real constant refinable to arbitrary (or stream-limited) precision.
// Enclosures narrow monotonically and always contain the constant; the cache
// is shared, so refinement is serialized behind a mutex and narrowing-only.
class NamedConstant {
  public:
    virtual ~NamedConstant() = default;

    const std::string& name() const { return name_; }

    // enclosure of width <= 2^-bits; throws PrecisionExhausted when the
    // backing stream runs out of digits first
    Interval enclosure(unsigned bits) const;

    // first `depth` continued-fraction convergents p/q, each a best rational
    // approximation with |c - p/q| < 1/q^2
    std::vector<Rat> convergents(int depth) const;

  protected:
    explicit NamedConstant(std::string name) : name_(std::move(name)) {}

    // uncached enclosure of width <= eps
    virtual Interval compute(const Rat& eps) const = 0;

    // first `count` partial quotients; the default recovers them from
    // certified enclosures (shared prefix of the endpoint expansions)
    virtual std::vector<Int> cf_terms(int count) const;

  private:
    std::string name_;
    mutable std::mutex mu_;
    mutable bool cached_ = false;
    mutable Interval cache_;
};

using ConstantPtr = std::shared_ptr<const NamedConstant>;

// sqrt(n) for non-square n >= 2, via the periodic surd expansion
ConstantPtr make_sqrt(unsigned long n);

// (1 + sqrt(5)) / 2
ConstantPtr make_golden();

// general quadratic surd (p + s*sqrt(d))/q, d non-square, s >= 1, q >= 1
// (negation / rational rescaling of a constant is RealValue's job)
ConstantPtr make_surd(const Int& p, const Int& s, unsigned long d, const Int& q);

// finite decimal truncation: the constant lies in [value, value + 10^-digits)
// (mirrored for negative values); refinement past the stream throws
ConstantPtr make_digit_stream(const std::string& name, const std::string& decimal_literal);

// Named-constant file: first non-blank line is the identifier, the remainder
// (possibly wrapped over several lines) is one decimal literal.
ConstantPtr load_constant_file(const std::string& path);

// Resolve "sqrt2", "sqrt:17", "golden", or a named file in `constant_dir`
// (defaulting to $DELTASETS_CONSTANTS when the dir is empty).
ConstantPtr resolve_constant(const std::string& spec, const std::string& constant_dir = "");

// continued fraction of an exact rational (Euclid); terminates
std::vector<Int> rational_cf_terms(const Rat& q, int max_terms);

// convergents p/q accumulated from partial quotients
std::vector<Rat> convergents_from_terms(const std::vector<Int>& terms);

}  // namespace delta
