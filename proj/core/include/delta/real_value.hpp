#pragma once

#include <optional>
#include <string>

#include "delta/constants.hpp"
#include "delta/interval.hpp"

namespace delta {

// An exact real of the form  scale * base + offset  where base is a named
// refinable constant (absent for exact rationals), or a raw non-refinable
// interval. Whether a value is irrational is an input contract carried by
// the polynomial layer's tags, not something detected here.
class RealValue {
  public:
    RealValue() : offset_(0), scale_(0) {}

    static RealValue exact(const Rat& q);
    static RealValue named(ConstantPtr c);
    static RealValue scaled(const Rat& scale, ConstantPtr c, const Rat& offset = Rat(0));
    static RealValue raw_interval(const Interval& iv);

    bool is_exact() const { return !base_ && !raw_; }
    bool is_refinable() const { return !raw_; }
    const Rat& exact_value() const;  // throws unless is_exact()
    ConstantPtr base() const { return base_; }

    // enclosure of width <= 2^-bits when refinable; the fixed interval (or
    // point) otherwise
    Interval enclosure(unsigned bits) const;

    RealValue operator-() const;
    RealValue operator+(const Rat& shift) const;
    RealValue operator*(const Rat& factor) const;

    std::string describe() const;

  private:
    Rat offset_;
    Rat scale_;
    ConstantPtr base_;
    std::optional<Interval> raw_;
};

}  // namespace delta
