#include "delta/real_value.hpp"

#include <sstream>

#include "delta/errors.hpp"

namespace delta {

RealValue RealValue::exact(const Rat& q) {
    RealValue v;
    v.offset_ = q;
    return v;
}

RealValue RealValue::named(ConstantPtr c) { return scaled(Rat(1), std::move(c)); }

RealValue RealValue::scaled(const Rat& scale, ConstantPtr c, const Rat& offset) {
    if (!c) throw MalformedInput("null constant");
    RealValue v;
    v.scale_ = scale;
    v.offset_ = offset;
    if (scale != 0) v.base_ = std::move(c);
    return v;
}

RealValue RealValue::raw_interval(const Interval& iv) {
    if (iv.is_point()) return exact(iv.lo);
    RealValue v;
    v.raw_ = iv;
    return v;
}

const Rat& RealValue::exact_value() const {
    if (!is_exact()) throw MalformedInput("RealValue is not an exact rational");
    return offset_;
}

Interval RealValue::enclosure(unsigned bits) const {
    if (raw_) return *raw_;
    if (!base_) return Interval(offset_);
    // pad the base precision so that |scale| * width still fits the request
    unsigned extra = 1;
    Rat s = abs(scale_);
    while (s > 1) {
        s /= 2;
        ++extra;
    }
    Interval b = base_->enclosure(bits + extra);
    return b * scale_ + Interval(offset_);
}

RealValue RealValue::operator-() const { return *this * Rat(-1); }

RealValue RealValue::operator+(const Rat& shift) const {
    RealValue v = *this;
    if (v.raw_) {
        v.raw_ = *v.raw_ + shift;
    } else {
        v.offset_ += shift;
    }
    return v;
}

RealValue RealValue::operator*(const Rat& factor) const {
    RealValue v = *this;
    if (v.raw_) {
        v.raw_ = *v.raw_ * factor;
        return v;
    }
    v.scale_ *= factor;
    v.offset_ *= factor;
    if (v.scale_ == 0) v.base_.reset();
    return v;
}

std::string RealValue::describe() const {
    std::ostringstream os;
    if (raw_) {
        os << "[" << rat_to_string(raw_->lo) << ", " << rat_to_string(raw_->hi) << "]";
        return os.str();
    }
    if (!base_) return rat_to_string(offset_);
    os << rat_to_string(scale_) << "*" << base_->name();
    if (offset_ != 0) os << (offset_ > 0 ? "+" : "") << rat_to_string(offset_);
    return os.str();
}

}  // namespace delta
