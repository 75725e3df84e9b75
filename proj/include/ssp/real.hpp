#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace ssp {

using Real = boost::multiprecision::mpfr_float;

// sets the working precision of Real for the lifetime of the guard
class RealPrecision {
public:
    explicit RealPrecision(int bits);
    ~RealPrecision();
    RealPrecision(const RealPrecision&) = delete;
    RealPrecision& operator=(const RealPrecision&) = delete;

private:
    unsigned saved_;
};

}  // namespace ssp
