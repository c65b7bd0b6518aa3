#pragma once

#include "ptpoly/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <string>

namespace ptpoly {

using BigFloat = boost::multiprecision::mpfr_float;

template <class Real>
Real to_real(const Rational& q) {
    if constexpr (std::is_same_v<Real, double>) {
        return q.get_d();
    } else {
        return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
    }
}

template <class Real>
double to_double(const Real& x) {
    if constexpr (std::is_same_v<Real, double>) return x;
    else return x.template convert_to<double>();
}

/// Sets the working precision of BigFloat for the lifetime of the scope.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits) : saved_(BigFloat::default_precision()) {
        BigFloat::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1);
    }
    ~PrecisionScope() { BigFloat::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

}  // namespace ptpoly
