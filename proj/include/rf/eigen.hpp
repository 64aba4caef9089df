#pragma once

#include "rf/cyclotomic.hpp"
#include "rf/rational.hpp"

#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<rf::Cyclotomic> : GenericNumTraits<rf::Cyclotomic> {
    using Real = rf::Cyclotomic;
    using NonInteger = rf::Cyclotomic;
    using Nested = rf::Cyclotomic;
    using Literal = rf::Cyclotomic;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 128
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace rf {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Mat2 = Eigen::Matrix<Cyclotomic, 2, 2>;
using MatQ = Mat<Rational>;
using VecQ = Vec<Rational>;

}  // namespace rf
