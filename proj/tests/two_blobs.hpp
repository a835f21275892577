#pragma once

#include <array>

// 20 points in two blobs of 10 and the reference clustering obtained from
// scikit-learn's AffinityPropagation (precomputed negative squared distances,
// median off-diagonal preference, random_state=0). See oracle/two_blobs.py.
namespace lexintel::testutil::two_blobs {

inline constexpr std::array<std::array<double, 3>, 20> kPoints{{
    {2.253579, 0.930109, 0.004923},    {2.061127, 0.881662, 0.00031},     {1.999866, 0.736791, 0.152649},
    {2.090075, 0.906186, -0.025732},   {2.075795, 0.960797, -0.036412},   {1.782014, 1.083187, 0.018582},
    {2.041169, 0.771021, 0.247605},    {2.02315, 0.941929, 0.304361},     {1.993192, 0.782398, -0.060784},
    {1.656753, 1.157409, -0.062471},   {-1.111383, 0.660871, 2.752339},   {-0.919686, 0.190338, 2.900676},
    {-1.180633, 0.719296, 3.264924},   {-1.049412, 0.62611, 2.973002},    {-0.914791, 0.387074, 2.743749},
    {-1.270465, 0.557468, 3.337139},   {-0.959588, 0.421309, 3.286803},   {-0.964405, 0.515215, 3.037887},
    {-1.019857, 0.453579, 2.784755},   {-0.924756, 0.485784, 3.178963},
}};

inline constexpr std::array<std::size_t, 2> kExemplars{1, 17};

inline constexpr std::array<std::array<double, 3>, 2> kCenters{{
    {1.9976720000000001, 0.9151488999999999, 0.05430310000000001},
    {-1.0314976, 0.5017044, 3.0260237000000005},
}};

}  // namespace lexintel::testutil::two_blobs
