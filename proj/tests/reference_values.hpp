// High-precision reference values (50-digit arithmetic, rounded to double).
#pragma once
#include "schro/common.hpp"
namespace schro::testref {
using schro::Cplx;
inline constexpr Cplx kLambda_1p1i{0.30474420525691259246, -0.20821893820283162729};
inline constexpr Cplx kLambda_2{0.25539567631050574387, 0.0};
inline constexpr Cplx kLambda_m2_p05i{-35.635303512001889054, -77.380142375345434942};
inline constexpr Cplx kLambda_03_m4i{0.0116869298009551001, 0.14496789419252056415};
inline constexpr Cplx kLambda_15_7i{0.030870053814196520989, -0.01435378896128758275};
inline constexpr Cplx kLambda_2i{0.018315638888734180294, -0.34002621706606620128};
inline constexpr Cplx kErf_17{0.98379045859077456084, 0.0};
inline constexpr Cplx kErf_1p1i{1.3161512816979476449, 0.19045346923783468628};
inline constexpr Cplx kErf_3m2i{0.99896327885681726888, 0.000011546724379290603406};
inline constexpr Cplx kErf_025_075i{0.47386755965954537548, 0.94680771308775020215};
inline constexpr Cplx kJ_nu03_w2p1i{0.5170636539597096467, -0.54559667561514408292};
inline constexpr Cplx kJ_nu32_w2p1i{0.64675243611789138052, 0.17208064589464438072};
inline constexpr Cplx kJ_nu049_w249{-0.034462054707203996491, 0.0};
inline constexpr Cplx kJ_nuI05_w5m3i{-1.9638662660949205365, -7.1558091554431680444};
inline constexpr Cplx kJ_nuI2_w30p10i{-35.077062476513511325, 59.320936195269501901};
inline constexpr Cplx kJ_nu12_w07{0.24343409443673053575, 0.0};
inline constexpr Cplx kH2_nu03_w2p1i{0.86365471081712517492, -1.1811225764709468495};
inline constexpr Cplx kH2_nu025_w2{0.39781106433817834873, -0.39273839961538505532};
inline constexpr Cplx kH2_nu049_w249{-0.034462054707203996491, 0.1561384715184295683};
inline constexpr Cplx kH2_nuI05_w5m3i{-0.0052655109249595730765, 0.0050970199744622386741};
inline constexpr Cplx kH2_nuI2_w4m20i{-1.1478339699227853266e-11, -8.4262502398141488242e-12};
inline constexpr Cplx kH2_nu03_w100{-0.017225645932780617964, 0.0779065075878701164};
inline constexpr Cplx kH2_nuI05_w03m02i{0.18673227853690673809, 0.30746238656503099561};
inline constexpr Cplx kGreenAttr_example{0.38371934301920248878, -0.094910550067290712697};
inline constexpr double kSupershiftSupFree[4] = {4.1580044524978735, 0.75002902120791752, 0.24304549466646146, 0.10590173817464489};
inline constexpr double kCnu03 = 0.87799991793923952;
inline constexpr double kCnu049 = 0.80273185279156874;
inline constexpr double kCnuI05 = 0.4835753594259337;
inline constexpr double kCnuI2 = 0.19283029971680686;
inline constexpr double kCnu025 = 0.8921477331734934;
} // namespace schro::testref
