#pragma once

// Generated by tests/oracles/gen_frozen.py (mpmath, 30 digits). Do not edit.

#include <complex>

namespace frozen {

inline constexpr double ml_06_14_g2_m3 = 3.7504220854304561839e-2;
inline constexpr double ml_05_1_m1 = 4.2758357615580700441e-1;
inline constexpr double ml_05_1_m10 = 5.6140992743822585858e-2;
inline constexpr double ml_08_1_m5 = 5.7595384762152244264e-2;
inline constexpr double ml_03_07_m4 = 1.0437620660449939766e-1;
inline constexpr double ml_09_23_m4 = 2.4135723647349249208e-1;
inline constexpr double ml_09_13_m4 = 1.3692652009684416947e-1;
inline constexpr double ml_05_15_m1 = 5.7241642384419299559e-1;
inline constexpr double ml_05_05_m1 = 1.3660600739194928254e-1;
inline constexpr double ml_07_12_p3 = 1.2716015193906930384e+2;
inline constexpr double ml_15_1_m8 = -2.0287153923872816229e-1;
inline constexpr double ml_01_1_p06 = 2.6228235678242422857;
inline constexpr double ml_04_13_g07_m6 = 2.666986959581982158e-1;
inline const std::complex<double> mlc_06_1{0.070140669222765782092, 0.11672739968760944415};
inline const std::complex<double> mlc_08_09{0.023512983944980374231, -0.0085231237468166541151};
inline const std::complex<double> mlc_05_1_big{0.032566795528516975475, 0.021607454276573459249};
inline constexpr double ml2_05_15_m1 = 2.7321201478389856507e-1;
inline constexpr double ml2_09_23_m4 = 4.4870695008274624517e-2;
inline constexpr double memory_kernel_025_05 = 4.63864804289500422e-1;
inline constexpr double symM_s2_xi1 = 1.715728752538099024e-1;
inline constexpr double symU0_s1_xi1 = 8.0e-1;
inline constexpr double N_hat_t1_xi1 = 7.634655945133361895e-1;
inline constexpr double M_hat_t07_xi2 = 7.3733160180128048559e-2;
inline constexpr double J_hat_t1_xi1 = 5.880594855534639598e-1;
inline constexpr double N_hat_crit_t08_xi13 = 5.6438350070442936564e-1;
inline constexpr double ode_mu1e3_v1_t2 = -4.1527647621681120513e-1;
inline constexpr double ode_mu2_v4_t05 = 4.3983967051899124866e-1;
inline constexpr double ode_mu3_v2_t1 = 2.6632187160571463255e-1;
inline constexpr double J0_1 = 7.6519768655796655145e-1;
inline constexpr double J0_50 = 5.5812327669251815005e-2;
inline constexpr double J1_500 = 1.0472613470372292844e-2;
inline constexpr double Jm05_3 = -4.5604882079463317885e-1;
inline constexpr double J025_7 = 2.6799998395276246212e-1;
inline constexpr double J15_02 = 2.369330409512924151e-2;
inline constexpr double Jm07_2 = -4.0903120139552881246e-1;
inline constexpr double J0_499 = -2.4901316934301134524e-2;
inline constexpr double J0_zero1 = 2.4048255576957727686;
inline constexpr double J0_zero200 = 6.2753333174690422546e+2;
inline constexpr double J05_zero3 = 9.4247779607693797154;
inline constexpr double Jm05_zero2 = 4.7123889803846898577;
inline constexpr double J1_zero10 = 3.2189679910974403627e+1;
inline constexpr double hankel_r2gauss_nu1_t15 = 2.0476570263767545663e-1;
inline constexpr double mellin_n3_r15_s03_sig2_a3_b07 = 3.2450027215839360441e-1;
inline constexpr double ineqC_l1_a05_b1 = 1.2818466760204237865;
inline constexpr double young_s4 = 1.0675923980983514014;

}  // namespace frozen
