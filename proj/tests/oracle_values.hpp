#pragma once

// Generated by tests/oracle/gen_values.py (mpmath, 50 digits).
namespace oracle {

inline constexpr double kLogGamma_0p001 = 6.9071788853838536825;
inline constexpr double kLogGamma_0p1 = 2.2527126517342059599;
inline constexpr double kLogGamma_0p5 = 5.7236494292470008707e-1;
inline constexpr double kLogGamma_1p5 = -1.2078223763524522235e-1;
inline constexpr double kLogGamma_2p5 = 2.8468287047291915963e-1;
inline constexpr double kLogGamma_3p7 = 1.4280723266653879219;
inline constexpr double kLogGamma_10 = 1.2801827480081469611e+1;
inline constexpr double kLogGamma_50p5 = 1.4651925549072062722e+2;
inline constexpr double kLogGamma_100 = 3.5913420536957539878e+2;
inline constexpr double kLogGamma_170 = 7.0143726380873708535e+2;
inline constexpr double kKGamma_3_2 = 1.2533141373155002512;
inline constexpr double kScaledMl_0p5_150_m2 = 8.5949512556619133978e-1;
inline constexpr double kScaledMl_0p75_2p5_m3 = 3.5302124247486891764e-1;
inline constexpr double kMl_0p5_1_m1 = 4.2758357615580700441e-1;
inline constexpr double kMl_0p5_1_msqrt2 = 3.3620400244634121285e-1;
inline constexpr double kMl_1p5_2_m4 = 2.839799579675376488e-1;
inline constexpr double kKBesselJ_2_2_1_1_w1 = 4.1258107308286099768e-1;
inline constexpr double kKWrightW_1_1_1_2_xm0p25 = 9.387886043841643011e-1;
inline constexpr double kOmega_fig_z0p5 = 1.8460047456811979393e-1;
inline constexpr double kOmega_bc1_z1 = 4.4005058574493351596e-1;
inline constexpr double kOmega_wright_z0p5 = 2.3461745181020322606e-1;
inline constexpr double kFig1_lam1_t0p5 = 1.8548855689445440025e-1;
inline constexpr double kFig1_lam1_t1 = 1.449717123116426916e-1;
inline constexpr double kFig2_lam1_t1p85 = -8.8464279527361558245e-4;
inline constexpr double kFig4_lam1p5_t0p05 = 1.1053726676462909531e-1;
inline constexpr double kFig6_lam2_t0p05 = 1.1629736248909799343e-1;
inline constexpr double kFig1SourceLaplace_p5 = 1.4915834923244770845e-2;
inline constexpr double kFig1SourceLaplace_p10 = 3.9172610194589083233e-3;

}  // namespace oracle
