#pragma once

// Reference values for the 38 dyadic-style height ranges plus the uniform
// Korobov-Vinogradov range. Stored verbatim so reproduction tests do not
// depend on the recomputation path.

#include <array>

namespace zdc::reference {

struct Row {
  double t0_log;   // natural log of T0
  double t1_log;
  double alpha0;
  double u, x, v, w;
  double d11, d12, d21, d22, d3, d4, d5;
  double b1, b2;
  double c1, c2, c3, c4, c5;
  double big_c;    // C of the final estimate
  double big_b;    // B of the final estimate (3-decimal table value)
};

inline constexpr int kRowCount = 38;

inline constexpr std::array<Row, kRowCount> kRows{{
    {28.729633404596658, 29.0, 0.9927, 2.1781287, 7.079837, 4.4744028, 0.4808273, 0.107, 0.13, 0.027, 0.03, 0.003, 84.796, 1.104, 0.711, 2.113, 0.981, 195.23, 2222.717, 286.182, 0.062, 37341.72, 14.16},
    {29.0, 30.0, 0.9927, 2.1653098, 7.0418787, 4.4543359, 0.4781452, 0.107, 0.13, 0.027, 0.03, 0.003, 84.57, 1.104, 0.711, 2.113, 0.981, 195.734, 2243.325, 286.921, 0.061, 37564.18, 14.084},
    {30.0, 31.0, 0.9925, 2.1031623, 6.7936945, 4.2847829, 0.4594357, 0.107, 0.13, 0.027, 0.03, 0.003, 86.156, 1.104, 0.711, 2.116, 0.983, 207.656, 2395.206, 304.415, 0.062, 40014.59, 13.588},
    {31.0, 32.0, 0.9923, 2.0368399, 6.5537594, 4.1225941, 0.4381695, 0.107, 0.13, 0.027, 0.03, 0.003, 87.265, 1.106, 0.711, 2.119, 0.984, 220.851, 2563.12, 323.779, 0.064, 42840.01, 13.108},
    {32.0, 33.0, 0.9921, 1.9765605, 6.3232916, 3.964583, 0.4185077, 0.107, 0.131, 0.027, 0.03, 0.003, 88.852, 1.107, 0.711, 2.122, 0.984, 235.76, 2752.392, 345.657, 0.064, 46015.02, 12.647},
    {33.0, 34.0, 0.9919, 1.9180226, 6.1129209, 3.8226214, 0.3996157, 0.107, 0.131, 0.027, 0.03, 0.003, 90.014, 1.109, 0.712, 2.125, 0.984, 250.519, 2941.458, 367.319, 0.066, 49270.71, 12.226},
    {34.0, 35.0, 0.9918, 1.8662754, 5.9277629, 3.7007007, 0.3836159, 0.107, 0.132, 0.027, 0.03, 0.003, 90.957, 1.11, 0.712, 2.127, 0.984, 263.991, 3116.775, 387.084, 0.066, 52249.66, 11.856},
    {35.0, 36.0, 0.9916, 1.8173525, 5.7524453, 3.5838346, 0.3679799, 0.107, 0.132, 0.027, 0.03, 0.002, 92.011, 1.111, 0.712, 2.13, 0.984, 278.761, 3308.747, 408.766, 0.066, 55524.8, 11.505},
    {36.0, 37.0, 0.9914, 1.7666469, 5.5665117, 3.4573946, 0.3515541, 0.107, 0.133, 0.027, 0.03, 0.002, 93.509, 1.113, 0.712, 2.133, 0.983, 297.07, 3544.3, 435.641, 0.068, 59715.72, 11.134},
    {37.0, 38.0, 0.9912, 1.7189733, 5.3905275, 3.3372497, 0.335646, 0.107, 0.133, 0.027, 0.03, 0.003, 95.141, 1.115, 0.712, 2.136, 0.983, 317.207, 3803.499, 465.199, 0.069, 64228.93, 10.782},
    {38.0, 39.0, 0.991, 1.6775968, 5.2374475, 3.2330781, 0.3226654, 0.107, 0.134, 0.027, 0.031, 0.003, 96.691, 1.117, 0.712, 2.139, 0.983, 335.811, 4046.112, 492.513, 0.07, 68446.65, 10.475},
    {39.0, 40.0, 0.9909, 1.6401586, 5.1084977, 3.1503483, 0.3118339, 0.107, 0.134, 0.027, 0.031, 0.002, 97.416, 1.118, 0.713, 2.141, 0.982, 350.391, 4241.658, 513.913, 0.071, 71907.32, 10.217},
    {40.0, 41.0, 0.9907, 1.6037571, 4.9754347, 3.0601163, 0.3005496, 0.107, 0.134, 0.027, 0.031, 0.002, 98.881, 1.119, 0.713, 2.144, 0.982, 369.491, 4493.302, 541.959, 0.072, 76267.8, 9.951},
    {41.0, 42.0, 0.9906, 1.5712431, 4.859603, 2.984661, 0.2913112, 0.107, 0.135, 0.027, 0.031, 0.002, 99.901, 1.12, 0.713, 2.145, 0.982, 385.42, 4707.817, 565.341, 0.072, 80004.48, 9.72},
    {42.0, 43.0, 0.9905, 1.5381371, 4.7502479, 2.9152677, 0.2813016, 0.107, 0.135, 0.027, 0.031, 0.002, 100.416, 1.121, 0.713, 2.147, 0.982, 401.673, 4927.512, 589.199, 0.073, 83811.09, 9.501},
    {43.0, 44.0, 0.9903, 1.5053035, 4.6290398, 2.8330162, 0.2710128, 0.107, 0.135, 0.028, 0.031, 0.002, 102.078, 1.123, 0.713, 2.15, 0.981, 424.491, 5229.292, 622.708, 0.074, 89209.33, 9.259},
    {44.0, 45.0, 0.9901, 1.4748658, 4.5099741, 2.7513548, 0.2612853, 0.107, 0.136, 0.028, 0.031, 0.002, 104.242, 1.124, 0.713, 2.153, 0.981, 450.335, 5570.341, 660.661, 0.075, 95233.68, 9.02},
    {45.0, 46.2, 0.99, 1.4468014, 4.4210629, 2.6949834, 0.2533034, 0.107, 0.136, 0.028, 0.031, 0.002, 104.616, 1.125, 0.714, 2.155, 0.981, 466.658, 5799.757, 684.629, 0.075, 99227.3, 8.843},
    {46.2, 50.0, 0.9899, 1.4190314, 4.3167121, 2.6279248, 0.2455362, 0.107, 0.136, 0.028, 0.031, 0.002, 106.106, 1.126, 0.714, 2.156, 0.981, 488.558, 6132.446, 716.781, 0.074, 104761.04, 8.634},
    {50.0, 60.0, 0.9892, 1.3227366, 3.9675279, 2.3928627, 0.2159253, 0.108, 0.138, 0.028, 0.031, 0.002, 112.559, 1.132, 0.715, 2.169, 0.979, 592.937, 7615.822, 870.132, 0.081, 128806.85, 7.936},
    {60.0, 70.0, 0.9876, 1.1443596, 3.330314, 1.974646, 0.1634613, 0.108, 0.142, 0.028, 0.032, 0.002, 128.201, 1.146, 0.717, 2.194, 0.977, 903.661, 11836.516, 1326.769, 0.085, 194323.75, 6.661},
    {70.0, 80.0, 0.986, 1.0275277, 2.9044834, 1.6974785, 0.1318565, 0.108, 0.145, 0.028, 0.032, 0.002, 146.704, 1.156, 0.719, 2.219, 0.974, 1293.789, 17238.26, 1900.434, 0.09, 278045.07, 5.809},
    {80.0, 90.0, 0.985, 0.9414561, 2.6078943, 1.5092573, 0.1103318, 0.108, 0.147, 0.028, 0.032, 0.002, 162.542, 1.164, 0.721, 2.235, 0.972, 1725.506, 23340.471, 2535.355, 0.096, 370655.73, 5.216},
    {90.0, 100.0, 0.985, 0.881246, 2.4151753, 1.3944136, 0.09865, 0.107, 0.147, 0.027, 0.032, 0.002, 170.404, 1.163, 0.721, 2.235, 0.973, 2021.343, 27715.348, 2970.04, 0.093, 425721.47, 4.831},
    {100.0, 110.0, 0.985, 0.8345856, 2.2564675, 1.2987862, 0.0906041, 0.107, 0.146, 0.027, 0.032, 0.002, 181.448, 1.159, 0.721, 2.235, 0.972, 2336.236, 32428.941, 3432.726, 0.095, 488901.14, 4.513},
    {110.0, 120.0, 0.985, 0.7956163, 2.1317435, 1.2246505, 0.0835439, 0.107, 0.145, 0.027, 0.032, 0.002, 189.419, 1.157, 0.721, 2.235, 0.973, 2639.408, 37050.947, 3878.189, 0.093, 545744.21, 4.264},
    {120.0, 130.0, 0.985, 0.759719, 2.0159946, 1.1545049, 0.0758754, 0.107, 0.146, 0.027, 0.032, 0.002, 199.542, 1.158, 0.721, 2.235, 0.972, 3065.682, 43481.947, 4504.53, 0.092, 629490.27, 4.032},
    {130.0, 140.0, 0.985, 0.7329142, 1.9273879, 1.1018686, 0.0711966, 0.107, 0.145, 0.027, 0.032, 0.002, 208.767, 1.156, 0.721, 2.235, 0.972, 3409.926, 48829.688, 5010.341, 0.089, 694045.43, 3.855},
    {140.0, 150.0, 0.985, 0.7086575, 1.8478283, 1.0532314, 0.0671401, 0.107, 0.144, 0.027, 0.032, 0.002, 219.463, 1.153, 0.721, 2.235, 0.972, 3792.749, 54797.783, 5572.839, 0.093, 771373.78, 3.696},
    {150.0, 160.0, 0.985, 0.6879899, 1.7855813, 1.0184406, 0.0633382, 0.106, 0.144, 0.027, 0.032, 0.002, 223.399, 1.151, 0.721, 2.235, 0.971, 4086.32, 59533.271, 6004.194, 0.088, 825913.07, 3.572},
    {160.0, 170.2, 0.985, 0.6693878, 1.7239944, 0.9794391, 0.0599159, 0.106, 0.143, 0.027, 0.032, 0.002, 235.581, 1.15, 0.721, 2.235, 0.974, 4549.556, 66812.743, 6684.845, 0.088, 909966.07, 3.448},
    {170.2, 500.0, 0.985, 0.6496901, 1.6680151, 0.9471296, 0.0558721, 0.106, 0.144, 0.027, 0.032, 0.002, 239.663, 1.151, 0.721, 2.235, 0.972, 4968.978, 82847.292, 7301.119, 0.093, 1120000.0, 3.337},
    {500.0, 1000.0, 0.985, 0.4648597, 1.0757433, 0.5873406, 0.0212707, 0.104, 0.139, 0.027, 0.031, 0.001, 575.833, 1.135, 0.721, 2.235, 0.965, 30904.962, 555939.909, 45409.906, 0.086, 6230000.0, 2.152},
    {1000.0, 1500.0, 0.985, 0.4140847, 0.9099961, 0.4838796, 0.0123507, 0.103, 0.133, 0.026, 0.03, 0.001, 1252.961, 1.116, 0.721, 2.235, 0.973, 113906.164, 2137924.019, 167366.915, 0.079, 21200000.0, 1.82},
    {1500.0, 2000.0, 0.985, 0.3945241, 0.8417122, 0.4385802, 0.0077839, 0.103, 0.135, 0.026, 0.03, 0.001, 2659.132, 1.122, 0.721, 2.235, 0.988, 385838.839, 7457165.183, 566928.551, 0.04, 64700000.0, 1.684},
    {2000.0, 2500.0, 0.985, 0.3814614, 0.8045939, 0.4158624, 0.0048886, 0.103, 0.142, 0.026, 0.031, 0.001, 3968.354, 1.147, 0.721, 2.235, 0.965, 936749.186, 18512203.901, 1376403.319, 0.094, 173000000.0, 1.61},
    {2500.0, 3000.0, 0.985, 0.3756629, 0.7880794, 0.4059352, 0.0039808, 0.103, 0.142, 0.026, 0.031, 0.001, 4910.047, 1.144, 0.721, 2.235, 0.975, 1419982.45, 28568596.811, 2086437.421, 0.1, 256000000.0, 1.577},
    {3000.0, 481958.0, 0.985, 0.3750548, 0.7752255, 0.3959471, 0.0049674, 0.102, 0.128, 0.026, 0.029, 0.001, 9955.727, 1.097, 0.721, 2.235, 0.984, 2211776.039, 67229207.111, 3249851.641, 0.131, 576000000.0, 1.551},
}};

// Uniform range (exp(481958), exp(6.7e12)]: only parameters and the final
// estimate are tabulated.
inline constexpr double kUniformT0Log = 481958.0;
inline constexpr double kUniformT1Log = 6.7e12;
inline constexpr double kUniformAlpha0 = 0.985;
inline constexpr double kUniformU = 0.3520926;
inline constexpr double kUniformX = 0.7238738;
inline constexpr double kUniformV = 0.3616651;
inline constexpr double kUniformW = 0.0000662;
inline constexpr double kUniformBigC = 1.62e11;
inline constexpr double kUniformBigB = 1.448;

// Comparison sample: (sigma, log T, improvement percent) over the prior
// C1 T^{8/3(1-sigma)} log^{5-2sigma} T + C2 log^2 T estimate.
struct ImprovementPoint { double sigma; double t_log; double percent; };
inline constexpr std::array<ImprovementPoint, 8> kImprovementTable{{
    {0.993, 29.933606208922594, 13.4},
    {0.993, 46.2, 58.4},
    {0.993, 170.2, 97.4},
    {0.99, 46.2, 4.1},
    {0.99, 170.2, 96.2},
    {0.985, 90.0, 16.2},
    {0.99, 90.0, 72.6},
    {0.993, 90.0, 86.0},
}};

}  // namespace zdc::reference
