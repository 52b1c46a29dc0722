#pragma once

// Generated by tests/oracles/generate.py (mpmath, 40 digits). Do not edit.

#include <complex>

namespace oracle {

using C = std::complex<double>;

struct ComplexPoint { C arg; C value; };
struct RealPoint { double arg; double value; };

inline const ComplexPoint kGamma[] = {
    {{0.5, 0.0}, {1.7724538509055160273, 0.0}},
    {{3.7000000000000001776, 0.0}, {4.1706517837966040301, 0.0}},
    {{-2.5, 0.0}, {-0.94530872048294188123, 0.0}},
    {{0.2999999999999999889, 4.0}, {0.001164643684811490564, 0.0033525598880352024374}},
    {{-3.2000000000000001776, 1.1000000000000000888}, {-0.022128397519464269153, 0.020288966421124622127}},
    {{12.0, -7.0}, {1112765.2628578610603, 5208219.4721327993525}},
};
inline const ComplexPoint kZeta[] = {
    {{2.0, 0.0}, {1.6449340668482264365, 0.0}},
    {{0.5, 0.0}, {-1.4603545088095868129, 0.0}},
    {{0.5, 14.13472499999999954}, {0.00000001767429841384903915, -0.00000011102028930923116747}},
    {{-3.5, 2.0}, {-0.0035609799649190723433, 0.042622537314776407267}},
    {{-10.5, 0.0}, {0.011146122473942814136, 0.0}},
    {{3.0, 25.0}, {0.96139804156270740633, 0.093471959986470241872}},
    {{0.69999999999999995559, -0.2999999999999999889}, {-1.1113174436210800361, 1.6439682027018161541}},
    {{-0.4000000000000000222, 0.0}, {-0.24716546083171482687, 0.0}},
};
struct BesselPoint { C nu; double x; C value; };
inline const BesselPoint kBessel[] = {
    {{0.0, 0.0}, 1.0, {0.42102443824070833334, 0.0}},
    {{0.5, 0.0}, 2.0, {0.11993777196806144737, 0.0}},
    {{1.1999999999999999556, 0.0}, 0.10000000000000000555, {16.573265774746548038, 0.0}},
    {{2.5, 0.0}, 7.2999999999999998224, {0.00045978445443881347331, 0.0}},
    {{0.2999999999999999889, 0.0}, 30.0, {0.000000000000021356270283260948772, 0.0}},
    {{0.2000000000000000111, 1.5}, 1.6999999999999999556, {0.095431003702537367465, 0.014522855823915865809}},
    {{-0.80000000000000004441, 3.0}, 6.0, {0.00060078198168187573088, -0.00024157127499438938715}},
    {{4.0, 0.0}, 0.5, {752.24509791040394607, 0.0}},
};
struct TauValue { C tau; C value; };
inline const TauValue kEta[] = {
    {{0.0, 1.0}, {0.768225422326056659, 0.0}},
    {{0.2999999999999999889, 1.1999999999999999556}, {0.72829981913846155359, 0.056948215660904556349}},
    {{0.5, 0.80000000000000004441}, {0.80934156943065150357, 0.10655183901684802071}},
    {{-0.4500000000000000111, 0.20999999999999999223}, {1.1289629623401643216, -0.096296935461626937785}},
    {{0.050000000000000002776, 0.11999999999999999556}, {0.36220755168316112342, -0.23583886767958583888}},
    {{0.2000000000000000111, 2.5}, {0.51899038928258568459, 0.027199059182484350472}},
};
struct EisensteinPoint { C s; C value; };
// E*(s, i) = 4 zeta(s) beta(s)
inline const EisensteinPoint kEisensteinI[] = {
    {{2.0, 0.0}, {6.0268120396919401235, 0.0}},
    {{3.0, 0.0}, {4.6589136156038434402, 0.0}},
    {{2.5, 1.0}, {4.4814621162373044555, -0.77235615653372459579}},
    {{0.2999999999999999889, 0.0}, {-2.1969342318046863261, 0.0}},
    {{0.69999999999999995559, 0.5}, {-0.28371190148619923391, -4.4146233261286314646}},
    {{-1.5, -0.5}, {0.054148313978201466743, -0.032426514043975479956}},
    {{-0.5, 0.0}, {-0.22882431037721895335, 0.0}},
    {{0.5, 0.0}, {-3.9002649200019558828, 0.0}},
    {{1.5, 0.0}, {9.0336216831009503057, 0.0}},
    {{1.0009999999999998899, 0.0}, {3144.1780011329217804, 0.0}},
};
// tau = e^{i pi/3}: E*(s) = (sqrt3/2)^s 6 zeta(s) L(s, chi_{-3})
inline const EisensteinPoint kEisensteinHex[] = {
    {{2.0, 0.0}, {5.7833592996786723131, 0.0}},
    {{0.2999999999999999889, 0.0}, {-2.2067505009789299615, 0.0}},
    {{-0.5, 0.5}, {-0.0018161092421619349853, -0.33190166602270186664}},
    {{2.5, 1.0}, {4.1502046343469287828, -1.0562726041793428974}},
};
// Q(s, i) = E*(s, i) minus the two zeta terms
inline const EisensteinPoint kRemainderI[] = {
    {{0.2999999999999999889, 0.0}, {0.0034750649489928955612, 0.0}},
    {{0.5, 0.0}, {0.0073522441335599818973, 0.0}},
    {{0.69999999999999995559, 0.0}, {0.012659853842535016198, 0.0}},
    {{2.0, 0.0}, {0.085792436106584813311, 0.0}},
    {{-0.5, 0.0}, {-0.0012607295937657451206, 0.0}},
    {{0.4000000000000000222, 1.0}, {-0.012906093440931395194, 0.01608878863183035135}},
};
inline constexpr double kKroneckerI = 2.5849817595792532171;
inline constexpr double kDetTorusI = 0.3483009824214192148;
inline constexpr double kDetTorus2I = 0.49257197312824402489;
inline constexpr double kNanYueWilliams = 0.00093634122488427305782;
inline constexpr double kHeatI2 = 1.0074837203450847062;  // K(2, i)
inline constexpr double kHeat_03_14_07 = 1.5495115104645789874;  // K(0.7, 0.3+1.4i)
inline constexpr double kU0Quadratic = 1.0336321653977326668;  // u_0(1) for V = x(1-x)
// zeta of -d^2/dx^2 + 4 on [0, 1]
inline const RealPoint kZetaConst4[] = {
    {-1.8999999999999999112, -8.5069031882224641516},
    {-1.0, -2.0},
    {-0.2999999999999999889, 0.37081536923464211085},
    {0.2999999999999999889, -1.0492609025339338229},
    {0.69999999999999995559, 0.57525384710593758895},
};

}  // namespace oracle
