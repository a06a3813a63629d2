#pragma once
// Generated by tests/oracle/gen_fixtures.py; do not edit.
#include <complex>
#include <vector>

namespace oracle {

inline constexpr int kDim = 4;
inline const std::vector<std::complex<double>> kP1{
    {0.0, 1.0}, {-0.38408870938290723665, -0.70306966657379392213}, {-0.5500221413615028455, 0.15326333289337705295}, {0.70689454701335867088, 0.024520012382844516089},
    {0.38408870938290723665, -0.70306966657379392213}, {0.0, 0.5403023058681397174}, {0.33975438823210629804, -0.056670657497736098619}, {0.63438687241115382531, -0.11804512112857040957},
    {0.5500221413615028455, 0.15326333289337705295}, {-0.33975438823210629804, -0.056670657497736098619}, {0.0, -0.416146836547142387}, {-0.28861988069081260403, 0.64183109273161313223},
    {-0.70689454701335867088, 0.024520012382844516089}, {-0.63438687241115382531, -0.11804512112857040957}, {0.28861988069081260403, 0.64183109273161313223}, {0.0, -0.98999249660044545727}};
inline const std::vector<std::complex<double>> kP2{
    {0.0, 1.0}, {0.0, -0.22484509536615286994}, {0.0, 0.27201172505161181677}, {0.0, -0.95056137924256122282},
    {0.0, -0.22484509536615286994}, {0.0, -0.416146836547142387}, {0.0, 0.41198224566568299093}, {0.0, 0.42724998309569323707},
    {0.0, 0.27201172505161181677}, {0.0, 0.41198224566568299093}, {0.0, -0.65364362086361191464}, {0.0, -0.11804512112857040957},
    {0.0, -0.95056137924256122282}, {0.0, 0.42724998309569323707}, {0.0, -0.11804512112857040957}, {0.0, 0.96017028665036602055}};
inline const std::vector<std::complex<double>> kExpP1At07{
    {0.47107112067373517943, 0.55049611832332751559}, {-0.017907605881435947216, -0.49768751948580222293}, {-0.29473370417802289887, 0.03578500464457755286}, {0.33352068995830419718, -0.16627657685804873859},
    {0.36955390480118215502, -0.19771952735576463413}, {0.68226520038563051982, 0.29184867957037032419}, {0.25573963560094998574, 0.12771288676954470885}, {0.402330958048247743, -0.17347017627206256625},
    {0.26540447653335460893, 0.070226058177500806749}, {-0.18607917404931064407, -0.23726064284900770275}, {0.75976198330353288588, -0.24190465435375709666}, {0.062185992371979842134, 0.44055358608266015333},
    {-0.44477204587585427273, 0.16183174819195810207}, {-0.32875258921156249767, 0.048256176828948442353}, {0.38268100958769002498, 0.21894576093039535283}, {0.4909524586985139824, -0.47975521981373889984}};
inline const std::vector<std::complex<double>> kP3{
    {4.2308572772096210212e-17, 0.11086834897754205276}, {-0.13952175992931811765, -0.24771139647930850991}, {-0.25405386977705790574, -0.1920916614475898232}, {0.22927761106371355448, 0.48593078361837160895},
    {0.13952175992931811765, -0.24771139647930801031}, {-9.7144514654701197287e-17, 0.44356427848022045302}, {0.1546936537997440908, -0.35952380027536012808}, {0.070105081180761613657, -0.2525023488462291299},
    {0.2540538697770576837, -0.19209166144758965666}, {-0.15469365379974411856, -0.35952380027536040563}, {-4.6837533851373791549e-17, 0.38727753209669274481}, {-0.078269010480372963601, 0.16673442412382383226},
    {-0.22927761106371349897, 0.48593078361837177548}, {-0.070105081180761044668, -0.25250234884622918541}, {0.078269010480373074623, 0.16673442412382372124}, {-1.3877787807814456755e-17, -0.94171015955445513956}};
inline constexpr double kTripleErrorNormAt025 = 0.016851029513430009469;
inline constexpr double kTripleErrorNormAt05 = 0.12353810527838395415;
inline constexpr double kBoundCoefficient = 1.5486743251012489215;
inline constexpr double kE3Norm = 1.1046192455686193853;
inline constexpr double kStrangGlobalError = 0.0071759878782523474449;
inline constexpr double kLieTrotterGlobalError = 0.12769922253387743125;
struct GaussianSample { double x, t; std::complex<double> u; };
inline const std::vector<GaussianSample> kFreeGaussian{{0.0, 0.5, {0.92044206525992603577, 0.21728689675164017879}}, {1.3, 0.5, {0.47834014325485858616, -0.050980053279039234367}}, {-2.0, 1.0, {0.25403428303797437584, -0.17653067595121604892}}};

}  // namespace oracle
