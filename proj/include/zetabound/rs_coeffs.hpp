#pragma once

// Chebyshev coefficient tables for the Riemann-Siegel remainder functions
// C_1(p)..C_8(p).  Variable is xi = 2p - 1 on [-1, 1] where p = frac(sqrt(t/2pi)).
// Produced by the calibration procedure in tools/rs_calibrate.cpp run at
// extended working precision; rs-calibrate reproduces them to within the
// double-precision noise floor of the Euler-Maclaurin reference.

namespace zetabound::detail {

inline constexpr int rs_coeff_orders = 8;
inline constexpr int rs_coeff_degree = 40;

inline constexpr double rs_coeff_table[8][40] = {
    {   // C_1, max |C_1| ~ 1.717e-02
        -1.21430643318376489e-18, +1.06979139210030012e-02, -8.67361737988403547e-19, +1.71706512433778824e-02,
        +6.93889390390722876e-19, +2.79321114978847143e-03, -5.20417042793042109e-19, -3.63756537192757093e-05,
        +8.67361737988403547e-19, -2.71089552311582299e-05, +4.51028103753969860e-18, -1.04837498668183113e-06,
        -4.16333634234433687e-18, +5.88646716665613967e-08, +8.67361737988403547e-19, +4.32296726124437020e-09,
        +1.50920942409982205e-17, -1.13695799303092919e-11, -1.89084858881471979e-17, -6.69984883544527660e-12,
        +4.68375338513737946e-18, -1.00795934099284781e-13, -7.63278329429795183e-18, +5.14657760852799160e-15,
        -2.18575157973077688e-17, +1.57859836313889446e-16, -5.89805981832114397e-18, +1.06685493772573642e-17,
        -1.97758476261356015e-17, +1.76941794549634311e-17, -2.25514051876984922e-17, +6.85215773010838833e-18,
        -3.90312782094781596e-18, +1.12757025938492465e-18, -1.60461921527854656e-17, +3.04877650902923835e-17,
        -1.56125112837912642e-18, -2.25514051876984930e-18, -1.16443313324943182e-17, -2.52185425320128325e-17
    },
    {   // C_2, max |C_2| ~ 3.146e-03
        +3.14611585398891311e-03, -4.44522890719056779e-19, -2.30878388453074988e-03, -2.16840434497100887e-19,
        +5.76982076668985382e-05, -8.78203759713258553e-19, +3.52388620236658936e-04, +5.52943107967607223e-19,
        +2.52466674586842717e-05, -4.33680868994201798e-20, -3.44282119719247978e-06, +3.79470760369926552e-19,
        -3.53507455660257656e-07, +8.13151629364128326e-19, +3.73083018424293073e-09, -2.75387351811318111e-18,
        +1.27769518535204166e-09, -9.97465998686664002e-19, +2.18746151183987776e-11, -3.11166023503339765e-18,
        -1.91413769600259925e-12, +2.02203705168546562e-18, -6.56283946458280340e-14, +2.64003229000220345e-18,
        +1.25751731076817467e-15, +2.43403387722995738e-18, +8.07730618501700803e-17, -3.08455518072126004e-18,
        +1.36609473733173555e-18, +4.55364912443911882e-19, -4.68104287970616509e-18, +2.17111485040222248e-18,
        +1.24141148749590250e-18, +2.82434665932473913e-18, +1.12485975395371085e-18, -2.73218947466347110e-18,
        +3.04118709382184001e-18, -4.47233396150270579e-19, -1.65137543396698386e-18, +1.12147162216469370e-19
    },
    {   // C_3, max |C_3| ~ 2.323e-04
        -8.13151629364128326e-18, +7.12325622120578178e-05, +5.79777111736623511e-18, +2.32343052981647208e-04,
        -5.63920654964023025e-18, -1.29299120454724953e-04, +1.94072188874905278e-18, +1.80744964136714438e-05,
        -4.35036121709808673e-19, +6.52618518722040139e-06, +1.28749007982653652e-19, -1.16963653785256716e-07,
        -5.55653613398820974e-20, -7.34947612651457083e-08, -4.33680868994201798e-20, -1.77509100781058369e-09,
        +6.36968776335233879e-20, +2.55555296377134821e-10, -8.53809210832334718e-20, +1.13766364980959909e-11,
        +9.48676900924816320e-21, -3.34986399242506033e-13, -1.32814766129474303e-19, -2.55373955489190945e-14,
        -1.30781887056063977e-19, +6.78134577571792851e-17, +6.84402621381474650e-20, +3.00615381112340220e-17,
        -1.72794721239877269e-19, +3.91668034810388458e-19, -6.70850094225405893e-20, -2.04643160056638957e-19,
        -4.40457132572236176e-20, +9.62229428080885137e-20, -1.98883336015309729e-19, +3.28648783534668532e-19,
        -4.23516473627150170e-20, -1.11977755627018495e-19, -1.37219337455196649e-20, -2.29461225411189943e-19
    },
    {   // C_4, max |C_4| ~ 2.273e-04
        +1.67657452467499812e-04, -1.27172832133743908e-15, -2.27287689434581318e-04, +6.36380935469839420e-17,
        +6.47738718848396604e-05, +1.83604979229210277e-17, -8.49220050025890186e-06, -2.76679077055880919e-18,
        -2.61614072449164265e-06, +8.62745408425867572e-19, +8.33676496866612570e-07, -2.23955511254036990e-19,
        +6.32470403772213817e-08, -2.86043026287777215e-19, -1.00599494030325905e-08, +1.00246349307546440e-19,
        -7.82267720516551137e-10, -2.57498015965307303e-19, +3.16765826321889894e-11, +2.81829037375187100e-19,
        +3.50069500814224145e-12, +2.45639554703747098e-19, -1.43144674699034716e-14, -8.05951849312466821e-20,
        -7.26957031491103488e-15, -9.48888659161630003e-20, -8.79233963535356634e-17, -4.03399441129860536e-19,
        +8.42884603395122372e-18, -1.80968589180881272e-19, +3.34027442749733358e-19, -1.87014286841908831e-19,
        +4.18804852858048124e-19, +2.61902587291029655e-19, +5.02798757490152701e-19, +5.07335677713883489e-19,
        +5.29125600282000384e-19, +1.61693295674925605e-19, +4.99484741084020201e-21, +9.73757017097424179e-20
    },
    {   // C_5, max |C_5| ~ 8.829e-05
        -2.24240453137493356e-14, +8.82884524030184953e-05, +1.91248743458636421e-14, -1.56286849720876765e-05,
        -1.69409320285082003e-14, -1.83424477914478500e-07, +5.87330883797601582e-15, +2.10972678767812460e-06,
        -1.33338164728241666e-15, -6.65701617461327893e-07, +2.97258420135781955e-16, +2.77147412185327307e-08,
        -7.13012006207935972e-17, +1.81112493862814173e-08, +3.85704922861718233e-18, -5.76589089062269026e-10,
        +3.91701916128278618e-18, -1.86750328154305564e-10, +9.65820847777243388e-18, -1.10531733166717959e-13,
        -1.24693414231200068e-17, +7.87057552242625662e-13, -1.11849006619035845e-17, +1.44653128993262042e-14,
        +4.72542740614229089e-18, -1.56728403584265033e-15, +3.61310373980794383e-18, -3.99891030662333249e-17,
        -4.52485000423247241e-18, +7.18351701907426970e-18, -9.20741754324369616e-18, +1.00883318083881685e-17,
        -1.09756835239317723e-17, -2.30494605606840193e-18, -1.35879331332640346e-17, -2.55622685020086270e-17,
        -1.31753433846564661e-17, -5.47047758654717300e-18, -1.59115139141720319e-18, -1.68875076276457987e-18
    },
    {   // C_6, max |C_6| ~ 1.383e-05
        +1.21897427751588621e-05, -1.59089278042112109e-12, -1.38297607359345083e-05, +7.98306763605763832e-14,
        +5.11096781040717104e-06, +3.19563511107034234e-14, -2.04581381909315945e-06, -7.28874283155675277e-15,
        +4.93813704044875795e-07, +1.95366864970498091e-15, -3.61875371711688754e-08, -4.52125509052520695e-16,
        -1.28769030440802023e-08, -2.25413445538674773e-16, +2.57441195453524002e-09, +1.86789346654853616e-16,
        +1.36414485449398847e-10, -1.49405843989316614e-16, -3.03246205332583798e-11, +3.65878888533457774e-16,
        -1.32136370184004757e-12, +1.71188143260908202e-16, +1.30579171139484304e-13, -1.59418662810457052e-16,
        +6.51561579593934709e-15, -3.37235940026461574e-16, -3.42296379551154782e-16, -2.14395182727275730e-16,
        +8.33673437731087157e-17, -1.23810599435880192e-16, +2.04846887362321372e-16, -2.24389943864771909e-16,
        +2.55631356519883788e-16, +6.56663933485231692e-17, +3.29629666216434713e-16, +6.10497114732207249e-16,
        +3.22731207547847076e-16, +1.36710962838633415e-16, +4.22038321724852598e-17, +3.81001322435835483e-17
    },
    {   // C_7, max |C_7| ~ 1.277e-05
        -1.21915573051023677e-11, +1.27686891032893746e-05, +1.26806628461438244e-11, -3.86293539529466970e-06,
        -1.03220225836389256e-11, +1.36938236615097447e-06, +3.52864276765619579e-12, -2.76470232558784811e-07,
        -8.02743435553187146e-13, +1.02833888346725526e-08, +1.78998142195507640e-13, +1.17550769112223376e-08,
        -4.06297402575598187e-14, -3.05504589908911579e-09, +3.92102672826613060e-15, +1.14301462372906591e-10,
        +1.16441805606297060e-15, +5.13106206858296866e-11, +3.44458738198464773e-15, -2.84122729264474317e-12,
        -4.90190456076870887e-15, -4.29508557490748330e-13, -4.10599538818877310e-15, +1.52051705560061811e-14,
        +2.02744857577888389e-15, +7.18230991242113853e-15, +1.67899603488246780e-15, +3.33235555882510014e-15,
        -1.48695596275132038e-15, +1.82532195060853745e-15, -3.09250771895314672e-15, +3.36565585446510330e-15,
        -3.96130826945740331e-15, -1.21654719531825521e-15, -5.34729955661025840e-15, -9.72643668521223686e-15,
        -5.26136215605650284e-15, -2.25723509360555510e-15, -7.38812693308772915e-16, -6.08300422133775927e-16
    },
    {   // C_8, max |C_8| ~ 1.229e-06
        +1.22871761833500698e-06, -4.16346783992814405e-10, -1.19428314255422402e-06, +2.04858003548394969e-11,
        -6.08557606926530155e-08, +1.10754361632455245e-11, -8.89297878993007741e-09, -3.02332852856737125e-12,
        +3.17092975278751563e-08, +7.71695313534364672e-13, -1.42029543978604843e-08, -1.59595066490434687e-13,
        +3.16196208472229664e-09, -2.28865305416504397e-14, -2.44426481692401077e-10, +3.04968961102614361e-14,
        -4.32356987986848306e-11, -2.60988572898192684e-14, +8.98302478831877084e-12, +5.88212756297718941e-14,
        +1.99049905474852063e-13, +3.10349808274092253e-14, -4.47937769891143625e-14, -2.45707249495414384e-14,
        -2.32368525694610479e-14, -5.53516795191212968e-14, -1.86972928174413486e-14, -3.43986676253272855e-14,
        +1.43974022697673361e-14, -1.77275023336681344e-14, +3.06766950056719827e-14, -3.30638565829802879e-14,
        +4.03503773925929192e-14, +1.45332993087207862e-14, +5.71124647291299293e-14, +1.01969292744980821e-13,
        +5.64463931157726407e-14, +2.45207386590928940e-14, +8.40579894129844102e-15, +6.40812090989493272e-15
    },
};

} // namespace zetabound::detail
