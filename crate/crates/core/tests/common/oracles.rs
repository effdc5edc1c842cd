//! Reference values from a 40-digit independent evaluation; regenerate, never edit.
#![allow(dead_code, clippy::excessive_precision)]

/// `(a, S)` at `ν = 1, p = 3/2, x = 1/2`.
pub const S_P3_2: &[(f64, f64)] = &[
    (1.000000000000000055511151e-1, 3.560323951967832189429308),
    (5.000000000000000277555756e-2, 5.9425383948468188185769),
    (2.999999999999999888977698e-2, 8.555375243490807546173568),
    (2.000000000000000041633363e-2, 1.13654031668055533559719e+1),
    (1.000000000000000020816682e-2, 1.833459712171992889850037e+1),
];

/// `(ν, a, x, S)` at `p = 2`.
pub const S_P2: &[(f64, f64, f64, f64)] = &[
    (0.0, 8.00000000000000044408921e-1, 2.999999999999999888977698e-1, 4.748777494299017178774187e-1),
    (0.0, 8.00000000000000044408921e-1, 6.99999999999999955591079e-1, 4.182600018906659084777681e-1),
    (0.0, 1.5, 2.999999999999999888977698e-1, 2.128185614697961287669993e-1),
    (0.0, 1.5, 6.99999999999999955591079e-1, 1.648064453828506426109223e-1),
    (5.0e-1, 8.00000000000000044408921e-1, 2.999999999999999888977698e-1, 5.417326939487265643982769e-1),
    (5.0e-1, 8.00000000000000044408921e-1, 6.99999999999999955591079e-1, 4.968726806581443488692062e-1),
    (5.0e-1, 1.5, 2.999999999999999888977698e-1, 2.448765612734299819666604e-1),
    (5.0e-1, 1.5, 6.99999999999999955591079e-1, 2.074156218807712831229465e-1),
];

/// `(ν, a, x, T)` at `p = 1`.
pub const T_P1: &[(f64, f64, f64, f64)] = &[
    (-5.0e-1, 1.000000000000000055511151e-1, 2.999999999999999888977698e-1, 5.922491326775001229339447),
    (-5.0e-1, 1.000000000000000055511151e-1, 5.999999999999999777955395e-1, 8.53806740212018881766765),
    (-5.0e-1, 1.000000000000000055511151e-1, 9.000000000000000222044605e-1, 2.941679271043693776462788e+1),
    (-5.0e-1, 5.0e-1, 2.999999999999999888977698e-1, 9.812669381861837781716302e-1),
    (-5.0e-1, 5.0e-1, 5.999999999999999777955395e-1, 1.504304832624766069851691),
    (-5.0e-1, 5.0e-1, 9.000000000000000222044605e-1, 5.67992192104490140284926),
    (0.0, 1.000000000000000055511151e-1, 2.999999999999999888977698e-1, 9.991180124647976803480532),
    (0.0, 1.000000000000000055511151e-1, 5.999999999999999777955395e-1, 1.200833119545018263538246e+1),
    (0.0, 1.000000000000000055511151e-1, 9.000000000000000222044605e-1, 2.244990364607581122109947e+1),
    (0.0, 5.0e-1, 2.999999999999999888977698e-1, 1.63804079248622293677638),
    (0.0, 5.0e-1, 5.999999999999999777955395e-1, 2.041402408269379742961141),
    (0.0, 5.0e-1, 9.000000000000000222044605e-1, 4.129603163352498927739111),
    (1.0, 1.000000000000000055511151e-1, 2.999999999999999888977698e-1, 9.7440648695576083121162),
    (1.0, 1.000000000000000055511151e-1, 5.999999999999999777955395e-1, 1.061944268121035966031515e+1),
    (1.0, 1.000000000000000055511151e-1, 9.000000000000000222044605e-1, 1.34369756856798711422075e+1),
    (1.0, 5.0e-1, 2.999999999999999888977698e-1, 1.588629201979371622437627),
    (1.0, 5.0e-1, 5.999999999999999777955395e-1, 1.76367042771503915109941),
    (1.0, 5.0e-1, 9.000000000000000222044605e-1, 2.327119999920653886981269),
];

/// `(ν, a, x, μ, Smu)` at `p = 2`.
pub const SMU_P2: &[(f64, f64, f64, f64, f64)] = &[
    (0.0, 2.999999999999999888977698e-1, 5.0e-1, 2.999999999999999888977698e-1, 5.653081805046500453394318e-1),
    (5.0e-1, 2.999999999999999888977698e-1, 5.0e-1, -6.99999999999999955591079e-1, 5.922299245001009803721806),
    (0.0, 2.999999999999999888977698e-1, 5.0e-1, 2.0, 4.629048874826609408003428e-2),
    (1.0, 5.0e-1, 1.5, -1.0, 1.526638632398353356742262),
];

/// `(ν, x, χ, P_ν)` from the `k`-sum route, rescaled by `e^χ`.
pub const P_NU: &[(f64, f64, f64, f64)] = &[
    (0.0, 1.000000000000000055511151e-1, 1.0, 1.003114912400718176148377),
    (0.0, 1.000000000000000055511151e-1, 4.0, 9.881201485161450226508838e-1),
    (0.0, 1.000000000000000055511151e-1, 9.0, 8.63345566774277004120838e-1),
    (0.0, 5.0e-1, 1.0, 1.071607899611083170823728),
    (0.0, 5.0e-1, 4.0, 7.079909203461611188306933e-1),
    (0.0, 5.0e-1, 9.0, -2.311778651353149395769331),
    (0.0, 9.000000000000000222044605e-1, 1.0, 1.188131929886114138780567),
    (0.0, 9.000000000000000222044605e-1, 4.0, 2.473314020551573560368185e-1),
    (0.0, 9.000000000000000222044605e-1, 9.0, -1.14436242333869734411289e+1),
    (5.0e-1, 1.000000000000000055511151e-1, 1.0, 1.00207795545271218812927),
    (5.0e-1, 1.000000000000000055511151e-1, 4.0, 9.920807062352842893534509e-1),
    (5.0e-1, 1.000000000000000055511151e-1, 9.0, 9.088676852488051005642692e-1),
    (5.0e-1, 5.0e-1, 1.0, 1.048615140194900280844329),
    (5.0e-1, 5.0e-1, 4.0, 8.040557313019300255401462e-1),
    (5.0e-1, 5.0e-1, 9.0, -1.219301031102523829904283),
    (5.0e-1, 9.000000000000000222044605e-1, 1.0, 1.133538618616452310897482),
    (5.0e-1, 9.000000000000000222044605e-1, 4.0, 4.550308277498815958674069e-1),
    (5.0e-1, 9.000000000000000222044605e-1, 9.0, -6.766523166856232826835195),
    (1.0, 1.000000000000000055511151e-1, 1.0, 1.001559139846983973153183),
    (1.0, 1.000000000000000055511151e-1, 4.0, 9.940608394879154773907089e-1),
    (1.0, 1.000000000000000055511151e-1, 9.0, 9.316360763224824544494002e-1),
    (1.0, 5.0e-1, 1.0, 1.036899385815426364506177),
    (1.0, 5.0e-1, 4.0, 8.525021795914498177772784e-1),
    (1.0, 5.0e-1, 9.0, -6.708327414802987187469075e-1),
    (1.0, 9.000000000000000222044605e-1, 1.0, 1.104328030841581056842221),
    (1.0, 9.000000000000000222044605e-1, 4.0, 5.716227550338393850005169e-1),
    (1.0, 9.000000000000000222044605e-1, 9.0, -4.628543338113923662842081),
];

/// `(ν, x, ₂F₁(-100, -100.5; 1+ν; -x²))`.
pub const HYP_NEG_K100: &[(f64, f64, f64)] = &[
    (0.0, 5.0e-1, -1.781565145625514560374047e+7),
    (0.0, 1.0, 1.107388737275023381960558e+29),
    (0.0, 2.0, -7.682801455082335071302958e+68),
    (1.0, 5.0e-1, -9.238096342866072904802522e+6),
    (1.0, 1.0, 1.543734005279207503496584e+27),
    (1.0, 2.0, -4.068738619020117402375252e+66),
];

/// `(ν, x, ₂F₁(-100, -100.5; 1+ν; x²))`.
pub const HYP_POS_K100: &[(f64, f64, f64)] = &[
    (0.0, 2.999999999999999888977698e-1, 4.684921582241416090699571e+21),
    (0.0, 5.0e-1, 1.208417736738264484994876e+34),
    (0.0, 8.00000000000000044408921e-1, 8.609431408705646490078592e+49),
    (1.0, 2.999999999999999888977698e-1, 1.983579410594603077039272e+20),
    (1.0, 5.0e-1, 3.553974306856324300453709e+32),
    (1.0, 8.00000000000000044408921e-1, 1.902587808413442224307746e+48),
];

/// `(s, ζ(s))`.
pub const ZETA: &[(f64, f64)] = &[
    (5.0e-1, -1.460354508809586812889499),
    (1.5, 2.612375348685488343348568),
    (2.0, 1.644934066848226436472415),
    (3.700000000000000177635684, 1.106288241464679244289944),
    (1.0e+1, 1.000994575127818085337146),
    (-5.0e-1, -2.078862249773545660173067e-1),
    (-2.5, 8.516928777850330542358567e-3),
    (-7.299999999999999822364316, 3.936040865716960992932753e-3),
];

/// `(s, Γ(s))`.
pub const GAMMA: &[(f64, f64)] = &[
    (1.000000000000000055511151e-1, 9.51350769866873128580798),
    (5.0e-1, 1.772453850905516027298167),
    (1.5, 8.862269254527580136490837e-1),
    (7.25, 1.155381013919989687202704e+3),
    (3.329999999999999715782906e+1, 7.487577596522632327444354e+35),
    (1.705e+2, 5.56209241455999961070581e+305),
    (-5.0e-1, -3.544907701811032054596335),
    (-3.700000000000000177635684, 2.516439959024226812858494e-1),
];

/// `(a, b, c, z, ₂F₁(a, b; c; z))`.
pub const HYP2F1: &[(f64, f64, f64, f64, f64)] = &[
    (2.5e-1, 7.5e-1, 1.0, -4.899999999999999911182158e-1, 9.266762236760945116400634e-1),
    (5.0e-1, 1.0, 1.5, -4.0, 5.535743588970452515085327e-1),
    (-3.5, -3.0, 2.0, -9.0, -9.0546875e+1),
    (1.300000000000000044408921, 2.000000000000000111022302e-1, 2.700000000000000177635684, 9.000000000000000222044605e-1, 1.150784132265181148053954),
    (2.5e-1, 7.5e-1, 5.0e-1, -1.0e+2, 2.338853449021644179303782e-1),
];

/// `(ν, z, J_ν(z)/(z/2)^ν)`.
pub const BESSEL_J_NORM: &[(f64, f64, f64)] = &[
    (0.0, 5.0e-1, 9.384698072408129042284047e-1),
    (0.0, 2.489999999999999857891453e+1, 8.324596835301549005270425e-2),
    (0.0, 2.510000000000000142108547e+1, 1.082756714999494519768852e-1),
    (1.5, 3.0e+1, -4.693702205541295255327433e-4),
    (-2.999999999999999888977698e-1, 1.2e+1, 2.489555175754983218693421e-1),
    (2.0, 6.0e+1, 1.033612039418526816227124e-4),
];

