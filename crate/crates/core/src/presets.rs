//! Built-in benchmark configurations and their published reference data:
//! complete spectra with per-level Bethe-root seeds for two chains that have
//! been solved end to end (an N=4 spin-1/2 chain and an N=2 spin-1 chain).

use crate::params::{ModelParams, Side};
use num_complex::Complex64 as C64;
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// N=4, s=1/2, eta = 7i*pi/5, alpha_- = 0.45i, alpha_+ = 0.87i,
/// beta_+- = eta, theta = 0.54 (both-alphas-arbitrary case).
pub fn table1_params() -> ModelParams {
    ModelParams::case2(4, 1, 7, 5, c(0.0, 0.45), c(0.0, 0.87), c(0.54, 0.0))
        .expect("benchmark parameters are valid")
}

/// N=2, s=1, eta = 4i*pi/7, free alpha_+ = 0.734i, free beta_- = 0.651,
/// theta = 0.386 (one-alpha-one-beta case; alpha_- = i*pi/2, beta_+ = eta).
pub fn table2_params() -> ModelParams {
    ModelParams::case1(
        2,
        2,
        4,
        7,
        Side::Plus,
        c(0.0, 0.734),
        Side::Minus,
        c(0.651, 0.0),
        c(0.386, 0.0),
    )
    .expect("benchmark parameters are valid")
}

/// Published complete spectrum for the spin-1/2 benchmark (16 levels,
/// 6 printed digits).
pub fn table1_energies() -> Vec<C64> {
    vec![
        c(-4.56711, 0.0),
        c(-4.34568, 0.0),
        c(-3.05199, 0.0),
        c(-2.38474, 0.0),
        c(-2.17816, 0.0),
        c(-0.994085, 0.0),
        c(-0.603975, 0.0),
        c(-0.243163, 0.0),
        c(1.14152, -0.195122),
        c(1.14152, 0.195122),
        c(1.6454, -0.036207),
        c(1.6454, 0.036207),
        c(1.87399, -0.362703),
        c(1.87399, 0.362703),
        c(3.41127, 0.0),
        c(5.63582, 0.0),
    ]
}

/// Published Bethe-root seeds for each spin-1/2 benchmark level
/// (10 roots per level, same order as `table1_energies`).
pub fn table1_roots() -> Vec<Vec<C64>> {
    vec![
        vec![
            c(0.475167, 0.000593),
            c(0.475167, -1.25723),
            c(0.057772, 1.88496),
            c(0.057772, PI),
            c(0.0, -2.19745),
            c(0.0, -1.70664),
            c(0.0, -2.68126),
            c(0.0, 0.314088),
            c(0.0, -0.87),
            c(0.0, 1.57187),
        ],
        vec![
            c(0.405517, 0.666815),
            c(0.405517, -1.92345),
            c(0.403252, -0.628319),
            c(0.0569468, -2.70038),
            c(0.0569468, 1.44374),
            c(0.0, 2.36338),
            c(0.0, -PI / 2.0),
            c(0.0, -1.70664),
            c(0.0, -2.82866),
            c(0.0, -0.386637),
        ],
        vec![
            c(0.693961, -2.18827),
            c(0.693961, 0.931636),
            c(0.0, -0.824282),
            c(0.0, 0.45),
            c(0.0, -0.386637),
            c(0.0, -1.96144),
            c(0.0, -1.57051),
            c(0.0, 1.54118),
            c(0.0, -2.8309),
            c(0.0, 2.80606),
        ],
        vec![
            c(0.717734, 0.933002),
            c(0.717734, -2.18964),
            c(0.0, -0.323985),
            c(0.0, -2.01785),
            c(0.0, -1.56819),
            c(0.0, -0.87),
            c(0.0, -1.70664),
            c(0.0, 1.57883),
            c(0.0, 2.82555),
            c(0.0, -2.70265),
        ],
        vec![
            c(0.722701, -2.18991),
            c(0.722701, 0.933271),
            c(0.0, 0.317914),
            c(0.0, -0.949003),
            c(0.0, -1.70664),
            c(0.0, -2.81586),
            c(0.0, 2.19787),
            c(0.0, 0.767594),
            c(0.0, 1.44577),
            c(0.0, -0.386637),
        ],
        vec![
            c(0.590036, 2.51327),
            c(0.572252, -0.628319),
            c(0.0, -0.386637),
            c(0.0, -0.852939),
            c(0.0, 0.666397),
            c(0.0, -1.70664),
            c(0.0, 0.312972),
            c(0.0, 1.57986),
            c(0.0, 2.81222),
            c(0.0, 1.5305),
        ],
        vec![
            c(0.602144, 2.51327),
            c(0.585957, -0.628319),
            c(0.0, -1.96477),
            c(0.0, -0.87),
            c(0.0, 0.45),
            c(0.0, -0.335719),
            c(0.0, -1.56682),
            c(0.0, 2.82363),
            c(0.0, 1.58342),
            c(0.0, 1.46666),
        ],
        vec![
            c(0.609459, 2.51327),
            c(0.594107, -0.628319),
            c(0.0, 0.322076),
            c(0.0, -1.70664),
            c(0.0, -0.952266),
            c(0.0, -0.386637),
            c(0.0, 0.723371),
            c(0.0, -2.80224),
            c(0.0, 2.19738),
            c(0.0, 1.46531),
        ],
        vec![
            c(0.35837, -2.71807),
            c(0.330039, 2.30814),
            c(0.276567, 0.656084),
            c(0.087861, -0.795393),
            c(0.027171, -0.308006),
            c(0.015303, -1.55285),
            c(0.001193, 2.82864),
            c(0.000753, -2.847),
            c(0.0, -0.386637),
            c(0.0, 0.45),
        ],
        vec![
            c(0.35837, 1.46144),
            c(0.330039, 2.71841),
            c(0.276567, -1.91272),
            c(0.087861, -0.461244),
            c(0.027171, -0.948631),
            c(0.015303, 0.296211),
            c(0.001193, 2.19791),
            c(0.000753, 1.59036),
            c(0.0, 0.45),
            c(0.0, -0.386637),
        ],
        vec![
            c(0.37612, -2.71959),
            c(0.347861, 2.30928),
            c(0.266598, 0.632143),
            c(0.126391, -0.803703),
            c(0.021899, 1.52824),
            c(0.013806, 0.376725),
            c(0.008631, -0.942847),
            c(0.000513, 2.19931),
            c(0.0, 0.45),
            c(0.0, -0.386637),
        ],
        vec![
            c(0.37612, 1.46295),
            c(0.347861, 2.71727),
            c(0.266598, -1.88878),
            c(0.126391, -0.452934),
            c(0.021899, -2.78488),
            c(0.013806, -1.63336),
            c(0.008631, -0.31379),
            c(0.000513, 2.82724),
            c(0.0, -1.70664),
            c(0.0, -0.87),
        ],
        vec![
            c(0.382144, -2.74196),
            c(0.357472, 2.28825),
            c(0.228038, 0.649592),
            c(0.144987, -0.887371),
            c(0.120703, 0.3564),
            c(0.035021, -2.7448),
            c(0.000215, -0.93752),
            c(0.000022, 2.19938),
            c(0.0, 0.45),
            c(0.0, -0.386637),
        ],
        vec![
            c(0.382144, 1.48532),
            c(0.357472, 2.7383),
            c(0.228038, -1.90623),
            c(0.144987, -0.369266),
            c(0.120703, -1.61304),
            c(0.035021, 1.48816),
            c(0.000215, -0.319117),
            c(0.000022, 2.82716),
            c(0.0, -1.70664),
            c(0.0, -0.386637),
        ],
        vec![
            c(0.426274, 0.768867),
            c(0.426274, -2.0255),
            c(0.380283, -2.48686),
            c(0.380283, 1.23022),
            c(0.264586, 2.51327),
            c(0.0, -0.46653),
            c(0.0, -0.87),
            c(0.0, -1.70664),
            c(0.0, 2.19908),
            c(0.0, -0.942942),
        ],
        vec![
            c(0.610828, 2.51327),
            c(0.585745, -0.628319),
            c(0.264927, -2.30695),
            c(0.264927, 1.05031),
            c(0.239528, 2.51327),
            c(0.0, -0.386637),
            c(0.0, -0.786041),
            c(0.0, 0.45),
            c(0.0, -0.313583),
            c(0.0, 2.19908),
        ],
    ]
}

/// Published complete spectrum for the spin-1 benchmark (9 levels).
pub fn table2_energies() -> Vec<C64> {
    vec![
        c(-5.983890, 0.0),
        c(-4.833822, -0.089904),
        c(-4.833822, 0.089904),
        c(-2.835193, -0.109209),
        c(-2.835193, 0.109209),
        c(-1.859189, -0.040090),
        c(-1.859189, 0.040090),
        c(-0.818531, -0.180442),
        c(-0.818531, 0.180442),
    ]
}

/// Published Bethe-root seeds for each spin-1 benchmark level
/// (10 roots per level, same order as `table2_energies`).
pub fn table2_roots() -> Vec<Vec<C64>> {
    vec![
        vec![
            c(0.705185, 1.409455),
            c(0.705185, 3.078533),
            c(0.548923, -1.646975),
            c(0.548923, -0.148219),
            c(0.210780, 3.018164),
            c(0.210780, 1.469825),
            c(0.0, -0.367144),
            c(0.0, 2.080271),
            c(0.0, -2.080446),
            c(0.0, -2.407592),
        ],
        vec![
            c(0.565328, 1.464054),
            c(0.560227, 3.079482),
            c(0.383486, -1.400808),
            c(0.370909, 0.713516),
            c(0.359969, -2.475472),
            c(0.253186, -0.363528),
            c(0.103171, 1.549115),
            c(0.000260, 2.081055),
            c(0.000123, 0.285436),
            c(0.0, -2.407592),
        ],
        vec![
            c(0.565328, 3.023935),
            c(0.560227, 1.408507),
            c(0.383486, -0.394387),
            c(0.370909, -2.508711),
            c(0.359969, 0.680276),
            c(0.253186, -1.431667),
            c(0.103171, 2.938874),
            c(0.000260, 2.406933),
            c(0.000123, -2.080631),
            c(0.0, 0.612397),
        ],
        vec![
            c(0.577091, 1.584580),
            c(0.454273, -2.807273),
            c(0.444406, 0.861744),
            c(0.443204, -0.977039),
            c(0.343279, 2.736768),
            c(0.251255, -1.788773),
            c(0.016001, 0.153832),
            c(0.011279, 1.949951),
            c(0.001045, 0.732900),
            c(0.0, -2.407592),
        ],
        vec![
            c(0.577091, 2.903409),
            c(0.454273, 1.012077),
            c(0.444406, -2.656940),
            c(0.443204, -0.818156),
            c(0.343279, 1.751220),
            c(0.251255, -0.006423),
            c(0.016001, -1.949027),
            c(0.011279, 2.538038),
            c(0.001045, -2.528096),
            c(0.0, 0.612397),
        ],
        vec![
            c(0.624365, 3.096684),
            c(0.613412, 1.442585),
            c(0.469863, -1.439936),
            c(0.313319, -0.296575),
            c(0.171303, 1.588756),
            c(0.025225, -2.380049),
            c(0.019867, 2.114178),
            c(0.019825, 0.318497),
            c(0.003054, 0.717989),
            c(0.0, -2.407592),
        ],
        vec![
            c(0.624365, 1.391305),
            c(0.613412, 3.045404),
            c(0.469863, -0.355259),
            c(0.313319, -1.498621),
            c(0.171303, 2.899233),
            c(0.025225, 0.584854),
            c(0.019867, 2.373811),
            c(0.019825, -2.113692),
            c(0.003054, -2.513185),
            c(0.0, -2.407592),
        ],
        vec![
            c(0.607702, 1.556139),
            c(0.466814, -3.064030),
            c(0.444104, 0.768879),
            c(0.415149, -1.265817),
            c(0.343162, -2.450324),
            c(0.109869, 0.650801),
            c(0.056399, 2.447113),
            c(0.055560, -2.041603),
            c(0.010588, -2.518368),
            c(0.0, -2.407592),
        ],
        vec![
            c(0.607702, 2.931849),
            c(0.466814, 1.268834),
            c(0.444104, -2.564075),
            c(0.415149, -0.529378),
            c(0.343162, 0.655129),
            c(0.109869, -2.445997),
            c(0.056399, 2.040875),
            c(0.055561, 0.246407),
            c(0.010588, 0.723172),
            c(0.0, 0.612397),
        ],
    ]
}
