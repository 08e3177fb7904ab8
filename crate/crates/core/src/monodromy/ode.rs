//! Dormand-Prince 8(5,3) for complex matrix-valued ODEs.

#![allow(clippy::excessive_precision)]

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

const C: [f64; 12] = [
    0.0,
    0.526001519587677318785587544488e-1,
    0.789002279381515978178381316732e-1,
    0.118350341907227396726757197510,
    0.281649658092772603273242802490,
    0.333333333333333333333333333333,
    0.25,
    0.307692307692307692307692307692,
    0.651282051282051282051282051282,
    0.6,
    0.857142857142857142857142857142,
    1.0,
];

const A2: [f64; 1] = [5.26001519587677318785587544488e-2];
const A3: [f64; 2] = [1.97250569845378994544595329183e-2, 5.91751709536136983633785987549e-2];
const A4: [f64; 3] = [2.95875854768068491816892993775e-2, 0.0, 8.87627564304205475450678981324e-2];
const A5: [f64; 4] = [
    2.41365134159266685502369798665e-1,
    0.0,
    -8.84549479328286085344864962717e-1,
    9.24834003261792003115737966543e-1,
];
const A6: [f64; 5] = [
    3.7037037037037037037037037037e-2,
    0.0,
    0.0,
    1.70828608729473871279604482173e-1,
    1.25467687566822425016691814123e-1,
];
const A7: [f64; 6] = [
    3.7109375e-2,
    0.0,
    0.0,
    1.70252211019544039314978060272e-1,
    6.02165389804559606850219397283e-2,
    -1.7578125e-2,
];
const A8: [f64; 7] = [
    3.70920001185047927108779319836e-2,
    0.0,
    0.0,
    1.70383925712239993810214054705e-1,
    1.07262030446373284651809199168e-1,
    -1.53194377486244017527936158236e-2,
    8.27378916381402288758473766002e-3,
];
const A9: [f64; 8] = [
    6.24110958716075717114429577812e-1,
    0.0,
    0.0,
    -3.36089262944694129406857109825,
    -8.68219346841726006818189891453e-1,
    2.75920996994467083049415600797e1,
    2.01540675504778934086186788979e1,
    -4.34898841810699588477366255144e1,
];
const A10: [f64; 9] = [
    4.77662536438264365890433908527e-1,
    0.0,
    0.0,
    -2.48811461997166764192642586468,
    -5.90290826836842996371446475743e-1,
    2.12300514481811942347288949897e1,
    1.52792336328824235832596922938e1,
    -3.32882109689848629194453265587e1,
    -2.03312017085086261358222928593e-2,
];
const A11: [f64; 10] = [
    -9.3714243008598732571704021658e-1,
    0.0,
    0.0,
    5.18637242884406370830023853209,
    1.09143734899672957818500254654,
    -8.14978701074692612513997267357,
    -1.85200656599969598641566180701e1,
    2.27394870993505042818970056734e1,
    2.49360555267965238987089396762,
    -3.0467644718982195003823669022,
];
const A12: [f64; 11] = [
    2.27331014751653820792359768449,
    0.0,
    0.0,
    -1.05344954667372501984066689879e1,
    -2.00087205822486249909675718444,
    -1.79589318631187989172765950534e1,
    2.79488845294199600508499808837e1,
    -2.85899827713502369474065508674,
    -8.87285693353062954433549289258,
    1.23605671757943030647266201528e1,
    6.43392746015763530355970484046e-1,
];

const B: [f64; 12] = [
    5.42937341165687622380535766363e-2,
    0.0,
    0.0,
    0.0,
    0.0,
    4.45031289275240888144113950566,
    1.89151789931450038304281599044,
    -5.8012039600105847814672114227,
    3.1116436695781989440891606237e-1,
    -1.52160949662516078556178806805e-1,
    2.01365400804030348374776537501e-1,
    4.47106157277725905176885569043e-2,
];

/// Weights of the order-3 estimate on stages 1, 9 and 12.
const BHH: [f64; 3] = [
    0.244094488188976377952755905512,
    0.733846688281611857341361741547,
    0.220588235294117647058823529412e-1,
];

/// Weights of the order-5 error estimate.
const ER: [f64; 12] = [
    0.1312004499419488073250102996e-1,
    0.0,
    0.0,
    0.0,
    0.0,
    -0.1225156446376204440720569753e1,
    -0.4957589496572501915214079952,
    0.1664377182454986536961530415e1,
    -0.3503288487499736816886487290,
    0.3341791187130174790297318841,
    0.8192320648511571246570742613e-1,
    -0.2235530786388629525884427845e-1,
];

fn a_row(i: usize) -> &'static [f64] {
    match i {
        1 => &A2,
        2 => &A3,
        3 => &A4,
        4 => &A5,
        5 => &A6,
        6 => &A7,
        7 => &A8,
        8 => &A9,
        9 => &A10,
        10 => &A11,
        11 => &A12,
        _ => &[],
    }
}

/// Tolerances and limits of one integration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OdeOptions {
    pub rtol: f64,
    pub atol: f64,
    pub max_steps: u64,
}

/// Counters of one or more integrations.
#[derive(Clone, Copy, Debug, Default, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct OdeStats {
    pub evaluations: u64,
    pub accepted: u64,
    pub rejected: u64,
}

impl OdeStats {
    pub fn merged(mut self, other: &Self) -> Self {
        self.evaluations += other.evaluations;
        self.accepted += other.accepted;
        self.rejected += other.rejected;
        self
    }
}

type State = DMatrix<Complex64>;

fn scaled_norm2(v: &State, y0: &State, y1: &State, o: &OdeOptions) -> f64 {
    v.iter()
        .zip(y0.iter().zip(y1.iter()))
        .map(|(e, (a, b))| {
            let sk = o.atol + o.rtol * a.norm().max(b.norm());
            (e.norm() / sk).powi(2)
        })
        .sum()
}

fn axpy_sum(y: &State, h: f64, coeffs: &[f64], k: &[State]) -> State {
    let mut out = y.clone();
    for (c, ki) in coeffs.iter().zip(k) {
        if *c != 0.0 {
            out += ki * Complex64::new(h * c, 0.0);
        }
    }
    out
}

/// Initial step guess in the manner of Hairer's HINIT for an order-8 method.
fn initial_step<F>(f: &F, x: f64, y: &State, f0: &State, span: f64, o: &OdeOptions) -> f64
where
    F: Fn(f64, &State) -> State,
{
    let n = y.len().max(1) as f64;
    let dnf = (scaled_norm2(f0, y, y, o) / n).sqrt();
    let dny = (scaled_norm2(y, y, y, o) / n).sqrt();
    let mut h = if dnf <= 1e-10 || dny <= 1e-10 { 1e-6 } else { 0.01 * dny / dnf };
    h = h.min(span);
    let y1 = y + f0 * Complex64::new(h, 0.0);
    let f1 = f(x + h, &y1);
    let der2 = (scaled_norm2(&(f1 - f0), y, y, o) / n).sqrt() / h;
    let der12 = der2.max(dnf);
    let h1 = if der12 <= 1e-15 {
        (h * 1e-3).max(1e-6)
    } else {
        (0.01 / der12).powf(1.0 / 8.0)
    };
    (100.0 * h).min(h1).min(span)
}

/// Integrates y' = f(x, y) from `x0` to `x1 > x0` and returns y(x1).
pub fn dop853<F>(f: F, x0: f64, x1: f64, y0: State, o: &OdeOptions) -> Result<(State, OdeStats)>
where
    F: Fn(f64, &State) -> State,
{
    const SAFE: f64 = 0.9;
    const FACC1: f64 = 3.0;
    const FACC2: f64 = 1.0 / 6.0;
    const EXPO: f64 = 1.0 / 8.0;
    let span = x1 - x0;
    if span <= 0.0 {
        return Ok((y0, OdeStats::default()));
    }
    let mut stats = OdeStats::default();
    let mut x = x0;
    let mut y = y0;
    let mut k1 = f(x, &y);
    let mut h = initial_step(&f, x, &y, &k1, span, o);
    stats.evaluations += 2;
    let mut rejected_last = false;
    let mut last = false;
    loop {
        if stats.accepted + stats.rejected >= o.max_steps {
            return Err(Error::Integration(format!("more than {} steps needed at x = {x}", o.max_steps)));
        }
        if 0.1 * h.abs() <= f64::EPSILON * x.abs().max(1.0) {
            return Err(Error::Integration(format!("step size underflow at x = {x}")));
        }
        if x + 1.01 * h >= x1 {
            h = x1 - x;
            last = true;
        }
        let mut k: Vec<State> = Vec::with_capacity(12);
        k.push(k1.clone());
        for i in 1..12 {
            let yi = axpy_sum(&y, h, a_row(i), &k);
            k.push(f(x + C[i] * h, &yi));
        }
        stats.evaluations += 11;
        let y_new = axpy_sum(&y, h, &B, &k);
        let mut e3 = -&k[0] * Complex64::new(BHH[0], 0.0) - &k[8] * Complex64::new(BHH[1], 0.0)
            - &k[11] * Complex64::new(BHH[2], 0.0);
        for (b, ki) in B.iter().zip(&k) {
            if *b != 0.0 {
                e3 += ki * Complex64::new(*b, 0.0);
            }
        }
        let e5 = axpy_sum(&State::zeros(y.nrows(), y.ncols()), 1.0, &ER, &k);
        let err2 = scaled_norm2(&e3, &y, &y_new, o);
        let err5 = scaled_norm2(&e5, &y, &y_new, o);
        let mut deno = err5 + 0.01 * err2;
        if deno <= 0.0 {
            deno = 1.0;
        }
        let err = h.abs() * err5 * (1.0 / (y.len() as f64 * deno)).sqrt();
        let fac11 = err.powf(EXPO);
        let fac = (fac11 / SAFE).clamp(FACC2, FACC1);
        let mut h_new = h / fac;
        if err <= 1.0 {
            stats.accepted += 1;
            k1 = f(x + h, &y_new);
            stats.evaluations += 1;
            x += h;
            y = y_new;
            if last {
                return Ok((y, stats));
            }
            if h_new.abs() > span {
                h_new = span;
            }
            if rejected_last {
                h_new = h_new.min(h);
            }
            rejected_last = false;
        } else {
            stats.rejected += 1;
            h_new = h / (fac11 / SAFE).min(FACC1);
            rejected_last = true;
            last = false;
        }
        h = h_new;
    }
}
