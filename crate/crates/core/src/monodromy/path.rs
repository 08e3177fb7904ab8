use num_complex::Complex64;

use crate::error::{Error, Result};

/// One smooth piece of a path, given in the coordinate z = α_j(point) along
/// the complex line t + ℂ·α_j∨, with parameter s ∈ [0, 1].
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PathPiece {
    Segment { from: f64, to: f64 },
    /// z = radius · e^{iθ}, θ from `from_angle` to `to_angle`.
    Arc { radius: f64, from_angle: f64, to_angle: f64 },
}

impl PathPiece {
    /// (z(s), dz/ds).
    pub fn eval(&self, s: f64) -> (Complex64, Complex64) {
        match *self {
            PathPiece::Segment { from, to } => (
                Complex64::new(from + (to - from) * s, 0.0),
                Complex64::new(to - from, 0.0),
            ),
            PathPiece::Arc {
                radius,
                from_angle,
                to_angle,
            } => {
                let dtheta = to_angle - from_angle;
                let z = Complex64::from_polar(radius, from_angle + dtheta * s);
                (z, z * Complex64::new(0.0, dtheta))
            }
        }
    }

    pub fn reversed(&self) -> Self {
        match *self {
            PathPiece::Segment { from, to } => PathPiece::Segment { from: to, to: from },
            PathPiece::Arc {
                radius,
                from_angle,
                to_angle,
            } => PathPiece::Arc {
                radius,
                from_angle: to_angle,
                to_angle: from_angle,
            },
        }
    }
}

/// How the arc radius is chosen.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RadiusPolicy {
    /// Half the distance from t_{α_j} to the nearest other hyperplane on the
    /// line, capped at α_j(t)/2.
    Default,
    /// Default radius times a factor.
    Scaled(f64),
    Fixed(f64),
}

/// Path from t to s_j t: a segment, the positively oriented half circle around
/// the hyperplane α_j = 0, and a second segment.
#[derive(Clone, Debug, PartialEq)]
pub struct BraidPath {
    pub n: usize,
    pub j: usize,
    pub basepoint: Vec<f64>,
    /// α_j(t).
    pub a: f64,
    pub radius: f64,
    pub pieces: Vec<PathPiece>,
}

/// t = (n-1, n-2, …, 0) shifted to trace zero.
pub fn default_basepoint(n: usize) -> Vec<f64> {
    let mean = (n as f64 - 1.0) / 2.0;
    (0..n).map(|i| (n - 1 - i) as f64 - mean).collect()
}

/// Values z of the α_j-coordinate where the line meets another root hyperplane.
fn other_crossings(t: &[f64], j: usize) -> Vec<f64> {
    let n = t.len();
    let a = t[j] - t[j + 1];
    let mut out = Vec::new();
    for p in 0..n {
        for r in p + 1..n {
            if (p, r) == (j, j + 1) {
                continue;
            }
            // φ(point(z)) = φ(t) + (z - a)/2 · φ(α∨), α∨ = e_j - e_{j+1}.
            let pair = |x: usize| f64::from(u8::from(x == p)) - f64::from(u8::from(x == r));
            let slope = pair(j) - pair(j + 1);
            if slope != 0.0 {
                out.push(a - 2.0 * (t[p] - t[r]) / slope);
            }
        }
    }
    out
}

impl BraidPath {
    /// Point of ℂⁿ with α_j-coordinate z.
    pub fn point(&self, z: Complex64) -> Vec<Complex64> {
        let shift = (z - self.a) / 2.0;
        let mut p: Vec<Complex64> = self.basepoint.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        p[self.j] += shift;
        p[self.j + 1] -= shift;
        p
    }

    /// Tangent vector in ℂⁿ for dz.
    pub fn tangent(&self, dz: Complex64) -> Vec<Complex64> {
        let mut v = vec![Complex64::new(0.0, 0.0); self.n];
        v[self.j] = dz / 2.0;
        v[self.j + 1] = -dz / 2.0;
        v
    }

    /// Same curve traversed backwards, from s_j t to t.
    pub fn reversed(&self) -> Self {
        Self {
            pieces: self.pieces.iter().rev().map(PathPiece::reversed).collect(),
            ..self.clone()
        }
    }

    pub fn start(&self) -> Vec<Complex64> {
        self.point(self.pieces[0].eval(0.0).0)
    }

    pub fn end(&self) -> Vec<Complex64> {
        self.point(self.pieces[self.pieces.len() - 1].eval(1.0).0)
    }

    /// Smallest |z_p - z_r| over sampled points and all pairs p < r.
    pub fn closest_approach(&self, samples: usize) -> f64 {
        let mut best = f64::INFINITY;
        for piece in &self.pieces {
            for i in 0..=samples {
                let (z, _) = piece.eval(i as f64 / samples as f64);
                let p = self.point(z);
                for a in 0..self.n {
                    for b in a + 1..self.n {
                        best = best.min((p[a] - p[b]).norm());
                    }
                }
            }
        }
        best
    }

    /// ∮ dz/z over the arc by composite Simpson quadrature.
    pub fn arc_winding(&self, intervals: usize) -> Complex64 {
        let intervals = intervals + intervals % 2;
        let mut total = Complex64::new(0.0, 0.0);
        for piece in self.pieces.iter().filter(|p| matches!(p, PathPiece::Arc { .. })) {
            total += simpson(intervals, |s| {
                let (z, dz) = piece.eval(s);
                dz / z
            });
        }
        total
    }

    /// ∫ dφ/φ along the whole path for the linear form `phi`.
    pub fn log_integral(&self, phi: &[f64], intervals: usize) -> Complex64 {
        let intervals = intervals + intervals % 2;
        self.pieces
            .iter()
            .map(|piece| {
                simpson(intervals, |s| {
                    let (z, dz) = piece.eval(s);
                    let p = self.point(z);
                    let v = self.tangent(dz);
                    let num: Complex64 = phi.iter().zip(&v).map(|(c, x)| x * *c).sum();
                    let den: Complex64 = phi.iter().zip(&p).map(|(c, x)| x * *c).sum();
                    num / den
                })
            })
            .sum()
    }
}

fn simpson<F: Fn(f64) -> Complex64>(intervals: usize, f: F) -> Complex64 {
    let h = 1.0 / intervals as f64;
    let mut acc = f(0.0) + f(1.0);
    for i in 1..intervals {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += f(i as f64 * h) * w;
    }
    acc * (h / 3.0)
}

/// Braid path for generator `j` (0-based) from the basepoint `t`.
///
/// `t` must be real, regular and dominant. A radius whose closed disc meets
/// another hyperplane is halved up to eight times before giving up.
pub fn braid_path(j: usize, t: &[f64], policy: RadiusPolicy) -> Result<BraidPath> {
    let n = t.len();
    if j + 1 >= n {
        return Err(Error::Index(format!("generator {j} for n = {n}")));
    }
    if t.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::Path(format!("basepoint {t:?} is not regular dominant")));
    }
    let a = t[j] - t[j + 1];
    let crossings = other_crossings(t, j);
    let nearest = crossings.iter().map(|z| z.abs()).fold(f64::INFINITY, f64::min);
    if crossings.iter().any(|z| z.abs() <= a) {
        return Err(Error::Path(format!(
            "another hyperplane meets the line between t and s_j t (at {crossings:?})"
        )));
    }
    let default = (0.5 * nearest).min(0.5 * a);
    let mut radius = match policy {
        RadiusPolicy::Default => default,
        RadiusPolicy::Scaled(f) => default * f,
        RadiusPolicy::Fixed(r) => r,
    };
    let mut tries = 0;
    while !(radius > 0.0 && radius < a && radius < nearest) {
        if tries == 8 || !radius.is_finite() || radius <= 0.0 {
            return Err(Error::Path(format!(
                "no admissible radius: last {radius}, α_j(t) = {a}, nearest hyperplane at {nearest}"
            )));
        }
        radius /= 2.0;
        tries += 1;
    }
    let pieces = vec![
        PathPiece::Segment { from: a, to: radius },
        PathPiece::Arc {
            radius,
            from_angle: 0.0,
            to_angle: std::f64::consts::PI,
        },
        PathPiece::Segment {
            from: -radius,
            to: -a,
        },
    ];
    Ok(BraidPath {
        n,
        j,
        basepoint: t.to_vec(),
        a,
        radius,
        pieces,
    })
}
