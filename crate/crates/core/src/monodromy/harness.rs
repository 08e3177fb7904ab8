use std::f64::consts::PI;
use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::connection::{casimir_connection, kz_connection, max_abs, to_complex, ConnectionForm};
use super::fibre::{classical_fibre, evaluate_matrix, kz_residues, quantum_fibre, restrict_closed, weight_orbit, casimir_residues};
use super::path::{braid_path, default_basepoint, BraidPath, RadiusPolicy};
use super::spectral::{eigenvalues, spectral_compare_eigenvalues, word_trace_gap, MonodromyReport};
use super::transport::{parallel_transport, IntegratorStats, TransportOptions};
use crate::basis::MonomialBasis;
use crate::error::{Error, Result};
use crate::glrep::{sigma_operator, YoungDiagram};
use crate::report::{block_label, CheckRecord};

/// ħ = 2πih.
pub fn hbar_of(h: Complex64) -> Complex64 {
    Complex64::new(0.0, 2.0 * PI) * h
}

/// KZ coupling ħ̄ = 2h.
pub fn kz_coupling(h: Complex64) -> Complex64 {
    h * 2.0
}

/// σ(T_j) · 𝒫(path): the monodromy of generator j.
pub fn monodromy_generator(
    c: &ConnectionForm,
    sigma: &DMatrix<Complex64>,
    path: &BraidPath,
    opts: TransportOptions,
) -> Result<(DMatrix<Complex64>, IntegratorStats)> {
    let t = parallel_transport(c, path, opts)?;
    if sigma.shape() != t.matrix.shape() {
        return Err(Error::Dimension("σ and transport have different sizes".into()));
    }
    Ok((sigma * t.matrix, t.stats))
}

/// Monodromy of every generator at the default basepoint and radius.
pub fn monodromy_family(
    c: &ConnectionForm,
    sigmas: &[DMatrix<Complex64>],
    opts: TransportOptions,
) -> Result<(Vec<DMatrix<Complex64>>, IntegratorStats)> {
    let t = default_basepoint(c.ambient);
    let mut out = Vec::new();
    let mut stats = IntegratorStats::default();
    for (j, s) in sigmas.iter().enumerate() {
        let p = braid_path(j, &t, RadiusPolicy::Default)?;
        let (m, st) = monodromy_generator(c, s, &p, opts)?;
        stats = stats.merged(&st);
        out.push(m);
    }
    Ok((out, stats))
}

/// Largest entry of A_i A_{i+1} A_i - A_{i+1} A_i A_{i+1} and of [A_i, A_l], |i - l| ≥ 2.
pub fn braid_residual(ms: &[DMatrix<Complex64>]) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..ms.len() {
        for l in i + 1..ms.len() {
            let (a, b) = (&ms[i], &ms[l]);
            let r = if l == i + 1 { a * b * a - b * a * b } else { a * b - b * a };
            worst = worst.max(max_abs(&r));
        }
    }
    worst
}

/// Settings of the main comparison.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct HarnessConfig {
    pub k: usize,
    pub n: usize,
    pub lambda: Vec<u32>,
    pub mu: Vec<u32>,
    pub h_values: Vec<[f64; 2]>,
    pub ode_tol: f64,
    pub spectral_tol: f64,
    pub trace_tol: f64,
    pub parallel: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct HarnessOutput {
    pub reports: Vec<MonodromyReport>,
    pub checks: Vec<CheckRecord>,
}

/// Monodromy of the Casimir connection on ⊕_ν V_λ[ν] against the quantum
/// Weyl group elements at ħ = 2πih: eigenvalues per generator, traces of the
/// words T_1T_2, T_1²T_2, T_1²T_2² and (T_1T_2)³, and braid relations of the monodromy.
pub fn main_theorem_harness(cfg: &HarnessConfig) -> Result<HarnessOutput> {
    if cfg.k < cfg.n {
        return Err(Error::Contract(format!("k = {} must be at least n = {}", cfg.k, cfg.n)));
    }
    let lambda = YoungDiagram::new(&cfg.lambda)?;
    let cf = classical_fibre(cfg.k, cfg.n, &lambda, &cfg.mu)?;
    let qf = quantum_fibre(cfg.k, cfg.n, &lambda, &cfg.mu)?;
    let block = format!("{} lambda={lambda}", block_label(cfg.k, cfg.n, &cfg.mu));
    let dim = cf.dim();
    let sigmas: Vec<DMatrix<Complex64>> = cf.sigma.iter().map(to_complex).collect();
    let opts = TransportOptions {
        tol: cfg.ode_tol,
        ..Default::default()
    };
    let run = |hv: &[f64; 2]| -> Result<HarnessOutput> {
        let h = Complex64::new(hv[0], hv[1]);
        let conn = casimir_connection(cfg.n, cf.kappa.clone(), h)?;
        let (ms, stats) = monodromy_family(&conn, &sigmas, opts)?;
        let ss: Vec<DMatrix<Complex64>> = qf
            .weyl
            .iter()
            .map(|s| evaluate_matrix(s, hbar_of(h)))
            .collect::<Result<_>>()?;
        let mut reports = Vec::new();
        for (j, (m, s)) in ms.iter().zip(&ss).enumerate() {
            reports.push(spectral_compare_eigenvalues(j, h, m, &eigenvalues(s)?, cfg.spectral_tol, stats)?);
        }
        let tag = format!("h={}{:+}i", hv[0], hv[1]);
        let mut checks: Vec<CheckRecord> = reports
            .iter()
            .map(|r| {
                CheckRecord::numeric(
                    format!("spec(M_{0}) = spec(S_{0}) at {tag}", r.generator),
                    block.clone(),
                    dim,
                    r.deviation,
                    cfg.spectral_tol,
                )
            })
            .collect();
        if ms.len() >= 2 {
            for word in [vec![0, 1], vec![0, 0, 1], vec![0, 0, 1, 1], vec![0, 1, 0, 1, 0, 1]] {
                let name: String = word.iter().map(|i| format!("T{}", i + 1)).collect();
                checks.push(CheckRecord::numeric(
                    format!("tr({name}) monodromy vs quantum at {tag}"),
                    block.clone(),
                    dim,
                    word_trace_gap(&ms, &ss, &word),
                    cfg.trace_tol,
                ));
            }
            checks.push(CheckRecord::numeric(
                format!("braid relations of the monodromy at {tag}"),
                block.clone(),
                dim,
                braid_residual(&ms),
                1e-6,
            ));
        }
        Ok(HarnessOutput { reports, checks })
    };
    let parts: Vec<Result<HarnessOutput>> = if cfg.parallel {
        cfg.h_values.par_iter().map(run).collect()
    } else {
        cfg.h_values.iter().map(run).collect()
    };
    let mut out = HarnessOutput {
        reports: Vec::new(),
        checks: Vec::new(),
    };
    for p in parts {
        let p = p?;
        out.reports.extend(p.reports);
        out.checks.extend(p.checks);
    }
    Ok(out)
}

/// Union of the blocks S_n·μ together with the column permutation operators
/// and σ operators on it, as complex matrices.
struct OrbitBlock {
    basis: Arc<MonomialBasis>,
    swaps: Vec<DMatrix<Complex64>>,
    sigmas: Vec<DMatrix<Complex64>>,
}

fn orbit_block(k: usize, n: usize, mu: &[u32]) -> Result<OrbitBlock> {
    let basis = Arc::new(MonomialBasis::from_blocks(k, n, weight_orbit(mu))?);
    let graded = Arc::new(MonomialBasis::graded(k, n, mu.iter().sum())?);
    let dim = basis.len();
    let mut swaps = Vec::new();
    let mut sigmas = Vec::new();
    for j in 0..n - 1 {
        let mut p = DMatrix::zeros(dim, dim);
        for (c, m) in basis.elements().iter().enumerate() {
            let r = basis.index_of(&m.swap_columns(j)).expect("orbit is swap-closed");
            p[(r, c)] = Complex64::new(1.0, 0.0);
        }
        swaps.push(p);
        sigmas.push(to_complex(&restrict_closed(&sigma_operator(j, &graded)?, &basis)?.matrix));
    }
    Ok(OrbitBlock { basis, swaps, sigmas })
}

/// c_ab(ν) = ν_a + ν_b + 2ν_aν_b/k: on the block ν, 2hΩ_ab = hκ_ab - h c_ab(ν).
fn kz_shift(d: &[u32], a: usize, b: usize, k: usize) -> f64 {
    let (x, y) = (d[a] as f64, d[b] as f64);
    x + y + 2.0 * x * y / k as f64
}

/// Per generator, the largest entry of
/// (j j+1) 𝒫_KZ^{2h} - σ_j 𝒫_κ^h · e^{-πih(E_jj + E_{j+1,j+1} + 2E_jj E_{j+1,j+1}/k)} · e^{iπE_jj}
/// on the orbit of μ in polynomials on k×n matrices.
///
/// A second record per generator multiplies the right side by the remaining
/// scalar Π_{(a,b) ≠ (j,j+1)} (φ_ab(s_j t)/φ_ab(t))^{-h c_ab(ν)}, which is 1
/// when every c_ab is constant on the orbit.
pub fn kz_casimir_bridge(k: usize, n: usize, mu: &[u32], h: Complex64, opts: TransportOptions) -> Result<Vec<CheckRecord>> {
    let ob = orbit_block(k, n, mu)?;
    let casimir = casimir_connection(n, casimir_residues(&ob.basis)?, h)?;
    let kz = kz_connection(n, kz_residues(&ob.basis)?, kz_coupling(h))?;
    let t = default_basepoint(n);
    let block = block_label(k, n, mu);
    let mut out = Vec::new();
    for j in 0..n - 1 {
        let path = braid_path(j, &t, RadiusPolicy::Default)?;
        let p_kz = parallel_transport(&kz, &path, opts)?.matrix;
        let p_k = parallel_transport(&casimir, &path, opts)?.matrix;
        let mut st = t.clone();
        st.swap(j, j + 1);
        let diagonal = |gauged: bool| {
            DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
                ob.basis.len(),
                ob.basis.elements().iter().map(|m| {
                    let d = m.column_degrees();
                    let mut e = -Complex64::new(0.0, PI) * h * kz_shift(&d, j, j + 1, k);
                    if gauged {
                        for a in 0..n {
                            for b in a + 1..n {
                                if (a, b) != (j, j + 1) {
                                    let ratio = (st[a] - st[b]) / (t[a] - t[b]);
                                    e -= h * kz_shift(&d, a, b, k) * ratio.ln();
                                }
                            }
                        }
                    }
                    let parity = if d[j] % 2 == 0 { 1.0 } else { -1.0 };
                    e.exp() * parity
                }),
            ))
        };
        let lhs = &ob.swaps[j] * p_kz;
        let base = &ob.sigmas[j] * p_k;
        for (gauged, name) in [(false, "diagonal * parity"), (true, "diagonal * parity * gauge")] {
            out.push(CheckRecord::numeric(
                format!("pi_KZ^(2h)(T_{0}) = pi_kappa^h(T_{0}) * {name} at h={h}", j + 1),
                block.clone(),
                ob.basis.len(),
                max_abs(&(&lhs - &base * diagonal(gauged))),
                1e-6,
            ));
        }
    }
    Ok(out)
}

/// |det 𝒫 - exp(Σ_i tr(r_i) ∫ dφ_i/φ_i)| with the integrals by quadrature.
pub fn determinant_residual(c: &ConnectionForm, path: &BraidPath, opts: TransportOptions) -> Result<f64> {
    let p = parallel_transport(c, path, opts)?.matrix;
    let mut expo = Complex64::new(0.0, 0.0);
    for (phi, r) in c.covectors_f64().iter().zip(c.numeric_residues()) {
        expo += r.trace() * path.log_integral(phi, 4000);
    }
    Ok((p.determinant() - expo.exp()).norm())
}

/// Largest change of the transport when the arc radius is scaled by 0.8 and 1.2.
pub fn homotopy_residual(c: &ConnectionForm, j: usize, opts: TransportOptions) -> Result<f64> {
    let t = default_basepoint(c.ambient);
    let base = parallel_transport(c, &braid_path(j, &t, RadiusPolicy::Default)?, opts)?.matrix;
    let mut worst: f64 = 0.0;
    for f in [0.8, 1.2] {
        let other = parallel_transport(c, &braid_path(j, &t, RadiusPolicy::Scaled(f))?, opts)?.matrix;
        worst = worst.max(max_abs(&(other - &base)));
    }
    Ok(worst)
}

/// Largest entry of 𝒫(reverse) 𝒫(path) - I.
pub fn reversibility_residual(c: &ConnectionForm, path: &BraidPath, opts: TransportOptions) -> Result<f64> {
    let there = parallel_transport(c, path, opts)?.matrix;
    let back = parallel_transport(c, &path.reversed(), opts)?.matrix;
    let n = there.nrows();
    Ok(max_abs(&(back * there - DMatrix::identity(n, n))))
}

/// Largest entry of M mapping weight ν to a weight other than s_j ν.
pub fn weight_leakage(m: &DMatrix<Complex64>, weights: &[Vec<u32>], j: usize) -> f64 {
    let mut worst: f64 = 0.0;
    for (c, wc) in weights.iter().enumerate() {
        let mut target = wc.clone();
        target.swap(j, j + 1);
        for (r, wr) in weights.iter().enumerate() {
            if *wr != target {
                worst = worst.max(m[(r, c)].norm());
            }
        }
    }
    worst
}
