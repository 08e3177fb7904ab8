//! Acceptance run: one line per criterion with its runtime; nonzero exit on any failure.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kdweyl_core::braidops::{s_mu_alpha_identity, verify_braid_relations, verify_rs, weyl_family};
use kdweyl_core::glrep::{casimir_truncated, gl_generator, howe_components, omega_operators, OmegaVariant, Side, YoungDiagram};
use kdweyl_core::linalg::SparseMatrix;
use kdweyl_core::monodromy::{
    braid_residual, casimir_connection, casimir_residues, classical_fibre, eigenvalues, evaluate_matrix, hbar_of,
    kohno_flatness, kz_casimir_bridge, kz_connection, kz_residues, main_theorem_harness, match_spectra,
    monodromy_family, quantum_fibre, HarnessConfig, TransportOptions,
};
use kdweyl_core::qmatspace::{hw_vector, is_row_highest, pieri_kernel, straighten, Strategy, QWord};
use kdweyl_core::report::CheckRecord;
use kdweyl_core::MonomialBasis;

type Outcome = Result<String, String>;

fn summarize(records: &[CheckRecord]) -> Outcome {
    let worst = records.iter().filter_map(|r| r.residual).fold(0.0_f64, f64::max);
    match records.iter().find(|r| !r.passed()) {
        None => Ok(format!("{} checks, worst numeric residual {worst:.2e}", records.len())),
        Some(r) => Err(format!(
            "{} on {}: {}",
            r.identity,
            r.block,
            r.residual_certificate.clone().unwrap_or_default()
        )),
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn rs_identity() -> Outcome {
    let mut records = Vec::new();
    for k in 2..=3 {
        for n in 2..=3 {
            records.extend(verify_rs(k, n, 4, true).map_err(err)?);
        }
    }
    summarize(&records)
}

fn serre() -> Outcome {
    let mut records = Vec::new();
    for side in [Side::K, Side::N] {
        for k in 1..=3 {
            for n in 1..=3 {
                records.extend(kdweyl_core::qmatspace::verify_serre(side, k, n, 4).map_err(err)?);
            }
        }
    }
    summarize(&records)
}

/// Number of distinct sorted words of length d over k·n letters, by exhaustive enumeration.
fn sorted_word_count(k: usize, n: usize, d: u32) -> usize {
    let letters = k * n;
    let total = letters.pow(d);
    let mut seen = BTreeSet::new();
    for code in 0..total {
        let mut c = code;
        let mut w: Vec<usize> = (0..d)
            .map(|_| {
                let x = c % letters;
                c /= letters;
                x
            })
            .collect();
        w.sort_unstable();
        seen.insert(w);
    }
    seen.len()
}

fn manin() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20240531);
    for t in 0..1000 {
        let k = rng.gen_range(1..=3);
        let n = rng.gen_range(1..=3);
        let len = rng.gen_range(0..=6);
        let word = QWord((0..len).map(|_| (rng.gen_range(0..k), rng.gen_range(0..n))).collect());
        let a = straighten(k, n, &word, Strategy::Leftmost);
        let b = straighten(k, n, &word, Strategy::Rightmost);
        if a != b {
            return Err(format!("word #{t} {:?}: strategies disagree", word.0));
        }
        let basis = MonomialBasis::graded(k, n, len as u32).map_err(err)?;
        if a.terms().keys().any(|m| basis.index_of(m).is_none()) {
            return Err(format!("word #{t} {:?}: result leaves the degree-{len} monomial span", word.0));
        }
    }
    for k in 1..=3 {
        for n in 1..=3 {
            for d in 0..=5 {
                let expected = binomial((k * n) as u64 + d as u64 - 1, d as u64);
                let got = MonomialBasis::graded(k, n, d).map_err(err)?.len();
                let brute = sorted_word_count(k, n, d);
                if got as u128 != expected || brute != got {
                    return Err(format!("k={k} n={n} d={d}: basis {got}, enumeration {brute}, binomial {expected}"));
                }
            }
        }
    }
    Ok("1000 seeded words, 54 dimension counts".into())
}

fn omega_kappa() -> Outcome {
    let two = BigRational::from_integer(2.into());
    let mut count = 0;
    for k in 1..=3 {
        for n in 2..=3 {
            for d in 0..=5 {
                let basis = Arc::new(MonomialBasis::graded(k, n, d).map_err(err)?);
                for i in 0..n {
                    for j in i + 1..n {
                        let omega = omega_operators(i, j, &basis, OmegaVariant::Gl).map_err(err)?.matrix;
                        let kappa = casimir_truncated(i, j, &basis).map_err(err)?.matrix;
                        let eii = gl_generator(Side::N, i, i, &basis).map_err(err)?;
                        let ejj = gl_generator(Side::N, j, j, &basis).map_err(err)?;
                        if eii.codomain.elements() != basis.elements() || ejj.codomain.elements() != basis.elements() {
                            return Err("E_ii does not preserve the graded basis".into());
                        }
                        let r = omega.scale(&two).sub(&kappa).add(&eii.matrix).add(&ejj.matrix);
                        if let Some((row, col, x)) = r.first_nonzero() {
                            return Err(format!(
                                "k={k} n={n} d={d} (i,j)=({i},{j}): residual {x} at {:?} <- {:?}",
                                basis.element(row),
                                basis.element(col)
                            ));
                        }
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{count} exact operator identities"))
}

fn howe() -> Outcome {
    for k in 1..=4 {
        for n in 1..=4 {
            for d in 0..=6u32 {
                let total: u128 = howe_components(k, n, d).iter().map(|c| c.dim_k * c.dim_n).sum();
                let expected = binomial((k * n) as u64 + d as u64 - 1, d as u64);
                if total != expected {
                    return Err(format!("k={k} n={n} d={d}: {total} vs {expected}"));
                }
            }
        }
    }
    Ok("112 exact integer identities".into())
}

fn q_pieri() -> Outcome {
    let mut count = 0;
    for k in 1..=3 {
        for mu1 in 0..=4 {
            for mu2 in 0..=4 {
                let (_, kernel) = pieri_kernel(k, mu1, mu2).map_err(err)?;
                let expected = if k >= 2 { mu1.min(mu2) as usize + 1 } else { 1 };
                if kernel.len() != expected {
                    return Err(format!("k={k} mu=({mu1},{mu2}): kernel dim {} vs {expected}", kernel.len()));
                }
                let top = if k >= 2 { mu1.min(mu2) } else { 0 };
                for i in 0..=top {
                    if !is_row_highest(&hw_vector(k, mu1, mu2, i).map_err(err)?) {
                        return Err(format!("k={k} mu=({mu1},{mu2}): v_{i} not annihilated"));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(format!("75 kernels, {count} vectors annihilated"))
}

fn s_mu_alpha() -> Outcome {
    for mu in 0..=8 {
        for alpha in 0..=mu {
            let s = s_mu_alpha_identity(mu, alpha);
            if !s.is_one() {
                return Err(format!("S^{mu}_{alpha} = {s}"));
            }
        }
    }
    Ok("45 exact identities".into())
}

fn flatness() -> Outcome {
    let mut records = Vec::new();
    let mut fibres = 0;
    let h = Complex64::new(1.0, 0.0);
    for n in 2..=4 {
        for k in 1..=3 {
            for d in 1..=6 {
                let basis = Arc::new(MonomialBasis::graded(k, n, d).map_err(err)?);
                if basis.len() > 100 {
                    continue;
                }
                let label = format!("k={k} n={n} deg={d}");
                let c = casimir_connection(n, casimir_residues(&basis).map_err(err)?, h).map_err(err)?;
                records.extend(kohno_flatness(&c, &label));
                if n <= 3 {
                    let c = kz_connection(n, kz_residues(&basis).map_err(err)?, h).map_err(err)?;
                    records.extend(kohno_flatness(&c, &label));
                }
                fibres += 1;
            }
        }
    }
    summarize(&records).map(|s| format!("{fibres} fibres, {s}"))
}

fn to_complex(m: &SparseMatrix<BigRational>) -> DMatrix<Complex64> {
    use num_traits::ToPrimitive;
    let mut out = DMatrix::zeros(m.rows(), m.cols());
    for (r, c, x) in m.triplets() {
        out[(r, c)] = Complex64::new(x.to_f64().unwrap(), 0.0);
    }
    out
}

fn braid() -> Outcome {
    let mut records = Vec::new();
    for k in 1..=3 {
        for d in 0..=3 {
            let basis = Arc::new(MonomialBasis::graded(k, 3, d).map_err(err)?);
            let ops: Vec<_> = weyl_family(&basis).map_err(err)?.into_iter().map(|o| o.op).collect();
            records.extend(verify_braid_relations(&ops, "S", &format!("k={k} n=3 deg={d}")).map_err(err)?);
        }
    }
    let fibre = classical_fibre(1, 3, &YoungDiagram::new(&[1]).map_err(err)?, &[1, 0, 0]).map_err(err)?;
    let c = casimir_connection(3, fibre.kappa.clone(), Complex64::new(0.05, 0.0)).map_err(err)?;
    let sigmas: Vec<_> = fibre.sigma.iter().map(to_complex).collect();
    let opts = TransportOptions {
        tol: 1e-10,
        ..Default::default()
    };
    let (ms, _) = monodromy_family(&c, &sigmas, opts).map_err(err)?;
    records.push(CheckRecord::numeric(
        "monodromy braid relations, h=0.05",
        "vector representation n=3",
        3,
        braid_residual(&ms),
        1e-6,
    ));
    summarize(&records)
}

fn sl2_closed_form() -> Outcome {
    let lambda = YoungDiagram::new(&[1]).map_err(err)?;
    let cf = classical_fibre(1, 2, &lambda, &[1, 0]).map_err(err)?;
    let qf = quantum_fibre(1, 2, &lambda, &[1, 0]).map_err(err)?;
    let sigmas = vec![to_complex(&cf.sigma[0])];
    let mut worst: f64 = 0.0;
    for h in [Complex64::new(0.02, 0.0), Complex64::new(0.05, 0.0), Complex64::new(0.03, 0.01)] {
        let c = casimir_connection(2, cf.kappa.clone(), h).map_err(err)?;
        let (ms, _) = monodromy_family(&c, &sigmas, TransportOptions::default()).map_err(err)?;
        let eig = eigenvalues(&ms[0]).map_err(err)?;
        let phase = (Complex64::new(0.0, PI) * h).exp();
        let i = Complex64::new(0.0, 1.0);
        let closed = [i * phase, -i * phase];
        let d1 = match_spectra(&eig, &closed).map_err(err)?.deviation;
        let hbar = hbar_of(h);
        let s = evaluate_matrix(&qf.weyl[0], hbar).map_err(err)?;
        let half_q = (hbar / 2.0).exp();
        let d2 = match_spectra(&eig, &eigenvalues(&s).map_err(err)?).map_err(err)?.deviation;
        let d3 = match_spectra(&eig, &[i * half_q, -i * half_q]).map_err(err)?.deviation;
        for (what, d) in [("closed form", d1), ("quantum Weyl spectrum", d2), ("±i q^(1/2)", d3)] {
            if d >= 1e-8 {
                return Err(format!("h={h}: deviation from {what} {d:e}"));
            }
        }
        worst = worst.max(d1).max(d2).max(d3);
    }
    Ok(format!("3 h samples, worst deviation {worst:.2e}"))
}

fn main_theorem() -> Outcome {
    let mut records = Vec::new();
    for (lambda, mu) in [(vec![1, 0, 0], vec![1, 0, 0]), (vec![2, 1, 0], vec![1, 1, 1]), (vec![2, 1, 0], vec![2, 1, 0])] {
        let cfg = HarnessConfig {
            k: 3,
            n: 3,
            lambda,
            mu,
            h_values: vec![[0.02, 0.0], [0.05, 0.0], [0.03, 0.01]],
            ode_tol: 1e-12,
            spectral_tol: 1e-6,
            trace_tol: 1e-5,
            parallel: true,
        };
        records.extend(main_theorem_harness(&cfg).map_err(err)?.checks);
    }
    summarize(&records)
}

fn kz_bridge() -> Outcome {
    let mut records = Vec::new();
    for h in [Complex64::new(0.02, 0.0), Complex64::new(0.05, 0.0), Complex64::new(0.03, 0.01)] {
        records.extend(kz_casimir_bridge(2, 3, &[1, 1, 1], h, TransportOptions::default()).map_err(err)?);
    }
    summarize(&records)
}

type Criterion = (u32, &'static str, Option<Duration>, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (1, "R = S exact, k,n in {2,3}, deg <= 4", Some(Duration::from_secs(60)), rs_identity),
        (2, "q-Serre relations, both sides, k,n <= 3, deg <= 4", None, serre),
        (3, "Manin straightening and monomial basis counts", None, manin),
        (4, "2 Omega~ = kappa - E_ii - E_jj, k,n <= 3, |mu| <= 5", None, omega_kappa),
        (5, "Howe dimension identity, k,n <= 4, d <= 6", None, howe),
        (6, "q-Pieri kernel dimension and v_i annihilation", None, q_pieri),
        (7, "S^mu_alpha = 1 for mu <= 8", None, s_mu_alpha),
        (8, "Kohno flatness, Casimir n <= 4 and KZ n <= 3", None, flatness),
        (9, "braid relations, exact S_j and numeric monodromy", None, braid),
        (10, "sl2 closed-form monodromy spectra", Some(Duration::from_secs(5)), sl2_closed_form),
        (11, "monodromy vs quantum Weyl group, n = 3, k = 3", Some(Duration::from_secs(300)), main_theorem),
        (12, "KZ / Casimir bridge on k=2 n=3 mu=(1,1,1)", None, kz_bridge),
    ];
    let mut failures = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(l)) if elapsed > l => Err(format!("runtime {elapsed:.2?} exceeds {l:?}")),
            (o, _) => o,
        };
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d.clone()),
            Err(d) => ("FAIL", d.clone()),
        };
        if outcome.is_err() {
            failures += 1;
        }
        let limit = limit.map(|l| format!(" (limit {l:?})")).unwrap_or_default();
        println!("criterion {id:>2} {status} [{elapsed:.2?}{limit}] {name}: {detail}");
    }
    if failures == 0 {
        println!("acceptance: all 12 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} of 12 criteria failed");
        ExitCode::FAILURE
    }
}

