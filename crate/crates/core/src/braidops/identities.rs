use crate::field::Field;
use crate::qarith::{q_minus_q_inverse, qbinomial, qfactorial, ExactScalar};

/// The sum
/// S^μ_α = q^{α(μ-α+1)} Σ_n (-1)^n [α choose n] ([μ-α+n]!/[μ-α]!)
///         q^{(α-n)(μ-α+n+1) + n(n-1)/2} (q - q^{-1})^n,
/// which equals 1 for every 0 ≤ α ≤ μ.
pub fn s_mu_alpha_identity(mu: u32, alpha: u32) -> ExactScalar {
    assert!(alpha <= mu, "alpha must not exceed mu");
    let (m, a) = (mu as i64, alpha as i64);
    let base = qfactorial(mu - alpha);
    let qq = q_minus_q_inverse();
    let mut sum = ExactScalar::from_int(0);
    for n in 0..=a {
        let ratio = &qfactorial((m - a + n) as u32) / &base;
        let mut term = qbinomial(a, n)
            .mul_ref(&ratio)
            .mul_ref(&ExactScalar::q_int((a - n) * (m - a + n + 1) + n * (n - 1) / 2))
            .mul_ref(&qq.powi(n));
        if n % 2 == 1 {
            term = -term;
        }
        sum = sum.add_ref(&term);
    }
    sum.mul_ref(&ExactScalar::q_int(a * (m - a + 1)))
}

/// S^μ_α - (q^{2(μ-α+1)} S^{μ-1}_{α-1} - (q^{2(μ-α+1)} - 1) S^μ_{α-1}), for 1 ≤ α ≤ μ.
pub fn s_mu_alpha_recursion_residual(mu: u32, alpha: u32) -> ExactScalar {
    assert!(1 <= alpha && alpha <= mu, "recursion needs 1 <= alpha <= mu");
    let p = ExactScalar::q_int(2 * (mu as i64 - alpha as i64 + 1));
    let rhs = p
        .mul_ref(&s_mu_alpha_identity(mu - 1, alpha - 1))
        .sub_ref(&p.sub_ref(&ExactScalar::from_int(1)).mul_ref(&s_mu_alpha_identity(mu, alpha - 1)));
    s_mu_alpha_identity(mu, alpha).sub_ref(&rhs)
}
