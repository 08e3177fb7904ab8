use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Partition with weakly decreasing parts; trailing zeros are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct YoungDiagram {
    parts: Vec<u32>,
}

impl YoungDiagram {
    pub fn new(parts: &[u32]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Contract(format!("parts {parts:?} are not weakly decreasing")));
        }
        let mut p = parts.to_vec();
        while p.last() == Some(&0) {
            p.pop();
        }
        Ok(Self { parts: p })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Parts padded with zeros to length `p` (truncation is an error).
    pub fn padded(&self, p: usize) -> Result<Vec<u32>> {
        if self.parts.len() > p {
            return Err(Error::Contract(format!("{self} has more than {p} rows")));
        }
        let mut v = self.parts.clone();
        v.resize(p, 0);
        Ok(v)
    }

    /// Length of column c (0-based).
    pub fn column_length(&self, c: u32) -> u32 {
        self.parts.iter().filter(|&&x| x > c).count() as u32
    }

    /// All partitions of `d` with at most `max_rows` rows, in decreasing lexicographic order.
    pub fn partitions(d: u32, max_rows: usize) -> Vec<Self> {
        fn rec(rest: u32, max_part: u32, rows_left: usize, prefix: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
            if rest == 0 {
                out.push(YoungDiagram { parts: prefix.clone() });
                return;
            }
            if rows_left == 0 {
                return;
            }
            for p in (1..=max_part.min(rest)).rev() {
                prefix.push(p);
                rec(rest - p, p, rows_left - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(d, d, max_rows, &mut Vec::new(), &mut out);
        out
    }
}

impl std::fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let p: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", p.join(","))
    }
}

/// dim V_λ of gl_p by the hook-content formula; zero if λ has more than p rows.
pub fn gl_dimension(lambda: &YoungDiagram, p: usize) -> u128 {
    if lambda.rows() > p {
        return 0;
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len {
            num *= BigUint::from(p as u64 + c as u64 - r as u64);
            let arm = len - c - 1;
            let leg = lambda.column_length(c) - r as u32 - 1;
            den *= BigUint::from(arm + leg + 1);
        }
    }
    (num / den).to_u128().expect("dimension fits in u128")
}

/// Number of semistandard tableaux of shape λ with content `content`
/// (entry i+1 appears content[i] times), by exhaustive filling.
pub fn ssyt_count(lambda: &YoungDiagram, content: &[u32]) -> u64 {
    if lambda.size() != content.iter().sum::<u32>() {
        return 0;
    }
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = lambda.parts().iter().map(|&l| vec![0; l as usize]).collect();
    let mut left = content.to_vec();
    fill(&cells, 0, &mut grid, &mut left)
}

fn fill(cells: &[(usize, usize)], idx: usize, grid: &mut [Vec<u32>], left: &mut [u32]) -> u64 {
    if idx == cells.len() {
        return 1;
    }
    let (r, c) = cells[idx];
    let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
    let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
    let lo = lo_row.max(lo_col).max(1);
    let mut total = 0;
    for v in lo..=left.len() as u32 {
        if left[v as usize - 1] == 0 {
            continue;
        }
        left[v as usize - 1] -= 1;
        grid[r][c] = v;
        total += fill(cells, idx + 1, grid, left);
        left[v as usize - 1] += 1;
    }
    grid[r][c] = 0;
    total
}

/// Weight multiplicity dim V_λ^{(p)}[μ] as a Kostka number.
pub fn weight_multiplicity(lambda: &YoungDiagram, mu: &[u32]) -> u64 {
    ssyt_count(lambda, mu)
}

/// One summand V_λ^{(k)} ⊗ V_λ^{(n)} of the degree-d polynomial space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoweComponent {
    pub lambda: YoungDiagram,
    pub dim_k: u128,
    pub dim_n: u128,
}

/// The decomposition of degree-d polynomials on k×n matrices under gl_k × gl_n.
pub fn howe_components(k: usize, n: usize, d: u32) -> Vec<HoweComponent> {
    YoungDiagram::partitions(d, k.min(n))
        .into_iter()
        .map(|lambda| HoweComponent {
            dim_k: gl_dimension(&lambda, k),
            dim_n: gl_dimension(&lambda, n),
            lambda,
        })
        .collect()
}
