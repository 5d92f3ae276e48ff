//! Fusion ring of the Verlinde category `Ver_p`.
//!
//! Simple objects are `L_0, ..., L_{p-2}`, the images of the tilting modules
//! `T_0, ..., T_{p-2}`. Products are computed by decomposing `T_a (x) T_b`
//! into tilting summands and dropping the negligible ones (`m >= p - 1`).
//! The Verlinde formula and the truncated Clebsch-Gordan rule are kept as
//! independent oracles.

use std::f64::consts::PI;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bigmath::ln_big;
use crate::charlab::weyl_char;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::prime::Prime;
use crate::tiltring::{is_negligible, tensor_decompose_tilt};

/// Maximum absolute distance from an integer accepted in the Verlinde sum.
pub const VERLINDE_TOLERANCE: f64 = 1e-6;
/// Relative residual at which power iteration stops.
pub const FPDIM_TOLERANCE: f64 = 1e-10;
pub const FPDIM_MAX_ITERATIONS: usize = 100_000;

fn rank(p: Prime) -> usize {
    p.get() as usize - 1
}

fn check_index(p: Prime, a: u64) -> Result<usize> {
    let max = p.get() - 2;
    if a > max {
        Err(Error::IndexOutOfRange { index: a, max })
    } else {
        Ok(a as usize)
    }
}

/// A finite direct sum of simple objects of `Ver_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionElement {
    p: Prime,
    mults: Vec<BigUint>,
}

impl FusionElement {
    pub fn zero(p: Prime) -> Self {
        FusionElement { p, mults: vec![BigUint::zero(); rank(p)] }
    }

    pub fn unit(p: Prime) -> Self {
        Self::simple(p, 0).expect("L_0 exists for every p")
    }

    pub fn simple(p: Prime, a: u64) -> Result<Self> {
        let a = check_index(p, a)?;
        let mut x = Self::zero(p);
        x.mults[a] = BigUint::one();
        Ok(x)
    }

    /// Builds an element from `(index, multiplicity)` pairs.
    pub fn from_pairs<I: IntoIterator<Item = (u64, u64)>>(p: Prime, pairs: I) -> Result<Self> {
        let mut x = Self::zero(p);
        for (a, k) in pairs {
            let a = check_index(p, a)?;
            x.mults[a] += k;
        }
        Ok(x)
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn multiplicity(&self, a: u64) -> BigUint {
        self.mults.get(a as usize).cloned().unwrap_or_default()
    }

    /// Nonzero `(index, multiplicity)` pairs in increasing index order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigUint)> + '_ {
        self.mults
            .iter()
            .enumerate()
            .filter(|(_, k)| !k.is_zero())
            .map(|(a, k)| (a as u64, k))
    }

    /// Length: total number of simple summands.
    pub fn length(&self) -> BigUint {
        self.mults.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.mults.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "elements of different fusion rings");
        FusionElement {
            p: self.p,
            mults: self.mults.iter().zip(&other.mults).map(|(a, b)| a + b).collect(),
        }
    }

    /// Residue of the categorical dimension in `F_p`.
    pub fn dim_fp(&self) -> u64 {
        let q = self.p.get();
        let total: BigUint = self
            .terms()
            .map(|(a, k)| k * BigUint::from(a + 1))
            .sum();
        (total % q).try_into().expect("residue fits in u64")
    }
}

/// Structure constants `N_{ab}^c` of `Ver_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRing {
    p: Prime,
    table: Vec<u32>,
}

impl FusionRing {
    /// Builds the full table by tilting decomposition, one row pair per task.
    pub fn new(p: Prime, exec: Exec) -> Result<Self> {
        let r = rank(p);
        let rows = exec.map_range(r * r, |ab| fuse_counts(p, (ab / r) as u64, (ab % r) as u64));
        let mut table = Vec::with_capacity(r * r * r);
        for row in rows {
            table.extend(row?);
        }
        Ok(FusionRing { p, table })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn rank(&self) -> usize {
        rank(self.p)
    }

    #[inline]
    pub fn coefficient(&self, a: usize, b: usize, c: usize) -> u32 {
        let r = self.rank();
        self.table[(a * r + b) * r + c]
    }

    pub fn mul(&self, x: &FusionElement, y: &FusionElement) -> FusionElement {
        assert!(x.p == self.p && y.p == self.p, "elements of a different fusion ring");
        let r = self.rank();
        let mut out = FusionElement::zero(self.p);
        for (a, ka) in x.terms() {
            for (b, kb) in y.terms() {
                let kab = ka * kb;
                for c in 0..r {
                    let n = self.coefficient(a as usize, b as usize, c);
                    if n != 0 {
                        out.mults[c] += &kab * n;
                    }
                }
            }
        }
        out
    }

    /// Fusion matrix of `L_a`: entry `(b, c)` is `N_{ab}^c`.
    pub fn fusion_matrix(&self, a: usize) -> Vec<Vec<f64>> {
        let r = self.rank();
        (0..r)
            .map(|b| (0..r).map(|c| self.coefficient(a, b, c) as f64).collect())
            .collect()
    }
}

fn fuse_counts(p: Prime, a: u64, b: u64) -> Result<Vec<u32>> {
    let mut row = vec![0u32; rank(p)];
    for (&m, &k) in &tensor_decompose_tilt(p, a, b)?.terms {
        if !is_negligible(p, 1, m) {
            row[m as usize] = k as u32;
        }
    }
    Ok(row)
}

/// `L_a (x) L_b` in `Ver_p`.
pub fn fuse(p: Prime, a: u64, b: u64) -> Result<FusionElement> {
    check_index(p, a)?;
    check_index(p, b)?;
    let row = fuse_counts(p, a, b)?;
    FusionElement::from_pairs(
        p,
        row.into_iter().enumerate().map(|(c, k)| (c as u64, k as u64)),
    )
}

/// `N_{ab}^c` from the Verlinde formula with `S_xy = sin((x+1)(y+1) pi / p)`.
pub fn verlinde_oracle(p: Prime, a: u64, b: u64, c: u64) -> Result<u64> {
    let (a, b, c) = (check_index(p, a)?, check_index(p, b)?, check_index(p, c)?);
    let q = p.get() as f64;
    let s = |x: usize, y: usize| ((x + 1) as f64 * (y + 1) as f64 * PI / q).sin();
    let sum: f64 = (0..rank(p))
        .map(|j| s(a, j) * s(b, j) * s(c, j) / s(0, j))
        .sum();
    let value = 2.0 / q * sum;
    let rounded = value.round();
    let residual = (value - rounded).abs();
    if residual >= VERLINDE_TOLERANCE || rounded < 0.0 {
        return Err(Error::NumericalInstability { residual });
    }
    Ok(rounded as u64)
}

/// Truncated Clebsch-Gordan rule: `N_{ab}^c = 1` iff `c = a + b mod 2` and
/// `|a - b| <= c <= min(a + b, 2(p - 2) - (a + b))`.
pub fn truncated_clebsch_gordan(p: Prime, a: u64, b: u64, c: u64) -> Result<u64> {
    check_index(p, a)?;
    check_index(p, b)?;
    check_index(p, c)?;
    let (a, b, c, top) = (a as i64, b as i64, c as i64, 2 * (p.get() as i64 - 2));
    let hit = (a + b - c) % 2 == 0 && (a - b).abs() <= c && c <= (a + b).min(top - (a + b));
    Ok(hit as u64)
}

/// A disagreement between the structural product and an oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleMismatch {
    pub p: u64,
    pub abc: (u64, u64, u64),
    pub structural: u64,
    pub verlinde: u64,
    pub closed_form: u64,
}

/// Compares every coefficient of the structural fusion table against the
/// Verlinde formula and the truncated Clebsch-Gordan rule.
pub fn oracle_mismatches(p: Prime, exec: Exec) -> Result<Vec<OracleMismatch>> {
    let ring = FusionRing::new(p, exec)?;
    let r = rank(p);
    let per_a = exec.map_range(r, |a| -> Result<Vec<OracleMismatch>> {
        let mut bad = Vec::new();
        for b in 0..r {
            for c in 0..r {
                let (a64, b64, c64) = (a as u64, b as u64, c as u64);
                let structural = ring.coefficient(a, b, c) as u64;
                let verlinde = verlinde_oracle(p, a64, b64, c64)?;
                let closed_form = truncated_clebsch_gordan(p, a64, b64, c64)?;
                if structural != verlinde || structural != closed_form {
                    bad.push(OracleMismatch {
                        p: p.get(),
                        abc: (a64, b64, c64),
                        structural,
                        verlinde,
                        closed_form,
                    });
                }
            }
        }
        Ok(bad)
    });
    let mut out = Vec::new();
    for v in per_a {
        out.extend(v?);
    }
    Ok(out)
}

/// `dim L_a = a + 1` reduced mod `p`.
pub fn dim_fp(p: Prime, a: u64) -> Result<u64> {
    check_index(p, a)?;
    Ok(weyl_char(a).dim_mod(p))
}

/// Frobenius-Perron dimension of `L_a`: the top eigenvalue of its fusion
/// matrix, by power iteration.
pub fn fpdim(p: Prime, a: u64) -> Result<f64> {
    let a = check_index(p, a)?;
    let ring = FusionRing::new(p, Exec::Sequential)?;
    fpdim_in(&ring, a)
}

/// [`fpdim`] against an already built ring.
pub fn fpdim_in(ring: &FusionRing, a: usize) -> Result<f64> {
    // Iterating on N + I keeps the spectrum away from -lambda_max, which
    // occurs for odd a.
    let mut m = ring.fusion_matrix(a);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] += 1.0;
    }
    let shifted = power_iteration(&m, FPDIM_TOLERANCE, FPDIM_MAX_ITERATIONS)?;
    Ok(shifted - 1.0)
}

/// Dominant eigenvalue of a symmetric non-negative matrix with a positive
/// Perron vector. Stops when the residual `|Mv - lambda v|` drops below
/// `tol * lambda`.
fn power_iteration(m: &[Vec<f64>], tol: f64, max_iter: usize) -> Result<f64> {
    let n = m.len();
    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    let mut w = vec![0.0; n];
    for _ in 0..max_iter {
        for (wi, row) in w.iter_mut().zip(m) {
            *wi = row.iter().zip(&v).map(|(x, y)| x * y).sum();
        }
        let lambda: f64 = w.iter().zip(&v).map(|(x, y)| x * y).sum();
        let residual = w
            .iter()
            .zip(&v)
            .map(|(x, y)| (x - lambda * y).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual <= tol * lambda.abs() {
            return Ok(lambda);
        }
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        for (vi, wi) in v.iter_mut().zip(&w) {
            *vi = wi / norm;
        }
    }
    Err(Error::NonConvergence { iterations: max_iter })
}

/// `l(X^n)^{1/n}` for `n = 1..=n_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct GdEstimate {
    pub lengths: Vec<BigUint>,
    pub roots: Vec<f64>,
    pub final_value: f64,
}

/// Growth dimension of `x` from exact lengths of its tensor powers.
pub fn gd_estimate(x: &FusionElement, n_max: usize) -> Result<GdEstimate> {
    if n_max == 0 {
        return Err(Error::InvalidInput("n_max must be at least 1".into()));
    }
    if x.is_zero() {
        return Err(Error::InvalidInput("growth dimension of the zero object".into()));
    }
    let ring = FusionRing::new(x.p, Exec::Sequential)?;
    let mut power = x.clone();
    let mut lengths = Vec::with_capacity(n_max);
    let mut roots = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        if n > 1 {
            power = ring.mul(&power, x);
        }
        let len = power.length();
        roots.push((ln_big(&len) / n as f64).exp());
        lengths.push(len);
    }
    let final_value = *roots.last().expect("n_max >= 1");
    Ok(GdEstimate { lengths, roots, final_value })
}
