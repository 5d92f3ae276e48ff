//! Symmetric growth dimension.
//!
//! `sgd(X) = limsup log l(Sym^{<=n} X) / log n`, where `l` is the length.
//! A [`LengthProvider`] supplies exact `l(Sym^n X)`; [`sgd_estimate`]
//! samples the cumulative lengths at powers of two and fits the tail.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::bigmath::ln_big;
use crate::charlab::{decompose, weyl_char, Basis};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::prime::Prime;

/// Tolerance for comparing an sgd estimate with `dim Hom(X, 1)`.
pub const MN_TOLERANCE: f64 = 0.05;

/// Composition length of the Weyl module `nabla(m)`, from the simple-basis
/// decomposition of `chi_m`.
pub fn nabla_length(p: Prime, m: u64) -> u64 {
    decompose(&weyl_char(m), Basis::simple(p))
        .expect("Weyl characters are non-negative in the simple basis")
        .total_multiplicity()
}

/// [`nabla_length`] for every `m <= m_max`, one decomposition per task.
pub fn nabla_lengths(p: Prime, m_max: u64, exec: Exec) -> Vec<u64> {
    exec.map_range(m_max as usize + 1, |m| nabla_length(p, m as u64))
}

/// Lengths of `nabla(m)` for `m <= m_max` from the digit recursion
/// `l(ap + b) = l(a) + l(a - 1)` for `b < p - 1` and `l(ap + p - 1) = l(a)`,
/// with `l(-1) = 0`.
pub fn nabla_lengths_recursive(p: Prime, m_max: u64) -> Vec<u64> {
    let q = p.get() as usize;
    let n = m_max as usize + 1;
    let mut len = vec![0u64; n];
    for m in 0..n {
        let (a, b) = (m / q, m % q);
        len[m] = if m < q {
            1
        } else if b == q - 1 {
            len[a]
        } else {
            len[a] + len[a - 1]
        };
    }
    len
}

/// `p(n)` for all `n <= n_max` by Euler's pentagonal number recurrence.
pub fn partition_counts(n_max: usize) -> Vec<BigUint> {
    let mut table: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    table.push(BigInt::one());
    for i in 1..=n_max {
        let mut sum = BigInt::zero();
        for k in 1usize.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = table[i - g1].clone();
            if g2 <= i {
                term += &table[i - g2];
            }
            if k % 2 == 1 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        table.push(sum);
    }
    table
        .into_iter()
        .map(|x| x.to_biguint().expect("partition counts are non-negative"))
        .collect()
}

pub fn partition_count(n: usize) -> BigUint {
    partition_counts(n).pop().expect("table is non-empty")
}

/// Where the lengths `l(Sym^n X)` come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProviderKind {
    /// `C(n + m - 1, m - 1)`: an `m`-dimensional object of `Vec`.
    Binomial(u32),
    /// Number of partitions of `n`.
    Partitions,
    /// `l(nabla(n))` for SL2 in characteristic `p`.
    Sl2Sym(Prime),
    /// Always `1`.
    Constant,
    /// Explicit values for `n = 0, 1, ...`.
    Table(Vec<BigUint>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthProvider {
    pub name: String,
    pub kind: ProviderKind,
    /// `dim Hom(X, 1)` when known.
    pub hom_dim: Option<u64>,
}

impl LengthProvider {
    /// The trivial `m`-dimensional representation; `dim Hom = m`.
    pub fn binomial(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("binomial provider needs m >= 1".into()));
        }
        Ok(LengthProvider {
            name: format!("binomial({m})"),
            kind: ProviderKind::Binomial(m),
            hom_dim: Some(m as u64),
        })
    }

    /// `Sym^n` of `X_t^{(x)2}` in `(Rep GL)_t`; `dim Hom = 0`.
    pub fn partitions() -> Self {
        LengthProvider { name: "partitions".into(), kind: ProviderKind::Partitions, hom_dim: Some(0) }
    }

    /// The natural representation of SL2; `dim Hom = 0`.
    pub fn sl2_sym(p: Prime) -> Self {
        LengthProvider {
            name: format!("sl2_sym({p})"),
            kind: ProviderKind::Sl2Sym(p),
            hom_dim: Some(0),
        }
    }

    /// Lengths identically one, as for the unit object; `dim Hom = 1`.
    pub fn constant() -> Self {
        LengthProvider { name: "constant".into(), kind: ProviderKind::Constant, hom_dim: Some(1) }
    }

    /// Explicit lengths `l(Sym^0), l(Sym^1), ...`; `l(Sym^0)` must be 1.
    pub fn from_table(name: impl Into<String>, lengths: Vec<BigUint>) -> Result<Self> {
        if lengths.first() != Some(&BigUint::one()) {
            return Err(Error::InvalidInput("l(Sym^0) must be 1".into()));
        }
        Ok(LengthProvider { name: name.into(), kind: ProviderKind::Table(lengths), hom_dim: None })
    }

    /// Table from `(n, length)` rows covering `0..=N` exactly once each, in
    /// any order.
    pub fn from_rows(name: impl Into<String>, rows: Vec<(u64, BigUint)>) -> Result<Self> {
        let mut lengths: Vec<Option<BigUint>> = vec![None; rows.len()];
        for (n, len) in rows {
            let slot = lengths
                .get_mut(n as usize)
                .ok_or_else(|| Error::InvalidInput(format!("row n = {n} leaves a gap")))?;
            if slot.replace(len).is_some() {
                return Err(Error::InvalidInput(format!("duplicate row n = {n}")));
            }
        }
        let lengths = lengths.into_iter().map(|x| x.expect("no gaps")).collect();
        Self::from_table(name, lengths)
    }

    pub fn with_hom_dim(mut self, hom_dim: Option<u64>) -> Self {
        self.hom_dim = hom_dim;
        self
    }

    /// Looks up a built-in provider: `binomial`, `partitions`, `sl2_sym`,
    /// `constant`.
    pub fn by_name(name: &str, p: Option<Prime>, m: Option<u32>) -> Result<Self> {
        match name {
            "binomial" => Self::binomial(m.ok_or_else(|| Error::InvalidInput("binomial needs m".into()))?),
            "partitions" => Ok(Self::partitions()),
            "sl2_sym" => Ok(Self::sl2_sym(p.ok_or_else(|| Error::InvalidInput("sl2_sym needs p".into()))?)),
            "constant" => Ok(Self::constant()),
            other => Err(Error::InvalidInput(format!("unknown provider {other}"))),
        }
    }

    /// `l(Sym^n X)` for `n = 0..=n_max`.
    pub fn lengths(&self, n_max: usize) -> Result<Vec<BigUint>> {
        Ok(match &self.kind {
            ProviderKind::Binomial(m) => {
                let m = *m as u64;
                let mut out = Vec::with_capacity(n_max + 1);
                let mut cur = BigUint::one();
                out.push(cur.clone());
                for n in 1..=n_max as u64 {
                    cur = cur * (n + m - 1) / n;
                    out.push(cur.clone());
                }
                out
            }
            ProviderKind::Partitions => partition_counts(n_max),
            ProviderKind::Sl2Sym(p) => nabla_lengths_recursive(*p, n_max as u64)
                .into_iter()
                .map(BigUint::from)
                .collect(),
            ProviderKind::Constant => vec![BigUint::one(); n_max + 1],
            ProviderKind::Table(t) => {
                if t.len() <= n_max {
                    return Err(Error::InvalidInput(format!(
                        "provider {} has lengths only up to n = {}",
                        self.name,
                        t.len() - 1
                    )));
                }
                t[..=n_max].to_vec()
            }
        })
    }
}

/// Classification thresholds for [`sgd_estimate_with`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GrowthThresholds {
    /// Minimum tail growth `l(Sym^n)^{1/n} - 1` for exponential growth.
    pub exponential_ratio: f64,
    /// Minimum ratio of `log l(Sym^n) / n` between the last two samples for
    /// the exponential rate to count as persistent.
    pub exponential_persistence: f64,
    /// Maximum per-sample rise of the fitted intercept for polynomial growth.
    pub drift: f64,
    /// Number of tail samples in the least-squares fit.
    pub window: usize,
}

impl Default for GrowthThresholds {
    fn default() -> Self {
        GrowthThresholds {
            exponential_ratio: 1e-3,
            exponential_persistence: 0.9,
            drift: 0.05,
            window: 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthSample {
    pub n: u64,
    #[serde(serialize_with = "serialize_decimal")]
    pub cumulative: BigUint,
    pub estimate: f64,
}

fn serialize_decimal<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", content = "degree")]
pub enum Classification {
    Polynomial(f64),
    Superpolynomial,
    Exponential,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Polynomial(d) => write!(f, "polynomial({d:.5})"),
            Classification::Superpolynomial => write!(f, "superpolynomial"),
            Classification::Exponential => write!(f, "exponential"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthEstimate {
    pub samples: Vec<GrowthSample>,
    #[serde(rename = "final")]
    pub final_value: f64,
    pub classification: Classification,
    pub diagnostics: String,
}

/// Intercept of the least-squares line through `(x_i, y_i)`.
fn intercept(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    if points.len() == 1 {
        return points[0].1;
    }
    let (sx, sy) = points.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (sx / n, sy / n);
    let sxx: f64 = points.iter().map(|(x, _)| (x - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return my;
    }
    my - sxy / sxx * mx
}

pub fn sgd_estimate(provider: &LengthProvider, n_max: u64) -> Result<GrowthEstimate> {
    sgd_estimate_with(provider, n_max, GrowthThresholds::default())
}

/// Samples `s_n = l(Sym^{<=n} X)` at `n = 2, 4, 8, ... <= n_max` and fits
/// `log s_n / log n = d + C / log n` over the tail window; `d` is the final
/// value. The limsup is only approximated: the drift of the fitted
/// intercept is reported rather than assumed to vanish.
pub fn sgd_estimate_with(provider: &LengthProvider, n_max: u64, th: GrowthThresholds) -> Result<GrowthEstimate> {
    if n_max < 16 {
        return Err(Error::InvalidInput("sgd estimation needs n_max >= 16".into()));
    }
    if th.window < 2 {
        return Err(Error::InvalidInput("fit window must hold at least 2 samples".into()));
    }
    let lengths = provider.lengths(n_max as usize)?;
    let mut samples = Vec::new();
    let mut cumulative = BigUint::zero();
    let mut next = 2u64;
    for (n, len) in lengths.iter().enumerate() {
        cumulative += len;
        if n as u64 == next {
            let estimate = (ln_big(&cumulative) / (n as f64).ln()).max(0.0);
            samples.push(GrowthSample { n: n as u64, cumulative: cumulative.clone(), estimate });
            next *= 2;
        }
    }
    let points: Vec<(f64, f64)> = samples
        .iter()
        .map(|s| (1.0 / (s.n as f64).ln(), s.estimate))
        .collect();
    let w = th.window.min(points.len());
    let final_value = intercept(&points[points.len() - w..]);
    let drift = if points.len() > w {
        final_value - intercept(&points[points.len() - w - 1..points.len() - 1])
    } else {
        points[points.len() - 1].1 - points[points.len() - 2].1
    };

    let rate = |n: u64| ln_big(&lengths[n as usize]) / n as f64;
    let last = samples[samples.len() - 1].n;
    let prev = samples[samples.len() - 2].n;
    let (rate_last, rate_prev) = (rate(last), rate(prev));
    let exponential = rate_last > th.exponential_ratio.ln_1p()
        && rate_last >= th.exponential_persistence * rate_prev;
    let classification = if exponential {
        Classification::Exponential
    } else if drift > th.drift {
        Classification::Superpolynomial
    } else {
        Classification::Polynomial(final_value)
    };
    let diagnostics = format!(
        "{}: {} samples up to n = {last}, fit window {w}, intercept drift {drift:.3e}, \
         tail rate log l(Sym^n)/n = {rate_last:.3e} (previous {rate_prev:.3e}); \
         limsup approximated by tail fit, convergence not assumed",
        provider.name,
        samples.len(),
    );
    Ok(GrowthEstimate { samples, final_value, classification, diagnostics })
}

/// Runs [`sgd_estimate`] over several providers.
pub fn sgd_estimate_many(providers: &[LengthProvider], n_max: u64, exec: Exec) -> Vec<Result<GrowthEstimate>> {
    exec.map(providers.iter().collect(), |p| sgd_estimate(p, n_max))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EqualityVerdict {
    Holds,
    StrictGap,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MnReport {
    pub estimate: GrowthEstimate,
    /// Value compared with `hom_dim`; infinite for non-polynomial growth.
    pub sgd: f64,
    pub hom_dim: u64,
    pub inequality_ok: bool,
    pub equality_verdict: EqualityVerdict,
}

/// Compares the sgd estimate with `dim Hom(X, 1)`: the inequality
/// `dim Hom(X, 1) <= sgd(X)` always holds, with equality exactly in the
/// maximally nilpotent case.
pub fn mn_diagnostic(provider: &LengthProvider, n_max: u64) -> Result<MnReport> {
    let hom_dim = provider
        .hom_dim
        .ok_or_else(|| Error::MissingHomDim(provider.name.clone()))?;
    let estimate = sgd_estimate(provider, n_max)?;
    let sgd = match estimate.classification {
        Classification::Polynomial(d) => d,
        _ => f64::INFINITY,
    };
    let h = hom_dim as f64;
    let inequality_ok = sgd >= h - MN_TOLERANCE;
    let equality_verdict = if (sgd - h).abs() <= MN_TOLERANCE {
        EqualityVerdict::Holds
    } else if sgd > h + MN_TOLERANCE {
        EqualityVerdict::StrictGap
    } else {
        EqualityVerdict::Inconclusive
    };
    Ok(MnReport { estimate, sgd, hom_dim, inequality_ok, equality_verdict })
}
