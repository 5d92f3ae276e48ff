//! Split Grothendieck ring of tilting modules for SL2 in characteristic `p`.
//!
//! Indecomposable tilting characters follow Donkin's recursion:
//!
//! - `ch T_m = chi_m` for `m <= p - 1`
//! - `ch T_m = chi_m + chi_{2p-2-m}` for `p <= m <= 2p - 2`
//! - `ch T_m = ch T_{m0} * Fr(ch T_{m1})` for `m >= 2p - 1`, where
//!   `m = m0 + p m1` with `m0` in `[p-1, 2p-2]`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::charlab::{decompose, frobenius_twist, mul_chars, weyl_char, Basis, Character, Decomposition};
use crate::error::Result;
use crate::exec::Exec;
use crate::prime::Prime;

/// Decomposition of a tilting module into indecomposable tiltings `T_m`.
pub type TiltDecomposition = Decomposition;

type Cache = RwLock<HashMap<(u64, u64), Arc<Character>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Character of the indecomposable tilting module `T_m`. Memoized per `(p, m)`.
pub fn tilting_char(p: Prime, m: u64) -> Arc<Character> {
    let key = (p.get(), m);
    if let Some(c) = cache().read().unwrap().get(&key) {
        return Arc::clone(c);
    }
    // Computed outside the lock; racing writers insert identical values.
    let c = Arc::new(compute_tilting_char(p, m));
    Arc::clone(cache().write().unwrap().entry(key).or_insert(c))
}

fn compute_tilting_char(p: Prime, m: u64) -> Character {
    let q = p.get();
    if m < q {
        weyl_char(m)
    } else if m <= 2 * q - 2 {
        &weyl_char(m) + &weyl_char(2 * q - 2 - m)
    } else {
        let m0 = q - 1 + (m - (q - 1)) % q;
        let m1 = (m - m0) / q;
        mul_chars(&tilting_char(p, m0), &frobenius_twist(&tilting_char(p, m1), p))
    }
}

/// `T_a (x) T_b` as a sum of indecomposable tilting modules.
pub fn tensor_decompose_tilt(p: Prime, a: u64, b: u64) -> Result<TiltDecomposition> {
    let product = mul_chars(&tilting_char(p, a), &tilting_char(p, b));
    decompose(&product, Basis::tilting(p))
}

/// Whether `T_m` lies in the tensor ideal generated by `T_{p^n - 1}`, i.e. is
/// sent to zero in `Ver_{p^n}`.
pub fn is_negligible(p: Prime, n: u32, m: u64) -> bool {
    assert!(n >= 1, "level n must be positive");
    match p.checked_pow(n) {
        Some(pn) => m >= pn - 1,
        None => false,
    }
}

/// Summands `(k, m)` of `T_{p^n-1} (x) T_k`, `k <= k_max`, with `m` below
/// the generator. Empty when the ideal is closed as claimed.
pub fn ideal_closure_violations(p: Prime, n: u32, k_max: u64, exec: Exec) -> Result<Vec<(u64, u64)>> {
    let generator = p.get().pow(n) - 1;
    let per_k = exec.map_range(k_max as usize + 1, |k| {
        tensor_decompose_tilt(p, generator, k as u64).map(|d| {
            d.terms
                .keys()
                .filter(|&&m| !is_negligible(p, n, m))
                .map(|&m| (k as u64, m))
                .collect::<Vec<_>>()
        })
    });
    let mut out = Vec::new();
    for v in per_k {
        out.extend(v?);
    }
    Ok(out)
}

/// Weights `m` in `[p-1, m_max]` with `dim T_m` not divisible by `p`.
pub fn dimension_divisibility_violations(p: Prime, m_max: u64, exec: Exec) -> Vec<u64> {
    let lo = p.get() - 1;
    if m_max < lo {
        return Vec::new();
    }
    let ms: Vec<u64> = (lo..=m_max).collect();
    exec.map(ms, |m| (tilting_char(p, m).dim_mod(p) != 0).then_some(m))
        .into_iter()
        .flatten()
        .collect()
}
