//! Character ring of SL2.
//!
//! A [`Character`] is a symmetric Laurent polynomial in `q` stored folded:
//! `coeffs[w]` is the coefficient of `q^w + q^-w` for `w > 0` and the
//! constant term for `w = 0`. Palindromy is therefore structural.
//!
//! The Weyl, simple and tilting characters with highest weight `m` all equal
//! `q^m + (lower terms)`, so any character decomposes into each basis by
//! peeling off the top weight greedily.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::prime::Prime;
use crate::tiltring;

/// Values below this magnitude are reported as exact zero by
/// [`Character::quantum_dim`].
pub const QUANTUM_ZERO: f64 = 1e-9;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Character {
    coeffs: Vec<i64>,
}

impl Character {
    pub fn zero() -> Self {
        Character { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Character { coeffs: vec![1] }
    }

    /// Builds a character from folded coefficients, `coeffs[w]` for weight `w`.
    pub fn from_folded(coeffs: Vec<i64>) -> Self {
        let mut c = Character { coeffs };
        c.trim();
        c
    }

    /// Builds a character from `(weight, coefficient)` pairs; repeated
    /// weights accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (usize, i64)>>(pairs: I) -> Self {
        let mut coeffs = Vec::new();
        for (w, c) in pairs {
            if coeffs.len() <= w {
                coeffs.resize(w + 1, 0);
            }
            coeffs[w] += c;
        }
        Character::from_folded(coeffs)
    }

    /// `q^w + q^-w`, or `1` for `w = 0`.
    pub fn monomial(w: usize) -> Self {
        let mut coeffs = vec![0; w + 1];
        coeffs[w] = 1;
        Character { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    #[inline]
    pub fn coeff(&self, w: usize) -> i64 {
        self.coeffs.get(w).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest weight with a nonzero coefficient.
    pub fn top_weight(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Folded coefficients, without trailing zeros.
    pub fn folded(&self) -> &[i64] {
        &self.coeffs
    }

    /// Nonzero `(weight, coefficient)` pairs in increasing weight order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(w, &c)| (w, c))
    }

    pub fn scale(&self, k: i64) -> Self {
        Character::from_folded(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Full Laurent coefficients `q^-W ..= q^W`, where `W` is the top weight.
    pub fn laurent(&self) -> Vec<i64> {
        let Some(top) = self.top_weight() else {
            return Vec::new();
        };
        let mut out = vec![0; 2 * top + 1];
        for (w, c) in self.terms() {
            out[top + w] = c;
            out[top - w] = c;
        }
        out
    }

    /// Value at `q = 1`.
    pub fn dim(&self) -> i128 {
        self.terms()
            .map(|(w, c)| if w == 0 { c as i128 } else { 2 * c as i128 })
            .sum()
    }

    /// Value at `q = 1` reduced into `F_p`.
    pub fn dim_mod(&self, p: Prime) -> u64 {
        self.dim().rem_euclid(p.get() as i128) as u64
    }

    /// Value at `q = exp(i pi / p)`.
    pub fn quantum_dim(&self, p: Prime) -> f64 {
        let theta = std::f64::consts::PI / p.get() as f64;
        let v: f64 = self
            .terms()
            .map(|(w, c)| {
                if w == 0 {
                    c as f64
                } else {
                    2.0 * c as f64 * (w as f64 * theta).cos()
                }
            })
            .sum();
        if v.abs() < QUANTUM_ZERO {
            0.0
        } else {
            v
        }
    }

    /// Whether all nonzero weights share one parity and all coefficients are
    /// non-negative, as for the character of a module.
    pub fn is_module_like(&self) -> bool {
        let mut parity = None;
        for (w, c) in self.terms() {
            if c < 0 {
                return false;
            }
            match parity {
                None => parity = Some(w % 2),
                Some(par) if par != w % 2 => return false,
                _ => {}
            }
        }
        true
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character{{")?;
        let mut first = true;
        for (w, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{w}:{c}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            if !first {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (w, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => write!(f, "(q^{w}+q^-{w})")?,
                _ => write!(f, "{a}(q^{w}+q^-{w})")?,
            }
        }
        Ok(())
    }
}

impl Add for &Character {
    type Output = Character;

    fn add(self, rhs: &Character) -> Character {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Character::from_folded((0..n).map(|w| self.coeff(w) + rhs.coeff(w)).collect())
    }
}

impl Sub for &Character {
    type Output = Character;

    fn sub(self, rhs: &Character) -> Character {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Character::from_folded((0..n).map(|w| self.coeff(w) - rhs.coeff(w)).collect())
    }
}

impl Mul for &Character {
    type Output = Character;

    fn mul(self, rhs: &Character) -> Character {
        mul_chars(self, rhs)
    }
}

/// `chi_m = q^m + q^(m-2) + ... + q^-m`, the character of the Weyl module.
pub fn weyl_char(m: u64) -> Character {
    let m = m as usize;
    let mut coeffs = vec![0; m + 1];
    for w in (m % 2..=m).step_by(2) {
        coeffs[w] = 1;
    }
    Character { coeffs }
}

/// Product of Laurent polynomials.
pub fn mul_chars(a: &Character, b: &Character) -> Character {
    let (Some(ta), Some(tb)) = (a.top_weight(), b.top_weight()) else {
        return Character::zero();
    };
    let la = a.laurent();
    let lb = b.laurent();
    let top = ta + tb;
    // Only the non-negative half of the product is needed.
    let mut coeffs = vec![0i64; top + 1];
    for (i, &x) in la.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in lb.iter().enumerate() {
            if y == 0 {
                continue;
            }
            let e = i + j;
            if e >= top {
                coeffs[e - top] += x * y;
            }
        }
    }
    Character::from_folded(coeffs)
}

/// Substitution `q -> q^p`.
pub fn frobenius_twist(c: &Character, p: Prime) -> Character {
    let p = p.get() as usize;
    match c.top_weight() {
        None => Character::zero(),
        Some(top) => {
            let mut coeffs = vec![0; top * p + 1];
            for (w, x) in c.terms() {
                coeffs[w * p] = x;
            }
            Character { coeffs }
        }
    }
}

/// Character of the simple module `L(m)` by Steinberg's tensor product
/// theorem: the product over base-p digits `m_j` of the `j`-fold Frobenius
/// twists of `chi_{m_j}`.
pub fn simple_char(p: Prime, m: u64) -> Character {
    let mut out = Character::one();
    let mut scale = 1usize;
    for d in p.digits(m) {
        if d != 0 {
            let twisted = {
                let base = weyl_char(d);
                let mut coeffs = vec![0; base.coeffs.len().saturating_sub(1) * scale + 1];
                for (w, x) in base.terms() {
                    coeffs[w * scale] = x;
                }
                Character { coeffs }
            };
            out = mul_chars(&out, &twisted);
        }
        scale *= p.get() as usize;
    }
    out
}

/// One of the three unitriangular bases of the character ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "p")]
pub enum Basis {
    Weyl,
    Simple(u64),
    Tilting(u64),
}

impl Basis {
    pub fn simple(p: Prime) -> Self {
        Basis::Simple(p.get())
    }

    pub fn tilting(p: Prime) -> Self {
        Basis::Tilting(p.get())
    }

    pub fn prime(self) -> Option<Prime> {
        match self {
            Basis::Weyl => None,
            Basis::Simple(p) | Basis::Tilting(p) => Prime::new(p).ok(),
        }
    }

    /// The basis character with highest weight `m`.
    pub fn char_of(self, m: u64) -> Result<Character> {
        match self {
            Basis::Weyl => Ok(weyl_char(m)),
            Basis::Simple(p) => Ok(simple_char(Prime::new(p)?, m)),
            Basis::Tilting(p) => Ok(tiltring::tilting_char(Prime::new(p)?, m).as_ref().clone()),
        }
    }

    /// Single-letter symbol used when printing labels.
    pub fn symbol(self) -> char {
        match self {
            Basis::Weyl => 'W',
            Basis::Simple(_) => 'L',
            Basis::Tilting(_) => 'T',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BasisLabel {
    pub basis: Basis,
    pub m: u64,
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.basis.symbol(), self.m)
    }
}

/// Multiplicities of basis characters, keyed by highest weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub basis: Basis,
    pub terms: BTreeMap<u64, u64>,
}

impl Decomposition {
    pub fn multiplicity(&self, m: u64) -> u64 {
        self.terms.get(&m).copied().unwrap_or(0)
    }

    /// Sum of all multiplicities. For the simple basis this is the
    /// composition length.
    pub fn total_multiplicity(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn labels(&self) -> impl Iterator<Item = (BasisLabel, u64)> + '_ {
        self.terms
            .iter()
            .map(|(&m, &k)| (BasisLabel { basis: self.basis, m }, k))
    }

    /// `sum mult * basis_char`.
    pub fn reconstruct(&self) -> Result<Character> {
        let mut acc = Character::zero();
        for (&m, &k) in &self.terms {
            acc = &acc + &self.basis.char_of(m)?.scale(k as i64);
        }
        Ok(acc)
    }
}

/// Writes `c` as a non-negative combination of `basis` by repeatedly
/// removing the top weight.
pub fn decompose(c: &Character, basis: Basis) -> Result<Decomposition> {
    let mut work = c.coeffs.clone();
    let mut terms = BTreeMap::new();
    for w in (0..work.len()).rev() {
        let k = work[w];
        if k == 0 {
            continue;
        }
        if k < 0 {
            return Err(Error::NegativeCoefficient { weight: w, coeff: k });
        }
        let b = basis.char_of(w as u64)?;
        for (v, x) in b.terms() {
            work[v] -= k * x;
        }
        terms.insert(w as u64, k as u64);
    }
    Ok(Decomposition { basis, terms })
}

/// Where to evaluate a character.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecializationPoint {
    /// `q = 1`: the integer dimension.
    One,
    /// `q = exp(i pi / p)`: the quantum dimension.
    RootOfUnity(Prime),
    /// `q = 1`, then reduced mod `p`.
    OneModP(Prime),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Specialization {
    Integer(i128),
    Real(f64),
    Residue(u64),
}

pub fn specialize(c: &Character, point: SpecializationPoint) -> Specialization {
    match point {
        SpecializationPoint::One => Specialization::Integer(c.dim()),
        SpecializationPoint::RootOfUnity(p) => Specialization::Real(c.quantum_dim(p)),
        SpecializationPoint::OneModP(p) => Specialization::Residue(c.dim_mod(p)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    /// Brute force: expand each character into its multiset of weights
    /// (with signs) and convolve pairwise.
    fn convolution_oracle(a: &Character, b: &Character) -> Character {
        let expand = |c: &Character| -> Vec<(i64, i64)> {
            let mut out = Vec::new();
            for (w, x) in c.terms() {
                out.push((w as i64, x));
                if w > 0 {
                    out.push((-(w as i64), x));
                }
            }
            out
        };
        let mut acc: BTreeMap<i64, i64> = BTreeMap::new();
        for (wa, xa) in expand(a) {
            for (wb, xb) in expand(b) {
                *acc.entry(wa + wb).or_default() += xa * xb;
            }
        }
        for (&w, &x) in &acc {
            assert_eq!(acc.get(&-w).copied().unwrap_or(0), x, "product not palindromic");
        }
        Character::from_pairs(
            acc.into_iter()
                .filter(|&(w, _)| w >= 0)
                .map(|(w, x)| (w as usize, x)),
        )
    }

    #[test]
    fn weyl_characters() {
        assert_eq!(weyl_char(0), Character::one());
        assert_eq!(weyl_char(2), Character::from_pairs([(2, 1), (0, 1)]));
        assert_eq!(weyl_char(2).dim(), 3);
        assert_eq!(weyl_char(3), Character::from_pairs([(3, 1), (1, 1)]));
        assert_eq!(weyl_char(3).laurent(), vec![1, 0, 1, 0, 1, 0, 1]);
        for m in 0..50 {
            assert_eq!(weyl_char(m).dim(), m as i128 + 1);
        }
    }

    #[test]
    fn clebsch_gordan_products() {
        let c11 = mul_chars(&weyl_char(1), &weyl_char(1));
        assert_eq!(c11, Character::from_pairs([(2, 1), (0, 2)]));
        assert_eq!(c11, convolution_oracle(&weyl_char(1), &weyl_char(1)));
        assert_eq!(c11, &weyl_char(0) + &weyl_char(2));

        let c12 = mul_chars(&weyl_char(1), &weyl_char(2));
        assert_eq!(c12, &weyl_char(1) + &weyl_char(3));
        assert_eq!(c12, convolution_oracle(&weyl_char(1), &weyl_char(2)));

        for m in 0..10 {
            assert_eq!(mul_chars(&weyl_char(0), &weyl_char(m)), weyl_char(m));
        }
        // chi_a chi_b = sum_{c = |a-b|, step 2}^{a+b} chi_c
        for a in 0..12u64 {
            for b in 0..12u64 {
                let mut expected = Character::zero();
                for c in (a.abs_diff(b)..=a + b).step_by(2) {
                    expected = &expected + &weyl_char(c);
                }
                assert_eq!(mul_chars(&weyl_char(a), &weyl_char(b)), expected);
            }
        }
    }

    #[test]
    fn twists() {
        assert_eq!(frobenius_twist(&weyl_char(1), p(2)), Character::monomial(2));
        assert_eq!(frobenius_twist(&Character::one(), p(7)), Character::one());
        assert_eq!(
            frobenius_twist(&weyl_char(2), p(3)),
            Character::from_pairs([(6, 1), (0, 1)])
        );
        assert!(frobenius_twist(&Character::zero(), p(3)).is_zero());
    }

    #[test]
    fn simple_characters() {
        assert_eq!(simple_char(p(2), 2), Character::monomial(2));
        assert_eq!(simple_char(p(2), 2).dim(), 2);
        assert_eq!(simple_char(p(3), 2), weyl_char(2));
        assert_eq!(
            simple_char(p(2), 3),
            mul_chars(&Character::monomial(2), &weyl_char(1))
        );
        assert_eq!(simple_char(p(2), 3), weyl_char(3));
        for q in [2, 3, 5, 7, 11] {
            for m in 0..q {
                assert_eq!(simple_char(p(q), m), weyl_char(m));
            }
        }
    }

    #[test]
    fn decompositions() {
        let c11 = mul_chars(&weyl_char(1), &weyl_char(1));
        let d = decompose(&c11, Basis::Weyl).unwrap();
        assert_eq!(d.terms, BTreeMap::from([(0, 1), (2, 1)]));

        let d = decompose(&weyl_char(2), Basis::simple(p(2))).unwrap();
        assert_eq!(d.terms, BTreeMap::from([(0, 1), (2, 1)]));
        assert_eq!(d.total_multiplicity(), 2);

        let d = decompose(&weyl_char(4), Basis::simple(p(2))).unwrap();
        assert_eq!(d.terms, BTreeMap::from([(0, 1), (2, 1), (4, 1)]));
        assert_eq!(d.total_multiplicity(), 3);
    }

    #[test]
    fn negative_input_is_rejected() {
        let c = &weyl_char(2) - &weyl_char(0);
        // q^2 + q^-2 is L_2 for p = 2 but not a combination of Weyl characters.
        assert_eq!(
            decompose(&c, Basis::Weyl),
            Err(Error::NegativeCoefficient { weight: 0, coeff: -1 })
        );
        assert!(decompose(&c, Basis::simple(p(2))).is_ok());
        let c = weyl_char(1).scale(-1);
        assert!(matches!(
            decompose(&c, Basis::tilting(p(3))),
            Err(Error::NegativeCoefficient { weight: 1, .. })
        ));
    }

    #[test]
    fn specializations() {
        assert_eq!(
            specialize(&weyl_char(2), SpecializationPoint::One),
            Specialization::Integer(3)
        );
        let Specialization::Real(v) = specialize(&weyl_char(1), SpecializationPoint::RootOfUnity(p(5)))
        else {
            panic!()
        };
        assert!((v - 2.0 * (std::f64::consts::PI / 5.0).cos()).abs() < 1e-12);
        assert!((v - 1.6180339).abs() < 1e-7);
        assert_eq!(
            specialize(&weyl_char(4), SpecializationPoint::OneModP(p(5))),
            Specialization::Residue(0)
        );
        // [p]_q vanishes at q = exp(i pi / p)
        assert_eq!(weyl_char(6).quantum_dim(p(7)), 0.0);
    }

    #[test]
    fn unitriangular_transitions() {
        for q in [2, 3, 5, 7] {
            for m in 0..120u64 {
                for basis in [Basis::simple(p(q)), Basis::tilting(p(q))] {
                    let diff = &basis.char_of(m).unwrap() - &weyl_char(m);
                    assert!(
                        diff.top_weight().is_none_or(|t| t < m as usize),
                        "{basis:?} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(weyl_char(2).to_string(), "(q^2+q^-2) + 1");
        assert_eq!(Character::from_pairs([(1, -2)]).to_string(), "-2(q^1+q^-1)");
        assert_eq!(format!("{:?}", weyl_char(1)), "Character{1:1}");
    }

    fn arb_char() -> impl Strategy<Value = Character> {
        prop::collection::vec(-4i64..5, 0..9).prop_map(Character::from_folded)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn mul_is_commutative_and_associative(a in arb_char(), b in arb_char(), c in arb_char()) {
            prop_assert_eq!(mul_chars(&a, &b), mul_chars(&b, &a));
            prop_assert_eq!(
                mul_chars(&mul_chars(&a, &b), &c),
                mul_chars(&a, &mul_chars(&b, &c))
            );
        }

        #[test]
        fn mul_matches_convolution(a in arb_char(), b in arb_char()) {
            prop_assert_eq!(mul_chars(&a, &b), convolution_oracle(&a, &b));
        }

        #[test]
        fn dim_is_multiplicative(a in arb_char(), b in arb_char()) {
            prop_assert_eq!(mul_chars(&a, &b).dim(), a.dim() * b.dim());
        }

        #[test]
        fn decompositions_reconstruct(
            mults in prop::collection::vec(0i64..4, 1..30),
            q in prop::sample::select(vec![2u64, 3, 5, 7]),
        ) {
            // random non-negative combination of Weyl characters
            let mut c = Character::zero();
            for (m, &k) in mults.iter().enumerate() {
                c = &c + &weyl_char(m as u64).scale(k);
            }
            for basis in [Basis::Weyl, Basis::simple(p(q))] {
                let d = decompose(&c, basis).unwrap();
                prop_assert_eq!(d.reconstruct().unwrap(), c.clone());
                prop_assert!(d.terms.values().all(|&k| k >= 1));
            }
        }
    }
}
