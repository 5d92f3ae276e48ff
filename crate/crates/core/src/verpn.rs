//! Simple objects of the higher Verlinde categories `Ver_{p^n}` and a rule
//! base for vanishing of their symmetric powers.
//!
//! `Ver_{p^n}` has simples `L_i` for `0 <= i <= p^{n-1}(p-1) - 1`. Writing
//! `i` in base `p` as `(i_1, ..., i_n)` (most significant first, `i_1 <= p-2`)
//! gives the Steinberg factorization `L_i = L_{p^{n-1} i_1} (x) ... (x) L_{i_n}`.
//! `L_i` of `Ver_{p^{n-1}}` is `L_{pi}` of `Ver_{p^n}`.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime::Prime;

/// Fact table shipped with the crate.
pub const FACT_TABLE: &str = include_str!("../data/sym_facts.toml");
pub const FACT_TABLE_VERSION: u32 = 1;

fn pow(p: Prime, e: u32) -> Result<u64> {
    p.checked_pow(e)
        .ok_or_else(|| Error::InvalidInput(format!("{p}^{e} overflows")))
}

/// Largest simple index in `Ver_{p^n}`: `p^{n-1}(p-1) - 1`.
pub fn max_index(p: Prime, n: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidInput("level n must be at least 1".into()));
    }
    pow(p, n - 1)?
        .checked_mul(p.get() - 1)
        .map(|x| x - 1)
        .ok_or_else(|| Error::InvalidInput("index bound overflows".into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct VerpnSimple {
    pub p: u64,
    pub n: u32,
    pub index: u64,
}

impl VerpnSimple {
    pub fn new(p: Prime, n: u32, index: u64) -> Result<Self> {
        check_index(p, n, index)?;
        Ok(VerpnSimple { p: p.get(), n, index })
    }

    pub fn is_unit(&self) -> bool {
        self.index == 0
    }
}

impl fmt::Display for VerpnSimple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L_{} in Ver_{}^{}", self.index, self.p, self.n)
    }
}

fn check_index(p: Prime, n: u32, i: u64) -> Result<()> {
    let max = max_index(p, n)?;
    if i > max {
        Err(Error::IndexOutOfRange { index: i, max })
    } else {
        Ok(())
    }
}

/// Base-p digits of `i`, most significant first, exactly `n` of them.
pub fn steinberg_digits(p: Prime, n: u32, i: u64) -> Result<Vec<u64>> {
    check_index(p, n, i)?;
    let mut digits = p.digits(i);
    digits.resize(n as usize, 0);
    digits.reverse();
    Ok(digits)
}

/// The simple `L_{sum_j p^{n-j} i_j}`; inverse of [`steinberg_digits`].
pub fn steinberg_product(p: Prime, n: u32, digits: &[u64]) -> Result<VerpnSimple> {
    if digits.len() != n as usize || n == 0 {
        return Err(Error::InvalidInput(format!(
            "expected {n} digits, got {}",
            digits.len()
        )));
    }
    let q = p.get();
    let mut index = 0u64;
    for (pos, &d) in digits.iter().enumerate() {
        let max = if pos == 0 { q - 2 } else { q - 1 };
        if d > max {
            return Err(Error::DigitOutOfRange { position: pos, digit: d, max });
        }
        index = index * q + d;
    }
    VerpnSimple::new(p, n, index)
}

/// Index of `L_i` of `Ver_{p^n}` inside `Ver_{p^{n+1}}`.
pub fn embed(p: Prime, n: u32, i: u64) -> Result<u64> {
    check_index(p, n, i)?;
    let j = i * p.get();
    check_index(p, n + 1, j)?;
    Ok(j)
}

/// Index of the odd line `L_{p^{n-1}(p-2)}`, the generator of `sVec`.
pub fn odd_line(p: Prime, n: u32) -> Result<u64> {
    if !p.is_odd() {
        return Err(Error::EvenPrime);
    }
    if n == 0 {
        return Err(Error::InvalidInput("level n must be at least 1".into()));
    }
    Ok(pow(p, n - 1)? * (p.get() - 2))
}

/// What is known about `Sym^k L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "status", content = "simple")]
pub enum SymStatus {
    Zero,
    IsUnit,
    /// `1` is a direct summand; the complement is not determined.
    HasUnitSummand,
    /// Isomorphic to the simple object with this index.
    IsoSimple(u64),
    Unknown,
}

/// Which rule produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    /// `Sym^0 L = 1` and `Sym^k 1 = 1`.
    Trivial,
    /// A row of the fact table.
    FactTable,
    /// `1` is a summand of `Sym^2 L_{2p-2}` in `Ver_{p^2}`, `p > 2`.
    UnitSummandOfSquare,
    /// `Sym^{p-1} L_{p^{n-1}(p-2) + p-2} = 1`, `p > 2`, `n >= 2`.
    OddTwistTopPower,
    /// `Sym^{p^{n-a}-1} L_{p^a} = 0` for `0 <= a < n`.
    SteinbergVanishing,
    /// `Sym^{i+2} L_{p^{n-1}(p-2) + p^j i} = 0`, `0 <= j < n-1`, `0 <= i < p`.
    OddTwistVanishing,
    /// `Sym^{p-i} L_{p^{n-1} i} = 0` for `0 < i < p-1`.
    LeadingDigitVanishing,
    /// `Sym^k L` invertible for non-invertible simple `L`, `k > 1`, forces
    /// `Sym^{k+1} L = 0`.
    InvertiblePowerVanishing,
    /// `Sym^a L = 0` forces `Sym^k L = 0` for `k >= a`.
    UpwardClosure,
}

impl Rule {
    /// Whether the rule states a fact directly rather than inferring one
    /// from another verdict.
    pub fn is_primary(self) -> bool {
        !matches!(self, Rule::InvertiblePowerVanishing | Rule::UpwardClosure)
    }
}

/// A rule application, with the verdict it was inferred from if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub rule: Rule,
    pub power: u64,
    pub statement: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub premise: Option<Box<Provenance>>,
}

impl Provenance {
    fn new(rule: Rule, power: u64, statement: impl Into<String>) -> Self {
        Provenance { rule, power, statement: statement.into(), premise: None }
    }

    /// Follows premises back to the originating rule.
    pub fn root(&self) -> &Provenance {
        let mut cur = self;
        while let Some(p) = &cur.premise {
            cur = p;
        }
        cur
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymVerdict {
    pub object: VerpnSimple,
    pub power: u64,
    pub status: SymStatus,
    /// The rule that decided the status; `None` for `Unknown`.
    pub provenance: Option<Provenance>,
    /// Other vanishing rules that also apply at this power.
    pub corroborating: Vec<Provenance>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize)]
pub enum FactStatus {
    Zero,
    IsUnit,
    HasUnitSummand,
    IsoSimple,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize, Serialize)]
pub struct FactRecord {
    pub p: u64,
    pub n: u32,
    pub index: u64,
    pub power: u64,
    pub status: FactStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iso: Option<u64>,
    pub quote: String,
}

impl FactRecord {
    pub fn sym_status(&self) -> Result<SymStatus> {
        Ok(match (self.status, self.iso) {
            (FactStatus::Zero, None) => SymStatus::Zero,
            (FactStatus::IsUnit, None) => SymStatus::IsUnit,
            (FactStatus::HasUnitSummand, None) => SymStatus::HasUnitSummand,
            (FactStatus::IsoSimple, Some(j)) => SymStatus::IsoSimple(j),
            _ => {
                return Err(Error::InvalidInput(format!(
                    "fact for L_{} has inconsistent status/iso fields",
                    self.index
                )))
            }
        })
    }
}

/// A recorded value of `Dim_+ L_index`.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize, Serialize)]
pub struct DimplusRecord {
    pub p: u64,
    pub n: u32,
    pub index: u64,
    pub value: i64,
    pub quote: String,
}

#[derive(Debug, Deserialize)]
struct FactFile {
    version: u32,
    #[serde(default)]
    fact: Vec<FactRecord>,
    #[serde(default)]
    dimplus: Vec<DimplusRecord>,
}

/// Immutable rule base: the fact table plus the parametric rules.
#[derive(Debug, Clone)]
pub struct KnowledgeBase {
    facts: Vec<FactRecord>,
    dimplus: Vec<DimplusRecord>,
}

impl KnowledgeBase {
    /// Parses a fact table and validates every row.
    pub fn from_toml(src: &str) -> Result<Self> {
        let file: FactFile =
            toml::from_str(src).map_err(|e| Error::InvalidInput(format!("fact table: {e}")))?;
        if file.version != FACT_TABLE_VERSION {
            return Err(Error::InvalidInput(format!(
                "fact table version {} (expected {FACT_TABLE_VERSION})",
                file.version
            )));
        }
        for f in &file.fact {
            check_index(Prime::new(f.p)?, f.n, f.index)?;
            if let SymStatus::IsoSimple(j) = f.sym_status()? {
                check_index(Prime::new(f.p)?, f.n, j)?;
            }
        }
        for d in &file.dimplus {
            check_index(Prime::new(d.p)?, d.n, d.index)?;
        }
        Ok(KnowledgeBase { facts: file.fact, dimplus: file.dimplus })
    }

    /// The table shipped in `data/sym_facts.toml`.
    pub fn builtin() -> &'static KnowledgeBase {
        static KB: OnceLock<KnowledgeBase> = OnceLock::new();
        KB.get_or_init(|| KnowledgeBase::from_toml(FACT_TABLE).expect("shipped fact table is valid"))
    }

    pub fn facts(&self) -> &[FactRecord] {
        &self.facts
    }

    pub fn dimplus_records(&self) -> &[DimplusRecord] {
        &self.dimplus
    }

    fn facts_for(&self, s: VerpnSimple) -> impl Iterator<Item = &FactRecord> + '_ {
        self.facts
            .iter()
            .filter(move |f| f.p == s.p && f.n == s.n && f.index == s.index)
    }

    /// Exact (non-vanishing-threshold) statements about `Sym^k L`, in
    /// priority order.
    fn exact_facts(&self, p: Prime, s: VerpnSimple) -> Result<Vec<(SymStatus, Provenance)>> {
        let mut out = Vec::new();
        for f in self.facts_for(s) {
            out.push((f.sym_status()?, Provenance::new(Rule::FactTable, f.power, f.quote.clone())));
        }
        let q = p.get();
        if p.is_odd() && s.n == 2 && s.index == 2 * q - 2 {
            out.push((
                SymStatus::HasUnitSummand,
                Provenance::new(
                    Rule::UnitSummandOfSquare,
                    2,
                    format!("1 is a direct summand of Sym^2 L_{} in Ver_{q}^2", 2 * q - 2),
                ),
            ));
        }
        if p.is_odd() && s.n >= 2 && s.index == odd_line(p, s.n)? + (q - 2) {
            out.push((
                SymStatus::IsUnit,
                Provenance::new(
                    Rule::OddTwistTopPower,
                    q - 1,
                    format!("Sym^{} L_{} = 1", q - 1, s.index),
                ),
            ));
        }
        Ok(out)
    }

    /// Every rule giving `Sym^a L = 0`, as `(a, provenance)`, in evaluation
    /// order: fact table, then the three vanishing families, then the
    /// invertible-power inference.
    fn vanishing_rules(&self, p: Prime, s: VerpnSimple) -> Result<Vec<Provenance>> {
        let (q, n, i) = (p.get(), s.n, s.index);
        let mut out = Vec::new();
        for f in self.facts_for(s) {
            if f.status == FactStatus::Zero {
                out.push(Provenance::new(Rule::FactTable, f.power, f.quote.clone()));
            }
        }
        // L_{p^a}, a < n
        if let Some(a) = p.log_exact(i) {
            if a < n {
                let k = pow(p, n - a)? - 1;
                out.push(Provenance::new(
                    Rule::SteinbergVanishing,
                    k,
                    format!("Sym^{k} L_{i} = 0 (L_{i} = L_{q}^{a}, k = {q}^{} - 1)", n - a),
                ));
            }
        }
        if p.is_odd() {
            let top = pow(p, n - 1)?;
            // L_{p^{n-1} d}, 0 < d < p-1
            if i % top == 0 {
                let d = i / top;
                if d > 0 && d < q - 1 {
                    let k = q - d;
                    out.push(Provenance::new(
                        Rule::LeadingDigitVanishing,
                        k,
                        format!("Sym^{k} L_{i} = 0 (L_{i} = L_{{{top}*{d}}})"),
                    ));
                }
            }
            // L_{p^{n-1}(p-2) + p^j d}, j < n-1, d < p
            let odd = odd_line(p, n)?;
            if n >= 2 && i >= odd {
                let rest = i - odd;
                let mut best: Option<(u64, u32)> = None;
                for j in 0..n - 1 {
                    let pj = pow(p, j)?;
                    if rest % pj == 0 && rest / pj < q {
                        let d = rest / pj;
                        if best.is_none_or(|(bd, _)| d < bd) {
                            best = Some((d, j));
                        }
                    }
                }
                if let Some((d, j)) = best {
                    let k = d + 2;
                    out.push(Provenance::new(
                        Rule::OddTwistVanishing,
                        k,
                        format!("Sym^{k} L_{i} = 0 (L_{i} = L_{odd} (x) L_{{{q}^{j}*{d}}})"),
                    ));
                }
            }
        }
        let invertible = i == 0 || (p.is_odd() && i == odd_line(p, n)?);
        if !invertible {
            for (status, prov) in self.exact_facts(p, s)? {
                if status == SymStatus::IsUnit && prov.power > 1 {
                    let k = prov.power + 1;
                    out.push(Provenance {
                        rule: Rule::InvertiblePowerVanishing,
                        power: k,
                        statement: format!("Sym^{} L_{i} invertible => Sym^{k} L_{i} = 0", prov.power),
                        premise: Some(Box::new(prov)),
                    });
                }
            }
        }
        Ok(out)
    }

    /// Status of `Sym^k L_i` in `Ver_{p^n}`.
    pub fn sym_power_status(&self, p: Prime, n: u32, i: u64, k: u64) -> Result<SymVerdict> {
        let object = VerpnSimple::new(p, n, i)?;
        let verdict = |status, provenance, corroborating| SymVerdict {
            object,
            power: k,
            status,
            provenance,
            corroborating,
        };
        if k == 0 || i == 0 {
            let stmt = if k == 0 { "Sym^0 L = 1".to_string() } else { format!("Sym^{k} 1 = 1") };
            return Ok(verdict(SymStatus::IsUnit, Some(Provenance::new(Rule::Trivial, k, stmt)), vec![]));
        }
        let vanishing = self.vanishing_rules(p, object)?;
        let applicable: Vec<Provenance> = vanishing.into_iter().filter(|v| v.power <= k).collect();

        if let Some((status, prov)) = self
            .exact_facts(p, object)?
            .into_iter()
            .find(|(status, prov)| prov.power == k && *status != SymStatus::Zero)
        {
            return Ok(verdict(status, Some(prov), applicable));
        }

        // Smallest threshold wins; ties keep evaluation order.
        let Some(best_idx) = applicable
            .iter()
            .enumerate()
            .min_by_key(|(idx, v)| (v.power, *idx))
            .map(|(idx, _)| idx)
        else {
            return Ok(verdict(SymStatus::Unknown, None, vec![]));
        };
        let mut rest = applicable;
        let best = rest.remove(best_idx);
        let decided = if best.power == k {
            best
        } else {
            Provenance {
                rule: Rule::UpwardClosure,
                power: k,
                statement: format!("Sym^{} L_{i} = 0 => Sym^{k} L_{i} = 0", best.power),
                premise: Some(Box::new(best)),
            }
        };
        Ok(verdict(SymStatus::Zero, Some(decided), rest))
    }

    /// Smallest power at which some rule makes `Sym L_i` vanish.
    pub fn vanishing_threshold(&self, p: Prime, n: u32, i: u64) -> Result<Option<u64>> {
        let object = VerpnSimple::new(p, n, i)?;
        if i == 0 {
            return Ok(None);
        }
        Ok(self.vanishing_rules(p, object)?.iter().map(|v| v.power).min())
    }
}

/// [`KnowledgeBase::sym_power_status`] on the shipped table.
pub fn sym_power_status(p: Prime, n: u32, i: u64, k: u64) -> Result<SymVerdict> {
    KnowledgeBase::builtin().sym_power_status(p, n, i, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn index_bounds() {
        assert_eq!(max_index(p(3), 2), Ok(5));
        assert_eq!(max_index(p(2), 1), Ok(0));
        assert_eq!(max_index(p(5), 1), Ok(3));
        assert!(max_index(p(5), 0).is_err());
        assert!(VerpnSimple::new(p(3), 2, 6).is_err());
    }

    #[test]
    fn digits_and_products() {
        assert_eq!(steinberg_digits(p(3), 2, 5), Ok(vec![1, 2]));
        assert_eq!(steinberg_digits(p(5), 3, 0), Ok(vec![0, 0, 0]));
        assert_eq!(steinberg_digits(p(2), 3, 3), Ok(vec![0, 1, 1]));
        assert_eq!(
            steinberg_digits(p(3), 2, 6),
            Err(Error::IndexOutOfRange { index: 6, max: 5 })
        );
        assert_eq!(steinberg_product(p(3), 2, &[1, 2]).unwrap().index, 5);
        assert_eq!(steinberg_product(p(7), 3, &[0, 0, 0]).unwrap().index, 0);
        assert_eq!(steinberg_product(p(2), 2, &[0, 1]).unwrap().index, 1);
        assert_eq!(
            steinberg_product(p(3), 2, &[2, 0]),
            Err(Error::DigitOutOfRange { position: 0, digit: 2, max: 1 })
        );
        assert_eq!(
            steinberg_product(p(3), 2, &[0, 3]),
            Err(Error::DigitOutOfRange { position: 1, digit: 3, max: 2 })
        );
        assert!(steinberg_product(p(3), 2, &[0]).is_err());
    }

    #[test]
    fn digit_roundtrip() {
        for q in [2, 3, 5, 7] {
            for n in 1..=4 {
                for i in 0..=max_index(p(q), n).unwrap() {
                    let d = steinberg_digits(p(q), n, i).unwrap();
                    assert!(d[0] <= q - 2);
                    assert_eq!(steinberg_product(p(q), n, &d).unwrap().index, i);
                }
            }
        }
    }

    #[test]
    fn embeddings() {
        assert_eq!(embed(p(3), 1, 1), Ok(3));
        assert_eq!(embed(p(3), 1, 0), Ok(0));
        assert_eq!(embed(p(3), 2, 2), Ok(6));
        assert!(embed(p(3), 1, 2).is_err());
        for q in [2, 3, 5] {
            for n in 1..=3 {
                for i in 0..=max_index(p(q), n).unwrap() {
                    let mut d = steinberg_digits(p(q), n, i).unwrap();
                    d.push(0);
                    assert_eq!(embed(p(q), n, i).unwrap(), steinberg_product(p(q), n + 1, &d).unwrap().index);
                }
            }
        }
    }

    #[test]
    fn odd_lines() {
        assert_eq!(odd_line(p(3), 2), Ok(3));
        assert_eq!(odd_line(p(5), 1), Ok(3));
        assert_eq!(odd_line(p(7), 2), Ok(35));
        assert_eq!(odd_line(p(2), 3), Err(Error::EvenPrime));
        for q in [3, 5, 7, 11] {
            for n in 1..=4 {
                let d = steinberg_digits(p(q), n, odd_line(p(q), n).unwrap()).unwrap();
                assert_eq!(d[0], q - 2);
                assert!(d[1..].iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn status_examples() {
        let v = sym_power_status(p(3), 2, 1, 8).unwrap();
        assert_eq!(v.status, SymStatus::Zero);
        assert_eq!(v.provenance.unwrap().rule, Rule::SteinbergVanishing);

        let v = sym_power_status(p(3), 2, 4, 3).unwrap();
        assert_eq!(v.status, SymStatus::Zero);
        assert_eq!(v.provenance.unwrap().rule, Rule::FactTable);
        let v = sym_power_status(p(3), 2, 4, 2).unwrap();
        assert_eq!(v.status, SymStatus::IsUnit);
        assert_eq!(v.provenance.unwrap().rule, Rule::FactTable);

        let v = sym_power_status(p(5), 2, 7, 4).unwrap();
        assert_eq!(v.status, SymStatus::Unknown);
        assert!(v.provenance.is_none());

        assert_eq!(sym_power_status(p(3), 2, 1, 2).unwrap().status, SymStatus::IsoSimple(2));
        assert_eq!(sym_power_status(p(3), 2, 5, 2).unwrap().status, SymStatus::IsoSimple(2));
        assert_eq!(sym_power_status(p(3), 2, 3, 2).unwrap().status, SymStatus::Zero);
        assert_eq!(sym_power_status(p(5), 2, 8, 2).unwrap().status, SymStatus::HasUnitSummand);
        assert_eq!(sym_power_status(p(5), 2, 0, 9).unwrap().status, SymStatus::IsUnit);
        assert_eq!(sym_power_status(p(5), 2, 7, 0).unwrap().status, SymStatus::IsUnit);
        assert!(sym_power_status(p(3), 2, 6, 1).is_err());
    }

    #[test]
    fn upward_closure() {
        for q in [2, 3, 5, 7] {
            for n in 1..=3 {
                for i in 0..=max_index(p(q), n).unwrap() {
                    let mut seen_zero = false;
                    for k in 0..=q.pow(n) + 2 {
                        let v = sym_power_status(p(q), n, i, k).unwrap();
                        if seen_zero {
                            assert_eq!(v.status, SymStatus::Zero, "p={q} n={n} i={i} k={k}");
                        }
                        seen_zero |= v.status == SymStatus::Zero;
                    }
                }
            }
        }
    }

    #[test]
    fn inferred_zeros_rest_on_primary_rules() {
        let mut inferred = 0;
        for q in [2, 3, 5, 7] {
            for n in 1..=3 {
                for i in 0..=max_index(p(q), n).unwrap() {
                    for k in 0..=12 {
                        let v = sym_power_status(p(q), n, i, k).unwrap();
                        for prov in v.provenance.iter().chain(&v.corroborating) {
                            assert!(prov.root().rule.is_primary());
                            if prov.rule == Rule::InvertiblePowerVanishing {
                                inferred += 1;
                                let premise = prov.premise.as_ref().unwrap();
                                assert!(matches!(premise.rule, Rule::FactTable | Rule::OddTwistTopPower));
                                assert_eq!(premise.power + 1, prov.power);
                            }
                        }
                    }
                }
            }
        }
        assert!(inferred > 0);
    }

    #[test]
    fn exact_facts_never_contradict_vanishing() {
        let kb = KnowledgeBase::builtin();
        for q in [2, 3, 5, 7, 11] {
            for n in 1..=3 {
                for i in 1..=max_index(p(q), n).unwrap() {
                    let s = VerpnSimple::new(p(q), n, i).unwrap();
                    let threshold = kb.vanishing_threshold(p(q), n, i).unwrap();
                    for (status, prov) in kb.exact_facts(p(q), s).unwrap() {
                        if status != SymStatus::Zero {
                            assert!(threshold.is_none_or(|t| prov.power < t), "p={q} n={n} i={i}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fact_table_parses_and_rejects_bad_rows() {
        let kb = KnowledgeBase::builtin();
        assert!(kb.facts().len() >= 5);
        assert!(kb.facts().iter().all(|f| !f.quote.is_empty()));
        let bad = "version = 1\n[[fact]]\np = 3\nn = 2\nindex = 9\npower = 2\nstatus = \"Zero\"\nquote = \"x\"\n";
        assert!(KnowledgeBase::from_toml(bad).is_err());
        let old = "version = 0\n";
        assert!(KnowledgeBase::from_toml(old).is_err());
        let inconsistent = "version = 1\n[[fact]]\np = 3\nn = 2\nindex = 1\npower = 2\nstatus = \"IsoSimple\"\nquote = \"x\"\n";
        assert!(KnowledgeBase::from_toml(inconsistent).is_err());
    }
}
