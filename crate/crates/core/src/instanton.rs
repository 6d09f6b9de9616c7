//! The instanton cobordism inequality and certified torus-knot families.
//!
//! For a winding-number-zero pattern whose lifted axis has rational
//! self-linking `l < −p/q < 0`, the 2-handle cobordism is negative definite,
//! and a torus knot `T(r,s)` can be added to the family whenever
//! `ρ(r,s) = q/(rs(prs−q))` is below `1/r`, `1/s`, `1/(prs−q)` and the
//! minimal Chern-Simons values of the manifolds already in play. Those
//! values are never computed here: they come from a [`TauOracle`] and every
//! one that is used is named in the certificate.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::matrix::IntMatrix;
use crate::arith::rational::{fraction_str, parse_rational, to_fraction_string, Rational};
use crate::error::{Error, Result};
use crate::seifert::{axis_self_linking, Pattern, SeifertForm};

/// Key for `τ(Y)`.
pub const TAU_Y: &str = "Y";

/// Key for `τ(+Σᵢ)` or `τ(−Σᵢ)`.
pub fn sigma_key(sign: char, i: usize) -> String {
    format!("{sign}Sigma_{i}")
}

/// Externally supplied lower bounds for minimal Chern-Simons invariants.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TauOracle {
    bounds: BTreeMap<String, Rational>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TauFile {
    bounds: BTreeMap<String, String>,
}

impl TauOracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a bound, which must lie in `(0, 1]`.
    pub fn insert(&mut self, key: impl Into<String>, value: Rational) -> Result<()> {
        let key = key.into();
        if !value.is_positive() || value > Rational::one() {
            return Err(Error::InvalidTau { key, value: to_fraction_string(&value) });
        }
        self.bounds.insert(key, value);
        Ok(())
    }

    pub fn with(mut self, key: impl Into<String>, value: Rational) -> Result<Self> {
        self.insert(key, value)?;
        Ok(self)
    }

    pub fn get(&self, key: &str) -> Result<&Rational> {
        self.bounds.get(key).ok_or_else(|| Error::MissingTau(key.to_string()))
    }

    pub fn contains(&self, key: &str) -> bool {
        self.bounds.contains_key(key)
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.bounds.keys().map(String::as_str)
    }

    /// Number of consecutive levels `i = 1, 2, …` with both `±Σᵢ` bounds.
    pub fn sigma_levels(&self) -> usize {
        (1..).take_while(|&i| self.contains(&sigma_key('+', i)) && self.contains(&sigma_key('-', i))).count()
    }

    /// Parses `{ "bounds": { "<key>": "a/b", … } }`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: TauFile = serde_json::from_str(text).map_err(|e| Error::Parse(format!("tau table: {e}")))?;
        let mut oracle = TauOracle::new();
        for (k, v) in file.bounds {
            oracle.insert(k, parse_rational(&v)?)?;
        }
        Ok(oracle)
    }

    pub fn to_json(&self) -> String {
        let file = TauFile { bounds: self.bounds.iter().map(|(k, v)| (k.clone(), to_fraction_string(v))).collect() };
        serde_json::to_string_pretty(&file).expect("serializable")
    }
}

/// `q / (rs(prs − q))`.
pub fn rho(r: i64, s: i64, p: i64, q: i64) -> Result<Rational> {
    if r < 2 || s < 2 || r.gcd(&s) != 1 {
        return Err(Error::DomainError(format!("(r,s) = ({r},{s}) must be coprime with r,s ≥ 2")));
    }
    if p < 1 || q < 1 {
        return Err(Error::DomainError(format!("(p,q) = ({p},{q}) must be positive")));
    }
    let rs = BigInt::from(r) * BigInt::from(s);
    let gap = BigInt::from(p) * &rs - BigInt::from(q);
    if !gap.is_positive() {
        return Err(Error::DomainError(format!("prs - q = {gap} must be positive")));
    }
    Ok(Rational::new(BigInt::from(q), rs * gap))
}

/// The geometric thresholds `1/r`, `1/s`, `1/(prs−q)`, by name.
fn geometric_thresholds(r: i64, s: i64, p: i64, q: i64) -> Vec<Threshold> {
    let gap = BigInt::from(p) * BigInt::from(r) * BigInt::from(s) - BigInt::from(q);
    vec![
        Threshold { name: "1/r".into(), value: Rational::new(BigInt::one(), BigInt::from(r)) },
        Threshold { name: "1/s".into(), value: Rational::new(BigInt::one(), BigInt::from(s)) },
        Threshold { name: "1/(prs-q)".into(), value: Rational::new(BigInt::one(), gap) },
    ]
}

/// Whether `ρ(r,s)` is strictly below every threshold, with the margin
/// `min − ρ`.
pub fn criterion_holds(r: i64, s: i64, p: i64, q: i64, taus: &[Rational]) -> Result<(bool, Rational)> {
    let value = rho(r, s, p, q)?;
    if let Some(t) = taus.iter().find(|t| !t.is_positive() || **t > Rational::one()) {
        return Err(Error::DomainError(format!("tau bound {} outside (0,1]", to_fraction_string(t))));
    }
    let min = geometric_thresholds(r, s, p, q)
        .into_iter()
        .map(|t| t.value)
        .chain(taus.iter().cloned())
        .min()
        .expect("nonempty");
    Ok((value < min, min - value))
}

/// `p = 1` and the smallest odd `q` with `1/q < −l`.
pub fn select_pq(l: &Rational) -> Result<(i64, i64)> {
    if !l.is_negative() {
        return Err(Error::NonNegativeL(to_fraction_string(l)));
    }
    // 1/q < −l ⟺ q > −1/l
    let bound = (-l).recip();
    let mut q = bound.floor().to_integer() + BigInt::one();
    if q.is_even() {
        q += 1;
    }
    let q = q.to_i64().ok_or_else(|| Error::DomainError(format!("q = {q} too large")))?;
    Ok((1, q))
}

fn check_pq(l: &Rational, p: i64, q: i64) -> std::result::Result<(), String> {
    if p < 1 || q < 1 {
        return Err(format!("(p,q) = ({p},{q}) must be positive"));
    }
    if p % 2 == 0 || q % 2 == 0 {
        return Err(format!("(p,q) = ({p},{q}) must both be odd"));
    }
    if p.gcd(&q) != 1 {
        return Err(format!("(p,q) = ({p},{q}) must be coprime"));
    }
    let bound = -Rational::new(BigInt::from(p), BigInt::from(q));
    if !(l < &bound) {
        return Err(format!("need l < -p/q, got l = {} and -p/q = {}", to_fraction_string(l), to_fraction_string(&bound)));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Threshold {
    pub name: String,
    #[serde(with = "fraction_str")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyEntry {
    pub r: i64,
    pub s: i64,
    #[serde(with = "fraction_str")]
    pub rho: Rational,
    pub thresholds: Vec<Threshold>,
    pub tau_keys_consumed: Vec<String>,
}

/// A checkable record of one run of the recursive family construction.
///
/// The pattern's Seifert matrix and axis vector are carried along so that
/// `l` itself can be re-derived during verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankCertificate {
    pub pattern: String,
    pub seifert_matrix: Vec<Vec<i64>>,
    pub axis_linking: Vec<i64>,
    #[serde(with = "fraction_str")]
    pub l: Rational,
    pub mirror_used: bool,
    pub p: i64,
    pub q: i64,
    pub entries: Vec<FamilyEntry>,
}

impl RankCertificate {
    /// Canonical JSON: sorted keys, rationals as `"a/b"`.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("serializable");
        serde_json::to_string_pretty(&value).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("certificate: {e}")))
    }
}

/// Thresholds and consumed keys for the `i`-th entry (1-based).
fn entry_thresholds(r: i64, s: i64, p: i64, q: i64, i: usize, oracle: &TauOracle) -> Result<(Vec<Threshold>, Vec<String>)> {
    let mut thresholds = geometric_thresholds(r, s, p, q);
    let mut keys = vec![TAU_Y.to_string()];
    for j in 1..i {
        keys.push(sigma_key('+', j));
        keys.push(sigma_key('-', j));
    }
    for k in &keys {
        thresholds.push(Threshold { name: format!("tau({k})"), value: oracle.get(k)?.clone() });
    }
    Ok((thresholds, keys))
}

fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| Error::DomainError(format!("{x} does not fit in 64 bits")))
}

/// Builds an `n`-entry certificate. `pq` overrides the automatic choice of
/// `(p, q)`.
pub fn generate_family_with(pat: &Pattern, n: usize, oracle: &TauOracle, pq: Option<(i64, i64)>) -> Result<RankCertificate> {
    let raw = axis_self_linking(pat)?;
    if raw.is_zero() {
        return Err(Error::ZeroLinking);
    }
    let mirror_used = raw.is_positive();
    let l = if mirror_used { -raw } else { raw };
    let (p, q) = match pq {
        Some((p, q)) => {
            check_pq(&l, p, q).map_err(Error::DomainError)?;
            (p, q)
        }
        None => select_pq(&l)?,
    };

    let mut entries: Vec<FamilyEntry> = Vec::with_capacity(n);
    for i in 1..=n {
        // Lexicographic search over (r, s) with r < s. For r = 2, ρ → 0 as
        // s → ∞, so a pick with r = 2 always exists and is lexicographically
        // smallest.
        let r = 2i64;
        let mut s = r + 1;
        let entry = loop {
            let taken = entries.iter().any(|e| (e.r, e.s) == (r, s));
            if !taken && r.gcd(&s) == 1 && p * r * s > q {
                let (thresholds, keys) = entry_thresholds(r, s, p, q, i, oracle)?;
                let value = rho(r, s, p, q)?;
                if thresholds.iter().all(|t| value < t.value) {
                    break FamilyEntry { r, s, rho: value, thresholds, tau_keys_consumed: keys };
                }
            }
            s += 1;
        };
        entries.push(entry);
    }

    Ok(RankCertificate {
        pattern: pat.name.clone(),
        seifert_matrix: pat
            .seifert
            .matrix()
            .to_rows()
            .iter()
            .map(|row| row.iter().map(to_i64).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?,
        axis_linking: pat.axis_linking.iter().map(to_i64).collect::<Result<_>>()?,
        l,
        mirror_used,
        p,
        q,
        entries,
    })
}

pub fn generate_family(pat: &Pattern, n: usize, oracle: &TauOracle) -> Result<RankCertificate> {
    generate_family_with(pat, n, oracle, None)
}

/// Outcome of re-checking a certificate; `failure` names the first check
/// that did not hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub failure: Option<String>,
}

impl Verification {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

/// Re-derives every quantity in the certificate and checks every inequality
/// exactly.
pub fn verify_certificate(cert: &RankCertificate, oracle: &TauOracle) -> Verification {
    match verify_inner(cert, oracle) {
        Ok(()) => Verification { failure: None },
        Err(msg) => Verification { failure: Some(msg) },
    }
}

fn verify_inner(cert: &RankCertificate, oracle: &TauOracle) -> std::result::Result<(), String> {
    let rows: Vec<Vec<BigInt>> =
        cert.seifert_matrix.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let matrix = IntMatrix::from_rows(&rows).map_err(|e| format!("seifert_matrix: {e}"))?;
    let seifert = SeifertForm::new(matrix).map_err(|e| format!("seifert_matrix: {e}"))?;
    let pattern = Pattern::new(&cert.pattern, seifert, 0, cert.axis_linking.iter().map(|&x| BigInt::from(x)).collect())
        .map_err(|e| format!("axis_linking: {e}"))?;
    let raw = axis_self_linking(&pattern).map_err(|e| format!("l: {e}"))?;
    if raw.is_zero() {
        return Err("l = 0: the criterion does not apply".into());
    }
    if cert.mirror_used != raw.is_positive() {
        return Err(format!("mirror_used = {} but the pattern has l = {}", cert.mirror_used, to_fraction_string(&raw)));
    }
    let l = if cert.mirror_used { -raw } else { raw };
    if l != cert.l {
        return Err(format!("l recorded as {} but recomputes to {}", to_fraction_string(&cert.l), to_fraction_string(&l)));
    }
    check_pq(&cert.l, cert.p, cert.q)?;
    if cert.entries.is_empty() {
        return Err("certificate has no entries".into());
    }

    for (idx, e) in cert.entries.iter().enumerate() {
        let i = idx + 1;
        let at = format!("entry {i} ({},{})", e.r, e.s);
        let value = rho(e.r, e.s, cert.p, cert.q).map_err(|err| format!("{at}: {err}"))?;
        if cert.entries[..idx].iter().any(|f| (f.r, f.s) == (e.r, e.s) || (f.r, f.s) == (e.s, e.r)) {
            return Err(format!("{at}: repeats an earlier torus knot"));
        }
        if value != e.rho {
            return Err(format!("{at}: rho recorded as {} but is {}", to_fraction_string(&e.rho), to_fraction_string(&value)));
        }
        let (thresholds, keys) = entry_thresholds(e.r, e.s, cert.p, cert.q, i, oracle).map_err(|err| format!("{at}: {err}"))?;
        if keys != e.tau_keys_consumed {
            return Err(format!("{at}: consumed keys {:?}, expected {:?}", e.tau_keys_consumed, keys));
        }
        if thresholds != e.thresholds {
            return Err(format!("{at}: thresholds do not match their recomputation"));
        }
        if let Some(t) = thresholds.iter().find(|t| value >= t.value) {
            return Err(format!(
                "{at}: rho = {} is not below {} = {}",
                to_fraction_string(&value),
                t.name,
                to_fraction_string(&t.value)
            ));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    SignatureJumps,
    Instanton,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    InfiniteRank { route: Route, mirror_used: bool, l: Option<Rational>, certificate: Option<RankCertificate> },
    /// `w = 0` and `l = 0`: neither route applies. This is not a claim of
    /// finite rank.
    Inconclusive { l: Rational },
}

impl Verdict {
    pub fn is_infinite_rank(&self) -> bool {
        matches!(self, Verdict::InfiniteRank { .. })
    }
}

/// Classifies a pattern. With an oracle, a certificate is attached whose
/// length is one more than the number of complete `±Σᵢ` levels supplied.
pub fn verdict(pat: &Pattern, oracle: Option<&TauOracle>) -> Verdict {
    if pat.winding != 0 {
        return Verdict::InfiniteRank { route: Route::SignatureJumps, mirror_used: false, l: None, certificate: None };
    }
    // a valid Seifert form has det(S+Sᵀ) odd, so l is always defined
    let l = axis_self_linking(pat).expect("S + Sᵀ is nonsingular");
    if l.is_zero() {
        return Verdict::Inconclusive { l };
    }
    let certificate = oracle.and_then(|o| generate_family(pat, o.sigma_levels() + 1, o).ok());
    Verdict::InfiniteRank { route: Route::Instanton, mirror_used: l.is_positive(), l: Some(l), certificate }
}
