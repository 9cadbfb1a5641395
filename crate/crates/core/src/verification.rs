//! Executable checks for the lower bounds on the maximum order complexity of
//! Thue-Morse and pattern sequences along the squares.
//!
//! The bounds rest on a handful of digit identities: for `i` below a
//! threshold, shifting the base of `(i + 2^a)^2` between two powers of two
//! does not change the term, while one designated `i` just above the
//! threshold does. Each identity is checked on exact integers, and each bound
//! is checked against measured complexities over a range of prefix lengths.
//! Every identity check has a `Mutated` control that perturbs it so that it
//! must fail.

use std::fmt;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitseq::BitSeq;
use crate::complexity::{
    default_dmax, expansion_complexity, linear_complexity_profile, moc_fast, moc_naive,
    moc_profile,
};
use crate::error::{Error, Result};
use crate::f2algebra::{F2Bivariate, F2Series};
use crate::sequences::{ones_count, pattern_count, prefix, BigIndex, SequenceSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// `t((i + 2^{l+1})^2) = t((i + 2^{l+2})^2)` below the threshold.
    Ti,
    /// The two Thue-Morse terms at `i = 2^l` differ.
    Contra,
    /// `p((i + 2^{l+2k-1})^2) = p((i + 2^{l+2k})^2)` below the threshold.
    Sk,
    K2,
    KEven,
    K3,
    KOdd,
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdentityId::Ti => "TI",
            IdentityId::Contra => "CONTRA",
            IdentityId::Sk => "SK",
            IdentityId::K2 => "K2",
            IdentityId::KEven => "KEVEN",
            IdentityId::K3 => "K3",
            IdentityId::KOdd => "KODD",
        })
    }
}

/// Whether a check runs as stated or as its negative control.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Control {
    #[default]
    Faithful,
    Mutated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub l: u32,
    pub k: Option<u32>,
    pub control: Control,
    /// Values of `i` examined.
    pub checked_range: RangeInclusive<u64>,
    pub holds: bool,
    pub first_failure: Option<u64>,
}

impl IdentityReport {
    fn new(id: IdentityId, l: u32, k: Option<u32>, control: Control, range: RangeInclusive<u64>) -> Self {
        IdentityReport {
            id,
            l,
            k,
            control,
            checked_range: range,
            holds: true,
            first_failure: None,
        }
    }

    fn fail_at(&mut self, i: u64) {
        if self.holds {
            self.holds = false;
            self.first_failure = Some(i);
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let id = match self.control {
            Control::Faithful => self.id.to_string(),
            Control::Mutated => format!("{}~MUTATED", self.id),
        };
        let params = match self.k {
            Some(k) => format!("k={k},l={}", self.l),
            None => format!("l={}", self.l),
        };
        let locus = self
            .first_failure
            .map_or_else(|| "-".to_string(), |i| format!("i={i}"));
        write!(
            f,
            "id={id} params={params} range=i:{}..={} status={} locus={locus}",
            self.checked_range.start(),
            self.checked_range.end(),
            if self.holds { "pass" } else { "fail" }
        )
    }
}

fn big(v: u64) -> BigIndex {
    BigIndex::from(v)
}

fn p2(e: u32) -> BigIndex {
    BigIndex::pow2(e)
}

/// `floor(sqrt(2^e - 1))`.
fn isqrt_pow2_minus_one(e: u32) -> u64 {
    assert!(e < 127);
    ((1u128 << e) - 1).isqrt() as u64
}

fn parity(v: u64) -> bool {
    v & 1 == 1
}

pub fn check_ti(l: u32) -> Result<IdentityReport> {
    check_ti_with(l, Control::Faithful)
}

/// Equal Thue-Morse terms at `(i + 2^{l+1})^2` and `(i + 2^{l+2})^2` for
/// `0 <= i <= floor(sqrt(2^{l+2} - 1))`, each with ones count
/// `s_1(i^2) + s_1(i) + 1`. The mutated control moves the first base to
/// `2^{l+1} + 1`.
pub fn check_ti_with(l: u32, control: Control) -> Result<IdentityReport> {
    if l < 2 {
        return Err(Error::InvalidParameter(format!("identity TI needs l >= 2, got {l}")));
    }
    let upper = isqrt_pow2_minus_one(l + 2);
    let mut report = IdentityReport::new(IdentityId::Ti, l, None, control, 0..=upper);
    let base1 = match control {
        Control::Faithful => p2(l + 1),
        Control::Mutated => p2(l + 1) + big(1),
    };
    let base2 = p2(l + 2);
    for i in 0..=upper {
        let lhs = ones_count(&(&big(i) + &base1).square());
        let rhs = ones_count(&(&big(i) + &base2).square());
        let mut ok = parity(lhs) == parity(rhs);
        if control == Control::Faithful {
            let derived = ones_count(&big(i).square()) + ones_count(&big(i)) + 1;
            ok &= lhs == derived && rhs == derived;
        }
        if !ok {
            report.fail_at(i);
            break;
        }
    }
    Ok(report)
}

pub fn check_contra(l: u32) -> Result<IdentityReport> {
    check_contra_with(l, Control::Faithful)
}

/// Different terms at `(2^l + 2^{l+1})^2` and `(2^l + 2^{l+2})^2`, whose
/// ones counts are 2 and 3. The mutated control uses `i = 0`, which lies
/// inside the range where TI makes the terms equal.
pub fn check_contra_with(l: u32, control: Control) -> Result<IdentityReport> {
    if l < 2 {
        return Err(Error::InvalidParameter(format!(
            "identity CONTRA needs l >= 2, got {l}"
        )));
    }
    let (i, i_label) = match control {
        Control::Faithful => (p2(l), 1u64 << l.min(63)),
        Control::Mutated => (big(0), 0),
    };
    let mut report = IdentityReport::new(IdentityId::Contra, l, None, control, i_label..=i_label);
    let a = ones_count(&(&i + &p2(l + 1)).square());
    let b = ones_count(&(&i + &p2(l + 2)).square());
    let mut ok = parity(a) != parity(b);
    if control == Control::Faithful {
        ok &= a == 2 && b == 3;
    }
    if !ok {
        report.fail_at(i_label);
    }
    Ok(report)
}

fn check_k_l(k: u32, l: u32) -> Result<()> {
    if k < 2 || l < 1 {
        return Err(Error::InvalidParameter(format!(
            "pattern identities need k >= 2 and l >= 1, got k={k}, l={l}"
        )));
    }
    Ok(())
}

pub fn check_sk(k: u32, l: u32) -> Result<IdentityReport> {
    check_sk_with(k, l, Control::Faithful)
}

/// Equal pattern-sequence terms at `(i + 2^{l+2k-1})^2` and
/// `(i + 2^{l+2k})^2` for `0 <= i <= floor(sqrt(2^{l+2k-1} - 1))`, each with
/// block count `s_k(i^2) + s_k(i)`. The mutated control moves the first base
/// to `2^{l+2k-1} + 1`.
pub fn check_sk_with(k: u32, l: u32, control: Control) -> Result<IdentityReport> {
    check_k_l(k, l)?;
    let upper = isqrt_pow2_minus_one(l + 2 * k - 1);
    let mut report = IdentityReport::new(IdentityId::Sk, l, Some(k), control, 0..=upper);
    let base1 = match control {
        Control::Faithful => p2(l + 2 * k - 1),
        Control::Mutated => p2(l + 2 * k - 1) + big(1),
    };
    let base2 = p2(l + 2 * k);
    for i in 0..=upper {
        let lhs = pattern_count(&(&big(i) + &base1).square(), k);
        let rhs = pattern_count(&(&big(i) + &base2).square(), k);
        let mut ok = parity(lhs) == parity(rhs);
        if control == Control::Faithful {
            let derived = pattern_count(&big(i).square(), k) + pattern_count(&big(i), k);
            ok &= lhs == derived && rhs == derived;
        }
        if !ok {
            report.fail_at(i);
            break;
        }
    }
    Ok(report)
}

/// The designated index just above the SK threshold at which the two
/// pattern-sequence terms differ, with the case it belongs to.
pub fn separator_index(k: u32, l: u32) -> Result<(IdentityId, BigIndex)> {
    check_k_l(k, l)?;
    Ok(match k {
        2 => (IdentityId::K2, p2(l + 2)),
        3 => (IdentityId::K3, big(7) * p2(l + 3)),
        k if k % 2 == 0 => (IdentityId::KEven, (p2(k) - big(1)) * p2(l)),
        k => (IdentityId::KOdd, (p2(k - 1) - big(1)) * p2(l + 2)),
    })
}

/// Odd parts of the two squared indices in closed form, with their block
/// counts as derived by hand.
fn separator_closed_forms(id: IdentityId, k: u32) -> [(BigIndex, u64); 2] {
    let one = || big(1);
    match id {
        IdentityId::K2 => [(one() + p2(3), 0), (one() + p2(3) + p2(4), 1)],
        IdentityId::K3 => [(one() + p2(7) - p2(3), 2), (one() + p2(8) - p2(5), 1)],
        IdentityId::KEven => [
            (one() + p2(3 * k) - p2(k + 1) + p2(4 * k - 2), k as u64),
            (
                one() + (p2(2 * k) - p2(k + 1)) + (p2(3 * k + 1) - p2(2 * k + 1)) + p2(4 * k),
                1,
            ),
        ],
        IdentityId::KOdd => [
            (one() + (p2(3 * k - 3) - p2(k)) + p2(4 * k - 6), k as u64 - 2),
            (
                one() + (p2(2 * k - 2) - p2(k)) + (p2(3 * k - 2) - p2(2 * k - 1)) + p2(4 * k - 4),
                0,
            ),
        ],
        _ => unreachable!("not a separator identity"),
    }
}

pub fn check_separator(k: u32, l: u32) -> Result<IdentityReport> {
    check_separator_with(k, l, Control::Faithful)
}

/// At the designated index `i*` (see [`separator_index`]) the terms at
/// `(i* + 2^{l+2k-1})^2` and `(i* + 2^{l+2k})^2` differ. Also confirms that
/// each squared index is its closed form times a power of two and that the
/// block counts match the hand-derived values. The mutated control uses
/// `i* = 0`.
pub fn check_separator_with(k: u32, l: u32, control: Control) -> Result<IdentityReport> {
    let (id, star) = separator_index(k, l)?;
    let i = match control {
        Control::Faithful => star,
        Control::Mutated => big(0),
    };
    let label = i.to_u128().map_or(u64::MAX, |v| v.min(u64::MAX as u128) as u64);
    let mut report = IdentityReport::new(id, l, Some(k), control, label..=label);

    let sq = [(&i + &p2(l + 2 * k - 1)).square(), (&i + &p2(l + 2 * k)).square()];
    let counts = [pattern_count(&sq[0], k), pattern_count(&sq[1], k)];
    let mut ok = parity(counts[0]) != parity(counts[1]);
    if control == Control::Faithful {
        for (n, (closed, stated)) in sq.iter().zip(separator_closed_forms(id, k)) {
            let tz = n.trailing_zeros().unwrap_or(0) as u32;
            let odd_part = BigIndex::from(n.as_biguint() >> tz);
            ok &= odd_part == closed && pattern_count(&closed, k) == stated;
            ok &= pattern_count(n, k) == stated;
        }
    }
    if !ok {
        report.fail_at(label);
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// `M(T', N) >= sqrt(2N/5)` for `N >= 21`.
    Thm1,
    /// `M(P'_k, N) >= sqrt(N/8)` for `N >= 2^{2k+2}`.
    Thm2,
    /// `M(T, N) >= N/5 + 1` for `N >= 4`.
    SuwiBound,
    /// `E(S, N) <= sqrt(2N)` for every sequence.
    Remark4,
    /// `M(S, N) <= L(S, N)`.
    MocBelowLc,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Thm1 => "THM1",
            BoundKind::Thm2 => "THM2",
            BoundKind::SuwiBound => "SUWI",
            BoundKind::Remark4 => "EC_SQRT2N",
            BoundKind::MocBelowLc => "MOC_LE_LC",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub theorem: BoundKind,
    pub label: String,
    pub n_range: RangeInclusive<usize>,
    /// Smallest slack over the range (measured minus bound for lower
    /// bounds, bound minus measured for upper bounds).
    pub margin: f64,
    pub violations: Vec<usize>,
}

impl BoundReport {
    fn new(theorem: BoundKind, label: String, n_range: RangeInclusive<usize>) -> Self {
        BoundReport {
            theorem,
            label,
            n_range,
            margin: f64::INFINITY,
            violations: Vec::new(),
        }
    }

    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    fn record(&mut self, n: usize, slack: f64, ok: bool) {
        self.margin = self.margin.min(slack);
        if !ok {
            self.violations.push(n);
        }
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let locus = if self.violations.is_empty() {
            "-".to_string()
        } else {
            let shown: Vec<String> = self.violations.iter().take(10).map(|n| format!("N={n}")).collect();
            let more = if self.violations.len() > 10 { ",..." } else { "" };
            format!("{}{more}", shown.join(","))
        };
        write!(
            f,
            "id={} params={},N={}..={} status={} margin={:.6} locus={locus}",
            self.theorem,
            self.label,
            self.n_range.start(),
            self.n_range.end(),
            if self.holds() { "pass" } else { "fail" },
            self.margin
        )
    }
}

/// Lower bound check `M >= sqrt(num * N / den)` carried out in integers as
/// `den * M^2 >= num * N`.
fn sqrt_lower_bound(
    kind: BoundKind,
    label: String,
    s: &BitSeq,
    range: RangeInclusive<usize>,
    num: u64,
    den: u64,
) -> Result<BoundReport> {
    let profile = moc_profile(s, *range.end())?;
    let mut report = BoundReport::new(kind, label, range.clone());
    for n in range {
        let m = profile.points[n - 1].1;
        let bound = ((num * n as u64) as f64 / den as f64).sqrt();
        report.record(n, m as f64 - bound, den * m * m >= num * n as u64);
    }
    Ok(report)
}

fn nonempty(range: &RangeInclusive<usize>) -> Result<()> {
    if range.is_empty() {
        return Err(Error::InvalidParameter(format!("empty range {range:?}")));
    }
    Ok(())
}

/// Measured `M(T', N)` against `sqrt(2N/5)`.
pub fn check_theorem1(range: RangeInclusive<usize>) -> Result<BoundReport> {
    nonempty(&range)?;
    if *range.start() < 21 {
        return Err(Error::InvalidParameter("the bound for T' starts at N = 21".into()));
    }
    let s = prefix(&SequenceSpec::thue_morse_squares(), *range.end())?;
    sqrt_lower_bound(BoundKind::Thm1, "seq=T'".into(), &s, range, 2, 5)
}

/// Measured `M(P'_k, N)` against `sqrt(N/8)`.
pub fn check_theorem2(k: u32, range: RangeInclusive<usize>) -> Result<BoundReport> {
    nonempty(&range)?;
    if k < 2 {
        return Err(Error::InvalidParameter(format!("the bound for P'_k needs k >= 2, got {k}")));
    }
    let threshold = 1usize << (2 * k + 2);
    if *range.start() < threshold {
        return Err(Error::InvalidParameter(format!(
            "the bound for P'_{k} starts at N = {threshold}"
        )));
    }
    let s = prefix(&SequenceSpec::pattern_squares(k)?, *range.end())?;
    sqrt_lower_bound(BoundKind::Thm2, format!("seq=P'_{k}"), &s, range, 1, 8)
}

/// Measured `M(T, N)` against `N/5 + 1`.
pub fn check_suwi_bound(range: RangeInclusive<usize>) -> Result<BoundReport> {
    nonempty(&range)?;
    if *range.start() < 4 {
        return Err(Error::InvalidParameter("the bound for T starts at N = 4".into()));
    }
    let s = prefix(&SequenceSpec::thue_morse(), *range.end())?;
    let profile = moc_profile(&s, *range.end())?;
    let mut report = BoundReport::new(BoundKind::SuwiBound, "seq=T".into(), range.clone());
    for n in range {
        let m = profile.points[n - 1].1;
        report.record(n, m as f64 - (n as f64 / 5.0 + 1.0), 5 * m >= n as u64 + 5);
    }
    Ok(report)
}

/// Expansion complexity of `s` at each `N` in `ns` against `sqrt(2N)`.
pub fn check_remark4(label: &str, s: &BitSeq, ns: &[usize]) -> Result<BoundReport> {
    let (lo, hi) = match (ns.iter().min(), ns.iter().max()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => return Err(Error::InvalidParameter("no prefix lengths given".into())),
    };
    let mut report = BoundReport::new(BoundKind::Remark4, format!("seq={label}"), lo..=hi);
    for &n in ns {
        let e = match expansion_complexity(s, n, default_dmax(n))? {
            Some(r) => r.value as u64,
            None => u64::MAX,
        };
        let ok = e != u64::MAX && e * e <= 2 * n as u64;
        report.record(n, (2.0 * n as f64).sqrt() - e as f64, ok);
    }
    Ok(report)
}

/// `M(s, N) <= L(s, N)` for every `N` in the range.
pub fn check_moc_below_lc(label: &str, s: &BitSeq, range: RangeInclusive<usize>) -> Result<BoundReport> {
    nonempty(&range)?;
    let moc = moc_profile(s, *range.end())?;
    let lc = linear_complexity_profile(s, *range.end())?;
    let mut report = BoundReport::new(BoundKind::MocBelowLc, format!("seq={label}"), range.clone());
    for n in range {
        let (m, l) = (moc.points[n - 1].1, lc.points[n - 1].1);
        report.record(n, l as f64 - m as f64, m <= l);
    }
    Ok(report)
}

/// `(x+1)^3 y^2 + (x+1)^2 y + x`, which annihilates the Thue-Morse
/// generating function.
pub fn thue_morse_annihilator() -> F2Bivariate {
    let x1 = F2Bivariate::x() + F2Bivariate::one();
    let y = F2Bivariate::y();
    &(&x1.pow(3) * &y.pow(2)) + &(&x1.pow(2) * &y) + F2Bivariate::x()
}

/// Whether `h(x, G_T(x)) = 0 mod x^n`.
pub fn check_annihilator(h: &F2Bivariate, n: usize) -> Result<bool> {
    let t = prefix(&SequenceSpec::thue_morse(), n)?;
    Ok(h.eval(&F2Series::from_bitseq(&t, n)?)?.is_zero())
}

pub fn check_annihilator_t(n: usize) -> Result<bool> {
    check_annihilator(&thue_morse_annihilator(), n)
}

/// Parameters of a full verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Largest `l` for TI and CONTRA.
    pub lmax: u32,
    /// Largest `l` for SK and the separators.
    pub sk_lmax: u32,
    /// Largest `k` for SK and the separators.
    pub kmax: u32,
    pub theorem1_nmax: usize,
    /// Theorem 2 runs for `k = 2..=theorem2_kmax` up to
    /// `min(theorem2_nmax, 2^{2k+8})`.
    pub theorem2_kmax: u32,
    pub theorem2_nmax: usize,
    pub suwi_nmax: usize,
    pub annihilator_n: usize,
    /// Random strings for the naive/fast oracle comparison.
    pub oracle_samples: usize,
    pub oracle_max_len: usize,
    pub seed: u64,
    /// Run every identity as its negative control instead.
    pub mutate: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            lmax: 20,
            sk_lmax: 12,
            kmax: 8,
            theorem1_nmax: 100_000,
            theorem2_kmax: 5,
            theorem2_nmax: 100_000,
            suwi_nmax: 5000,
            annihilator_n: 1 << 14,
            oracle_samples: 500,
            oracle_max_len: 1000,
            seed: 0x5eed,
            mutate: false,
        }
    }
}

/// One line of a suite report.
#[derive(Clone, Debug, PartialEq)]
pub enum SuiteRecord {
    Identity(IdentityReport),
    Bound(BoundReport),
    Check {
        id: &'static str,
        params: String,
        holds: bool,
        locus: Option<String>,
    },
}

impl SuiteRecord {
    pub fn holds(&self) -> bool {
        match self {
            SuiteRecord::Identity(r) => r.holds,
            SuiteRecord::Bound(r) => r.holds(),
            SuiteRecord::Check { holds, .. } => *holds,
        }
    }
}

impl fmt::Display for SuiteRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuiteRecord::Identity(r) => r.fmt(f),
            SuiteRecord::Bound(r) => r.fmt(f),
            SuiteRecord::Check {
                id,
                params,
                holds,
                locus,
            } => write!(
                f,
                "id={id} params={params} status={} locus={}",
                if *holds { "pass" } else { "fail" },
                locus.as_deref().unwrap_or("-")
            ),
        }
    }
}

/// Runs every identity and bound check. Records come back in a fixed order.
/// `on_record` sees each record as soon as it is produced.
pub fn run_suite(cfg: &SuiteConfig, mut on_record: impl FnMut(&SuiteRecord)) -> Result<Vec<SuiteRecord>> {
    let control = if cfg.mutate {
        Control::Mutated
    } else {
        Control::Faithful
    };
    let mut out = Vec::new();
    let mut emit = |r: SuiteRecord, out: &mut Vec<SuiteRecord>| {
        on_record(&r);
        out.push(r);
    };

    for l in 2..=cfg.lmax {
        emit(SuiteRecord::Identity(check_ti_with(l, control)?), &mut out);
        emit(SuiteRecord::Identity(check_contra_with(l, control)?), &mut out);
    }
    for k in 2..=cfg.kmax {
        for l in 1..=cfg.sk_lmax {
            emit(SuiteRecord::Identity(check_sk_with(k, l, control)?), &mut out);
            emit(SuiteRecord::Identity(check_separator_with(k, l, control)?), &mut out);
        }
    }

    let h = if cfg.mutate {
        let mut h = thue_morse_annihilator();
        h.toggle(1, 0);
        h
    } else {
        thue_morse_annihilator()
    };
    let n = cfg.annihilator_n;
    emit(
        SuiteRecord::Check {
            id: "ANNIHILATOR_T",
            params: format!("h={h},N={n}"),
            holds: check_annihilator(&h, n)?,
            locus: None,
        },
        &mut out,
    );

    if cfg.theorem1_nmax >= 21 {
        emit(SuiteRecord::Bound(check_theorem1(21..=cfg.theorem1_nmax)?), &mut out);
    }
    for k in 2..=cfg.theorem2_kmax {
        let lo = 1usize << (2 * k + 2);
        let hi = cfg.theorem2_nmax.min(1usize << (2 * k + 8));
        if hi >= lo {
            emit(SuiteRecord::Bound(check_theorem2(k, lo..=hi)?), &mut out);
        }
    }
    if cfg.suwi_nmax >= 4 {
        emit(SuiteRecord::Bound(check_suwi_bound(4..=cfg.suwi_nmax)?), &mut out);
    }

    let tsq_len = cfg.theorem1_nmax.max(1);
    let tsq = prefix(&SequenceSpec::thue_morse_squares(), tsq_len)?;
    emit(SuiteRecord::Bound(check_moc_below_lc("T'", &tsq, 1..=tsq_len)?), &mut out);

    let ec_ns: Vec<usize> = (1..=64).chain((80..=512).step_by(16)).collect();
    let t = prefix(&SequenceSpec::thue_morse(), 512)?;
    emit(SuiteRecord::Bound(check_remark4("T", &t, &ec_ns)?), &mut out);
    let tsq512 = prefix(&SequenceSpec::thue_morse_squares(), 512)?;
    emit(SuiteRecord::Bound(check_remark4("T'", &tsq512, &ec_ns)?), &mut out);

    let ec_t_max = (1..=256)
        .map(|n| expansion_complexity(&t, n, default_dmax(n)).map(|r| r.map_or(usize::MAX, |r| r.value)))
        .collect::<Result<Vec<_>>>()?;
    let worst = ec_t_max.iter().enumerate().max_by_key(|&(_, v)| *v).unwrap();
    emit(
        SuiteRecord::Check {
            id: "EC_T_LE_5",
            params: "N=1..=256".into(),
            holds: *worst.1 <= 5,
            locus: (*worst.1 > 5).then(|| format!("N={}", worst.0 + 1)),
        },
        &mut out,
    );

    emit(oracle_sample(cfg)?, &mut out);
    Ok(out)
}

/// Naive and suffix-automaton maximum order complexity on seeded random
/// strings, some of them biased towards long runs.
fn oracle_sample(cfg: &SuiteConfig) -> Result<SuiteRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut mismatch = None;
    for sample in 0..cfg.oracle_samples {
        let n = rng.gen_range(1..=cfg.oracle_max_len.max(1));
        let p = [0.5, 0.1, 0.02][sample % 3];
        let s: BitSeq = (0..n).map(|_| rng.gen_bool(p)).collect();
        let fast = moc_fast(&s, n)?;
        let naive = moc_naive(&s, n)?;
        let witness_ok = fast.witness.is_none_or(|w| w.replay(&s, n));
        if fast.value != naive.value || !witness_ok {
            mismatch = Some(format!("sample={sample},N={n}"));
            break;
        }
    }
    Ok(SuiteRecord::Check {
        id: "MOC_ORACLE",
        params: format!(
            "seed={},samples={},max_len={}",
            cfg.seed, cfg.oracle_samples, cfg.oracle_max_len
        ),
        holds: mismatch.is_none(),
        locus: mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ti_small_and_large() {
        let r = check_ti(2).unwrap();
        assert!(r.holds);
        assert_eq!(r.checked_range, 0..=3);
        let r = check_ti(10).unwrap();
        assert!(r.holds);
        assert_eq!(r.checked_range, 0..=63);
        assert!(check_ti(1).is_err());
    }

    #[test]
    fn ti_mutation_fails() {
        let r = check_ti_with(4, Control::Mutated).unwrap();
        assert!(!r.holds);
        assert!(r.first_failure.is_some());
    }

    #[test]
    fn contra_counts() {
        for l in [2, 5, 20] {
            assert!(check_contra(l).unwrap().holds, "l = {l}");
            assert!(!check_contra_with(l, Control::Mutated).unwrap().holds);
        }
        // l = 2: (4 + 8)^2 = 144 = 10010000b, (4 + 16)^2 = 400 = 110010000b
        assert_eq!(ones_count(&big(144)), 2);
        assert_eq!(ones_count(&big(400)), 3);
        assert!(check_contra(1).is_err());
    }

    #[test]
    fn sk_instances() {
        for (k, l) in [(2, 1), (3, 2), (5, 1)] {
            assert!(check_sk(k, l).unwrap().holds, "k={k} l={l}");
        }
        assert!(!check_sk_with(3, 2, Control::Mutated).unwrap().holds);
        assert!(check_sk(1, 1).is_err());
        assert!(check_sk(2, 0).is_err());
    }

    #[test]
    fn separator_cases() {
        let cases = [
            (2, IdentityId::K2, [0, 1]),
            (3, IdentityId::K3, [2, 1]),
            (4, IdentityId::KEven, [4, 1]),
            (5, IdentityId::KOdd, [3, 0]),
        ];
        for (k, id, stated) in cases {
            let r = check_separator(k, 1).unwrap();
            assert_eq!(r.id, id);
            assert!(r.holds, "k = {k}");
            let counts: Vec<u64> = separator_closed_forms(id, k).iter().map(|(_, c)| *c).collect();
            assert_eq!(counts, stated);
            assert!(!check_separator_with(k, 1, Control::Mutated).unwrap().holds);
        }
    }

    #[test]
    fn theorem1_threshold() {
        let r = check_theorem1(21..=21).unwrap();
        assert!(r.holds());
        assert!(check_theorem1(20..=30).is_err());
        let r = check_theorem1(21..=1000).unwrap();
        assert!(r.holds(), "{r}");
    }

    #[test]
    fn theorem2_small() {
        let r = check_theorem2(2, 64..=2048).unwrap();
        assert!(r.holds(), "{r}");
        assert!(check_theorem2(2, 63..=100).is_err());
    }

    #[test]
    fn suwi_threshold() {
        let r = check_suwi_bound(4..=4).unwrap();
        assert!(r.holds());
        assert!((r.margin - 0.2).abs() < 1e-9);
        assert!(check_suwi_bound(3..=10).is_err());
    }

    #[test]
    fn annihilator_and_control() {
        assert!(check_annihilator_t(16).unwrap());
        let h = thue_morse_annihilator();
        assert_eq!(h.total_degree(), Some(5));
        for m in h.monomials().collect::<Vec<_>>() {
            let mut broken = h.clone();
            broken.toggle(m.0, m.1);
            assert!(!check_annihilator(&broken, 16).unwrap(), "dropped {m:?}");
        }
    }

    #[test]
    fn report_format() {
        let r = check_ti(2).unwrap();
        assert_eq!(r.to_string(), "id=TI params=l=2 range=i:0..=3 status=pass locus=-");
        let m = check_ti_with(2, Control::Mutated).unwrap();
        assert!(m.to_string().starts_with("id=TI~MUTATED params=l=2"));
        assert!(m.to_string().contains("status=fail locus=i="));
    }
}
