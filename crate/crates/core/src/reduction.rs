//! From a finite point set in `Q^d` to an incidence problem among flats:
//! distance statistics, quadruple counts, the flat family `L_ap`, a verified
//! generic slice, rich-point histograms and the identity checks tying them
//! together.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::flat::{slice_flats, AffineFlat, FlatError, ParametrizedFlat};
use crate::lap::l_ap_flat;
use crate::linalg::Matrix;
use crate::multivector::AlgebraError;
use crate::rational::{self, format_rational, parse_rational, Rational, RationalVector};
use crate::sample;

pub const DEFAULT_RETRY_BUDGET: u32 = 16;
/// Numerators and denominators of slice coefficients stay below `2^50`.
pub const SLICE_COEFF_BITS: u32 = 50;

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error("invalid point configuration: {0}")]
    InvalidConfig(String),
    #[error("no generic slice found within {budget} attempts")]
    SliceExhausted { budget: u32 },
    #[error("flats {0} and {1} meet in a positive-dimensional flat")]
    PositiveDimensionalMeet(usize, usize),
    #[error(transparent)]
    Flat(#[from] FlatError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

/// `n >= 2` pairwise distinct points of `Q^d`, `d >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfig {
    dim: usize,
    points: Vec<RationalVector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointConfigJson {
    pub dimension: usize,
    pub points: Vec<Vec<String>>,
}

impl PointConfig {
    pub fn new(dim: usize, points: Vec<RationalVector>) -> Result<Self, ReductionError> {
        if dim < 2 {
            return Err(ReductionError::InvalidConfig(format!("dimension {dim} < 2")));
        }
        if dim > crate::blade::MAX_DIM {
            return Err(ReductionError::InvalidConfig(format!(
                "dimension {dim} exceeds {}",
                crate::blade::MAX_DIM
            )));
        }
        if points.len() < 2 {
            return Err(ReductionError::InvalidConfig("need at least two points".into()));
        }
        if let Some((i, p)) = points.iter().enumerate().find(|(_, p)| p.len() != dim) {
            return Err(ReductionError::InvalidConfig(format!(
                "point {i} has {} coordinates, expected {dim}",
                p.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for (i, p) in points.iter().enumerate() {
            if !seen.insert(p) {
                return Err(ReductionError::InvalidConfig(format!("point {i} is repeated")));
            }
        }
        Ok(PointConfig { dim, points })
    }

    /// The grid `{0, ..., side-1}^d` in lexicographic order.
    pub fn lattice(dim: usize, side: usize) -> Result<Self, ReductionError> {
        if side < 2 {
            return Err(ReductionError::InvalidConfig("side must be at least 2".into()));
        }
        let total = side
            .checked_pow(dim as u32)
            .ok_or_else(|| ReductionError::InvalidConfig("lattice too large".into()))?;
        let points = (0..total)
            .map(|mut idx| {
                let mut p = vec![Rational::zero(); dim];
                for c in p.iter_mut().rev() {
                    *c = rational::int((idx % side) as i64);
                    idx /= side;
                }
                p
            })
            .collect();
        Self::new(dim, points)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[RationalVector] {
        &self.points
    }

    pub fn to_json(&self) -> PointConfigJson {
        PointConfigJson {
            dimension: self.dim,
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(format_rational).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &PointConfigJson) -> Result<Self, ReductionError> {
        let points = j
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| {
                p.iter()
                    .map(|s| {
                        parse_rational(s).map_err(|e| {
                            ReductionError::InvalidConfig(format!("point {i}: {e}"))
                        })
                    })
                    .collect()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(j.dimension, points)
    }

    pub fn from_json_str(s: &str) -> Result<Self, ReductionError> {
        let j: PointConfigJson = serde_json::from_str(s)?;
        Self::from_json(&j)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable") + "\n"
    }

    /// SHA-256 of the canonical (reduced rational) JSON encoding.
    pub fn digest(&self) -> String {
        let canon = serde_json::to_string(&self.to_json()).expect("serializable");
        let hash = Sha256::digest(canon.as_bytes());
        hash.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Squared-distance classes over ordered pairs of distinct points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceStats {
    /// `(delta^2, |E_j|)` sorted by `delta^2`.
    pub classes: Vec<(Rational, u64)>,
    pub q_count: u128,
}

impl DistanceStats {
    /// Number of distinct distances `D`.
    pub fn distinct(&self) -> usize {
        self.classes.len()
    }

    /// `4 D |Q| > n^4`.
    pub fn cauchy_schwarz_holds(&self, n: usize) -> bool {
        4 * self.distinct() as u128 * self.q_count > (n as u128).pow(4)
    }
}

fn ordered_pairs_by_distance(p: &PointConfig) -> BTreeMap<Rational, Vec<(usize, usize)>> {
    let mut classes: BTreeMap<Rational, Vec<(usize, usize)>> = BTreeMap::new();
    let pts = p.points();
    for a in 0..pts.len() {
        for b in 0..pts.len() {
            if a != b {
                let d2 = rational::norm_sq(&rational::sub(&pts[a], &pts[b]));
                classes.entry(d2).or_default().push((a, b));
            }
        }
    }
    classes
}

pub fn distance_stats(p: &PointConfig) -> DistanceStats {
    let classes: Vec<(Rational, u64)> = ordered_pairs_by_distance(p)
        .into_iter()
        .map(|(d2, pairs)| (d2, pairs.len() as u64))
        .collect();
    let q_count = classes.iter().map(|(_, e)| (*e as u128).pow(2)).sum();
    DistanceStats { classes, q_count }
}

/// Ordered quadruples `(a, b, p, q)` with `|a-b|^2 = |q-p|^2 > 0` and
/// `a - b != q - p`; with `restrict_family`, also `a != p` and `b != q`.
pub fn q_prime_count(p: &PointConfig, restrict_family: bool) -> u128 {
    let pts = p.points();
    let classes = ordered_pairs_by_distance(p);
    classes
        .values()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|pairs| {
            let mut count = 0u128;
            for &(a, b) in pairs.iter() {
                let ab = rational::sub(&pts[a], &pts[b]);
                for &(s, t) in pairs.iter() {
                    if restrict_family && (a == s || b == t) {
                        continue;
                    }
                    if ab != rational::sub(&pts[t], &pts[s]) {
                        count += 1;
                    }
                }
            }
            count
        })
        .sum()
}

/// `L_ap` for the ordered pair of point indices `(a, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyFlat {
    pub a: usize,
    pub p: usize,
    pub flat: AffineFlat,
}

/// One flat per ordered pair `a != p`, in lexicographic order of `(a, p)`.
pub fn build_flat_family(p: &PointConfig) -> Result<Vec<FamilyFlat>, ReductionError> {
    let n = p.len();
    let labels: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&q| q != a).map(move |q| (a, q)))
        .collect();
    labels
        .par_iter()
        .map(|&(a, q)| {
            Ok(FamilyFlat {
                a,
                p: q,
                flat: l_ap_flat(&p.points()[a], &p.points()[q])?,
            })
        })
        .collect()
}

/// Why a candidate slice was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SliceViolation {
    DependentDirections,
    /// Family flat `index` meets the slice in the wrong dimension.
    FlatMeet { index: usize, dim: Option<usize> },
    /// Nonempty `L_i ∩ L_j` does not meet the slice in exactly one point.
    PairMeet { i: usize, j: usize, dim: Option<usize> },
}

/// Nonempty pairwise intersections of the family, as `(i, j, L_i ∩ L_j)`
/// with `i < j`, in lexicographic order.
pub fn pairwise_intersections(flats: &[AffineFlat]) -> Vec<(usize, usize, AffineFlat)> {
    let pairs: Vec<(usize, usize)> = (0..flats.len())
        .flat_map(|i| (i + 1..flats.len()).map(move |j| (i, j)))
        .collect();
    pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let m = flats[i].intersect(&flats[j]).expect("same ambient");
            (!m.is_empty()).then_some((i, j, m))
        })
        .collect()
}

/// Exact genericity check of `h` against the family (and its precomputed
/// nonempty pairwise intersections).
pub fn check_slice(
    dim: usize,
    flats: &[AffineFlat],
    meets: &[(usize, usize, AffineFlat)],
    h: &ParametrizedFlat,
) -> Result<(), SliceViolation> {
    let sliced = slice_flats(flats, h).map_err(|_| SliceViolation::DependentDirections)?;
    if let Some((index, f)) = sliced
        .iter()
        .enumerate()
        .find(|(_, f)| f.dim() != Some(dim - 1))
    {
        return Err(SliceViolation::FlatMeet { index, dim: f.dim() });
    }
    let bad = meets.par_iter().find_first(|(_, _, m)| {
        let s = m.pullback(h).expect("same ambient");
        !s.is_point()
    });
    if let Some((i, j, m)) = bad {
        return Err(SliceViolation::PairMeet {
            i: *i,
            j: *j,
            dim: m.pullback(h).expect("same ambient").dim(),
        });
    }
    Ok(())
}

/// A random rational `(2d-1)`-flat in `Q^{C(d+1,2)}` drawn from `seed`.
pub fn random_slice_candidate(dim: usize, seed: u64) -> ParametrizedFlat {
    let ambient = dim * (dim + 1) / 2;
    let k = 2 * dim - 1;
    let mut rng = sample::rng(seed);
    loop {
        let draw = |rng: &mut sample::SampleRng| -> RationalVector {
            (0..ambient)
                .map(|_| sample::wide_rational(rng, SLICE_COEFF_BITS))
                .collect()
        };
        let base = draw(&mut rng);
        let dirs: Matrix = (0..k).map(|_| draw(&mut rng)).collect();
        if let Ok(h) = ParametrizedFlat::new(base, dirs) {
            return h;
        }
    }
}

/// Outcome of slice sampling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slice {
    pub flat: ParametrizedFlat,
    /// Seed of the accepted candidate.
    pub seed: u64,
    pub retries: u32,
}

/// Draws candidates from `propose(seed + attempt)` until one passes
/// `check_slice`. For `d = 2` the family already lives in `Q^3 = Q^{2d-1}`
/// and the identity slice is returned.
pub fn sample_generic_slice_with(
    dim: usize,
    flats: &[AffineFlat],
    seed: u64,
    budget: u32,
    mut propose: impl FnMut(u64) -> ParametrizedFlat,
) -> Result<Slice, ReductionError> {
    let ambient = dim * (dim + 1) / 2;
    if ambient == 2 * dim - 1 {
        return Ok(Slice {
            flat: ParametrizedFlat::identity(ambient),
            seed,
            retries: 0,
        });
    }
    let meets = pairwise_intersections(flats);
    for attempt in 0..budget {
        let s = seed.wrapping_add(attempt as u64);
        let h = propose(s);
        if check_slice(dim, flats, &meets, &h).is_ok() {
            return Ok(Slice {
                flat: h,
                seed: s,
                retries: attempt,
            });
        }
    }
    Err(ReductionError::SliceExhausted { budget })
}

pub fn sample_generic_slice(
    dim: usize,
    flats: &[AffineFlat],
    seed: u64,
    budget: u32,
) -> Result<Slice, ReductionError> {
    sample_generic_slice_with(dim, flats, seed, budget, |s| random_slice_candidate(dim, s))
}

/// `m_k` for `k >= 2`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RichPointHistogram {
    pub entries: BTreeMap<usize, u64>,
}

impl RichPointHistogram {
    /// `m_{>=k}`.
    pub fn at_least(&self, k: usize) -> u64 {
        self.entries.range(k..).map(|(_, m)| m).sum()
    }

    pub fn max_k(&self) -> usize {
        self.entries.keys().next_back().copied().unwrap_or(0)
    }

    /// `sum_k m_k * 2 * C(k, 2)`.
    pub fn ordered_pairs(&self) -> u128 {
        self.entries
            .iter()
            .map(|(&k, &m)| m as u128 * (k as u128) * (k as u128 - 1))
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Collects pairwise intersection points of flats that meet in at most a
/// point, and counts how many flats pass through each. Returns the histogram
/// and the number of ordered pairs of distinct intersecting flats.
pub fn rich_points(flats: &[AffineFlat]) -> Result<(RichPointHistogram, u128), ReductionError> {
    let meets = pairwise_intersections(flats);
    let mut incidence: BTreeMap<RationalVector, BTreeSet<usize>> = BTreeMap::new();
    for (i, j, m) in &meets {
        if !m.is_point() {
            return Err(ReductionError::PositiveDimensionalMeet(*i, *j));
        }
        let pt = m.base().expect("nonempty").clone();
        let e = incidence.entry(pt).or_default();
        e.insert(*i);
        e.insert(*j);
    }
    let mut hist = RichPointHistogram::default();
    for flats_through in incidence.values() {
        *hist.entries.entry(flats_through.len()).or_insert(0) += 1;
    }
    Ok((hist, 2 * meets.len() as u128))
}

/// Same-source hull check: `hull(L_ap, L_aq)` is the full space for `p != q`.
/// Returns `(checked, passed)`. At most `limit` triples are checked; beyond
/// that a seeded sample is taken.
pub fn same_source_hulls(
    family: &[FamilyFlat],
    n: usize,
    seed: u64,
    limit: usize,
) -> (u64, u64) {
    let index = |a: usize, p: usize| a * (n - 1) + if p > a { p - 1 } else { p };
    let mut triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|a| {
            (0..n).flat_map(move |p| (0..n).map(move |q| (a, p, q)))
        })
        .filter(|&(a, p, q)| p != a && q != a && p < q)
        .collect();
    if triples.len() > limit {
        let mut rng = sample::rng(seed);
        for i in 0..limit {
            let j = rng.gen_range(i..triples.len());
            triples.swap(i, j);
        }
        triples.truncate(limit);
        triples.sort_unstable();
    }
    let passed = triples
        .par_iter()
        .filter(|&&(a, p, q)| {
            let l1 = &family[index(a, p)];
            let l2 = &family[index(a, q)];
            debug_assert!(l1.a == a && l1.p == p && l2.a == a && l2.p == q);
            l1.flat.hull(&l2.flat).map_or(false, |h| h.is_full())
        })
        .count();
    (triples.len() as u64, passed as u64)
}

/// A named identity check with the exact values involved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub dim: usize,
    pub n: usize,
    pub input_digest: String,
    pub stats: DistanceStats,
    pub q_prime: u128,
    pub q_prime_family: u128,
    pub flats: usize,
    pub slice_seed: u64,
    pub retries: u32,
    pub histogram: RichPointHistogram,
    pub pair_count: u128,
    pub hull_checks: (u64, u64),
    /// Verdicts `A` to `E`, in order.
    pub verdicts: Vec<(char, Verdict)>,
}

impl ReductionReport {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|(_, v)| v.pass)
    }

    pub fn verdict(&self, key: char) -> Option<&Verdict> {
        self.verdicts.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> ReportJson {
        ReportJson {
            dimension: self.dim,
            input_digest: self.input_digest.clone(),
            n: self.n.to_string(),
            distances: self
                .stats
                .classes
                .iter()
                .map(|(d2, e)| DistanceClassJson {
                    squared: format_rational(d2),
                    ordered_pairs: e.to_string(),
                })
                .collect(),
            big_d: self.stats.distinct().to_string(),
            big_q: self.stats.q_count.to_string(),
            q_prime: self.q_prime.to_string(),
            q_prime_family: self.q_prime_family.to_string(),
            flats: self.flats.to_string(),
            slice_seed: self.slice_seed.to_string(),
            retries: self.retries.to_string(),
            histogram: self
                .histogram
                .entries
                .iter()
                .map(|(k, m)| (k.to_string(), m.to_string()))
                .collect(),
            pair_count: self.pair_count.to_string(),
            verdicts: self
                .verdicts
                .iter()
                .map(|(k, v)| (k.to_string(), v.pass))
                .collect(),
            checks: self
                .verdicts
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable") + "\n"
    }

    /// Multi-line human summary.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("points: n = {} in Q^{}\n", self.n, self.dim));
        s.push_str(&format!("distinct distances D = {}\n", self.stats.distinct()));
        s.push_str(&format!("|Q| = {}, |Q'| = {}, |Q'| (a!=p, b!=q) = {}\n", self.stats.q_count, self.q_prime, self.q_prime_family));
        s.push_str(&format!(
            "flats: {}, slice seed {} after {} retries\n",
            self.flats, self.slice_seed, self.retries
        ));
        let hist: Vec<String> = self
            .histogram
            .entries
            .iter()
            .map(|(k, m)| format!("m_{k} = {m}"))
            .collect();
        s.push_str(&format!(
            "rich points: {}\n",
            if hist.is_empty() { "none".to_string() } else { hist.join(", ") }
        ));
        s.push_str(&format!("intersecting ordered pairs: {}\n", self.pair_count));
        for (k, v) in &self.verdicts {
            s.push_str(&format!(
                "({k}) {} {}: {}\n",
                if v.pass { "PASS" } else { "FAIL" },
                v.name,
                v.detail
            ));
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceClassJson {
    pub squared: String,
    pub ordered_pairs: String,
}

/// Serialized report; all counts are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub dimension: usize,
    pub input_digest: String,
    pub n: String,
    pub distances: Vec<DistanceClassJson>,
    #[serde(rename = "D")]
    pub big_d: String,
    #[serde(rename = "Q")]
    pub big_q: String,
    #[serde(rename = "Q_prime")]
    pub q_prime: String,
    #[serde(rename = "Q_prime_family")]
    pub q_prime_family: String,
    pub flats: String,
    pub slice_seed: String,
    pub retries: String,
    pub histogram: BTreeMap<String, String>,
    pub pair_count: String,
    pub verdicts: BTreeMap<String, bool>,
    pub checks: BTreeMap<String, Verdict>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOptions {
    /// Worker threads; `None` uses rayon's default.
    pub threads: Option<usize>,
    pub retry_budget: u32,
    /// Cap on same-source hull checks.
    pub hull_limit: usize,
}

impl Default for ReductionOptions {
    fn default() -> Self {
        ReductionOptions {
            threads: None,
            retry_budget: DEFAULT_RETRY_BUDGET,
            hull_limit: 4096,
        }
    }
}

pub fn run_reduction(p: &PointConfig, seed: u64) -> Result<ReductionReport, ReductionError> {
    run_reduction_with(p, seed, &ReductionOptions::default())
}

pub fn run_reduction_with(
    p: &PointConfig,
    seed: u64,
    opts: &ReductionOptions,
) -> Result<ReductionReport, ReductionError> {
    match opts.threads {
        None => reduce(p, seed, opts),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| ReductionError::ThreadPool(e.to_string()))?
            .install(|| reduce(p, seed, opts)),
    }
}

fn reduce(p: &PointConfig, seed: u64, opts: &ReductionOptions) -> Result<ReductionReport, ReductionError> {
    let n = p.len();
    let d = p.dim();
    let stats = distance_stats(p);
    let q_prime = q_prime_count(p, false);
    let q_prime_family = q_prime_count(p, true);
    let family = build_flat_family(p)?;
    let flats: Vec<AffineFlat> = family.iter().map(|f| f.flat.clone()).collect();
    let slice = sample_generic_slice(d, &flats, seed, opts.retry_budget)?;
    let sliced = slice_flats(&flats, &slice.flat)?;
    let (histogram, pair_count) = rich_points(&sliced)?;
    let hull_checks = same_source_hulls(&family, n, seed, opts.hull_limit);

    let n4 = BigInt::from(n).pow(4);
    let four_dq = BigInt::from(4u32) * BigInt::from(stats.distinct()) * BigInt::from(stats.q_count);
    let verdicts = vec![
        (
            'A',
            Verdict {
                name: "intersecting pairs equal restricted Q'".into(),
                pass: pair_count == q_prime_family && histogram.ordered_pairs() == pair_count,
                detail: format!(
                    "pairs = {pair_count}, sum m_k 2C(k,2) = {}, Q'_family = {q_prime_family}",
                    histogram.ordered_pairs()
                ),
            },
        ),
        (
            'B',
            Verdict {
                name: "2|Q'| >= |Q|".into(),
                pass: 2 * q_prime >= stats.q_count,
                detail: format!("2 * {q_prime} >= {}", stats.q_count),
            },
        ),
        (
            'C',
            Verdict {
                name: "4 D |Q| > n^4".into(),
                pass: four_dq > n4,
                detail: format!("{four_dq} > {n4}"),
            },
        ),
        (
            'D',
            Verdict {
                name: "rich points lie on at most n flats".into(),
                pass: histogram.max_k() <= n,
                detail: format!("max k = {} <= {n}", histogram.max_k()),
            },
        ),
        (
            'E',
            Verdict {
                name: "same-source hulls span the chart".into(),
                pass: hull_checks.0 == hull_checks.1,
                detail: format!("{} of {} full", hull_checks.1, hull_checks.0),
            },
        ),
    ];
    Ok(ReductionReport {
        dim: d,
        n,
        input_digest: p.digest(),
        stats,
        q_prime,
        q_prime_family,
        flats: family.len(),
        slice_seed: slice.seed,
        retries: slice.retries,
        histogram,
        pair_count,
        hull_checks,
        verdicts,
    })
}

/// Brute-force `O(n^4)` count used as an oracle in tests.
pub fn q_prime_bruteforce(p: &PointConfig, restrict_family: bool) -> u128 {
    let pts = p.points();
    let n = pts.len();
    let mut count = 0u128;
    for a in 0..n {
        for b in 0..n {
            let ab = rational::sub(&pts[a], &pts[b]);
            let dab = rational::norm_sq(&ab);
            if dab.is_zero() {
                continue;
            }
            for s in 0..n {
                for t in 0..n {
                    if restrict_family && (a == s || b == t) {
                        continue;
                    }
                    let ts = rational::sub(&pts[t], &pts[s]);
                    if rational::norm_sq(&ts) == dab && ts != ab {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// Integer point helper.
pub fn point(xs: &[i64]) -> RationalVector {
    xs.iter().map(|&x| rational::int(x)).collect()
}
