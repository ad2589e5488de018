//! The codeword model of configurations: occupation and intersection
//! numbers, feasibility bounds, irreducibility, canonical forms under
//! S_d x (even-weight translations), and the enumerator of combinatorial
//! types.
//!
//! A word S occupies box a_i^dag for i in S and box a_i for i not in S; the
//! edge number of a pair is d minus their Hamming distance, and a
//! tetrahedron's number counts the coordinates where all four words agree.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::scalar::GaussianRational;
use crate::spinor::{basis_pure, IndexSet, Spinor, SpinorError};

/// An even-weight codeword: the set of creation indices applied to the vacuum.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Codeword(pub u32);

impl Codeword {
    pub fn weight(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn distance(&self, other: Codeword) -> usize {
        (self.0 ^ other.0).count_ones() as usize
    }

    pub fn as_index_set(&self) -> IndexSet {
        IndexSet(self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConfigError {
    OddWeight(u32),
    DuplicateWord(u32),
    WordOutOfRange(u32),
    CoeffCountMismatch { words: usize, coeffs: usize },
    ZeroCoefficient(usize),
    Empty,
}

impl core::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ConfigError::OddWeight(w) => write!(f, "word {:#b} has odd weight", w),
            ConfigError::DuplicateWord(w) => write!(f, "word {:#b} repeats", w),
            ConfigError::WordOutOfRange(w) => write!(f, "word {:#b} exceeds the dimension", w),
            ConfigError::CoeffCountMismatch { words, coeffs } => {
                write!(f, "{} coefficients for {} words", coeffs, words)
            }
            ConfigError::ZeroCoefficient(i) => write!(f, "coefficient {} is zero", i),
            ConfigError::Empty => write!(f, "empty configuration"),
        }
    }
}

/// An ordered set of distinct even-weight codewords with optional nonzero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    pub half_dim: usize,
    pub words: Vec<Codeword>,
    pub coeffs: Option<Vec<GaussianRational>>,
}

impl Configuration {
    pub fn new(
        half_dim: usize,
        words: Vec<Codeword>,
        coeffs: Option<Vec<GaussianRational>>,
    ) -> Result<Self, ConfigError> {
        if words.is_empty() {
            return Err(ConfigError::Empty);
        }
        let mask = if half_dim >= 32 { u32::MAX } else { (1u32 << half_dim) - 1 };
        let mut seen = alloc::collections::BTreeSet::new();
        for w in &words {
            if w.weight() % 2 != 0 {
                return Err(ConfigError::OddWeight(w.0));
            }
            if w.0 & !mask != 0 {
                return Err(ConfigError::WordOutOfRange(w.0));
            }
            if !seen.insert(w.0) {
                return Err(ConfigError::DuplicateWord(w.0));
            }
        }
        if let Some(cs) = &coeffs {
            if cs.len() != words.len() {
                return Err(ConfigError::CoeffCountMismatch {
                    words: words.len(),
                    coeffs: cs.len(),
                });
            }
            if let Some(i) = cs.iter().position(|c| c.is_zero()) {
                return Err(ConfigError::ZeroCoefficient(i));
            }
        }
        Ok(Configuration {
            half_dim,
            words,
            coeffs,
        })
    }

    pub fn k(&self) -> usize {
        self.words.len()
    }

    pub fn coeff(&self, alpha: usize) -> GaussianRational {
        self.coeffs
            .as_ref()
            .map(|cs| cs[alpha].clone())
            .unwrap_or_else(GaussianRational::one)
    }
}

/// Box occupation histogram: n[j] counts boxes occupied by exactly j words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccupationProfile {
    pub n: Vec<usize>,
}

pub fn occupation_profile(c: &Configuration) -> OccupationProfile {
    let d = c.half_dim;
    let k = c.k();
    let mut n = alloc::vec![0usize; k + 1];
    for i in 0..d {
        // box a_i^dag: occupied by words containing i; box a_i: by the rest
        let occupied = c.words.iter().filter(|w| w.0 >> i & 1 == 1).count();
        n[occupied] += 1; // a_i^dag box
        n[k - occupied] += 1; // a_i box
    }
    OccupationProfile { n }
}

/// Pairwise edge numbers: e = d - Hamming distance.
pub fn edge_dims(c: &Configuration) -> BTreeMap<(usize, usize), usize> {
    let mut out = BTreeMap::new();
    for a in 0..c.k() {
        for b in a + 1..c.k() {
            out.insert((a, b), c.half_dim - c.words[a].distance(c.words[b]));
        }
    }
    out
}

/// Tetrahedral numbers: coordinates where all four words agree.
pub fn tetra_dims(c: &Configuration) -> BTreeMap<[usize; 4], usize> {
    let mut out = BTreeMap::new();
    let k = c.k();
    for a in 0..k {
        for b in a + 1..k {
            for g in b + 1..k {
                for h in g + 1..k {
                    let t = tetra_of(c.half_dim, [c.words[a], c.words[b], c.words[g], c.words[h]]);
                    out.insert([a, b, g, h], t);
                }
            }
        }
    }
    out
}

fn tetra_of(d: usize, ws: [Codeword; 4]) -> usize {
    let mut t = 0;
    for i in 0..d {
        let bits: u32 = ws.iter().map(|w| w.0 >> i & 1).sum();
        if bits == 0 || bits == 4 {
            t += 1;
        }
    }
    t
}

/// The two counting identities relating the occupation numbers to the edge
/// and tetrahedral intersection sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub edge_lhs: usize,
    pub edge_rhs: usize,
    pub tetra_lhs: usize,
    pub tetra_rhs: usize,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.edge_lhs == self.edge_rhs && self.tetra_lhs == self.tetra_rhs
    }
}

fn binom(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let mut num = 1usize;
    let mut den = 1usize;
    for i in 0..r {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

pub fn check_identities(c: &Configuration) -> IdentityReport {
    let prof = occupation_profile(c);
    let edge_lhs: usize = prof
        .n
        .iter()
        .enumerate()
        .map(|(j, &nj)| binom(j, 2) * nj)
        .sum();
    let edge_rhs: usize = edge_dims(c).values().sum();
    let tetra_lhs: usize = prof
        .n
        .iter()
        .enumerate()
        .map(|(j, &nj)| binom(j, 4) * nj)
        .sum();
    let tetra_rhs: usize = tetra_dims(c).values().sum();
    IdentityReport {
        edge_lhs,
        edge_rhs,
        tetra_lhs,
        tetra_rhs,
    }
}

/// Irreducibility: every edge satisfies e <= d-4 and, when k >= 4, every
/// tetrahedron satisfies t <= d-7.
pub fn is_irreducible(c: &Configuration) -> bool {
    let d = c.half_dim;
    for (_, e) in edge_dims(c) {
        if e + 4 > d {
            return false;
        }
    }
    if c.k() >= 4 {
        for (_, t) in tetra_dims(c) {
            if t + 7 > d {
                return false;
            }
        }
    }
    true
}

/// Feasibility bounds on the impurity k per parity.
///
/// Edge rules: `k(d-8) + d >= 0` for odd k > 1, `k(d-8) + 8 >= 0` for even k.
/// Tetra rules (meaningful only once t <= d-7 is satisfiable, i.e. d >= 7):
/// `k^2(28-3d) - 56k + 15d <= 0` for odd k > 3,
/// `k^2(28-3d) - k(112-6d) + 12d + 84 <= 0` for even k > 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KBounds {
    pub half_dim: usize,
    /// None means the rule imposes no bound at this d.
    pub odd_edge: Option<usize>,
    pub even_edge: Option<usize>,
    pub odd_tetra: Option<usize>,
    pub even_tetra: Option<usize>,
    /// min over applicable rules (k = 1 always allowed on the odd side)
    pub max_odd: Option<usize>,
    pub max_even: Option<usize>,
}

pub fn feasible_k_bounds(d: usize) -> KBounds {
    assert!(d >= 2);
    let di = d as i64;
    let odd_edge = if d >= 8 {
        None
    } else {
        // largest odd k >= 1 with k(d-8) + d >= 0
        let mut best = 1usize;
        let mut k = 3i64;
        while k * (di - 8) + di >= 0 {
            best = k as usize;
            k += 2;
        }
        Some(best)
    };
    let even_edge = if d >= 8 {
        None
    } else {
        let mut best = 0usize;
        let mut k = 2i64;
        while k * (di - 8) + 8 >= 0 {
            best = k as usize;
            k += 2;
        }
        Some(best)
    };
    let tetra_applicable = d >= 7;
    let odd_tetra = if !tetra_applicable {
        None
    } else {
        // largest odd k (k > 3 constrained; 1 and 3 always allowed)
        let mut best = 3usize;
        let mut k = 5i64;
        while k * k * (28 - 3 * di) - 56 * k + 15 * di <= 0 {
            best = k as usize;
            k += 2;
            if k > 1_000 {
                break;
            }
        }
        Some(best)
    };
    let even_tetra = if !tetra_applicable {
        None
    } else {
        let mut best = 2usize;
        let mut k = 4i64;
        while k * k * (28 - 3 * di) - k * (112 - 6 * di) + 12 * di + 84 <= 0 {
            best = k as usize;
            k += 2;
            if k > 1_000 {
                break;
            }
        }
        Some(best)
    };
    let min_opt = |a: Option<usize>, b: Option<usize>| match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    };
    KBounds {
        half_dim: d,
        odd_edge,
        even_edge,
        odd_tetra,
        even_tetra,
        max_odd: min_opt(odd_edge, odd_tetra),
        max_even: min_opt(even_edge, even_tetra),
    }
}

/// A combinatorial type: the canonical representative of a configuration
/// under S_d x (even-weight translations), with its edge and tetra labels.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CombinatorialType {
    pub half_dim: usize,
    pub k: usize,
    /// Sorted canonical word list: the class invariant.
    pub canonical_words: Vec<u32>,
    pub edge_labels: BTreeMap<(usize, usize), usize>,
    pub tetra_labels: BTreeMap<[usize; 4], usize>,
}

impl CombinatorialType {
    /// Byte encoding of the canonical words (little endian u32 each).
    pub fn canonical_code(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(4 * self.canonical_words.len());
        for w in &self.canonical_words {
            out.extend_from_slice(&w.to_le_bytes());
        }
        out
    }

    /// Sorted multiset of edge labels.
    pub fn edge_multiset(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.edge_labels.values().cloned().collect();
        v.sort_unstable();
        v
    }
}

fn permutations_of(d: usize) -> Vec<Vec<usize>> {
    let mut perms = Vec::new();
    let mut idx: Vec<usize> = (0..d).collect();
    loop {
        perms.push(idx.clone());
        // next lexicographic permutation
        let mut i = d.wrapping_sub(1);
        while i > 0 && idx[i - 1] >= idx[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = d - 1;
        while idx[j] <= idx[i - 1] {
            j -= 1;
        }
        idx.swap(i - 1, j);
        idx[i..].reverse();
    }
    perms
}

fn apply_perm(perm: &[usize], w: u32) -> u32 {
    let mut out = 0u32;
    for (from, &to) in perm.iter().enumerate() {
        if w >> from & 1 == 1 {
            out |= 1 << to;
        }
    }
    out
}

/// Precomputed action of every coordinate permutation on every d-bit word.
/// Built once per enumeration run; canonicalising a configuration then costs
/// one table lookup per (translation, permutation, word).
struct PermTables {
    tables: Vec<Vec<u32>>,
}

impl PermTables {
    fn new(d: usize) -> Self {
        let perms = permutations_of(d);
        let size = 1usize << d;
        let tables = perms
            .iter()
            .map(|perm| (0..size as u32).map(|w| apply_perm(perm, w)).collect())
            .collect();
        PermTables { tables }
    }
}

/// Lexicographic minimum of the sorted word list over the equivalence group
/// S_d x (even-weight translations). A translation only helps when it sends
/// some word to zero, so the translation candidates are the member words.
fn canonical_words(tables: &PermTables, words: &[Codeword]) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    let mut cand: Vec<u32> = alloc::vec![0; words.len()];
    for t in words {
        let shifted: Vec<u32> = words.iter().map(|w| w.0 ^ t.0).collect();
        for table in &tables.tables {
            for (slot, &w) in shifted.iter().enumerate() {
                cand[slot] = table[w as usize];
            }
            cand.sort_unstable();
            match &best {
                Some(b) if b.as_slice() <= cand.as_slice() => {}
                _ => best = Some(cand.clone()),
            }
        }
    }
    best.expect("nonempty configuration")
}

pub fn canonical_form(c: &Configuration) -> CombinatorialType {
    let tables = PermTables::new(c.half_dim);
    canonical_form_with(&tables, c)
}

fn canonical_form_with(tables: &PermTables, c: &Configuration) -> CombinatorialType {
    CombinatorialType {
        half_dim: c.half_dim,
        k: c.k(),
        canonical_words: canonical_words(tables, &c.words),
        edge_labels: edge_dims(c),
        tetra_labels: tetra_dims(c),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumerateError {
    BudgetExceeded { budget: u64 },
    KOutOfRange { k: usize, max: usize },
}

impl core::fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EnumerateError::BudgetExceeded { budget } => {
                write!(f, "search exceeded the node budget of {}", budget)
            }
            EnumerateError::KOutOfRange { k, max } => {
                write!(f, "impurity {} out of range 1..={}", k, max)
            }
        }
    }
}

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Enumerates the combinatorial types with k constituents at half-dimension d.
///
/// The first word is normalised to the vacuum (translations act transitively
/// on words). Pairwise edge numbers respect e <= d-4 always — a violating
/// pair collapses to a single pure spinor, so it never describes impurity k.
/// `require_irreducible` additionally applies the tetrahedral rule t <= d-7.
/// Output is deduplicated by canonical form and sorted by canonical code.
pub fn enumerate_types(
    d: usize,
    k: usize,
    require_irreducible: bool,
    node_budget: u64,
) -> Result<Vec<CombinatorialType>, EnumerateError> {
    let max_k = 1usize << (d - 1);
    if k < 1 || k > max_k {
        return Err(EnumerateError::KOutOfRange { k, max: max_k });
    }
    // candidate words: even weight, distance >= 4 from the vacuum word
    let full = 1u32 << d;
    let candidates: Vec<Codeword> = (1..full)
        .map(Codeword)
        .filter(|w| w.weight() % 2 == 0 && w.weight() >= 4)
        .collect();
    let mut nodes = 0u64;
    let mut chosen: Vec<Codeword> = alloc::vec![Codeword(0)];
    let mut types: BTreeMap<Vec<u32>, CombinatorialType> = BTreeMap::new();
    let tables = PermTables::new(d);
    dfs(
        d,
        k,
        require_irreducible,
        &candidates,
        0,
        &mut chosen,
        &mut types,
        &mut nodes,
        node_budget,
        &tables,
    )?;
    Ok(types.into_values().collect())
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    d: usize,
    k: usize,
    require_irreducible: bool,
    candidates: &[Codeword],
    start: usize,
    chosen: &mut Vec<Codeword>,
    types: &mut BTreeMap<Vec<u32>, CombinatorialType>,
    nodes: &mut u64,
    budget: u64,
    tables: &PermTables,
) -> Result<(), EnumerateError> {
    *nodes += 1;
    if *nodes > budget {
        return Err(EnumerateError::BudgetExceeded { budget });
    }
    if chosen.len() == k {
        if require_irreducible && !tetra_ok(d, chosen) {
            return Ok(());
        }
        let cfg = Configuration::new(d, chosen.clone(), None).expect("valid by construction");
        let ty = canonical_form_with(tables, &cfg);
        types.entry(ty.canonical_words.clone()).or_insert(ty);
        return Ok(());
    }
    for idx in start..candidates.len() {
        let w = candidates[idx];
        if chosen.iter().all(|c| c.distance(w) >= 4) {
            chosen.push(w);
            dfs(
                d,
                k,
                require_irreducible,
                candidates,
                idx + 1,
                chosen,
                types,
                nodes,
                budget,
                tables,
            )?;
            chosen.pop();
        }
    }
    Ok(())
}

fn tetra_ok(d: usize, words: &[Codeword]) -> bool {
    if words.len() < 4 {
        return true;
    }
    let n = words.len();
    for a in 0..n {
        for b in a + 1..n {
            for g in b + 1..n {
                for h in g + 1..n {
                    if tetra_of(d, [words[a], words[b], words[g], words[h]]) + 7 > d {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The spinor of a configuration: sum of coefficient times basis pure spinor.
pub fn spinor_of(c: &Configuration) -> Result<Spinor, SpinorError> {
    let mut psi = Spinor::zero(c.half_dim);
    for (alpha, w) in c.words.iter().enumerate() {
        let p = basis_pure(w.as_index_set(), c.half_dim)?;
        psi = psi.add(&p.scale(&c.coeff(alpha)))?;
    }
    Ok(psi)
}
