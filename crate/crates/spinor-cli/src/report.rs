//! The verification harness: re-runs the classification pipeline for a
//! dimension and compares against the bundled expectation file.
//!
//! Expectation records carry provenance: `floor_dim`/`floor_group` and the
//! type counts come from the source classification, while `stabilizer_dim`
//! values are produced by the exact-kernel pipeline itself (regenerated with
//! `verify --regen-fixtures` and committed after review).

use anyhow::{anyhow, Context, Result};
use serde::{Deserialize, Serialize};

use spinor_core::comb::{
    enumerate_types, CombinatorialType, Codeword, Configuration,
};
use spinor_core::extform::{omega, ExtForm, Label2d};
use spinor_core::geomap::{cayley_form, configuration_form, words_to_constituents};
use spinor_core::lie::{cartan_equalizable, stabilizer_algebra, CartanVector};
use spinor_core::reduce::{reduce_12d_k4, square_words};
use spinor_core::scalar::GaussianRational;
use spinor_core::spinor::IndexSet;

pub const EMBEDDED_EXPECTATIONS: &str = include_str!("../fixtures/expectations.json");

#[derive(Clone, Serialize, Deserialize)]
pub struct TypeExpectation {
    pub canonical_words: Vec<u32>,
    pub edge_multiset: Vec<usize>,
    pub case_label: String,
    /// dimension of the named group the stabilizer contains (source value)
    pub floor_dim: usize,
    pub floor_group: String,
    pub floor_provenance: String,
    /// exact stabilizer dimension (pipeline-derived, committed after review)
    pub stabilizer_dim: usize,
    pub stabilizer_provenance: String,
    pub cartan_equalizable: bool,
}

#[derive(Clone, Serialize, Deserialize)]
pub struct KindExpectation {
    pub k: usize,
    pub allow_reducible: bool,
    pub types: Vec<TypeExpectation>,
}

#[derive(Clone, Serialize, Deserialize)]
pub struct DimExpectation {
    pub dim2d: usize,
    pub kinds: Vec<KindExpectation>,
}

#[derive(Clone, Serialize, Deserialize)]
pub struct Expectations {
    pub comment: String,
    pub dimensions: Vec<DimExpectation>,
}

pub fn load_embedded() -> Result<Expectations> {
    serde_json::from_str(EMBEDDED_EXPECTATIONS).context("embedded expectation file is invalid")
}

/// The source data for the expectation table: per dimension and impurity,
/// each type keyed by its edge multiset, with the named stabilizer floor.
struct PaperRow {
    dim2d: usize,
    k: usize,
    allow_reducible: bool,
    edge_multiset: &'static [usize],
    case_label: &'static str,
    floor_group: &'static str,
    floor_dim: usize,
}

const PAPER_ROWS: &[PaperRow] = &[
    PaperRow { dim2d: 8, k: 2, allow_reducible: false, edge_multiset: &[0], case_label: "8D impure pair (Cayley form)", floor_group: "Spin(7)", floor_dim: 21 },
    PaperRow { dim2d: 10, k: 2, allow_reducible: false, edge_multiset: &[1], case_label: "10D impure pair", floor_group: "Spin(7)", floor_dim: 21 },
    PaperRow { dim2d: 12, k: 2, allow_reducible: false, edge_multiset: &[2], case_label: "12D k=2 e=2", floor_group: "Spin(7)xSL(2)", floor_dim: 24 },
    PaperRow { dim2d: 12, k: 2, allow_reducible: false, edge_multiset: &[0], case_label: "12D k=2 e=0", floor_group: "SL(6)", floor_dim: 35 },
    PaperRow { dim2d: 12, k: 3, allow_reducible: false, edge_multiset: &[2, 2, 2], case_label: "12D k=3 triangle", floor_group: "Sp(6)", floor_dim: 21 },
    PaperRow { dim2d: 12, k: 4, allow_reducible: true, edge_multiset: &[2, 2, 2, 2, 2, 2], case_label: "12D k=4 square (same orbit as k=2 e=0)", floor_group: "SL(6)", floor_dim: 35 },
    PaperRow { dim2d: 14, k: 2, allow_reducible: false, edge_multiset: &[3], case_label: "case b", floor_group: "Spin(7)xSL(3)", floor_dim: 29 },
    PaperRow { dim2d: 14, k: 2, allow_reducible: false, edge_multiset: &[1], case_label: "case d", floor_group: "SL(6)", floor_dim: 35 },
    PaperRow { dim2d: 14, k: 3, allow_reducible: false, edge_multiset: &[3, 3, 3], case_label: "case c", floor_group: "Sp(6)", floor_dim: 21 },
    PaperRow { dim2d: 14, k: 3, allow_reducible: false, edge_multiset: &[1, 3, 3], case_label: "case f", floor_group: "SL(3)xSL(3)", floor_dim: 16 },
    PaperRow { dim2d: 14, k: 4, allow_reducible: false, edge_multiset: &[3, 3, 3, 3, 3, 3], case_label: "case e", floor_group: "SL(4)", floor_dim: 15 },
    PaperRow { dim2d: 14, k: 4, allow_reducible: false, edge_multiset: &[1, 3, 3, 3, 3, 3], case_label: "case g", floor_group: "SL(2)xSp(4)", floor_dim: 13 },
    PaperRow { dim2d: 14, k: 4, allow_reducible: false, edge_multiset: &[1, 1, 3, 3, 3, 3], case_label: "case i (generic)", floor_group: "G2xG2", floor_dim: 28 },
    PaperRow { dim2d: 14, k: 5, allow_reducible: false, edge_multiset: &[1, 3, 3, 3, 3, 3, 3, 3, 3, 3], case_label: "case h", floor_group: "G2", floor_dim: 14 },
];

/// Which (k, allow_reducible) groups each dimension verifies. k=6 at 14D has
/// no source row because the enumeration comes back empty.
fn kinds_for(dim2d: usize) -> Vec<(usize, bool)> {
    match dim2d {
        8 => vec![(2, false), (3, false)],
        10 => vec![(2, false), (3, false)],
        12 => vec![(2, false), (3, false), (4, false), (4, true)],
        14 => vec![(2, false), (3, false), (4, false), (5, false), (6, false)],
        _ => vec![],
    }
}

fn type_spinor_words(ty: &CombinatorialType) -> Vec<IndexSet> {
    ty.canonical_words.iter().map(|&w| IndexSet(w)).collect()
}

fn stabilizer_dim_of_words(d: usize, words: &[IndexSet]) -> Result<usize> {
    let cons = words_to_constituents(d, words, None).map_err(|e| anyhow!("{}", e))?;
    let mut psi = spinor_core::spinor::Spinor::zero(d);
    for (p, _) in &cons {
        psi = psi.add(p).map_err(|e| anyhow!("{}", e))?;
    }
    let (dim, _) = stabilizer_algebra(&psi).map_err(|e| anyhow!("{}", e))?;
    Ok(dim)
}

/// Recomputes the pipeline-derived fields from scratch and joins them with
/// the source rows into a fresh expectation table.
pub fn regenerate(node_budget: u64) -> Result<Expectations> {
    let mut dimensions = Vec::new();
    for dim2d in [8usize, 10, 12, 14] {
        let d = dim2d / 2;
        let mut kinds = Vec::new();
        for (k, allow_reducible) in kinds_for(dim2d) {
            let types = enumerate_types(d, k, !allow_reducible, node_budget)
                .map_err(|e| anyhow!("enumeration failed: {}", e))?;
            let mut recs = Vec::new();
            for ty in &types {
                let row = PAPER_ROWS
                    .iter()
                    .find(|r| {
                        r.dim2d == dim2d
                            && r.k == k
                            && r.allow_reducible == allow_reducible
                            && r.edge_multiset == ty.edge_multiset().as_slice()
                    })
                    .ok_or_else(|| {
                        anyhow!(
                            "enumerated type at 2d={} k={} with edges {:?} has no source row",
                            dim2d,
                            k,
                            ty.edge_multiset()
                        )
                    })?;
                let words = type_spinor_words(ty);
                let stab = stabilizer_dim_of_words(d, &words)?;
                let cv = CartanVector::from_words(d, &words);
                let ce = cartan_equalizable(&cv, None).map_err(|e| anyhow!("{}", e))?;
                recs.push(TypeExpectation {
                    canonical_words: ty.canonical_words.clone(),
                    edge_multiset: ty.edge_multiset(),
                    case_label: row.case_label.to_string(),
                    floor_dim: row.floor_dim,
                    floor_group: row.floor_group.to_string(),
                    floor_provenance: "paper".to_string(),
                    stabilizer_dim: stab,
                    stabilizer_provenance: "oracle".to_string(),
                    cartan_equalizable: ce,
                });
            }
            kinds.push(KindExpectation {
                k,
                allow_reducible,
                types: recs,
            });
        }
        dimensions.push(DimExpectation { dim2d, kinds });
    }
    Ok(Expectations {
        comment: "Expected classification per dimension. floor_dim/floor_group and case labels \
                  are source values (provenance \"paper\"); stabilizer_dim values are produced \
                  by the exact-kernel pipeline (provenance \"oracle\") via verify --regen-fixtures \
                  and committed after review."
            .to_string(),
        dimensions,
    })
}

pub struct VerifyOutcome {
    pub pass: bool,
    pub lines: Vec<String>,
}

impl VerifyOutcome {
    fn check(&mut self, ok: bool, msg: String) {
        self.lines
            .push(format!("  [{}] {}", if ok { "ok" } else { "FAIL" }, msg));
        self.pass &= ok;
    }
}

/// Runs the full pipeline for one dimension and compares with expectations.
pub fn verify(dim2d: usize, expectations: &Expectations, node_budget: u64) -> Result<VerifyOutcome> {
    let exp = expectations
        .dimensions
        .iter()
        .find(|e| e.dim2d == dim2d)
        .ok_or_else(|| anyhow!("unsupported dimension {}", dim2d))?;
    let d = dim2d / 2;
    let mut out = VerifyOutcome {
        pass: true,
        lines: vec![format!("verify 2d = {}", dim2d)],
    };

    for kind in &exp.kinds {
        let types = enumerate_types(d, kind.k, !kind.allow_reducible, node_budget)
            .map_err(|e| anyhow!("enumeration failed: {}", e))?;
        out.check(
            types.len() == kind.types.len(),
            format!(
                "k={}{}: {} type(s), expected {}",
                kind.k,
                if kind.allow_reducible { " (reducible allowed)" } else { "" },
                types.len(),
                kind.types.len()
            ),
        );
        for ty in &types {
            let expect = kind
                .types
                .iter()
                .find(|t| t.canonical_words == ty.canonical_words);
            let Some(expect) = expect else {
                out.check(
                    false,
                    format!("unexpected type with words {:?}", ty.canonical_words),
                );
                continue;
            };
            out.check(
                expect.edge_multiset == ty.edge_multiset(),
                format!("  {}: edges {:?}", expect.case_label, ty.edge_multiset()),
            );
            let words = type_spinor_words(ty);
            let stab = stabilizer_dim_of_words(d, &words)?;
            out.check(
                stab == expect.stabilizer_dim,
                format!(
                    "  {}: stabilizer dim {} (expected {})",
                    expect.case_label, stab, expect.stabilizer_dim
                ),
            );
            out.check(
                stab >= expect.floor_dim,
                format!(
                    "  {}: stabilizer dim {} >= {} = dim {}",
                    expect.case_label, stab, expect.floor_dim, expect.floor_group
                ),
            );
            let cv = CartanVector::from_words(d, &words);
            let ce = cartan_equalizable(&cv, None).map_err(|e| anyhow!("{}", e))?;
            out.check(
                ce == expect.cartan_equalizable,
                format!("  {}: cartan-equalizable {}", expect.case_label, ce),
            );
        }
    }

    match dim2d {
        8 => verify_8d_forms(&mut out)?,
        12 => verify_12d_forms_and_reduction(&mut out)?,
        _ => {}
    }
    out.lines.push(format!(
        "RESULT 2d={}: {}",
        dim2d,
        if out.pass { "PASS" } else { "FAIL" }
    ));
    Ok(out)
}

fn sets(words: &[&[usize]]) -> Vec<IndexSet> {
    words.iter().map(|w| IndexSet::from_indices(w)).collect()
}

/// equal up to one overall sign
fn matches_up_to_sign(got: &ExtForm, want: &ExtForm) -> bool {
    got == want || *got == want.neg()
}

fn verify_8d_forms(out: &mut VerifyOutcome) -> Result<()> {
    // B_4 of the pair reproduces the Cayley form display exactly
    let cons = words_to_constituents(4, &sets(&[&[], &[1, 2, 3, 4]]), None)
        .map_err(|e| anyhow!("{}", e))?;
    let b4 = configuration_form(&cons, 4).map_err(|e| anyhow!("{}", e))?;
    out.check(
        matches_up_to_sign(&b4, &cayley_form()),
        "B_4(pair) equals the Cayley form (up to one overall sign)".to_string(),
    );
    Ok(())
}

fn verify_12d_forms_and_reduction(out: &mut VerifyOutcome) -> Result<()> {
    let d = 6usize;
    let m1 = GaussianRational::from_int(-1);
    let p1 = GaussianRational::one();

    // k=2 e=2: B_2 = eb_5 ^ eb_6 up to sign
    let cons = words_to_constituents(d, &sets(&[&[], &[1, 2, 3, 4]]), None)
        .map_err(|e| anyhow!("{}", e))?;
    let b2 = configuration_form(&cons, 2).map_err(|e| anyhow!("{}", e))?;
    let mut want = ExtForm::zero(12);
    want.add_term(&[Label2d::eb(5), Label2d::eb(6)], GaussianRational::one());
    out.check(
        matches_up_to_sign(&b2, &want),
        "B_2(k=2 e=2) equals eb5^eb6 (up to sign)".to_string(),
    );

    // k=2 e=0: B_2 = omega up to sign
    let cons = words_to_constituents(d, &sets(&[&[], &[1, 2, 3, 4, 5, 6]]), None)
        .map_err(|e| anyhow!("{}", e))?;
    let b2 = configuration_form(&cons, 2).map_err(|e| anyhow!("{}", e))?;
    out.check(
        matches_up_to_sign(&b2, &omega(d, &[1, 2, 3, 4, 5, 6])),
        "B_2(k=2 e=0) equals omega (up to sign)".to_string(),
    );

    // k=3 triangle with representative signs (-1, 1, 1): the three-term display
    let cons = words_to_constituents(
        d,
        &sets(&[&[], &[1, 2, 3, 4], &[3, 4, 5, 6]]),
        Some(&[m1.clone(), p1.clone(), p1.clone()]),
    )
    .map_err(|e| anyhow!("{}", e))?;
    let b2 = configuration_form(&cons, 2).map_err(|e| anyhow!("{}", e))?;
    let mut want = ExtForm::zero(12);
    want.add_term(&[Label2d::eb(5), Label2d::eb(6)], GaussianRational::one());
    want.add_term(&[Label2d::eb(1), Label2d::eb(2)], GaussianRational::one());
    want.add_term(&[Label2d::e(3), Label2d::e(4)], GaussianRational::one());
    out.check(
        matches_up_to_sign(&b2, &want),
        "B_2(triangle) equals eb5^eb6 + eb1^eb2 + e3^e4 (up to sign)".to_string(),
    );

    // k=4 square with representative signs (-1, 1, 1, 1): the six-term display
    let cons = words_to_constituents(
        d,
        &sets(&[&[], &[1, 2, 3, 4], &[3, 4, 5, 6], &[1, 2, 5, 6]]),
        Some(&[m1.clone(), p1.clone(), p1.clone(), p1.clone()]),
    )
    .map_err(|e| anyhow!("{}", e))?;
    let b2 = configuration_form(&cons, 2).map_err(|e| anyhow!("{}", e))?;
    let mut want = ExtForm::zero(12);
    want.add_term(&[Label2d::eb(1), Label2d::eb(2)], GaussianRational::one());
    want.add_term(&[Label2d::eb(3), Label2d::eb(4)], GaussianRational::one());
    want.add_term(&[Label2d::eb(5), Label2d::eb(6)], GaussianRational::one());
    want.add_term(&[Label2d::e(1), Label2d::e(2)], GaussianRational::one());
    want.add_term(&[Label2d::e(3), Label2d::e(4)], GaussianRational::one());
    want.add_term(&[Label2d::e(5), Label2d::e(6)], GaussianRational::one());
    out.check(
        matches_up_to_sign(&b2, &want),
        "B_2(square) equals the six-term display (up to sign)".to_string(),
    );

    // the impurity-four reduction: same stabilizer dimension as k=2 e=0,
    // and the frame change brings B_2 to lambda * sum bbar_i ^ b_i
    let square = Configuration::new(d, square_words(), None).map_err(|e| anyhow!("{}", e))?;
    let square_spinor = spinor_core::comb::spinor_of(&square).map_err(|e| anyhow!("{}", e))?;
    let pair = Configuration::new(
        d,
        vec![Codeword(0), Codeword(0b111111)],
        None,
    )
    .map_err(|e| anyhow!("{}", e))?;
    let pair_spinor = spinor_core::comb::spinor_of(&pair).map_err(|e| anyhow!("{}", e))?;
    let (ds, _) = stabilizer_algebra(&square_spinor).map_err(|e| anyhow!("{}", e))?;
    let (dp, _) = stabilizer_algebra(&pair_spinor).map_err(|e| anyhow!("{}", e))?;
    out.check(
        ds == dp,
        format!("square stabilizer dim {} equals k=2 e=0 dim {}", ds, dp),
    );
    let frame = reduce_12d_k4(&square).map_err(|e| anyhow!("{}", e))?;
    out.check(
        frame.b.len() == 6 && frame.bbar.len() == 6,
        format!(
            "reduction frame built; B_2 = lambda * sum bbar_i^b_i with lambda = {}",
            frame.lambda.display()
        ),
    );
    Ok(())
}
