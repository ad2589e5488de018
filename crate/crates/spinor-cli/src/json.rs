//! JSON wire formats. Every integer that can grow is carried as a decimal
//! string, so arbitrary-precision rationals survive the round trip exactly.

use std::str::FromStr;
use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use spinor_core::comb::{Codeword, Configuration};
use spinor_core::extform::{ExtForm, Label2d};
use spinor_core::lie::LieElement;
use spinor_core::scalar::GaussianRational;
use spinor_core::spinor::{IndexSet, Spinor};

/// [re_num, re_den, im_num, im_den], decimal strings.
pub type CoeffJson = [String; 4];

pub fn coeff_to_json(c: &GaussianRational) -> CoeffJson {
    [
        c.re.numer().to_string(),
        c.re.denom().to_string(),
        c.im.numer().to_string(),
        c.im.denom().to_string(),
    ]
}

pub fn coeff_from_json(c: &CoeffJson) -> Result<GaussianRational> {
    let parse = |s: &str| -> Result<BigInt> {
        BigInt::from_str(s).with_context(|| format!("bad integer literal {:?}", s))
    };
    let re_den = parse(&c[1])?;
    let im_den = parse(&c[3])?;
    if re_den.is_zero() || im_den.is_zero() {
        bail!("zero denominator in coefficient");
    }
    Ok(GaussianRational::new(
        BigRational::new(parse(&c[0])?, re_den),
        BigRational::new(parse(&c[2])?, im_den),
    ))
}

#[derive(Serialize, Deserialize)]
pub struct SpinorTermJson {
    pub indices: Vec<usize>,
    pub coeff: CoeffJson,
}

#[derive(Serialize, Deserialize)]
pub struct SpinorJson {
    pub d: usize,
    pub terms: Vec<SpinorTermJson>,
}

pub fn spinor_to_json(psi: &Spinor) -> SpinorJson {
    SpinorJson {
        d: psi.half_dim(),
        terms: psi
            .terms()
            .map(|(s, c)| SpinorTermJson {
                indices: s.indices(),
                coeff: coeff_to_json(c),
            })
            .collect(),
    }
}

pub fn spinor_from_json(j: &SpinorJson) -> Result<Spinor> {
    if j.d < 1 || j.d > spinor_core::spinor::MAX_HALF_DIM {
        bail!("half dimension {} out of range", j.d);
    }
    let mut psi = Spinor::zero(j.d);
    for t in &j.terms {
        for &i in &t.indices {
            if i < 1 || i > j.d {
                bail!("index {} out of range 1..={}", i, j.d);
            }
        }
        let mut sorted = t.indices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != t.indices.len() {
            bail!("term has repeated indices: {:?}", t.indices);
        }
        if sorted.len() % 2 != 0 {
            bail!(
                "term {:?} has odd cardinality; semi-spinors carry even terms only",
                t.indices
            );
        }
        psi.add_term(IndexSet::from_indices(&sorted), coeff_from_json(&t.coeff)?);
    }
    Ok(psi)
}

#[derive(Serialize, Deserialize)]
pub struct ExtFormTermJson {
    pub labels: Vec<String>,
    pub coeff: CoeffJson,
}

#[derive(Serialize, Deserialize)]
pub struct ExtFormJson {
    pub dim2d: usize,
    pub terms: Vec<ExtFormTermJson>,
}

fn label_to_string(l: &Label2d) -> String {
    if l.barred {
        format!("eb{}", l.index)
    } else {
        format!("e{}", l.index)
    }
}

pub fn label_from_string(s: &str) -> Result<Label2d> {
    let (barred, rest) = if let Some(r) = s.strip_prefix("eb") {
        (true, r)
    } else if let Some(r) = s.strip_prefix('e') {
        (false, r)
    } else {
        bail!("bad label {:?}; expected e<i> or eb<i>", s);
    };
    let index: usize = rest
        .parse()
        .map_err(|_| anyhow!("bad label index in {:?}", s))?;
    Ok(Label2d { barred, index })
}

pub fn extform_to_json(f: &ExtForm) -> ExtFormJson {
    ExtFormJson {
        dim2d: f.dim2d(),
        terms: f
            .terms()
            .map(|(labs, c)| ExtFormTermJson {
                labels: labs.iter().map(label_to_string).collect(),
                coeff: coeff_to_json(c),
            })
            .collect(),
    }
}

pub fn extform_from_json(j: &ExtFormJson) -> Result<ExtForm> {
    let mut f = ExtForm::zero(j.dim2d);
    for t in &j.terms {
        let labs: Vec<Label2d> = t
            .labels
            .iter()
            .map(|s| label_from_string(s))
            .collect::<Result<_>>()?;
        f.add_term(&labs, coeff_from_json(&t.coeff)?);
    }
    Ok(f)
}

#[derive(Serialize, Deserialize)]
pub struct ConfigurationJson {
    pub d: usize,
    pub words: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<Vec<CoeffJson>>,
}

pub fn configuration_from_json(j: &ConfigurationJson) -> Result<Configuration> {
    let words: Vec<Codeword> = j
        .words
        .iter()
        .map(|w| {
            let mut mask = 0u32;
            for &i in w {
                if i < 1 || i > j.d {
                    bail!("word index {} out of range 1..={}", i, j.d);
                }
                mask |= 1 << (i - 1);
            }
            Ok(Codeword(mask))
        })
        .collect::<Result<_>>()?;
    let coeffs = match &j.coeffs {
        None => None,
        Some(cs) => Some(
            cs.iter()
                .map(coeff_from_json)
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    Configuration::new(j.d, words, coeffs).map_err(|e| anyhow!("bad configuration: {}", e))
}

pub fn configuration_to_json(c: &Configuration) -> ConfigurationJson {
    ConfigurationJson {
        d: c.half_dim,
        words: c
            .words
            .iter()
            .map(|w| w.as_index_set().indices())
            .collect(),
        coeffs: c
            .coeffs
            .as_ref()
            .map(|cs| cs.iter().map(coeff_to_json).collect()),
    }
}

/// Input files for `bilinear`, `stabilizer`, and `purity` name either a
/// spinor or a configuration; the field set decides which.
pub enum SpinorInput {
    Spinor(Spinor),
    Configuration(Configuration),
}

pub fn parse_spinor_input(text: &str) -> Result<SpinorInput> {
    let value: serde_json::Value = serde_json::from_str(text).context("invalid JSON")?;
    if value.get("words").is_some() {
        let j: ConfigurationJson =
            serde_json::from_value(value).context("invalid configuration JSON")?;
        Ok(SpinorInput::Configuration(configuration_from_json(&j)?))
    } else if value.get("terms").is_some() {
        let j: SpinorJson = serde_json::from_value(value).context("invalid spinor JSON")?;
        Ok(SpinorInput::Spinor(spinor_from_json(&j)?))
    } else {
        bail!("input JSON has neither \"terms\" (spinor) nor \"words\" (configuration)");
    }
}

#[derive(Serialize, Deserialize)]
pub struct LieElementJson {
    pub a: Vec<Vec<CoeffJson>>,
    pub beta: Vec<Vec<CoeffJson>>,
    pub b: Vec<Vec<CoeffJson>>,
}

pub fn lie_element_to_json(x: &LieElement) -> LieElementJson {
    let conv = |m: &Vec<Vec<GaussianRational>>| -> Vec<Vec<CoeffJson>> {
        m.iter()
            .map(|row| row.iter().map(coeff_to_json).collect())
            .collect()
    };
    LieElementJson {
        a: conv(&x.a),
        beta: conv(&x.beta),
        b: conv(&x.b),
    }
}
