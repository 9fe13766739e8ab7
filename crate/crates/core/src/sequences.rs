//! Sequences of positive roots and the named presets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orders::MonomialOrder;
use crate::rootdata::{RootSystem, WeylWord};

/// Where a sequence came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Custom,
    Fflv,
    String,
    Lusztig,
    Nz,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Origin::Custom => "custom",
            Origin::Fflv => "fflv",
            Origin::String => "string",
            Origin::Lusztig => "lusztig",
            Origin::Nz => "nz",
        };
        f.write_str(s)
    }
}

/// An ordered list of positive roots, repetitions allowed.
///
/// Whether the associated product map is birational is never checked; a
/// sequence that is not shows up later as a basis computation that falls short
/// of the expected dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BirationalSequence {
    roots: Vec<usize>,
    coeffs: Vec<Vec<i64>>,
    origin: Origin,
    word: Option<WeylWord>,
}

impl BirationalSequence {
    fn build(rs: &RootSystem, roots: Vec<usize>, origin: Origin, word: Option<WeylWord>) -> Self {
        let coeffs = roots.iter().map(|&k| rs.root(k).to_vec()).collect();
        BirationalSequence {
            roots,
            coeffs,
            origin,
            word,
        }
    }

    /// Canonical (0-based) root indices.
    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    /// Simple-root coefficient vectors of the entries.
    pub fn coeffs(&self) -> &[Vec<i64>] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    /// The reduced word a preset was built from.
    pub fn word(&self) -> Option<&WeylWord> {
        self.word.as_ref()
    }

    /// 1-based indices into the operators listing.
    pub fn indices(&self) -> Vec<usize> {
        self.roots.iter().map(|k| k + 1).collect()
    }

    /// Heights of the entries.
    pub fn heights(&self) -> Vec<u32> {
        self.coeffs
            .iter()
            .map(|c| c.iter().sum::<i64>() as u32)
            .collect()
    }
}

/// A sequence together with the order it is meant to be used with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preset {
    pub sequence: BirationalSequence,
    pub order: MonomialOrder,
}

/// Writes a root as a combination of simple roots, e.g. `2α1 + α2`.
pub fn format_root(coeffs: &[i64]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            if c == 1 {
                format!("α{}", i + 1)
            } else {
                format!("{c}α{}", i + 1)
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// The positive roots in canonical order with their 1-based indices.
pub fn operators_listing(rs: &RootSystem) -> Vec<(usize, String)> {
    rs.positive_roots()
        .iter()
        .enumerate()
        .map(|(k, r)| (k + 1, format_root(r)))
        .collect()
}

/// Sequence from 1-based indices into the operators listing.
pub fn seq_from_indices(rs: &RootSystem, indices: &[usize]) -> Result<BirationalSequence> {
    let roots = indices
        .iter()
        .map(|&i| {
            if i >= 1 && i <= rs.num_positive() {
                Ok(i - 1)
            } else {
                Err(Error::UnknownRoot(format!(
                    "index {i} (valid: 1..={})",
                    rs.num_positive()
                )))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BirationalSequence::build(rs, roots, Origin::Custom, None))
}

/// Sequence from simple-root coefficient vectors.
pub fn seq_from_coeffs(rs: &RootSystem, vectors: &[Vec<i64>]) -> Result<BirationalSequence> {
    let roots = vectors
        .iter()
        .map(|v| {
            if v.len() != rs.rank() {
                return Err(Error::UnknownRoot(format!("{v:?} has length {}", v.len())));
            }
            rs.root_index(v)
                .ok_or_else(|| Error::UnknownRoot(format!("{v:?} is not a positive root")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BirationalSequence::build(rs, roots, Origin::Custom, None))
}

/// All positive roots by descending height, ties in reversed canonical order.
pub fn seq_fflv(rs: &RootSystem) -> Preset {
    let roots: Vec<usize> = (0..rs.num_positive()).rev().collect();
    Preset {
        sequence: BirationalSequence::build(rs, roots, Origin::Fflv, None),
        order: MonomialOrder::DegRevLex,
    }
}

fn simple_roots_of(rs: &RootSystem, word: &WeylWord) -> Result<Vec<usize>> {
    word.letters()
        .iter()
        .map(|&i| {
            if i >= 1 && i <= rs.rank() {
                Ok(rs.simple_root_index(i - 1))
            } else {
                Err(Error::BadLetter {
                    letter: i,
                    rank: rs.rank(),
                })
            }
        })
        .collect()
}

/// The simple roots `alpha_{i_1}, ..., alpha_{i_N}` of a word, with `neglex`.
pub fn seq_string(rs: &RootSystem, word: &WeylWord) -> Result<Preset> {
    let roots = simple_roots_of(rs, word)?;
    Ok(Preset {
        sequence: BirationalSequence::build(rs, roots, Origin::String, Some(word.clone())),
        order: MonomialOrder::NegLex,
    })
}

/// Same roots as [`seq_string`], with `degrevlex`.
pub fn seq_nz(rs: &RootSystem, word: &WeylWord) -> Result<Preset> {
    let roots = simple_roots_of(rs, word)?;
    Ok(Preset {
        sequence: BirationalSequence::build(rs, roots, Origin::Nz, Some(word.clone())),
        order: MonomialOrder::DegRevLex,
    })
}

/// The roots `s_{i_1} ... s_{i_{k-1}}(alpha_{i_k})` of a reduced word, with
/// `wdegrevlex` weighted by their heights.
pub fn seq_lusztig(rs: &RootSystem, word: &WeylWord) -> Result<Preset> {
    simple_roots_of(rs, word)?;
    let roots = rs.roots_along_word(word)?;
    let sequence = BirationalSequence::build(rs, roots, Origin::Lusztig, Some(word.clone()));
    let order = MonomialOrder::WDegRevLex(sequence.heights());
    Ok(Preset { sequence, order })
}

/// Whether no later entry minus an earlier entry is a positive root.
pub fn is_good_enumeration(rs: &RootSystem, seq: &BirationalSequence) -> bool {
    let c = seq.coeffs();
    (0..c.len()).all(|i| {
        (i + 1..c.len()).all(|j| {
            let diff: Vec<i64> = c[j].iter().zip(&c[i]).map(|(a, b)| a - b).collect();
            rs.root_index(&diff).is_none()
        })
    })
}
