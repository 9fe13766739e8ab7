//! Truncated monoid generators and the reduced-word generator census.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chevalley::ChevalleyBasis;
use crate::error::{Error, Result};
use crate::essential::{minkowski_sum, Engine, EngineOptions, Exponent, Generator};
use crate::rootdata::{RootSystem, Weight, WeylWord};
use crate::sequences::seq_string;

/// Exponents of degree `k` that are not sums of exponents of lower degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KodairaDegree {
    pub k: u32,
    pub dimension: usize,
    pub new: Vec<Exponent>,
    pub monomials: Vec<Exponent>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KodairaResult {
    pub weight: Weight,
    pub degree: u32,
    pub counts: Vec<usize>,
    pub degrees: Vec<KodairaDegree>,
    /// Set when the run stopped early; holds the reason.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncated: Option<String>,
}

/// Generators of the graded monoid of essential sets of `lambda, 2 lambda, ..., d lambda`
/// up to degree `d`.
///
/// A budget overrun at some degree ends the run with the degrees completed so far.
pub fn kodaira(engine: &mut Engine, lambda: &Weight, d: u32) -> Result<KodairaResult> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "the degree must be at least 1".into(),
        ));
    }
    engine.root_system().check_dominant(lambda)?;
    let mut sets: Vec<Vec<Exponent>> = Vec::new();
    let mut degrees = Vec::new();
    let mut truncated = None;
    for k in 1..=d {
        let es = match engine.compute(&(lambda * k as i64)) {
            Ok(es) => es,
            Err(e @ Error::Budget { .. }) => {
                truncated = Some(e.to_string());
                break;
            }
            Err(e) => return Err(e),
        };
        let mut reachable: BTreeSet<Exponent> = BTreeSet::new();
        for l in 1..k {
            let (a, b) = (&sets[(l - 1) as usize], &sets[(k - l - 1) as usize]);
            if l <= k - l {
                reachable.extend(minkowski_sum(a, b)?);
            }
        }
        let new: Vec<Exponent> = es
            .exponents
            .iter()
            .filter(|m| !reachable.contains(*m))
            .cloned()
            .collect();
        sets.push(es.exponents.clone());
        degrees.push(KodairaDegree {
            k,
            dimension: es.dimension(),
            new,
            monomials: es.exponents.clone(),
        });
    }
    Ok(KodairaResult {
        weight: lambda.clone(),
        degree: d,
        counts: degrees.iter().map(|x| x.new.len()).collect(),
        degrees,
        truncated,
    })
}

/// Limits for enumerating commutation classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusOptions {
    pub max_rank: usize,
    pub long_run: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            max_rank: 4,
            long_run: false,
        }
    }
}

/// Depth-first walk over reduced words of `w0` in lexicographic normal form
/// for commuting letters. Calls `visit` on each complete word; stops when it
/// returns false.
fn walk_classes(rs: &RootSystem, mut visit: impl FnMut(&[usize]) -> bool) {
    let n = rs.rank();
    let len = rs.num_positive();
    let commute = |a: usize, b: usize| a != b && rs.cartan()[a][b] == 0;
    fn go(
        rs: &RootSystem,
        len: usize,
        y: &mut Vec<i64>,
        word: &mut Vec<usize>,
        commute: &dyn Fn(usize, usize) -> bool,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if word.len() == len {
            return visit(word);
        }
        for j in 0..rs.rank() {
            if y[j] <= 0 {
                continue;
            }
            // reject a factor b u a with a < b where a commutes with b and all of u
            let mut normal = true;
            for &b in word.iter().rev() {
                if !commute(j, b) {
                    break;
                }
                if b > j {
                    normal = false;
                    break;
                }
            }
            if !normal {
                continue;
            }
            let saved = y.clone();
            rs.reflect_weight(y, j);
            word.push(j);
            let go_on = go(rs, len, y, word, commute, visit);
            word.pop();
            *y = saved;
            if !go_on {
                return false;
            }
        }
        true
    }
    let mut y = vec![1i64; n];
    let mut word = Vec::with_capacity(len);
    go(rs, len, &mut y, &mut word, &commute, &mut visit);
}

/// Number of commutation classes, counted up to `cap`.
pub fn count_commutation_classes(rs: &RootSystem, cap: u128) -> u128 {
    let mut count = 0u128;
    walk_classes(rs, |_| {
        count += 1;
        count < cap
    });
    count
}

/// One reduced word of `w0` per commutation class, each the lexicographically
/// smallest word of its class, in lexicographic order.
pub fn reduced_words_w0(rs: &RootSystem, options: &CensusOptions) -> Result<Vec<WeylWord>> {
    if rs.rank() > options.max_rank && !options.long_run {
        return Err(Error::CensusTooLarge {
            rank: rs.rank(),
            limit: options.max_rank,
            classes: count_commutation_classes(rs, 1_000_000),
        });
    }
    let mut out = Vec::new();
    walk_classes(rs, |w| {
        out.push(WeylWord(w.iter().map(|j| j + 1).collect()));
        true
    });
    Ok(out)
}

/// Result for one word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusWord {
    pub word: WeylWord,
    pub dimension: usize,
    /// Weights below `lambda` with essential exponents that are not sums of
    /// exponents of smaller weights.
    pub monoid_generators: Vec<Weight>,
    /// Minimal Minkowski decomposition of the set for `lambda`.
    pub decomposition: Vec<Generator>,
}

/// Generator sets with their frequencies; all fundamental weights together
/// are listed as `fundamentals`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub generators: Vec<String>,
    pub frequency: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusResult {
    pub weight: Weight,
    pub classes: usize,
    pub table: Vec<CensusRow>,
    pub words: Vec<CensusWord>,
    /// Largest level (coordinate sum) of any generator.
    pub max_generator_level: i64,
}

fn census_key(rank: usize, gens: &[Weight]) -> Vec<String> {
    let weights: BTreeSet<&Weight> = gens.iter().collect();
    let fundamentals: Vec<Weight> = (0..rank).map(|i| Weight::fundamental(rank, i)).collect();
    let all_fundamentals = fundamentals.iter().all(|f| weights.contains(f));
    let mut rest: Vec<&Weight> = weights
        .into_iter()
        .filter(|w| !(all_fundamentals && fundamentals.contains(w)))
        .collect();
    rest.sort_by(|a, b| a.cmp_graded_lex(b));
    let mut key = Vec::new();
    if all_fundamentals {
        key.push("fundamentals".to_string());
    }
    key.extend(rest.into_iter().map(Weight::to_string));
    key
}

/// For every commutation class of reduced words of `w0`, the monoid
/// generators below `lambda` for the string sequence of the word with `neglex`.
pub fn generator_census(
    cb: Arc<ChevalleyBasis>,
    lambda: &Weight,
    options: &CensusOptions,
    engine_options: &EngineOptions,
) -> Result<CensusResult> {
    let rs = cb.root_system();
    rs.check_dominant(lambda)?;
    let words = reduced_words_w0(rs, options)?;
    let results: Vec<CensusWord> = words
        .par_iter()
        .map(|w| {
            let preset = seq_string(cb.root_system(), w)?;
            let mut engine = Engine::new(
                cb.clone(),
                preset.sequence,
                preset.order,
                engine_options.clone(),
            )?;
            let es = engine.compute(lambda)?;
            Ok(CensusWord {
                word: w.clone(),
                dimension: es.dimension(),
                monoid_generators: engine.monoid_generators(lambda),
                decomposition: es.generators.clone(),
            })
        })
        .collect::<Result<_>>()?;
    let mut freq: BTreeMap<Vec<String>, usize> = BTreeMap::new();
    for r in &results {
        *freq
            .entry(census_key(rs.rank(), &r.monoid_generators))
            .or_default() += 1;
    }
    let mut table: Vec<CensusRow> = freq
        .into_iter()
        .map(|(generators, frequency)| CensusRow {
            generators,
            frequency,
        })
        .collect();
    table.sort_by(|a, b| {
        b.frequency
            .cmp(&a.frequency)
            .then_with(|| a.generators.cmp(&b.generators))
    });
    let max_generator_level = results
        .iter()
        .flat_map(|r| r.monoid_generators.iter().map(Weight::level))
        .max()
        .unwrap_or(0);
    Ok(CensusResult {
        weight: lambda.clone(),
        classes: results.len(),
        table,
        words: results,
        max_generator_level,
    })
}
