//! Essential exponents and the Minkowski-accelerated basis computation.
//!
//! For a sequence `S`, an order `>` and a dominant weight `lambda`, an exponent
//! `m` is essential when `f^m v_lambda` is independent of all `f^k v_lambda`
//! with `k < m` of the same weight. Per weight space the candidates are
//! processed in ascending order and the rank-increasing ones are kept.
//!
//! The set for `lambda` contains the Minkowski sum of the sets of any two
//! dominant weights adding up to `lambda`. [`Engine`] exploits this: it
//! collects these sums recursively and only runs linear algebra on weight
//! spaces that are still short of their multiplicity.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::chevalley::ChevalleyBasis;
use crate::error::{Error, Result};
use crate::irrep::{HighestWeightModule, MonomialEvaluator};
use crate::linalg::RankFilter;
use crate::orders::MonomialOrder;
use crate::rootdata::{dominant_decompositions, Family, RootSystem, Weight, WeightSystem};
use crate::sequences::BirationalSequence;
use crate::verma::{pbw_basis, VermaModule};

/// An exponent vector, one entry per position of the sequence.
pub type Exponent = Vec<u32>;

/// Default cap on the number of candidate exponents of a single weight space.
pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// How independence in `V(lambda)` is decided.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Backend {
    /// Explicit matrices of the irreducible module.
    #[default]
    Irreducible,
    /// Pairings with the PBW basis of the Verma module under the contravariant form.
    Shapovalov,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineOptions {
    /// Maximal number of candidates enumerated for one weight space.
    pub budget: u128,
    /// Stop collecting Minkowski sums once they already give the full dimension.
    pub early_exit: bool,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            budget: DEFAULT_BUDGET,
            early_exit: false,
        }
    }
}

/// A dominant weight with its multiplicity in a generator decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub weight: Weight,
    pub multiplicity: u32,
}

/// The essential exponents `es(S, >, lambda)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialSet {
    pub family: Family,
    pub rank: usize,
    pub lambda: Weight,
    pub sequence: BirationalSequence,
    pub order: MonomialOrder,
    /// Sorted ascending in `order`.
    pub exponents: Vec<Exponent>,
    /// Weights `mu_i` with multiplicities `a_i` such that the set is the
    /// Minkowski sum of `a_i` copies of each `es(mu_i)`.
    pub generators: Vec<Generator>,
    /// Whether `generators` is a genuine decomposition rather than `lambda` itself.
    pub fully_decomposed: bool,
}

impl EssentialSet {
    pub fn dimension(&self) -> usize {
        self.exponents.len()
    }

    pub fn contains(&self, k: &[u32]) -> bool {
        self.exponents
            .binary_search_by(|e| self.order.cmp(e, k))
            .is_ok()
    }

    /// Exponents grouped by their weight, keyed by depth.
    pub fn by_depth(&self) -> BTreeMap<Vec<u32>, Vec<Exponent>> {
        let mut out: BTreeMap<Vec<u32>, Vec<Exponent>> = BTreeMap::new();
        for k in &self.exponents {
            out.entry(exponent_depth(&self.sequence, k))
                .or_default()
                .push(k.clone());
        }
        out
    }

    pub fn report(&self) -> EssentialReport {
        EssentialReport {
            family: self.family.to_string(),
            rank: self.rank,
            weight: self.lambda.0.clone(),
            sequence: self.sequence.coeffs().to_vec(),
            order: self.order.to_string(),
            dimension: self.dimension(),
            monomials: self.exponents.clone(),
            generators: self.generators.clone(),
        }
    }
}

/// Serializable summary of an [`EssentialSet`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EssentialReport {
    pub family: String,
    pub rank: usize,
    pub weight: Vec<i64>,
    pub sequence: Vec<Vec<i64>>,
    pub order: String,
    pub dimension: usize,
    pub monomials: Vec<Exponent>,
    pub generators: Vec<Generator>,
}

/// Simple-root coordinates of `sum k_j beta_j`.
pub fn exponent_depth(seq: &BirationalSequence, k: &[u32]) -> Vec<u32> {
    let n = seq.coeffs().first().map_or(0, Vec::len);
    let mut d = vec![0u32; n];
    for (c, &e) in seq.coeffs().iter().zip(k) {
        if e > 0 {
            for (x, &b) in d.iter_mut().zip(c) {
                *x += e * b as u32;
            }
        }
    }
    d
}

fn check_order(seq: &BirationalSequence, order: &MonomialOrder) -> Result<()> {
    if let MonomialOrder::WDegRevLex(w) = order {
        if w.len() != seq.len() {
            return Err(Error::LengthMismatch {
                left: w.len(),
                right: seq.len(),
            });
        }
    }
    Ok(())
}

fn over_budget(what: String, projected: u128, cap: u128) -> Error {
    Error::Budget {
        what,
        projected,
        cap,
    }
}

/// Every `k` in `N^M` with `sum k_j beta_j = depth`.
pub fn candidate_exponents(seq: &BirationalSequence, depth: &[u32]) -> Vec<Exponent> {
    candidate_exponents_capped(seq, depth, u128::MAX).expect("uncapped enumeration")
}

fn candidate_exponents_capped(
    seq: &BirationalSequence,
    depth: &[u32],
    cap: u128,
) -> Result<Vec<Exponent>> {
    fn go(
        coeffs: &[Vec<i64>],
        pos: usize,
        rem: &mut [i64],
        cur: &mut Exponent,
        out: &mut Vec<Exponent>,
        cap: u128,
    ) -> bool {
        if pos == coeffs.len() {
            if rem.iter().all(|&x| x == 0) {
                out.push(cur.clone());
                if out.len() as u128 > cap {
                    return false;
                }
            }
            return true;
        }
        let b = &coeffs[pos];
        let max = b
            .iter()
            .zip(rem.iter())
            .filter(|(&c, _)| c > 0)
            .map(|(&c, &r)| r / c)
            .min()
            .unwrap_or(0);
        for e in 0..=max {
            for (x, &c) in rem.iter_mut().zip(b) {
                *x -= e * c;
            }
            cur[pos] = e as u32;
            let ok = go(coeffs, pos + 1, rem, cur, out, cap);
            for (x, &c) in rem.iter_mut().zip(b) {
                *x += e * c;
            }
            if !ok {
                return false;
            }
        }
        cur[pos] = 0;
        true
    }
    let mut out = Vec::new();
    let mut rem: Vec<i64> = depth.iter().map(|&d| d as i64).collect();
    let mut cur = vec![0; seq.len()];
    if go(seq.coeffs(), 0, &mut rem, &mut cur, &mut out, cap) {
        Ok(out)
    } else {
        Err(over_budget(
            format!("candidate exponents at depth {depth:?}"),
            out.len() as u128,
            cap,
        ))
    }
}

/// Candidates whose partial products `f_{beta_j}^{k_j} ... f_{beta_M}^{k_M} v_lambda`
/// stay inside the weights of `V(lambda)`; all others vanish.
fn pruned_candidates(
    weights: &WeightSystem,
    seq: &BirationalSequence,
    depth: &[u32],
    cap: u128,
) -> Result<Vec<Exponent>> {
    struct Ctx<'a> {
        weights: &'a WeightSystem,
        coeffs: &'a [Vec<i64>],
        support_before: Vec<Vec<bool>>,
        target: &'a [u32],
        cap: u128,
    }
    fn go(
        c: &Ctx<'_>,
        pos: usize,
        acc: &mut Vec<u32>,
        cur: &mut Exponent,
        out: &mut Vec<Exponent>,
    ) -> bool {
        if pos == 0 {
            if acc.as_slice() == c.target {
                out.push(cur.clone());
                if out.len() as u128 > c.cap {
                    return false;
                }
            }
            return true;
        }
        let j = pos - 1;
        let b = &c.coeffs[j];
        let saved = acc.clone();
        let mut e = 0u32;
        loop {
            let reachable = acc
                .iter()
                .zip(c.target)
                .enumerate()
                .all(|(i, (&a, &t))| a == t || c.support_before[j][i]);
            if reachable {
                cur[j] = e;
                if !go(c, j, acc, cur, out) {
                    return false;
                }
            }
            // one more factor f_{beta_j}
            let mut fits = true;
            for ((a, &t), &bc) in acc.iter_mut().zip(c.target).zip(b) {
                *a += bc as u32;
                if *a > t {
                    fits = false;
                }
            }
            if !fits || c.weights.index_of_depth(acc).is_none() {
                break;
            }
            e += 1;
        }
        cur[j] = 0;
        *acc = saved;
        true
    }
    let coeffs = seq.coeffs();
    let n = depth.len();
    let mut support_before = vec![vec![false; n]; coeffs.len() + 1];
    for j in 0..coeffs.len() {
        let mut s = support_before[j].clone();
        for (x, &c) in s.iter_mut().zip(&coeffs[j]) {
            *x |= c > 0;
        }
        support_before[j + 1] = s;
    }
    let ctx = Ctx {
        weights,
        coeffs,
        support_before,
        target: depth,
        cap,
    };
    let mut out = Vec::new();
    let mut acc = vec![0u32; n];
    let mut cur = vec![0u32; coeffs.len()];
    if go(&ctx, coeffs.len(), &mut acc, &mut cur, &mut out) {
        Ok(out)
    } else {
        Err(over_budget(
            format!("candidate exponents at depth {depth:?}"),
            out.len() as u128,
            cap,
        ))
    }
}

/// `{a + b}` over all pairs.
pub fn minkowski_sum(a: &[Exponent], b: &[Exponent]) -> Result<BTreeSet<Exponent>> {
    let mut out = BTreeSet::new();
    for x in a {
        for y in b {
            if x.len() != y.len() {
                return Err(Error::LengthMismatch {
                    left: x.len(),
                    right: y.len(),
                });
            }
            out.insert(x.iter().zip(y).map(|(p, q)| p + q).collect());
        }
    }
    Ok(out)
}

/// Exponents packed eight bits per entry into a `u128`, so that adding
/// packed values adds the exponents entrywise as long as no entry reaches 256.
fn pack(k: &[u32]) -> u128 {
    k.iter()
        .enumerate()
        .fold(0u128, |acc, (i, &e)| acc | (u128::from(e) << (8 * i)))
}

fn unpack(key: u128, width: usize) -> Exponent {
    (0..width)
        .map(|i| ((key >> (8 * i)) & 0xff) as u32)
        .collect()
}

fn max_entry(es: &EssentialSet) -> u32 {
    es.exponents
        .iter()
        .flat_map(|k| k.iter().copied())
        .max()
        .unwrap_or(0)
}

/// A set of exponents, packed when the entries are small enough.
enum KeySet {
    Packed(FxHashSet<u128>),
    Plain(BTreeSet<Exponent>),
}

impl KeySet {
    fn empty(packed: bool) -> Self {
        if packed {
            KeySet::Packed(FxHashSet::default())
        } else {
            KeySet::Plain(BTreeSet::new())
        }
    }

    fn sum(a: &EssentialSet, b: &EssentialSet, packed: bool) -> Result<Self> {
        if !packed {
            return Ok(KeySet::Plain(minkowski_sum(&a.exponents, &b.exponents)?));
        }
        let pa: Vec<u128> = a.exponents.iter().map(|k| pack(k)).collect();
        let pb: Vec<u128> = b.exponents.iter().map(|k| pack(k)).collect();
        let mut out =
            FxHashSet::with_capacity_and_hasher(pa.len().max(pb.len()), Default::default());
        for x in &pa {
            out.extend(pb.iter().map(|y| x + y));
        }
        Ok(KeySet::Packed(out))
    }

    fn len(&self) -> usize {
        match self {
            KeySet::Packed(s) => s.len(),
            KeySet::Plain(s) => s.len(),
        }
    }

    fn insert(&mut self, k: Exponent) {
        match self {
            KeySet::Packed(s) => {
                s.insert(pack(&k));
            }
            KeySet::Plain(s) => {
                s.insert(k);
            }
        }
    }

    fn absorb(&mut self, other: KeySet) {
        match (self, other) {
            (KeySet::Packed(s), KeySet::Packed(o)) => s.extend(o),
            (KeySet::Plain(s), KeySet::Plain(o)) => s.extend(o),
            _ => unreachable!("mixed key sets"),
        }
    }

    fn into_exponents(self, width: usize) -> BTreeSet<Exponent> {
        match self {
            KeySet::Packed(s) => s.into_iter().map(|k| unpack(k, width)).collect(),
            KeySet::Plain(s) => s,
        }
    }
}

/// Greedy selection in one weight space of `V(lambda)`: `seeds` are known to
/// be essential and go in first, then the remaining candidates in ascending order.
fn select_in_weight_space(
    eval: &mut MonomialEvaluator<'_>,
    space: usize,
    order: &MonomialOrder,
    seeds: &[Exponent],
    candidates: &[Exponent],
) -> Result<Vec<Exponent>> {
    let module = eval.module();
    let dim = module.weight_dim(space);
    let mut filter = RankFilter::new(dim);
    let mut chosen = Vec::with_capacity(dim);
    for k in seeds {
        let independent = match eval.evaluate(k) {
            Some(v) => {
                debug_assert_eq!(v.space, space);
                filter.insert(&v.coords)
            }
            None => false,
        };
        if !independent {
            return Err(Error::Inconsistent(format!(
                "exponent {k:?} from a Minkowski sum is not independent"
            )));
        }
        chosen.push(k.clone());
    }
    let seeded: BTreeSet<&Exponent> = seeds.iter().collect();
    for k in candidates {
        if filter.is_full() {
            break;
        }
        if seeded.contains(k) {
            continue;
        }
        if let Some(v) = eval.evaluate(k) {
            if filter.insert(&v.coords) {
                chosen.push(k.clone());
            }
        }
    }
    chosen.sort_by(|a, b| order.cmp(a, b));
    Ok(chosen)
}

fn not_birational(lambda: &Weight, mu: &Weight, found: usize, expected: u64) -> Error {
    Error::NotBirational {
        highest: lambda.clone(),
        weight: mu.clone(),
        found,
        expected: expected as usize,
    }
}

/// Computes `es(S, >, lambda)` weight space by weight space, with no shortcuts.
pub fn essential_direct(
    cb: &ChevalleyBasis,
    seq: &BirationalSequence,
    order: &MonomialOrder,
    lambda: &Weight,
    backend: Backend,
    options: &EngineOptions,
) -> Result<EssentialSet> {
    let rs = cb.root_system();
    rs.check_dominant(lambda)?;
    check_order(seq, order)?;
    let weights = rs.freudenthal_multiplicities(lambda)?;
    let mut exponents = Vec::new();
    match backend {
        Backend::Irreducible => {
            let module = HighestWeightModule::with_root_vectors(cb, lambda)?;
            let mut eval = MonomialEvaluator::new(&module, seq.roots());
            for (w, entry) in weights.entries.iter().enumerate() {
                let mut cands = candidate_exponents_capped(seq, &entry.depth, options.budget)?;
                order.sort(&mut cands);
                let chosen = select_in_weight_space(&mut eval, w, order, &[], &cands)?;
                if (chosen.len() as u64) < entry.mult {
                    return Err(not_birational(
                        lambda,
                        &entry.weight,
                        chosen.len(),
                        entry.mult,
                    ));
                }
                exponents.extend(chosen);
            }
        }
        Backend::Shapovalov => {
            let verma = VermaModule::new(cb, lambda)?;
            for entry in &weights.entries {
                let mut cands = candidate_exponents_capped(seq, &entry.depth, options.budget)?;
                order.sort(&mut cands);
                let basis = pbw_basis(rs, &entry.depth);
                let mut filter = RankFilter::new(basis.len());
                let mut found = 0u64;
                for k in cands {
                    if found == entry.mult {
                        break;
                    }
                    let v = verma.monomial_vector(seq, &k)?;
                    if v.is_zero() {
                        continue;
                    }
                    let image: Vec<_> = basis.iter().map(|a| verma.pair_monomial(a, &v)).collect();
                    if filter.insert(&image) {
                        found += 1;
                        exponents.push(k);
                    }
                }
                if found < entry.mult {
                    return Err(not_birational(
                        lambda,
                        &entry.weight,
                        found as usize,
                        entry.mult,
                    ));
                }
            }
        }
    }
    exponents.sort_by(|a, b| order.cmp(a, b));
    Ok(EssentialSet {
        family: rs.family(),
        rank: rs.rank(),
        lambda: lambda.clone(),
        sequence: seq.clone(),
        order: order.clone(),
        exponents,
        generators: vec![Generator {
            weight: lambda.clone(),
            multiplicity: 1,
        }],
        fully_decomposed: false,
    })
}

/// Generator multiset as a list sorted descending in graded lexicographic order.
fn expand(gens: &[Generator]) -> Vec<Weight> {
    let mut out: Vec<Weight> = gens
        .iter()
        .flat_map(|g| std::iter::repeat_n(g.weight.clone(), g.multiplicity as usize))
        .collect();
    out.sort_by(|a, b| b.cmp_graded_lex(a));
    out
}

fn compare_generator_lists(a: &[Weight], b: &[Weight]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        let o = x.cmp_graded_lex(y);
        if o != Ordering::Equal {
            return o;
        }
    }
    a.len().cmp(&b.len())
}

fn collect_generators(list: &[Weight]) -> Vec<Generator> {
    let mut out: Vec<Generator> = Vec::new();
    for w in list {
        match out.last_mut() {
            Some(g) if &g.weight == w => g.multiplicity += 1,
            _ => out.push(Generator {
                weight: w.clone(),
                multiplicity: 1,
            }),
        }
    }
    out
}

/// Memoized Minkowski-accelerated computation of essential sets for a fixed
/// sequence and order.
pub struct Engine {
    cb: Arc<ChevalleyBasis>,
    sequence: BirationalSequence,
    order: MonomialOrder,
    options: EngineOptions,
    memo: HashMap<Weight, Arc<EssentialSet>>,
    solved: Vec<Weight>,
}

impl Engine {
    pub fn new(
        cb: Arc<ChevalleyBasis>,
        sequence: BirationalSequence,
        order: MonomialOrder,
        options: EngineOptions,
    ) -> Result<Self> {
        check_order(&sequence, &order)?;
        Ok(Engine {
            cb,
            sequence,
            order,
            options,
            memo: HashMap::new(),
            solved: Vec::new(),
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        self.cb.root_system()
    }

    pub fn sequence(&self) -> &BirationalSequence {
        &self.sequence
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Weights for which some weight space had to be completed by linear
    /// algebra, in the order they were finished.
    pub fn visited(&self) -> &[Weight] {
        &self.solved
    }

    /// Weights `mu <= lambda` whose essential set is not covered by Minkowski
    /// sums of smaller weights, i.e. the generators of the essential monoid
    /// below `lambda`. Sorted in graded lexicographic order.
    pub fn monoid_generators(&self, lambda: &Weight) -> Vec<Weight> {
        let mut out: Vec<Weight> = self
            .solved
            .iter()
            .filter(|w| w.le_componentwise(lambda))
            .cloned()
            .collect();
        out.sort_by(|a, b| a.cmp_graded_lex(b));
        out
    }

    /// Previously computed result, if any.
    pub fn cached(&self, lambda: &Weight) -> Option<Arc<EssentialSet>> {
        self.memo.get(lambda).cloned()
    }

    /// `es(S, >, lambda)` together with a minimal generator decomposition.
    pub fn compute(&mut self, lambda: &Weight) -> Result<Arc<EssentialSet>> {
        self.root_system().check_dominant(lambda)?;
        if let Some(hit) = self.memo.get(lambda) {
            return Ok(hit.clone());
        }
        let dim = self.root_system().weyl_dimension(lambda)?;
        let mut parts = Vec::new();
        for (mu1, mu2) in dominant_decompositions(lambda) {
            parts.push((self.compute(&mu1)?, self.compute(&mu2)?));
        }
        let width = self.sequence.len();
        let packed = width <= 16 && parts.iter().all(|(a, b)| max_entry(a) + max_entry(b) < 256);
        let mut collected = KeySet::empty(packed);
        let mut best: Option<Vec<Weight>> = None;
        if lambda.is_zero() {
            collected.insert(vec![0; width]);
            best = Some(Vec::new());
        }
        let mut consider =
            |a: &EssentialSet, b: &EssentialSet, sum: KeySet, collected: &mut KeySet| {
                if sum.len() as u128 == dim {
                    let mut list = expand(&a.generators);
                    list.extend(expand(&b.generators));
                    list.sort_by(|x, y| y.cmp_graded_lex(x));
                    if best
                        .as_ref()
                        .is_none_or(|cur| compare_generator_lists(&list, cur) == Ordering::Less)
                    {
                        best = Some(list);
                    }
                }
                collected.absorb(sum);
            };
        if self.options.early_exit {
            for (a, b) in &parts {
                consider(a, b, KeySet::sum(a, b, packed)?, &mut collected);
                if collected.len() as u128 == dim {
                    break;
                }
            }
        } else {
            let sums: Vec<KeySet> = parts
                .par_iter()
                .map(|(a, b)| KeySet::sum(a, b, packed))
                .collect::<Result<_>>()?;
            for ((a, b), sum) in parts.iter().zip(sums) {
                consider(a, b, sum, &mut collected);
            }
        }
        let collected = collected.into_exponents(width);
        if collected.len() as u128 > dim {
            return Err(Error::Inconsistent(format!(
                "Minkowski sums for {lambda} produce {} exponents but the dimension is {dim}",
                collected.len()
            )));
        }
        let exponents: Vec<Exponent> = if (collected.len() as u128) < dim {
            self.solved.push(lambda.clone());
            self.complete(lambda, collected)?
        } else {
            collected.into_iter().collect()
        };
        let mut exponents = exponents;
        exponents.sort_by(|a, b| self.order.cmp(a, b));
        let rs = self.root_system();
        let (generators, fully_decomposed) = match best {
            Some(list) => (collect_generators(&list), true),
            None => (
                vec![Generator {
                    weight: lambda.clone(),
                    multiplicity: 1,
                }],
                false,
            ),
        };
        let result = Arc::new(EssentialSet {
            family: rs.family(),
            rank: rs.rank(),
            lambda: lambda.clone(),
            sequence: self.sequence.clone(),
            order: self.order.clone(),
            exponents,
            generators,
            fully_decomposed,
        });
        self.memo.insert(lambda.clone(), result.clone());
        Ok(result)
    }

    /// Fills the weight spaces the Minkowski sums leave short.
    fn complete(&self, lambda: &Weight, known: BTreeSet<Exponent>) -> Result<Vec<Exponent>> {
        let module = HighestWeightModule::with_root_vectors(&self.cb, lambda)?;
        let weights = module.weights().clone();
        let mut by_depth: HashMap<Vec<u32>, Vec<Exponent>> = HashMap::new();
        for k in known {
            by_depth
                .entry(exponent_depth(&self.sequence, &k))
                .or_default()
                .push(k);
        }
        let mut eval = MonomialEvaluator::new(&module, self.sequence.roots());
        let mut out = Vec::with_capacity(module.dim());
        for (w, entry) in weights.entries.iter().enumerate() {
            let mut seeds = by_depth.remove(&entry.depth).unwrap_or_default();
            if seeds.len() as u64 == entry.mult {
                out.extend(seeds);
                continue;
            }
            if seeds.len() as u64 > entry.mult {
                return Err(Error::Inconsistent(format!(
                    "{} exponents collected for weight {} of multiplicity {}",
                    seeds.len(),
                    entry.weight,
                    entry.mult
                )));
            }
            seeds.sort_by(|a, b| self.order.cmp(a, b));
            let mut cands =
                pruned_candidates(&weights, &self.sequence, &entry.depth, self.options.budget)?;
            self.order.sort(&mut cands);
            let chosen = select_in_weight_space(&mut eval, w, &self.order, &seeds, &cands)?;
            if (chosen.len() as u64) < entry.mult {
                return Err(not_birational(
                    lambda,
                    &entry.weight,
                    chosen.len(),
                    entry.mult,
                ));
            }
            out.extend(chosen);
        }
        if let Some((depth, _)) = by_depth.into_iter().next() {
            return Err(Error::Inconsistent(format!(
                "Minkowski sum exponent of depth {depth:?} is not a weight of V{lambda}"
            )));
        }
        Ok(out)
    }
}

/// One-shot [`Engine`] run.
pub fn compute_basis(
    cb: Arc<ChevalleyBasis>,
    seq: &BirationalSequence,
    order: &MonomialOrder,
    lambda: &Weight,
    options: &EngineOptions,
) -> Result<Arc<EssentialSet>> {
    Engine::new(cb, seq.clone(), order.clone(), options.clone())?.compute(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::SignConvention;
    use crate::rootdata::WeylWord;
    use crate::sequences::{seq_fflv, seq_from_indices, seq_lusztig, seq_string};

    fn basis(f: Family, n: usize) -> Arc<ChevalleyBasis> {
        Arc::new(ChevalleyBasis::new(Arc::new(RootSystem::new(f, n).unwrap())).unwrap())
    }

    fn set_of(v: &[Exponent]) -> BTreeSet<Exponent> {
        v.iter().cloned().collect()
    }

    #[test]
    fn candidates_sl3() {
        let cb = basis(Family::A, 2);
        let rs = cb.root_system();
        let s = seq_from_indices(rs, &[1, 3, 2]).unwrap();
        let c = set_of(&candidate_exponents(&s, &[2, 2]));
        assert_eq!(c, set_of(&[vec![1, 1, 1], vec![0, 2, 0], vec![2, 0, 2]]));
        let s3 = seq_from_indices(rs, &[1, 2, 1]).unwrap();
        let c = set_of(&candidate_exponents(&s3, &[2, 2]));
        assert_eq!(c, set_of(&[vec![1, 2, 1], vec![2, 2, 0], vec![0, 2, 2]]));
        assert_eq!(candidate_exponents(&s3, &[0, 0]), vec![vec![0, 0, 0]]);

        let ws = rs.freudenthal_multiplicities(&Weight(vec![1, 1])).unwrap();
        let pruned = set_of(&pruned_candidates(&ws, &s3, &[2, 2], 100).unwrap());
        assert!(pruned.contains(&vec![1, 2, 1]));
        assert!(pruned.is_subset(&c));
        assert!(matches!(
            candidate_exponents_capped(&s, &[2, 2], 2),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn sl3_lowest_weight_choices() {
        let cb = basis(Family::A, 2);
        let rs = cb.root_system();
        let lam = Weight(vec![1, 1]);
        let opts = EngineOptions::default();
        let lowest = |seq: &BirationalSequence, order: &MonomialOrder, backend| {
            let es = essential_direct(&cb, seq, order, &lam, backend, &opts).unwrap();
            es.by_depth()[&vec![2, 2]].clone()
        };
        for backend in [Backend::Irreducible, Backend::Shapovalov] {
            let s1 = seq_from_indices(rs, &[1, 3, 2]).unwrap();
            assert_eq!(
                lowest(&s1, &MonomialOrder::NegLex, backend),
                vec![vec![1, 1, 1]]
            );
            let s2 = seq_from_indices(rs, &[3, 1, 2]).unwrap();
            assert_eq!(
                lowest(&s2, &MonomialOrder::NegLex, backend),
                vec![vec![2, 0, 0]]
            );
            let s3 = seq_from_indices(rs, &[1, 2, 1]).unwrap();
            for o in MonomialOrder::all_kinds(vec![1, 1, 1]) {
                assert_eq!(lowest(&s3, &o, backend), vec![vec![1, 2, 1]]);
            }
        }
    }

    #[test]
    fn trivial_weight() {
        let cb = basis(Family::A, 2);
        let s = seq_fflv(cb.root_system()).sequence;
        let es = compute_basis(
            cb.clone(),
            &s,
            &MonomialOrder::DegRevLex,
            &Weight(vec![0, 0]),
            &EngineOptions::default(),
        )
        .unwrap();
        assert_eq!(es.exponents, vec![vec![0, 0, 0]]);
        assert!(es.generators.is_empty());
    }

    #[test]
    fn packed_sums_match_plain_sums() {
        let k = vec![3, 0, 255, 1, 0, 7];
        assert_eq!(unpack(pack(&k), 6), k);
        let cb = basis(Family::B, 2);
        let p = seq_fflv(cb.root_system());
        let a = compute_basis(
            cb.clone(),
            &p.sequence,
            &p.order,
            &Weight(vec![1, 1]),
            &EngineOptions::default(),
        )
        .unwrap();
        let b = compute_basis(
            cb,
            &p.sequence,
            &p.order,
            &Weight(vec![0, 2]),
            &EngineOptions::default(),
        )
        .unwrap();
        let packed = KeySet::sum(&a, &b, true)
            .unwrap()
            .into_exponents(p.sequence.len());
        let plain = KeySet::sum(&a, &b, false)
            .unwrap()
            .into_exponents(p.sequence.len());
        assert_eq!(packed, plain);
        assert_eq!(plain, minkowski_sum(&a.exponents, &b.exponents).unwrap());
    }

    #[test]
    fn minkowski_basics() {
        let a = vec![vec![1, 0], vec![0, 0]];
        assert_eq!(minkowski_sum(&a, &[vec![0, 0]]).unwrap(), set_of(&a));
        assert_eq!(
            minkowski_sum(&[vec![1, 0]], &[vec![0, 1]]).unwrap(),
            set_of(&[vec![1, 1]])
        );
        assert!(minkowski_sum(&[vec![1]], &[vec![0, 1]]).is_err());
    }

    #[test]
    fn engine_matches_direct_on_small_cases() {
        let opts = EngineOptions::default();
        for (f, n, lams) in [
            (
                Family::A,
                2,
                vec![vec![1, 1], vec![2, 1], vec![2, 2], vec![3, 0]],
            ),
            (Family::B, 2, vec![vec![1, 1], vec![2, 1]]),
            (Family::G, 2, vec![vec![1, 1], vec![2, 0]]),
        ] {
            let cb = basis(f, n);
            let rs = cb.root_system();
            let w0 = rs.longest_word();
            let presets = [
                seq_fflv(rs),
                seq_string(rs, &w0).unwrap(),
                seq_lusztig(rs, &w0).unwrap(),
            ];
            for p in presets {
                let mut engine = Engine::new(
                    cb.clone(),
                    p.sequence.clone(),
                    p.order.clone(),
                    opts.clone(),
                )
                .unwrap();
                for lam in &lams {
                    let lam = Weight(lam.clone());
                    let fast = engine.compute(&lam).unwrap();
                    let direct = essential_direct(
                        &cb,
                        &p.sequence,
                        &p.order,
                        &lam,
                        Backend::Irreducible,
                        &opts,
                    )
                    .unwrap();
                    assert_eq!(
                        fast.exponents,
                        direct.exponents,
                        "{f}{n} {lam} {:?}",
                        p.sequence.origin()
                    );
                    assert_eq!(fast.dimension() as u128, rs.weyl_dimension(&lam).unwrap());
                }
            }
        }
    }

    #[test]
    fn generator_decomposition_sl3() {
        let cb = basis(Family::A, 2);
        let rs = cb.root_system();
        let s = seq_string(rs, &WeylWord(vec![1, 2, 1])).unwrap();
        let mut engine =
            Engine::new(cb.clone(), s.sequence, s.order, EngineOptions::default()).unwrap();
        let fund = engine.compute(&Weight(vec![1, 0])).unwrap();
        assert_eq!(
            fund.generators,
            vec![Generator {
                weight: Weight(vec![1, 0]),
                multiplicity: 1
            }]
        );
        assert!(!fund.fully_decomposed);
        let es = engine.compute(&Weight(vec![2, 1])).unwrap();
        let total: Vec<i64> = es.generators.iter().fold(vec![0, 0], |mut acc, g| {
            for (a, x) in acc.iter_mut().zip(&g.weight.0) {
                *a += x * g.multiplicity as i64;
            }
            acc
        });
        assert_eq!(total, vec![2, 1]);
    }

    #[test]
    fn sets_do_not_depend_on_sign_convention() {
        for (f, n, lam) in [(Family::A, 2, vec![2, 1]), (Family::B, 2, vec![1, 1])] {
            let rs = Arc::new(RootSystem::new(f, n).unwrap());
            let std = Arc::new(ChevalleyBasis::new(rs.clone()).unwrap());
            let alt = Arc::new(
                ChevalleyBasis::with_convention(rs.clone(), SignConvention::Alternating).unwrap(),
            );
            let lam = Weight(lam);
            let w0 = rs.longest_word();
            for p in [seq_fflv(&rs), seq_lusztig(&rs, &w0).unwrap()] {
                let a = compute_basis(
                    std.clone(),
                    &p.sequence,
                    &p.order,
                    &lam,
                    &EngineOptions::default(),
                )
                .unwrap();
                let b = compute_basis(
                    alt.clone(),
                    &p.sequence,
                    &p.order,
                    &lam,
                    &EngineOptions::default(),
                )
                .unwrap();
                assert_eq!(a.exponents, b.exponents);
            }
        }
    }

    #[test]
    fn short_sequence_is_reported() {
        let cb = basis(Family::A, 2);
        let rs = cb.root_system();
        let s = seq_from_indices(rs, &[1, 2]).unwrap();
        let err = compute_basis(
            cb.clone(),
            &s,
            &MonomialOrder::Lex,
            &Weight(vec![1, 1]),
            &EngineOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotBirational { .. }));
        assert!(err.to_string().contains("probably not birational"));
    }

    #[test]
    fn weighted_order_length_checked() {
        let cb = basis(Family::A, 2);
        let s = seq_fflv(cb.root_system()).sequence;
        assert!(Engine::new(
            cb,
            s,
            MonomialOrder::WDegRevLex(vec![1, 2]),
            EngineOptions::default()
        )
        .is_err());
    }
}
