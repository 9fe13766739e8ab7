//! Chevalley basis structure constants and the Lie bracket on basis elements.
//!
//! Root vectors are fixed inductively along the canonical root enumeration:
//! for a non-simple positive root `xi` the extraspecial pair is `(alpha_i, xi - alpha_i)`
//! with `i` minimal, and `e_xi = [e_{alpha_i}, e_{xi - alpha_i}] / (sign (p + 1))`,
//! `f_xi = -[f_{alpha_i}, f_{xi - alpha_i}] / (sign (p + 1))`. The remaining constants
//! `N_{gamma, delta}` are read off the adjoint module built from the simple generators.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::irrep::HighestWeightModule;
use crate::linalg::{q, Q};
use crate::rootdata::RootSystem;

/// A root `+beta_k` or `-beta_k` of the full root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedRoot {
    pub index: usize,
    pub positive: bool,
}

impl SignedRoot {
    pub fn pos(index: usize) -> Self {
        SignedRoot {
            index,
            positive: true,
        }
    }

    pub fn neg(index: usize) -> Self {
        SignedRoot {
            index,
            positive: false,
        }
    }

    pub fn negate(self) -> Self {
        SignedRoot {
            index: self.index,
            positive: !self.positive,
        }
    }
}

/// Chevalley basis elements: `e_beta`, `f_beta` for positive roots (canonical
/// index) and the simple coroots `h_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisElement {
    E(usize),
    F(usize),
    H(usize),
}

impl BasisElement {
    fn as_root(self) -> Option<SignedRoot> {
        match self {
            BasisElement::E(k) => Some(SignedRoot::pos(k)),
            BasisElement::F(k) => Some(SignedRoot::neg(k)),
            BasisElement::H(_) => None,
        }
    }

    fn from_root(r: SignedRoot) -> Self {
        if r.positive {
            BasisElement::E(r.index)
        } else {
            BasisElement::F(r.index)
        }
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElement::E(k) => write!(f, "e{}", k + 1),
            BasisElement::F(k) => write!(f, "f{}", k + 1),
            BasisElement::H(i) => write!(f, "h{}", i + 1),
        }
    }
}

/// Integer combination of basis elements.
pub type LieElement = BTreeMap<BasisElement, i64>;

/// Sign choice for the extraspecial pairs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SignConvention {
    /// All extraspecial constants positive.
    #[default]
    Standard,
    /// Extraspecial constants alternate in sign along the canonical enumeration.
    Alternating,
}

#[derive(Clone, Debug)]
pub struct ChevalleyBasis {
    rs: Arc<RootSystem>,
    convention: SignConvention,
    nconst: HashMap<(SignedRoot, SignedRoot), i64>,
    /// For non-simple positive roots: (simple root index, canonical index of the rest).
    extraspecial: Vec<Option<(usize, usize)>>,
}

impl ChevalleyBasis {
    pub fn new(rs: Arc<RootSystem>) -> Result<Self> {
        Self::with_convention(rs, SignConvention::Standard)
    }

    pub fn with_convention(rs: Arc<RootSystem>, convention: SignConvention) -> Result<Self> {
        let n = rs.rank();
        let nroots = rs.num_positive();
        let mut extraspecial = vec![None; nroots];
        let mut nconst: HashMap<(SignedRoot, SignedRoot), i64> = HashMap::new();

        let theta = rs.root_to_weight(rs.root(rs.highest_root()));
        let mut adjoint = HighestWeightModule::new(rs.clone(), &theta)?;

        let mut nonsimple = 0usize;
        for k in 0..nroots {
            if rs.height(k) == 1 {
                continue;
            }
            let xi = rs.root(k).to_vec();
            let (a, b) = (0..n)
                .find_map(|i| {
                    let mut rest = xi.clone();
                    rest[i] -= 1;
                    (rest[i] >= 0)
                        .then(|| rs.root_index(&rest))
                        .flatten()
                        .map(|b| (rs.simple_root_index(i), b))
                })
                .expect("non-simple root has a simple summand");
            let i = (0..n)
                .find(|&i| rs.simple_root_index(i) == a)
                .expect("simple");
            let mut p = 0i64;
            let mut probe = rs.root(b).to_vec();
            loop {
                probe[i] -= 1;
                if probe[i] >= 0 && rs.root_index(&probe).is_some() {
                    p += 1;
                } else {
                    break;
                }
            }
            let sign = match convention {
                SignConvention::Standard => 1,
                SignConvention::Alternating => {
                    if nonsimple.is_multiple_of(2) {
                        1
                    } else {
                        -1
                    }
                }
            };
            nonsimple += 1;
            let c = sign * (p + 1);
            extraspecial[k] = Some((a, b));
            adjoint.define_raising(k, a, b, &q(c));
            adjoint.define_lowering(k, a, b, &q(-c));
            nconst.insert((SignedRoot::pos(a), SignedRoot::pos(b)), c);
            nconst.insert((SignedRoot::neg(a), SignedRoot::neg(b)), -c);
        }

        // Read every other structure constant off the adjoint module.
        let all: Vec<SignedRoot> = (0..nroots)
            .flat_map(|k| [SignedRoot::pos(k), SignedRoot::neg(k)])
            .collect();
        let root_vec = |r: SignedRoot| -> Vec<i64> {
            let s = if r.positive { 1 } else { -1 };
            rs.root(r.index).iter().map(|x| s * x).collect()
        };
        let find = |v: &[i64]| -> Option<SignedRoot> {
            if let Some(k) = rs.root_index(v) {
                return Some(SignedRoot::pos(k));
            }
            let neg: Vec<i64> = v.iter().map(|x| -x).collect();
            rs.root_index(&neg).map(SignedRoot::neg)
        };
        let witness: HashMap<SignedRoot, (usize, usize)> = all
            .iter()
            .map(|&r| {
                let found = (0..adjoint.weights().len()).find_map(|w| {
                    let m = if r.positive {
                        adjoint.raising(r.index, w)
                    } else {
                        adjoint.lowering(r.index, w)
                    }?;
                    (0..m.cols())
                        .find(|&j| !m.column(j).iter().all(Zero::is_zero))
                        .map(|j| (w, j))
                });
                (
                    r,
                    found.expect("root vector acts nontrivially on the adjoint module"),
                )
            })
            .collect();
        let apply = |r: SignedRoot, w: usize, v: &[Q]| -> Option<(usize, Vec<Q>)> {
            if r.positive {
                adjoint.apply_raising(r.index, w, v)
            } else {
                adjoint.apply_lowering(r.index, w, v)
            }
        };
        for &g in &all {
            for &d in &all {
                let sum: Vec<i64> = root_vec(g)
                    .iter()
                    .zip(root_vec(d))
                    .map(|(x, y)| x + y)
                    .collect();
                let Some(eps) = find(&sum) else { continue };
                if nconst.contains_key(&(g, d)) {
                    continue;
                }
                let (w, j) = witness[&eps];
                let mut u = vec![Q::zero(); adjoint.weight_dim(w)];
                u[j] = q(1);
                let (target, y) = apply(eps, w, &u).expect("witness is nonzero");
                let mut x = vec![Q::zero(); y.len()];
                if let Some((mid, v)) = apply(d, w, &u) {
                    if let Some((t, gv)) = apply(g, mid, &v) {
                        debug_assert_eq!(t, target);
                        for (xi, a) in x.iter_mut().zip(gv) {
                            *xi += a;
                        }
                    }
                }
                if let Some((mid, v)) = apply(g, w, &u) {
                    if let Some((t, dv)) = apply(d, mid, &v) {
                        debug_assert_eq!(t, target);
                        for (xi, a) in x.iter_mut().zip(dv) {
                            *xi -= a;
                        }
                    }
                }
                let r = y.iter().position(|c| !c.is_zero()).expect("nonzero");
                let ratio = &x[r] / &y[r];
                let consistent = x.iter().zip(&y).all(|(a, b)| *a == &ratio * b);
                if !consistent || !ratio.is_integer() {
                    return Err(Error::Inconsistent(format!(
                        "structure constant for {g:?}, {d:?} is not an integer multiple"
                    )));
                }
                let c = ratio
                    .to_integer()
                    .to_i64()
                    .expect("small structure constant");
                nconst.insert((g, d), c);
            }
        }

        Ok(ChevalleyBasis {
            rs,
            convention,
            nconst,
            extraspecial,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> Arc<RootSystem> {
        self.rs.clone()
    }

    pub fn convention(&self) -> SignConvention {
        self.convention
    }

    /// Extraspecial pair `(simple root index, rest index)` of a non-simple positive root.
    pub fn extraspecial(&self, k: usize) -> Option<(usize, usize)> {
        self.extraspecial[k]
    }

    /// `N_{gamma, delta}`, or `None` when `gamma + delta` is not a root.
    pub fn structure_constant(&self, gamma: SignedRoot, delta: SignedRoot) -> Option<i64> {
        self.nconst.get(&(gamma, delta)).copied()
    }

    /// Number of stored constants (ordered pairs with a root sum).
    pub fn num_constants(&self) -> usize {
        self.nconst.len()
    }

    /// Sum of two signed roots if it is a root.
    pub fn root_sum(&self, gamma: SignedRoot, delta: SignedRoot) -> Option<SignedRoot> {
        let s = |r: SignedRoot| if r.positive { 1 } else { -1 };
        let v: Vec<i64> = self
            .rs
            .root(gamma.index)
            .iter()
            .zip(self.rs.root(delta.index))
            .map(|(a, b)| s(gamma) * a + s(delta) * b)
            .collect();
        if let Some(k) = self.rs.root_index(&v) {
            return Some(SignedRoot::pos(k));
        }
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.rs.root_index(&neg).map(SignedRoot::neg)
    }

    /// The Lie bracket of two basis elements.
    pub fn bracket(&self, x: BasisElement, y: BasisElement) -> LieElement {
        let mut out = LieElement::new();
        match (x, y) {
            (BasisElement::H(_), BasisElement::H(_)) => {}
            (BasisElement::H(i), other) | (other, BasisElement::H(i)) => {
                let r = other.as_root().expect("root element");
                let pairing = self.rs.simple_coroot_pairing_root(self.rs.root(r.index), i);
                let mut c = if r.positive { pairing } else { -pairing };
                if !matches!(x, BasisElement::H(_)) {
                    c = -c;
                }
                if c != 0 {
                    out.insert(other, c);
                }
            }
            _ => {
                let g = x.as_root().expect("root element");
                let d = y.as_root().expect("root element");
                if g.index == d.index && g.positive != d.positive {
                    // [e_beta, f_beta] = h_beta
                    let s = if g.positive { 1 } else { -1 };
                    for (i, c) in self.rs.coroot_coeffs(g.index).into_iter().enumerate() {
                        if c != 0 {
                            out.insert(BasisElement::H(i), s * c);
                        }
                    }
                } else if let Some(eps) = self.root_sum(g, d) {
                    let c = self.nconst[&(g, d)];
                    out.insert(BasisElement::from_root(eps), c);
                }
            }
        }
        out
    }

    /// Bilinear extension of [`Self::bracket`].
    pub fn bracket_elements(&self, x: &LieElement, y: &LieElement) -> LieElement {
        let mut out = LieElement::new();
        for (&a, &ca) in x {
            for (&b, &cb) in y {
                for (c, cc) in self.bracket(a, b) {
                    *out.entry(c).or_insert(0) += ca * cb * cc;
                }
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// All basis elements: `e`'s, then `f`'s, then `h`'s.
    pub fn basis(&self) -> Vec<BasisElement> {
        let nroots = self.rs.num_positive();
        (0..nroots)
            .map(BasisElement::E)
            .chain((0..nroots).map(BasisElement::F))
            .chain((0..self.rs.rank()).map(BasisElement::H))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::Family;

    fn cb(f: Family, n: usize) -> ChevalleyBasis {
        ChevalleyBasis::new(Arc::new(RootSystem::new(f, n).unwrap())).unwrap()
    }

    fn single(x: BasisElement) -> LieElement {
        LieElement::from([(x, 1)])
    }

    fn string_p(rs: &RootSystem, g: SignedRoot, d: SignedRoot) -> i64 {
        // largest p with d - p g a root
        let s = |r: SignedRoot| if r.positive { 1 } else { -1 };
        let mut p = 0;
        loop {
            let v: Vec<i64> = rs
                .root(d.index)
                .iter()
                .zip(rs.root(g.index))
                .map(|(b, a)| s(d) * b - (p + 1) * s(g) * a)
                .collect();
            let neg: Vec<i64> = v.iter().map(|x| -x).collect();
            if rs.root_index(&v).is_some() || rs.root_index(&neg).is_some() {
                p += 1;
            } else {
                return p;
            }
        }
    }

    #[test]
    fn a2_constants() {
        let c = cb(Family::A, 2);
        let n = c
            .structure_constant(SignedRoot::pos(0), SignedRoot::pos(1))
            .unwrap();
        assert_eq!(n.abs(), 1);
        let br = c.bracket(BasisElement::F(0), BasisElement::F(1));
        assert_eq!(br.len(), 1);
        assert_eq!(br.get(&BasisElement::F(2)).map(|x| x.abs()), Some(1));
        assert_eq!(
            c.bracket(BasisElement::E(0), BasisElement::F(0)),
            single(BasisElement::H(0))
        );
        // [h_1, f_{alpha1+alpha2}] = -<alpha1+alpha2, alpha1^vee> f = -f
        assert_eq!(
            c.bracket(BasisElement::H(0), BasisElement::F(2)),
            LieElement::from([(BasisElement::F(2), -1)])
        );
    }

    #[test]
    fn chevalley_property_and_antisymmetry() {
        for (f, n) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 3),
            (Family::G, 2),
            (Family::F, 4),
            (Family::D, 4),
        ] {
            let c = cb(f, n);
            let rs = c.root_system();
            for ((g, d), &v) in &c.nconst {
                assert_eq!(c.nconst[&(*d, *g)], -v, "{f}{n} antisymmetry");
                assert_eq!(
                    v.abs(),
                    string_p(rs, *g, *d) + 1,
                    "{f}{n} |N| = p+1 for {g:?},{d:?}"
                );
                assert_eq!(
                    c.nconst[&(g.negate(), d.negate())],
                    -v,
                    "{f}{n} N(-a,-b) = -N(a,b)"
                );
            }
        }
    }

    #[test]
    fn g2_constant_magnitudes() {
        let c = cb(Family::G, 2);
        let mags: std::collections::BTreeSet<i64> = c.nconst.values().map(|v| v.abs()).collect();
        assert_eq!(mags, [1, 2, 3].into_iter().collect());
        // (alpha1+alpha2) - alpha1 = alpha2 is a root, minus 2 alpha1 is not: p = 1
        let n = c
            .structure_constant(SignedRoot::pos(0), SignedRoot::pos(2))
            .unwrap();
        assert_eq!(n.abs(), 2);
    }

    fn jacobi_holds(
        c: &ChevalleyBasis,
        triples: impl Iterator<Item = (BasisElement, BasisElement, BasisElement)>,
    ) {
        for (x, y, z) in triples {
            let (x, y, z) = (single(x), single(y), single(z));
            let mut total = c.bracket_elements(&x, &c.bracket_elements(&y, &z));
            for (k, v) in c.bracket_elements(&y, &c.bracket_elements(&z, &x)) {
                *total.entry(k).or_insert(0) += v;
            }
            for (k, v) in c.bracket_elements(&z, &c.bracket_elements(&x, &y)) {
                *total.entry(k).or_insert(0) += v;
            }
            total.retain(|_, v| *v != 0);
            assert!(total.is_empty(), "Jacobi fails on {x:?} {y:?} {z:?}");
        }
    }

    #[test]
    fn jacobi_exhaustive_rank_up_to_three() {
        for (f, n) in [
            (Family::A, 2),
            (Family::B, 2),
            (Family::G, 2),
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 3),
        ] {
            let c = cb(f, n);
            let basis = c.basis();
            let triples = basis.iter().flat_map(|&x| {
                let basis = basis.clone();
                basis
                    .clone()
                    .into_iter()
                    .flat_map(move |y| basis.clone().into_iter().map(move |z| (x, y, z)))
            });
            jacobi_holds(&c, triples);
        }
    }

    #[test]
    fn jacobi_sampled_rank_four() {
        for (f, n) in [(Family::A, 4), (Family::F, 4), (Family::D, 4)] {
            let c = cb(f, n);
            let basis = c.basis();
            let m = basis.len();
            // deterministic stride sample
            let triples = (0..4000usize).map(|t| {
                let a = (t * 7919) % m;
                let b = (t * 104729 + 3) % m;
                let d = (t * 1299709 + 11) % m;
                (basis[a], basis[b], basis[d])
            });
            jacobi_holds(&c, triples);
        }
    }

    #[test]
    fn weight_grading_respected() {
        let c = cb(Family::B, 3);
        let rs = c.root_system();
        let weight = |x: BasisElement| -> Vec<i64> {
            match x {
                BasisElement::E(k) => rs.root(k).to_vec(),
                BasisElement::F(k) => rs.root(k).iter().map(|v| -v).collect(),
                BasisElement::H(_) => vec![0; rs.rank()],
            }
        };
        for x in c.basis() {
            for y in c.basis() {
                let expect: Vec<i64> = weight(x)
                    .iter()
                    .zip(weight(y))
                    .map(|(a, b)| a + b)
                    .collect();
                for (z, _) in c.bracket(x, y) {
                    assert_eq!(weight(z), expect);
                }
            }
        }
    }

    #[test]
    fn alternating_convention_is_a_chevalley_basis() {
        let c = ChevalleyBasis::with_convention(
            Arc::new(RootSystem::new(Family::B, 2).unwrap()),
            SignConvention::Alternating,
        )
        .unwrap();
        let basis = c.basis();
        let triples = basis.iter().flat_map(|&x| {
            let basis = basis.clone();
            basis
                .clone()
                .into_iter()
                .flat_map(move |y| basis.clone().into_iter().map(move |z| (x, y, z)))
        });
        jacobi_holds(&c, triples);
    }
}
