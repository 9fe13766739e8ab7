//! Explicit realization of the irreducible module `V(lambda)` by weight spaces.
//!
//! `V(lambda)` is `M(lambda)` modulo the maximal submodule, which is the radical
//! of the contravariant form. A vector of weight `mu != lambda` lies in that
//! radical iff every `e_i` maps it into the radical, so each weight space can
//! be realized, level by level, as the span of `f_i V_{mu + alpha_i}`
//! coordinatized through its images under all `e_j`. The simple generators
//! come out as exact rational matrices between weight spaces; the remaining
//! root vectors are obtained from commutators with Chevalley structure
//! constants.
//!
//! Weight spaces are addressed by their depth, the simple-root coordinates of
//! `lambda - mu`.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::chevalley::{ChevalleyBasis, SignedRoot};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, q, Matrix, Reduced, TrackedEchelon, Q};
use crate::rootdata::{RootSystem, Weight, WeightSystem};

/// Exact rational model of `V(lambda)`.
#[derive(Clone, Debug)]
pub struct HighestWeightModule {
    rs: Arc<RootSystem>,
    weights: WeightSystem,
    dims: Vec<usize>,
    /// `raise[k][w]`: `e_{beta_k}` from weight space `w` to depth `w - beta_k`.
    raise: Vec<Vec<Option<Matrix>>>,
    /// `lower[k][w]`: `f_{beta_k}` from weight space `w` to depth `w + beta_k`.
    lower: Vec<Vec<Option<Matrix>>>,
}

impl HighestWeightModule {
    /// Builds weight spaces and the simple generators `e_i`, `f_i`.
    pub fn new(rs: Arc<RootSystem>, lambda: &Weight) -> Result<Self> {
        let weights = rs.freudenthal_multiplicities(lambda)?;
        let n = rs.rank();
        let nroots = rs.num_positive();
        let nw = weights.len();
        let simple: Vec<usize> = (0..n).map(|i| rs.simple_root_index(i)).collect();
        let mut module = HighestWeightModule {
            rs: rs.clone(),
            dims: vec![0; nw],
            raise: vec![vec![None; nw]; nroots],
            lower: vec![vec![None; nw]; nroots],
            weights,
        };
        module.dims[0] = 1;

        for w in 1..nw {
            let depth = module.weights.entries[w].depth.clone();
            let shifted = |i: usize, j: Option<usize>| -> Option<usize> {
                let mut d = depth.clone();
                if d[i] == 0 {
                    return None;
                }
                d[i] -= 1;
                if let Some(j) = j {
                    if d[j] == 0 {
                        return None;
                    }
                    d[j] -= 1;
                }
                module.weights.index_of_depth(&d)
            };
            // e_j-blocks of the coordinatization
            let mut blocks: Vec<(usize, usize, usize)> = Vec::new();
            let mut width = 0;
            for j in 0..n {
                if let Some(x) = shifted(j, None) {
                    blocks.push((j, x, width));
                    width += module.dims[x];
                }
            }
            let mut echelon = TrackedEchelon::new(width);
            let mut accepted_images: Vec<Vec<Q>> = Vec::new();
            // coordinates of f_i b_t, per source weight
            let mut f_columns: Vec<(usize, usize, Vec<Vec<Q>>)> = Vec::new();
            for i in 0..n {
                let Some(u) = shifted(i, None) else { continue };
                let pairing = module.weights.entries[u].weight.0[i];
                let mut cols = Vec::with_capacity(module.dims[u]);
                for t in 0..module.dims[u] {
                    let mut image = vec![Q::zero(); width];
                    for &(j, _x, off) in &blocks {
                        let part: Option<Vec<Q>> = if j == i {
                            let mut part = vec![Q::zero(); module.dims[u]];
                            part[t] = q(pairing);
                            if let Some(z) = shifted(i, Some(i)) {
                                let eb = module.raise[simple[i]][u]
                                    .as_ref()
                                    .expect("e_i defined on V_u")
                                    .column(t);
                                let feb = module.lower[simple[i]][z]
                                    .as_ref()
                                    .expect("f_i defined on V_z")
                                    .mul_vec(&eb);
                                for (p, x) in part.iter_mut().zip(feb) {
                                    *p += x;
                                }
                            }
                            Some(part)
                        } else {
                            shifted(i, Some(j)).map(|z| {
                                let eb = module.raise[simple[j]][u]
                                    .as_ref()
                                    .expect("e_j defined on V_u")
                                    .column(t);
                                module.lower[simple[i]][z]
                                    .as_ref()
                                    .expect("f_i defined on V_z")
                                    .mul_vec(&eb)
                            })
                        };
                        if let Some(part) = part {
                            for (k, x) in part.into_iter().enumerate() {
                                image[off + k] = x;
                            }
                        }
                    }
                    let coords = match echelon.process(&image) {
                        Reduced::InSpan(c) => c,
                        Reduced::Accepted(s) => {
                            accepted_images.push(image);
                            let mut c = vec![Q::zero(); s + 1];
                            c[s] = q(1);
                            c
                        }
                    };
                    cols.push(coords);
                }
                f_columns.push((i, u, cols));
            }
            let dim = accepted_images.len();
            if dim as u64 != module.weights.entries[w].mult {
                return Err(Error::Inconsistent(format!(
                    "weight space {} of V{} has dimension {} but multiplicity {}",
                    module.weights.entries[w].weight, lambda, dim, module.weights.entries[w].mult
                )));
            }
            module.dims[w] = dim;
            for (i, u, mut cols) in f_columns {
                for c in &mut cols {
                    c.resize(dim, Q::zero());
                }
                module.lower[simple[i]][u] = Some(Matrix::from_columns(dim, &cols));
            }
            for &(j, x, off) in &blocks {
                let cols: Vec<Vec<Q>> = accepted_images
                    .iter()
                    .map(|img| img[off..off + module.dims[x]].to_vec())
                    .collect();
                module.raise[simple[j]][w] = Some(Matrix::from_columns(module.dims[x], &cols));
            }
        }
        Ok(module)
    }

    /// Builds `V(lambda)` with every root vector `e_beta`, `f_beta` realized in
    /// the normalization of `cb`.
    pub fn with_root_vectors(cb: &ChevalleyBasis, lambda: &Weight) -> Result<Self> {
        let mut module = HighestWeightModule::new(cb.root_system_arc(), lambda)?;
        let rs = cb.root_system_arc();
        for k in 0..rs.num_positive() {
            let Some((a, b)) = cb.extraspecial(k) else {
                continue;
            };
            let up = cb
                .structure_constant(SignedRoot::pos(a), SignedRoot::pos(b))
                .expect("extraspecial pair has a constant");
            let down = cb
                .structure_constant(SignedRoot::neg(a), SignedRoot::neg(b))
                .expect("extraspecial pair has a constant");
            module.define_raising(k, a, b, &q(up));
            module.define_lowering(k, a, b, &q(down));
        }
        Ok(module)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.weights.highest
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn weight_dim(&self, w: usize) -> usize {
        self.dims[w]
    }

    pub fn depth(&self, w: usize) -> &[u32] {
        &self.weights.entries[w].depth
    }

    pub fn index_of_depth(&self, depth: &[u32]) -> Option<usize> {
        self.weights.index_of_depth(depth)
    }

    fn shift(&self, w: usize, k: usize, up: bool) -> Option<usize> {
        let d = self.depth(w);
        let root = self.rs.root(k);
        let moved: Option<Vec<u32>> = d
            .iter()
            .zip(root)
            .map(|(&x, &b)| {
                let v = if up { x as i64 - b } else { x as i64 + b };
                (v >= 0).then_some(v as u32)
            })
            .collect();
        moved.and_then(|m| self.index_of_depth(&m))
    }

    /// Index of the weight space `e_{beta_k}` maps `w` into.
    pub fn raise_target(&self, k: usize, w: usize) -> Option<usize> {
        self.shift(w, k, true)
    }

    /// Index of the weight space `f_{beta_k}` maps `w` into.
    pub fn lower_target(&self, k: usize, w: usize) -> Option<usize> {
        self.shift(w, k, false)
    }

    pub fn raising(&self, k: usize, w: usize) -> Option<&Matrix> {
        self.raise[k][w].as_ref()
    }

    pub fn lowering(&self, k: usize, w: usize) -> Option<&Matrix> {
        self.lower[k][w].as_ref()
    }

    fn commutator(&self, a: usize, b: usize, w: usize, up: bool) -> Option<Matrix> {
        let ops = if up { &self.raise } else { &self.lower };
        let d = self.depth(w);
        let (ra, rb) = (self.rs.root(a), self.rs.root(b));
        let moved: Option<Vec<u32>> = (0..d.len())
            .map(|i| {
                let s = ra[i] + rb[i];
                let v = if up { d[i] as i64 - s } else { d[i] as i64 + s };
                (v >= 0).then_some(v as u32)
            })
            .collect();
        let target = self.index_of_depth(&moved?)?;
        let mut out = Matrix::zeros(self.dims[target], self.dims[w]);
        // [x_a, x_b] = x_a x_b - x_b x_a
        if let Some(mid) = self.shift(w, b, up) {
            if let (Some(xb), Some(xa)) = (&ops[b][w], &ops[a][mid]) {
                out = xa.mul(xb);
            }
        }
        if let Some(mid) = self.shift(w, a, up) {
            if let (Some(xa), Some(xb)) = (&ops[a][w], &ops[b][mid]) {
                out.sub_assign(&xb.mul(xa));
            }
        }
        Some(out)
    }

    /// Defines `e_{beta_k} = [e_a, e_b] / c` on every weight space.
    pub fn define_raising(&mut self, k: usize, a: usize, b: usize, c: &Q) {
        let inv = c.recip();
        for w in 0..self.dims.len() {
            self.raise[k][w] = self.commutator(a, b, w, true).map(|mut m| {
                m.scale(&inv);
                m
            });
        }
    }

    /// Defines `f_{beta_k} = [f_a, f_b] / c` on every weight space.
    pub fn define_lowering(&mut self, k: usize, a: usize, b: usize, c: &Q) {
        let inv = c.recip();
        for w in 0..self.dims.len() {
            self.lower[k][w] = self.commutator(a, b, w, false).map(|mut m| {
                m.scale(&inv);
                m
            });
        }
    }

    /// `f_{beta_k}` applied to a vector of weight space `w`; `None` when the result vanishes.
    pub fn apply_lowering(&self, k: usize, w: usize, v: &[Q]) -> Option<(usize, Vec<Q>)> {
        let target = self.lower_target(k, w)?;
        let m = self.lower[k][w].as_ref()?;
        let out = m.mul_vec(v);
        (!is_zero_vec(&out)).then_some((target, out))
    }

    /// `e_{beta_k}` applied to a vector of weight space `w`; `None` when the result vanishes.
    pub fn apply_raising(&self, k: usize, w: usize, v: &[Q]) -> Option<(usize, Vec<Q>)> {
        let target = self.raise_target(k, w)?;
        let m = self.raise[k][w].as_ref()?;
        let out = m.mul_vec(v);
        (!is_zero_vec(&out)).then_some((target, out))
    }
}

/// A nonzero vector of `V(lambda)` living in a single weight space.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightVector {
    pub space: usize,
    pub coords: Vec<Q>,
}

/// Evaluates `f^k v_lambda = f_{beta_1}^{k_1} ... f_{beta_M}^{k_M} v_lambda` for a fixed
/// sequence, sharing partial products between exponents with a common suffix.
pub struct MonomialEvaluator<'m> {
    module: &'m HighestWeightModule,
    sequence: Vec<usize>,
    memo: HashMap<(usize, Vec<u32>), Option<Arc<WeightVector>>>,
}

impl<'m> MonomialEvaluator<'m> {
    /// `sequence` holds canonical root indices.
    pub fn new(module: &'m HighestWeightModule, sequence: &[usize]) -> Self {
        MonomialEvaluator {
            module,
            sequence: sequence.to_vec(),
            memo: HashMap::new(),
        }
    }

    pub fn module(&self) -> &HighestWeightModule {
        self.module
    }

    /// The vector `f^k v_lambda`, or `None` if it vanishes in `V(lambda)`.
    pub fn evaluate(&mut self, k: &[u32]) -> Option<Arc<WeightVector>> {
        assert_eq!(k.len(), self.sequence.len());
        self.suffix(0, k)
    }

    fn suffix(&mut self, pos: usize, k: &[u32]) -> Option<Arc<WeightVector>> {
        let mut pos = pos;
        while pos < k.len() && k[pos] == 0 {
            pos += 1;
        }
        if pos == k.len() {
            return Some(Arc::new(WeightVector {
                space: 0,
                coords: vec![q(1)],
            }));
        }
        let key = (pos, k[pos..].to_vec());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let mut lower = k.to_vec();
        lower[pos] -= 1;
        let inner = self.suffix(pos, &lower);
        let result = inner.and_then(|v| {
            self.module
                .apply_lowering(self.sequence[pos], v.space, &v.coords)
                .map(|(space, coords)| Arc::new(WeightVector { space, coords }))
        });
        self.memo.insert(key, result.clone());
        result
    }

    pub fn cache_len(&self) -> usize {
        self.memo.len()
    }
}
