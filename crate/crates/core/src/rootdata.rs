//! Root systems of the simple Lie algebras, weights, Weyl group words and the
//! two classical formulas for dimensions and weight multiplicities.
//!
//! Conventions: `cartan[i][j] = <alpha_i^vee, alpha_j> = 2(alpha_i, alpha_j) / (alpha_i, alpha_i)`,
//! so the fundamental-weight coordinates of `alpha_j` form the `j`-th column.
//! Simple roots are numbered as in Bourbaki; in type G the first simple root
//! is the short one. Positive roots are stored in simple-root coordinates and
//! enumerated ascending by height, ties broken by descending lexicographic
//! order on the coefficient vector.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Cartan type label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::InvalidType {
                family: other.to_string(),
                rank: 0,
                reason: "unknown family, expected one of A-G".into(),
            }),
        }
    }
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = vec![0; rank];
        w[i] = 1;
        Weight(w)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Sum of the fundamental-weight coordinates.
    pub fn level(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Componentwise `self <= other`.
    pub fn le_componentwise(&self, other: &Weight) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Graded lexicographic comparison: level first, then lexicographic.
    pub fn cmp_graded_lex(&self, other: &Weight) -> std::cmp::Ordering {
        self.level()
            .cmp(&other.level())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Weight {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        if s.trim().is_empty() {
            return Ok(Weight(Vec::new()));
        }
        s.split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Weight)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Mul<i64> for &Weight {
    type Output = Weight;
    fn mul(self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }
}

/// A word in the simple reflections, letters numbered `1..=rank`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Cartan matrix and positive roots of a simple root system, with its invariant form.
#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// `(alpha_i, alpha_i)`, normalized so that short roots have squared length 2.
    simple_norms: Vec<i64>,
    positive_roots: Vec<Vec<i64>>,
    heights: Vec<u32>,
    root_norms: Vec<i64>,
    index: HashMap<Vec<i64>, usize>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.rank == other.rank
    }
}

impl Eq for RootSystem {}

fn cartan_matrix(family: Family, rank: usize) -> Result<Vec<Vec<i64>>> {
    let invalid = |reason: &str| Error::InvalidType {
        family: family.to_string(),
        rank,
        reason: reason.to_string(),
    };
    let n = rank;
    let ok = match family {
        Family::A => n >= 1,
        Family::B | Family::C => n >= 2,
        Family::D => n >= 4,
        Family::E => (6..=8).contains(&n),
        Family::F => n == 4,
        Family::G => n == 2,
    };
    if !ok {
        return Err(invalid(match family {
            Family::A => "rank must be at least 1",
            Family::B | Family::C => "rank must be at least 2",
            Family::D => "rank must be at least 4",
            Family::E => "rank must be 6, 7 or 8",
            Family::F => "rank must be 4",
            Family::G => "rank must be 2",
        }));
    }
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, cij: i64, cji: i64| {
        c[i][j] = cij;
        c[j][i] = cji;
    };
    match family {
        Family::A => {
            for i in 0..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        Family::B => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            // alpha_n short
            link(n - 2, n - 1, -1, -2);
        }
        Family::C => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            // alpha_n long
            link(n - 2, n - 1, -2, -1);
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            for i in 2..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        Family::G => {
            // alpha_1 short, alpha_2 long
            link(0, 1, -3, -1);
        }
    }
    Ok(c)
}

fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    // d_i (alpha_i^vee-normalized) from cartan[i][j] d_i = cartan[j][i] d_j, seeded with 6.
    let mut d = vec![0i64; n];
    d[0] = 6;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && d[j] == 0 {
                d[j] = cartan[i][j] * d[i] / cartan[j][i];
                queue.push_back(j);
            }
        }
    }
    let min = *d.iter().min().expect("nonempty");
    d.iter().map(|x| x * 2 / min).collect()
}

impl RootSystem {
    /// Builds the root system of the given type.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let cartan = cartan_matrix(family, rank)?;
        let simple_norms = symmetrizer(&cartan);
        let n = rank;

        // Close the simple roots under addition of simple roots using root strings:
        // beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0 where p is the
        // largest integer with beta - p alpha_i a root.
        let mut by_height: Vec<Vec<Vec<i64>>> = vec![(0..n)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = 1;
                r
            })
            .collect()];
        let mut known: std::collections::HashSet<Vec<i64>> = by_height[0].iter().cloned().collect();
        loop {
            let mut next: Vec<Vec<i64>> = Vec::new();
            for beta in by_height.last().expect("nonempty") {
                for i in 0..n {
                    let mut p = 0i64;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        if probe[i] >= 0 && known.contains(&probe) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !next.contains(&up) {
                            next.push(up);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            known.extend(next.iter().cloned());
            by_height.push(next);
        }

        let mut positive_roots: Vec<Vec<i64>> = by_height.into_iter().flatten().collect();
        positive_roots.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let heights = positive_roots
            .iter()
            .map(|r| r.iter().sum::<i64>() as u32)
            .collect();
        let index = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        let mut rs = RootSystem {
            family,
            rank,
            cartan,
            simple_norms,
            positive_roots,
            heights,
            root_norms: Vec::new(),
            index,
        };
        rs.root_norms = (0..rs.positive_roots.len())
            .map(|k| rs.inner_roots(&rs.positive_roots[k], &rs.positive_roots[k]))
            .collect();
        Ok(rs)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Squared lengths of the simple roots (short roots have length 2).
    pub fn simple_norms(&self) -> &[i64] {
        &self.simple_norms
    }

    /// Number of positive roots.
    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Simple-root coordinates of the positive root with canonical index `k` (0-based).
    pub fn root(&self, k: usize) -> &[i64] {
        &self.positive_roots[k]
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn height(&self, k: usize) -> u32 {
        self.heights[k]
    }

    /// Canonical (0-based) index of a positive root given in simple-root coordinates.
    pub fn root_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn simple_root_index(&self, i: usize) -> usize {
        let mut e = vec![0; self.rank];
        e[i] = 1;
        self.index[&e]
    }

    /// `(beta, beta)` for the positive root with index `k`.
    pub fn root_norm(&self, k: usize) -> i64 {
        self.root_norms[k]
    }

    /// Highest root (the last one in canonical order).
    pub fn highest_root(&self) -> usize {
        self.positive_roots.len() - 1
    }

    /// Invariant form of two elements of the root lattice.
    pub fn inner_roots(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank;
        let mut s = 0i64;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                // (alpha_i, alpha_j) = cartan[i][j] d_i / 2
                s += a[i] * b[j] * self.cartan[i][j] * self.simple_norms[i] / 2;
            }
        }
        s
    }

    /// `2 (mu, beta)` for `mu` in fundamental-weight and `beta` in simple-root coordinates.
    pub fn inner2_weight_root(&self, mu: &[i64], beta: &[i64]) -> i64 {
        (0..self.rank)
            .map(|j| beta[j] * mu[j] * self.simple_norms[j])
            .sum()
    }

    /// `<mu, beta^vee>` for the positive root with index `k`.
    pub fn coroot_pairing(&self, mu: &[i64], k: usize) -> i64 {
        let num = self.inner2_weight_root(mu, &self.positive_roots[k]);
        let den = self.root_norms[k];
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// `<beta, alpha_i^vee>` for `beta` in simple-root coordinates.
    pub fn simple_coroot_pairing_root(&self, beta: &[i64], i: usize) -> i64 {
        (0..self.rank).map(|j| self.cartan[i][j] * beta[j]).sum()
    }

    /// Fundamental-weight coordinates of an element of the root lattice.
    pub fn root_to_weight(&self, beta: &[i64]) -> Weight {
        Weight(
            (0..self.rank)
                .map(|i| self.simple_coroot_pairing_root(beta, i))
                .collect(),
        )
    }

    /// Coefficients of the coroot `beta^vee` in the simple coroots.
    pub fn coroot_coeffs(&self, k: usize) -> Vec<i64> {
        let beta = &self.positive_roots[k];
        let norm = self.root_norms[k];
        (0..self.rank)
            .map(|i| {
                let num = beta[i] * self.simple_norms[i];
                debug_assert_eq!(num % norm, 0);
                num / norm
            })
            .collect()
    }

    /// Half the sum of the positive roots, i.e. the all-ones weight.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    /// Validates that `w` is a weight of the right rank.
    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch {
                weight: w.clone(),
                expected: self.rank,
                got: w.rank(),
            });
        }
        Ok(())
    }

    /// Validates that `w` is dominant integral of the right rank.
    pub fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_weight(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.clone()));
        }
        Ok(())
    }

    /// Simple reflection `s_i` (0-based) acting on a weight.
    pub fn reflect_weight(&self, w: &mut [i64], i: usize) {
        let c = w[i];
        if c != 0 {
            for (j, wj) in w.iter_mut().enumerate() {
                *wj -= c * self.cartan[j][i];
            }
        }
    }

    /// Simple reflection `s_i` (0-based) acting on an element of the root lattice.
    pub fn reflect_root(&self, beta: &mut [i64], i: usize) {
        let c = self.simple_coroot_pairing_root(beta, i);
        beta[i] -= c;
    }

    fn check_letters(&self, word: &WeylWord) -> Result<()> {
        for &l in word.letters() {
            if l == 0 || l > self.rank {
                return Err(Error::BadLetter {
                    letter: l,
                    rank: self.rank,
                });
            }
        }
        Ok(())
    }

    /// Canonical reduced word of the longest Weyl group element: starting from the
    /// identity, repeatedly multiply on the right by the smallest simple reflection
    /// that increases the length.
    pub fn longest_word(&self) -> WeylWord {
        // y = w^{-1} rho; l(w s_j) > l(w) iff y_j > 0.
        let mut y = vec![1i64; self.rank];
        let mut word = Vec::with_capacity(self.num_positive());
        while let Some(j) = (0..self.rank).find(|&j| y[j] > 0) {
            word.push(j + 1);
            self.reflect_weight(&mut y, j);
        }
        WeylWord(word)
    }

    /// Whether the word is reduced.
    pub fn is_reduced(&self, word: &WeylWord) -> bool {
        self.roots_along_word(word).is_ok()
    }

    /// Whether the word is a reduced word of the longest element.
    pub fn is_longest_word(&self, word: &WeylWord) -> bool {
        word.len() == self.num_positive() && self.is_reduced(word)
    }

    /// `beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k})`, returned as canonical root indices.
    pub fn roots_along_word(&self, word: &WeylWord) -> Result<Vec<usize>> {
        self.check_letters(word)?;
        let letters = word.letters();
        let mut out = Vec::with_capacity(letters.len());
        for k in 0..letters.len() {
            let mut beta = vec![0i64; self.rank];
            beta[letters[k] - 1] = 1;
            for &l in letters[..k].iter().rev() {
                self.reflect_root(&mut beta, l - 1);
            }
            match self.root_index(&beta) {
                Some(idx) => out.push(idx),
                None => {
                    return Err(Error::NotReduced {
                        word: letters.to_vec(),
                        position: k + 1,
                    })
                }
            }
        }
        Ok(out)
    }

    /// Weyl's dimension formula.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<u128> {
        self.check_dominant(lambda)?;
        let shifted: Vec<i64> = lambda.0.iter().map(|c| c + 1).collect();
        let rho = vec![1i64; self.rank];
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for beta in &self.positive_roots {
            num *= BigUint::from(self.inner2_weight_root(&shifted, beta) as u64);
            den *= BigUint::from(self.inner2_weight_root(&rho, beta) as u64);
        }
        let (q, r) = num.div_rem(&den);
        assert!(r.is_zero(), "Weyl dimension formula must be integral");
        q.to_u128()
            .ok_or_else(|| Error::Inconsistent(format!("dimension of V{lambda} exceeds u128")))
    }

    /// Whether `mu` is a weight of `V(lambda)`, with `depth` the simple-root
    /// coordinates of `lambda - mu`.
    pub fn is_weight_of(&self, mu: &[i64], depth: &[i64]) -> bool {
        let mut w = mu.to_vec();
        let mut d = depth.to_vec();
        while let Some(i) = (0..self.rank).find(|&i| w[i] < 0) {
            let c = w[i];
            self.reflect_weight(&mut w, i);
            d[i] += c;
        }
        d.iter().all(|&x| x >= 0)
    }

    /// Weight multiplicities of `V(lambda)` by Freudenthal's recursion.
    pub fn freudenthal_multiplicities(&self, lambda: &Weight) -> Result<WeightSystem> {
        self.check_dominant(lambda)?;
        let n = self.rank;
        let lam = &lambda.0;
        let mut entries: Vec<WeightEntry> = vec![WeightEntry {
            depth: vec![0; n],
            weight: lambda.clone(),
            mult: 1,
        }];
        let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
        index.insert(vec![0; n], 0);
        let mut level_start = 0;
        let alpha_fw: Vec<Vec<i64>> = (0..n)
            .map(|j| (0..n).map(|i| self.cartan[i][j]).collect())
            .collect();
        loop {
            let level_end = entries.len();
            let mut candidates: Vec<Vec<u32>> = Vec::new();
            for e in &entries[level_start..level_end] {
                for i in 0..n {
                    let mut d = e.depth.clone();
                    d[i] += 1;
                    candidates.push(d);
                }
            }
            candidates.sort();
            candidates.dedup();
            for depth in candidates {
                let mu: Vec<i64> = (0..n)
                    .map(|i| {
                        lam[i]
                            - (0..n)
                                .map(|j| depth[j] as i64 * alpha_fw[j][i])
                                .sum::<i64>()
                    })
                    .collect();
                let depth_i: Vec<i64> = depth.iter().map(|&x| x as i64).collect();
                if !self.is_weight_of(&mu, &depth_i) {
                    continue;
                }
                // m(mu) = 2 sum_{beta>0} sum_{k>=1} m(mu + k beta)(mu + k beta, beta)
                //         / ((lambda+rho, lambda+rho) - (mu+rho, mu+rho))
                let mut acc: i128 = 0;
                for beta in &self.positive_roots {
                    let mut k = 1i64;
                    loop {
                        let up: Option<Vec<u32>> = depth
                            .iter()
                            .zip(beta)
                            .map(|(&d, &b)| {
                                let v = d as i64 - k * b;
                                (v >= 0).then_some(v as u32)
                            })
                            .collect();
                        let Some(up) = up else { break };
                        if let Some(&idx) = index.get(&up) {
                            let x: Vec<i64> = (0..n)
                                .map(|i| {
                                    mu[i]
                                        + k * (0..n).map(|j| beta[j] * alpha_fw[j][i]).sum::<i64>()
                                })
                                .collect();
                            acc += entries[idx].mult as i128
                                * self.inner2_weight_root(&x, beta) as i128;
                        }
                        k += 1;
                    }
                }
                // acc = sum m * 2(x, beta); denominator doubled likewise.
                let total: Vec<i64> = (0..n).map(|i| lam[i] + mu[i] + 2).collect();
                let den2: i128 = self.inner2_weight_root(&total, &depth_i) as i128;
                assert!(den2 > 0, "Freudenthal denominator must be positive");
                let num = 2 * acc;
                assert_eq!(num % den2, 0, "Freudenthal division must be exact");
                let m = num / den2;
                assert!(m > 0, "weight of V(lambda) must have positive multiplicity");
                index.insert(depth.clone(), entries.len());
                entries.push(WeightEntry {
                    depth,
                    weight: Weight(mu),
                    mult: m as u64,
                });
            }
            if entries.len() == level_end {
                break;
            }
            level_start = level_end;
        }
        Ok(WeightSystem {
            highest: lambda.clone(),
            entries,
            index,
        })
    }

    /// Simple-root coordinates of a weight, solving with the Cartan matrix.
    pub fn simple_root_coords(&self, mu: &Weight) -> Vec<crate::linalg::Q> {
        use crate::linalg::{q, Q};
        use num_traits::Zero;
        let n = self.rank;
        let mut a: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                let mut row: Vec<Q> = (0..n).map(|j| q(self.cartan[i][j])).collect();
                row.push(q(mu.0[i]));
                row
            })
            .collect();
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .expect("Cartan matrix is invertible");
            a.swap(col, p);
            let inv = a[col][col].recip();
            for x in &mut a[col] {
                *x *= &inv;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in 0..=n {
                        let sub = &f * &a[col][c];
                        a[r][c] -= sub;
                    }
                }
            }
        }
        a.into_iter().map(|row| row[n].clone()).collect()
    }

    /// Simple-root coordinates of `lambda - mu` if they are nonnegative integers.
    pub fn depth_between(&self, lambda: &Weight, mu: &Weight) -> Option<Vec<u32>> {
        use num_traits::{Signed, ToPrimitive};
        self.simple_root_coords(&(lambda - mu))
            .into_iter()
            .map(|c| {
                (c.is_integer() && !c.is_negative())
                    .then(|| c.to_integer().to_u32())
                    .flatten()
            })
            .collect()
    }

    /// The weight `lambda - sum depth_j alpha_j`.
    pub fn weight_from_depth(&self, lambda: &Weight, depth: &[u32]) -> Weight {
        let n = self.rank;
        Weight(
            (0..n)
                .map(|i| {
                    lambda.0[i]
                        - (0..n)
                            .map(|j| depth[j] as i64 * self.cartan[i][j])
                            .sum::<i64>()
                })
                .collect(),
        )
    }
}

/// One weight of an irreducible module with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEntry {
    /// Simple-root coordinates of `lambda - mu`.
    pub depth: Vec<u32>,
    pub weight: Weight,
    pub mult: u64,
}

/// The weights of `V(lambda)` ordered by depth, with multiplicities.
#[derive(Clone, Debug)]
pub struct WeightSystem {
    pub highest: Weight,
    pub entries: Vec<WeightEntry>,
    index: HashMap<Vec<u32>, usize>,
}

impl WeightSystem {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn index_of_depth(&self, depth: &[u32]) -> Option<usize> {
        self.index.get(depth).copied()
    }

    pub fn multiplicity_at_depth(&self, depth: &[u32]) -> u64 {
        self.index_of_depth(depth)
            .map_or(0, |i| self.entries[i].mult)
    }

    pub fn multiplicity(&self, mu: &Weight) -> u64 {
        self.entries
            .iter()
            .find(|e| &e.weight == mu)
            .map_or(0, |e| e.mult)
    }

    pub fn total(&self) -> u128 {
        self.entries.iter().map(|e| e.mult as u128).sum()
    }

    /// Weight -> multiplicity map.
    pub fn to_map(&self) -> std::collections::BTreeMap<Weight, u64> {
        self.entries
            .iter()
            .map(|e| (e.weight.clone(), e.mult))
            .collect()
    }
}

/// All unordered splittings `lambda = mu1 + mu2` into nonzero dominant weights,
/// ordered by the graded-lexicographically smaller part.
pub fn dominant_decompositions(lambda: &Weight) -> Vec<(Weight, Weight)> {
    let n = lambda.rank();
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    loop {
        // advance odometer
        let mut i = 0;
        loop {
            if i == n {
                out.sort_by(|a: &(Weight, Weight), b| {
                    a.0.cmp_graded_lex(&b.0)
                        .then_with(|| a.1.cmp_graded_lex(&b.1))
                });
                return out;
            }
            if cur[i] < lambda.0[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
        let mu1 = Weight(cur.clone());
        let mu2 = lambda - &mu1;
        if mu2.is_zero() {
            continue;
        }
        if mu1.cmp_graded_lex(&mu2) != std::cmp::Ordering::Greater {
            out.push((mu1, mu2));
        }
    }
}
