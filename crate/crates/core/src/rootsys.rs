//! Root systems of the simple Lie algebras.
//!
//! Roots are stored in the simple-root basis and weights in the
//! fundamental-weight basis, so `λ[i]` is the pairing of λ with the i-th
//! simple coroot. Simple roots follow Bourbaki numbering; indices are 0-based
//! in the API.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Series::A),
            "B" => Ok(Series::B),
            "C" => Ok(Series::C),
            "D" => Ok(Series::D),
            "E" => Ok(Series::E),
            "F" => Ok(Series::F),
            "G" => Ok(Series::G),
            other => Err(Error::InvalidType(format!("unknown series {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    series: Series,
    rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(Self { series, rank })
        } else {
            Err(Error::InvalidType(format!("{series:?}{rank}")))
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.series, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses names like `A2`, `b3`, `E7`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() < 2 || !s.is_char_boundary(1) {
            return Err(Error::InvalidType(s.to_string()));
        }
        let series: Series = s[..1].parse()?;
        let rank: usize = s[1..]
            .parse()
            .map_err(|_| Error::InvalidType(s.to_string()))?;
        CartanType::new(series, rank)
    }
}

/// A vector in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        RootVec(v)
    }

    pub fn zero(rank: usize) -> Self {
        RootVec(vec![0; rank])
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_positive(&self) -> bool {
        self.is_nonnegative() && !self.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && !self.is_zero()
    }

    pub fn add(&self, other: &RootVec) -> RootVec {
        RootVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RootVec) -> RootVec {
        RootVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> RootVec {
        RootVec(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> RootVec {
        self.scale(-1)
    }

    /// Indices of the simple roots occurring with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_regular_dominant(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn cartan_matrix(t: CartanType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match t.series() {
        Series::A => {
            for i in 0..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        Series::B => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            // α_n short
            link(n - 2, n - 1, -1, -2);
        }
        Series::C => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            // α_n long
            link(n - 2, n - 1, -2, -1);
        }
        Series::D => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 3, n - 1, -1, -1);
        }
        Series::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            for i in 2..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        Series::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        Series::G => {
            // α1 short, α2 long
            link(0, 1, -3, -1);
        }
    }
    a
}

/// Smallest positive integers d_i with d_i·A[i][j] = d_j·A[j][i].
fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    d[0] = Some(Q::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if a[i][j] != 0 && d[j].is_none() {
                let di = d[i].clone().unwrap();
                d[j] = Some(di * Q::new(BigInt::from(a[i][j]), BigInt::from(a[j][i])));
                stack.push(j);
            }
        }
    }
    let d: Vec<Q> = d.into_iter().map(Option::unwrap).collect();
    let l = d.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = d.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.iter().map(|x| (x / &g).to_i64().unwrap()).collect()
}

/// Canonical storage order: ascending height, ties broken so that lower
/// simple indices come first (α1 before α2).
pub fn canonical_cmp(a: &RootVec, b: &RootVec) -> std::cmp::Ordering {
    a.height()
        .cmp(&b.height())
        .then_with(|| b.0.cmp(&a.0))
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    sym: Vec<i64>,
    positive_roots: Vec<RootVec>,
    index: HashMap<RootVec, usize>,
}

pub fn build_root_system(t: CartanType) -> RootSystem {
    RootSystem::new(t)
}

impl RootSystem {
    pub fn new(t: CartanType) -> Self {
        let cartan = cartan_matrix(t);
        let sym = symmetrizer(&cartan);
        let n = t.rank();
        let mut roots: Vec<RootVec> = (0..n).map(|i| RootVec::simple(n, i)).collect();
        let mut known: std::collections::HashSet<RootVec> = roots.iter().cloned().collect();
        let mut layer = roots.clone();
        // grow by height using α_i-strings: q = p - <β, α_i^∨>
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    let simple = RootVec::simple(n, i);
                    if *beta == simple {
                        continue;
                    }
                    let mut p = 0;
                    let mut down = beta.sub(&simple);
                    while known.contains(&down) {
                        p += 1;
                        down = down.sub(&simple);
                    }
                    let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta.0[j]).sum();
                    if p - pairing > 0 {
                        let up = beta.add(&simple);
                        if known.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            roots.extend(next.iter().cloned());
            layer = next;
        }
        roots.sort_by(canonical_cmp);
        let index = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        RootSystem {
            cartan_type: t,
            cartan,
            sym,
            positive_roots: roots,
            index,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// `cartan()[i][j]` is the pairing of α_j with the coroot of α_i.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    pub fn positive_roots(&self) -> &[RootVec] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn root_index(&self, beta: &RootVec) -> Option<usize> {
        self.index.get(beta).copied()
    }

    pub fn is_positive_root(&self, beta: &RootVec) -> bool {
        self.index.contains_key(beta)
    }

    pub fn is_root(&self, beta: &RootVec) -> bool {
        self.is_positive_root(beta) || self.is_positive_root(&beta.neg())
    }

    pub fn simple_root(&self, i: usize) -> RootVec {
        RootVec::simple(self.rank(), i)
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    /// Expresses a root-lattice vector in fundamental-weight coordinates.
    pub fn root_to_weight(&self, beta: &RootVec) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|i| (0..n).map(|j| self.cartan[i][j] * beta.0[j]).sum())
                .collect(),
        )
    }

    /// Invariant form on the root lattice, normalized by the symmetrizer.
    pub fn inner(&self, a: &RootVec, b: &RootVec) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a.0[i] * b.0[j] * self.sym[i] * self.cartan[i][j];
            }
        }
        s
    }

    /// (λ, β) for a weight λ and a root-lattice vector β.
    pub fn weight_root_inner(&self, lambda: &Weight, beta: &RootVec) -> i64 {
        (0..self.rank())
            .map(|i| beta.0[i] * self.sym[i] * lambda.0[i])
            .sum()
    }

    /// Half the squared length of β.
    pub fn half_norm(&self, beta: &RootVec) -> i64 {
        self.inner(beta, beta) / 2
    }

    /// ⟨λ, β^∨⟩ for a root β (positive or negative).
    pub fn coroot_pairing(&self, lambda: &Weight, beta: &RootVec) -> Result<i64> {
        if !self.is_root(beta) {
            return Err(Error::NotARoot(beta.0.clone()));
        }
        let num = self.weight_root_inner(lambda, beta);
        let den = self.half_norm(beta);
        if num % den != 0 {
            return Err(Error::InternalInvariant(format!(
                "non-integral coroot pairing {num}/{den}"
            )));
        }
        Ok(num / den)
    }

    pub fn pairing(&self, lambda: &Weight, beta: &RootVec) -> i64 {
        self.coroot_pairing(lambda, beta)
            .expect("pairing with a stored root")
    }

    /// Positive roots whose support lies in `subset` (the Levi positive roots).
    pub fn levi_positive_roots(&self, subset: &[usize]) -> Vec<RootVec> {
        self.positive_roots
            .iter()
            .filter(|r| r.support().iter().all(|i| subset.contains(i)))
            .cloned()
            .collect()
    }

    /// The unique root of maximal height among the Levi positive roots on `subset`.
    pub fn highest_root(&self, subset: &[usize]) -> Option<RootVec> {
        self.levi_positive_roots(subset)
            .into_iter()
            .max_by_key(|r| r.height())
    }

    /// Positive roots involving at least one simple root from `supp`.
    pub fn phi_p_plus(&self, supp: &[usize]) -> Result<Vec<RootVec>> {
        if supp.is_empty() {
            return Err(Error::EmptySupport);
        }
        for &i in supp {
            self.check_index(i)?;
        }
        Ok(self
            .positive_roots
            .iter()
            .filter(|r| supp.iter().any(|&i| r.0[i] != 0))
            .cloned()
            .collect())
    }

    fn check_weight(&self, lambda: &Weight) -> Result<()> {
        if lambda.rank() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                got: lambda.rank(),
            });
        }
        Ok(())
    }

    /// min |⟨λ, α^∨⟩| over coroots with nonzero pairing.
    pub fn gromov_width(&self, lambda: &Weight) -> Result<i64> {
        self.check_weight(lambda)?;
        if lambda.is_zero() {
            return Err(Error::ZeroWeight);
        }
        Ok(self
            .positive_roots
            .iter()
            .map(|b| self.pairing(lambda, b).abs())
            .filter(|&p| p != 0)
            .min()
            .expect("nonzero weight pairs nontrivially with some simple coroot"))
    }

    /// Positive roots attaining the minimum in [`RootSystem::gromov_width`].
    pub fn minimizing_roots(&self, lambda: &Weight) -> Result<Vec<RootVec>> {
        let k = self.gromov_width(lambda)?;
        Ok(self
            .positive_roots
            .iter()
            .filter(|b| self.pairing(lambda, b).abs() == k)
            .cloned()
            .collect())
    }

    /// Weyl dimension formula, saturating at `u128::MAX`.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<u128> {
        self.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.0.clone()));
        }
        let shifted = lambda.add(&self.rho());
        let rho = self.rho();
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for b in &self.positive_roots {
            num *= BigInt::from(self.pairing(&shifted, b));
            den *= BigInt::from(self.pairing(&rho, b));
        }
        let (d, r) = num.div_rem(&den);
        if !r.is_zero() {
            return Err(Error::InternalInvariant("non-integral Weyl dimension".into()));
        }
        Ok(d.to_u128().unwrap_or(u128::MAX))
    }

    /// Weight multiplicities by Freudenthal's recursion, keyed by λ − μ in the
    /// simple-root basis. Independent of any module construction.
    pub fn freudenthal_multiplicities(&self, lambda: &Weight) -> Result<BTreeMap<RootVec, u64>> {
        self.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.0.clone()));
        }
        let n = self.rank();
        let shifted = lambda.add(&self.rho());
        let mut mult: BTreeMap<RootVec, u64> = BTreeMap::new();
        mult.insert(RootVec::zero(n), 1);
        let mut layer = vec![RootVec::zero(n)];
        while !layer.is_empty() {
            let mut candidates: Vec<RootVec> = layer
                .iter()
                .flat_map(|nu| (0..n).map(move |i| nu.add(&RootVec::simple(n, i))))
                .collect();
            candidates.sort();
            candidates.dedup();
            let mut next = Vec::new();
            for nu in candidates {
                let denom = 2 * self.weight_root_inner(&shifted, &nu) - self.inner(&nu, &nu);
                if denom <= 0 {
                    continue;
                }
                let mut acc: i64 = 0;
                for beta in &self.positive_roots {
                    let mut j = 1;
                    loop {
                        let up = nu.sub(&beta.scale(j));
                        if !up.is_nonnegative() {
                            break;
                        }
                        if let Some(&m) = mult.get(&up) {
                            // (μ + jβ, β) with μ + jβ = λ − up
                            let ip = self.weight_root_inner(lambda, beta) - self.inner(&up, beta);
                            acc += m as i64 * ip;
                        }
                        j += 1;
                    }
                }
                let total = 2 * acc;
                if total % denom != 0 {
                    return Err(Error::InternalInvariant("Freudenthal recursion".into()));
                }
                let m = total / denom;
                if m > 0 {
                    mult.insert(nu.clone(), m as u64);
                    next.push(nu);
                }
            }
            layer = next;
        }
        Ok(mult)
    }

    /// β ≻ γ: β − γ is a nonzero sum of positive roots.
    pub fn succ(&self, beta: &RootVec, gamma: &RootVec) -> bool {
        root_partial_order(beta, gamma)
    }

    /// Covering relations (β, γ) of the root poset with β ≻ γ.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let roots = &self.positive_roots;
        let mut edges = Vec::new();
        for (b, beta) in roots.iter().enumerate() {
            for (g, gamma) in roots.iter().enumerate() {
                if !root_partial_order(beta, gamma) {
                    continue;
                }
                let covered = roots.iter().any(|d| {
                    root_partial_order(beta, d) && root_partial_order(d, gamma)
                });
                if !covered {
                    edges.push((b, g));
                }
            }
        }
        edges
    }
}

/// β ≻ γ iff β − γ is nonzero with nonnegative simple-root coordinates.
pub fn root_partial_order(beta: &RootVec, gamma: &RootVec) -> bool {
    beta.sub(gamma).is_positive()
}

/// Writes a nonzero rational weight q as λ/ℓ with λ primitive integral and ℓ > 0.
pub fn normalize_rational_weight(qv: &[Q]) -> Result<(Weight, Q)> {
    if qv.iter().all(Zero::is_zero) {
        return Err(Error::ZeroWeight);
    }
    let l = qv.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = qv.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x)).abs();
    let lambda: Vec<i64> = ints
        .iter()
        .map(|x| (x / &g).to_i64())
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Parse("weight coordinates too large".into()))?;
    Ok((Weight(lambda), Q::new(l, g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, q_frac};

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn root_counts() {
        for (t, n) in [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("D5", 20),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
        ] {
            assert_eq!(rs(t).num_positive_roots(), n, "{t}");
        }
    }

    #[test]
    fn rank_bounds() {
        for bad in ["A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "X2", "A"] {
            assert!(bad.parse::<CartanType>().is_err(), "{bad}");
        }
    }

    #[test]
    fn symmetrizers_are_minimal() {
        assert_eq!(rs("B2").symmetrizer(), &[2, 1]);
        assert_eq!(rs("C3").symmetrizer(), &[1, 1, 2]);
        assert_eq!(rs("G2").symmetrizer(), &[1, 3]);
        assert_eq!(rs("F4").symmetrizer(), &[2, 2, 1, 1]);
        assert_eq!(rs("E6").symmetrizer(), &[1; 6]);
    }

    #[test]
    fn a2_roots_and_order() {
        let r = rs("A2");
        let got: Vec<_> = r.positive_roots().iter().map(|b| b.0.clone()).collect();
        assert_eq!(got, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn pairing_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.coroot_pairing(&Weight(vec![5]), &RootVec(vec![1])).unwrap(), 5);
        let a2 = rs("A2");
        assert_eq!(
            a2.coroot_pairing(&Weight(vec![1, 1]), &RootVec(vec![1, 1])).unwrap(),
            2
        );
        let b2 = rs("B2");
        assert_eq!(
            b2.coroot_pairing(&Weight(vec![1, 0]), &RootVec(vec![1, 2])).unwrap(),
            1
        );
        assert!(matches!(
            b2.coroot_pairing(&Weight(vec![1, 0]), &RootVec(vec![2, 1])),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn partial_order_examples() {
        assert!(root_partial_order(&RootVec(vec![1, 1]), &RootVec(vec![1, 0])));
        assert!(!root_partial_order(&RootVec(vec![1, 0]), &RootVec(vec![0, 1])));
        assert!(root_partial_order(&RootVec(vec![1, 2]), &RootVec(vec![1, 1])));
    }

    #[test]
    fn phi_p_examples() {
        let a2 = rs("A2");
        assert_eq!(a2.phi_p_plus(&[0, 1]).unwrap().len(), 3);
        assert_eq!(
            a2.phi_p_plus(&[0]).unwrap(),
            vec![RootVec(vec![1, 0]), RootVec(vec![1, 1])]
        );
        let a3 = rs("A3");
        assert_eq!(
            a3.phi_p_plus(&[1]).unwrap(),
            vec![
                RootVec(vec![0, 1, 0]),
                RootVec(vec![1, 1, 0]),
                RootVec(vec![0, 1, 1]),
                RootVec(vec![1, 1, 1])
            ]
        );
        assert_eq!(a2.phi_p_plus(&[]), Err(Error::EmptySupport));
    }

    #[test]
    fn width_examples() {
        assert_eq!(rs("A2").gromov_width(&Weight(vec![1, 1])).unwrap(), 1);
        assert_eq!(rs("A1").gromov_width(&Weight(vec![7])).unwrap(), 7);
        assert_eq!(rs("A3").gromov_width(&Weight(vec![1, 2, 1])).unwrap(), 1);
        assert_eq!(rs("A2").gromov_width(&Weight(vec![0, 0])), Err(Error::ZeroWeight));
    }

    #[test]
    fn normalization_examples() {
        let (l, s) = normalize_rational_weight(&[q_frac(1, 2), q_frac(1, 2)]).unwrap();
        assert_eq!((l, s), (Weight(vec![1, 1]), q(2)));
        let (l, s) = normalize_rational_weight(&[q(2), q(4)]).unwrap();
        assert_eq!((l, s), (Weight(vec![1, 2]), q_frac(1, 2)));
        let (l, s) = normalize_rational_weight(&[q_frac(1, 3), q_frac(1, 6)]).unwrap();
        assert_eq!((l, s), (Weight(vec![2, 1]), q(6)));
        assert_eq!(normalize_rational_weight(&[q(0)]), Err(Error::ZeroWeight));
    }

    #[test]
    fn weyl_dim_examples() {
        assert_eq!(rs("A1").weyl_dim(&Weight(vec![4])).unwrap(), 5);
        assert_eq!(rs("A2").weyl_dim(&Weight(vec![1, 1])).unwrap(), 8);
        assert_eq!(rs("A2").weyl_dim(&Weight(vec![1, 0])).unwrap(), 3);
        for t in ["A2", "B2", "A3", "G2", "B3"] {
            let r = rs(t);
            assert_eq!(
                r.weyl_dim(&r.rho()).unwrap(),
                1u128 << r.num_positive_roots(),
                "{t}"
            );
        }
        assert_eq!(rs("E8").weyl_dim(&Weight::fundamental(8, 7)).unwrap(), 248);
    }

    #[test]
    fn freudenthal_matches_weyl_dim() {
        for (t, l) in [
            ("A2", vec![1, 1]),
            ("B2", vec![1, 1]),
            ("G2", vec![1, 0]),
            ("C3", vec![0, 1, 1]),
        ] {
            let r = rs(t);
            let lam = Weight(l);
            let total: u64 = r.freudenthal_multiplicities(&lam).unwrap().values().sum();
            assert_eq!(total as u128, r.weyl_dim(&lam).unwrap(), "{t}");
        }
        let a2 = rs("A2");
        let m = a2.freudenthal_multiplicities(&Weight(vec![1, 1])).unwrap();
        assert_eq!(m[&RootVec(vec![1, 1])], 2);
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs("B3").highest_root(&[0, 1, 2]).unwrap(), RootVec(vec![1, 2, 2]));
        assert_eq!(rs("C3").highest_root(&[0, 1, 2]).unwrap(), RootVec(vec![2, 2, 1]));
        assert_eq!(rs("G2").highest_root(&[0, 1]).unwrap(), RootVec(vec![3, 2]));
    }
}
