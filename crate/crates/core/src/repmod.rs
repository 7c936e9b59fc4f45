//! Irreducible highest-weight modules V(λ) built from the contravariant form.
//!
//! Weight spaces are constructed level by level below λ. Candidate vectors at
//! weight μ are `f_i b` for basis vectors `b` of μ + α_i; a maximal subset with
//! nonsingular Gram matrix becomes the basis of V(λ)_μ. Every vector is then
//! stored by its exact coordinates in that basis, together with the matrices
//! of all e_i and f_i between neighbouring weight spaces.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{dot, fraction_free_rank, is_positive_definite, is_zero_vec, solve_many, Echelon, Q};
use crate::rootsys::{RootSystem, RootVec, Weight};

/// f_{i1} ⋯ f_{ik} applied to the highest-weight vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LoweringWord(pub Vec<usize>);

impl LoweringWord {
    pub fn empty() -> Self {
        LoweringWord(Vec::new())
    }

    /// λ − (weight of the vector), in the simple-root basis.
    pub fn depth(&self, rank: usize) -> RootVec {
        let mut v = vec![0; rank];
        for &i in &self.0 {
            v[i] += 1;
        }
        RootVec(v)
    }
}

/// e_i applied to a combination of words in the Verma module of highest weight λ.
fn verma_raise(rs: &RootSystem, lambda: &Weight, i: usize, v: &BTreeMap<Vec<usize>, Q>) -> BTreeMap<Vec<usize>, Q> {
    let a = rs.cartan();
    let mut out: BTreeMap<Vec<usize>, Q> = BTreeMap::new();
    for (word, c) in v {
        // h_i acts on f_{b(p+1)}⋯f_{bk} v_λ by λ_i − Σ_{q>p} a_{i,bq}
        let mut h = lambda.0[i];
        for p in (0..word.len()).rev() {
            if word[p] == i && h != 0 {
                let mut shorter = word.clone();
                shorter.remove(p);
                let e = out.entry(shorter).or_insert_with(Q::zero);
                *e += c * Q::from_integer(h.into());
            }
            h -= a[i][word[p]];
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Contravariant form ⟨f_u v_λ, f_w v_λ⟩ with ⟨v_λ, v_λ⟩ = 1 and f_i adjoint to e_i,
/// evaluated directly on words without building the module.
pub fn shapovalov_pair(rs: &RootSystem, lambda: &Weight, u: &LoweringWord, w: &LoweringWord) -> Q {
    let n = rs.rank();
    if u.depth(n) != w.depth(n) {
        return Q::zero();
    }
    let mut v: BTreeMap<Vec<usize>, Q> = BTreeMap::new();
    v.insert(w.0.clone(), Q::one());
    for &i in &u.0 {
        v = verma_raise(rs, lambda, i, &v);
        if v.is_empty() {
            return Q::zero();
        }
    }
    v.get(&Vec::new()).cloned().unwrap_or_else(Q::zero)
}

type Matrix = Vec<Vec<Q>>;

#[derive(Debug, Clone)]
pub struct WeightSpace {
    depth: RootVec,
    weight: Weight,
    words: Vec<LoweringWord>,
    gram: Matrix,
    /// raise[i][k]: coordinates of e_i b_k in the space at depth − α_i.
    raise: Vec<Option<Matrix>>,
    /// lower[i][k]: coordinates of f_i b_k in the space at depth + α_i.
    lower: Vec<Option<Matrix>>,
}

impl WeightSpace {
    pub fn depth(&self) -> &RootVec {
        &self.depth
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn basis_words(&self) -> &[LoweringWord] {
        &self.words
    }

    pub fn gram(&self) -> &[Vec<Q>] {
        &self.gram
    }
}

/// A vector of V(λ) by its coordinates in the stored basis of its weight space.
///
/// `coords` is empty when the weight space is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleVector {
    depth: RootVec,
    coords: Vec<Q>,
}

impl ModuleVector {
    pub fn depth(&self) -> &RootVec {
        &self.depth
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coords)
    }

    pub fn scale(&self, c: &Q) -> ModuleVector {
        ModuleVector {
            depth: self.depth.clone(),
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct HighestWeightModule {
    rs: RootSystem,
    highest: Weight,
    spaces: Vec<WeightSpace>,
    index: HashMap<RootVec, usize>,
    levels: Vec<Vec<usize>>,
    complete: bool,
    total_dim: u128,
    max_dim: Option<u128>,
}

/// Builds all of V(λ).
pub fn build_module(rs: &RootSystem, lambda: &Weight) -> Result<HighestWeightModule> {
    let mut m = HighestWeightModule::new(rs, lambda, None)?;
    m.extend_to_height(usize::MAX)?;
    Ok(m)
}

impl HighestWeightModule {
    /// Only the highest weight space; grow with [`HighestWeightModule::extend_to_height`].
    pub fn new(rs: &RootSystem, lambda: &Weight, max_dim: Option<u128>) -> Result<Self> {
        if lambda.rank() != rs.rank() {
            return Err(Error::LengthMismatch {
                expected: rs.rank(),
                got: lambda.rank(),
            });
        }
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.0.clone()));
        }
        let n = rs.rank();
        let top = WeightSpace {
            depth: RootVec::zero(n),
            weight: lambda.clone(),
            words: vec![LoweringWord::empty()],
            gram: vec![vec![Q::one()]],
            raise: vec![None; n],
            lower: vec![None; n],
        };
        let mut index = HashMap::new();
        index.insert(RootVec::zero(n), 0);
        Ok(Self {
            rs: rs.clone(),
            highest: lambda.clone(),
            spaces: vec![top],
            index,
            levels: vec![vec![0]],
            complete: false,
            total_dim: 1,
            max_dim,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Largest height of λ − μ for which weight spaces have been built.
    pub fn built_height(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn total_dim(&self) -> u128 {
        self.total_dim
    }

    pub fn spaces(&self) -> &[WeightSpace] {
        &self.spaces
    }

    pub fn space(&self, depth: &RootVec) -> Option<&WeightSpace> {
        self.index.get(depth).map(|&k| &self.spaces[k])
    }

    pub fn dim_at(&self, depth: &RootVec) -> usize {
        self.space(depth).map_or(0, WeightSpace::dim)
    }

    pub fn weight_of_depth(&self, depth: &RootVec) -> Weight {
        self.highest.sub(&self.rs.root_to_weight(depth))
    }

    /// Every built Gram matrix has positive leading principal minors.
    pub fn grams_positive_definite(&self) -> bool {
        self.spaces.iter().all(|s| is_positive_definite(&s.gram))
    }

    pub fn highest_vector(&self) -> ModuleVector {
        ModuleVector {
            depth: RootVec::zero(self.rs.rank()),
            coords: vec![Q::one()],
        }
    }

    pub fn zero_vector(&self, depth: RootVec) -> ModuleVector {
        let d = self.dim_at(&depth);
        ModuleVector {
            depth,
            coords: vec![Q::zero(); d],
        }
    }

    /// The basis vector with the given index at a weight.
    pub fn basis_vector(&self, depth: &RootVec, k: usize) -> ModuleVector {
        let mut v = self.zero_vector(depth.clone());
        v.coords[k] = Q::one();
        v
    }

    /// Builds weight spaces down to the given height (or until V(λ) is exhausted).
    pub fn extend_to_height(&mut self, height: usize) -> Result<()> {
        while !self.complete && self.built_height() < height {
            self.build_next_level()?;
        }
        Ok(())
    }

    fn build_next_level(&mut self) -> Result<()> {
        let n = self.rs.rank();
        let mut candidates: Vec<RootVec> = self
            .levels
            .last()
            .unwrap()
            .iter()
            .flat_map(|&s| {
                let d = self.spaces[s].depth.clone();
                (0..n).map(move |i| d.add(&RootVec::simple(n, i)))
            })
            .collect();
        candidates.sort();
        candidates.dedup();
        let mut level = Vec::new();
        for depth in candidates {
            if let Some(idx) = self.build_space(depth)? {
                level.push(idx);
            }
        }
        if level.is_empty() {
            self.complete = true;
        } else {
            self.levels.push(level);
        }
        Ok(())
    }

    fn build_space(&mut self, depth: RootVec) -> Result<Option<usize>> {
        let n = self.rs.rank();
        // candidates (letter, parent space, parent basis index)
        let mut cands: Vec<(usize, usize, usize)> = Vec::new();
        for letter in 0..n {
            let pd = depth.sub(&RootVec::simple(n, letter));
            if let Some(&p) = self.index.get(&pd) {
                for k in 0..self.spaces[p].dim() {
                    cands.push((letter, p, k));
                }
            }
        }
        // e_i of each candidate, in coordinates of the space at depth − α_i
        let up_spaces: Vec<Option<usize>> = (0..n)
            .map(|i| self.index.get(&depth.sub(&RootVec::simple(n, i))).copied())
            .collect();
        let mut raised: Vec<Vec<Option<Vec<Q>>>> = Vec::with_capacity(cands.len());
        for &(letter, p, k) in &cands {
            let parent = &self.spaces[p];
            let mut per_i = Vec::with_capacity(n);
            for i in 0..n {
                let Some(target) = up_spaces[i] else {
                    per_i.push(None);
                    continue;
                };
                let tdim = self.spaces[target].dim();
                let mut v = vec![Q::zero(); tdim];
                // f_letter (e_i b_k)
                if let Some(raise) = &parent.raise[i] {
                    let eb = &raise[k];
                    let gp = self.index[&parent.depth.sub(&RootVec::simple(n, i))];
                    if let Some(lower) = &self.spaces[gp].lower[letter] {
                        for (c, col) in eb.iter().zip(lower) {
                            if c.is_zero() {
                                continue;
                            }
                            for (x, y) in v.iter_mut().zip(col) {
                                if !y.is_zero() {
                                    *x += c * y;
                                }
                            }
                        }
                    }
                }
                // [e_i, f_i] = h_i on the parent weight
                if i == letter {
                    let h = parent.weight.0[i];
                    if h != 0 {
                        v[k] += Q::from_integer(h.into());
                    }
                }
                per_i.push(Some(v));
            }
            raised.push(per_i);
        }
        // Gram of candidates: ⟨f_a b, c'⟩ = ⟨b, e_a c'⟩
        let nc = cands.len();
        let mut gram = vec![vec![Q::zero(); nc]; nc];
        for r in 0..nc {
            let (letter, p, k) = cands[r];
            let grow = &self.spaces[p].gram[k];
            for c in r..nc {
                let val = match &raised[c][letter] {
                    Some(v) => dot(grow, v),
                    None => Q::zero(),
                };
                gram[r][c] = val.clone();
                gram[c][r] = val;
            }
        }
        let mut ech = Echelon::new();
        let basis: Vec<usize> = (0..nc).filter(|&r| ech.insert(&gram[r])).collect();
        if basis.is_empty() {
            return Ok(None);
        }
        let g: Matrix = basis
            .iter()
            .map(|&r| basis.iter().map(|&c| gram[r][c].clone()).collect())
            .collect();
        let rhs: Vec<Vec<Q>> = (0..nc)
            .map(|c| basis.iter().map(|&r| gram[r][c].clone()).collect())
            .collect();
        let coords = solve_many(&g, &rhs)
            .ok_or_else(|| Error::InternalInvariant("singular Gram matrix on selected basis".into()))?;

        let idx = self.spaces.len();
        for (c, &(letter, p, k)) in cands.iter().enumerate() {
            let parent = &mut self.spaces[p];
            let dim = parent.words.len();
            let lower = parent.lower[letter].get_or_insert_with(|| vec![Vec::new(); dim]);
            lower[k] = coords[c].clone();
        }
        let words = basis
            .iter()
            .map(|&c| {
                let (letter, p, k) = cands[c];
                let mut w = vec![letter];
                w.extend_from_slice(&self.spaces[p].words[k].0);
                LoweringWord(w)
            })
            .collect();
        let raise = (0..n)
            .map(|i| {
                up_spaces[i].map(|_| {
                    basis
                        .iter()
                        .map(|&c| raised[c][i].clone().expect("target space exists"))
                        .collect()
                })
            })
            .collect();
        let weight = self.highest.sub(&self.rs.root_to_weight(&depth));
        self.total_dim += basis.len() as u128;
        if let Some(max) = self.max_dim {
            if self.total_dim > max {
                return Err(Error::TooLarge {
                    dim: self.total_dim,
                    max,
                });
            }
        }
        self.spaces.push(WeightSpace {
            depth: depth.clone(),
            weight,
            words,
            gram: g,
            raise,
            lower: vec![None; n],
        });
        self.index.insert(depth, idx);
        Ok(Some(idx))
    }

    pub fn require_height(&self, h: usize) -> Result<()> {
        if self.complete || h <= self.built_height() {
            Ok(())
        } else {
            Err(Error::Truncated {
                built: self.built_height(),
                needed: h,
            })
        }
    }

    /// f_i v.
    pub fn apply_f(&self, i: usize, v: &ModuleVector) -> Result<ModuleVector> {
        self.rs.check_index(i)?;
        let n = self.rs.rank();
        let target = v.depth.add(&RootVec::simple(n, i));
        self.require_height(target.height() as usize)?;
        let Some(src) = self.space(&v.depth) else {
            return Ok(self.zero_vector(target));
        };
        let tdim = self.dim_at(&target);
        let mut out = vec![Q::zero(); tdim];
        if let Some(lower) = &src.lower[i] {
            for (c, col) in v.coords.iter().zip(lower) {
                if c.is_zero() {
                    continue;
                }
                for (x, y) in out.iter_mut().zip(col) {
                    if !y.is_zero() {
                        *x += c * y;
                    }
                }
            }
        }
        Ok(ModuleVector {
            depth: target,
            coords: out,
        })
    }

    /// e_i v; the zero vector when v is highest.
    pub fn apply_e(&self, i: usize, v: &ModuleVector) -> Result<ModuleVector> {
        self.rs.check_index(i)?;
        let n = self.rs.rank();
        let target = v.depth.sub(&RootVec::simple(n, i));
        let Some(src) = self.space(&v.depth) else {
            return Ok(ModuleVector {
                depth: target.clone(),
                coords: vec![Q::zero(); self.dim_at(&target)],
            });
        };
        let tdim = self.dim_at(&target);
        let mut out = vec![Q::zero(); tdim];
        if let Some(raise) = &src.raise[i] {
            for (c, col) in v.coords.iter().zip(raise) {
                if c.is_zero() {
                    continue;
                }
                for (x, y) in out.iter_mut().zip(col) {
                    if !y.is_zero() {
                        *x += c * y;
                    }
                }
            }
        }
        Ok(ModuleVector {
            depth: target,
            coords: out,
        })
    }

    /// Contravariant form of two vectors of the module.
    pub fn form(&self, u: &ModuleVector, w: &ModuleVector) -> Q {
        if u.depth != w.depth {
            return Q::zero();
        }
        let Some(s) = self.space(&u.depth) else {
            return Q::zero();
        };
        let gw: Vec<Q> = s.gram.iter().map(|row| dot(row, &w.coords)).collect();
        dot(&u.coords, &gw)
    }

    /// Applies a lowering word f_{i1}⋯f_{ik} (rightmost letter first).
    pub fn apply_word(&self, word: &[usize], v: &ModuleVector) -> Result<ModuleVector> {
        let n = self.rs.rank();
        let target = word
            .iter()
            .fold(v.depth.clone(), |acc, &j| acc.add(&RootVec::simple(n, j)));
        self.require_height(target.height() as usize)?;
        let mut cur = v.clone();
        for &i in word.iter().rev() {
            if cur.is_zero() {
                return Ok(self.zero_vector(target));
            }
            cur = self.apply_f(i, &cur)?;
        }
        Ok(cur)
    }

    /// Sum of terms and the module vector they describe, for words of a single weight.
    pub fn vector_from_words(&self, terms: &BTreeMap<Vec<usize>, Q>) -> Result<ModuleVector> {
        let n = self.rs.rank();
        let mut depth: Option<RootVec> = None;
        let mut acc: Option<Vec<Q>> = None;
        for (w, c) in terms {
            let v = self.apply_word(w, &self.highest_vector())?;
            let d = LoweringWord(w.clone()).depth(n);
            if depth.get_or_insert_with(|| d.clone()) != &d {
                return Err(Error::WeightMismatch);
            }
            let acc = acc.get_or_insert_with(|| vec![Q::zero(); v.coords.len()]);
            for (x, y) in acc.iter_mut().zip(&v.coords) {
                *x += c * y;
            }
        }
        let depth = depth.unwrap_or_else(|| RootVec::zero(n));
        let coords = acc.unwrap_or_else(|| vec![Q::zero(); self.dim_at(&depth)]);
        Ok(ModuleVector { depth, coords })
    }

    /// Nonzero coefficients of v over the basis words of its weight space.
    pub fn terms(&self, v: &ModuleVector) -> BTreeMap<LoweringWord, Q> {
        let Some(s) = self.space(&v.depth) else {
            return BTreeMap::new();
        };
        s.words
            .iter()
            .zip(&v.coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect()
    }
}

/// A nonzero element of g_{−β}, written as a combination of words in the f_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootVectorExpr {
    root: RootVec,
    terms: BTreeMap<Vec<usize>, Q>,
}

impl RootVectorExpr {
    pub fn root(&self) -> &RootVec {
        &self.root
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Q> {
        &self.terms
    }

    pub fn scaled(&self, c: &Q) -> RootVectorExpr {
        RootVectorExpr {
            root: self.root.clone(),
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }
}

/// F_β: f_i for simple β, otherwise F_{α_i} F_γ − F_γ F_{α_i} with the least i
/// such that γ = β − α_i is a positive root.
pub fn root_vector_expr(rs: &RootSystem, beta: &RootVec) -> Result<RootVectorExpr> {
    if !rs.is_positive_root(beta) {
        return Err(Error::NotARoot(beta.0.clone()));
    }
    let n = rs.rank();
    if beta.height() == 1 {
        let i = beta.0.iter().position(|&c| c == 1).unwrap();
        let mut terms = BTreeMap::new();
        terms.insert(vec![i], Q::one());
        return Ok(RootVectorExpr {
            root: beta.clone(),
            terms,
        });
    }
    let (i, gamma) = (0..n)
        .map(|i| (i, beta.sub(&RootVec::simple(n, i))))
        .find(|(_, g)| rs.is_positive_root(g))
        .ok_or_else(|| Error::InternalInvariant(format!("no simple root below {beta}")))?;
    let inner = root_vector_expr(rs, &gamma)?;
    let mut terms: BTreeMap<Vec<usize>, Q> = BTreeMap::new();
    for (w, c) in &inner.terms {
        let mut left = vec![i];
        left.extend_from_slice(w);
        *terms.entry(left).or_insert_with(Q::zero) += c;
        let mut right = w.clone();
        right.push(i);
        *terms.entry(right).or_insert_with(Q::zero) -= c;
    }
    terms.retain(|_, c| !c.is_zero());
    if terms.is_empty() {
        return Err(Error::InternalInvariant(format!("F_{beta} vanished")));
    }
    Ok(RootVectorExpr {
        root: beta.clone(),
        terms,
    })
}

/// Applies a root vector (or a single f_i) to a module vector.
pub fn apply_lowering(module: &HighestWeightModule, expr: &RootVectorExpr, v: &ModuleVector) -> Result<ModuleVector> {
    let target = v.depth.add(&expr.root);
    module.require_height(target.height() as usize)?;
    let mut acc = vec![Q::zero(); module.dim_at(&target)];
    if v.is_zero() || acc.is_empty() {
        return Ok(ModuleVector {
            depth: target,
            coords: acc,
        });
    }
    // share work across words with a common suffix
    let mut memo: HashMap<&[usize], ModuleVector> = HashMap::new();
    for (w, c) in &expr.terms {
        let start = (0..w.len()).find(|&k| memo.contains_key(&w[k..])).unwrap_or(w.len());
        let mut cur = memo.get(&w[start..]).cloned().unwrap_or_else(|| v.clone());
        for k in (0..start).rev() {
            cur = module.apply_f(w[k], &cur)?;
            memo.insert(&w[k..], cur.clone());
        }
        for (x, y) in acc.iter_mut().zip(&cur.coords) {
            if !y.is_zero() {
                *x += c * y;
            }
        }
    }
    Ok(ModuleVector {
        depth: target,
        coords: acc,
    })
}

/// Whether v lies in the span of `span`, decided by Gram ranks under the
/// contravariant form.
pub fn in_span(module: &HighestWeightModule, v: &ModuleVector, span: &[ModuleVector]) -> Result<bool> {
    if span.iter().any(|s| s.depth != v.depth) {
        return Err(Error::WeightMismatch);
    }
    let gram = |vs: &[&ModuleVector]| -> Vec<Vec<Q>> {
        vs.iter()
            .map(|a| vs.iter().map(|b| module.form(a, b)).collect())
            .collect()
    };
    let base: Vec<&ModuleVector> = span.iter().collect();
    let mut with: Vec<&ModuleVector> = base.clone();
    with.push(v);
    Ok(fraction_free_rank(&gram(&with)) == fraction_free_rank(&gram(&base)))
}

/// Evaluates PBW vectors F_{β1}^{m1}⋯F_{βN}^{mN} v_λ with memoization.
#[derive(Debug)]
pub struct PbwEvaluator<'a> {
    module: &'a HighestWeightModule,
    roots: Vec<RootVectorExpr>,
    cache: HashMap<Vec<u32>, ModuleVector>,
}

impl<'a> PbwEvaluator<'a> {
    /// Uses the least-index commutator root vectors for `roots`.
    pub fn new(module: &'a HighestWeightModule, roots: &[RootVec]) -> Result<Self> {
        let exprs = roots
            .iter()
            .map(|b| root_vector_expr(module.root_system(), b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::with_root_vectors(module, exprs))
    }

    pub fn with_root_vectors(module: &'a HighestWeightModule, roots: Vec<RootVectorExpr>) -> Self {
        let mut cache = HashMap::new();
        cache.insert(vec![0; roots.len()], module.highest_vector());
        Self {
            module,
            roots,
            cache,
        }
    }

    pub fn module(&self) -> &'a HighestWeightModule {
        self.module
    }

    pub fn root_vectors(&self) -> &[RootVectorExpr] {
        &self.roots
    }

    /// Σ m_i β_i.
    pub fn depth_of(&self, m: &[u32]) -> RootVec {
        let n = self.module.root_system().rank();
        let mut d = RootVec::zero(n);
        for (mi, e) in m.iter().zip(&self.roots) {
            if *mi > 0 {
                d = d.add(&e.root.scale(*mi as i64));
            }
        }
        d
    }

    pub fn vector(&mut self, m: &[u32]) -> Result<ModuleVector> {
        if m.len() != self.roots.len() {
            return Err(Error::LengthMismatch {
                expected: self.roots.len(),
                got: m.len(),
            });
        }
        if let Some(v) = self.cache.get(m) {
            return Ok(v.clone());
        }
        // F^m v = F_{βk} F^{m - e_k} v for the first nonzero index k
        let k = m.iter().position(|&x| x > 0).expect("zero tuple is cached");
        let mut prev = m.to_vec();
        prev[k] -= 1;
        let inner = self.vector(&prev)?;
        let out = if inner.is_zero() {
            let d = inner.depth.add(&self.roots[k].root);
            self.module.require_height(d.height() as usize)?;
            self.module.zero_vector(d)
        } else {
            apply_lowering(self.module, &self.roots[k], &inner)?
        };
        self.cache.insert(m.to_vec(), out.clone());
        Ok(out)
    }
}

/// F^m v_λ for the enumeration's roots, applied right to left.
pub fn pbw_monomial_vector(module: &HighestWeightModule, roots: &[RootVec], m: &[u32]) -> Result<ModuleVector> {
    PbwEvaluator::new(module, roots)?.vector(m)
}
