//! Weyl group elements, reduced words and enumerations of Φ_P^+.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::rootsys::{root_partial_order, CartanType, RootSystem, RootVec, Series, Weight};

/// Objects a simple reflection can act on.
pub trait Reflect: Sized {
    fn reflect(&self, rs: &RootSystem, i: usize) -> Result<Self>;
}

impl Reflect for RootVec {
    /// s_i(β) = β − ⟨β, α_i^∨⟩ α_i
    fn reflect(&self, rs: &RootSystem, i: usize) -> Result<Self> {
        rs.check_index(i)?;
        let a = rs.cartan();
        let p: i64 = (0..rs.rank()).map(|j| a[i][j] * self.0[j]).sum();
        let mut out = self.0.clone();
        out[i] -= p;
        Ok(RootVec(out))
    }
}

impl Reflect for Weight {
    /// s_i(λ) = λ − λ_i α_i
    fn reflect(&self, rs: &RootSystem, i: usize) -> Result<Self> {
        rs.check_index(i)?;
        let a = rs.cartan();
        let li = self.0[i];
        Ok(Weight(
            (0..rs.rank()).map(|k| self.0[k] - li * a[k][i]).collect(),
        ))
    }
}

pub fn simple_reflection<T: Reflect>(rs: &RootSystem, i: usize, v: &T) -> Result<T> {
    v.reflect(rs, i)
}

/// Reflection in an arbitrary root: s_β(λ) = λ − ⟨λ, β^∨⟩ β.
pub fn reflect_weight_by_root(rs: &RootSystem, beta: &RootVec, lambda: &Weight) -> Result<Weight> {
    let p = rs.coroot_pairing(lambda, beta)?;
    Ok(lambda.sub(&rs.root_to_weight(beta).scale(p)))
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn matvec(a: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

/// An element of the Weyl group, kept as an expression in simple reflections
/// together with its matrices on root and weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    word: Vec<usize>,
    on_roots: Vec<Vec<i64>>,
    on_weights: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        Self {
            word: Vec::new(),
            on_roots: identity(rank),
            on_weights: identity(rank),
        }
    }

    fn simple(rs: &RootSystem, i: usize) -> Self {
        let n = rs.rank();
        let a = rs.cartan();
        let mut on_roots = identity(n);
        for j in 0..n {
            on_roots[i][j] -= a[i][j];
        }
        let mut on_weights = identity(n);
        for k in 0..n {
            on_weights[k][i] -= a[k][i];
        }
        Self {
            word: vec![i],
            on_roots,
            on_weights,
        }
    }

    /// s_{w[0]} s_{w[1]} ⋯ s_{w[k-1]}
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(rs.rank());
        for &i in word {
            rs.check_index(i)?;
            w = w.mul(&Self::simple(rs, i));
        }
        Ok(w)
    }

    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement {
            word,
            on_roots: matmul(&self.on_roots, &other.on_roots),
            on_weights: matmul(&self.on_weights, &other.on_weights),
        }
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        let rev: Vec<usize> = self.word.iter().rev().copied().collect();
        Self::from_word(rs, &rev).expect("indices already validated")
    }

    /// The expression this element was built from (not necessarily reduced).
    pub fn expression(&self) -> &[usize] {
        &self.word
    }

    pub fn apply_root(&self, beta: &RootVec) -> RootVec {
        RootVec(matvec(&self.on_roots, &beta.0))
    }

    pub fn apply_weight(&self, lambda: &Weight) -> Weight {
        Weight(matvec(&self.on_weights, &lambda.0))
    }

    pub fn length(&self, rs: &RootSystem) -> usize {
        rs.positive_roots()
            .iter()
            .filter(|b| self.apply_root(b).is_negative())
            .count()
    }

    pub fn is_identity(&self) -> bool {
        self.on_roots == identity(self.on_roots.len())
    }

    /// Equality as group elements, ignoring the stored expression.
    pub fn same_element(&self, other: &WeylElement) -> bool {
        self.on_roots == other.on_roots
    }
}

/// A reduced expression s_{i1}⋯s_{ik}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    letters: Vec<usize>,
}

/// Whether s_{i1}⋯s_{ik} is reduced: every s_{i1}⋯s_{i(j-1)}(α_{ij}) is positive.
pub fn is_reduced(rs: &RootSystem, letters: &[usize]) -> Result<bool> {
    let mut w = WeylElement::identity(rs.rank());
    for &i in letters {
        rs.check_index(i)?;
        if !w.apply_root(&rs.simple_root(i)).is_positive() {
            return Ok(false);
        }
        w = w.mul(&WeylElement::simple(rs, i));
    }
    Ok(true)
}

impl ReducedWord {
    pub fn new(rs: &RootSystem, letters: Vec<usize>) -> Result<Self> {
        if !is_reduced(rs, &letters)? {
            return Err(Error::NotReduced(letters));
        }
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn element(&self, rs: &RootSystem) -> WeylElement {
        WeylElement::from_word(rs, &self.letters).expect("validated word")
    }
}

/// Longest element of the parabolic subgroup on `subset`, by greedy ascent
/// with the smallest ascending index taken first.
pub fn longest_element(rs: &RootSystem, subset: &[usize]) -> Result<(WeylElement, ReducedWord)> {
    for &i in subset {
        rs.check_index(i)?;
    }
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let (w, letters) = ascend(rs, WeylElement::identity(rs.rank()), &sorted);
    Ok((w, ReducedWord { letters }))
}

/// Right-multiplies by ascending simple reflections from `order` until none is left.
fn ascend(rs: &RootSystem, mut w: WeylElement, order: &[usize]) -> (WeylElement, Vec<usize>) {
    let mut letters = Vec::new();
    while let Some(&i) = order
        .iter()
        .find(|&&i| w.apply_root(&rs.simple_root(i)).is_positive())
    {
        w = w.mul(&WeylElement::simple(rs, i));
        letters.push(i);
    }
    (w, letters)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Good,
    WordPrefix,
    WordSuffix,
    Telescope,
    Custom,
}

impl Provenance {
    pub fn name(&self) -> &'static str {
        match self {
            Provenance::Good => "good",
            Provenance::WordPrefix => "word-prefix",
            Provenance::WordSuffix => "word-suffix",
            Provenance::Telescope => "telescope",
            Provenance::Custom => "custom",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordVariant {
    /// w0 = w_L s_{i1}⋯s_{iN}, β_k = w_L s_{i1}⋯s_{i(k-1)}(α_{ik})
    Prefix,
    /// w0 = s_{i1}⋯s_{iN} w_L, β_k = w_L s_{iN}⋯s_{i(k+1)}(α_{ik})
    Suffix,
}

/// An ordered list β_1..β_N of the roots in Φ_P^+.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    roots: Vec<RootVec>,
    support: Vec<usize>,
    provenance: Provenance,
    word: Option<ReducedWord>,
    relabeling: Option<Vec<usize>>,
}

impl Enumeration {
    /// Any bijective listing of Φ_P^+ for the given support.
    pub fn custom(rs: &RootSystem, support: &[usize], roots: Vec<RootVec>) -> Result<Self> {
        let support = normalized_support(rs, support)?;
        check_bijective(rs, &support, &roots)?;
        Ok(Self {
            roots,
            support,
            provenance: Provenance::Custom,
            word: None,
            relabeling: None,
        })
    }

    pub fn roots(&self) -> &[RootVec] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn word(&self) -> Option<&ReducedWord> {
        self.word.as_ref()
    }

    pub fn relabeling(&self) -> Option<&[usize]> {
        self.relabeling.as_deref()
    }

    pub fn position(&self, beta: &RootVec) -> Option<usize> {
        self.roots.iter().position(|r| r == beta)
    }
}

fn normalized_support(rs: &RootSystem, support: &[usize]) -> Result<Vec<usize>> {
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    for &i in support {
        rs.check_index(i)?;
    }
    let mut s = support.to_vec();
    s.sort_unstable();
    s.dedup();
    Ok(s)
}

fn check_bijective(rs: &RootSystem, support: &[usize], roots: &[RootVec]) -> Result<()> {
    let target: HashSet<RootVec> = rs.phi_p_plus(support)?.into_iter().collect();
    let got: HashSet<RootVec> = roots.iter().cloned().collect();
    if got.len() != roots.len() || got != target {
        return Err(Error::NotBijective);
    }
    Ok(())
}

/// Enumeration of Φ_P^+ induced by a reduced decomposition of w0 that
/// contains the Levi longest element w_L (Levi = complement of `support`).
pub fn enumeration_from_word(
    rs: &RootSystem,
    support: &[usize],
    word: &[usize],
    variant: WordVariant,
) -> Result<Enumeration> {
    let support = normalized_support(rs, support)?;
    for &i in word {
        rs.check_index(i)?;
    }
    let levi: Vec<usize> = (0..rs.rank()).filter(|i| !support.contains(i)).collect();
    let (w_l, w_l_word) = longest_element(rs, &levi)?;
    let full: Vec<usize> = match variant {
        WordVariant::Prefix => w_l_word.letters().iter().chain(word).copied().collect(),
        WordVariant::Suffix => word.iter().chain(w_l_word.letters()).copied().collect(),
    };
    if full.len() != rs.num_positive_roots() || !is_reduced(rs, &full)? {
        return Err(Error::NotReduced(word.to_vec()));
    }
    let n = word.len();
    let mut roots = vec![RootVec::zero(rs.rank()); n];
    match variant {
        WordVariant::Prefix => {
            let mut w = w_l;
            for (k, &i) in word.iter().enumerate() {
                roots[k] = w.apply_root(&rs.simple_root(i));
                w = w.mul(&WeylElement::simple(rs, i));
            }
        }
        WordVariant::Suffix => {
            let mut w = w_l;
            for k in (0..n).rev() {
                roots[k] = w.apply_root(&rs.simple_root(word[k]));
                w = w.mul(&WeylElement::simple(rs, word[k]));
            }
        }
    }
    check_bijective(rs, &support, &roots)?;
    Ok(Enumeration {
        roots,
        support,
        provenance: match variant {
            WordVariant::Prefix => Provenance::WordPrefix,
            WordVariant::Suffix => Provenance::WordSuffix,
        },
        word: Some(ReducedWord {
            letters: word.to_vec(),
        }),
        relabeling: None,
    })
}

/// Φ_P^+ in canonical order (ascending height); larger roots come later.
pub fn good_ordering(rs: &RootSystem, support: &[usize]) -> Result<Enumeration> {
    let support = normalized_support(rs, support)?;
    let roots = rs.phi_p_plus(&support)?;
    Ok(Enumeration {
        roots,
        support,
        provenance: Provenance::Good,
        word: None,
        relabeling: None,
    })
}

/// β_i ≻ β_j must imply i > j.
pub fn is_good_ordering(e: &Enumeration) -> bool {
    let r = e.roots();
    (0..r.len()).all(|i| (i + 1..r.len()).all(|j| !root_partial_order(&r[i], &r[j])))
}

/// One step l_{j-1} ⊂ l_j of a Levi telescope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TelescopeBlock {
    /// Original simple index added at this step.
    pub node: usize,
    /// Reduced word of the minimal coset representative τ_j.
    pub tau: Vec<usize>,
    /// ℓ(w_0^j).
    pub levi_length: usize,
    /// Highest root of l_j.
    pub highest_root: RootVec,
    /// ⟨ϖ_node, θ_j^∨⟩; equals 1 when ϖ_node is cominuscule for l_j.
    pub cominuscule_pairing: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Telescope {
    pub enumeration: Enumeration,
    /// relabeling[j] is the original index of the (j+1)-th simple root in the chain.
    pub relabeling: Vec<usize>,
    pub blocks: Vec<TelescopeBlock>,
    /// Concatenated word τ_1 τ_2 ⋯ τ_n for w0.
    pub block_word: Vec<usize>,
    /// shells[k] = j (0-based) with β_k ∈ Φ_j^+.
    pub shells: Vec<usize>,
}

impl Telescope {
    /// Original index of the fundamental weight attached to the shell of β_k.
    pub fn shell_fundamental(&self, k: usize) -> usize {
        self.relabeling[self.shells[k]]
    }
}

/// Simple-root order along which every ϖ_j is cominuscule for l_j.
pub fn telescope_relabeling(t: CartanType) -> Result<Vec<usize>> {
    let n = t.rank();
    match t.series() {
        Series::A | Series::C | Series::D => Ok((0..n).collect()),
        // short root first, then along the diagram
        Series::B => Ok((0..n).rev().collect()),
        // D5 on {6,5,4,3,2} in Bourbaki labels, then 1 (and 7)
        Series::E if n == 6 => Ok(vec![5, 4, 3, 2, 1, 0]),
        Series::E if n == 7 => Ok(vec![5, 4, 3, 2, 1, 0, 6]),
        _ => Err(Error::UnsupportedType(t)),
    }
}

/// Enumeration compatible with the Levi telescope l_1 ⊂ ⋯ ⊂ l_n: the roots
/// of l_j occupy the last |Φ(l_j)^+| positions.
///
/// The block word τ_1⋯τ_n is read backwards through the suffix formula, which
/// is the reverse of its prefix enumeration.
pub fn telescope_enumeration(rs: &RootSystem) -> Result<Telescope> {
    let relabeling = telescope_relabeling(rs.cartan_type())?;
    let n = rs.rank();
    let mut blocks = Vec::with_capacity(n);
    let mut block_word = Vec::new();
    let mut prev = WeylElement::identity(n);
    let mut prev_len = 0;
    for j in 0..n {
        let subset = &relabeling[..=j];
        // ascend from w_0^{j-1} inside W_j; the appended letters spell τ_j
        let (wj, tau) = ascend(rs, prev.clone(), subset);
        let (longest, _) = longest_element(rs, subset)?;
        if !wj.same_element(&longest) {
            return Err(Error::InternalInvariant(format!(
                "ascent did not reach the longest element of l_{}",
                j + 1
            )));
        }
        let tau_el = WeylElement::from_word(rs, &tau)?;
        let tau_inv = tau_el.inverse(rs);
        let minimal = relabeling[..j]
            .iter()
            .all(|&i| tau_inv.apply_root(&rs.simple_root(i)).is_positive());
        let levi_length = rs.levi_positive_roots(subset).len();
        let additive = wj.length(rs) == levi_length
            && tau_el.length(rs) == tau.len()
            && prev_len + tau.len() == levi_length;
        if !minimal || !additive {
            return Err(Error::InternalInvariant(format!(
                "τ_{} is not a minimal coset representative with additive length",
                j + 1
            )));
        }
        let theta = rs
            .highest_root(subset)
            .expect("nonempty Levi has a highest root");
        let node = relabeling[j];
        let pairing = rs.coroot_pairing(&Weight::fundamental(n, node), &theta)?;
        if pairing != 1 {
            return Err(Error::InternalInvariant(format!(
                "ϖ_{} is not cominuscule for l_{}",
                node + 1,
                j + 1
            )));
        }
        block_word.extend_from_slice(&tau);
        blocks.push(TelescopeBlock {
            node,
            tau,
            levi_length,
            highest_root: theta,
            cominuscule_pairing: pairing,
        });
        prev = wj;
        prev_len = levi_length;
    }
    let reversed: Vec<usize> = block_word.iter().rev().copied().collect();
    let all: Vec<usize> = (0..n).collect();
    let mut enumeration = enumeration_from_word(rs, &all, &reversed, WordVariant::Suffix)?;
    let nroots = enumeration.len();
    let shells: Vec<usize> = enumeration
        .roots()
        .iter()
        .map(|b| {
            (0..n)
                .find(|&j| b.support().iter().all(|i| relabeling[..=j].contains(i)))
                .expect("every root lies in l_n")
        })
        .collect();
    for (j, block) in blocks.iter().enumerate() {
        let tail: HashSet<&RootVec> = enumeration.roots()[nroots - block.levi_length..]
            .iter()
            .collect();
        let levi = rs.levi_positive_roots(&relabeling[..=j]);
        if tail.len() != levi.len() || !levi.iter().all(|b| tail.contains(b)) {
            return Err(Error::InternalInvariant(format!(
                "shell property fails at l_{}",
                j + 1
            )));
        }
    }
    enumeration.provenance = Provenance::Telescope;
    enumeration.relabeling = Some(relabeling.clone());
    Ok(Telescope {
        enumeration,
        relabeling,
        blocks,
        block_word,
        shells,
    })
}
