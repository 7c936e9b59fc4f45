//! Essential exponent tuples for PBW monomials in a fixed root enumeration.
//!
//! A tuple m is essential for V(λ) when F^m v_λ is not in the span of the
//! monomials F^k v_λ with k strictly below m in the opposite right-lex order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, Q};
use crate::repmod::{build_module, root_vector_expr, HighestWeightModule, PbwEvaluator, RootVectorExpr};
use crate::rootsys::{RootSystem, RootVec, Weight};
use crate::weyl::Enumeration;

/// Exponents (m_1, …, m_N) of a PBW monomial. `Ord` is the right-lex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentTuple(pub Vec<u32>);

impl ExponentTuple {
    pub fn zero(n: usize) -> Self {
        ExponentTuple(vec![0; n])
    }

    /// The unit tuple e_i.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentTuple(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &ExponentTuple) -> ExponentTuple {
        ExponentTuple(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: u32) -> ExponentTuple {
        ExponentTuple(self.0.iter().map(|a| a * k).collect())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Σ m_i β_i.
    pub fn depth(&self, roots: &[RootVec]) -> RootVec {
        let n = roots.first().map_or(0, |r| r.0.len());
        let mut d = RootVec::zero(n);
        for (m, b) in self.0.iter().zip(roots) {
            if *m > 0 {
                d = d.add(&b.scale(*m as i64));
            }
        }
        d
    }
}

impl Ord for ExponentTuple {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| right_lex(&self.0, &other.0))
    }
}

impl PartialOrd for ExponentTuple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

fn right_lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TupleOrder {
    RightLex,
    OppositeRightLex,
}

pub fn compare_tuples(m: &ExponentTuple, k: &ExponentTuple, order: TupleOrder) -> Result<Ordering> {
    if m.len() != k.len() {
        return Err(Error::LengthMismatch {
            expected: m.len(),
            got: k.len(),
        });
    }
    let o = right_lex(&m.0, &k.0);
    Ok(match order {
        TupleOrder::RightLex => o,
        TupleOrder::OppositeRightLex => o.reverse(),
    })
}

/// All m with Σ m_i β_i = ν over the allowed roots (which must be nonzero and nonnegative).
pub fn kostant_partitions(nu: &RootVec, allowed: &[RootVec]) -> Vec<ExponentTuple> {
    if !nu.is_nonnegative() {
        return Vec::new();
    }
    let mut feasible: HashMap<(usize, RootVec), bool> = HashMap::new();
    let mut out = Vec::new();
    let mut cur = vec![0u32; allowed.len()];
    partitions_rec(0, nu, allowed, &mut cur, &mut feasible, &mut out);
    out
}

fn max_multiple(rem: &RootVec, beta: &RootVec) -> u32 {
    let mut best: Option<i64> = None;
    for (r, b) in rem.0.iter().zip(&beta.0) {
        if *b > 0 {
            let q = r / b;
            best = Some(best.map_or(q, |x: i64| x.min(q)));
        }
    }
    best.unwrap_or(0).max(0) as u32
}

fn is_feasible(i: usize, rem: &RootVec, allowed: &[RootVec], memo: &mut HashMap<(usize, RootVec), bool>) -> bool {
    if i == allowed.len() {
        return rem.is_zero();
    }
    if let Some(&f) = memo.get(&(i, rem.clone())) {
        return f;
    }
    let top = max_multiple(rem, &allowed[i]);
    let ok = (0..=top).any(|c| is_feasible(i + 1, &rem.sub(&allowed[i].scale(c as i64)), allowed, memo));
    memo.insert((i, rem.clone()), ok);
    ok
}

fn partitions_rec(
    i: usize,
    rem: &RootVec,
    allowed: &[RootVec],
    cur: &mut Vec<u32>,
    memo: &mut HashMap<(usize, RootVec), bool>,
    out: &mut Vec<ExponentTuple>,
) {
    if i == allowed.len() {
        if rem.is_zero() {
            out.push(ExponentTuple(cur.clone()));
        }
        return;
    }
    let top = max_multiple(rem, &allowed[i]);
    for c in 0..=top {
        let next = rem.sub(&allowed[i].scale(c as i64));
        if is_feasible(i + 1, &next, allowed, memo) {
            cur[i] = c;
            partitions_rec(i + 1, &next, allowed, cur, memo, out);
        }
    }
    cur[i] = 0;
}

/// Sorted so that the opposite-right-lex smallest tuple comes first.
fn sorted_for_scan(mut parts: Vec<ExponentTuple>) -> Vec<ExponentTuple> {
    parts.sort_by(|a, b| b.cmp(a));
    parts
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EssentialEntry {
    pub tuple: ExponentTuple,
    /// λ − μ for the weight μ reached by F^m v_λ.
    pub depth: RootVec,
    pub weight: Weight,
    /// Position in the opposite-right-lex scan of its weight space.
    pub rank: usize,
}

#[derive(Debug, Clone)]
pub struct EssentialSet {
    lambda: Weight,
    enumeration: Enumeration,
    tuples: BTreeSet<ExponentTuple>,
    entries: Vec<EssentialEntry>,
}

impl EssentialSet {
    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn enumeration(&self) -> &Enumeration {
        &self.enumeration
    }

    /// Tuples in ascending right-lex order.
    pub fn tuples(&self) -> &BTreeSet<ExponentTuple> {
        &self.tuples
    }

    pub fn entries(&self) -> &[EssentialEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn contains(&self, m: &ExponentTuple) -> bool {
        self.tuples.contains(m)
    }
}

fn check_support(lambda: &Weight, e: &Enumeration) -> Result<()> {
    if lambda.support().iter().all(|i| e.support().contains(i)) {
        Ok(())
    } else {
        Err(Error::SupportMismatch)
    }
}

pub fn default_root_vectors(rs: &RootSystem, e: &Enumeration) -> Result<Vec<RootVectorExpr>> {
    e.roots().iter().map(|b| root_vector_expr(rs, b)).collect()
}

/// Builds V(λ) completely and computes es(λ) for the enumeration.
pub fn essential_set(rs: &RootSystem, lambda: &Weight, e: &Enumeration) -> Result<EssentialSet> {
    check_support(lambda, e)?;
    let module = build_module(rs, lambda)?;
    essential_set_in(&module, e, default_root_vectors(rs, e)?)
}

/// es(λ) in an already built module, with the given root vectors F_{β_i}.
pub fn essential_set_in(module: &HighestWeightModule, e: &Enumeration, roots: Vec<RootVectorExpr>) -> Result<EssentialSet> {
    let lambda = module.highest_weight().clone();
    check_support(&lambda, e)?;
    if !module.is_complete() {
        return Err(Error::Truncated {
            built: module.built_height(),
            needed: usize::MAX,
        });
    }
    if roots.len() != e.len() || roots.iter().zip(e.roots()).any(|(r, b)| r.root() != b) {
        return Err(Error::EnumerationMismatch);
    }
    let mut ev = PbwEvaluator::with_root_vectors(module, roots);
    let mut tuples = BTreeSet::new();
    let mut entries = Vec::new();
    for space in module.spaces() {
        let depth = space.depth();
        let dim = space.dim();
        let mut ech = Echelon::new();
        for (rank, m) in sorted_for_scan(kostant_partitions(depth, e.roots())).into_iter().enumerate() {
            if ech.rank() == dim {
                break;
            }
            let v = ev.vector(&m.0)?;
            if ech.insert(v.coords()) {
                entries.push(EssentialEntry {
                    tuple: m.clone(),
                    depth: depth.clone(),
                    weight: space.weight().clone(),
                    rank,
                });
                tuples.insert(m);
            }
        }
        if ech.rank() != dim {
            return Err(Error::InternalInvariant(format!(
                "PBW monomials span {} of {} dimensions at depth {}",
                ech.rank(),
                dim,
                depth
            )));
        }
    }
    Ok(EssentialSet {
        lambda,
        enumeration: e.clone(),
        tuples,
        entries,
    })
}

/// Decides whether m is essential using only the weight space F^m v_λ lands in.
///
/// The module may be truncated as long as it reaches the height of Σ m_i β_i.
pub fn is_essential(ev: &mut PbwEvaluator<'_>, m: &ExponentTuple) -> Result<bool> {
    let roots: Vec<RootVec> = ev.root_vectors().iter().map(|r| r.root().clone()).collect();
    if m.len() != roots.len() {
        return Err(Error::LengthMismatch {
            expected: roots.len(),
            got: m.len(),
        });
    }
    let module = ev.module();
    let depth = m.depth(&roots);
    module.require_height(depth.height() as usize)?;
    let dim = module.dim_at(&depth);
    if dim == 0 {
        return Ok(false);
    }
    let v = ev.vector(&m.0)?;
    if v.is_zero() {
        return Ok(false);
    }
    let mut ech = Echelon::new();
    for k in sorted_for_scan(kostant_partitions(&depth, &roots)) {
        if k == *m {
            break;
        }
        if ech.rank() == dim {
            return Ok(false);
        }
        ech.insert(ev.vector(&k.0)?.coords());
    }
    Ok(!ech.contains(v.coords()))
}

/// The level-ℓ slice {ℓ} × es(ℓλ) of the graded monoid.
pub fn gamma_level(rs: &RootSystem, lambda: &Weight, e: &Enumeration, level: u32) -> Result<Vec<(u32, ExponentTuple)>> {
    if level == 0 {
        return Err(Error::Parse("level must be positive".into()));
    }
    let es = essential_set(rs, &lambda.scale(level as i64), e)?;
    Ok(es.tuples().iter().map(|m| (level, m.clone())).collect())
}

fn check_triple(a: &EssentialSet, b: &EssentialSet, ab: &EssentialSet) -> Result<()> {
    if a.enumeration.roots() != ab.enumeration.roots() || b.enumeration.roots() != ab.enumeration.roots() {
        return Err(Error::EnumerationMismatch);
    }
    if a.lambda.add(&b.lambda) != ab.lambda {
        return Err(Error::WeightMismatch);
    }
    Ok(())
}

/// Pairs (m, k) from es(μ) × es(ν) whose sum is missing from es(μ+ν).
pub fn check_monoid_inclusion(
    a: &EssentialSet,
    b: &EssentialSet,
    ab: &EssentialSet,
) -> Result<Vec<(ExponentTuple, ExponentTuple)>> {
    check_triple(a, b, ab)?;
    let mut bad = Vec::new();
    for m in &a.tuples {
        for k in &b.tuples {
            if !ab.tuples.contains(&m.add(k)) {
                bad.push((m.clone(), k.clone()));
            }
        }
    }
    Ok(bad)
}

/// Whether es(μ) + es(ν) equals es(μ+ν) exactly.
pub fn minkowski_equality(a: &EssentialSet, b: &EssentialSet, ab: &EssentialSet) -> Result<bool> {
    check_triple(a, b, ab)?;
    let sums: BTreeSet<ExponentTuple> = a
        .tuples
        .iter()
        .flat_map(|m| b.tuples.iter().map(move |k| m.add(k)))
        .collect();
    Ok(sums == ab.tuples)
}

/// A polynomial in x_{β1}, …, x_{βN} with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseExponentPolynomial {
    vars: usize,
    terms: BTreeMap<ExponentTuple, Q>,
}

impl SparseExponentPolynomial {
    pub fn zero(vars: usize) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: ExponentTuple, c: Q) -> Self {
        let mut p = Self::zero(m.len());
        p.add_term(m, c);
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<ExponentTuple, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: ExponentTuple, c: Q) {
        assert_eq!(m.len(), self.vars, "exponent length");
        let entry = self.terms.entry(m.clone()).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.vars);
        for (m, a) in &self.terms {
            for (k, b) in &other.terms {
                out.add_term(m.add(k), a * b);
            }
        }
        out
    }
}

/// The right-lex smallest exponent with nonzero coefficient.
pub fn lowest_term_valuation(p: &SparseExponentPolynomial) -> Result<ExponentTuple> {
    p.terms.keys().next().cloned().ok_or(Error::ZeroPolynomial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::repmod::HighestWeightModule;
    use crate::weyl::{enumeration_from_word, good_ordering, WordVariant};

    fn t(v: &[u32]) -> ExponentTuple {
        ExponentTuple(v.to_vec())
    }

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn full(sys: &RootSystem) -> Vec<usize> {
        (0..sys.rank()).collect()
    }

    #[test]
    fn tuple_orders() {
        use Ordering::*;
        assert_eq!(compare_tuples(&t(&[1, 0, 0]), &t(&[0, 0, 1]), TupleOrder::RightLex).unwrap(), Less);
        assert_eq!(
            compare_tuples(&t(&[1, 0, 0]), &t(&[0, 0, 1]), TupleOrder::OppositeRightLex).unwrap(),
            Greater
        );
        assert_eq!(compare_tuples(&t(&[2, 1]), &t(&[2, 1]), TupleOrder::RightLex).unwrap(), Equal);
        assert!(matches!(
            compare_tuples(&t(&[1]), &t(&[1, 0]), TupleOrder::RightLex),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(t(&[5, 0]) < t(&[0, 1]));
    }

    #[test]
    fn partitions_examples() {
        let a2 = rs("A2");
        let roots = a2.positive_roots().to_vec();
        assert_eq!(kostant_partitions(&RootVec(vec![0, 0]), &roots), vec![t(&[0, 0, 0])]);
        let mut p = kostant_partitions(&RootVec(vec![1, 1]), &roots);
        p.sort();
        assert_eq!(p, vec![t(&[1, 1, 0]), t(&[0, 0, 1])]);
        let mut p = kostant_partitions(&RootVec(vec![2, 2]), &roots);
        p.sort();
        assert_eq!(p, vec![t(&[2, 2, 0]), t(&[1, 1, 1]), t(&[0, 0, 2])]);
        assert!(kostant_partitions(&RootVec(vec![-1, 0]), &roots).is_empty());
    }

    #[test]
    fn partitions_match_brute_force() {
        for s in ["B2", "G2", "A3"] {
            let sys = rs(s);
            let roots = sys.positive_roots().to_vec();
            let nu = roots.iter().fold(RootVec::zero(sys.rank()), |a, b| a.add(b));
            let got: BTreeSet<ExponentTuple> = kostant_partitions(&nu, &roots).into_iter().collect();
            // β_i can appear at most min_c ν_c / β_c times
            let bound: Vec<u32> = roots
                .iter()
                .map(|b| (0..sys.rank()).filter(|&c| b.0[c] > 0).map(|c| (nu.0[c] / b.0[c]) as u32).min().unwrap())
                .collect();
            let mut want = BTreeSet::new();
            let n = roots.len();
            let mut cur = vec![0u32; n];
            loop {
                if t(&cur).depth(&roots) == nu {
                    want.insert(t(&cur));
                }
                let mut i = 0;
                while i < n && cur[i] == bound[i] {
                    cur[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
                cur[i] += 1;
            }
            assert_eq!(got, want, "{s}");
        }
    }

    #[test]
    fn sl2_essential_sets() {
        let a1 = rs("A1");
        let e = good_ordering(&a1, &[0]).unwrap();
        for k in 0..5u32 {
            let es = essential_set(&a1, &Weight(vec![k as i64]), &e).unwrap();
            let want: BTreeSet<_> = (0..=k).map(|j| t(&[j])).collect();
            assert_eq!(es.tuples(), &want);
        }
    }

    #[test]
    fn a2_essential_sets() {
        let a2 = rs("A2");
        let e = good_ordering(&a2, &[0, 1]).unwrap();
        let es = essential_set(&a2, &Weight(vec![1, 0]), &e).unwrap();
        let want: BTreeSet<_> = [t(&[0, 0, 0]), t(&[1, 0, 0]), t(&[0, 0, 1])].into_iter().collect();
        assert_eq!(es.tuples(), &want);
        let es = essential_set(&a2, &Weight(vec![1, 1]), &e).unwrap();
        assert_eq!(es.len(), 8);
        for i in 0..3 {
            assert!(es.contains(&ExponentTuple::unit(3, i)));
        }
    }

    #[test]
    fn cardinality_and_weight_counts() {
        for (s, l) in [("B2", vec![1, 1]), ("G2", vec![1, 0]), ("A3", vec![1, 1, 0]), ("C3", vec![0, 1, 0])] {
            let sys = rs(s);
            let lam = Weight(l);
            let fr = sys.freudenthal_multiplicities(&lam).unwrap();
            let mut enums = vec![good_ordering(&sys, &full(&sys)).unwrap()];
            let (_, w0) = crate::weyl::longest_element(&sys, &full(&sys)).unwrap();
            for v in [WordVariant::Prefix, WordVariant::Suffix] {
                enums.push(enumeration_from_word(&sys, &full(&sys), w0.letters(), v).unwrap());
            }
            for e in enums {
                let es = essential_set(&sys, &lam, &e).unwrap();
                assert_eq!(es.len() as u128, sys.weyl_dim(&lam).unwrap(), "{s}");
                assert!(es.contains(&ExponentTuple::zero(e.len())));
                let mut per: BTreeMap<RootVec, u64> = BTreeMap::new();
                for entry in es.entries() {
                    *per.entry(entry.depth.clone()).or_default() += 1;
                }
                assert_eq!(per, fr, "{s}");
            }
        }
    }

    #[test]
    fn support_and_dominance_errors() {
        let a2 = rs("A2");
        let e = good_ordering(&a2, &[0]).unwrap();
        assert_eq!(essential_set(&a2, &Weight(vec![1, 1]), &e).unwrap_err(), Error::SupportMismatch);
        assert_eq!(essential_set(&a2, &Weight(vec![1, 0]), &e).unwrap().len(), 3);
        let e = good_ordering(&a2, &[0, 1]).unwrap();
        assert!(matches!(essential_set(&a2, &Weight(vec![-1, 1]), &e), Err(Error::NotDominant(_))));
    }

    #[test]
    fn local_check_agrees_with_full_scan() {
        let sys = rs("B2");
        let lam = Weight(vec![1, 1]);
        let e = good_ordering(&sys, &[0, 1]).unwrap();
        let es = essential_set(&sys, &lam, &e).unwrap();
        let module = build_module(&sys, &lam).unwrap();
        let mut ev = PbwEvaluator::new(&module, e.roots()).unwrap();
        let bound = 3;
        let n = e.len();
        let mut cur = vec![0u32; n];
        loop {
            let m = t(&cur);
            assert_eq!(is_essential(&mut ev, &m).unwrap(), es.contains(&m), "{m}");
            let mut i = 0;
            while i < n && cur[i] == bound {
                cur[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            cur[i] += 1;
        }
    }

    #[test]
    fn local_check_on_truncated_module() {
        let sys = rs("A2");
        let lam = Weight(vec![2, 2]);
        let e = good_ordering(&sys, &[0, 1]).unwrap();
        let mut module = HighestWeightModule::new(&sys, &lam, None).unwrap();
        module.extend_to_height(4).unwrap();
        let mut ev = PbwEvaluator::new(&module, e.roots()).unwrap();
        for i in 0..3 {
            assert!(is_essential(&mut ev, &ExponentTuple::unit(3, i).scale(2)).unwrap());
        }
        assert!(matches!(
            is_essential(&mut ev, &t(&[0, 0, 3])),
            Err(Error::Truncated { .. })
        ));
    }

    #[test]
    fn gamma_levels() {
        let a1 = rs("A1");
        let e = good_ordering(&a1, &[0]).unwrap();
        let g = gamma_level(&a1, &Weight(vec![1]), &e, 2).unwrap();
        assert_eq!(g, vec![(2, t(&[0])), (2, t(&[1])), (2, t(&[2]))]);
        let a2 = rs("A2");
        let e = good_ordering(&a2, &[0, 1]).unwrap();
        let lam = Weight(vec![1, 1]);
        assert_eq!(gamma_level(&a2, &lam, &e, 2).unwrap().len(), 27);
        let one: Vec<ExponentTuple> = gamma_level(&a2, &lam, &e, 1).unwrap().into_iter().map(|(_, m)| m).collect();
        let es: Vec<ExponentTuple> = essential_set(&a2, &lam, &e).unwrap().tuples().iter().cloned().collect();
        assert_eq!(one, es);
    }

    #[test]
    fn monoid_and_minkowski() {
        let a1 = rs("A1");
        let e = good_ordering(&a1, &[0]).unwrap();
        let one = essential_set(&a1, &Weight(vec![1]), &e).unwrap();
        let two = essential_set(&a1, &Weight(vec![2]), &e).unwrap();
        assert!(check_monoid_inclusion(&one, &one, &two).unwrap().is_empty());
        assert!(minkowski_equality(&one, &one, &two).unwrap());

        let a2 = rs("A2");
        let e = good_ordering(&a2, &[0, 1]).unwrap();
        let es = |l: Vec<i64>| essential_set(&a2, &Weight(l), &e).unwrap();
        let (w1, w2, r, r2, z) = (es(vec![1, 0]), es(vec![0, 1]), es(vec![1, 1]), es(vec![2, 2]), es(vec![0, 0]));
        assert!(check_monoid_inclusion(&w1, &w2, &r).unwrap().is_empty());
        assert!(check_monoid_inclusion(&r, &r, &r2).unwrap().is_empty());
        assert!(check_monoid_inclusion(&z, &r, &r).unwrap().is_empty());
        assert!(minkowski_equality(&z, &r, &r).unwrap());
        assert!(minkowski_equality(&r, &r, &r2).unwrap());
        assert_eq!(check_monoid_inclusion(&w1, &w1, &r).unwrap_err(), Error::WeightMismatch);

        let other = enumeration_from_word(&a2, &[0, 1], &[1, 0, 1], WordVariant::Prefix).unwrap();
        let r_other = essential_set(&a2, &Weight(vec![1, 1]), &other).unwrap();
        assert_eq!(check_monoid_inclusion(&w1, &w2, &r_other).unwrap_err(), Error::EnumerationMismatch);
    }

    #[test]
    fn valuation_examples() {
        let p = SparseExponentPolynomial::monomial(t(&[1, 2, 0]), q(3));
        assert_eq!(lowest_term_valuation(&p).unwrap(), t(&[1, 2, 0]));
        let s = SparseExponentPolynomial::monomial(t(&[1, 0, 0]), q(1)).add(&SparseExponentPolynomial::monomial(t(&[0, 0, 1]), q(1)));
        assert_eq!(lowest_term_valuation(&s).unwrap(), t(&[1, 0, 0]));
        assert_eq!(lowest_term_valuation(&p.mul(&s)).unwrap(), t(&[2, 2, 0]));
        assert_eq!(lowest_term_valuation(&SparseExponentPolynomial::zero(3)), Err(Error::ZeroPolynomial));
        let mut c = SparseExponentPolynomial::zero(1);
        c.add_term(t(&[1]), q(2));
        c.add_term(t(&[1]), q(-2));
        assert!(c.is_zero());
    }
}
