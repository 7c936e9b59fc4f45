//! Simplices of size k = min ⟨λ, β^∨⟩ inside the Newton-Okounkov body Δ_λ.
//!
//! Each construction lists the vertices of a simplex and checks that every
//! vertex is an essential tuple at level one; convexity of Δ_λ then gives the
//! whole simplex.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::essential::{is_essential, ExponentTuple};
use crate::linalg::Q;
use crate::repmod::{HighestWeightModule, PbwEvaluator};
use crate::rootsys::{normalize_rational_weight, RootSystem, RootVec, Weight};
use crate::weyl::{
    enumeration_from_word, good_ordering, longest_element, reflect_weight_by_root, telescope_enumeration, Enumeration,
    ReducedWord, Telescope, WordVariant,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SimplexKind {
    Good,
    Convex,
    Telescope,
}

impl SimplexKind {
    pub fn name(&self) -> &'static str {
        match self {
            SimplexKind::Good => "good",
            SimplexKind::Convex => "convex",
            SimplexKind::Telescope => "telescope",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SimplexSpec {
    pub kind: SimplexKind,
    pub k: u32,
    /// 0 first, then one vertex per root of the enumeration.
    pub vertices: Vec<ExponentTuple>,
    pub enumeration: Enumeration,
    pub lambda: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexVerdict {
    pub tuple: ExponentTuple,
    pub essential: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SimplexReport {
    pub spec: SimplexSpec,
    pub vertices: Vec<VertexVerdict>,
    pub checks: Vec<AuxCheck>,
    /// Facts recorded without an independent check.
    pub notes: Vec<String>,
    /// Whether every Gram matrix of the modules built was positive definite.
    pub grams_positive_definite: bool,
    pub passed: bool,
}

impl SimplexReport {
    fn finish(spec: SimplexSpec, vertices: Vec<VertexVerdict>, checks: Vec<AuxCheck>, notes: Vec<String>, grams: bool) -> Self {
        let passed = vertices.iter().all(|v| v.essential) && checks.iter().all(|c| c.passed) && grams;
        Self {
            spec,
            vertices,
            checks,
            notes,
            grams_positive_definite: grams,
            passed,
        }
    }
}

/// Resource limits for module construction.
#[derive(Debug, Clone, Copy, Default)]
pub struct Limits {
    pub max_dim: Option<u128>,
}

fn check_weight(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    if lambda.rank() != rs.rank() {
        return Err(Error::LengthMismatch {
            expected: rs.rank(),
            got: lambda.rank(),
        });
    }
    if lambda.is_zero() {
        return Err(Error::ZeroWeight);
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    Ok(())
}

fn check_regular(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    check_weight(rs, lambda)?;
    if !lambda.is_regular_dominant() {
        return Err(Error::NotRegular(lambda.0.clone()));
    }
    Ok(())
}

/// k from the width formula, cross-checked against min over the enumerated roots.
fn simplex_size(rs: &RootSystem, lambda: &Weight, e: &Enumeration) -> Result<u32> {
    let k = rs.gromov_width(lambda)?;
    let k2 = e
        .roots()
        .iter()
        .map(|b| rs.pairing(lambda, b))
        .min()
        .ok_or_else(|| Error::InternalInvariant("empty enumeration".into()))?;
    if k != k2 {
        return Err(Error::Disagreement(format!(
            "width formula gives {k}, minimum over the enumeration gives {k2}"
        )));
    }
    Ok(k as u32)
}

fn module_to_height(rs: &RootSystem, lambda: &Weight, height: usize, limits: &Limits) -> Result<HighestWeightModule> {
    let mut m = HighestWeightModule::new(rs, lambda, limits.max_dim)?;
    m.extend_to_height(height)?;
    Ok(m)
}

/// Checks essentiality of each tuple for V(λ), building only the weight spaces needed.
fn vertex_verdicts(
    rs: &RootSystem,
    lambda: &Weight,
    e: &Enumeration,
    tuples: &[ExponentTuple],
    limits: &Limits,
) -> Result<(Vec<VertexVerdict>, bool)> {
    let height = tuples
        .iter()
        .map(|m| m.depth(e.roots()).height() as usize)
        .max()
        .unwrap_or(0);
    let module = module_to_height(rs, lambda, height, limits)?;
    let grams = module.grams_positive_definite();
    let mut ev = PbwEvaluator::new(&module, e.roots())?;
    let verdicts = tuples
        .iter()
        .map(|m| {
            Ok(VertexVerdict {
                tuple: m.clone(),
                essential: is_essential(&mut ev, m)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((verdicts, grams))
}

fn unit_vertices(n: usize, k: u32) -> Vec<ExponentTuple> {
    let mut v = vec![ExponentTuple::zero(n)];
    v.extend((0..n).map(|i| ExponentTuple::unit(n, i).scale(k)));
    v
}

/// k·e_{i,N} with e_{i,N} = e_i + ⋯ + e_N.
fn suffix_sum_vertices(n: usize, k: u32) -> Vec<ExponentTuple> {
    let mut v = vec![ExponentTuple::zero(n)];
    v.extend((0..n).map(|i| ExponentTuple((0..n).map(|j| if j >= i { k } else { 0 }).collect())));
    v
}

pub fn verify_good_ordering_theorem(rs: &RootSystem, lambda: &Weight) -> Result<SimplexReport> {
    verify_good_ordering_theorem_with(rs, lambda, &Limits::default())
}

/// The simplex k·conv(0, e_1, …, e_N) for the good ordering of Φ_P^+, P given by supp(λ).
pub fn verify_good_ordering_theorem_with(rs: &RootSystem, lambda: &Weight, limits: &Limits) -> Result<SimplexReport> {
    check_weight(rs, lambda)?;
    let e = good_ordering(rs, &lambda.support())?;
    let k = simplex_size(rs, lambda, &e)?;
    let vertices = unit_vertices(e.len(), k);
    let (verdicts, grams) = vertex_verdicts(rs, lambda, &e, &vertices, limits)?;
    let spec = SimplexSpec {
        kind: SimplexKind::Good,
        k,
        vertices,
        enumeration: e,
        lambda: lambda.clone(),
    };
    Ok(SimplexReport::finish(spec, verdicts, Vec::new(), Vec::new(), grams))
}

/// Both computations of the maximal exponents for a reduced word of w0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MmaxData {
    /// ⟨λ, α_{i_k}^∨⟩.
    pub closed_form: Vec<u32>,
    /// Largest m with F_{β_k}^m F_{β_{k+1}}^{m_{k+1}} ⋯ v_λ ≠ 0, by descending induction.
    pub inductive: Vec<u32>,
    /// m_k^max = (0, …, 0, m_k, …, m_N).
    pub tuples: Vec<ExponentTuple>,
    /// Weight reached by F^{m_k^max} v_λ.
    pub reached: Vec<Weight>,
    /// s_{β_k} ⋯ s_{β_N}(λ).
    pub expected: Vec<Weight>,
}

fn mmax_data(rs: &RootSystem, word: &ReducedWord, lambda: &Weight, limits: &Limits) -> Result<(Enumeration, MmaxData, HighestWeightModule)> {
    check_regular(rs, lambda)?;
    let full: Vec<usize> = (0..rs.rank()).collect();
    let e = enumeration_from_word(rs, &full, word.letters(), WordVariant::Suffix)?;
    let n = e.len();
    let closed_form: Vec<u32> = word.letters().iter().map(|&i| lambda.0[i] as u32).collect();

    let module = module_to_height(rs, lambda, usize::MAX, limits)?;
    let ev = PbwEvaluator::new(&module, e.roots())?;
    let mut inductive = vec![0u32; n];
    let mut reached = vec![Weight::zero(rs.rank()); n];
    let mut expected = vec![Weight::zero(rs.rank()); n];
    let mut v = module.highest_vector();
    let mut mu = lambda.clone();
    for k in (0..n).rev() {
        let f = &ev.root_vectors()[k];
        let mut m = 0;
        loop {
            let next = crate::repmod::apply_lowering(&module, f, &v)?;
            if next.is_zero() {
                break;
            }
            v = next;
            m += 1;
        }
        inductive[k] = m;
        reached[k] = module.weight_of_depth(v.depth());
        mu = reflect_weight_by_root(rs, &e.roots()[k], &mu)?;
        expected[k] = mu.clone();
    }
    let tuples = (0..n)
        .map(|k| ExponentTuple((0..n).map(|j| if j >= k { inductive[j] } else { 0 }).collect()))
        .collect();
    Ok((
        e,
        MmaxData {
            closed_form,
            inductive,
            tuples,
            reached,
            expected,
        },
        module,
    ))
}

/// m_1^max, …, m_N^max for the suffix enumeration of a reduced word of w0.
pub fn mmax_tuples(rs: &RootSystem, word: &ReducedWord, lambda: &Weight) -> Result<Vec<ExponentTuple>> {
    let (_, d, _) = mmax_data(rs, word, lambda, &Limits::default())?;
    if d.closed_form != d.inductive {
        return Err(Error::Disagreement(format!(
            "closed form {:?}, inductive {:?}",
            d.closed_form, d.inductive
        )));
    }
    if d.reached != d.expected {
        return Err(Error::Disagreement("weights of the maximal vectors".into()));
    }
    Ok(d.tuples)
}

/// The greedy reduced word of w0 used when none is supplied.
pub fn default_convex_word(rs: &RootSystem) -> Result<ReducedWord> {
    let full: Vec<usize> = (0..rs.rank()).collect();
    Ok(longest_element(rs, &full)?.1)
}

pub fn verify_convex_ordering_theorem(rs: &RootSystem, word: Option<&ReducedWord>, lambda: &Weight) -> Result<SimplexReport> {
    verify_convex_ordering_theorem_with(rs, word, lambda, &Limits::default())
}

/// The simplex k·conv(0, e_{1,N}, …, e_{N,N}) for the suffix enumeration of a reduced word.
pub fn verify_convex_ordering_theorem_with(
    rs: &RootSystem,
    word: Option<&ReducedWord>,
    lambda: &Weight,
    limits: &Limits,
) -> Result<SimplexReport> {
    check_regular(rs, lambda)?;
    let word = match word {
        Some(w) => w.clone(),
        None => default_convex_word(rs)?,
    };
    let (e, d, module) = mmax_data(rs, &word, lambda, limits)?;
    let grams = module.grams_positive_definite();
    let k = simplex_size(rs, lambda, &e)?;
    let mut ev = PbwEvaluator::new(&module, e.roots())?;

    let mut checks = vec![
        AuxCheck {
            name: "mmax-closed-form".into(),
            passed: d.closed_form == d.inductive,
            detail: format!("closed form {:?}, inductive {:?}", d.closed_form, d.inductive),
        },
        AuxCheck {
            name: "mmax-weights".into(),
            passed: d.reached == d.expected,
            detail: "weight of each maximal vector against the reflected highest weight".into(),
        },
    ];
    for (i, m) in d.tuples.iter().enumerate() {
        checks.push(AuxCheck {
            name: format!("mmax-essential-{}", i + 1),
            passed: is_essential(&mut ev, m)?,
            detail: m.to_string(),
        });
    }

    let vertices = suffix_sum_vertices(e.len(), k);
    let verdicts = vertices
        .iter()
        .map(|m| {
            Ok(VertexVerdict {
                tuple: m.clone(),
                essential: is_essential(&mut ev, m)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let spec = SimplexSpec {
        kind: SimplexKind::Convex,
        k,
        vertices,
        enumeration: e,
        lambda: lambda.clone(),
    };
    Ok(SimplexReport::finish(spec, verdicts, checks, Vec::new(), grams))
}

pub fn verify_telescope_theorem(rs: &RootSystem, lambda: &Weight) -> Result<SimplexReport> {
    verify_telescope_theorem_with(rs, lambda, &Limits::default())
}

/// The simplex k·conv(0, e_1, …, e_N) for the Levi telescope enumeration.
pub fn verify_telescope_theorem_with(rs: &RootSystem, lambda: &Weight, limits: &Limits) -> Result<SimplexReport> {
    let tel: Telescope = telescope_enumeration(rs)?;
    check_regular(rs, lambda)?;
    let e = tel.enumeration.clone();
    let n = e.len();
    let k = simplex_size(rs, lambda, &e)?;
    let mut grams = true;

    // each e_i must already be essential for the fundamental module of its shell
    let mut by_shell: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        by_shell.entry(tel.shell_fundamental(i)).or_default().push(i);
    }
    let mut checks = Vec::new();
    for (node, idx) in &by_shell {
        let w = Weight::fundamental(rs.rank(), *node);
        let units: Vec<ExponentTuple> = idx.iter().map(|&i| ExponentTuple::unit(n, i)).collect();
        let (verdicts, g) = vertex_verdicts(rs, &w, &e, &units, limits)?;
        grams &= g;
        for (i, v) in idx.iter().zip(verdicts) {
            checks.push(AuxCheck {
                name: format!("shell-unit-{}", i + 1),
                passed: v.essential,
                detail: format!("e_{} for the fundamental weight {}", i + 1, node + 1),
            });
        }
    }
    for (j, b) in tel.blocks.iter().enumerate() {
        checks.push(AuxCheck {
            name: format!("cominuscule-{}", j + 1),
            passed: b.cominuscule_pairing == 1,
            detail: format!("fundamental weight {} against the highest root {}", b.node + 1, b.highest_root),
        });
    }

    let vertices = unit_vertices(n, k);
    let (verdicts, g) = vertex_verdicts(rs, lambda, &e, &vertices, limits)?;
    grams &= g;
    let spec = SimplexSpec {
        kind: SimplexKind::Telescope,
        k,
        vertices,
        enumeration: e,
        lambda: lambda.clone(),
    };
    let notes = vec!["the simplex is expected to be the corner of the body cut by a half-space; not checked".into()];
    Ok(SimplexReport::finish(spec, verdicts, checks, notes, grams))
}

#[derive(Debug)]
pub struct ConstructionOutcome {
    pub kind: SimplexKind,
    pub result: Result<SimplexReport>,
}

#[derive(Debug)]
pub struct WidthReport {
    pub input: Vec<Q>,
    /// The input equals `lambda / scale`.
    pub lambda: Weight,
    pub scale: Q,
    pub integral_width: i64,
    pub width: Q,
    pub minimizing_roots: Vec<RootVec>,
    pub constructions: Vec<ConstructionOutcome>,
}

impl WidthReport {
    /// True when every attempted construction produced a passing report.
    pub fn all_passed(&self) -> bool {
        self.constructions
            .iter()
            .all(|c| matches!(&c.result, Ok(r) if r.passed))
    }
}

/// Width of a rational weight plus every construction that applies to it.
pub fn width_report(rs: &RootSystem, weight: &[Q], kinds: &[SimplexKind], limits: &Limits) -> Result<WidthReport> {
    if weight.len() != rs.rank() {
        return Err(Error::LengthMismatch {
            expected: rs.rank(),
            got: weight.len(),
        });
    }
    let (lambda, scale) = normalize_rational_weight(weight)?;
    let integral_width = rs.gromov_width(&lambda)?;
    let width = Q::from_integer(integral_width.into()) / &scale;
    let minimizing_roots = rs.minimizing_roots(&lambda)?;
    let mut constructions = Vec::new();
    if lambda.is_dominant() {
        for &kind in kinds {
            let applicable = match kind {
                SimplexKind::Good => true,
                SimplexKind::Convex => lambda.is_regular_dominant(),
                SimplexKind::Telescope => {
                    lambda.is_regular_dominant() && crate::weyl::telescope_relabeling(rs.cartan_type()).is_ok()
                }
            };
            if !applicable {
                continue;
            }
            let result = match kind {
                SimplexKind::Good => verify_good_ordering_theorem_with(rs, &lambda, limits),
                SimplexKind::Convex => verify_convex_ordering_theorem_with(rs, None, &lambda, limits),
                SimplexKind::Telescope => verify_telescope_theorem_with(rs, &lambda, limits),
            };
            constructions.push(ConstructionOutcome { kind, result });
        }
    }
    Ok(WidthReport {
        input: weight.to_vec(),
        lambda,
        scale,
        integral_width,
        width,
        minimizing_roots,
        constructions,
    })
}
