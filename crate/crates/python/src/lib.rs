use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyList;

use nokwidth::cli::{parse_rationals, run_from};
use nokwidth::essential::essential_set;
use nokwidth::linalg::Q;
use nokwidth::rootsys::{CartanType, RootSystem, RootVec, Weight};
use nokwidth::weyl::{enumeration_from_word, good_ordering, telescope_enumeration, WordVariant};
use nokwidth::Error;

fn to_py_err(e: Error) -> PyErr {
    if e.is_input_error() {
        PyValueError::new_err(e.to_string())
    } else {
        PyRuntimeError::new_err(e.to_string())
    }
}

fn fraction<'py>(py: Python<'py>, x: &Q) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((format!("{}/{}", x.numer(), x.denom()),))
}

fn parse_weight(items: &Bound<'_, PyAny>) -> PyResult<Vec<Q>> {
    let parts: Vec<String> = items
        .try_iter()?
        .map(|x| x.and_then(|x| x.str().map(|s| s.to_string())))
        .collect::<PyResult<_>>()?;
    parse_rationals(&parts.join(",")).map_err(to_py_err)
}

fn integral(v: &[Q]) -> PyResult<Weight> {
    v.iter()
        .map(|x| {
            if x.is_integer() {
                x.to_integer()
                    .to_string()
                    .parse::<i64>()
                    .map_err(|_| PyValueError::new_err("weight too large"))
            } else {
                Err(PyValueError::new_err(format!("integral weight required, got {x}")))
            }
        })
        .collect::<PyResult<Vec<_>>>()
        .map(Weight)
}

fn one_based_word(word: Vec<usize>) -> PyResult<Vec<usize>> {
    word.into_iter()
        .map(|i| i.checked_sub(1).ok_or_else(|| PyValueError::new_err("word letters are 1-based")))
        .collect()
}

/// Root system of a simple Lie algebra, e.g. `RootSystem("B3")`.
#[pyclass(name = "RootSystem", frozen)]
struct PyRootSystem {
    inner: RootSystem,
}

impl PyRootSystem {
    fn root(&self, beta: Vec<i64>) -> PyResult<RootVec> {
        let b = RootVec(beta);
        if !self.inner.is_root(&b) {
            return Err(to_py_err(Error::NotARoot(b.0)));
        }
        Ok(b)
    }

    fn weight(&self, lam: Vec<i64>) -> PyResult<Weight> {
        if lam.len() != self.inner.rank() {
            return Err(to_py_err(Error::LengthMismatch {
                expected: self.inner.rank(),
                got: lam.len(),
            }));
        }
        Ok(Weight(lam))
    }
}

#[pymethods]
impl PyRootSystem {
    #[new]
    fn new(cartan_type: &str) -> PyResult<Self> {
        let t: CartanType = cartan_type.parse().map_err(to_py_err)?;
        Ok(Self {
            inner: RootSystem::new(t),
        })
    }

    #[getter]
    fn cartan_type(&self) -> String {
        self.inner.cartan_type().to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.inner.cartan().to_vec()
    }

    /// Positive roots in the simple-root basis, ascending height.
    #[getter]
    fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.inner.positive_roots().iter().map(|b| b.0.clone()).collect()
    }

    fn rho(&self) -> Vec<i64> {
        self.inner.rho().0
    }

    /// ⟨λ, β^∨⟩ with λ in fundamental-weight and β in simple-root coordinates.
    fn pairing(&self, lam: Vec<i64>, beta: Vec<i64>) -> PyResult<i64> {
        let (l, b) = (self.weight(lam)?, self.root(beta)?);
        self.inner.coroot_pairing(&l, &b).map_err(to_py_err)
    }

    fn weyl_dim(&self, lam: Vec<i64>) -> PyResult<u128> {
        self.inner.weyl_dim(&self.weight(lam)?).map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        format!("RootSystem('{}')", self.inner.cartan_type())
    }
}

/// Gromov width of the coadjoint orbit through a rational weight, as a Fraction.
#[pyfunction]
fn width<'py>(py: Python<'py>, cartan_type: &str, lam: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    let rs = RootSystem::new(cartan_type.parse().map_err(to_py_err)?);
    let v = parse_weight(lam)?;
    if v.len() != rs.rank() {
        return Err(to_py_err(Error::LengthMismatch {
            expected: rs.rank(),
            got: v.len(),
        }));
    }
    let r = nokwidth::widths::width_report(&rs, &v, &[], &Default::default()).map_err(to_py_err)?;
    fraction(py, &r.width)
}

/// Essential exponent tuples in ascending right-lex order.
#[pyfunction]
#[pyo3(signature = (cartan_type, lam, ordering = "good", word = None, variant = "suffix", level = 1))]
fn essential_set_tuples(
    cartan_type: &str,
    lam: &Bound<'_, PyAny>,
    ordering: &str,
    word: Option<Vec<usize>>,
    variant: &str,
    level: u32,
) -> PyResult<Vec<Vec<u32>>> {
    let rs = RootSystem::new(cartan_type.parse().map_err(to_py_err)?);
    let base = integral(&parse_weight(lam)?)?;
    if base.rank() != rs.rank() {
        return Err(to_py_err(Error::LengthMismatch {
            expected: rs.rank(),
            got: base.rank(),
        }));
    }
    if level == 0 {
        return Err(PyValueError::new_err("level must be positive"));
    }
    let e = match (ordering, word) {
        ("good", None) => good_ordering(&rs, &base.support()),
        ("telescope", None) => telescope_enumeration(&rs).map(|t| t.enumeration),
        ("word", Some(w)) => {
            let v = match variant {
                "prefix" => WordVariant::Prefix,
                "suffix" => WordVariant::Suffix,
                other => return Err(PyValueError::new_err(format!("unknown variant {other:?}"))),
            };
            enumeration_from_word(&rs, &base.support(), &one_based_word(w)?, v)
        }
        _ => return Err(PyValueError::new_err("ordering must be good, telescope, or word with a word")),
    }
    .map_err(to_py_err)?;
    let es = essential_set(&rs, &base.scale(level as i64), &e).map_err(to_py_err)?;
    Ok(es.tuples().iter().map(|m| m.0.clone()).collect())
}

/// Runs the command-line interface in-process; returns (exit code, parsed JSON document).
#[pyfunction]
fn run_cli<'py>(py: Python<'py>, args: Vec<String>) -> PyResult<(i32, Bound<'py, PyAny>)> {
    let mut argv = vec!["nok-width".to_string()];
    argv.extend(args);
    let (outcome, _) = run_from(argv).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let doc = py.import("json")?.call_method1("loads", (outcome.render(false),))?;
    Ok((outcome.exit_code, doc))
}

/// Runs the simplex constructions and returns the verification document.
#[pyfunction]
#[pyo3(signature = (cartan_type, lam, construction = "all", word = None))]
fn verify<'py>(
    py: Python<'py>,
    cartan_type: &str,
    lam: &Bound<'py, PyAny>,
    construction: &str,
    word: Option<Vec<usize>>,
) -> PyResult<Bound<'py, PyAny>> {
    let v = parse_weight(lam)?;
    let text: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    let mut args = vec![
        "verify".to_string(),
        "--type".into(),
        cartan_type.into(),
        "--lambda".into(),
        text.join(","),
        "--construction".into(),
        construction.into(),
    ];
    if let Some(w) = word {
        args.push("--word".into());
        args.push(w.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","));
    }
    let (code, doc) = run_cli(py, args)?;
    if code == 2 || code == 3 {
        let msg: String = doc.get_item("error")?.get_item("message")?.extract()?;
        return Err(if code == 2 {
            PyValueError::new_err(msg)
        } else {
            PyRuntimeError::new_err(msg)
        });
    }
    Ok(doc)
}

/// Lists the positive roots of a type.
#[pyfunction]
fn positive_roots<'py>(py: Python<'py>, cartan_type: &str) -> PyResult<Bound<'py, PyList>> {
    let rs = RootSystem::new(cartan_type.parse().map_err(to_py_err)?);
    PyList::new(py, rs.positive_roots().iter().map(|b| b.0.clone()))
}

#[pymodule]
fn nokwidth_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRootSystem>()?;
    m.add_function(wrap_pyfunction!(width, m)?)?;
    m.add_function(wrap_pyfunction!(essential_set_tuples, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    m.add_function(wrap_pyfunction!(positive_roots, m)?)?;
    m.add("SCHEMA", nokwidth::cli::SCHEMA)?;
    Ok(())
}
