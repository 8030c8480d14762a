//! Verdicts and counterexample witnesses shared by every checker.

use std::fmt;

use rayon::prelude::*;

use crate::tensor::{Matrix, Vector};

/// How many failing tuples a report keeps. The failure count is always exact.
pub const MAX_WITNESSES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// One side of an identity evaluated at a tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Vector(Vector),
    Matrix(Matrix),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Vector(v) => write!(f, "{v}"),
            Value::Matrix(m) => write!(f, "{m}"),
        }
    }
}

impl From<Vector> for Value {
    fn from(v: Vector) -> Self {
        Value::Vector(v)
    }
}

impl From<Matrix> for Value {
    fn from(m: Matrix) -> Self {
        Value::Matrix(m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Name of the law that failed.
    pub law: String,
    /// Basis indices the law was evaluated at.
    pub indices: Vec<usize>,
    pub lhs: Value,
    pub rhs: Value,
}

/// A named identity `lhs = rhs` over basis tuples of fixed arity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LawInfo {
    pub name: &'static str,
    pub formula: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub laws: Vec<LawInfo>,
    pub tuples_checked: usize,
    pub failures: usize,
    pub witnesses: Vec<Witness>,
}

impl CheckReport {
    pub fn verdict(&self) -> Verdict {
        if self.witnesses.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict().passed()
    }

    pub fn first_witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }

    /// Witnesses of one law only.
    pub fn witnesses_for<'a>(&'a self, law: &'a str) -> impl Iterator<Item = &'a Witness> {
        self.witnesses.iter().filter(move |w| w.law == law)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} ({} tuples, {} failures)",
            self.name,
            self.verdict(),
            self.tuples_checked,
            self.failures
        )?;
        for w in &self.witnesses {
            writeln!(f, "  witness {} at {:?}", w.law, w.indices)?;
            writeln!(f, "    lhs:\n{}", indent(&w.lhs.to_string()))?;
            writeln!(f, "    rhs:\n{}", indent(&w.rhs.to_string()))?;
        }
        Ok(())
    }
}

fn indent(text: &str) -> String {
    text.lines()
        .map(|l| format!("      {l}"))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Evaluator for a single law: basis indices to `(lhs, rhs)`.
pub type Eval<'a> = Box<dyn Fn(&[usize]) -> (Value, Value) + Send + Sync + 'a>;

pub struct Law<'a> {
    pub info: LawInfo,
    pub arity: usize,
    pub eval: Eval<'a>,
}

impl<'a> Law<'a> {
    pub fn new(
        name: &'static str,
        formula: &'static str,
        arity: usize,
        eval: impl Fn(&[usize]) -> (Value, Value) + Send + Sync + 'a,
    ) -> Self {
        Law {
            info: LawInfo { name, formula },
            arity,
            eval: Box::new(eval),
        }
    }
}

/// Every tuple in `0..dim` of the given arity, in lexicographic order.
pub fn all_tuples(dim: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..dim).map(move |i| {
                    let mut t = prefix.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// Evaluates every law on every tuple.
///
/// Tuples are processed in parallel but witnesses are merged in tuple order
/// (then law order), so the first witness is always the lexicographically
/// first failure.
pub fn run_laws(name: &str, laws: &[Law<'_>], tuples: &[Vec<usize>]) -> CheckReport {
    let failures: Vec<Vec<Witness>> = tuples
        .par_iter()
        .map(|tuple| {
            laws.iter()
                .filter_map(|law| {
                    debug_assert_eq!(tuple.len(), law.arity);
                    let (lhs, rhs) = (law.eval)(tuple);
                    (lhs != rhs).then(|| Witness {
                        law: law.info.name.to_string(),
                        indices: tuple.clone(),
                        lhs,
                        rhs,
                    })
                })
                .collect()
        })
        .collect();
    let total: usize = failures.iter().map(Vec::len).sum();
    CheckReport {
        name: name.to_string(),
        laws: laws.iter().map(|l| l.info).collect(),
        tuples_checked: tuples.len(),
        failures: total,
        witnesses: failures.into_iter().flatten().take(MAX_WITNESSES).collect(),
    }
}

/// Re-evaluates a law at the witness indices.
pub fn reevaluate(laws: &[Law<'_>], witness: &Witness) -> Option<(Value, Value)> {
    let law = laws.iter().find(|l| l.info.name == witness.law)?;
    (law.arity == witness.indices.len()).then(|| (law.eval)(&witness.indices))
}
