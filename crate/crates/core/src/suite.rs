//! Named check suites over loaded documents, with text and machine reports.
//!
//! A machine report embeds each input document verbatim, so any witness in it
//! can be re-evaluated from the report alone (see [`verify_witness`]).

use std::fmt::{self, Write as _};
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::algebra::{commutator_algebra, AnticommAlgebra, Bilinear, BinaryAlgebra};
use crate::axioms::{self, ALTERNATIVE, ANTICOMMUTATIVE, ASSOCIATIVE, JACOBI, MALTSEV};
use crate::error::{Error, Result};
use crate::format::{digest, parse_document, Document};
use crate::pair::{pair_from_alternative, MoufangMaltsevPair};
use crate::report::{reevaluate, CheckReport, Law, Value, Verdict, Witness};
use crate::scalar::format_scalar;
use crate::triality::{self, PairContext, Sampling, DEFAULT_SAMPLE_CAP};
use crate::yamaguti::{self, yamaguti_tensor, SAGLE_YAMAGUTI};

pub const TOOL_NAME: &str = "moufang-verify";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Axioms,
    MaurerCartan,
    Decomposition,
    ConjugateYamagutian,
    Reductivity,
    ConjugateReductivity,
    HiddenAssociativity,
    SagleYamaguti,
    Maltsev,
    Equivalence,
    GeneralizedRepresentation,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Axioms,
        Suite::MaurerCartan,
        Suite::Decomposition,
        Suite::ConjugateYamagutian,
        Suite::Reductivity,
        Suite::ConjugateReductivity,
        Suite::HiddenAssociativity,
        Suite::SagleYamaguti,
        Suite::Maltsev,
        Suite::Equivalence,
        Suite::GeneralizedRepresentation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::MaurerCartan => triality::MAURER_CARTAN,
            Suite::Decomposition => triality::DECOMPOSITION,
            Suite::ConjugateYamagutian => triality::CONJUGATE_YAMAGUTIAN,
            Suite::Reductivity => triality::REDUCTIVITY,
            Suite::ConjugateReductivity => triality::CONJUGATE_REDUCTIVITY,
            Suite::HiddenAssociativity => triality::HIDDEN_ASSOCIATIVITY,
            Suite::SagleYamaguti => SAGLE_YAMAGUTI,
            Suite::Maltsev => MALTSEV,
            Suite::Equivalence => "equivalence",
            Suite::GeneralizedRepresentation => triality::GENERALIZED_REPRESENTATION,
        }
    }

    /// Suites evaluated on the operators of a pair.
    pub fn needs_pair(self) -> bool {
        matches!(
            self,
            Suite::MaurerCartan
                | Suite::Decomposition
                | Suite::ConjugateYamagutian
                | Suite::Reductivity
                | Suite::ConjugateReductivity
                | Suite::HiddenAssociativity
                | Suite::GeneralizedRepresentation
        )
    }

    /// Comma-separated names; `all` expands to every suite. Duplicates are
    /// dropped, first occurrence wins.
    pub fn parse_list(text: &str) -> Result<Vec<Suite>> {
        let mut out = Vec::new();
        for name in text.split(',').map(str::trim) {
            let add: Vec<Suite> = if name == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![name.parse()?]
            };
            for s in add {
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        Ok(out)
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Machine,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "machine" => Ok(OutputFormat::Machine),
            other => Err(Error::Usage(format!("unknown output format {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub inputs: Vec<PathBuf>,
    pub suites: Vec<Suite>,
    pub seed: u64,
    pub cap: usize,
    pub format: OutputFormat,
}

impl SuiteConfig {
    pub fn new(inputs: Vec<PathBuf>, suites: Vec<Suite>) -> Self {
        SuiteConfig {
            inputs,
            suites,
            seed: 0,
            cap: DEFAULT_SAMPLE_CAP,
            format: OutputFormat::Text,
        }
    }

    pub fn sampling(&self) -> Sampling {
        Sampling {
            seed: self.seed,
            cap: self.cap,
        }
    }
}

/// What a check was evaluated on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// The input binary algebra itself.
    Algebra,
    /// The anticommutative algebra `Γ`.
    Gamma,
    Pair,
}

impl Target {
    pub fn as_str(self) -> &'static str {
        match self {
            Target::Algebra => "algebra",
            Target::Gamma => "gamma",
            Target::Pair => "pair",
        }
    }

    fn parse(s: &str) -> Option<Target> {
        [Target::Algebra, Target::Gamma, Target::Pair]
            .into_iter()
            .find(|t| t.as_str() == s)
    }
}

/// Whether a check decides its suite's verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Required,
    Informational,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Required => "required",
            Role::Informational => "informational",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckRun {
    pub target: Target,
    pub role: Role,
    pub report: CheckReport,
}

#[derive(Clone, Debug)]
pub struct SuiteRun {
    pub suite: Suite,
    pub verdict: Verdict,
    pub checks: Vec<CheckRun>,
    pub elapsed: Duration,
}

impl SuiteRun {
    /// `agree`/`disagree` for the equivalence suite, otherwise the verdict.
    pub fn outcome(&self) -> &'static str {
        match (self.suite, self.verdict) {
            (Suite::Equivalence, Verdict::Pass) => "agree",
            (Suite::Equivalence, Verdict::Fail) => "disagree",
            (_, Verdict::Pass) => "pass",
            (_, Verdict::Fail) => "fail",
        }
    }
}

#[derive(Clone, Debug)]
pub struct InputRun {
    pub path: String,
    pub digest: String,
    pub kind: &'static str,
    pub flags: Vec<String>,
    pub document: String,
    pub suites: Vec<SuiteRun>,
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub version: String,
    pub seed: u64,
    pub cap: usize,
    pub inputs: Vec<InputRun>,
}

/// Everything derivable from one input document.
pub struct Model {
    pub algebra: Option<BinaryAlgebra>,
    pub gamma: Option<AnticommAlgebra>,
    pub pair: Option<MoufangMaltsevPair>,
    kind: &'static str,
}

impl Model {
    /// A unital binary algebra yields `Γ` and the `(L, R)` pair; the pair is
    /// flagged as unverified when the algebra is not alternative.
    pub fn from_document(doc: Document) -> Model {
        let kind = doc.kind();
        match doc {
            Document::Binary(a) => {
                let gamma = commutator_algebra(&a).ok();
                let pair = gamma.as_ref().and_then(|_| pair_from_alternative(&a).ok());
                Model {
                    algebra: Some(a),
                    gamma,
                    pair,
                    kind,
                }
            }
            Document::Anticomm(g) => Model {
                algebra: None,
                gamma: Some(g),
                pair: None,
                kind,
            },
            Document::Pair(p) => Model {
                algebra: None,
                gamma: Some(p.gamma().clone()),
                pair: Some(p),
                kind,
            },
            Document::Tensor4(_) => Model {
                algebra: None,
                gamma: None,
                pair: None,
                kind,
            },
        }
    }

    pub fn kind(&self) -> &'static str {
        self.kind
    }

    pub fn flags(&self) -> Vec<String> {
        self.pair
            .as_ref()
            .map(|p| p.flags().iter().map(|f| f.to_string()).collect())
            .unwrap_or_default()
    }

    fn supports(&self, suite: Suite) -> std::result::Result<(), &'static str> {
        if suite.needs_pair() {
            return self
                .pair
                .as_ref()
                .map(|_| ())
                .ok_or("needs a pair file or a unital algebra with closed commutators");
        }
        match suite {
            Suite::Axioms if self.algebra.is_some() || self.gamma.is_some() => Ok(()),
            Suite::Axioms => Err("needs an algebra or a pair"),
            _ => self
                .gamma
                .as_ref()
                .map(|_| ())
                .ok_or("needs an anticommutative algebra"),
        }
    }

    fn gamma(&self) -> &AnticommAlgebra {
        self.gamma.as_ref().expect("compatibility checked")
    }

    fn pair(&self) -> &MoufangMaltsevPair {
        self.pair.as_ref().expect("compatibility checked")
    }

    fn run(&self, suite: Suite, sampling: Sampling) -> SuiteRun {
        let start = Instant::now();
        let required = |target, report| CheckRun {
            target,
            role: Role::Required,
            report,
        };
        let informational = |target, report| CheckRun {
            target,
            role: Role::Informational,
            report,
        };
        let checks = match suite {
            Suite::Axioms => {
                let mut checks = Vec::new();
                if let Some(a) = &self.algebra {
                    checks.push(required(Target::Algebra, axioms::check_alternative(a)));
                    checks.push(informational(Target::Algebra, axioms::check_associative(a)));
                }
                if let Some(g) = &self.gamma {
                    if self.algebra.is_none() {
                        checks.push(required(Target::Gamma, axioms::check_anticommutative(g)));
                    }
                    checks.push(required(Target::Gamma, axioms::check_maltsev(g)));
                    checks.push(informational(Target::Gamma, axioms::check_jacobi(g)));
                }
                checks
            }
            Suite::MaurerCartan => vec![required(
                Target::Pair,
                triality::check_maurer_cartan(self.pair()),
            )],
            Suite::Decomposition => {
                vec![required(
                    Target::Pair,
                    triality::check_triality_decomposition(self.pair()),
                )]
            }
            Suite::ConjugateYamagutian => {
                vec![required(
                    Target::Pair,
                    triality::check_conjugate_yamagutian(self.pair()),
                )]
            }
            Suite::Reductivity => vec![required(
                Target::Pair,
                triality::check_reductivity(self.pair()),
            )],
            Suite::ConjugateReductivity => {
                vec![required(
                    Target::Pair,
                    triality::check_conjugate_reductivity(self.pair()),
                )]
            }
            Suite::HiddenAssociativity => vec![required(
                Target::Pair,
                triality::check_hidden_associativity(self.pair(), sampling),
            )],
            Suite::GeneralizedRepresentation => vec![required(
                Target::Pair,
                triality::check_generalized_representation(self.pair(), sampling),
            )],
            Suite::SagleYamaguti => vec![required(
                Target::Gamma,
                yamaguti::check_sagle_yamaguti(self.gamma()),
            )],
            Suite::Maltsev => vec![required(Target::Gamma, axioms::check_maltsev(self.gamma()))],
            Suite::Equivalence => vec![
                informational(Target::Gamma, axioms::check_maltsev(self.gamma())),
                informational(Target::Gamma, yamaguti::check_sagle_yamaguti(self.gamma())),
            ],
        };
        let passed = if suite == Suite::Equivalence {
            checks[0].report.verdict() == checks[1].report.verdict()
        } else {
            checks
                .iter()
                .filter(|c| c.role == Role::Required)
                .all(|c| c.report.passed())
        };
        SuiteRun {
            suite,
            verdict: if passed { Verdict::Pass } else { Verdict::Fail },
            checks,
            elapsed: start.elapsed(),
        }
    }
}

/// Loads every input and checks suite compatibility, then runs the suites.
/// Nothing is evaluated unless every (input, suite) combination is valid.
pub fn run_suites(config: &SuiteConfig) -> Result<RunReport> {
    if config.cap == 0 {
        return Err(Error::Usage("sampling cap must be positive".into()));
    }
    if config.suites.is_empty() {
        return Err(Error::Usage("no suites requested".into()));
    }
    let mut loaded = Vec::new();
    for path in &config.inputs {
        let bytes = std::fs::read(path)?;
        let text = String::from_utf8(bytes).map_err(|e| Error::Parse {
            line: 1,
            column: e.utf8_error().valid_up_to() + 1,
            message: "input is not UTF-8".into(),
        })?;
        let model = Model::from_document(parse_document(&text)?);
        for &suite in &config.suites {
            model.supports(suite).map_err(|why| {
                Error::Usage(format!(
                    "suite {suite} {why} ({} is of kind {})",
                    path.display(),
                    model.kind()
                ))
            })?;
        }
        loaded.push((path.display().to_string(), text, model));
    }
    let inputs = loaded
        .into_iter()
        .map(|(path, text, model)| InputRun {
            digest: digest(text.as_bytes()),
            kind: model.kind(),
            flags: model.flags(),
            suites: config
                .suites
                .iter()
                .map(|&s| model.run(s, config.sampling()))
                .collect(),
            document: text,
            path,
        })
        .collect();
    Ok(RunReport {
        version: VERSION.to_string(),
        seed: config.seed,
        cap: config.cap,
        inputs,
    })
}

impl RunReport {
    pub fn failed_suites(&self) -> usize {
        self.inputs
            .iter()
            .flat_map(|i| &i.suites)
            .filter(|s| !s.verdict.passed())
            .count()
    }

    pub fn all_passed(&self) -> bool {
        self.failed_suites() == 0
    }

    /// Human-readable report, including per-suite wall-clock time.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{TOOL_NAME} {}", self.version);
        let mut index = 0;
        for input in &self.inputs {
            let _ = writeln!(
                out,
                "input {} ({}, sha256 {})",
                input.path, input.kind, input.digest
            );
            if !input.flags.is_empty() {
                let _ = writeln!(out, "  flags: {}", input.flags.join(", "));
            }
            for suite in &input.suites {
                let _ = writeln!(
                    out,
                    "  {}: {} ({:.1} ms)",
                    suite.suite,
                    suite.outcome(),
                    suite.elapsed.as_secs_f64() * 1e3
                );
                for check in &suite.checks {
                    let r = &check.report;
                    let role = match check.role {
                        Role::Required => String::new(),
                        Role::Informational => ", informational".into(),
                    };
                    let _ = writeln!(
                        out,
                        "    {} [{}{role}]: {} ({} tuples, {} failures)",
                        r.name,
                        check.target.as_str(),
                        r.verdict(),
                        r.tuples_checked,
                        r.failures
                    );
                    for w in &r.witnesses {
                        let _ =
                            writeln!(out, "      witness #{index}: {} at {:?}", w.law, w.indices);
                        let _ = writeln!(out, "        lhs:\n{}", indent(&w.lhs.to_string(), 10));
                        let _ = writeln!(out, "        rhs:\n{}", indent(&w.rhs.to_string(), 10));
                        index += 1;
                    }
                }
            }
        }
        let total: usize = self.inputs.iter().map(|i| i.suites.len()).sum();
        let _ = writeln!(
            out,
            "summary: {total} suites, {} failed",
            self.failed_suites()
        );
        out
    }

    pub fn to_machine(&self) -> MachineReport {
        let mut index = 0;
        let inputs = self
            .inputs
            .iter()
            .map(|input| MachineInput {
                path: input.path.clone(),
                sha256: input.digest.clone(),
                kind: input.kind.to_string(),
                flags: input.flags.clone(),
                suites: input
                    .suites
                    .iter()
                    .map(|suite| MachineSuite {
                        suite: suite.suite.name().to_string(),
                        verdict: suite.verdict.to_string(),
                        outcome: suite.outcome().to_string(),
                        checks: suite
                            .checks
                            .iter()
                            .map(|check| {
                                let r = &check.report;
                                MachineCheck {
                                    name: r.name.clone(),
                                    target: check.target.as_str().to_string(),
                                    role: check.role.as_str().to_string(),
                                    verdict: r.verdict().to_string(),
                                    laws: r
                                        .laws
                                        .iter()
                                        .map(|l| MachineLaw {
                                            name: l.name.to_string(),
                                            formula: l.formula.to_string(),
                                        })
                                        .collect(),
                                    tuples_checked: r.tuples_checked,
                                    failures: r.failures,
                                    witnesses: r
                                        .witnesses
                                        .iter()
                                        .map(|w| {
                                            index += 1;
                                            MachineWitness::new(index - 1, w)
                                        })
                                        .collect(),
                                }
                            })
                            .collect(),
                    })
                    .collect(),
                document: input.document.clone(),
            })
            .collect();
        MachineReport {
            tool: TOOL_NAME.to_string(),
            version: self.version.clone(),
            seed: self.seed,
            cap: self.cap,
            failed_suites: self.failed_suites(),
            inputs,
        }
    }

    /// Deterministic structured report. Wall-clock times are left out so
    /// identical runs produce identical bytes.
    pub fn render_machine(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.to_machine()).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.render_text(),
            OutputFormat::Machine => self.render_machine(),
        }
    }
}

fn indent(text: &str, width: usize) -> String {
    let pad = " ".repeat(width);
    text.lines()
        .map(|l| format!("{pad}{l}"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MachineReport {
    pub tool: String,
    pub version: String,
    pub seed: u64,
    pub cap: usize,
    pub failed_suites: usize,
    pub inputs: Vec<MachineInput>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MachineInput {
    pub path: String,
    pub sha256: String,
    pub kind: String,
    pub flags: Vec<String>,
    pub suites: Vec<MachineSuite>,
    /// The input file, verbatim.
    pub document: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MachineSuite {
    pub suite: String,
    pub verdict: String,
    pub outcome: String,
    pub checks: Vec<MachineCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MachineCheck {
    pub name: String,
    pub target: String,
    pub role: String,
    pub verdict: String,
    pub laws: Vec<MachineLaw>,
    pub tuples_checked: usize,
    pub failures: usize,
    pub witnesses: Vec<MachineWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MachineLaw {
    pub name: String,
    pub formula: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MachineWitness {
    pub index: usize,
    pub law: String,
    pub indices: Vec<usize>,
    pub lhs: MachineValue,
    pub rhs: MachineValue,
}

impl MachineWitness {
    fn new(index: usize, w: &Witness) -> Self {
        MachineWitness {
            index,
            law: w.law.clone(),
            indices: w.indices.clone(),
            lhs: MachineValue::from(&w.lhs),
            rhs: MachineValue::from(&w.rhs),
        }
    }
}

/// Dense exact values as scalar strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum MachineValue {
    Vector { entries: Vec<String> },
    Matrix { rows: Vec<Vec<String>> },
}

impl From<&Value> for MachineValue {
    fn from(v: &Value) -> Self {
        match v {
            Value::Vector(v) => MachineValue::Vector {
                entries: v.iter().map(format_scalar).collect(),
            },
            Value::Matrix(m) => MachineValue::Matrix {
                rows: (0..m.rows())
                    .map(|i| m.row(i).iter().map(format_scalar).collect())
                    .collect(),
            },
        }
    }
}

/// Result of re-evaluating one recorded witness.
#[derive(Clone, Debug)]
pub struct WitnessCheck {
    pub index: usize,
    pub input: String,
    pub check: String,
    pub law: String,
    pub indices: Vec<usize>,
    pub recorded: (MachineValue, MachineValue),
    pub recomputed: (MachineValue, MachineValue),
}

impl WitnessCheck {
    pub fn reproduced(&self) -> bool {
        self.recorded == self.recomputed
    }
}

fn axiom_laws<'a, A: Bilinear>(a: &'a A, check: &str) -> Option<Vec<Law<'a>>> {
    Some(match check {
        ANTICOMMUTATIVE => axioms::anticommutative_laws(a),
        JACOBI => axioms::jacobi_laws(a),
        MALTSEV => axioms::maltsev_laws(a),
        ALTERNATIVE => axioms::alternative_laws(a),
        ASSOCIATIVE => axioms::associative_laws(a),
        _ => return None,
    })
}

fn pair_laws<'c>(ctx: &'c PairContext<'_>, check: &str) -> Option<Vec<Law<'c>>> {
    Some(match check {
        triality::MAURER_CARTAN => triality::maurer_cartan_laws(ctx),
        triality::DECOMPOSITION => triality::decomposition_laws(ctx),
        triality::CONJUGATE_YAMAGUTIAN => triality::conjugate_yamagutian_laws(ctx),
        triality::REDUCTIVITY => triality::reductivity_laws(ctx),
        triality::CONJUGATE_REDUCTIVITY => triality::conjugate_reductivity_laws(ctx),
        triality::HIDDEN_ASSOCIATIVITY => triality::hidden_associativity_laws(ctx),
        triality::GENERALIZED_REPRESENTATION => triality::generalized_representation_laws(ctx),
        _ => return None,
    })
}

/// Re-evaluates a law of the named check at the witness tuple.
pub fn reevaluate_witness(
    model: &Model,
    check: &str,
    target: Target,
    w: &Witness,
) -> Option<(Value, Value)> {
    match target {
        Target::Algebra => reevaluate(&axiom_laws(model.algebra.as_ref()?, check)?, w),
        Target::Gamma => {
            let g = model.gamma.as_ref()?;
            if check == SAGLE_YAMAGUTI {
                let y = yamaguti_tensor(g);
                let laws = yamaguti::sagle_yamaguti_laws(g, &y);
                reevaluate(&laws, w)
            } else {
                reevaluate(&axiom_laws(g, check)?, w)
            }
        }
        Target::Pair => {
            let ctx = PairContext::new(model.pair.as_ref()?);
            let laws = pair_laws(&ctx, check)?;
            reevaluate(&laws, w)
        }
    }
}

/// Finds witness `index` in a machine report, rebuilds the model from the
/// embedded document and evaluates the law again.
pub fn verify_witness(report_text: &str, index: usize) -> Result<WitnessCheck> {
    let report: MachineReport = serde_json::from_str(report_text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    for (n, input) in report.inputs.iter().enumerate() {
        for suite in &input.suites {
            for check in &suite.checks {
                let Some(mw) = check.witnesses.iter().find(|w| w.index == index) else {
                    continue;
                };
                if digest(input.document.as_bytes()) != input.sha256 {
                    return Err(Error::format(
                        format!("inputs[{n}].sha256"),
                        "does not match the embedded document",
                    ));
                }
                let target = Target::parse(&check.target).ok_or_else(|| {
                    Error::format(
                        format!("inputs[{n}].target"),
                        format!("unknown target {:?}", check.target),
                    )
                })?;
                let model = Model::from_document(parse_document(&input.document)?);
                let placeholder = Value::Vector(crate::tensor::Vector::zeros(0));
                let witness = Witness {
                    law: mw.law.clone(),
                    indices: mw.indices.clone(),
                    lhs: placeholder.clone(),
                    rhs: placeholder,
                };
                let dim = model.gamma.as_ref().map(|g| g.dim()).into_iter();
                let dim = dim
                    .chain(model.algebra.as_ref().map(|a| a.dim()))
                    .max()
                    .unwrap_or(0);
                if mw.indices.iter().any(|&i| i >= dim) {
                    return Err(Error::format(
                        format!("witness {index}"),
                        "index out of range",
                    ));
                }
                let (lhs, rhs) = reevaluate_witness(&model, &check.name, target, &witness)
                    .ok_or_else(|| {
                        Error::format(
                            format!("witness {index}"),
                            format!(
                                "no law {:?} in check {:?} on {}",
                                mw.law, check.name, check.target
                            ),
                        )
                    })?;
                return Ok(WitnessCheck {
                    index,
                    input: input.path.clone(),
                    check: check.name.clone(),
                    law: mw.law.clone(),
                    indices: mw.indices.clone(),
                    recorded: (mw.lhs.clone(), mw.rhs.clone()),
                    recomputed: ((&lhs).into(), (&rhs).into()),
                });
            }
        }
    }
    Err(Error::Usage(format!(
        "report has no witness with index {index}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!(
            Suite::parse_list("maltsev, axioms,maltsev").unwrap(),
            vec![Suite::Maltsev, Suite::Axioms]
        );
        assert_eq!(Suite::parse_list("all").unwrap().len(), 11);
        assert!(
            matches!(Suite::parse_list("axioms,triality"), Err(Error::UnknownSuite(n)) if n == "triality")
        );
    }

    #[test]
    fn compatibility() {
        let g = Model::from_document(Document::Anticomm(crate::fixtures::lie_cross()));
        assert!(g.supports(Suite::Maltsev).is_ok());
        assert!(g.supports(Suite::MaurerCartan).is_err());
        let o = Model::from_document(Document::Binary(BinaryAlgebra::octonions()));
        assert!(Suite::ALL.iter().all(|&s| o.supports(s).is_ok()));
        assert!(o.flags().is_empty());
        let s = Model::from_document(Document::Binary(BinaryAlgebra::sedenions()));
        assert_eq!(s.flags(), vec!["unverified model".to_string()]);
    }
}
