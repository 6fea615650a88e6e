//! Batch jobs: check, construct, search and friends, driven by
//! [`JobDocument`]s. The command-line front end is a thin layer over this
//! module.

use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use crate::algebra::{AnyAlgebra, Kind, PairKind};
use crate::check::{CheckOptions, CheckReport};
use crate::checkers::check_any;
use crate::constructions::{
    change_basis, dendriform_split, direct_sum, semidirect_product, subadjacent_commutative, subadjacent_lie,
    subadjacent_poisson, untwist, yau_twist, TwistSpec,
};
use crate::deformations::{check_deformation, semiclassical_limit};
use crate::error::{Error, Result};
use crate::graded::{check_graded, subadjacent_gerstenhaber};
use crate::io::{
    parse_document, read_document, serialize_document, AlgebraDocument, AlgebraValue, AverageOperatorDocument,
    CocycleDocument, DeformationDocument, Document, JobDocument, Metadata, OOperatorDocument,
    RepresentationDocument,
};
use crate::linalg::{format_scalar, parse_scalar, Matrix};
use crate::operators::{
    check_average_operator, check_o_operator, check_two_cocycle, compatible_from_invertible, image_structure,
    induced_dual_prepoisson, induced_leibniz, induced_permutative, induced_prelie, induced_prepoisson,
    induced_zinbiel, prepoisson_from_cocycle, search_o_operators, AnyRepresentation, CocycleVariant,
};
use crate::representations::{
    check_rep_comm_assoc, check_rep_lie, check_rep_poisson, dual_rep_comm_assoc, dual_rep_lie, dual_rep_poisson,
    prepoisson_representation, regular_poisson_representation, regular_representation,
};

/// Process exit classes shared by every command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitClass {
    Pass = 0,
    MathFailure = 1,
    Invalid = 2,
}

impl ExitClass {
    pub fn code(self) -> i32 {
        self as i32
    }
}

impl Error {
    /// Broken mathematical preconditions are failures; everything else is a
    /// validation or I/O problem.
    pub fn exit_class(&self) -> ExitClass {
        match self {
            Error::Precondition { .. }
            | Error::Singular(_)
            | Error::NotIntertwining(_)
            | Error::IllDefinedTransport(_) => ExitClass::MathFailure,
            _ => ExitClass::Invalid,
        }
    }
}

/// What a job produced.
#[derive(Clone, Debug)]
pub struct JobOutput {
    pub exit: ExitClass,
    /// Human-readable report.
    pub text: String,
    pub report: Option<CheckReport>,
    /// Documents produced by construct-like commands, already verified.
    pub documents: Vec<Document>,
}

impl JobOutput {
    fn checked(header: String, report: CheckReport) -> Self {
        let exit = if report.passed() { ExitClass::Pass } else { ExitClass::MathFailure };
        JobOutput { exit, text: format!("{header}: {report}"), report: Some(report), documents: Vec::new() }
    }

    fn produced(text: String, documents: Vec<Document>) -> Self {
        JobOutput { exit: ExitClass::Pass, text, report: None, documents }
    }

    /// Machine-readable form of the report, if any.
    pub fn report_json(&self) -> Value {
        match &self.report {
            Some(r) => report_json(r),
            None => json!({ "passed": true, "violations": [] }),
        }
    }
}

pub fn report_json(r: &CheckReport) -> Value {
    let vs: Vec<Value> = r
        .violations
        .iter()
        .map(|v| {
            json!({
                "identity": v.identity,
                "indices": v.indices,
                "tuple": v.tuple_label(),
                "discrepancy": v.discrepancy.iter().map(format_scalar).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "passed": r.passed(), "violations": vs })
}

/// Typed view of a job's parameters with input paths resolved against a
/// base directory.
pub struct Params<'a> {
    job: &'a JobDocument,
    base: PathBuf,
}

impl<'a> Params<'a> {
    pub fn new(job: &'a JobDocument, base: &Path) -> Self {
        Params { job, base: base.to_path_buf() }
    }

    fn value(&self, key: &str) -> Option<&Value> {
        self.job.parameters.get(key)
    }

    pub fn flag(&self, key: &str) -> Result<bool> {
        match self.value(key) {
            None => Ok(false),
            Some(Value::Bool(b)) => Ok(*b),
            Some(v) => Err(Error::parse(format!("parameters.{key}"), format!("expected a boolean, found {v}"))),
        }
    }

    pub fn string(&self, key: &str) -> Result<Option<String>> {
        match self.value(key) {
            None => Ok(None),
            Some(Value::String(s)) => Ok(Some(s.clone())),
            Some(v) => Err(Error::parse(format!("parameters.{key}"), format!("expected a string, found {v}"))),
        }
    }

    pub fn required_string(&self, key: &str) -> Result<String> {
        self.string(key)?.ok_or_else(|| Error::parse("parameters", format!("missing parameter {key:?}")))
    }

    pub fn count(&self, key: &str) -> Result<Option<u64>> {
        match self.value(key) {
            None => Ok(None),
            Some(v) => v
                .as_u64()
                .map(Some)
                .ok_or_else(|| Error::parse(format!("parameters.{key}"), format!("expected a non-negative integer, found {v}"))),
        }
    }

    /// A matrix given as rows of rational strings or integers.
    pub fn matrix(&self, key: &str) -> Result<Option<Matrix>> {
        let Some(v) = self.value(key) else { return Ok(None) };
        let ctx = format!("parameters.{key}");
        let rows = v.as_array().ok_or_else(|| Error::parse(&ctx, "expected an array of rows"))?;
        let parsed = rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let row = row.as_array().ok_or_else(|| Error::parse(format!("{ctx}[{r}]"), "expected an array"))?;
                row.iter()
                    .enumerate()
                    .map(|(c, x)| {
                        let at = format!("{ctx}[{r}][{c}]");
                        let text = match x {
                            Value::String(s) => s.clone(),
                            Value::Number(n) if n.is_i64() => n.to_string(),
                            other => return Err(Error::parse(at, format!("malformed rational {other}"))),
                        };
                        parse_scalar(&text).map_err(|m| Error::parse(at, m))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(parsed).map(Some).map_err(|e| Error::parse(ctx, e.to_string()))
    }

    pub fn required_matrix(&self, key: &str) -> Result<Matrix> {
        self.matrix(key)?.ok_or_else(|| Error::parse("parameters", format!("missing parameter {key:?}")))
    }

    pub fn options(&self) -> Result<CheckOptions> {
        Ok(CheckOptions {
            all_violations: self.flag("all_violations")?,
            force: self.flag("force")?,
            parallel: self.flag("parallel")?,
        })
    }

    pub fn variant(&self) -> Result<CocycleVariant> {
        Ok(match self.string("variant")? {
            None => CocycleVariant::default(),
            Some(s) => s.parse()?,
        })
    }

    pub fn input_path(&self, i: usize) -> Result<PathBuf> {
        let p = self.job.inputs.get(i).ok_or_else(|| {
            Error::parse("inputs", format!("command {:?} needs at least {} input(s)", self.job.command, i + 1))
        })?;
        Ok(self.base.join(p))
    }

    pub fn input(&self, i: usize) -> Result<Document> {
        read_document(&self.input_path(i)?)
    }
}

fn expect_algebra(doc: Document) -> Result<AlgebraDocument> {
    match doc {
        Document::Algebra(a) => Ok(a),
        other => Err(Error::parse("document", format!("expected an algebra document, found {:?}", other.tag()))),
    }
}

fn expect_rep(doc: Document) -> Result<AnyRepresentation> {
    match doc {
        Document::Representation(r) => r.to_rep(),
        other => Err(Error::parse("document", format!("expected a representation document, found {:?}", other.tag()))),
    }
}

fn expect_deformation(doc: Document) -> Result<DeformationDocument> {
    match doc {
        Document::Deformation(d) => Ok(d),
        other => Err(Error::parse("document", format!("expected a deformation document, found {:?}", other.tag()))),
    }
}

fn rep_report(rep: &AnyRepresentation, opts: &CheckOptions) -> Result<CheckReport> {
    match rep {
        AnyRepresentation::Poisson(r) => check_rep_poisson(r, opts),
        AnyRepresentation::Single(r) if r.algebra().kind() == Kind::HomLie => check_rep_lie(r, opts),
        AnyRepresentation::Single(r) => check_rep_comm_assoc(r, opts),
    }
}

/// Runs the checker matching the document type and kind tag.
pub fn check_document(doc: &Document, opts: &CheckOptions) -> Result<(String, CheckReport)> {
    Ok(match doc {
        Document::Algebra(a) => match a.to_value()? {
            AlgebraValue::Plain(p) => (p.kind_tag().to_string(), check_any(&p, opts)),
            AlgebraValue::Graded(g) => (g.kind().tag().to_string(), check_graded(&g, opts)?),
        },
        Document::Representation(r) => {
            let rep = r.to_rep()?;
            let what = match &rep {
                AnyRepresentation::Poisson(_) => "representation of hom-poisson".to_string(),
                AnyRepresentation::Single(s) => format!("representation of {}", s.algebra().kind()),
            };
            (what, rep_report(&rep, opts)?)
        }
        Document::OOperator(o) => ("o-operator".into(), check_o_operator(&o.to_op()?, opts)?),
        Document::AverageOperator(o) => ("average-operator".into(), check_average_operator(&o.to_op()?, opts)?),
        Document::Cocycle(c) => {
            let (a, w) = c.to_cocycle()?;
            ("2-cocycle".into(), check_two_cocycle(&a, &w, opts)?)
        }
        Document::Deformation(d) => ("deformation".into(), check_deformation(&d.to_deformation()?, opts)?),
        Document::Job(_) => return Err(Error::Invalid("a job document cannot be checked".into())),
    })
}

/// Checks an algebra under another kind's checker. Without `force` a kind
/// mismatch is an error.
pub fn check_as(a: &AnyAlgebra, kind: &str, opts: &CheckOptions) -> Result<CheckReport> {
    if kind == a.kind_tag() {
        return Ok(check_any(a, opts));
    }
    if !opts.force {
        return Err(Error::WrongKind { expected: kind.into(), found: a.kind_tag().into() });
    }
    let relabelled: AnyAlgebra = match a {
        AnyAlgebra::Single(s) => s.relabel(kind.parse::<Kind>()?).into(),
        AnyAlgebra::Pair(p) => p.relabel(kind.parse::<PairKind>()?).into(),
    };
    Ok(check_any(&relabelled, opts))
}

/// Serializes `doc`, re-parses it and runs its checker; only a passing
/// document is returned. This is the fail-closed gate in front of every write.
pub fn verify_document(doc: &Document) -> Result<Document> {
    let text = serialize_document(doc)?;
    let back = parse_document(text.as_bytes())?;
    let (what, report) = check_document(&back, &CheckOptions::default())?;
    if !report.passed() {
        return Err(Error::precondition(format!("refusing to emit a {what} document that fails its checker"), report));
    }
    Ok(back)
}

/// Verifies then writes; nothing is written on failure.
pub fn write_verified(path: &Path, doc: &Document) -> Result<()> {
    let doc = verify_document(doc)?;
    std::fs::write(path, serialize_document(&doc)?)?;
    Ok(())
}

/// `check`: runs the checker for the first input.
pub fn run_check(p: &Params) -> Result<JobOutput> {
    let opts = p.options()?;
    let doc = p.input(0)?;
    let name = doc_name(&doc);
    if let (Some(kind), Document::Algebra(a)) = (p.string("as")?, &doc) {
        let report = check_as(&a.to_any()?, &kind, &opts)?;
        return Ok(JobOutput::checked(format!("check {kind}{name}"), report));
    }
    let (what, report) = check_document(&doc, &opts)?;
    Ok(JobOutput::checked(format!("check {what}{name}"), report))
}

fn doc_name(doc: &Document) -> String {
    let meta = match doc {
        Document::Algebra(a) => &a.metadata,
        Document::Representation(r) => &r.metadata,
        Document::OOperator(o) => &o.metadata,
        Document::AverageOperator(o) => &o.metadata,
        Document::Cocycle(c) => &c.metadata,
        Document::Deformation(d) => &d.metadata,
        Document::Job(_) => return String::new(),
    };
    meta.name.as_ref().map(|n| format!(" ({n})")).unwrap_or_default()
}

fn alg_doc(a: impl Into<AlgebraValue>) -> Document {
    Document::Algebra(AlgebraDocument::new(a))
}

fn rep_doc(r: impl Into<AnyRepresentation>) -> Document {
    Document::Representation(RepresentationDocument::new(r))
}

/// The names accepted by `construct`.
pub const CONSTRUCTIONS: &[&str] = &[
    "subadjacent-commutative",
    "subadjacent-lie",
    "subadjacent-poisson",
    "dendriform-split",
    "yau-twist",
    "untwist",
    "direct-sum",
    "semidirect-product",
    "change-basis",
    "regular-representation",
    "regular-poisson-representation",
    "prepoisson-representation",
    "dual-representation",
    "induced-zinbiel",
    "induced-prelie",
    "induced-prepoisson",
    "image-structure",
    "compatible-from-invertible",
    "prepoisson-from-cocycle",
    "induced-permutative",
    "induced-leibniz",
    "induced-dual-prepoisson",
    "semiclassical-limit",
    "subadjacent-gerstenhaber",
];

fn o_operator(p: &Params) -> Result<crate::operators::OOperator> {
    match p.input(0)? {
        Document::OOperator(o) => o.to_op(),
        other => Err(Error::parse("document", format!("expected an o-operator document, found {:?}", other.tag()))),
    }
}

fn average_operator(p: &Params) -> Result<crate::operators::AverageOperator> {
    match p.input(0)? {
        Document::AverageOperator(o) => o.to_op(),
        other => {
            Err(Error::parse("document", format!("expected an average-operator document, found {:?}", other.tag())))
        }
    }
}

fn dualize(rep: &AnyRepresentation) -> Result<AnyRepresentation> {
    Ok(match rep {
        AnyRepresentation::Poisson(r) => dual_rep_poisson(r)?.into(),
        AnyRepresentation::Single(r) if r.algebra().kind() == Kind::HomLie => dual_rep_lie(r)?.into(),
        AnyRepresentation::Single(r) => dual_rep_comm_assoc(r)?.into(),
    })
}

/// Builds the documents of one construction without verifying them.
fn build(name: &str, p: &Params) -> Result<Vec<Document>> {
    let any = |i| expect_algebra(p.input(i)?)?.to_any();
    let pair = |i| expect_algebra(p.input(i)?)?.to_pair();
    let single = |i| expect_algebra(p.input(i)?)?.to_single();
    Ok(match name {
        "subadjacent-commutative" => vec![alg_doc(subadjacent_commutative(&single(0)?)?)],
        "subadjacent-lie" => vec![alg_doc(subadjacent_lie(&single(0)?)?)],
        "subadjacent-poisson" => vec![alg_doc(subadjacent_poisson(&pair(0)?)?)],
        "dendriform-split" => {
            let (dot, star) = dendriform_split(&pair(0)?)?;
            vec![alg_doc(dot), alg_doc(star)]
        }
        "yau-twist" => vec![alg_doc(yau_twist(&any(0)?, &TwistSpec::new(p.required_matrix("matrix")?))?)],
        "untwist" => vec![alg_doc(untwist(&any(0)?)?)],
        "direct-sum" => vec![alg_doc(direct_sum(&pair(0)?, &pair(1)?)?)],
        "semidirect-product" => match expect_rep(p.input(0)?)? {
            AnyRepresentation::Poisson(r) => vec![alg_doc(semidirect_product(&r)?)],
            AnyRepresentation::Single(_) => {
                return Err(Error::WrongKind { expected: "Poisson representation".into(), found: "single".into() })
            }
        },
        "change-basis" => vec![alg_doc(change_basis(&any(0)?, &p.required_matrix("matrix")?)?)],
        "regular-representation" => vec![rep_doc(regular_representation(&single(0)?)?)],
        "regular-poisson-representation" => vec![rep_doc(regular_poisson_representation(&pair(0)?)?)],
        "prepoisson-representation" => vec![rep_doc(prepoisson_representation(&pair(0)?)?)],
        "dual-representation" => vec![rep_doc(dualize(&expect_rep(p.input(0)?)?)?)],
        "induced-zinbiel" => vec![alg_doc(induced_zinbiel(&o_operator(p)?)?)],
        "induced-prelie" => vec![alg_doc(induced_prelie(&o_operator(p)?)?)],
        "induced-prepoisson" => vec![alg_doc(induced_prepoisson(&o_operator(p)?)?)],
        "image-structure" => vec![alg_doc(image_structure(&o_operator(p)?)?.0)],
        "compatible-from-invertible" => vec![alg_doc(compatible_from_invertible(&o_operator(p)?)?)],
        "prepoisson-from-cocycle" => match p.input(0)? {
            Document::Cocycle(c) => {
                let (a, w) = c.to_cocycle()?;
                vec![alg_doc(prepoisson_from_cocycle(&a, &w, p.variant()?)?)]
            }
            other => {
                return Err(Error::parse("document", format!("expected a cocycle document, found {:?}", other.tag())))
            }
        },
        "induced-permutative" => vec![alg_doc(induced_permutative(&average_operator(p)?)?)],
        "induced-leibniz" => vec![alg_doc(induced_leibniz(&average_operator(p)?)?)],
        "induced-dual-prepoisson" => vec![alg_doc(induced_dual_prepoisson(&average_operator(p)?)?)],
        "semiclassical-limit" => {
            let d = expect_deformation(p.input(0)?)?.to_deformation()?;
            vec![alg_doc(semiclassical_limit(&d)?)]
        }
        "subadjacent-gerstenhaber" => vec![alg_doc(subadjacent_gerstenhaber(&expect_algebra(p.input(0)?)?.to_graded()?)?)],
        other => return Err(Error::Invalid(format!("unknown construction {other:?}; expected one of {}", CONSTRUCTIONS.join(", ")))),
    })
}

/// `construct`: builds, verifies every output, then returns them. Nothing is
/// emitted unless every output passes its own checker.
pub fn run_construct(p: &Params) -> Result<JobOutput> {
    let name = p.required_string("construction")?;
    let docs = build(&name, p)?.iter().map(verify_document).collect::<Result<Vec<_>>>()?;
    let kinds: Vec<String> = docs
        .iter()
        .map(|d| match d {
            Document::Algebra(a) => a.kind.clone(),
            other => other.tag().to_string(),
        })
        .collect();
    Ok(JobOutput::produced(format!("construct {name}: {} (verified)\n", kinds.join(", ")), docs))
}

/// `search`: O-operators with coordinates in `[-bound, bound]`, each
/// re-verified before emission.
pub fn run_search(p: &Params) -> Result<JobOutput> {
    let bound = p.count("bound")?.unwrap_or(1);
    let bound = u32::try_from(bound).map_err(|_| Error::parse("parameters.bound", "bound too large"))?;
    let rep = expect_rep(p.input(0)?)?;
    let found = search_o_operators(&rep, bound, &p.options()?)?;
    let docs = found
        .iter()
        .map(|op| verify_document(&Document::OOperator(OOperatorDocument::from_op(op, Metadata::default()))))
        .collect::<Result<Vec<_>>>()?;
    let mut text = format!("search bound {bound}: {} O-operator(s)\n", docs.len());
    for op in &found {
        let rows: Vec<String> = op
            .matrix()
            .to_rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(format_scalar).collect::<Vec<_>>().join(", ")))
            .collect();
        text.push_str(&format!("  T = [{}]\n", rows.join(", ")));
    }
    Ok(JobOutput::produced(text, docs))
}

/// `deform-check`: checks a deformation, optionally truncated to `order`.
pub fn run_deform_check(p: &Params) -> Result<JobOutput> {
    let mut d = expect_deformation(p.input(0)?)?.to_deformation()?;
    if let Some(order) = p.count("order")? {
        d = d.truncate(order as usize)?;
    }
    let report = check_deformation(&d, &p.options()?)?;
    Ok(JobOutput::checked(format!("deform-check order {}", d.order()), report))
}

/// Dispatches on `job.command`. Input paths are resolved against `base`.
pub fn run_job(job: &JobDocument, base: &Path) -> Result<JobOutput> {
    let p = Params::new(job, base);
    let construct_as = |name: &str| {
        let mut j = job.clone();
        j.parameters.insert("construction".into(), Value::String(name.into()));
        run_construct(&Params::new(&j, base))
    };
    match job.command.as_str() {
        "check" => run_check(&p),
        "construct" => run_construct(&p),
        "search" => run_search(&p),
        "deform-check" => run_deform_check(&p),
        "dualize" => construct_as("dual-representation"),
        "twist" => construct_as("yau-twist"),
        "untwist" => construct_as("untwist"),
        "limit" => construct_as("semiclassical-limit"),
        other => Err(Error::Invalid(format!("unknown command {other:?}"))),
    }
}

/// Every built-in fixture as a named document, including the cocycle,
/// deformation, representation and operator fixtures.
pub fn gallery_documents() -> Vec<(String, Document)> {
    use crate::fixtures::{self, GalleryItem};
    use crate::operators::{AverageOperator, TwoCocycle};
    let mut out: Vec<(String, Document)> = fixtures::gallery()
        .into_iter()
        .map(|(name, item)| {
            let value: AlgebraValue = match item {
                GalleryItem::Single(a) => a.into(),
                GalleryItem::Pair(a) => a.into(),
            };
            (name.to_string(), Document::Algebra(AlgebraDocument::from_value(&value, Metadata::named(name))))
        })
        .collect();
    for (name, g) in fixtures::graded_gallery() {
        out.push((name.into(), Document::Algebra(AlgebraDocument::from_value(&g.into(), Metadata::named(name)))));
    }
    out.push(("D1".into(), Document::Deformation(DeformationDocument::from_deformation(&fixtures::d1(), Metadata::named("D1")))));
    for (name, a, w) in [("W1", fixtures::w1_algebra(), fixtures::w1()), ("W2", fixtures::w2_algebra(), fixtures::w2())] {
        let w = TwoCocycle::new(w).expect("skew");
        out.push((format!("{name}-cocycle"), Document::Cocycle(CocycleDocument::from_cocycle(&a, &w, Metadata::named(name)))));
    }
    let f1p = regular_poisson_representation(&fixtures::f1_poisson()).expect("F1 Poisson");
    let shift = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
    let op = crate::operators::OOperator::new(f1p.clone(), shift).expect("shift intertwines");
    out.push(("F1P-regular".into(), Document::Representation(RepresentationDocument::from_rep(&f1p.into(), Metadata::named("F1P-regular")))));
    out.push(("F1P-shift".into(), Document::OOperator(OOperatorDocument::from_op(&op, Metadata::named("F1P-shift")))));
    let avg = AverageOperator::new(fixtures::f1_poisson(), Matrix::diag_i64(&[1, 0])).expect("commutes");
    out.push((
        "F1P-average".into(),
        Document::AverageOperator(AverageOperatorDocument::from_op(&avg, Metadata::named("F1P-average"))),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::io::write_document;

    fn write(dir: &Path, name: &str, doc: Document) -> String {
        write_document(&dir.join(name), &doc).unwrap();
        name.to_string()
    }

    #[test]
    fn check_jobs() {
        let dir = tempfile::tempdir().unwrap();
        let p1 = write(dir.path(), "p1.json", alg_doc(crate::fixtures::p1()));
        let f7 = write(dir.path(), "f7.json", alg_doc(f7()));
        let f1 = write(dir.path(), "f1.json", alg_doc(f1()));

        let out = run_job(&JobDocument::new("check", vec![p1]), dir.path()).unwrap();
        assert_eq!(out.exit, ExitClass::Pass);

        let out = run_job(&JobDocument::new("check", vec![f7]), dir.path()).unwrap();
        assert_eq!(out.exit, ExitClass::MathFailure);
        assert!(out.text.contains("Eq. (16) violated at (e2,e1,e1)"), "{}", out.text);

        let job = JobDocument::new("check", vec![f1.clone()]).with("as", "hom-zinbiel");
        assert_eq!(run_job(&job, dir.path()).unwrap_err().exit_class(), ExitClass::Invalid);
        let out = run_job(&job.with("force", true), dir.path()).unwrap();
        assert_eq!(out.exit, ExitClass::MathFailure);
        assert!(out.text.contains("Eq. (12) violated at (e1,e1,e1)"), "{}", out.text);
    }

    #[test]
    fn construct_jobs() {
        let dir = tempfile::tempdir().unwrap();
        let p1_file = write(dir.path(), "p1.json", alg_doc(p1()));
        let job = JobDocument::new("construct", vec![p1_file.clone()]).with("construction", "subadjacent-poisson");
        let out = run_job(&job, dir.path()).unwrap();
        assert_eq!(out.documents, vec![alg_doc(f6())]);

        let tw = JobDocument::new("twist", vec![p1_file]).with("matrix", json!([[2, 0], [0, 4]]));
        let twisted = run_job(&tw, dir.path()).unwrap().documents.remove(0);
        let t = write(dir.path(), "t.json", twisted);
        let back = run_job(&JobDocument::new("untwist", vec![t]), dir.path()).unwrap().documents.remove(0);
        assert_eq!(serialize_document(&back).unwrap(), serialize_document(&alg_doc(p1())).unwrap());

        let p3 = write(dir.path(), "p3.json", alg_doc(p3()));
        let job = JobDocument::new("construct", vec![p3]).with("construction", "subadjacent-poisson");
        assert_eq!(run_job(&job, dir.path()).unwrap_err().exit_class(), ExitClass::MathFailure);
    }

    #[test]
    fn fail_closed_write() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.json");
        let err = write_verified(&path, &alg_doc(p3())).unwrap_err();
        assert!(matches!(err, Error::Precondition { .. }));
        assert!(!path.exists());
        write_verified(&path, &alg_doc(p1())).unwrap();
        assert!(path.exists());
    }

    #[test]
    fn gallery_documents_round_trip() {
        for (name, doc) in gallery_documents() {
            let text = serialize_document(&doc).unwrap();
            assert_eq!(parse_document(text.as_bytes()).unwrap(), doc, "{name}");
        }
    }
}
