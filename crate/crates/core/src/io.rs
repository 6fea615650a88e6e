//! JSON documents for algebras, representations, operators, cocycles,
//! deformations and jobs.
//!
//! Every top-level document carries a `"document"` tag. Rationals are
//! strings (`"p"` or `"p/q"`), tensors are dense nested arrays indexed
//! `[i][j][k]` for the coefficient of `e_k` in `e_i ∘ e_j`, and matrices are
//! row-major. Canonical output sorts object keys and reduces every rational.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{AnyAlgebra, HomAlgebra, HomPairAlgebra, Kind, PairKind};
use crate::deformations::{TruncatedDeformation, ZeroOrderConvention};
use crate::error::{Error, Result};
use crate::graded::{GradedAlgebra, GradedBasis, GradedKind};
use crate::linalg::{format_scalar, parse_scalar, Matrix, Scalar, Tensor3};
use crate::operators::{AnyRepresentation, AverageOperator, OOperator, TwoCocycle};
use crate::representations::{ActionMap, PoissonRepresentation, Representation};

pub const FORMAT_VERSION: &str = "1";

pub type MatrixText = Vec<Vec<String>>;
pub type TensorText = Vec<Vec<Vec<String>>>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

impl Metadata {
    pub fn named(name: impl Into<String>) -> Self {
        Metadata { name: Some(name.into()), notes: None }
    }

    fn is_empty(&self) -> bool {
        self.name.is_none() && self.notes.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub format_version: String,
    pub kind: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<i64>>,
    pub twist: MatrixText,
    pub products: BTreeMap<String, TensorText>,
    #[serde(default, skip_serializing_if = "Metadata::is_empty")]
    pub metadata: Metadata,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationDocument {
    pub format_version: String,
    pub algebra: AlgebraDocument,
    pub carrier_dim: usize,
    pub beta: MatrixText,
    /// `"action"` for one product, `"rho"` and `"mu"` for Poisson
    /// representations; one matrix per algebra basis element.
    pub actions: BTreeMap<String, Vec<MatrixText>>,
    #[serde(default, skip_serializing_if = "Metadata::is_empty")]
    pub metadata: Metadata,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OOperatorDocument {
    pub format_version: String,
    pub representation: RepresentationDocument,
    pub operator: MatrixText,
    #[serde(default, skip_serializing_if = "Metadata::is_empty")]
    pub metadata: Metadata,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AverageOperatorDocument {
    pub format_version: String,
    pub algebra: AlgebraDocument,
    pub operator: MatrixText,
    #[serde(default, skip_serializing_if = "Metadata::is_empty")]
    pub metadata: Metadata,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleDocument {
    pub format_version: String,
    pub algebra: AlgebraDocument,
    pub omega: MatrixText,
    #[serde(default, skip_serializing_if = "Metadata::is_empty")]
    pub metadata: Metadata,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationDocument {
    pub format_version: String,
    pub base: AlgebraDocument,
    pub order: usize,
    pub convention: String,
    pub prec: Vec<TensorText>,
    pub succ: Vec<TensorText>,
    #[serde(default, skip_serializing_if = "Metadata::is_empty")]
    pub metadata: Metadata,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobDocument {
    pub format_version: String,
    pub command: String,
    #[serde(default)]
    pub inputs: Vec<String>,
    #[serde(default)]
    pub parameters: BTreeMap<String, serde_json::Value>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "document", rename_all = "kebab-case")]
pub enum Document {
    Algebra(AlgebraDocument),
    Representation(RepresentationDocument),
    OOperator(OOperatorDocument),
    AverageOperator(AverageOperatorDocument),
    Cocycle(CocycleDocument),
    Deformation(DeformationDocument),
    Job(JobDocument),
}

impl Document {
    pub fn tag(&self) -> &'static str {
        match self {
            Document::Algebra(_) => "algebra",
            Document::Representation(_) => "representation",
            Document::OOperator(_) => "o-operator",
            Document::AverageOperator(_) => "average-operator",
            Document::Cocycle(_) => "cocycle",
            Document::Deformation(_) => "deformation",
            Document::Job(_) => "job",
        }
    }

    /// Re-derives the document from its validated object, reducing every
    /// rational. Jobs are returned unchanged.
    pub fn canonicalize(&self) -> Result<Document> {
        Ok(match self {
            Document::Algebra(d) => Document::Algebra(AlgebraDocument::from_value(&d.to_value()?, d.metadata.clone())),
            Document::Representation(d) => {
                Document::Representation(RepresentationDocument::from_rep(&d.to_rep()?, d.metadata.clone()))
            }
            Document::OOperator(d) => Document::OOperator(OOperatorDocument::from_op(&d.to_op()?, d.metadata.clone())),
            Document::AverageOperator(d) => {
                Document::AverageOperator(AverageOperatorDocument::from_op(&d.to_op()?, d.metadata.clone()))
            }
            Document::Cocycle(d) => {
                let (a, w) = d.to_cocycle()?;
                Document::Cocycle(CocycleDocument::from_cocycle(&a, &w, d.metadata.clone()))
            }
            Document::Deformation(d) => {
                Document::Deformation(DeformationDocument::from_deformation(&d.to_deformation()?, d.metadata.clone()))
            }
            Document::Job(j) => Document::Job(j.clone()),
        })
    }
}

/// An algebra read from a document: ungraded or graded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraValue {
    Plain(AnyAlgebra),
    Graded(GradedAlgebra),
}

impl AlgebraValue {
    pub fn plain(&self) -> Result<&AnyAlgebra> {
        match self {
            AlgebraValue::Plain(a) => Ok(a),
            AlgebraValue::Graded(g) => {
                Err(Error::WrongKind { expected: "ungraded algebra".into(), found: g.kind().tag().into() })
            }
        }
    }

    pub fn kind_tag(&self) -> &'static str {
        match self {
            AlgebraValue::Plain(a) => a.kind_tag(),
            AlgebraValue::Graded(g) => g.kind().tag(),
        }
    }
}

impl From<AnyAlgebra> for AlgebraValue {
    fn from(a: AnyAlgebra) -> Self {
        AlgebraValue::Plain(a)
    }
}

impl From<HomAlgebra> for AlgebraValue {
    fn from(a: HomAlgebra) -> Self {
        AlgebraValue::Plain(a.into())
    }
}

impl From<HomPairAlgebra> for AlgebraValue {
    fn from(a: HomPairAlgebra) -> Self {
        AlgebraValue::Plain(a.into())
    }
}

impl From<GradedAlgebra> for AlgebraValue {
    fn from(g: GradedAlgebra) -> Self {
        AlgebraValue::Graded(g)
    }
}

fn matrix_text(m: &Matrix) -> MatrixText {
    m.to_rows().iter().map(|r| r.iter().map(format_scalar).collect()).collect()
}

fn tensor_text(t: &Tensor3) -> TensorText {
    t.to_nested().iter().map(|p| p.iter().map(|r| r.iter().map(format_scalar).collect()).collect()).collect()
}

fn scalar(context: &str, s: &str) -> Result<Scalar> {
    parse_scalar(s).map_err(|m| Error::parse(context, m))
}

fn shape(context: &str, want: usize, got: usize) -> Result<()> {
    if want == got {
        Ok(())
    } else {
        Err(Error::parse(context, format!("shape mismatch: expected length {want}, found {got}")))
    }
}

fn parse_matrix(context: &str, rows: usize, cols: usize, m: &MatrixText) -> Result<Matrix> {
    shape(context, rows, m.len())?;
    let mut out = Matrix::zeros(rows, cols);
    for (r, row) in m.iter().enumerate() {
        shape(&format!("{context}[{r}]"), cols, row.len())?;
        for (c, s) in row.iter().enumerate() {
            out.set(r, c, scalar(&format!("{context}[{r}][{c}]"), s)?);
        }
    }
    Ok(out)
}

fn parse_tensor(context: &str, n: usize, t: &TensorText) -> Result<Tensor3> {
    shape(context, n, t.len())?;
    let mut out = Tensor3::zeros(n);
    for (i, plane) in t.iter().enumerate() {
        shape(&format!("{context}[{i}]"), n, plane.len())?;
        for (j, row) in plane.iter().enumerate() {
            shape(&format!("{context}[{i}][{j}]"), n, row.len())?;
            for (k, s) in row.iter().enumerate() {
                out.set(i, j, k, scalar(&format!("{context}[{i}][{j}][{k}]"), s)?);
            }
        }
    }
    Ok(out)
}

fn check_version(context: &str, v: &str) -> Result<()> {
    if v == FORMAT_VERSION {
        Ok(())
    } else {
        Err(Error::parse(format!("{context}.format_version"), format!("unsupported format version {v:?}")))
    }
}

impl AlgebraDocument {
    pub fn from_value(a: &AlgebraValue, metadata: Metadata) -> Self {
        let (kind, dim, degrees, twist, products): (_, _, _, _, Vec<(&str, &Tensor3)>) = match a {
            AlgebraValue::Plain(p) => (p.kind_tag(), p.dim(), None, p.twist(), p.products()),
            AlgebraValue::Graded(g) => {
                let (n0, n1) = g.kind().product_names();
                (
                    g.kind().tag(),
                    g.dim(),
                    Some(g.basis().degrees.clone()),
                    g.twist(),
                    vec![(n0, g.product0()), (n1, g.product_m1())],
                )
            }
        };
        AlgebraDocument {
            format_version: FORMAT_VERSION.into(),
            kind: kind.into(),
            dim,
            degrees,
            twist: matrix_text(twist),
            products: products.into_iter().map(|(n, t)| (n.to_string(), tensor_text(t))).collect(),
            metadata,
        }
    }

    pub fn new(a: impl Into<AlgebraValue>) -> Self {
        Self::from_value(&a.into(), Metadata::default())
    }

    fn product(&self, name: &str) -> Result<Tensor3> {
        let t = self
            .products
            .get(name)
            .ok_or_else(|| Error::parse("products", format!("missing product {name:?} for kind {}", self.kind)))?;
        parse_tensor(&format!("products.{name}"), self.dim, t)
    }

    fn expect_products(&self, names: &[&str]) -> Result<()> {
        if let Some(extra) = self.products.keys().find(|k| !names.contains(&k.as_str())) {
            return Err(Error::parse("products", format!("unexpected product {extra:?} for kind {}", self.kind)));
        }
        Ok(())
    }

    /// Validates shapes, rationals, kind and twist multiplicativity.
    pub fn to_value(&self) -> Result<AlgebraValue> {
        check_version("algebra", &self.format_version)?;
        let twist = parse_matrix("twist", self.dim, self.dim, &self.twist)?;
        if let Some(degrees) = &self.degrees {
            shape("degrees", self.dim, degrees.len())?;
            let kind: GradedKind = self.kind.parse().map_err(|_| Error::parse("kind", format!("unknown kind {:?}", self.kind)))?;
            let (n0, n1) = kind.product_names();
            self.expect_products(&[n0, n1])?;
            return Ok(GradedAlgebra::new(
                kind,
                GradedBasis::new(degrees.clone()),
                self.product(n0)?,
                self.product(n1)?,
                twist,
            )?
            .into());
        }
        if let Ok(kind) = self.kind.parse::<Kind>() {
            self.expect_products(&[kind.product_name()])?;
            return Ok(HomAlgebra::new(kind, self.product(kind.product_name())?, twist)?.into());
        }
        if let Ok(kind) = self.kind.parse::<PairKind>() {
            let (n0, n1) = kind.product_names();
            self.expect_products(&[n0, n1])?;
            return Ok(HomPairAlgebra::new(kind, self.product(n0)?, self.product(n1)?, twist)?.into());
        }
        if self.kind.parse::<GradedKind>().is_ok() {
            return Err(Error::parse("degrees", format!("kind {} needs a degrees array", self.kind)));
        }
        Err(Error::parse("kind", format!("unknown kind {:?}", self.kind)))
    }

    pub fn to_any(&self) -> Result<AnyAlgebra> {
        self.to_value()?.plain().cloned()
    }

    pub fn to_graded(&self) -> Result<GradedAlgebra> {
        match self.to_value()? {
            AlgebraValue::Graded(g) => Ok(g),
            AlgebraValue::Plain(a) => {
                Err(Error::WrongKind { expected: "graded algebra".into(), found: a.kind_tag().into() })
            }
        }
    }

    pub fn to_pair(&self) -> Result<HomPairAlgebra> {
        match self.to_any()? {
            AnyAlgebra::Pair(p) => Ok(p),
            AnyAlgebra::Single(a) => {
                Err(Error::WrongKind { expected: "two-product algebra".into(), found: a.kind().tag().into() })
            }
        }
    }

    pub fn to_single(&self) -> Result<HomAlgebra> {
        match self.to_any()? {
            AnyAlgebra::Single(a) => Ok(a),
            AnyAlgebra::Pair(p) => {
                Err(Error::WrongKind { expected: "single-product algebra".into(), found: p.kind().tag().into() })
            }
        }
    }
}

fn action_text(a: &ActionMap) -> Vec<MatrixText> {
    a.ops().iter().map(matrix_text).collect()
}

fn parse_action(context: &str, n: usize, m: usize, ops: &[MatrixText]) -> Result<ActionMap> {
    shape(context, n, ops.len())?;
    let ops = ops
        .iter()
        .enumerate()
        .map(|(k, op)| parse_matrix(&format!("{context}[{k}]"), m, m, op))
        .collect::<Result<Vec<_>>>()?;
    ActionMap::new(m, ops)
}

impl RepresentationDocument {
    pub fn from_rep(rep: &AnyRepresentation, metadata: Metadata) -> Self {
        let (algebra, beta, actions): (AlgebraValue, _, Vec<(&str, &ActionMap)>) = match rep {
            AnyRepresentation::Single(r) => (r.algebra().clone().into(), r.beta(), vec![("action", r.action())]),
            AnyRepresentation::Poisson(r) => {
                (r.algebra().clone().into(), r.beta(), vec![("rho", r.rho()), ("mu", r.mu())])
            }
        };
        RepresentationDocument {
            format_version: FORMAT_VERSION.into(),
            algebra: AlgebraDocument::from_value(&algebra, Metadata::default()),
            carrier_dim: rep.carrier_dim(),
            beta: matrix_text(beta),
            actions: actions.into_iter().map(|(n, a)| (n.to_string(), action_text(a))).collect(),
            metadata,
        }
    }

    pub fn new(rep: impl Into<AnyRepresentation>) -> Self {
        Self::from_rep(&rep.into(), Metadata::default())
    }

    pub fn to_rep(&self) -> Result<AnyRepresentation> {
        check_version("representation", &self.format_version)?;
        let m = self.carrier_dim;
        let beta = parse_matrix("beta", m, m, &self.beta)?;
        let alg = self.algebra.to_any()?;
        let n = alg.dim();
        let names: Vec<&str> = self.actions.keys().map(String::as_str).collect();
        match alg {
            AnyAlgebra::Single(a) => {
                if names != ["action"] {
                    return Err(Error::parse("actions", "expected exactly the key \"action\""));
                }
                let act = parse_action("actions.action", n, m, &self.actions["action"])?;
                Ok(Representation::new(a, beta, act)?.into())
            }
            AnyAlgebra::Pair(a) => {
                if names != ["mu", "rho"] {
                    return Err(Error::parse("actions", "expected exactly the keys \"rho\" and \"mu\""));
                }
                let rho = parse_action("actions.rho", n, m, &self.actions["rho"])?;
                let mu = parse_action("actions.mu", n, m, &self.actions["mu"])?;
                Ok(PoissonRepresentation::new(a, beta, rho, mu)?.into())
            }
        }
    }
}

impl OOperatorDocument {
    pub fn from_op(op: &OOperator, metadata: Metadata) -> Self {
        OOperatorDocument {
            format_version: FORMAT_VERSION.into(),
            representation: RepresentationDocument::from_rep(op.rep(), Metadata::default()),
            operator: matrix_text(op.matrix()),
            metadata,
        }
    }

    pub fn to_op(&self) -> Result<OOperator> {
        check_version("o-operator", &self.format_version)?;
        let rep = self.representation.to_rep()?;
        let t = parse_matrix("operator", rep.algebra_dim(), rep.carrier_dim(), &self.operator)?;
        OOperator::new(rep, t)
    }
}

impl AverageOperatorDocument {
    pub fn from_op(op: &AverageOperator, metadata: Metadata) -> Self {
        AverageOperatorDocument {
            format_version: FORMAT_VERSION.into(),
            algebra: AlgebraDocument::from_value(&op.algebra().clone().into(), Metadata::default()),
            operator: matrix_text(op.matrix()),
            metadata,
        }
    }

    pub fn to_op(&self) -> Result<AverageOperator> {
        check_version("average-operator", &self.format_version)?;
        let a = self.algebra.to_any()?;
        let s = parse_matrix("operator", a.dim(), a.dim(), &self.operator)?;
        AverageOperator::new(a, s)
    }
}

impl CocycleDocument {
    pub fn from_cocycle(a: &HomPairAlgebra, w: &TwoCocycle, metadata: Metadata) -> Self {
        CocycleDocument {
            format_version: FORMAT_VERSION.into(),
            algebra: AlgebraDocument::new(a.clone()),
            omega: matrix_text(w.matrix()),
            metadata,
        }
    }

    pub fn to_cocycle(&self) -> Result<(HomPairAlgebra, TwoCocycle)> {
        check_version("cocycle", &self.format_version)?;
        let a = self.algebra.to_pair()?;
        let w = parse_matrix("omega", a.dim(), a.dim(), &self.omega)?;
        Ok((a, TwoCocycle::new(w)?))
    }
}

impl DeformationDocument {
    pub fn from_deformation(d: &TruncatedDeformation, metadata: Metadata) -> Self {
        DeformationDocument {
            format_version: FORMAT_VERSION.into(),
            base: AlgebraDocument::new(d.base().clone()),
            order: d.order(),
            convention: d.convention().tag().into(),
            prec: d.prec_terms().iter().map(tensor_text).collect(),
            succ: d.succ_terms().iter().map(tensor_text).collect(),
            metadata,
        }
    }

    pub fn to_deformation(&self) -> Result<TruncatedDeformation> {
        check_version("deformation", &self.format_version)?;
        let base = self.base.to_single()?;
        let n = base.dim();
        shape("prec", self.order, self.prec.len())?;
        shape("succ", self.order, self.succ.len())?;
        let conv: ZeroOrderConvention = self.convention.parse().map_err(|e: Error| Error::parse("convention", e.to_string()))?;
        let read = |name: &str, ts: &[TensorText]| {
            ts.iter()
                .enumerate()
                .map(|(i, t)| parse_tensor(&format!("{name}[{i}]"), n, t))
                .collect::<Result<Vec<_>>>()
        };
        TruncatedDeformation::with_convention(base, read("prec", &self.prec)?, read("succ", &self.succ)?, conv)
    }
}

impl JobDocument {
    pub fn new(command: impl Into<String>, inputs: Vec<String>) -> Self {
        JobDocument { format_version: FORMAT_VERSION.into(), command: command.into(), inputs, parameters: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.parameters.insert(key.into(), value.into());
        self
    }
}

/// Parses and validates a document. Validation of the mathematical payload
/// (shapes, rationals, multiplicativity) happens here.
pub fn parse_document(bytes: &[u8]) -> Result<Document> {
    let doc: Document = serde_json::from_slice(bytes).map_err(|e| Error::parse(format!("line {}", e.line()), e.to_string()))?;
    match &doc {
        Document::Job(j) => check_version("job", &j.format_version)?,
        other => {
            other.canonicalize()?;
        }
    }
    Ok(doc)
}

/// Parses a document that must be an algebra.
pub fn parse_algebra(bytes: &[u8]) -> Result<AlgebraDocument> {
    match parse_document(bytes)? {
        Document::Algebra(a) => Ok(a),
        other => Err(Error::parse("document", format!("expected an algebra document, found {:?}", other.tag()))),
    }
}

/// Canonical bytes: sorted keys, two-space indentation, trailing newline.
pub fn serialize_document(doc: &Document) -> Result<String> {
    let value = serde_json::to_value(doc).map_err(|e| Error::parse("serialize", e.to_string()))?;
    let mut s = serde_json::to_string_pretty(&value).map_err(|e| Error::parse("serialize", e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Parse, canonicalize, serialize.
pub fn canonicalize_bytes(bytes: &[u8]) -> Result<String> {
    serialize_document(&parse_document(bytes)?.canonicalize()?)
}

pub fn read_document(path: &Path) -> Result<Document> {
    let bytes = std::fs::read(path)?;
    parse_document(&bytes).map_err(|e| match e {
        Error::Parse { context, message } => Error::Parse { context: format!("{}: {context}", path.display()), message },
        other => other,
    })
}

pub fn write_document(path: &Path, doc: &Document) -> Result<()> {
    std::fs::write(path, serialize_document(doc)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn round_trip(doc: Document) {
        let text = serialize_document(&doc).unwrap();
        let back = parse_document(text.as_bytes()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(serialize_document(&back).unwrap(), text);
    }

    #[test]
    fn algebra_round_trips() {
        round_trip(Document::Algebra(AlgebraDocument::new(f1())));
        round_trip(Document::Algebra(AlgebraDocument::new(p1_alpha())));
        round_trip(Document::Algebra(AlgebraDocument::new(g2())));
    }

    #[test]
    fn keys_are_sorted_and_rationals_reduced() {
        let mut doc = AlgebraDocument::new(f2());
        doc.twist[0][0] = "2/2".into();
        let text = canonicalize_bytes(serialize_document(&Document::Algebra(doc)).unwrap().as_bytes()).unwrap();
        assert!(!text.contains("2/2"));
        let keys: Vec<usize> = ["\"dim\"", "\"document\"", "\"format_version\"", "\"kind\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn malformed_rational() {
        let mut doc = AlgebraDocument::new(f1());
        doc.products.get_mut("dot").unwrap()[0][0][0] = "1/0".into();
        let text = serialize_document(&Document::Algebra(doc)).unwrap();
        let err = parse_algebra(text.as_bytes()).unwrap_err();
        assert!(err.to_string().contains("malformed rational"), "{err}");
        assert!(err.to_string().contains("products.dot[0][0][0]"), "{err}");
    }

    #[test]
    fn non_multiplicative_twist() {
        let mut doc = AlgebraDocument::new(f2());
        doc.twist = vec![vec!["1".into(), "0".into()], vec!["0".into(), "2".into()]];
        let text = serialize_document(&Document::Algebra(doc)).unwrap();
        let err = parse_algebra(text.as_bytes()).unwrap_err();
        assert!(matches!(err, Error::NotMultiplicative { pair: (0, 0), .. }));
        assert!(err.to_string().contains("at (1, 1)"));
    }

    #[test]
    fn shape_and_kind_errors() {
        let mut doc = AlgebraDocument::new(f1());
        doc.dim = 3;
        let text = serialize_document(&Document::Algebra(doc)).unwrap();
        assert!(parse_algebra(text.as_bytes()).unwrap_err().to_string().contains("shape mismatch"));
        let mut doc = AlgebraDocument::new(f1());
        doc.kind = "hom-nonsense".into();
        let text = serialize_document(&Document::Algebra(doc)).unwrap();
        assert!(parse_algebra(text.as_bytes()).unwrap_err().to_string().contains("unknown kind"));
    }

    #[test]
    fn deformation_and_cocycle_round_trip() {
        round_trip(Document::Deformation(DeformationDocument::from_deformation(&d1(), Metadata::named("D1"))));
        round_trip(Document::Cocycle(CocycleDocument::from_cocycle(
            &w2_algebra(),
            &TwoCocycle::new(w2()).unwrap(),
            Metadata::default(),
        )));
        round_trip(Document::Job(JobDocument::new("check", vec!["a.json".into()]).with("force", true)));
    }
}
