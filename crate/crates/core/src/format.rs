//! The JSON algebra file format.
//!
//! ```json
//! {
//!   "kind": "rrl-groupoid",
//!   "elements": ["0", "1"],
//!   "leq": [["0", "1"]],
//!   "ops": {
//!     "odot": [["0", "0"], ["0", "1"]],
//!     "arrow": [["1", "1"], ["0", "1"]]
//!   },
//!   "constants": {"bottom": "0", "top": "1"}
//! }
//! ```
//!
//! Binary tables are row-major with the row indexed by the left argument.
//! `leq` may be any generating set of pairs; emitted files list covers.

use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::basic::{BasicAlgebra, BasicError, ImplicationReduct};
use crate::lattice::{FiniteLattice, Involution, InvolutionError, LatticeError};
use crate::logics::{self, KleeneAlgebra, LogicError, NelsonAlgebra};
use crate::ops::{BinaryOp, Elem};
use crate::residuation::{ResiduationError, RrlGroupoid};
use crate::sections::{FamilyMode, SectionError, SectionFamily, SectionedLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FileKind {
    Lattice,
    SectionedLattice,
    RrlGroupoid,
    BasicAlgebra,
    ImplicationReduct,
    Kleene,
    Nelson,
}

impl FileKind {
    pub const ALL: [FileKind; 7] = [
        FileKind::Lattice,
        FileKind::SectionedLattice,
        FileKind::RrlGroupoid,
        FileKind::BasicAlgebra,
        FileKind::ImplicationReduct,
        FileKind::Kleene,
        FileKind::Nelson,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FileKind::Lattice => "lattice",
            FileKind::SectionedLattice => "sectioned-lattice",
            FileKind::RrlGroupoid => "rrl-groupoid",
            FileKind::BasicAlgebra => "basic-algebra",
            FileKind::ImplicationReduct => "implication-reduct",
            FileKind::Kleene => "kleene",
            FileKind::Nelson => "nelson",
        }
    }
}

impl fmt::Display for FileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FileKind {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| FormatError::UnknownKind(s.to_string()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown kind `{0}`")]
    UnknownKind(String),
    #[error("kind {kind} requires {what}")]
    Missing { kind: FileKind, what: &'static str },
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("table `{0}` has the wrong shape")]
    BadShape(&'static str),
    #[error("{0}")]
    Mismatch(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Involution(#[from] InvolutionError),
    #[error(transparent)]
    Section(#[from] SectionError),
    #[error(transparent)]
    Residuation(#[from] ResiduationError),
    #[error(transparent)]
    Basic(#[from] BasicError),
    #[error(transparent)]
    Logic(#[from] LogicError),
}

impl FormatError {
    /// Whether the input was well formed but the structure failed validation.
    pub fn is_validation(&self) -> bool {
        !matches!(
            self,
            FormatError::Parse(_)
                | FormatError::UnknownKind(_)
                | FormatError::Missing { .. }
                | FormatError::UnknownElement(_)
                | FormatError::BadShape(_)
        )
    }
}

type Table = Vec<Vec<String>>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Ops {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub odot: Option<Table>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arrow: Option<Table>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oplus: Option<Table>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub imp: Option<Table>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neg: Option<Vec<String>>,
    /// Base element ↦ (element of the section ↦ image).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sections: Option<IndexMap<String, IndexMap<String, String>>>,
}

/// Where a transformed structure came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub source_kind: String,
    pub source_sha256: String,
    pub steps: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub kind: String,
    pub elements: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub leq: Vec<(String, String)>,
    #[serde(default)]
    pub ops: Ops,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub constants: IndexMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

/// Any structure the workbench reads or writes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Lattice(FiniteLattice, Option<Involution>),
    Sectioned(SectionedLattice),
    Groupoid(RrlGroupoid),
    Basic(BasicAlgebra),
    Reduct(ImplicationReduct),
    Kleene(KleeneAlgebra),
    Nelson(NelsonAlgebra),
}

impl Structure {
    pub fn kind(&self) -> FileKind {
        match self {
            Structure::Lattice(..) => FileKind::Lattice,
            Structure::Sectioned(_) => FileKind::SectionedLattice,
            Structure::Groupoid(_) => FileKind::RrlGroupoid,
            Structure::Basic(_) => FileKind::BasicAlgebra,
            Structure::Reduct(_) => FileKind::ImplicationReduct,
            Structure::Kleene(_) => FileKind::Kleene,
            Structure::Nelson(_) => FileKind::Nelson,
        }
    }

    pub fn names(&self) -> &[String] {
        match self {
            Structure::Lattice(l, _) => l.names(),
            Structure::Sectioned(s) => s.lattice.names(),
            Structure::Groupoid(g) => g.names(),
            Structure::Basic(a) => a.names(),
            Structure::Reduct(r) => r.names(),
            Structure::Kleene(k) => k.lattice.names(),
            Structure::Nelson(n) => n.lattice().names(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let file: AlgebraFile =
            serde_json::from_str(text).map_err(|e| FormatError::Parse(e.to_string()))?;
        Self::from_file(&file)
    }

    /// Reads a file, treating it as `kind` instead of its declared kind.
    pub fn parse_as(text: &str, kind: FileKind) -> Result<Self, FormatError> {
        let mut file: AlgebraFile =
            serde_json::from_str(text).map_err(|e| FormatError::Parse(e.to_string()))?;
        file.kind = kind.as_str().to_string();
        Self::from_file(&file)
    }

    pub fn from_file(file: &AlgebraFile) -> Result<Self, FormatError> {
        let kind: FileKind = file.kind.parse()?;
        let r = Reader::new(file)?;
        let missing = |what| FormatError::Missing { kind, what };
        Ok(match kind {
            FileKind::Lattice => {
                let l = r.lattice()?;
                let tilde = r.neg_involution(&l)?;
                Structure::Lattice(l, tilde)
            }
            FileKind::SectionedLattice => {
                let l = r.lattice()?;
                let tilde = r.neg_involution(&l)?;
                let family = r.sections(&l)?.ok_or_else(|| missing("`sections`"))?;
                Structure::Sectioned(SectionedLattice::new(l, tilde, family))
            }
            FileKind::RrlGroupoid => {
                let l = r.lattice()?;
                let odot = r.binary("odot", &file.ops.odot)?;
                let arrow = r.binary("arrow", &file.ops.arrow)?;
                Structure::Groupoid(match (odot, arrow) {
                    (Some(o), Some(a)) => RrlGroupoid::new(l, o, a)?,
                    (Some(o), None) => RrlGroupoid::from_odot(l, o)?,
                    (None, Some(a)) => RrlGroupoid::from_arrow(l, a)?,
                    (None, None) => return Err(missing("`odot` or `arrow`")),
                })
            }
            FileKind::BasicAlgebra => {
                let oplus = r
                    .binary("oplus", &file.ops.oplus)?
                    .ok_or_else(|| missing("`oplus`"))?;
                let neg = r
                    .unary("neg", &file.ops.neg)?
                    .ok_or_else(|| missing("`neg`"))?;
                let zero = r
                    .constant("zero")?
                    .ok_or_else(|| missing("constant `zero`"))?;
                let a = BasicAlgebra::new(file.elements.clone(), oplus, neg, zero)?;
                r.check_order(a.lattice())?;
                Structure::Basic(a)
            }
            FileKind::ImplicationReduct => {
                let imp = r
                    .binary("imp", &file.ops.imp)?
                    .ok_or_else(|| missing("`imp`"))?;
                let zero = r
                    .constant("zero")?
                    .ok_or_else(|| missing("constant `zero`"))?;
                Structure::Reduct(ImplicationReduct::new(file.elements.clone(), imp, zero)?)
            }
            FileKind::Kleene => {
                let l = r.lattice()?;
                let tilde = r.neg_involution(&l)?.ok_or_else(|| missing("`neg`"))?;
                Structure::Kleene(logics::check_kleene(&l, &tilde)?)
            }
            FileKind::Nelson => {
                let l = r.lattice()?;
                let tilde = r.neg_involution(&l)?.ok_or_else(|| missing("`neg`"))?;
                let k = logics::check_kleene(&l, &tilde)?;
                Structure::Nelson(match r.binary("arrow", &file.ops.arrow)? {
                    Some(a) => NelsonAlgebra::with_arrow(k, &a)?,
                    None => logics::build_nelson(k)?,
                })
            }
        })
    }

    pub fn to_file(&self) -> AlgebraFile {
        let names = self.names();
        let w = Writer { names };
        let mut ops = Ops::default();
        let mut constants = IndexMap::new();
        let mut leq = Vec::new();
        let mut lattice_parts = |l: &FiniteLattice, constants: &mut IndexMap<String, String>| {
            leq = l
                .covers()
                .into_iter()
                .map(|(a, b)| (w.name(a), w.name(b)))
                .collect();
            constants.insert("bottom".into(), w.name(l.bottom()));
            constants.insert("top".into(), w.name(l.top()));
        };
        match self {
            Structure::Lattice(l, tilde) => {
                lattice_parts(l, &mut constants);
                ops.neg = tilde.as_ref().map(|t| w.unary(t.map()));
            }
            Structure::Sectioned(s) => {
                lattice_parts(&s.lattice, &mut constants);
                ops.neg = s.tilde.as_ref().map(|t| w.unary(t.map()));
                ops.sections = Some(w.sections(&s.lattice, &s.family));
            }
            Structure::Groupoid(g) => {
                lattice_parts(g.lattice(), &mut constants);
                ops.odot = Some(w.binary(g.odot_table()));
                ops.arrow = Some(w.binary(g.arrow_table()));
            }
            Structure::Basic(a) => {
                ops.oplus = Some(w.binary(a.oplus_table()));
                ops.neg = Some(w.unary(a.neg_table()));
                constants.insert("zero".into(), w.name(a.zero()));
            }
            Structure::Reduct(r) => {
                ops.imp = Some(w.binary(r.imp_table()));
                constants.insert("zero".into(), w.name(r.zero()));
            }
            Structure::Kleene(k) => {
                lattice_parts(&k.lattice, &mut constants);
                ops.neg = Some(w.unary(k.tilde.map()));
            }
            Structure::Nelson(n) => {
                lattice_parts(n.lattice(), &mut constants);
                ops.neg = Some(w.unary(n.kleene.tilde.map()));
                ops.arrow = Some(w.binary(n.arrow_table()));
            }
        }
        AlgebraFile {
            kind: self.kind().as_str().to_string(),
            elements: names.to_vec(),
            leq,
            ops,
            constants,
            provenance: None,
        }
    }

    pub fn to_json(&self) -> String {
        to_json(&self.to_file())
    }
}

struct Reader<'f> {
    file: &'f AlgebraFile,
}

impl<'f> Reader<'f> {
    fn new(file: &'f AlgebraFile) -> Result<Self, FormatError> {
        Ok(Self { file })
    }

    fn index(&self, name: &str) -> Result<Elem, FormatError> {
        self.file
            .elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| FormatError::UnknownElement(name.to_string()))
    }

    fn lattice(&self) -> Result<FiniteLattice, FormatError> {
        for (a, b) in &self.file.leq {
            self.index(a)?;
            self.index(b)?;
        }
        let l = FiniteLattice::build(
            self.file.elements.iter().map(String::as_str),
            &self.file.leq,
        )?;
        self.check_constants(&l)?;
        Ok(l)
    }

    fn check_constants(&self, l: &FiniteLattice) -> Result<(), FormatError> {
        for (key, expected) in [("bottom", l.bottom()), ("top", l.top())] {
            if let Some(v) = self.constant(key)? {
                if v != expected {
                    return Err(FormatError::Mismatch(format!(
                        "constant `{key}` is {} but the order gives {}",
                        l.name(v),
                        l.name(expected)
                    )));
                }
            }
        }
        Ok(())
    }

    /// For kinds whose order is derived: a given `leq` must agree.
    fn check_order(&self, derived: &FiniteLattice) -> Result<(), FormatError> {
        if self.file.leq.is_empty() {
            return self.check_constants(derived);
        }
        let l = self.lattice()?;
        if l.order_matrix() != derived.order_matrix() {
            return Err(FormatError::Mismatch(
                "`leq` disagrees with the derived order".into(),
            ));
        }
        Ok(())
    }

    fn constant(&self, key: &str) -> Result<Option<Elem>, FormatError> {
        self.file
            .constants
            .get(key)
            .map(|n| self.index(n))
            .transpose()
    }

    fn binary(
        &self,
        table: &'static str,
        rows: &Option<Table>,
    ) -> Result<Option<BinaryOp>, FormatError> {
        let Some(rows) = rows else { return Ok(None) };
        let n = self.file.elements.len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(FormatError::BadShape(table));
        }
        let cells = rows
            .iter()
            .flatten()
            .map(|c| self.index(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Some(
            BinaryOp::from_cells(n, cells).ok_or(FormatError::BadShape(table))?,
        ))
    }

    fn unary(
        &self,
        table: &'static str,
        row: &Option<Vec<String>>,
    ) -> Result<Option<Vec<Elem>>, FormatError> {
        let Some(row) = row else { return Ok(None) };
        if row.len() != self.file.elements.len() {
            return Err(FormatError::BadShape(table));
        }
        row.iter()
            .map(|c| self.index(c))
            .collect::<Result<_, _>>()
            .map(Some)
    }

    fn neg_involution(&self, l: &FiniteLattice) -> Result<Option<Involution>, FormatError> {
        match self.unary("neg", &self.file.ops.neg)? {
            Some(map) => Ok(Some(Involution::new(l, map)?)),
            None => Ok(None),
        }
    }

    fn sections(&self, l: &FiniteLattice) -> Result<Option<SectionFamily>, FormatError> {
        let Some(sections) = &self.file.ops.sections else {
            return Ok(None);
        };
        let n = l.size();
        let mut maps = vec![vec![None; n]; n];
        for (base, map) in sections {
            let a = self.index(base)?;
            for (x, image) in map {
                maps[a][self.index(x)?] = Some(self.index(image)?);
            }
        }
        Ok(Some(
            SectionFamily::new(l, maps, FamilyMode::Extensive)?.strongest(),
        ))
    }
}

struct Writer<'a> {
    names: &'a [String],
}

impl Writer<'_> {
    fn name(&self, x: Elem) -> String {
        self.names[x].clone()
    }

    fn binary(&self, op: &BinaryOp) -> Table {
        (0..op.size()).map(|x| self.unary(op.row(x))).collect()
    }

    fn unary(&self, map: &[Elem]) -> Vec<String> {
        map.iter().map(|&v| self.name(v)).collect()
    }

    fn sections(
        &self,
        l: &FiniteLattice,
        f: &SectionFamily,
    ) -> IndexMap<String, IndexMap<String, String>> {
        l.elements()
            .map(|a| {
                let map = l
                    .elements()
                    .filter_map(|x| f.get(a, x).map(|v| (self.name(x), self.name(v))))
                    .collect();
                (self.name(a), map)
            })
            .collect()
    }
}

/// Pretty JSON with arrays of scalars kept on one line.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    let mut out = String::new();
    write_value(&v, 0, &mut out);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_array() && !i.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if is_flat(v) => {
            let parts: Vec<String> = items.iter().map(|i| i.to_string()).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(item, indent + 1, out);
                if k + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, item)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(item, indent + 1, out);
                if k + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}
