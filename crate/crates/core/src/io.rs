//! JSON task files: named pair spaces, maps, complexes, groups, modules and
//! submodule sequences, with every scalar written as an exact string.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complexes::SnComplex;
use crate::groups::{FiniteGroup, GPairModule, GroupError, Limits, ModuleSes};
use crate::linalg::{Field, Matrix, Scalar, Subspace};
use crate::sn::{PairMap, PairSpace};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unknown field {0:?}; expected \"Q\" or \"F<p>\" with p prime")]
    Field(String),
    #[error("unresolved references: {}", .0.join(", "))]
    Unresolved(Vec<String>),
    #[error("{at}: {message}")]
    Invalid { at: String, message: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

impl IoError {
    fn invalid(at: impl Into<String>, message: impl ToString) -> IoError {
        IoError::Invalid { at: at.into(), message: message.to_string() }
    }

    /// Whether the error is a resource cap rather than malformed input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, IoError::Group(GroupError::ResourceLimit { .. } | GroupError::OrderCap { .. }))
    }
}

/// A scalar entry: an exact string such as `"-3/4"`, or a bare integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Text(String),
    Int(i64),
}

pub type Rows = Vec<Vec<Entry>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

/// `null` lists spanning vectors of the null subspace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceSpec {
    pub dim: usize,
    #[serde(default)]
    pub null: Rows,
}

/// `matrix` has one row per codomain coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSpec {
    pub domain: String,
    pub codomain: String,
    pub matrix: Rows,
}

/// Objects in degrees `lo, lo + 1, …`; `differentials[k]` leaves degree `lo + k`.
///
/// Also read from the graded form `{"degrees": [lo, hi], "objects": {"0": ..},
/// "differentials": {"0": ..}}`, keyed by degree; always written as a list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ComplexInput")]
pub struct ComplexSpec {
    pub lo: i64,
    pub objects: Vec<String>,
    pub differentials: Vec<String>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ComplexInput {
    Listed {
        lo: i64,
        objects: Vec<String>,
        #[serde(default)]
        differentials: Vec<String>,
    },
    Graded {
        degrees: [i64; 2],
        objects: BTreeMap<String, String>,
        #[serde(default)]
        differentials: BTreeMap<String, String>,
    },
}

impl TryFrom<ComplexInput> for ComplexSpec {
    type Error = String;

    fn try_from(input: ComplexInput) -> Result<Self, String> {
        match input {
            ComplexInput::Listed { lo, objects, differentials } => Ok(ComplexSpec { lo, objects, differentials }),
            ComplexInput::Graded { degrees: [lo, hi], objects, differentials } => {
                if lo > hi {
                    return Err(format!("empty degree range [{lo}, {hi}]"));
                }
                let by_degree = |m: &BTreeMap<String, String>, what: &str| -> Result<BTreeMap<i64, String>, String> {
                    m.iter()
                        .map(|(k, v)| {
                            k.trim().parse::<i64>().map(|d| (d, v.clone())).map_err(|_| format!("{what} key {k:?} is not a degree"))
                        })
                        .collect()
                };
                let mut objects = by_degree(&objects, "objects")?;
                let mut differentials = by_degree(&differentials, "differentials")?;
                let take = |m: &mut BTreeMap<i64, String>, d: i64, what: &str| {
                    m.remove(&d).ok_or_else(|| format!("{what} missing in degree {d}"))
                };
                let objs = (lo..=hi).map(|d| take(&mut objects, d, "object")).collect::<Result<Vec<_>, _>>()?;
                let diffs = (lo..hi).map(|d| take(&mut differentials, d, "differential")).collect::<Result<Vec<_>, _>>()?;
                if let Some(d) = objects.keys().chain(differentials.keys()).next() {
                    return Err(format!("degree {d} lies outside [{lo}, {hi}]"));
                }
                Ok(ComplexSpec { lo, objects: objs, differentials: diffs })
            }
        }
    }
}

/// `action` maps element names to matrices; missing elements are an error.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub dim: usize,
    #[serde(default)]
    pub null: Rows,
    pub action: BTreeMap<String, Rows>,
}

/// `0 -> S -> M -> M/S -> 0` for the submodule spanned by `submodule`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceSpec {
    pub module: String,
    pub submodule: Rows,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskSpec {
    pub op: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub args: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<[i64; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskFile {
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub spaces: BTreeMap<String, SpaceSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, MapSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub complexes: BTreeMap<String, ComplexSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub modules: BTreeMap<String, ModuleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub sequences: BTreeMap<String, SequenceSpec>,
    pub task: TaskSpec,
}

pub fn parse_task(text: &str) -> Result<TaskFile, IoError> {
    serde_json::from_str(text).map_err(|e| IoError::Syntax { line: e.line(), column: e.column(), message: e.to_string() })
}

pub fn parse_field(name: &str) -> Result<Field, IoError> {
    let bad = || IoError::Field(name.to_string());
    match name.trim() {
        "Q" => Ok(Field::Rationals),
        s => {
            let p = s.strip_prefix('F').ok_or_else(bad)?.parse::<u32>().map_err(|_| bad())?;
            Field::prime(p).map_err(|_| bad())
        }
    }
}

pub fn field_name(field: Field) -> String {
    field.to_string()
}

fn scalar(field: Field, e: &Entry, at: &str) -> Result<Scalar, IoError> {
    match e {
        Entry::Int(v) => Ok(field.from_i64(*v)),
        Entry::Text(t) => field.parse(t).map_err(|err| IoError::invalid(at, err)),
    }
}

/// A `rows × cols` matrix; `rows` and `cols` come from the declared dimensions.
pub fn matrix(field: Field, data: &Rows, rows: usize, cols: usize, at: &str) -> Result<Matrix, IoError> {
    if data.len() != rows {
        return Err(IoError::invalid(at, format!("expected {rows} rows, found {}", data.len())));
    }
    let mut out = Vec::with_capacity(rows);
    for (i, row) in data.iter().enumerate() {
        if row.len() != cols {
            return Err(IoError::invalid(format!("{at}, row {i}"), format!("expected {cols} entries, found {}", row.len())));
        }
        out.push(row.iter().enumerate().map(|(j, e)| scalar(field, e, &format!("{at}[{i}][{j}]"))).collect::<Result<Vec<_>, _>>()?);
    }
    Matrix::from_rows(field, out, cols).map_err(|e| IoError::invalid(at, e))
}

fn vectors(field: Field, data: &Rows, dim: usize, at: &str) -> Result<Subspace, IoError> {
    let m = matrix(field, data, data.len(), dim, at)?;
    Ok(Subspace::from_rows_matrix(dim, &m))
}

pub fn rows_of(m: &Matrix) -> Rows {
    m.row_vecs().iter().map(|r| r.iter().map(|s| Entry::Text(s.to_string())).collect()).collect()
}

pub fn space_spec(a: &PairSpace) -> SpaceSpec {
    SpaceSpec { dim: a.dim(), null: rows_of(a.null().basis()) }
}

pub fn group_spec(g: &FiniteGroup) -> GroupSpec {
    GroupSpec { elements: g.names().to_vec(), table: g.table().to_vec() }
}

pub fn module_spec(m: &GPairModule) -> ModuleSpec {
    let names = m.group().names();
    ModuleSpec {
        dim: m.dim(),
        null: rows_of(m.space().null().basis()),
        action: (0..m.group().order()).map(|g| (names[g].clone(), rows_of(m.rho(g)))).collect(),
    }
}

/// A task file under construction; names are assigned by the caller.
pub struct TaskBuilder {
    file: TaskFile,
}

impl TaskBuilder {
    pub fn new(field: Field, op: &str) -> TaskBuilder {
        TaskBuilder {
            file: TaskFile {
                field: field_name(field),
                group: None,
                spaces: BTreeMap::new(),
                maps: BTreeMap::new(),
                complexes: BTreeMap::new(),
                modules: BTreeMap::new(),
                sequences: BTreeMap::new(),
                task: TaskSpec { op: op.to_string(), args: BTreeMap::new(), degrees: None },
            },
        }
    }

    pub fn arg(mut self, key: &str, value: &str) -> TaskBuilder {
        self.file.task.args.insert(key.to_string(), value.to_string());
        self
    }

    pub fn degrees(mut self, lo: i64, hi: i64) -> TaskBuilder {
        self.file.task.degrees = Some([lo, hi]);
        self
    }

    pub fn space(mut self, name: &str, a: &PairSpace) -> TaskBuilder {
        self.file.spaces.insert(name.to_string(), space_spec(a));
        self
    }

    /// Adds `f` with its endpoints stored as `<name>.dom` and `<name>.cod`.
    pub fn map(mut self, name: &str, f: &PairMap) -> TaskBuilder {
        let (d, c) = (format!("{name}.dom"), format!("{name}.cod"));
        self = self.space(&d, f.domain()).space(&c, f.codomain());
        self.file.maps.insert(name.to_string(), MapSpec { domain: d, codomain: c, matrix: rows_of(f.matrix()) });
        self
    }

    pub fn complex(mut self, name: &str, c: &SnComplex) -> TaskBuilder {
        let mut objects = Vec::new();
        for (k, a) in c.objects().iter().enumerate() {
            let o = format!("{name}.{k}");
            self = self.space(&o, a);
            objects.push(o);
        }
        let mut differentials = Vec::new();
        for (k, d) in c.differentials().iter().enumerate() {
            let m = format!("{name}.d{k}");
            self.file.maps.insert(
                m.clone(),
                MapSpec { domain: objects[k].clone(), codomain: objects[k + 1].clone(), matrix: rows_of(d.matrix()) },
            );
            differentials.push(m);
        }
        self.file.complexes.insert(name.to_string(), ComplexSpec { lo: c.lo(), objects, differentials });
        self
    }

    pub fn group(mut self, g: &FiniteGroup) -> TaskBuilder {
        self.file.group = Some(group_spec(g));
        self
    }

    pub fn module(mut self, name: &str, m: &GPairModule) -> TaskBuilder {
        self = self.group(m.group());
        self.file.modules.insert(name.to_string(), module_spec(m));
        self
    }

    /// Stores the middle module as `<name>.total` and the submodule by a basis.
    pub fn sequence(mut self, name: &str, s: &ModuleSes) -> TaskBuilder {
        let total = format!("{name}.total");
        self = self.module(&total, s.total());
        let sub = Subspace::from_columns(s.i.map().matrix());
        self.file.sequences.insert(name.to_string(), SequenceSpec { module: total, submodule: rows_of(sub.basis()) });
        self
    }

    pub fn build(self) -> TaskFile {
        self.file
    }
}

/// A task file with every reference checked and every object validated.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub field: Field,
    pub group: Option<FiniteGroup>,
    pub spaces: BTreeMap<String, PairSpace>,
    pub maps: BTreeMap<String, PairMap>,
    pub complexes: BTreeMap<String, SnComplex>,
    pub modules: BTreeMap<String, GPairModule>,
    pub sequences: BTreeMap<String, ModuleSes>,
    pub task: TaskSpec,
}

impl Resolved {
    fn lookup<'a, T>(table: &'a BTreeMap<String, T>, kind: &str, name: &str) -> Result<&'a T, IoError> {
        table.get(name).ok_or_else(|| IoError::Unresolved(vec![format!("{kind} {name:?}")]))
    }

    /// The object named by task argument `key`.
    fn arg(&self, key: &str) -> Result<&str, IoError> {
        self.task
            .args
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| IoError::invalid("task.args", format!("missing argument {key:?}")))
    }

    pub fn map_arg(&self, key: &str) -> Result<&PairMap, IoError> {
        Self::lookup(&self.maps, "map", self.arg(key)?)
    }

    pub fn complex_arg(&self, key: &str) -> Result<&SnComplex, IoError> {
        Self::lookup(&self.complexes, "complex", self.arg(key)?)
    }

    pub fn module_arg(&self, key: &str) -> Result<&GPairModule, IoError> {
        Self::lookup(&self.modules, "module", self.arg(key)?)
    }

    pub fn sequence_arg(&self, key: &str) -> Result<&ModuleSes, IoError> {
        Self::lookup(&self.sequences, "sequence", self.arg(key)?)
    }

    pub fn space_arg(&self, key: &str) -> Result<&PairSpace, IoError> {
        Self::lookup(&self.spaces, "space", self.arg(key)?)
    }

    pub fn string_arg(&self, key: &str) -> Result<&str, IoError> {
        self.arg(key)
    }
}

/// Checks every reference, then builds and validates all objects.
pub fn resolve(file: &TaskFile, limits: &Limits) -> Result<Resolved, IoError> {
    let field = parse_field(&file.field)?;

    let mut missing = Vec::new();
    for (name, m) in &file.maps {
        for end in [&m.domain, &m.codomain] {
            if !file.spaces.contains_key(end) {
                missing.push(format!("space {end:?} (map {name:?})"));
            }
        }
    }
    for (name, c) in &file.complexes {
        for o in &c.objects {
            if !file.spaces.contains_key(o) {
                missing.push(format!("space {o:?} (complex {name:?})"));
            }
        }
        for d in &c.differentials {
            if !file.maps.contains_key(d) {
                missing.push(format!("map {d:?} (complex {name:?})"));
            }
        }
    }
    for (name, s) in &file.sequences {
        if !file.modules.contains_key(&s.module) {
            missing.push(format!("module {:?} (sequence {name:?})", s.module));
        }
    }
    if !file.modules.is_empty() && file.group.is_none() {
        missing.push("group (required by modules)".to_string());
    }
    for (key, value) in &file.task.args {
        let known = match key.as_str() {
            "map" | "f" | "g" => file.maps.contains_key(value),
            "complex" => file.complexes.contains_key(value),
            "module" => file.modules.contains_key(value),
            "sequence" => file.sequences.contains_key(value),
            "space" => file.spaces.contains_key(value),
            _ => true,
        };
        if !known {
            missing.push(format!("{key} {value:?} (task.args)"));
        }
    }
    if !missing.is_empty() {
        return Err(IoError::Unresolved(missing));
    }

    let mut spaces = BTreeMap::new();
    for (name, s) in &file.spaces {
        let null = vectors(field, &s.null, s.dim, &format!("spaces.{name}.null"))?;
        spaces.insert(name.clone(), PairSpace::new(null));
    }
    let mut maps = BTreeMap::new();
    for (name, m) in &file.maps {
        let (a, b) = (&spaces[&m.domain], &spaces[&m.codomain]);
        let at = format!("maps.{name}.matrix");
        let mat = matrix(field, &m.matrix, b.dim(), a.dim(), &at)?;
        let f = PairMap::new(a.clone(), b.clone(), mat).map_err(|e| IoError::invalid(&at, e))?;
        maps.insert(name.clone(), f);
    }
    let mut complexes = BTreeMap::new();
    for (name, c) in &file.complexes {
        let at = format!("complexes.{name}");
        if c.objects.is_empty() || c.differentials.len() + 1 != c.objects.len() {
            return Err(IoError::invalid(&at, "need n objects and n - 1 differentials, n ≥ 1"));
        }
        let objects = c.objects.iter().map(|o| spaces[o].clone()).collect();
        let diffs = c.differentials.iter().map(|d| maps[d].clone()).collect();
        let complex = SnComplex::new(field, c.lo, objects, diffs).map_err(|e| IoError::invalid(&at, e))?;
        complexes.insert(name.clone(), complex);
    }
    let group = match &file.group {
        None => None,
        Some(g) => {
            let group = FiniteGroup::new(g.elements.clone(), g.table.clone()).map_err(|e| IoError::invalid("group", e))?;
            limits.admit(&group)?;
            Some(group)
        }
    };
    let mut modules = BTreeMap::new();
    for (name, m) in &file.modules {
        let at = format!("modules.{name}");
        let group = group.as_ref().expect("checked above");
        let null = vectors(field, &m.null, m.dim, &format!("{at}.null"))?;
        let mut action = Vec::with_capacity(group.order());
        for g in group.names() {
            let rows = m.action.get(g).ok_or_else(|| IoError::invalid(&at, format!("no action given for element {g:?}")))?;
            action.push(matrix(field, rows, m.dim, m.dim, &format!("{at}.action.{g}"))?);
        }
        if let Some(extra) = m.action.keys().find(|k| !group.names().contains(k)) {
            return Err(IoError::invalid(&at, format!("action names unknown element {extra:?}")));
        }
        let module = GPairModule::new(group.clone(), PairSpace::new(null), action).map_err(|e| IoError::invalid(&at, e))?;
        modules.insert(name.clone(), module);
    }
    let mut sequences = BTreeMap::new();
    for (name, s) in &file.sequences {
        let at = format!("sequences.{name}");
        let m: &GPairModule = &modules[&s.module];
        let sub = vectors(field, &s.submodule, m.dim(), &format!("{at}.submodule"))?;
        let ses = ModuleSes::from_submodule(m, &sub).map_err(|e| IoError::invalid(&at, e))?;
        sequences.insert(name.clone(), ses);
    }
    Ok(Resolved { field, group, spaces, maps, complexes, modules, sequences, task: file.task.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn syntax_errors_carry_a_location() {
        let err = parse_task("{\n  \"field\": \"F2\",\n  \"task\": [1 2]\n}").unwrap_err();
        match err {
            IoError::Syntax { line, .. } => assert_eq!(line, 3),
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn unresolved_references_are_listed() {
        let text = r#"{"field": "F2", "maps": {"f": {"domain": "A", "codomain": "B", "matrix": []}},
                       "task": {"op": "ladder", "args": {"f": "f", "g": "h"}}}"#;
        let err = resolve(&parse_task(text).unwrap(), &Limits::default()).unwrap_err();
        let IoError::Unresolved(list) = err else { panic!() };
        assert_eq!(list.len(), 3);
    }

    #[test]
    fn round_trip_through_builder() {
        let f = Field::Rationals;
        let a = PairSpace::from_null_vectors(f, 2, &[vec![f.one(), f.parse("-1/2").unwrap()]]);
        let m = PairMap::new(a.clone(), a.clone(), Matrix::identity(f, 2)).unwrap();
        let c = SnComplex::two_term(&m, -1);
        let g = FiniteGroup::cyclic(2);
        let module = GPairModule::induce(&g, &PairSpace::hausdorff(f, 1));
        let s = ModuleSes::from_submodule(&module, &Subspace::span(f, 2, &[vec![f.one(), f.one()]])).unwrap();
        let file = TaskBuilder::new(f, "noop").map("m", &m).complex("c", &c).module("M", &module).sequence("s", &s).build();
        let text = serde_json::to_string_pretty(&file).unwrap();
        let back = resolve(&parse_task(&text).unwrap(), &Limits::default()).unwrap();
        assert_eq!(back.maps["m"], m);
        assert_eq!(back.complexes["c"], c);
        assert_eq!(back.modules["M"], module);
        assert_eq!(back.sequences["s"], s);
    }

    #[test]
    fn malformed_matrix_is_located() {
        let text = r#"{"field": "F3", "spaces": {"A": {"dim": 1}}, "maps": {"f": {"domain": "A", "codomain": "A", "matrix": [["1", "2"]]}},
                       "task": {"op": "noop"}}"#;
        let err = resolve(&parse_task(text).unwrap(), &Limits::default()).unwrap_err();
        assert!(err.to_string().contains("maps.f.matrix"), "{err}");
    }

    #[test]
    fn graded_complexes_match_listed_ones() {
        let head = r#"{"field": "Q", "spaces": {"A": {"dim": 1}, "B": {"dim": 1, "null": [["1"]]}},
                       "maps": {"d": {"domain": "A", "codomain": "B", "matrix": [["1"]]}}, "complexes": {"c": "#;
        let tail = r#"}, "task": {"op": "noop"}}"#;
        let listed = format!(r#"{head}{{"lo": -1, "objects": ["A", "B"], "differentials": ["d"]}}{tail}"#);
        let graded = format!(r#"{head}{{"degrees": [-1, 0], "objects": {{"0": "B", "-1": "A"}}, "differentials": {{"-1": "d"}}}}{tail}"#);
        assert_eq!(parse_task(&listed).unwrap(), parse_task(&graded).unwrap());
        let gap = format!(r#"{head}{{"degrees": [-1, 0], "objects": {{"-1": "A"}}, "differentials": {{"-1": "d"}}}}{tail}"#);
        assert!(parse_task(&gap).is_err());
        let stray = format!(r#"{head}{{"degrees": [0, 0], "objects": {{"0": "A", "3": "B"}}}}{tail}"#);
        assert!(parse_task(&stray).is_err());
    }
}
