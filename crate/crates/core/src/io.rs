//! JSON input formats.
//!
//! A group reference is one of
//! - a name: an entry of the document's `groups` map, else a built-in (`C6`, `S3`, `Q8`, ...);
//! - `{"order": n, "mul": [[...], ...]}`;
//! - `{"perm_generators": [[...], ...], "degree": d}`;
//! - `{"certificate": "<hex>"}`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::group_kernel::{build, class_id, GroupClassId, GroupTable, RawTable};
use crate::grothendieck_ring::GSetAction;
use crate::names::builtin_group;
use crate::orbifold_model::{quotient_stratification, CellSpec, GCWComplex, StratifiedOrbifold, Stratum};
use crate::ph_index::{BoundaryBehavior, FieldKind, LocalConeModel, SingularPointData, VectorFieldOnOrbifold};
use crate::{Caps, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Name(String),
    Table(RawTable),
    #[serde(rename_all = "snake_case")]
    Permutations { perm_generators: Vec<Vec<usize>>, degree: usize },
    Certificate { certificate: String },
}

/// Named groups declared by a document, resolved before the built-ins.
#[derive(Clone, Debug, Default)]
pub struct GroupScope {
    named: BTreeMap<String, GroupTable>,
}

impl GroupScope {
    pub fn from_refs(refs: &BTreeMap<String, GroupRef>, caps: &Caps) -> Result<GroupScope> {
        let mut scope = GroupScope::default();
        for (name, r) in refs {
            let g = scope.resolve(r, caps)?;
            scope.named.insert(name.clone(), g);
        }
        Ok(scope)
    }

    pub fn resolve(&self, r: &GroupRef, caps: &Caps) -> Result<GroupTable> {
        match r {
            GroupRef::Name(name) => self
                .named
                .get(name)
                .cloned()
                .or_else(|| builtin_group(name))
                .ok_or_else(|| Error::UnknownGroup(name.clone())),
            GroupRef::Table(raw) => GroupTable::validate(raw),
            GroupRef::Permutations { perm_generators, degree } => {
                build::from_permutations(*degree, perm_generators, caps.product_order)
            }
            GroupRef::Certificate { certificate } => GroupClassId::from_hex(certificate)?.representative(caps),
        }
    }

    pub fn resolve_class(&self, r: &GroupRef, caps: &Caps) -> Result<GroupClassId> {
        match r {
            GroupRef::Certificate { certificate } => GroupClassId::from_hex(certificate),
            _ => class_id(&self.resolve(r, caps)?, caps),
        }
    }
}

fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn parse_action(action: &BTreeMap<String, Vec<usize>>) -> Result<BTreeMap<usize, Vec<usize>>> {
    action
        .iter()
        .map(|(k, v)| {
            k.trim()
                .parse::<usize>()
                .map(|i| (i, v.clone()))
                .map_err(|_| Error::Parse(format!("action key `{k}` is not an element index")))
        })
        .collect()
}

/// A group document: either a bare reference or `{"groups": {...}, "group": ref}`.
pub fn parse_group(text: &str, caps: &Caps) -> Result<GroupTable> {
    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct Scoped {
        groups: BTreeMap<String, GroupRef>,
        group: GroupRef,
    }
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Doc {
        Scoped(Scoped),
        Bare(GroupRef),
    }
    match parse_json::<Doc>(text)? {
        Doc::Bare(r) => GroupScope::default().resolve(&r, caps),
        Doc::Scoped(s) => GroupScope::from_refs(&s.groups, caps)?.resolve(&s.group, caps),
    }
}

pub fn load_group(path: &Path, caps: &Caps) -> Result<GroupTable> {
    parse_group(&read_file(path)?, caps)
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct StratumDoc {
    chi_c: i64,
    isotropy: GroupRef,
    #[serde(default)]
    boundary: bool,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CellDoc {
    dim: usize,
    #[serde(default)]
    stabilizer: Option<Vec<usize>>,
    #[serde(default)]
    boundary: bool,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GcwDoc {
    group: GroupRef,
    cells: Vec<CellDoc>,
    #[serde(default)]
    action: BTreeMap<String, Vec<usize>>,
    #[serde(default)]
    top_dim: Option<usize>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct OrbifoldDoc {
    #[serde(default)]
    groups: BTreeMap<String, GroupRef>,
    #[serde(default)]
    strata: Option<Vec<StratumDoc>>,
    #[serde(default)]
    gcw: Option<GcwDoc>,
}

/// An orbifold as read from input.
#[derive(Clone, Debug)]
pub enum OrbifoldInput {
    Stratified(StratifiedOrbifold),
    GlobalQuotient(GCWComplex),
}

impl OrbifoldInput {
    pub fn stratified(&self, caps: &Caps) -> Result<StratifiedOrbifold> {
        match self {
            OrbifoldInput::Stratified(q) => Ok(q.clone()),
            OrbifoldInput::GlobalQuotient(x) => quotient_stratification(x, caps),
        }
    }

    pub fn complex(&self) -> Option<&GCWComplex> {
        match self {
            OrbifoldInput::GlobalQuotient(x) => Some(x),
            OrbifoldInput::Stratified(_) => None,
        }
    }
}

fn orbifold_from_doc(doc: &OrbifoldDoc, outer: Option<&GroupScope>, caps: &Caps) -> Result<OrbifoldInput> {
    let mut scope = outer.cloned().unwrap_or_default();
    let own = GroupScope::from_refs(&doc.groups, caps)?;
    scope.named.extend(own.named);
    match (&doc.strata, &doc.gcw) {
        (Some(strata), None) => {
            let strata = strata
                .iter()
                .map(|s| {
                    Ok(Stratum { chi_c: s.chi_c, isotropy: scope.resolve_class(&s.isotropy, caps)?, boundary: s.boundary })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(OrbifoldInput::Stratified(StratifiedOrbifold::new(strata)))
        }
        (None, Some(gcw)) => {
            let group = Arc::new(scope.resolve(&gcw.group, caps)?);
            let cells = gcw
                .cells
                .iter()
                .map(|c| CellSpec { dim: c.dim, stabilizer: c.stabilizer.clone(), boundary: c.boundary })
                .collect();
            let action = parse_action(&gcw.action)?;
            Ok(OrbifoldInput::GlobalQuotient(GCWComplex::with_top_dim(group, cells, &action, gcw.top_dim)?))
        }
        _ => Err(Error::Parse("an orbifold needs exactly one of `strata` or `gcw`".into())),
    }
}

pub fn parse_orbifold(text: &str, caps: &Caps) -> Result<OrbifoldInput> {
    orbifold_from_doc(&parse_json(text)?, None, caps)
}

pub fn load_orbifold(path: &Path, caps: &Caps) -> Result<OrbifoldInput> {
    parse_orbifold(&read_file(path)?, caps)
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointDoc {
    label: String,
    isotropy: GroupRef,
    index: i64,
    #[serde(default)]
    apex: bool,
}

fn points_from_docs(docs: &[PointDoc], scope: &GroupScope, caps: &Caps) -> Result<Vec<SingularPointData>> {
    docs.iter()
        .map(|p| {
            Ok(SingularPointData {
                label: p.label.clone(),
                isotropy: scope.resolve_class(&p.isotropy, caps)?,
                local_index: p.index,
                apex: p.apex,
            })
        })
        .collect()
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum OrbifoldRef {
    Path(String),
    Inline(OrbifoldDoc),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldDoc {
    #[serde(default)]
    groups: BTreeMap<String, GroupRef>,
    orbifold: OrbifoldRef,
    #[serde(default)]
    kind: FieldKind,
    #[serde(default = "default_boundary")]
    boundary_behavior: BoundaryBehavior,
    singular_points: Vec<PointDoc>,
}

fn default_boundary() -> BoundaryBehavior {
    BoundaryBehavior::None
}

/// A field document. A string `orbifold` is a path, relative to `base_dir` if given.
/// `boundary` overrides the document's boundary behaviour.
pub fn parse_field(
    text: &str,
    base_dir: Option<&Path>,
    boundary: Option<BoundaryBehavior>,
    caps: &Caps,
) -> Result<VectorFieldOnOrbifold> {
    let doc: FieldDoc = parse_json(text)?;
    let scope = GroupScope::from_refs(&doc.groups, caps)?;
    let orbifold = match &doc.orbifold {
        OrbifoldRef::Inline(o) => orbifold_from_doc(o, Some(&scope), caps)?,
        OrbifoldRef::Path(p) => {
            let path: PathBuf = match base_dir {
                Some(dir) => dir.join(p),
                None => PathBuf::from(p),
            };
            load_orbifold(&path, caps)?
        }
    };
    let points = points_from_docs(&doc.singular_points, &scope, caps)?;
    VectorFieldOnOrbifold::new(orbifold.stratified(caps)?, points, boundary.unwrap_or(doc.boundary_behavior), doc.kind)
}

pub fn load_field(path: &Path, boundary: Option<BoundaryBehavior>, caps: &Caps) -> Result<VectorFieldOnOrbifold> {
    parse_field(&read_file(path)?, path.parent(), boundary, caps)
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConeDoc {
    #[serde(default)]
    groups: BTreeMap<String, GroupRef>,
    group: GroupRef,
    #[serde(default)]
    singular_points: Vec<PointDoc>,
}

pub fn parse_cone(text: &str, caps: &Caps) -> Result<LocalConeModel> {
    let doc: ConeDoc = parse_json(text)?;
    let scope = GroupScope::from_refs(&doc.groups, caps)?;
    let group = scope.resolve(&doc.group, caps)?;
    LocalConeModel::new(group, points_from_docs(&doc.singular_points, &scope, caps)?, caps)
}

pub fn load_cone(path: &Path, caps: &Caps) -> Result<LocalConeModel> {
    parse_cone(&read_file(path)?, caps)
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GSetDoc {
    #[serde(default)]
    groups: BTreeMap<String, GroupRef>,
    group: GroupRef,
    size: usize,
    #[serde(default)]
    action: BTreeMap<String, Vec<usize>>,
}

/// A G-set document; permutations may be given for generators only.
pub fn parse_gset(text: &str, caps: &Caps) -> Result<GSetAction> {
    let doc: GSetDoc = parse_json(text)?;
    let scope = GroupScope::from_refs(&doc.groups, caps)?;
    let group = Arc::new(scope.resolve(&doc.group, caps)?);
    GSetAction::from_partial(group, doc.size, &parse_action(&doc.action)?)
}

pub fn load_gset(path: &Path, caps: &Caps) -> Result<GSetAction> {
    parse_gset(&read_file(path)?, caps)
}

pub fn parse_caps(text: &str) -> Result<Caps> {
    let caps: Caps = parse_json(text)?;
    caps.validate()?;
    Ok(caps)
}

pub fn load_caps(path: &Path) -> Result<Caps> {
    parse_caps(&read_file(path)?)
}
