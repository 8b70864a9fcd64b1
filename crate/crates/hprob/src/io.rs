//! The space file format: a single JSON document carrying exact weights.
//!
//! Rationals travel as strings (`"p"` or `"p/q"`) so that no value is ever
//! rounded. Canonical serialization sorts atoms by id and events by name;
//! loading and re-serializing a canonical file reproduces it byte for byte.
//!
//! ```json
//! {
//!   "regime": "unit",
//!   "atoms": [ { "id": "1", "nu1": "1/4", "nu2": "1/4" }, ... ],
//!   "events": { "A": ["1", "2"] }
//! }
//! ```

use crate::hnum::HNum;
use crate::rational::parse_rational;
use crate::space::{Event, ProbSpace, Regime, SpaceError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceFile {
    pub regime: String,
    pub atoms: Vec<AtomRecord>,
    #[serde(default)]
    pub events: BTreeMap<String, Vec<String>>,
}

/// One atom with its weight in idempotent components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomRecord {
    pub id: String,
    pub nu1: String,
    pub nu2: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LoadError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(#[from] SpaceError),
    #[error("event {event:?} references unknown atom {atom:?}")]
    UnknownAtomInEvent { event: String, atom: String },
}

/// Reads and validates a space file from disk.
pub fn load(path: impl AsRef<Path>) -> Result<ProbSpace, LoadError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| LoadError::Parse(format!("cannot read {}: {e}", path.display())))?;
    from_json(&text)
}

/// Parses and validates a space file from a JSON string.
pub fn from_json(text: &str) -> Result<ProbSpace, LoadError> {
    let file: SpaceFile =
        serde_json::from_str(text).map_err(|e| LoadError::Parse(e.to_string()))?;
    space_from_file(&file)
}

pub fn space_from_file(file: &SpaceFile) -> Result<ProbSpace, LoadError> {
    let regime = Regime::parse(&file.regime).ok_or_else(|| {
        LoadError::Parse(format!(
            "unknown regime {:?} (expected \"unit\", \"e\", or \"edag\")",
            file.regime
        ))
    })?;

    let mut pairs = Vec::with_capacity(file.atoms.len());
    for atom in &file.atoms {
        let nu1 = parse_rational(&atom.nu1)
            .map_err(|e| LoadError::Parse(format!("atom {:?}, field nu1: {e}", atom.id)))?;
        let nu2 = parse_rational(&atom.nu2)
            .map_err(|e| LoadError::Parse(format!("atom {:?}, field nu2: {e}", atom.id)))?;
        pairs.push((atom.id.clone(), HNum::from_parts(nu1, nu2)));
    }
    let mut space = ProbSpace::build(pairs, regime)?;

    for (name, members) in &file.events {
        space
            .register_event(name.clone(), Event::new(members.iter().cloned()))
            .map_err(|err| match err {
                SpaceError::UnknownAtom(atom) => LoadError::UnknownAtomInEvent {
                    event: name.clone(),
                    atom,
                },
                other => LoadError::Validation(other),
            })?;
    }
    Ok(space)
}

/// Snapshot of a space in canonical order: atoms sorted by id, events by name.
pub fn to_space_file(space: &ProbSpace) -> SpaceFile {
    let mut atoms: Vec<AtomRecord> = space
        .atoms()
        .map(|id| {
            let w = space.weight(id).expect("atom is indexed");
            AtomRecord {
                id: id.to_string(),
                nu1: w.e_part().to_string(),
                nu2: w.edag_part().to_string(),
            }
        })
        .collect();
    atoms.sort_by(|a, b| a.id.cmp(&b.id));
    let events = space
        .named_events()
        .iter()
        .map(|(name, event)| (name.clone(), event.iter().map(str::to_string).collect()))
        .collect();
    SpaceFile {
        regime: space.regime().as_str().to_string(),
        atoms,
        events,
    }
}

/// Canonical textual form: pretty JSON with a trailing newline.
pub fn canonical_json(space: &ProbSpace) -> String {
    let file = to_space_file(space);
    let mut text = serde_json::to_string_pretty(&file).expect("space file serializes");
    text.push('\n');
    text
}

pub fn save(space: &ProbSpace, path: impl AsRef<Path>) -> std::io::Result<()> {
    std::fs::write(path, canonical_json(space))
}
