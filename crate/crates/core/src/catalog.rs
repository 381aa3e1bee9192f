//! The seven-group catalog: two factor lists whose direct products share an
//! order type while exactly one of the products is solvable. Four groups are
//! loaded from `.grp` files in the data directory; three are built natively.
//! Every entry is pinned to a fingerprint in `fingerprints.json`, recomputed
//! from scratch on load, so corrupted or swapped data fails closed.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use crate::constructors;
use crate::engine::{FiniteGroup, GroupId};
use crate::error::{Error, Result};
use crate::spectra;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub label: &'static str,
    pub id: GroupId,
    pub side: Side,
    /// File name under the data directory, or None for native construction.
    pub file: Option<&'static str>,
    pub description: &'static str,
}

pub const ENTRIES: [CatalogEntry; 7] = [
    CatalogEntry {
        label: "s1",
        id: GroupId { order: 168, index: 43 },
        side: Side::Left,
        file: Some("s1.grp"),
        description: "AGammaL(1,8) = 2^3:(7:3)",
    },
    CatalogEntry {
        label: "s2",
        id: GroupId { order: 1008, index: 289 },
        side: Side::Left,
        file: Some("s2.grp"),
        description: "7:(3x(3:Q16))",
    },
    CatalogEntry {
        label: "s3",
        id: GroupId { order: 1344, index: 6967 },
        side: Side::Left,
        file: Some("s3.grp"),
        description: "7:(((4xD8):2):3)",
    },
    CatalogEntry {
        label: "s4",
        id: GroupId { order: 21, index: 1 },
        side: Side::Right,
        file: None,
        description: "7:3",
    },
    CatalogEntry {
        label: "s5",
        id: GroupId { order: 96, index: 166 },
        side: Side::Right,
        file: None,
        description: "12xQ8",
    },
    CatalogEntry {
        label: "s6",
        id: GroupId { order: 336, index: 136 },
        side: Side::Right,
        file: Some("s6.grp"),
        description: "7:(4xA4)",
    },
    CatalogEntry {
        label: "s7",
        id: GroupId { order: 336, index: 208 },
        side: Side::Right,
        file: None,
        description: "PGL(2,7)",
    },
];

#[derive(Debug)]
pub struct Catalog {
    groups: Vec<FiniteGroup>,
    pub warnings: Vec<String>,
    pub data_dir: PathBuf,
}

fn build_native(label: &str) -> Result<FiniteGroup> {
    match label {
        "s4" => {
            let n = constructors::cyclic(7)?;
            let h = constructors::cyclic(3)?;
            let squaring = constructors::action_by_images(&n, |x| x.compose(x))?;
            constructors::semidirect_product(&n, &h, &[squaring])
        }
        "s5" => {
            let c12 = constructors::cyclic(12)?;
            let q8 = constructors::generalized_quaternion(8)?;
            constructors::direct_product(&c12, &q8)
        }
        "s7" => constructors::pgl2(7),
        other => unreachable!("no native construction for {other}"),
    }
}

fn load_fingerprints(data_dir: &Path) -> Result<HashMap<String, String>> {
    let path = data_dir.join("fingerprints.json");
    let text = fs::read_to_string(&path).map_err(|source| Error::Io {
        path: path.clone(),
        source,
    })?;
    let raw: HashMap<String, String> = serde_json::from_str(&text)
        .map_err(|e| Error::BadFingerprintTable(e.to_string()))?;
    let mut out = HashMap::new();
    for (label, hex_str) in raw {
        let bytes = hex::decode(&hex_str).map_err(|_| {
            Error::BadFingerprintTable(format!("entry {label} is not valid hex"))
        })?;
        let ascii = String::from_utf8(bytes).map_err(|_| {
            Error::BadFingerprintTable(format!("entry {label} is not valid UTF-8"))
        })?;
        out.insert(label, ascii);
    }
    Ok(out)
}

impl Catalog {
    /// Loads and validates all seven groups. Fails on the first integrity
    /// problem: unreadable or unparsable data, header or order disagreeing
    /// with the catalog table, or a recomputed fingerprint that does not
    /// match the pinned one.
    pub fn load(data_dir: &Path) -> Result<Catalog> {
        let pinned = load_fingerprints(data_dir)?;
        let mut groups = Vec::with_capacity(ENTRIES.len());
        let mut warnings = Vec::new();
        for entry in &ENTRIES {
            let mut group = match entry.file {
                Some(file) => {
                    let path = data_dir.join(file);
                    let (group, mut file_warnings) =
                        constructors::from_generator_file(&path)?;
                    warnings.append(&mut file_warnings);
                    match group.id() {
                        Some(id) if id == entry.id => {}
                        Some(id) => {
                            return Err(Error::HeaderMismatch {
                                label: entry.label.to_string(),
                                expected: entry.id.to_string(),
                                found: id.to_string(),
                            });
                        }
                        None => {
                            return Err(Error::HeaderMismatch {
                                label: entry.label.to_string(),
                                expected: entry.id.to_string(),
                                found: "no header".to_string(),
                            });
                        }
                    }
                    group
                }
                None => {
                    let mut group = build_native(entry.label)?;
                    group.set_id(Some(entry.id));
                    group
                }
            };
            group.set_label(entry.label);
            if group.order() != entry.id.order {
                return Err(Error::OrderMismatch {
                    label: entry.label.to_string(),
                    expected: entry.id.order,
                    actual: group.order(),
                });
            }
            let expected = pinned.get(entry.label).ok_or_else(|| {
                Error::BadFingerprintTable(format!("missing entry for {}", entry.label))
            })?;
            let actual = spectra::exponent_type(&group).fingerprint();
            if &actual != expected {
                return Err(Error::FingerprintMismatch {
                    label: entry.label.to_string(),
                    expected: expected.clone(),
                    actual,
                });
            }
            groups.push(group);
        }
        Ok(Catalog {
            groups,
            warnings,
            data_dir: data_dir.to_path_buf(),
        })
    }

    pub fn groups(&self) -> &[FiniteGroup] {
        &self.groups
    }

    pub fn get(&self, label: &str) -> Option<&FiniteGroup> {
        ENTRIES
            .iter()
            .position(|e| e.label == label)
            .map(|i| &self.groups[i])
    }

    pub fn entry(&self, label: &str) -> Option<&'static CatalogEntry> {
        ENTRIES.iter().find(|e| e.label == label)
    }

    /// The left factor list (s1, s2, s3).
    pub fn left(&self) -> Vec<&FiniteGroup> {
        self.side(Side::Left)
    }

    /// The right factor list (s4, s5, s6, s7).
    pub fn right(&self) -> Vec<&FiniteGroup> {
        self.side(Side::Right)
    }

    fn side(&self, side: Side) -> Vec<&FiniteGroup> {
        ENTRIES
            .iter()
            .zip(&self.groups)
            .filter(|(e, _)| e.side == side)
            .map(|(_, g)| g)
            .collect()
    }
}
