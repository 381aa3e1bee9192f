//! Report structures shared by the CLI's text and JSON renderings. All
//! numeric content lives here; the renderers only format it.

use serde::Serialize;

use crate::catalog::Catalog;
use crate::engine::{FiniteGroup, GroupId};
use crate::error::{Error, Result};
use crate::spectra::{self, Spectrum};

#[derive(Clone, Debug, Serialize)]
pub struct FactorReport {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub id: Option<GroupId>,
    pub order: u64,
    pub exponent: u64,
    pub solvable: bool,
}

impl FactorReport {
    pub fn new(g: &FiniteGroup) -> FactorReport {
        FactorReport {
            label: g.label().to_string(),
            id: g.id(),
            order: g.order(),
            exponent: g.exponent(),
            solvable: g.is_solvable(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DivisorRow {
    pub divisor: u64,
    pub left_product: u64,
    pub right_product: u64,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub modulus: u64,
    pub divisors: Vec<u64>,
    pub per_divisor: Vec<DivisorRow>,
    pub left_factors: Vec<FactorReport>,
    pub right_factors: Vec<FactorReport>,
    pub left_order: u64,
    pub right_order: u64,
    pub left_exponent: u64,
    pub right_exponent: u64,
    pub spectra_equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_unequal_divisor: Option<u64>,
    /// Aggregate solvability of each side (per-factor flags live in the
    /// factor lists).
    pub left_solvable: bool,
    pub right_solvable: bool,
    /// The order-type claim: all per-divisor products equal, and the two
    /// sides share order and exponent.
    pub conclusion: bool,
}

impl VerificationReport {
    /// The full claim under verification: identical order types, a solvable
    /// left side, and a right side whose last factor is not solvable. This
    /// drives the process exit code.
    pub fn theorem_holds(&self) -> bool {
        let last_right_unsolvable =
            self.right_factors.last().map(|f| !f.solvable).unwrap_or(false);
        self.conclusion && self.left_solvable && last_right_unsolvable
    }
}

fn checked_order_product(groups: &[&FiniteGroup]) -> Result<u64> {
    groups.iter().try_fold(1u64, |acc, g| {
        acc.checked_mul(g.order()).ok_or_else(|| Error::CountOverflow {
            context: "while multiplying group orders".to_string(),
        })
    })
}

fn side_rows(left: &Spectrum, right: &Spectrum) -> Result<Vec<DivisorRow>> {
    use num_integer::Integer;
    let g = left.modulus.gcd(&right.modulus);
    let joint = (left.modulus / g)
        .checked_mul(right.modulus)
        .ok_or_else(|| Error::CountOverflow {
            context: "while joining spectrum moduli".to_string(),
        })?;
    Ok(spectra::divisors(joint)
        .into_iter()
        .map(|d| {
            let l = left.e_at(d);
            let r = right.e_at(d);
            DivisorRow {
                divisor: d,
                left_product: l,
                right_product: r,
                equal: l == r,
            }
        })
        .collect())
}

/// Runs the headline verification on a loaded catalog: the two factor lists
/// must have products with identical exponent types (hence identical order
/// types), and all left factors must be solvable while the right side ends
/// in a non-solvable one.
pub fn verify(catalog: &Catalog) -> Result<VerificationReport> {
    let left = catalog.left();
    let right = catalog.right();

    let left_spectra: Vec<Spectrum> =
        left.iter().map(|g| spectra::exponent_type(g)).collect();
    let right_spectra: Vec<Spectrum> =
        right.iter().map(|g| spectra::exponent_type(g)).collect();
    let left_product = Spectrum::product_all(&left_spectra)?;
    let right_product = Spectrum::product_all(&right_spectra)?;

    let per_divisor = side_rows(&left_product, &right_product)?;
    let spectra_equal = per_divisor.iter().all(|r| r.equal);
    let first_unequal_divisor =
        per_divisor.iter().find(|r| !r.equal).map(|r| r.divisor);

    let left_factors: Vec<FactorReport> =
        left.iter().map(|g| FactorReport::new(g)).collect();
    let right_factors: Vec<FactorReport> =
        right.iter().map(|g| FactorReport::new(g)).collect();
    let left_solvable = left_factors.iter().all(|f| f.solvable);
    let right_solvable = right_factors.iter().all(|f| f.solvable);

    let left_order = checked_order_product(&left)?;
    let right_order = checked_order_product(&right)?;
    let left_exponent = left_product.modulus;
    let right_exponent = right_product.modulus;
    let conclusion =
        spectra_equal && left_order == right_order && left_exponent == right_exponent;

    Ok(VerificationReport {
        modulus: per_divisor.last().map(|r| r.divisor).unwrap_or(1),
        divisors: per_divisor.iter().map(|r| r.divisor).collect(),
        per_divisor,
        left_factors,
        right_factors,
        left_order,
        right_order,
        left_exponent,
        right_exponent,
        spectra_equal,
        first_unequal_divisor,
        left_solvable,
        right_solvable,
        conclusion,
    })
}

/// A resolved CLI target: one group, or a formal direct product of several.
/// Products are never materialized; their spectra come from the pointwise
/// product, their order from the checked product of factor orders, and
/// their solvability from the conjunction (a direct product is solvable
/// exactly when every factor is).
pub struct ResolvedTarget {
    pub name: String,
    pub factors: Vec<FiniteGroup>,
}

impl ResolvedTarget {
    pub fn exponent_type(&self) -> Result<Spectrum> {
        let spectra: Vec<Spectrum> = self
            .factors
            .iter()
            .map(spectra::exponent_type)
            .collect();
        Spectrum::product_all(&spectra)
    }

    pub fn order(&self) -> Result<u64> {
        let refs: Vec<&FiniteGroup> = self.factors.iter().collect();
        checked_order_product(&refs)
    }

    pub fn solvable(&self) -> bool {
        self.factors.iter().all(|g| g.is_solvable())
    }

    pub fn factor_reports(&self) -> Vec<FactorReport> {
        self.factors.iter().map(FactorReport::new).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub target: String,
    pub order: u64,
    pub exponent: u64,
    pub solvable: bool,
    pub factors: Vec<FactorReport>,
    pub order_type: Spectrum,
    pub exponent_type: Spectrum,
    pub fingerprint: String,
    pub fingerprint_hex: String,
}

pub fn spectrum(target: &ResolvedTarget) -> Result<SpectrumReport> {
    let e = target.exponent_type()?;
    let o = e.order_from_exponent()?;
    Ok(SpectrumReport {
        target: target.name.clone(),
        order: target.order()?,
        exponent: e.modulus,
        solvable: target.solvable(),
        factors: target.factor_reports(),
        fingerprint: e.fingerprint(),
        fingerprint_hex: e.fingerprint_hex(),
        order_type: o,
        exponent_type: e,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SideSummary {
    pub targets: Vec<String>,
    pub order: u64,
    pub exponent: u64,
    /// Aggregate: every target on this side is solvable.
    pub solvable: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareReport {
    pub left: SideSummary,
    pub right: SideSummary,
    pub per_divisor: Vec<DivisorRow>,
    pub spectra_equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_unequal_divisor: Option<u64>,
}

pub fn compare(left: &[ResolvedTarget], right: &[ResolvedTarget]) -> Result<CompareReport> {
    let mut left_spectra = Vec::new();
    for t in left {
        left_spectra.push(t.exponent_type()?);
    }
    let mut right_spectra = Vec::new();
    for t in right {
        right_spectra.push(t.exponent_type()?);
    }
    let left_product = Spectrum::product_all(&left_spectra)?;
    let right_product = Spectrum::product_all(&right_spectra)?;
    let per_divisor = side_rows(&left_product, &right_product)?;
    let spectra_equal = per_divisor.iter().all(|r| r.equal);
    let first_unequal_divisor =
        per_divisor.iter().find(|r| !r.equal).map(|r| r.divisor);

    let side_order = |targets: &[ResolvedTarget]| -> Result<u64> {
        targets.iter().try_fold(1u64, |acc, t| {
            acc.checked_mul(t.order()?).ok_or_else(|| Error::CountOverflow {
                context: "while multiplying group orders".to_string(),
            })
        })
    };

    Ok(CompareReport {
        left: SideSummary {
            targets: left.iter().map(|t| t.name.clone()).collect(),
            order: side_order(left)?,
            exponent: left_product.modulus,
            solvable: left.iter().all(|t| t.solvable()),
        },
        right: SideSummary {
            targets: right.iter().map(|t| t.name.clone()).collect(),
            order: side_order(right)?,
            exponent: right_product.modulus,
            solvable: right.iter().all(|t| t.solvable()),
        },
        per_divisor,
        spectra_equal,
        first_unequal_divisor,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CollisionMember {
    pub target: String,
    pub order: u64,
    pub solvable: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CollisionClass {
    pub fingerprint: String,
    pub fingerprint_hex: String,
    pub members: Vec<CollisionMember>,
    pub mixed_solvability: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CollideReport {
    pub targets: Vec<String>,
    pub classes: Vec<CollisionClass>,
    pub collisions_found: bool,
}

/// Groups targets by exponent-type fingerprint and reports every class of
/// two or more, flagging classes that mix solvable and non-solvable members.
pub fn collide(targets: &[ResolvedTarget]) -> Result<CollideReport> {
    use std::collections::BTreeMap;
    let mut classes: BTreeMap<String, Vec<CollisionMember>> = BTreeMap::new();
    for t in targets {
        let e = t.exponent_type()?;
        classes.entry(e.fingerprint()).or_default().push(CollisionMember {
            target: t.name.clone(),
            order: t.order()?,
            solvable: t.solvable(),
        });
    }
    let classes: Vec<CollisionClass> = classes
        .into_iter()
        .filter(|(_, members)| members.len() >= 2)
        .map(|(fingerprint, members)| {
            let mixed = members.iter().any(|m| m.solvable)
                && members.iter().any(|m| !m.solvable);
            CollisionClass {
                fingerprint_hex: hex::encode(fingerprint.as_bytes()),
                fingerprint,
                members,
                mixed_solvability: mixed,
            }
        })
        .collect();
    Ok(CollideReport {
        targets: targets.iter().map(|t| t.name.clone()).collect(),
        collisions_found: !classes.is_empty(),
        classes,
    })
}
