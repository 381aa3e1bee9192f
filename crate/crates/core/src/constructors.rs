//! Standard group constructions: cyclic, dihedral, generalized quaternion,
//! alternating, projective linear, direct and semidirect products, and
//! groups loaded from `.grp` generator files.

use std::path::Path;
use std::sync::Arc;

use crate::element::{ActionTable, Element, Permutation, QuaternionElement};
use crate::engine::FiniteGroup;
use crate::error::{Error, Result};
use crate::grp;

/// Cyclic group of order n as an n-cycle (the trivial group sits on one
/// point).
pub fn cyclic(n: u64) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::BadConstruction(
            "cyclic group order must be at least 1".into(),
        ));
    }
    if n > u16::MAX as u64 {
        return Err(Error::BadConstruction(format!(
            "cyclic group order {n} exceeds the permutation degree limit"
        )));
    }
    let label = format!("c{n}");
    if n == 1 {
        return FiniteGroup::enumerate(&label, vec![Element::Perm(Permutation::identity(1))]);
    }
    let cycle: Vec<u16> = (1..=n as u16).collect();
    let gen = Permutation::from_cycles(n as u16, &[cycle])?;
    FiniteGroup::enumerate(&label, vec![Element::Perm(gen)])
}

/// Dihedral group of the given (even) order. Orders 2 and 4 fall back to
/// the degenerate realizations <(1 2)> and <(1 2), (3 4)>; from order 6 on
/// this is the symmetry group of the (order/2)-gon.
pub fn dihedral(order: u64) -> Result<FiniteGroup> {
    if order == 0 || !order.is_multiple_of(2) {
        return Err(Error::OddOrder { order });
    }
    let n = order / 2;
    if n > u16::MAX as u64 {
        return Err(Error::BadConstruction(format!(
            "dihedral group order {order} exceeds the permutation degree limit"
        )));
    }
    let label = format!("d{order}");
    let gens = match n {
        1 => vec![Permutation::from_cycles(2, &[vec![1, 2]])?],
        2 => vec![
            Permutation::from_cycles(4, &[vec![1, 2]])?,
            Permutation::from_cycles(4, &[vec![3, 4]])?,
        ],
        _ => {
            let n = n as u16;
            let rotation: Vec<u16> = (1..=n).collect();
            // Reflection fixing point 1: i and n + 2 - i swap.
            let mut reflection = Vec::new();
            for i in 2..=(n / 2 + 1) {
                let partner = n + 2 - i;
                if partner > i {
                    reflection.push(vec![i, partner]);
                }
            }
            vec![
                Permutation::from_cycles(n, &[rotation])?,
                Permutation::from_cycles(n, &reflection)?,
            ]
        }
    };
    FiniteGroup::enumerate(&label, gens.into_iter().map(Element::Perm).collect())
}

/// Generalized quaternion group Q_{4k} (order a multiple of 4, at least 8).
pub fn generalized_quaternion(order: u64) -> Result<FiniteGroup> {
    if !order.is_multiple_of(4) {
        return Err(Error::NotMultipleOfFour { order });
    }
    if order < 8 {
        return Err(Error::TooSmall { order });
    }
    let k = order / 4;
    if k > (u16::MAX / 2) as u64 {
        return Err(Error::BadConstruction(format!(
            "generalized quaternion order {order} is too large"
        )));
    }
    let k = k as u16;
    let a = Element::Quat(QuaternionElement { k, i: 1, j: 0 });
    let b = Element::Quat(QuaternionElement { k, i: 0, j: 1 });
    FiniteGroup::enumerate(&format!("q{order}"), vec![a, b])
}

/// Alternating group on `degree` points, 3 <= degree <= 8, generated by the
/// consecutive 3-cycles (i, i+1, i+2).
pub fn alternating(degree: u64) -> Result<FiniteGroup> {
    if !(3..=8).contains(&degree) {
        return Err(Error::DegreeOutOfRange { degree });
    }
    let d = degree as u16;
    let mut gens = Vec::new();
    for i in 1..=(d - 2) {
        gens.push(Element::Perm(Permutation::from_cycles(
            d,
            &[vec![i, i + 1, i + 2]],
        )?));
    }
    FiniteGroup::enumerate(&format!("a{degree}"), gens)
}

/// Direct product, materialized on pair elements.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let id_a = a.identity().clone();
    let id_b = b.identity().clone();
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(Element::pair(g.clone(), id_b.clone()));
    }
    for h in b.generators() {
        gens.push(Element::pair(id_a.clone(), h.clone()));
    }
    let label = format!("{}x{}", a.label(), b.label());
    let group = FiniteGroup::enumerate(&label, gens)?;
    assert_eq!(group.order(), a.order() * b.order());
    Ok(group)
}

/// Semidirect product N : H. The action is given on H's generators as index
/// maps over N's element list (entry x is the index of the image of
/// N.elements()[x]); it is validated and extended to all of H.
pub fn semidirect_product(
    n: &FiniteGroup,
    h: &FiniteGroup,
    gen_actions: &[Vec<u32>],
) -> Result<FiniteGroup> {
    if gen_actions.len() != h.generators().len() {
        return Err(Error::BadConstruction(format!(
            "expected one action map per acting generator ({}), got {}",
            h.generators().len(),
            gen_actions.len()
        )));
    }
    let table = ActionTable::build(n.elements(), h.elements(), h.generators(), gen_actions)?;
    let id_n = n.identity().clone();
    let id_h = h.identity().clone();
    let mut gens = Vec::new();
    for g in n.generators() {
        gens.push(Element::semi(g.clone(), id_h.clone(), Arc::clone(&table)));
    }
    for g in h.generators() {
        gens.push(Element::semi(id_n.clone(), g.clone(), Arc::clone(&table)));
    }
    let label = format!("{}:{}", n.label(), h.label());
    let group = FiniteGroup::enumerate(&label, gens)?;
    assert_eq!(group.order(), n.order() * h.order());
    Ok(group)
}

/// Index map over `n.elements()` induced by an element-wise function,
/// for feeding `semidirect_product`.
pub fn action_by_images(
    n: &FiniteGroup,
    f: impl Fn(&Element) -> Result<Element>,
) -> Result<Vec<u32>> {
    n.elements()
        .iter()
        .map(|e| {
            let image = f(e)?;
            n.position(&image).ok_or(Error::ElementNotInGroup)
        })
        .collect()
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// PGL(2, p) acting on the projective line over F_p: the p field points
/// followed by the point at infinity, generated by x -> x+1, x -> c*x for a
/// primitive root c (omitted for p = 2, where scaling is trivial), and
/// x -> 1/x swapping 0 with infinity.
pub fn pgl2(p: u64) -> Result<FiniteGroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime { value: p });
    }
    if p > 31 {
        return Err(Error::BadConstruction(format!(
            "pgl2 is supported for primes up to 31, got {p}"
        )));
    }
    let p = p as u16;
    let degree = p + 1;
    let inf = p; // 0-based point index of infinity

    let mut translation = vec![0u16; degree as usize];
    for x in 0..p {
        translation[x as usize] = (x + 1) % p;
    }
    translation[inf as usize] = inf;

    let mut inversion = vec![0u16; degree as usize];
    inversion[0] = inf;
    inversion[inf as usize] = 0;
    for x in 1..p {
        // Inverse by Fermat: x^(p-2) mod p.
        let mut acc: u64 = 1;
        let mut base: u64 = x as u64;
        let mut e = p as u64 - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p as u64;
            }
            base = base * base % p as u64;
            e >>= 1;
        }
        inversion[x as usize] = acc as u16;
    }

    let mut gens = vec![Permutation::from_images(translation)?];
    if p > 2 {
        let c = (2..p as u64)
            .find(|&c| {
                // Primitive root: order p-1 in the multiplicative group.
                let mut seen = 1u64;
                let mut acc = c % p as u64;
                while acc != 1 {
                    acc = acc * c % p as u64;
                    seen += 1;
                }
                seen == p as u64 - 1
            })
            .expect("every prime field has a primitive root");
        let mut scaling = vec![0u16; degree as usize];
        for x in 0..p {
            scaling[x as usize] = (c * x as u64 % p as u64) as u16;
        }
        scaling[inf as usize] = inf;
        gens.push(Permutation::from_images(scaling)?);
    }
    gens.push(Permutation::from_images(inversion)?);

    FiniteGroup::enumerate(
        &format!("pgl2_{p}"),
        gens.into_iter().map(Element::Perm).collect(),
    )
}

/// Loads a group from a `.grp` file. The label is the file stem; the header
/// id, if present, is attached as provenance. Returns parser warnings
/// alongside the group.
pub fn from_generator_file(path: &Path) -> Result<(FiniteGroup, Vec<String>)> {
    let parsed = grp::parse_file(path)?;
    let label = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    let gens = parsed
        .generators
        .into_iter()
        .map(Element::Perm)
        .collect();
    let mut group = FiniteGroup::enumerate(&label, gens)?;
    group.set_id(parsed.header);
    Ok((group, parsed.warnings))
}
