//! Group enumeration and subgroup machinery. A `FiniteGroup` materializes
//! every element by breadth-first closure over its generators, after which
//! all queries (orders, exponent, subgroups, derived series, solvability)
//! are exact lookups or finite loops.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use num_integer::Integer;
use serde::Serialize;

use crate::element::Element;
use crate::error::{Error, Result};

/// Default ceiling on closure size; enumeration aborts beyond this.
pub const DEFAULT_ENUMERATION_CAP: usize = 10_000_000;

/// Breadth-first closure of a generator list into a full group; the
/// free-function spelling of [`FiniteGroup::enumerate_with_cap`].
pub fn enumerate_closure(
    label: &str,
    generators: Vec<Element>,
    cap: usize,
) -> Result<FiniteGroup> {
    FiniteGroup::enumerate_with_cap(label, generators, cap)
}

/// Provenance tag for a group taken from a standard catalog numbering:
/// the pair (order, index within that order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GroupId {
    pub order: u64,
    pub index: u64,
}

impl std::fmt::Display for GroupId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.order, self.index)
    }
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    label: String,
    generators: Vec<Element>,
    elements: Vec<Element>,
    index: HashMap<Vec<u8>, u32>,
    orders: Vec<u64>,
    exponent: u64,
    id: Option<GroupId>,
}

impl FiniteGroup {
    /// Enumerates the closure of `generators` with the default cap.
    pub fn enumerate(label: &str, generators: Vec<Element>) -> Result<FiniteGroup> {
        Self::enumerate_with_cap(label, generators, DEFAULT_ENUMERATION_CAP)
    }

    /// Breadth-first closure: the identity first, then products with the
    /// generators in declaration order. The resulting element order is
    /// deterministic for a fixed generator list.
    pub fn enumerate_with_cap(
        label: &str,
        generators: Vec<Element>,
        cap: usize,
    ) -> Result<FiniteGroup> {
        if generators.is_empty() {
            return Err(Error::NoGenerators);
        }
        let identity = generators[0].identity_like();
        let mut elements = vec![identity];
        let mut index = HashMap::new();
        index.insert(elements[0].canonical_encode(), 0u32);
        let mut head = 0usize;
        while head < elements.len() {
            for gen in &generators {
                let next = elements[head].compose(gen)?;
                let key = next.canonical_encode();
                if let Entry::Vacant(e) = index.entry(key) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    e.insert(elements.len() as u32);
                    elements.push(next);
                }
            }
            head += 1;
        }
        let orders: Vec<u64> = elements.iter().map(Element::order).collect();
        let exponent = orders.iter().fold(1u64, |acc, &o| acc.lcm(&o));
        Ok(FiniteGroup {
            label: label.to_string(),
            generators,
            elements,
            index,
            orders,
            exponent,
            id: None,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: &str) {
        self.label = label.to_string();
    }

    pub fn id(&self) -> Option<GroupId> {
        self.id
    }

    pub fn set_id(&mut self, id: Option<GroupId>) {
        self.id = id;
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    /// Orders of all elements, parallel to `elements()`.
    pub fn element_orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn identity(&self) -> &Element {
        &self.elements[0]
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.index.contains_key(&e.canonical_encode())
    }

    pub fn position(&self, e: &Element) -> Option<u32> {
        self.index.get(&e.canonical_encode()).copied()
    }

    fn compose_positions(&self, a: u32, b: u32) -> u32 {
        let product = self.elements[a as usize]
            .compose(&self.elements[b as usize])
            .expect("group elements share a domain");
        self.index[&product.canonical_encode()]
    }

    fn inverse_position(&self, a: u32) -> u32 {
        let inv = self.elements[a as usize]
            .inverse()
            .expect("group elements invert");
        self.index[&inv.canonical_encode()]
    }

    /// Closure of `seeds` (which must belong to the group) as a subgroup.
    pub fn subgroup_generated(&self, seeds: &[Element]) -> Result<Subgroup<'_>> {
        let mut seed_positions = Vec::with_capacity(seeds.len());
        for seed in seeds {
            seed_positions.push(self.position(seed).ok_or(Error::ElementNotInGroup)?);
        }
        Ok(self.close_positions(&seed_positions))
    }

    fn close_positions(&self, seeds: &[u32]) -> Subgroup<'_> {
        let mut membership = vec![false; self.elements.len()];
        let mut members = vec![0u32];
        membership[0] = true;
        let mut head = 0usize;
        while head < members.len() {
            for &s in seeds {
                let next = self.compose_positions(members[head], s);
                if !membership[next as usize] {
                    membership[next as usize] = true;
                    members.push(next);
                }
            }
            head += 1;
        }
        members.sort_unstable();
        let subgroup = Subgroup {
            parent: self,
            members,
            membership,
        };
        assert!(
            self.order().is_multiple_of(subgroup.order()),
            "subgroup order must divide the group order"
        );
        subgroup
    }

    fn derived_positions(&self, members: &[u32]) -> Vec<u32> {
        let inverses: Vec<u32> = members
            .iter()
            .map(|&p| self.inverse_position(p))
            .collect();
        let mut commutators = Vec::new();
        let mut seen = vec![false; self.elements.len()];
        for (xi, &x) in members.iter().enumerate() {
            for (yi, &y) in members.iter().enumerate() {
                let c = self.compose_positions(
                    self.compose_positions(
                        self.compose_positions(inverses[xi], inverses[yi]),
                        x,
                    ),
                    y,
                );
                if !seen[c as usize] {
                    seen[c as usize] = true;
                    commutators.push(c);
                }
            }
        }
        commutators
    }

    /// The commutator subgroup: closure of all |G|^2 commutators
    /// x^-1 y^-1 x y. The result is asserted normal by conjugation test.
    pub fn derived_subgroup(&self) -> Subgroup<'_> {
        let all: Vec<u32> = (0..self.elements.len() as u32).collect();
        let derived = self.close_positions(&self.derived_positions(&all));
        assert!(
            derived.is_normal(),
            "derived subgroup must be normal in the group"
        );
        derived
    }

    /// The derived series [G, G', G'', ..] computed until it stabilizes:
    /// ends at the first trivial term, or repeats the first term equal to
    /// its own derived subgroup.
    pub fn derived_series(&self) -> Vec<Subgroup<'_>> {
        let all: Vec<u32> = (0..self.elements.len() as u32).collect();
        let membership = vec![true; self.elements.len()];
        let whole = Subgroup {
            parent: self,
            members: all,
            membership,
        };
        let mut series = vec![whole];
        loop {
            let last = series.last().unwrap();
            if last.order() == 1 {
                break;
            }
            let next = self.close_positions(&self.derived_positions(&last.members));
            // Every term is characteristic in the previous one, so each is
            // normal in the whole group; check it.
            assert!(
                next.is_normal(),
                "derived series terms must be normal in the group"
            );
            let stabilized = next.order() == last.order();
            series.push(next);
            if stabilized {
                break;
            }
        }
        series
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().order() == 1
    }

    /// A group is perfect when it equals its own derived subgroup.
    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }
}

/// A subgroup referencing its parent's element table by position.
pub struct Subgroup<'g> {
    parent: &'g FiniteGroup,
    members: Vec<u32>,
    membership: Vec<bool>,
}

impl<'g> Subgroup<'g> {
    pub fn parent(&self) -> &'g FiniteGroup {
        self.parent
    }

    pub fn order(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn elements(&self) -> impl Iterator<Item = &'g Element> + '_ {
        self.members
            .iter()
            .map(move |&p| &self.parent.elements[p as usize])
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.parent
            .position(e)
            .map(|p| self.membership[p as usize])
            .unwrap_or(false)
    }

    /// Orders of the subgroup's elements (via the parent's cache).
    pub fn element_orders(&self) -> Vec<u64> {
        self.members
            .iter()
            .map(|&p| self.parent.orders[p as usize])
            .collect()
    }

    /// Derived subgroup of this subgroup, inside the same parent. The
    /// result is asserted normal in this subgroup by conjugating every
    /// member (the subgroup keeps no generating set of its own).
    pub fn derived(&self) -> Subgroup<'g> {
        let derived = self
            .parent
            .close_positions(&self.parent.derived_positions(&self.members));
        let normal = self.members.iter().all(|&m| {
            let m_inv = self.parent.inverse_position(m);
            derived.members.iter().all(|&x| {
                let conj = self
                    .parent
                    .compose_positions(self.parent.compose_positions(m_inv, x), m);
                derived.membership[conj as usize]
            })
        });
        assert!(normal, "derived subgroup must be normal in its source");
        derived
    }

    pub fn is_perfect(&self) -> bool {
        self.derived().order() == self.order()
    }

    /// Whether the subgroup is normal in its parent (conjugation by the
    /// parent's generators suffices).
    pub fn is_normal(&self) -> bool {
        for gen in self.parent.generators() {
            let gen_pos = self.parent.position(gen).unwrap();
            let inv_pos = self.parent.inverse_position(gen_pos);
            for &m in &self.members {
                let conj = self.parent.compose_positions(
                    self.parent.compose_positions(inv_pos, m),
                    gen_pos,
                );
                if !self.membership[conj as usize] {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors;
    use crate::element::Permutation;

    #[test]
    fn enumerates_cyclic_group_deterministically() {
        let g = constructors::cyclic(6).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.exponent(), 6);
        assert!(g.elements()[0].is_identity());
        let again = constructors::cyclic(6).unwrap();
        let enc: Vec<_> = g.elements().iter().map(|e| e.canonical_encode()).collect();
        let enc2: Vec<_> = again
            .elements()
            .iter()
            .map(|e| e.canonical_encode())
            .collect();
        assert_eq!(enc, enc2);
    }

    #[test]
    fn rejects_empty_generator_list() {
        assert!(matches!(
            FiniteGroup::enumerate("empty", vec![]),
            Err(Error::NoGenerators)
        ));
    }

    #[test]
    fn cap_is_enforced() {
        let gens = constructors::cyclic(30).unwrap().generators().to_vec();
        assert!(matches!(
            FiniteGroup::enumerate_with_cap("c30", gens, 10),
            Err(Error::CapExceeded { cap: 10 })
        ));
    }

    #[test]
    fn closure_contains_all_products() {
        let g = constructors::dihedral(12).unwrap();
        for a in g.elements() {
            for b in g.elements() {
                assert!(g.contains(&a.compose(b).unwrap()));
            }
        }
    }

    #[test]
    fn closure_contains_random_products() {
        use rand::{Rng, SeedableRng};
        let g = constructors::pgl2(5).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..1000 {
            let a = &g.elements()[rng.gen_range(0..g.order() as usize)];
            let b = &g.elements()[rng.gen_range(0..g.order() as usize)];
            assert!(g.contains(&a.compose(b).unwrap()));
        }
    }

    #[test]
    fn free_function_enumeration_matches_method() {
        let gens = constructors::cyclic(9).unwrap().generators().to_vec();
        let g = enumerate_closure("c9", gens, 100).unwrap();
        assert_eq!(g.order(), 9);
    }

    #[test]
    fn subgroup_generated_respects_lagrange() {
        let g = constructors::cyclic(12).unwrap();
        let sq = g.elements()[2].clone(); // generator squared
        let h = g.subgroup_generated(&[sq]).unwrap();
        assert_eq!(h.order(), 6);
        assert!(h.is_normal());
        let outside = Element::Perm(Permutation::identity(5));
        assert!(matches!(
            g.subgroup_generated(&[outside]),
            Err(Error::ElementNotInGroup)
        ));
    }

    #[test]
    fn derived_subgroup_of_dihedral_is_rotation_square() {
        // D_12 (order 12): derived subgroup is C_3.
        let g = constructors::dihedral(12).unwrap();
        let d = g.derived_subgroup();
        assert_eq!(d.order(), 3);
        assert!(d.is_normal());
    }

    #[test]
    fn derived_series_of_a4() {
        let g = constructors::alternating(4).unwrap();
        let sizes: Vec<u64> = g.derived_series().iter().map(|s| s.order()).collect();
        assert_eq!(sizes, vec![12, 4, 1]);
        assert!(g.is_solvable());
        assert!(!g.is_perfect());
    }

    #[test]
    fn alternating_five_is_perfect_and_not_solvable() {
        let g = constructors::alternating(5).unwrap();
        let sizes: Vec<u64> = g.derived_series().iter().map(|s| s.order()).collect();
        assert_eq!(sizes, vec![60, 60]);
        assert!(!g.is_solvable());
        assert!(g.is_perfect());
    }

    #[test]
    fn quaternion_derived_series() {
        let g = constructors::generalized_quaternion(8).unwrap();
        let sizes: Vec<u64> = g.derived_series().iter().map(|s| s.order()).collect();
        assert_eq!(sizes, vec![8, 2, 1]);
    }

    #[test]
    fn trivial_group_series() {
        let g = constructors::cyclic(1).unwrap();
        let sizes: Vec<u64> = g.derived_series().iter().map(|s| s.order()).collect();
        assert_eq!(sizes, vec![1]);
        assert!(g.is_solvable());
        assert!(g.is_perfect());
    }
}
