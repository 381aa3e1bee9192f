//! Element domains: permutations, generalized quaternion normal forms,
//! direct-product pairs, and semidirect-product pairs tied to an action
//! table. All domains share one `Element` enum so the engine can enumerate
//! any of them through a single composition interface.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A permutation of `{0, .., degree-1}` stored as its image table.
/// Composition order is "apply the left operand first": `(a * b)(x) = b(a(x))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: u16) -> Permutation {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image table, checking bijectivity.
    pub fn from_images(images: Vec<u16>) -> Result<Permutation> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &img in &images {
            if (img as usize) >= degree || seen[img as usize] {
                return Err(Error::BadConstruction(format!(
                    "image table of length {degree} is not a bijection"
                )));
            }
            seen[img as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation on `{1, .., degree}` (1-based points, as in cycle
    /// notation) from disjoint cycles. Cycles may not reuse a point.
    pub fn from_cycles(degree: u16, cycles: &[Vec<u16>]) -> Result<Permutation> {
        let mut images: Vec<u16> = (0..degree).collect();
        let mut used = vec![false; degree as usize];
        for cycle in cycles {
            for &pt in cycle {
                if pt == 0 || pt > degree {
                    return Err(Error::BadConstruction(format!(
                        "point {pt} is outside 1..={degree}"
                    )));
                }
                if used[(pt - 1) as usize] {
                    return Err(Error::BadConstruction(format!(
                        "point {pt} appears twice"
                    )));
                }
                used[(pt - 1) as usize] = true;
            }
            for w in 0..cycle.len() {
                let from = cycle[w] - 1;
                let to = cycle[(w + 1) % cycle.len()] - 1;
                images[from as usize] = to;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> u16 {
        self.images.len() as u16
    }

    pub fn image(&self, point: u16) -> u16 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    fn compose(&self, then: &Permutation) -> Result<Permutation> {
        if self.degree() != then.degree() {
            return Err(Error::DomainMismatch {
                left: format!("permutation of degree {}", self.degree()),
                right: format!("permutation of degree {}", then.degree()),
            });
        }
        Ok(Permutation {
            images: self
                .images
                .iter()
                .map(|&x| then.images[x as usize])
                .collect(),
        })
    }

    fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u16;
        }
        Permutation { images }
    }

    /// Order as the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut ord: u64 = 1;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            ord = ord.lcm(&len);
        }
        ord
    }

    /// Nontrivial cycles, each rotated to start at its minimum point and
    /// sorted by that minimum (0-based points).
    pub fn cycles(&self) -> Vec<Vec<u16>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p as u16);
                p = self.images[p] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle notation on 1-based points; `"()"` for the identity.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let body = c
                    .iter()
                    .map(|p| (p + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                format!("({body})")
            })
            .collect::<Vec<_>>()
            .join("")
    }
}

/// An element of the generalized quaternion group Q_{4k} in the normal form
/// a^i b^j with 0 <= i < 2k and j in {0, 1}, subject to a^{2k} = 1,
/// b^2 = a^k, and b a b^{-1} = a^{-1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuaternionElement {
    pub k: u16,
    pub i: u16,
    pub j: u8,
}

impl QuaternionElement {
    pub fn identity(k: u16) -> QuaternionElement {
        QuaternionElement { k, i: 0, j: 0 }
    }

    fn compose(&self, other: &QuaternionElement) -> Result<QuaternionElement> {
        if self.k != other.k {
            return Err(Error::DomainMismatch {
                left: format!("quaternion group of order {}", 4 * self.k),
                right: format!("quaternion group of order {}", 4 * other.k),
            });
        }
        let n = 2 * self.k as u32;
        let i2 = if self.j == 1 {
            (n - other.i as u32) % n
        } else {
            other.i as u32
        };
        let twist = if self.j == 1 && other.j == 1 {
            self.k as u32
        } else {
            0
        };
        Ok(QuaternionElement {
            k: self.k,
            i: ((self.i as u32 + i2 + twist) % n) as u16,
            j: self.j ^ other.j,
        })
    }

    fn inverse(&self) -> QuaternionElement {
        let n = 2 * self.k;
        if self.j == 0 {
            QuaternionElement {
                k: self.k,
                i: (n - self.i) % n,
                j: 0,
            }
        } else {
            QuaternionElement {
                k: self.k,
                i: (self.i + self.k) % n,
                j: 1,
            }
        }
    }
}

/// An element of a direct product: one component from each factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairElement {
    pub left: Element,
    pub right: Element,
}

static NEXT_TABLE_ID: AtomicU64 = AtomicU64::new(1);

/// Materialized action of a group H on a group N by automorphisms: one
/// bijection of N's element indices per element of H. Built once per
/// semidirect product and shared by all its elements; elements from
/// different tables never compose.
pub struct ActionTable {
    id: u64,
    n_elems: Vec<Element>,
    n_index: HashMap<Vec<u8>, u32>,
    h_index: HashMap<Vec<u8>, u32>,
    maps: Vec<Vec<u32>>,
}

impl fmt::Debug for ActionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ActionTable(id={}, |N|={}, |H|={})",
            self.id,
            self.n_elems.len(),
            self.maps.len()
        )
    }
}

impl ActionTable {
    /// Builds the full table from the action of H's generators, given as
    /// index maps over `n_elems` (entry x is the index of the image of
    /// element x). Each generator map must be a bijective automorphism, and
    /// the maps must extend consistently to all of H (propagated by
    /// breadth-first closure from the identity, which acts trivially).
    pub fn build(
        n_elems: &[Element],
        h_elems: &[Element],
        h_gens: &[Element],
        gen_maps: &[Vec<u32>],
    ) -> Result<Arc<ActionTable>> {
        let n = n_elems.len();
        let mut n_index = HashMap::with_capacity(n);
        for (x, e) in n_elems.iter().enumerate() {
            n_index.insert(e.canonical_encode(), x as u32);
        }
        let mut h_index = HashMap::with_capacity(h_elems.len());
        for (x, e) in h_elems.iter().enumerate() {
            h_index.insert(e.canonical_encode(), x as u32);
        }

        for (g, map) in gen_maps.iter().enumerate() {
            if map.len() != n {
                return Err(Error::NotABijection { generator: g });
            }
            let mut seen = vec![false; n];
            for &img in map {
                if img as usize >= n || seen[img as usize] {
                    return Err(Error::NotABijection { generator: g });
                }
                seen[img as usize] = true;
            }
            for x in 0..n {
                for y in 0..n {
                    let xy = n_elems[x].compose(&n_elems[y])?;
                    let xy_idx = n_index[&xy.canonical_encode()] as usize;
                    let img =
                        n_elems[map[x] as usize].compose(&n_elems[map[y] as usize])?;
                    let img_idx = n_index[&img.canonical_encode()];
                    if map[xy_idx] != img_idx {
                        return Err(Error::NotAnAutomorphism {
                            generator: g,
                            detail: format!(
                                "images of elements {x} and {y} do not multiply to the image of their product"
                            ),
                        });
                    }
                }
            }
        }

        // Propagate along right multiplication: the map of h*g is the map of
        // g followed by the map of h.
        let identity = h_elems[0].identity_like();
        let id_idx = *h_index
            .get(&identity.canonical_encode())
            .ok_or_else(|| Error::InconsistentAction {
                detail: "acting group does not contain its identity".to_string(),
            })?;
        let mut maps: Vec<Option<Vec<u32>>> = vec![None; h_elems.len()];
        maps[id_idx as usize] = Some((0..n as u32).collect());
        let mut queue = vec![id_idx];
        let mut head = 0;
        while head < queue.len() {
            let h = queue[head];
            head += 1;
            let current = maps[h as usize].clone().unwrap();
            for (g, gen) in h_gens.iter().enumerate() {
                let hg = h_elems[h as usize].compose(gen)?;
                let hg_idx = *h_index.get(&hg.canonical_encode()).ok_or_else(|| {
                    Error::InconsistentAction {
                        detail: "acting group is not closed under its generators"
                            .to_string(),
                    }
                })?;
                let composed: Vec<u32> = (0..n)
                    .map(|x| current[gen_maps[g][x] as usize])
                    .collect();
                match &maps[hg_idx as usize] {
                    None => {
                        maps[hg_idx as usize] = Some(composed);
                        queue.push(hg_idx);
                    }
                    Some(existing) => {
                        if *existing != composed {
                            return Err(Error::InconsistentAction {
                                detail: format!(
                                    "two generator words for the same acting element \
                                     induce different maps (element index {hg_idx})"
                                ),
                            });
                        }
                    }
                }
            }
        }
        let maps: Vec<Vec<u32>> = maps
            .into_iter()
            .map(|m| {
                m.ok_or_else(|| Error::InconsistentAction {
                    detail: "generators do not reach every element of the acting group"
                        .to_string(),
                })
            })
            .collect::<Result<_>>()?;

        Ok(Arc::new(ActionTable {
            id: NEXT_TABLE_ID.fetch_add(1, Ordering::Relaxed),
            n_elems: n_elems.to_vec(),
            n_index,
            h_index,
            maps,
        }))
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn normal_size(&self) -> usize {
        self.n_elems.len()
    }

    pub fn acting_size(&self) -> usize {
        self.maps.len()
    }

    /// Applies the action of `h` to the normal-factor element `n`.
    pub fn apply(&self, h: &Element, n: &Element) -> Result<Element> {
        let h_idx = *self
            .h_index
            .get(&h.canonical_encode())
            .ok_or(Error::ElementNotInGroup)?;
        let n_idx = *self
            .n_index
            .get(&n.canonical_encode())
            .ok_or(Error::ElementNotInGroup)?;
        Ok(self.n_elems[self.maps[h_idx as usize][n_idx as usize] as usize].clone())
    }
}

/// An element (n, h) of a semidirect product N : H. Multiplication twists
/// the normal component: (n1, h1)(n2, h2) = (n1 * h1(n2), h1 h2).
#[derive(Clone, Debug)]
pub struct SemiElement {
    pub normal: Element,
    pub quot: Element,
    pub table: Arc<ActionTable>,
}

impl PartialEq for SemiElement {
    fn eq(&self, other: &Self) -> bool {
        self.table.id == other.table.id
            && self.normal == other.normal
            && self.quot == other.quot
    }
}

impl Eq for SemiElement {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Perm(Permutation),
    Quat(QuaternionElement),
    Pair(Box<PairElement>),
    Semi(Box<SemiElement>),
}

impl Element {
    pub fn pair(left: Element, right: Element) -> Element {
        Element::Pair(Box::new(PairElement { left, right }))
    }

    pub fn semi(normal: Element, quot: Element, table: Arc<ActionTable>) -> Element {
        Element::Semi(Box::new(SemiElement {
            normal,
            quot,
            table,
        }))
    }

    pub fn domain_name(&self) -> String {
        match self {
            Element::Perm(p) => format!("permutation of degree {}", p.degree()),
            Element::Quat(q) => format!("quaternion group of order {}", 4 * q.k),
            Element::Pair(p) => format!(
                "product of ({}) and ({})",
                p.left.domain_name(),
                p.right.domain_name()
            ),
            Element::Semi(s) => format!("semidirect product (table {})", s.table.id),
        }
    }

    /// The identity of this element's domain.
    pub fn identity_like(&self) -> Element {
        match self {
            Element::Perm(p) => Element::Perm(Permutation::identity(p.degree())),
            Element::Quat(q) => Element::Quat(QuaternionElement::identity(q.k)),
            Element::Pair(p) => {
                Element::pair(p.left.identity_like(), p.right.identity_like())
            }
            Element::Semi(s) => Element::semi(
                s.normal.identity_like(),
                s.quot.identity_like(),
                Arc::clone(&s.table),
            ),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == self.identity_like()
    }

    /// Group operation, applying `self` first and `other` second.
    pub fn compose(&self, other: &Element) -> Result<Element> {
        match (self, other) {
            (Element::Perm(a), Element::Perm(b)) => a.compose(b).map(Element::Perm),
            (Element::Quat(a), Element::Quat(b)) => a.compose(b).map(Element::Quat),
            (Element::Pair(a), Element::Pair(b)) => Ok(Element::pair(
                a.left.compose(&b.left)?,
                a.right.compose(&b.right)?,
            )),
            (Element::Semi(a), Element::Semi(b)) => {
                if a.table.id != b.table.id {
                    return Err(Error::DomainMismatch {
                        left: self.domain_name(),
                        right: other.domain_name(),
                    });
                }
                let twisted = a.table.apply(&a.quot, &b.normal)?;
                Ok(Element::semi(
                    a.normal.compose(&twisted)?,
                    a.quot.compose(&b.quot)?,
                    Arc::clone(&a.table),
                ))
            }
            _ => Err(Error::DomainMismatch {
                left: self.domain_name(),
                right: other.domain_name(),
            }),
        }
    }

    pub fn inverse(&self) -> Result<Element> {
        match self {
            Element::Perm(p) => Ok(Element::Perm(p.inverse())),
            Element::Quat(q) => Ok(Element::Quat(q.inverse())),
            Element::Pair(p) => Ok(Element::pair(p.left.inverse()?, p.right.inverse()?)),
            Element::Semi(s) => {
                let quot_inv = s.quot.inverse()?;
                let normal_inv = s.normal.inverse()?;
                let twisted = s.table.apply(&quot_inv, &normal_inv)?;
                Ok(Element::semi(twisted, quot_inv, Arc::clone(&s.table)))
            }
        }
    }

    /// Multiplicative order. Permutations use the cycle-length lcm, product
    /// pairs the lcm of their component orders, and the remaining domains
    /// literal repeated composition.
    pub fn order(&self) -> u64 {
        match self {
            Element::Perm(p) => p.order(),
            Element::Pair(p) => p.left.order().lcm(&p.right.order()),
            _ => {
                let id = self.identity_like();
                let mut acc = self.clone();
                let mut n: u64 = 1;
                while acc != id {
                    acc = acc
                        .compose(self)
                        .expect("element composes with itself");
                    n += 1;
                }
                n
            }
        }
    }

    /// Canonical byte encoding; equal bytes if and only if equal element.
    /// Used as the hash key for element indexing during enumeration.
    pub fn canonical_encode(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.encode_into(&mut out);
        out
    }

    fn encode_into(&self, out: &mut Vec<u8>) {
        match self {
            Element::Perm(p) => {
                out.push(b'P');
                out.extend_from_slice(&(p.images.len() as u32).to_le_bytes());
                for &x in &p.images {
                    out.extend_from_slice(&x.to_le_bytes());
                }
            }
            Element::Quat(q) => {
                out.push(b'Q');
                out.extend_from_slice(&(q.k as u32).to_le_bytes());
                out.extend_from_slice(&(q.i as u32).to_le_bytes());
                out.push(q.j);
            }
            Element::Pair(p) => {
                out.push(b'D');
                let left = p.left.canonical_encode();
                out.extend_from_slice(&(left.len() as u32).to_le_bytes());
                out.extend_from_slice(&left);
                p.right.encode_into(out);
            }
            Element::Semi(s) => {
                out.push(b'S');
                out.extend_from_slice(&s.table.id.to_le_bytes());
                let normal = s.normal.canonical_encode();
                out.extend_from_slice(&(normal.len() as u32).to_le_bytes());
                out.extend_from_slice(&normal);
                s.quot.encode_into(out);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm_from_seed(seed: u64, degree: u16) -> Permutation {
        // Fisher-Yates driven by a splitmix64 stream.
        let mut state = seed;
        let mut next = move || {
            state = state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        };
        let mut images: Vec<u16> = (0..degree).collect();
        for i in (1..degree as usize).rev() {
            let j = (next() % (i as u64 + 1)) as usize;
            images.swap(i, j);
        }
        Permutation { images }
    }

    #[test]
    fn compose_applies_left_operand_first() {
        let a = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![2, 3]]).unwrap();
        let ab = a.compose(&b).unwrap();
        // 1 -> 2 -> 3 under "a then b".
        assert_eq!(ab.image(0), 2);
        assert_eq!(ab.cycle_string(), "(1 3 2)");
    }

    #[test]
    fn cycle_parsing_round_trips() {
        let p = Permutation::from_cycles(8, &[vec![2, 3, 5, 4, 7, 8, 6]]).unwrap();
        assert_eq!(p.cycle_string(), "(2 3 5 4 7 8 6)");
        assert_eq!(p.order(), 7);
        assert!(Permutation::from_cycles(4, &[vec![1, 2], vec![2, 3]]).is_err());
        assert!(Permutation::from_cycles(4, &[vec![0, 1]]).is_err());
        assert!(Permutation::from_cycles(4, &[vec![4, 5]]).is_err());
    }

    #[test]
    fn identity_cycle_string_is_unit() {
        assert_eq!(Permutation::identity(5).cycle_string(), "()");
    }

    #[test]
    fn quaternion_presentation_relations_hold() {
        for k in 2u16..7 {
            let a = Element::Quat(QuaternionElement { k, i: 1, j: 0 });
            let b = Element::Quat(QuaternionElement { k, i: 0, j: 1 });
            assert_eq!(a.order(), 2 * k as u64);
            assert_eq!(b.order(), 4);
            // b^2 = a^k
            let b2 = b.compose(&b).unwrap();
            let ak = Element::Quat(QuaternionElement { k, i: k, j: 0 });
            assert_eq!(b2, ak);
            // b a b^-1 = a^-1
            let conj = b
                .compose(&a)
                .unwrap()
                .compose(&b.inverse().unwrap())
                .unwrap();
            assert_eq!(conj, a.inverse().unwrap());
        }
    }

    #[test]
    fn quaternion_structure_for_small_k() {
        for k in 2u16..=4 {
            let all: Vec<Element> = (0..2 * k)
                .flat_map(|i| {
                    (0..2u8).map(move |j| Element::Quat(QuaternionElement { k, i, j }))
                })
                .collect();
            assert_eq!(all.len(), 4 * k as usize);
            let involutions: Vec<&Element> =
                all.iter().filter(|e| e.order() == 2).collect();
            assert_eq!(involutions.len(), 1, "Q_{} involutions", 4 * k);
            let central = involutions[0];
            assert_eq!(
                central,
                &Element::Quat(QuaternionElement { k, i: k, j: 0 })
            );
            // Every element of order 4 squares to the unique involution.
            for e in &all {
                if e.order() == 4 {
                    assert_eq!(&e.compose(e).unwrap(), central);
                }
            }
        }
    }

    #[test]
    fn cross_domain_composition_is_rejected() {
        let p = Element::Perm(Permutation::identity(3));
        let q = Element::Quat(QuaternionElement::identity(2));
        assert!(matches!(
            p.compose(&q),
            Err(Error::DomainMismatch { .. })
        ));
        let p4 = Element::Perm(Permutation::identity(4));
        assert!(matches!(
            p.compose(&p4),
            Err(Error::DomainMismatch { .. })
        ));
        let q3 = Element::Quat(QuaternionElement::identity(3));
        assert!(matches!(
            q.compose(&q3),
            Err(Error::DomainMismatch { .. })
        ));
    }

    fn element_strategy() -> impl Strategy<Value = Element> {
        prop_oneof![
            (any::<u64>()).prop_map(|s| Element::Perm(perm_from_seed(s, 6))),
            (2u16..6, any::<u16>(), 0u8..2).prop_map(|(k, i, j)| Element::Quat(
                QuaternionElement {
                    k,
                    i: i % (2 * k),
                    j,
                }
            )),
            (any::<u64>(), any::<u16>(), 0u8..2).prop_map(|(s, i, j)| Element::pair(
                Element::Perm(perm_from_seed(s, 5)),
                Element::Quat(QuaternionElement {
                    k: 3,
                    i: i % 6,
                    j,
                }),
            )),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 10_000, ..ProptestConfig::default() })]

        #[test]
        fn associativity(a in element_strategy(), b in element_strategy(), c in element_strategy()) {
            let ab = a.compose(&b);
            let bc = b.compose(&c);
            match (ab, bc) {
                (Ok(ab), Ok(bc)) => {
                    prop_assert_eq!(ab.compose(&c).unwrap(), a.compose(&bc).unwrap());
                }
                (Err(_), Err(_)) => {}
                (Ok(ab), Err(_)) => {
                    // a and b share a domain that c does not.
                    prop_assert!(ab.compose(&c).is_err());
                }
                (Err(_), Ok(bc)) => {
                    prop_assert!(a.compose(&bc).is_err());
                }
            }
        }

        #[test]
        fn inverse_law(a in element_strategy()) {
            let inv = a.inverse().unwrap();
            prop_assert!(a.compose(&inv).unwrap().is_identity());
            prop_assert!(inv.compose(&a).unwrap().is_identity());
        }

        #[test]
        fn encoding_is_injective(a in element_strategy(), b in element_strategy()) {
            prop_assert_eq!(a == b, a.canonical_encode() == b.canonical_encode());
        }

        #[test]
        fn identity_is_neutral(a in element_strategy()) {
            let id = a.identity_like();
            prop_assert_eq!(a.compose(&id).unwrap(), a.clone());
            prop_assert_eq!(id.compose(&a).unwrap(), a.clone());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 2000, ..ProptestConfig::default() })]

        #[test]
        fn perm_order_matches_repeated_composition(s in any::<u64>(), degree in 1u16..=12) {
            let e = Element::Perm(perm_from_seed(s, degree));
            let fast = e.order(); // cycle-length lcm shortcut
            let id = e.identity_like();
            let mut acc = e.clone();
            let mut n = 1u64;
            while acc != id {
                acc = acc.compose(&e).unwrap();
                n += 1;
            }
            prop_assert_eq!(fast, n);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 300, ..ProptestConfig::default() })]

        #[test]
        fn pair_order_matches_repeated_composition(
            s in any::<u64>(),
            i in any::<u16>(),
            j in 0u8..2,
        ) {
            let e = Element::pair(
                Element::Perm(perm_from_seed(s, 7)),
                Element::Quat(QuaternionElement { k: 4, i: i % 8, j }),
            );
            let fast = e.order();
            let id = e.identity_like();
            let mut acc = e.clone();
            let mut n = 1u64;
            while acc != id {
                acc = acc.compose(&e).unwrap();
                n += 1;
            }
            prop_assert_eq!(fast, n);
        }
    }
}
