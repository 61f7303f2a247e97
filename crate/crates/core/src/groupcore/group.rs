use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::cycarith::CycMatrix;
use crate::error::{Error, Result};

use super::closure::{closure, GroupPayload};
use super::permutation::Permutation;
use super::quaternion::Quaternion;

/// Closure cap used when none is given.
pub const DEFAULT_CAP: usize = 10_000;

/// What a group element is, when it is more than a row of the Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Quaternion(Quaternion),
    Permutation(Permutation),
    Matrix(CycMatrix),
    /// Row index in the user-supplied Cayley table.
    Abstract(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Smallest member index.
    pub representative: usize,
    /// Sorted member indices.
    pub members: Vec<usize>,
    /// Common element order of the members.
    pub order: usize,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A finite group with its Cayley table and class data.
///
/// Element 0 is the identity; the remaining elements are sorted by element order and then
/// by payload, so construction is reproducible.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    payloads: Vec<Payload>,
    labels: Vec<String>,
    cayley: Vec<usize>,
    inverse: Vec<usize>,
    element_order: Vec<usize>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    generators: Vec<usize>,
    generator_names: Vec<String>,
}

/// Group data before canonical reordering.
struct RawGroup {
    payloads: Vec<Payload>,
    labels: Vec<String>,
    cayley: Vec<usize>,
    identity: usize,
    generators: Vec<usize>,
}

fn orders_from_table(n: usize, cayley: &[usize], identity: usize) -> Vec<usize> {
    (0..n)
        .map(|x| {
            let (mut y, mut k) = (x, 1);
            while y != identity {
                y = cayley[y * n + x];
                k += 1;
            }
            k
        })
        .collect()
}

impl RawGroup {
    /// Reorders to canonical form: identity, then by (order, `tie`).
    fn canonicalize(
        self,
        name: String,
        generator_names: Vec<String>,
        tie: impl Fn(usize, usize) -> Ordering,
    ) -> FiniteGroup {
        let n = self.payloads.len();
        let orders = orders_from_table(n, &self.cayley, self.identity);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by(|&x, &y| {
            (x != self.identity)
                .cmp(&(y != self.identity))
                .then(orders[x].cmp(&orders[y]))
                .then_with(|| tie(x, y))
        });
        let mut new_index = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            new_index[old] = new;
        }
        let mut cayley = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                cayley[new_index[x] * n + new_index[y]] = new_index[self.cayley[x * n + y]];
            }
        }
        let payloads = perm.iter().map(|&o| self.payloads[o].clone()).collect();
        let labels = perm.iter().map(|&o| self.labels[o].clone()).collect();
        let generators = self.generators.iter().map(|&g| new_index[g]).collect();
        FiniteGroup::from_canonical_table(name, payloads, labels, cayley, generators, generator_names)
    }
}

fn build_from_payloads<T: GroupPayload>(
    name: String,
    identity: T,
    gens: &[T],
    cap: usize,
    wrap: impl Fn(&T) -> Payload,
    label: impl Fn(&T) -> String,
    generator_names: Vec<String>,
) -> Result<FiniteGroup> {
    let elements = closure(identity, gens, cap)?;
    let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let n = elements.len();
    let mut cayley = vec![0; n * n];
    for (x, ex) in elements.iter().enumerate() {
        for (y, ey) in elements.iter().enumerate() {
            cayley[x * n + y] = index[&ex.compose(ey)];
        }
    }
    let mut generators: Vec<usize> = Vec::new();
    for g in gens {
        let gi = index[g];
        if !generators.contains(&gi) {
            generators.push(gi);
        }
    }
    let raw = RawGroup {
        payloads: elements.iter().map(&wrap).collect(),
        labels: elements.iter().map(&label).collect(),
        cayley,
        identity: 0,
        generators,
    };
    Ok(raw.canonicalize(name, generator_names, |x, y| elements[x].cmp(&elements[y])))
}

/// Closure of nonzero quaternions under multiplication.
pub fn group_from_quaternions(generators: &[Quaternion], cap: usize) -> Result<FiniteGroup> {
    named_group_from_quaternions("", generators, &[], cap)
}

pub fn named_group_from_quaternions(
    name: &str,
    generators: &[Quaternion],
    generator_names: &[String],
    cap: usize,
) -> Result<FiniteGroup> {
    if generators.iter().any(Quaternion::is_zero) {
        return Err(Error::InvalidInput("zero quaternion generator".into()));
    }
    build_from_payloads(
        name.to_string(),
        Quaternion::one(),
        generators,
        cap,
        |q| Payload::Quaternion(q.clone()),
        ToString::to_string,
        generator_names.to_vec(),
    )
}

/// Closure of permutations of a common point set; `p·q` applies `p` first.
pub fn group_from_permutations(generators: &[Permutation], cap: usize) -> Result<FiniteGroup> {
    named_group_from_permutations("", generators, &[], cap)
}

pub fn named_group_from_permutations(
    name: &str,
    generators: &[Permutation],
    generator_names: &[String],
    cap: usize,
) -> Result<FiniteGroup> {
    let degree = generators.first().map_or(0, Permutation::degree);
    if generators.iter().any(|g| g.degree() != degree) {
        return Err(Error::InvalidInput("permutations act on different point sets".into()));
    }
    build_from_payloads(
        name.to_string(),
        Permutation::identity(degree),
        generators,
        cap,
        |p| Payload::Permutation(p.clone()),
        ToString::to_string,
        generator_names.to_vec(),
    )
}

/// The matrix group generated by invertible square matrices, as an abstract group.
pub fn group_from_matrices(generators: &[CycMatrix], cap: usize) -> Result<FiniteGroup> {
    let (n, gens) = super::closure::checked_matrix_generators(generators)?;
    build_from_payloads(
        String::new(),
        CycMatrix::identity(n),
        &gens,
        cap,
        |m| Payload::Matrix(m.clone()),
        |_| String::new(),
        Vec::new(),
    )
    .map(|mut g| {
        g.labels = (0..g.order()).map(|i| format!("m{i}")).collect();
        g
    })
}

/// A group from an explicit multiplication table, validated exhaustively.
///
/// `table[x][y]` is the index of `x·y`. Labels default to `g0`, `g1`, … by input row.
pub fn group_from_cayley(name: &str, table: &[Vec<usize>], labels: Option<&[String]>) -> Result<FiniteGroup> {
    let n = table.len();
    if n == 0 {
        return Err(Error::InvalidInput("empty Cayley table".into()));
    }
    if table.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
        return Err(Error::InvalidInput("Cayley table must be square with entries in range".into()));
    }
    if let Some(l) = labels {
        if l.len() != n {
            return Err(Error::InvalidInput("label count must match table size".into()));
        }
    }
    let flat: Vec<usize> = table.iter().flatten().copied().collect();
    let at = |x: usize, y: usize| flat[x * n + y];
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
        .ok_or_else(|| Error::InvalidInput("Cayley table has no identity".into()))?;
    for x in 0..n {
        let row: HashSet<usize> = (0..n).map(|y| at(x, y)).collect();
        let col: HashSet<usize> = (0..n).map(|y| at(y, x)).collect();
        if row.len() != n || col.len() != n {
            return Err(Error::InvalidInput("Cayley table is not a Latin square".into()));
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = at(x, y);
            for z in 0..n {
                if at(xy, z) != at(x, at(y, z)) {
                    return Err(Error::InvalidInput(format!("Cayley table not associative at ({x},{y},{z})")));
                }
            }
        }
    }
    let labels: Vec<String> = match labels {
        Some(l) => l.to_vec(),
        None => (0..n).map(|i| format!("g{i}")).collect(),
    };
    let raw = RawGroup {
        payloads: (0..n).map(Payload::Abstract).collect(),
        labels,
        cayley: flat,
        identity,
        generators: Vec::new(),
    };
    let mut g = raw.canonicalize(name.to_string(), Vec::new(), |x, y| x.cmp(&y));
    g.generators = g.greedy_generating_set();
    Ok(g)
}

impl FiniteGroup {
    fn from_canonical_table(
        name: String,
        payloads: Vec<Payload>,
        labels: Vec<String>,
        cayley: Vec<usize>,
        generators: Vec<usize>,
        generator_names: Vec<String>,
    ) -> Self {
        let n = payloads.len();
        let element_order = orders_from_table(n, &cayley, 0);
        let inverse = (0..n).map(|x| (0..n).find(|&y| cayley[x * n + y] == 0).expect("group has inverses")).collect();
        let mut g = FiniteGroup {
            name,
            payloads,
            labels,
            cayley,
            inverse,
            element_order,
            classes: Vec::new(),
            class_of: Vec::new(),
            generators,
            generator_names,
        };
        g.compute_classes();
        g
    }

    fn compute_classes(&mut self) {
        let n = self.order();
        let center: HashSet<usize> = self.center().into_iter().collect();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if assigned[x] {
                continue;
            }
            let mut members: Vec<usize> = (0..n).map(|g| self.conjugate(g, x)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                assigned[m] = true;
            }
            classes.push(ConjugacyClass { representative: members[0], order: self.element_order[x], members });
        }
        let order_mod_center = |x: usize| {
            let (mut y, mut k) = (x, 1);
            while !center.contains(&y) {
                y = self.mul(y, x);
                k += 1;
            }
            k
        };
        classes.sort_by_key(|c| (order_mod_center(c.representative), c.order, c.size(), c.representative));
        let mut class_of = vec![0; n];
        for (ci, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m] = ci;
            }
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    fn greedy_generating_set(&self) -> Vec<usize> {
        let mut candidates: Vec<usize> = (1..self.order()).collect();
        candidates.sort_by_key(|&x| (std::cmp::Reverse(self.element_order[x]), x));
        let mut gens = Vec::new();
        let mut span: HashSet<usize> = HashSet::from([0]);
        for x in candidates {
            if span.len() == self.order() {
                break;
            }
            if !span.contains(&x) {
                gens.push(x);
                span = self.subgroup_generated(&gens).into_iter().collect();
            }
        }
        gens
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: &str) {
        self.name = name.to_string();
    }

    pub fn order(&self) -> usize {
        self.payloads.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.cayley[x * self.order() + y]
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x]
    }

    /// `x^k`, negative exponents allowed.
    pub fn pow(&self, x: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(x) } else { x };
        let e = k.unsigned_abs() % self.element_order[x] as u64;
        (0..e).fold(0, |acc, _| self.mul(acc, base))
    }

    /// `g·x·g⁻¹`
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, x: usize) -> usize {
        self.element_order[x]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.element_order
    }

    pub fn exponent(&self) -> usize {
        self.element_order.iter().fold(1, |acc, &o| num_integer::lcm(acc, o))
    }

    pub fn cayley_row(&self, x: usize) -> &[usize] {
        let n = self.order();
        &self.cayley[x * n..(x + 1) * n]
    }

    pub fn payload(&self, x: usize) -> &Payload {
        &self.payloads[x]
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn find_quaternion(&self, q: &Quaternion) -> Option<usize> {
        self.payloads.iter().position(|p| matches!(p, Payload::Quaternion(x) if x == q))
    }

    pub fn find_permutation(&self, p: &Permutation) -> Option<usize> {
        self.payloads.iter().position(|x| matches!(x, Payload::Permutation(y) if y == p))
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Names attached to the generators, when the definition supplied them.
    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    /// Element index for a named generator.
    pub fn generator_by_name(&self, name: &str) -> Option<usize> {
        self.generator_names.iter().position(|n| n == name).and_then(|i| self.generators.get(i).copied())
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ConjugacyClass::size).collect()
    }

    pub fn class_orders(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.order).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (x + 1..n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// `{z : z·g = g·z for all g}`, sorted.
    pub fn center(&self) -> Vec<usize> {
        let n = self.order();
        (0..n).filter(|&z| (0..n).all(|g| self.mul(z, g) == self.mul(g, z))).collect()
    }

    /// Sorted element indices of the subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order()).filter(|&x| seen[x]).collect()
    }

    /// Exhaustive check of identity, inverses and associativity on the stored table.
    pub fn verify_axioms(&self) -> bool {
        let n = self.order();
        let identity_ok = (0..n).all(|x| self.mul(0, x) == x && self.mul(x, 0) == x);
        let inverse_ok = (0..n).all(|x| self.mul(x, self.inv(x)) == 0 && self.mul(self.inv(x), x) == 0);
        identity_ok
            && inverse_ok
            && (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z)))))
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order())
            .field("class_sizes", &self.class_sizes())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q8() -> FiniteGroup {
        group_from_quaternions(&[Quaternion::i(), Quaternion::j()], DEFAULT_CAP).unwrap()
    }

    fn binary_tetrahedral() -> FiniteGroup {
        group_from_quaternions(&[Quaternion::i(), Quaternion::w()], DEFAULT_CAP).unwrap()
    }

    fn z3() -> FiniteGroup {
        group_from_permutations(&[Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap()], DEFAULT_CAP).unwrap()
    }

    /// Class sizes by brute force, independent of the stored classes.
    fn brute_class_sizes(g: &FiniteGroup) -> Vec<usize> {
        let n = g.order();
        let mut sizes = Vec::new();
        let mut seen = HashSet::new();
        for x in 0..n {
            let orbit: std::collections::BTreeSet<usize> = (0..n).map(|y| g.conjugate(y, x)).collect();
            if seen.insert(orbit.clone()) {
                sizes.push(orbit.len());
            }
        }
        sizes.sort_unstable();
        sizes
    }

    #[test]
    fn q8_structure() {
        let g = q8();
        assert_eq!(g.order(), 8);
        assert!(g.verify_axioms());
        assert_eq!(g.class_sizes(), vec![1, 1, 2, 2, 2]);
        assert_eq!(brute_class_sizes(&g), vec![1, 1, 2, 2, 2]);
        let center: Vec<&str> = g.center().iter().map(|&z| g.label(z)).collect();
        assert_eq!(center, vec!["1", "-1"]);
    }

    #[test]
    fn binary_tetrahedral_classes() {
        let g = binary_tetrahedral();
        assert_eq!(g.order(), 24);
        assert!(g.verify_axioms());
        assert_eq!(g.class_sizes(), vec![1, 1, 6, 4, 4, 4, 4]);
        assert_eq!(g.class_orders(), vec![1, 2, 4, 3, 3, 6, 6]);
        assert_eq!(g.center().len(), 2);
        assert_eq!(g.exponent(), 12);
        let mut six: Vec<&str> = g.classes()[2].members.iter().map(|&m| g.label(m)).collect();
        six.sort_unstable();
        assert_eq!(six, vec!["-i", "-j", "-k", "i", "j", "k"]);
    }

    #[test]
    fn redundant_generator_gives_same_group() {
        let a = group_from_quaternions(&[Quaternion::i(), Quaternion::j(), Quaternion::w()], DEFAULT_CAP).unwrap();
        let b = binary_tetrahedral();
        assert_eq!(a.labels(), b.labels());
        assert_eq!(a.cayley_row(5), b.cayley_row(5));
    }

    #[test]
    fn trivial_and_cyclic() {
        let t = group_from_quaternions(&[Quaternion::one()], DEFAULT_CAP).unwrap();
        assert_eq!(t.order(), 1);
        let z = z3();
        assert_eq!(z.order(), 3);
        assert!(z.is_abelian());
        assert_eq!(z.class_sizes(), vec![1, 1, 1]);
        assert_eq!(z.center().len(), 3);
        let id = group_from_permutations(&[Permutation::identity(4)], DEFAULT_CAP).unwrap();
        assert_eq!(id.order(), 1);
    }

    #[test]
    fn sym4_from_two_generators() {
        let t = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        let c = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let s4 = group_from_permutations(&[t, c], DEFAULT_CAP).unwrap();
        assert_eq!(s4.order(), 24);
        assert!(s4.verify_axioms());
        assert_eq!(brute_class_sizes(&s4), vec![1, 3, 6, 6, 8]);
    }

    #[test]
    fn cayley_input_roundtrip() {
        // Z4 with a shuffled labelling: identity is row 2.
        let perm = [2, 0, 3, 1];
        let n = 4;
        let mut table = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a]][perm[b]] = perm[(a + b) % n];
            }
        }
        let g = group_from_cayley("Z4", &table, None).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.label(0), "g2");
        assert_eq!(g.element_orders(), &[1, 2, 4, 4]);
        assert_eq!(g.subgroup_generated(g.generators()).len(), 4);
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(group_from_cayley("bad", &bad, None).is_err());
    }

    #[test]
    fn closure_is_deterministic() {
        let a = binary_tetrahedral();
        let b = binary_tetrahedral();
        assert_eq!(a, b);
    }

    #[test]
    fn class_partition_invariants() {
        for g in [q8(), binary_tetrahedral(), z3()] {
            assert_eq!(g.class_sizes().iter().sum::<usize>(), g.order());
            assert!(g.class_sizes().iter().all(|s| g.order() % s == 0));
            assert_eq!(g.classes()[0].members, vec![0]);
        }
    }
}
