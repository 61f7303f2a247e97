//! Automorphisms by backtracking over generator images.

use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::error::{Error, Result};

use super::group::{group_from_permutations, FiniteGroup, DEFAULT_CAP};
use super::permutation::Permutation;

/// Largest group the search is meant for.
pub const MAX_AUTOMORPHISM_ORDER: usize = 64;

/// A structure-preserving map between two groups, given by element images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    pub images: Vec<usize>,
}

impl Homomorphism {
    /// Exhaustive check of `φ(xy) = φ(x)φ(y)`.
    pub fn is_homomorphism(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        let n = source.order();
        self.images.len() == n
            && self.images.iter().all(|&y| y < target.order())
            && (0..n).all(|x| {
                (0..n).all(|y| self.images[source.mul(x, y)] == target.mul(self.images[x], self.images[y]))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    pub map: Homomorphism,
    /// Equal to conjugation by some element.
    pub inner: bool,
    /// Order as a permutation of the elements.
    pub order: usize,
}

#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    /// The automorphisms acting as permutations of the element indices.
    pub group: FiniteGroup,
    /// Sorted by image list, identity first.
    pub automorphisms: Vec<Automorphism>,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.automorphisms.len()
    }

    pub fn inner_count(&self) -> usize {
        self.automorphisms.iter().filter(|a| a.inner).count()
    }

    /// Map from automorphism order to how many automorphisms have it.
    pub fn order_census(&self) -> BTreeMap<usize, usize> {
        let mut census = BTreeMap::new();
        for a in &self.automorphisms {
            *census.entry(a.order).or_insert(0) += 1;
        }
        census
    }
}

fn permutation_order(images: &[usize]) -> usize {
    let p = Permutation::new(images.to_vec()).expect("automorphism is a bijection");
    p.cycles().iter().fold(1, |acc, c| num_integer::lcm(acc, c.len()))
}

/// Extends generator images along every edge `x → x·g`; `None` on any conflict.
fn extend(g: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (&gen, &img) in gens.iter().zip(images) {
            let y = g.mul(x, gen);
            let fy = g.mul(map[x], img);
            if map[y] == usize::MAX {
                if used[fy] {
                    return None;
                }
                map[y] = fy;
                used[fy] = true;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// All automorphisms of `g`, with inner ones flagged, and the permutation group they form.
pub fn automorphism_group(g: &FiniteGroup) -> Result<AutomorphismGroup> {
    if g.order() > MAX_AUTOMORPHISM_ORDER {
        return Err(Error::InvalidInput(format!(
            "automorphism search limited to order {MAX_AUTOMORPHISM_ORDER}, got {}",
            g.order()
        )));
    }
    let n = g.order();
    let gens: Vec<usize> = g.generators().to_vec();
    let sizes = g.class_sizes();
    let profile = |x: usize| (g.element_order(x), sizes[g.class_of(x)]);
    let candidates: Vec<Vec<usize>> =
        gens.iter().map(|&s| (0..n).filter(|&y| profile(y) == profile(s)).collect()).collect();

    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(gens.len());
    search(g, &gens, &candidates, &mut chosen, &mut found);

    let mut inner_maps: HashSet<Vec<usize>> = HashSet::new();
    for c in 0..n {
        inner_maps.insert((0..n).map(|x| g.conjugate(c, x)).collect());
    }
    found.sort();
    found.dedup();
    let automorphisms: Vec<Automorphism> = found
        .iter()
        .map(|images| Automorphism {
            inner: inner_maps.contains(images),
            order: permutation_order(images),
            map: Homomorphism { images: images.clone() },
        })
        .collect();
    let perms: Vec<Permutation> =
        found.iter().map(|im| Permutation::new(im.clone()).expect("bijection")).collect();
    let mut group = group_from_permutations(&perms, DEFAULT_CAP)?;
    group.set_name(&format!("Aut({})", g.name()));
    Ok(AutomorphismGroup { group, automorphisms })
}

fn search(
    g: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    let depth = chosen.len();
    if depth > 0 && extend(g, &gens[..depth], chosen).is_none() {
        return;
    }
    if depth == gens.len() {
        if let Some(map) = extend(g, gens, chosen) {
            if map.iter().all(|&v| v != usize::MAX) {
                found.push(map);
            }
        }
        return;
    }
    for &c in &candidates[depth] {
        chosen.push(c);
        search(g, gens, candidates, chosen, found);
        chosen.pop();
    }
}
