//! Matroids represented by their circuit families.

use std::fmt;

use crate::error::{Error, Result};
use crate::ground::{GroundSet, Label};
use crate::set::{self, Set};

/// A matroid on a labeled ground set, stored as its family of circuits.
///
/// Circuits are bitmasks over the ground set's internal indices, kept in
/// canonical order (by size, then value). Two matroids compare equal exactly
/// when they have the same labels and the same circuits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    ground: GroundSet,
    circuits: Vec<Set>,
    rank: usize,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let circuits: Vec<Vec<&str>> = self
            .circuits
            .iter()
            .map(|&c| {
                set::elements(c)
                    .map(|i| self.ground.label(i).as_str())
                    .collect()
            })
            .collect();
        f.debug_struct("Matroid")
            .field(
                "ground",
                &self
                    .ground
                    .labels()
                    .iter()
                    .map(Label::as_str)
                    .collect::<Vec<_>>(),
            )
            .field("circuits", &circuits)
            .field("rank", &self.rank)
            .finish()
    }
}

/// One class of the series partition. Coloops form their own flagged
/// singleton classes and are not series classes proper.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesClass {
    pub elements: Vec<Label>,
    pub mask: Set,
    pub coloop: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesClassPartition {
    classes: Vec<SeriesClass>,
}

impl SeriesClassPartition {
    /// The series classes (coloop singletons excluded).
    pub fn classes(&self) -> impl Iterator<Item = &SeriesClass> {
        self.classes.iter().filter(|c| !c.coloop)
    }

    /// Every class including flagged coloop singletons.
    pub fn all(&self) -> &[SeriesClass] {
        &self.classes
    }
}

impl Matroid {
    /// Builds and validates a matroid from an explicit circuit list, with the
    /// default size cap.
    pub fn from_circuits<I, C, L>(ground: GroundSet, circuits: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: IntoIterator<Item = L>,
        L: Into<Label>,
    {
        Self::from_circuits_with_cap(ground, circuits, set::DEFAULT_CAP)
    }

    pub fn from_circuits_with_cap<I, C, L>(
        ground: GroundSet,
        circuits: I,
        cap: usize,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: IntoIterator<Item = L>,
        L: Into<Label>,
    {
        check_cap(ground.len(), cap)?;
        let mut masks = Vec::new();
        for c in circuits {
            let labels: Vec<Label> = c.into_iter().map(Into::into).collect();
            masks.push(ground.mask_of(&labels)?);
        }
        Self::from_masks(ground, masks)
    }

    /// Builds and validates a matroid from circuit bitmasks.
    pub fn from_masks(ground: GroundSet, circuits: Vec<Set>) -> Result<Self> {
        if circuits.iter().any(|&c| c & !ground.full() != 0) {
            return Err(Error::BadParameters(
                "circuit outside the ground set".into(),
            ));
        }
        let m = Self::from_masks_unchecked(ground, circuits);
        m.validate()?;
        Ok(m)
    }

    /// Builds a matroid whose circuit family is known to satisfy the axioms.
    /// Duplicates are removed; no other checking happens.
    pub(crate) fn from_masks_unchecked(ground: GroundSet, mut circuits: Vec<Set>) -> Self {
        set::sort_family(&mut circuits);
        let mut m = Matroid {
            ground,
            circuits,
            rank: 0,
        };
        m.rank = m.rank_of_mask(m.ground.full());
        m
    }

    /// The free matroid (no circuits) on the given labels.
    pub fn free(ground: GroundSet) -> Self {
        Self::from_masks_unchecked(ground, Vec::new())
    }

    /// The matroid whose ground set is a single circuit.
    pub fn circuit(ground: GroundSet) -> Result<Self> {
        if ground.is_empty() {
            return Err(Error::EmptyCircuit);
        }
        let full = ground.full();
        Ok(Self::from_masks_unchecked(ground, vec![full]))
    }

    /// Checks the circuit axioms: nonempty members, antichain, and weak
    /// circuit elimination (exhaustively over all pairs).
    pub fn validate(&self) -> Result<()> {
        let c = &self.circuits;
        if c.contains(&0) {
            return Err(Error::EmptyCircuit);
        }
        for (i, &a) in c.iter().enumerate() {
            for &b in &c[i + 1..] {
                if set::is_subset(a, b) || set::is_subset(b, a) {
                    return Err(Error::AxiomViolation(format!(
                        "{} and {} are nested",
                        self.fmt_set(a),
                        self.fmt_set(b)
                    )));
                }
                for e in set::elements(a & b) {
                    let target = (a | b) & !set::bit(e);
                    if !c.iter().any(|&d| set::is_subset(d, target)) {
                        return Err(Error::AxiomViolation(format!(
                            "elimination fails for {} and {} at {}",
                            self.fmt_set(a),
                            self.fmt_set(b),
                            self.ground.label(e)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub(crate) fn fmt_set(&self, s: Set) -> String {
        let names: Vec<&str> = set::elements(s)
            .map(|i| self.ground.label(i).as_str())
            .collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn circuit_masks(&self) -> &[Set] {
        &self.circuits
    }

    pub fn circuits(&self) -> Vec<Vec<Label>> {
        self.circuits
            .iter()
            .map(|&c| self.ground.labels_of(c))
            .collect()
    }

    pub fn mask(&self, labels: &[Label]) -> Result<Set> {
        self.ground.mask_of(labels)
    }

    /// Rank of the whole matroid.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_independent_mask(&self, x: Set) -> bool {
        !self.circuits.iter().any(|&c| set::is_subset(c, x))
    }

    pub fn is_independent(&self, labels: &[Label]) -> Result<bool> {
        Ok(self.is_independent_mask(self.mask(labels)?))
    }

    /// Greedy rank: grow an independent set element by element.
    pub fn rank_of_mask(&self, x: Set) -> usize {
        let mut indep: Set = 0;
        let mut r = 0;
        for e in set::elements(x) {
            let b = set::bit(e);
            let cand = indep | b;
            if !self
                .circuits
                .iter()
                .any(|&c| c & b != 0 && set::is_subset(c, cand))
            {
                indep = cand;
                r += 1;
            }
        }
        r
    }

    pub fn rank_of(&self, labels: &[Label]) -> Result<usize> {
        Ok(self.rank_of_mask(self.mask(labels)?))
    }

    pub fn loop_mask(&self) -> Set {
        self.circuits
            .iter()
            .filter(|c| c.count_ones() == 1)
            .fold(0, |acc, &c| acc | c)
    }

    /// Coloops are exactly the elements lying on no circuit.
    pub fn coloop_mask(&self) -> Set {
        let covered = self.circuits.iter().fold(0, |acc, &c| acc | c);
        self.ground.full() & !covered
    }

    pub fn loops(&self) -> Vec<Label> {
        self.ground.labels_of(self.loop_mask())
    }

    pub fn coloops(&self) -> Vec<Label> {
        self.ground.labels_of(self.coloop_mask())
    }

    pub fn has_loops(&self) -> bool {
        self.loop_mask() != 0
    }

    pub fn is_loop(&self, e: &Label) -> Result<bool> {
        Ok(self.loop_mask() & self.mask(std::slice::from_ref(e))? != 0)
    }

    pub fn is_coloop(&self, e: &Label) -> Result<bool> {
        Ok(self.coloop_mask() & self.mask(std::slice::from_ref(e))? != 0)
    }

    /// The dual matroid. A set is dependent in the dual iff its complement
    /// does not span, so dual circuits are the minimal sets whose complement
    /// misses a basis.
    pub fn dual(&self) -> Matroid {
        let n = self.len();
        let full = self.ground.full();
        let r = self.rank;
        let circuits =
            set::minimal_dependent_sets(n, n - r + 1, |x| self.rank_of_mask(full & !x) < r);
        Self::from_masks_unchecked(self.ground.clone(), circuits)
    }

    /// Keeps only the elements in `keep`; every circuit must lie inside it.
    fn reindexed(&self, keep: Set, circuits: impl IntoIterator<Item = Set>) -> Matroid {
        let ground = self.ground.restrict(keep);
        let circuits = circuits
            .into_iter()
            .map(|c| set::compress(c, keep))
            .collect();
        Self::from_masks_unchecked(ground, circuits)
    }

    pub fn delete_mask(&self, x: Set) -> Matroid {
        let keep = self.ground.full() & !x;
        self.reindexed(
            keep,
            self.circuits
                .iter()
                .copied()
                .filter(|&c| set::is_subset(c, keep)),
        )
    }

    pub fn delete(&self, labels: &[Label]) -> Result<Matroid> {
        Ok(self.delete_mask(self.mask(labels)?))
    }

    /// Circuits of `M/X` are the minimal nonempty sets `C - X`.
    pub fn contract_mask(&self, x: Set) -> Matroid {
        let keep = self.ground.full() & !x;
        let family: Vec<Set> = self
            .circuits
            .iter()
            .map(|&c| c & keep)
            .filter(|&c| c != 0)
            .collect();
        self.reindexed(keep, set::minimalize(family))
    }

    pub fn contract(&self, labels: &[Label]) -> Result<Matroid> {
        Ok(self.contract_mask(self.mask(labels)?))
    }

    /// Connected components as masks, ordered by least element. Elements on
    /// no circuit (coloops) are singletons.
    pub fn component_masks(&self) -> Vec<Set> {
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &c in &self.circuits {
            let mut it = set::elements(c);
            if let Some(first) = it.next() {
                for e in it {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, e));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut comps: Vec<Set> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for e in 0..n {
            let root = find(&mut parent, e);
            if slot[root] == usize::MAX {
                slot[root] = comps.len();
                comps.push(0);
            }
            comps[slot[root]] |= set::bit(e);
        }
        comps
    }

    pub fn components(&self) -> Vec<Vec<Label>> {
        self.component_masks()
            .into_iter()
            .map(|c| self.ground.labels_of(c))
            .collect()
    }

    /// Connected means at most one component; the empty matroid counts as
    /// connected.
    pub fn is_connected(&self) -> bool {
        self.component_masks().len() <= 1
    }

    /// Partition of the ground set into series classes. Two non-coloops
    /// `e, f` are in series iff `{e, f}` is a cocircuit, i.e. removing both
    /// drops the rank while removing either alone does not.
    pub fn series_classes(&self) -> Result<SeriesClassPartition> {
        if self.has_loops() {
            return Err(Error::HasLoops);
        }
        let n = self.len();
        let full = self.ground.full();
        let r = self.rank;
        let coloops = self.coloop_mask();
        let mut class_of: Vec<usize> = (0..n).collect();
        let non_coloops: Vec<usize> = (0..n).filter(|&e| !set::contains(coloops, e)).collect();
        for (k, &e) in non_coloops.iter().enumerate() {
            if class_of[e] != e {
                continue;
            }
            for &f in &non_coloops[k + 1..] {
                if class_of[f] == f
                    && self.rank_of_mask(full & !set::bit(e) & !set::bit(f)) + 1 == r
                {
                    class_of[f] = e;
                }
            }
        }
        let mut classes = Vec::new();
        for e in 0..n {
            if class_of[e] != e {
                continue;
            }
            let mask = (0..n)
                .filter(|&f| class_of[f] == e)
                .fold(0, |acc, f| acc | set::bit(f));
            classes.push(SeriesClass {
                elements: self.ground.labels_of(mask),
                mask,
                coloop: set::contains(coloops, e),
            });
        }
        Ok(SeriesClassPartition { classes })
    }

    /// Series classes `S` for which `M - S` is still connected.
    pub fn removable_series_classes(&self) -> Result<Vec<Vec<Label>>> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        if self.len() < 2 {
            return Err(Error::PreconditionViolation(
                "removable series classes need at least two elements".into(),
            ));
        }
        Ok(self
            .series_classes()?
            .classes()
            .filter(|s| self.delete_mask(s.mask).is_connected())
            .map(|s| s.elements.clone())
            .collect())
    }

    /// Renames every element. The map must be injective on the ground set.
    pub fn relabel(&self, mut f: impl FnMut(&Label) -> Label) -> Result<Matroid> {
        let new_labels: Vec<Label> = self.ground.labels().iter().map(&mut f).collect();
        let ground = GroundSet::new(new_labels.iter().cloned())?;
        let circuits = self
            .circuits
            .iter()
            .map(|&c| {
                set::elements(c).fold(0, |acc, i| {
                    acc | set::bit(ground.index_of(&new_labels[i]).expect("relabeled element"))
                })
            })
            .collect();
        Ok(Self::from_masks_unchecked(ground, circuits))
    }

    /// Embeds both matroids in the union of their ground sets, returning the
    /// union and each circuit family re-indexed into it.
    fn union_ground(&self, other: &Matroid) -> Result<(GroundSet, Vec<Set>, Vec<Set>)> {
        let mut labels: Vec<Label> = self.ground.labels().to_vec();
        labels.extend(
            other
                .ground
                .labels()
                .iter()
                .filter(|l| !self.ground.contains(l))
                .cloned(),
        );
        let ground = GroundSet::new(labels)?;
        let lift = |m: &Matroid| -> Vec<Set> {
            m.circuits
                .iter()
                .map(|&c| {
                    ground
                        .mask_of(&m.ground.labels_of(c))
                        .expect("subset of union")
                })
                .collect()
        };
        let (a, b) = (lift(self), lift(other));
        Ok((ground, a, b))
    }

    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        if other
            .ground
            .labels()
            .iter()
            .any(|l| self.ground.contains(l))
        {
            return Err(Error::OverlappingGroundSets);
        }
        let (ground, mut a, b) = self.union_ground(other)?;
        a.extend(b);
        Ok(Self::from_masks_unchecked(ground, a))
    }

    /// Parallel connection at basepoint `e`.
    pub fn parallel_connection(&self, other: &Matroid, e: &Label) -> Result<Matroid> {
        let shared: Vec<&Label> = other
            .ground
            .labels()
            .iter()
            .filter(|l| self.ground.contains(l))
            .collect();
        if shared != [e] {
            return Err(Error::BadBasepoint(format!(
                "ground sets must meet exactly in {{{e}}}"
            )));
        }
        for m in [self, other] {
            if m.is_loop(e)? || m.is_coloop(e)? {
                return Err(Error::BadBasepoint(format!("{e} is a loop or coloop")));
            }
        }
        let (ground, a, b) = self.union_ground(other)?;
        let eb = set::bit(ground.index_of(e).expect("basepoint in union"));
        let mut family: Vec<Set> = a.iter().chain(b.iter()).copied().collect();
        for &c1 in a.iter().filter(|&&c| c & eb != 0) {
            for &c2 in b.iter().filter(|&&c| c & eb != 0) {
                family.push((c1 | c2) & !eb);
            }
        }
        Ok(Self::from_masks_unchecked(ground, set::minimalize(family)))
    }

    /// 2-sum: the parallel connection with the basepoint deleted.
    pub fn two_sum(&self, other: &Matroid, e: &Label) -> Result<Matroid> {
        self.parallel_connection(other, e)?
            .delete(std::slice::from_ref(e))
    }
}

pub(crate) fn check_cap(size: usize, cap: usize) -> Result<()> {
    let cap = cap.min(set::MAX_ELEMENTS);
    if size > cap {
        return Err(Error::TooLarge { size, cap });
    }
    Ok(())
}
