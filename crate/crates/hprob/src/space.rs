//! Finite probabilistic spaces whose measure takes hyperbolic values.
//!
//! A space is built from named atoms with exact nonnegative weights; the
//! event algebra is the full power set of the atoms, so the measure of an
//! event is just the sum of its atom weights and additivity holds by
//! construction. Construction validates the two axioms that can fail:
//! every weight must lie in the nonnegative cone, and the weights must sum
//! exactly to the declared total mass (`1`, `e`, or `e+`).

use crate::hnum::{HNum, OrderRel};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

/// Declared total mass of a space: the three values the measure of the whole
/// sample space may take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// Total mass `1`: both component measures are classical probabilities.
    Unit,
    /// Total mass `e`: the `e+` component measure is identically zero.
    E,
    /// Total mass `e+`: the `e` component measure is identically zero.
    Edag,
}

impl Regime {
    pub fn mass(self) -> HNum {
        match self {
            Regime::Unit => HNum::one(),
            Regime::E => HNum::e(),
            Regime::Edag => HNum::edag(),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Unit => "unit",
            Regime::E => "e",
            Regime::Edag => "edag",
        }
    }

    pub fn parse(s: &str) -> Option<Regime> {
        match s {
            "unit" => Some(Regime::Unit),
            "e" => Some(Regime::E),
            "edag" => Some(Regime::Edag),
            _ => None,
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A subset of the atoms of a space, held as a sorted set of atom ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Event {
    members: BTreeSet<String>,
}

impl Event {
    pub fn new<I, S>(atoms: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Event {
            members: atoms.into_iter().map(Into::into).collect(),
        }
    }

    pub fn empty() -> Self {
        Event::default()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.members.iter().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, atom: &str) -> bool {
        self.members.contains(atom)
    }

    pub fn is_subset(&self, other: &Event) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_disjoint(&self, other: &Event) -> bool {
        self.members.is_disjoint(&other.members)
    }

    pub fn union(&self, other: &Event) -> Event {
        Event {
            members: self.members.union(&other.members).cloned().collect(),
        }
    }

    pub fn intersection(&self, other: &Event) -> Event {
        Event {
            members: self.members.intersection(&other.members).cloned().collect(),
        }
    }

    pub fn difference(&self, other: &Event) -> Event {
        Event {
            members: self.members.difference(&other.members).cloned().collect(),
        }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, atom) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{atom}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpaceError {
    #[error("a space needs at least one atom")]
    EmptySpace,
    #[error("too many atoms: {count} (limit 128)")]
    AtomLimitExceeded { count: usize },
    #[error("atom ids must be nonempty")]
    EmptyAtomId,
    #[error("duplicate atom id {0:?}")]
    DuplicateAtom(String),
    #[error("weight of atom {atom:?} is {weight} which is not nonnegative")]
    NegativeWeight { atom: String, weight: HNum },
    #[error("total mass is {actual} but the declared regime requires {expected}")]
    MassMismatch { actual: HNum, expected: HNum },
    #[error("unknown atom {0:?}")]
    UnknownAtom(String),
    #[error("first event is not a subset of the second")]
    NotASubset,
    #[error("chain is not decreasing at position {position}")]
    NotDecreasing { position: usize },
    #[error("event list is empty")]
    EmptyEventList,
}

/// A finite sample space with an exact hyperbolic-valued measure.
///
/// Immutable once built apart from the named-event registry, and every
/// operation is a pure read, so values can be shared freely across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbSpace {
    atoms: Vec<String>,
    index: HashMap<String, usize>,
    weights: Vec<HNum>,
    regime: Regime,
    named_events: BTreeMap<String, Event>,
}

impl ProbSpace {
    /// Validates and builds a space from `(atom id, weight)` pairs.
    pub fn build<I, S>(atoms: I, regime: Regime) -> Result<Self, SpaceError>
    where
        I: IntoIterator<Item = (S, HNum)>,
        S: Into<String>,
    {
        let pairs: Vec<(String, HNum)> =
            atoms.into_iter().map(|(id, w)| (id.into(), w)).collect();
        if pairs.is_empty() {
            return Err(SpaceError::EmptySpace);
        }
        if pairs.len() > 128 {
            return Err(SpaceError::AtomLimitExceeded { count: pairs.len() });
        }

        let mut index = HashMap::with_capacity(pairs.len());
        let mut ids = Vec::with_capacity(pairs.len());
        let mut weights = Vec::with_capacity(pairs.len());
        let mut total = HNum::zero();
        for (i, (id, weight)) in pairs.into_iter().enumerate() {
            if id.is_empty() {
                return Err(SpaceError::EmptyAtomId);
            }
            if index.insert(id.clone(), i).is_some() {
                return Err(SpaceError::DuplicateAtom(id));
            }
            if !weight.is_nonneg() {
                return Err(SpaceError::NegativeWeight { atom: id, weight });
            }
            total = total + &weight;
            ids.push(id);
            weights.push(weight);
        }

        let expected = regime.mass();
        if total != expected {
            return Err(SpaceError::MassMismatch {
                actual: total,
                expected,
            });
        }

        Ok(ProbSpace {
            atoms: ids,
            index,
            weights,
            regime,
            named_events: BTreeMap::new(),
        })
    }

    /// Builds without validating the measure axioms. Test hook for feeding
    /// deliberately broken spaces to the verification suite; not part of the
    /// supported API.
    #[doc(hidden)]
    pub fn build_unchecked<I, S>(atoms: I, regime: Regime) -> Self
    where
        I: IntoIterator<Item = (S, HNum)>,
        S: Into<String>,
    {
        let mut index = HashMap::new();
        let mut ids = Vec::new();
        let mut weights = Vec::new();
        for (i, (id, weight)) in atoms.into_iter().enumerate() {
            let id: String = id.into();
            index.insert(id.clone(), i);
            ids.push(id);
            weights.push(weight);
        }
        ProbSpace {
            atoms: ids,
            index,
            weights,
            regime,
            named_events: BTreeMap::new(),
        }
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn atoms(&self) -> impl Iterator<Item = &str> {
        self.atoms.iter().map(String::as_str)
    }

    pub fn weight(&self, atom: &str) -> Option<&HNum> {
        self.index.get(atom).map(|&i| &self.weights[i])
    }

    /// Registers a named event after checking its members exist.
    pub fn register_event<S: Into<String>>(
        &mut self,
        name: S,
        event: Event,
    ) -> Result<(), SpaceError> {
        self.mask_of(&event)?;
        self.named_events.insert(name.into(), event);
        Ok(())
    }

    pub fn named_event(&self, name: &str) -> Option<&Event> {
        self.named_events.get(name)
    }

    pub fn named_events(&self) -> &BTreeMap<String, Event> {
        &self.named_events
    }

    /// The sure event: all atoms.
    pub fn omega(&self) -> Event {
        Event::new(self.atoms.iter().cloned())
    }

    pub fn complement(&self, event: &Event) -> Result<Event, SpaceError> {
        self.mask_of(event)?;
        Ok(Event::new(
            self.atoms.iter().filter(|a| !event.contains(a)).cloned(),
        ))
    }

    pub(crate) fn mask_of(&self, event: &Event) -> Result<u128, SpaceError> {
        let mut mask = 0u128;
        for atom in event.iter() {
            let i = self
                .index
                .get(atom)
                .ok_or_else(|| SpaceError::UnknownAtom(atom.to_string()))?;
            mask |= 1u128 << i;
        }
        Ok(mask)
    }

    pub(crate) fn measure_mask(&self, mut mask: u128) -> HNum {
        let mut total = HNum::zero();
        while mask != 0 {
            let i = mask.trailing_zeros() as usize;
            total = total + &self.weights[i];
            mask &= mask - 1;
        }
        total
    }

    /// The measure of an event: the exact sum of its atom weights.
    pub fn measure(&self, event: &Event) -> Result<HNum, SpaceError> {
        Ok(self.measure_mask(self.mask_of(event)?))
    }

    /// Returns `(P(A), P(complement of A))`; the two always sum to the total mass.
    pub fn complement_law(&self, event: &Event) -> Result<(HNum, HNum), SpaceError> {
        let p = self.measure(event)?;
        let rest = self.regime.mass() - &p;
        Ok((p, rest))
    }

    /// Compares the measures of a nested pair `A`, `B` with `A` a subset of `B`.
    ///
    /// The result is always `Less` or `Equal`; subsethood is checked and
    /// rejected with `NotASubset` otherwise.
    pub fn monotone_compare(&self, a: &Event, b: &Event) -> Result<OrderRel, SpaceError> {
        let ma = self.mask_of(a)?;
        let mb = self.mask_of(b)?;
        if ma & mb != ma {
            return Err(SpaceError::NotASubset);
        }
        Ok(self.measure_mask(ma).compare(&self.measure_mask(mb)))
    }

    /// Measure of the union evaluated by the alternating inclusion-exclusion
    /// sum over all nonempty subsets of the given events.
    pub fn union_inclusion_exclusion(&self, events: &[Event]) -> Result<HNum, SpaceError> {
        if events.is_empty() {
            return Err(SpaceError::EmptyEventList);
        }
        let masks = events
            .iter()
            .map(|e| self.mask_of(e))
            .collect::<Result<Vec<_>, _>>()?;
        let mut total = HNum::zero();
        for subset in 1u32..(1u32 << masks.len()) {
            let mut inter = u128::MAX;
            for (i, m) in masks.iter().enumerate() {
                if subset & (1 << i) != 0 {
                    inter &= m;
                }
            }
            let term = self.measure_mask(inter);
            if subset.count_ones() % 2 == 1 {
                total = total + term;
            } else {
                total = total - term;
            }
        }
        Ok(total)
    }

    /// Returns `(P(union), sum of the P(A_i), order between them)`.
    ///
    /// The relation is always `Less` or `Equal`: the union never outweighs
    /// the sum.
    pub fn subadditivity_check(
        &self,
        events: &[Event],
    ) -> Result<(HNum, HNum, OrderRel), SpaceError> {
        if events.is_empty() {
            return Err(SpaceError::EmptyEventList);
        }
        let mut union_mask = 0u128;
        let mut bound = HNum::zero();
        for event in events {
            let m = self.mask_of(event)?;
            union_mask |= m;
            bound = bound + self.measure_mask(m);
        }
        let union_measure = self.measure_mask(union_mask);
        let rel = union_measure.compare(&bound);
        Ok((union_measure, bound, rel))
    }

    /// Measure of the intersection of a decreasing chain of events.
    ///
    /// On a finite space a decreasing chain stabilizes, so this is also the
    /// limit of the per-step measures.
    pub fn continuity_limit(&self, chain: &[Event]) -> Result<HNum, SpaceError> {
        if chain.is_empty() {
            return Err(SpaceError::EmptyEventList);
        }
        let mut inter = u128::MAX;
        let mut prev: Option<u128> = None;
        for (position, event) in chain.iter().enumerate() {
            let m = self.mask_of(event)?;
            if let Some(p) = prev {
                if m & p != m {
                    return Err(SpaceError::NotDecreasing { position });
                }
            }
            inter &= m;
            prev = Some(m);
        }
        Ok(self.measure_mask(inter))
    }
}
