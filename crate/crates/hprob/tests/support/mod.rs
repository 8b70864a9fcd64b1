//! Deterministic generators shared by the integration suites.
//!
//! Everything is driven by a seeded ChaCha stream so failures reproduce
//! exactly. Weights are built from integer compositions, which keeps every
//! generated space exactly on its regime mass by construction.

use hprob::{rat, Event, HNum, ProbSpace, Rational, Regime};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rand_rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64, max_den: i64) -> Rational {
    rat(rng.gen_range(lo..=hi), rng.gen_range(1..=max_den))
}

pub fn rand_hnum(rng: &mut ChaCha8Rng) -> HNum {
    HNum::from_parts(
        rand_rational(rng, -60, 60, 16),
        rand_rational(rng, -60, 60, 16),
    )
}

pub fn rand_nonneg_hnum(rng: &mut ChaCha8Rng) -> HNum {
    HNum::from_parts(
        rand_rational(rng, 0, 60, 16),
        rand_rational(rng, 0, 60, 16),
    )
}

/// `n` nonnegative rationals summing exactly to one.
pub fn composition(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    let denom = rng.gen_range(1..=40i64);
    let mut cuts: Vec<i64> = (0..n.saturating_sub(1))
        .map(|_| rng.gen_range(0..=denom))
        .collect();
    cuts.push(0);
    cuts.push(denom);
    cuts.sort_unstable();
    cuts.windows(2).map(|w| rat(w[1] - w[0], denom)).collect()
}

/// Like [`composition`] but with every part strictly positive.
pub fn positive_composition(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    let extra = rng.gen_range(0..=30i64);
    let denom = n as i64 + extra;
    let mut shares = vec![0i64; n];
    for _ in 0..extra {
        let i = rng.gen_range(0..n);
        shares[i] += 1;
    }
    shares.iter().map(|s| rat(1 + s, denom)).collect()
}

/// How the weights of a generated space are shaped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    /// Unit regime, independent component compositions.
    Generic,
    /// Unit regime with both strictly positive components: every nonempty
    /// event has an invertible measure.
    StrictlyPositive,
    /// Unit regime with dedicated pure-e and pure-e+ atoms, so events of
    /// both zero-divisor classes exist inside one space.
    Mixed,
    /// E regime: all weights multiples of e.
    PureE,
    /// E+ regime: all weights multiples of e+.
    PureEdag,
}

impl Profile {
    pub fn regime(self) -> Regime {
        match self {
            Profile::Generic | Profile::StrictlyPositive | Profile::Mixed => Regime::Unit,
            Profile::PureE => Regime::E,
            Profile::PureEdag => Regime::Edag,
        }
    }
}

pub fn atom_ids(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

pub fn random_space(rng: &mut ChaCha8Rng, n: usize, profile: Profile) -> ProbSpace {
    assert!(n >= 1);
    let zero = Rational::zero();
    let weights: Vec<HNum> = match profile {
        Profile::Generic => {
            let nu1 = composition(rng, n);
            let nu2 = composition(rng, n);
            nu1.into_iter()
                .zip(nu2)
                .map(|(a, b)| HNum::from_parts(a, b))
                .collect()
        }
        Profile::StrictlyPositive => {
            let nu1 = positive_composition(rng, n);
            let nu2 = positive_composition(rng, n);
            nu1.into_iter()
                .zip(nu2)
                .map(|(a, b)| HNum::from_parts(a, b))
                .collect()
        }
        Profile::Mixed => {
            // first block pure-e, second pure-e+, remainder mixed
            let e_only = (n / 3).max(1).min(n - 1);
            let edag_only = (n / 3).max(1).min(n - e_only);
            let mixed = n - e_only - edag_only;
            let nu1 = composition(rng, e_only + mixed);
            let nu2 = composition(rng, edag_only + mixed);
            let mut weights = Vec::with_capacity(n);
            weights.extend(
                nu1[..e_only]
                    .iter()
                    .map(|x| HNum::from_parts(x.clone(), zero.clone())),
            );
            weights.extend(
                nu2[..edag_only]
                    .iter()
                    .map(|y| HNum::from_parts(zero.clone(), y.clone())),
            );
            weights.extend(
                nu1[e_only..]
                    .iter()
                    .zip(&nu2[edag_only..])
                    .map(|(x, y)| HNum::from_parts(x.clone(), y.clone())),
            );
            weights
        }
        Profile::PureE => composition(rng, n)
            .into_iter()
            .map(|a| HNum::from_parts(a, zero.clone()))
            .collect(),
        Profile::PureEdag => composition(rng, n)
            .into_iter()
            .map(|b| HNum::from_parts(zero.clone(), b))
            .collect(),
    };
    ProbSpace::build(atom_ids(n).into_iter().zip(weights), profile.regime())
        .expect("generated weights satisfy the axioms")
}

/// Uniform random subset of the atoms.
pub fn random_event(rng: &mut ChaCha8Rng, space: &ProbSpace) -> Event {
    let keep: Vec<String> = space
        .atoms()
        .filter(|_| rng.gen_bool(0.5))
        .map(str::to_string)
        .collect();
    Event::new(keep)
}

/// Random subset of the given event.
pub fn random_subevent(rng: &mut ChaCha8Rng, of: &Event) -> Event {
    Event::new(
        of.iter()
            .filter(|_| rng.gen_bool(0.5))
            .map(str::to_string),
    )
}

/// Random partition of the atoms into exactly `k` (possibly empty) parts.
pub fn random_partition(rng: &mut ChaCha8Rng, space: &ProbSpace, k: usize) -> Vec<Event> {
    let mut buckets: Vec<Vec<String>> = vec![Vec::new(); k];
    for atom in space.atoms() {
        buckets[rng.gen_range(0..k)].push(atom.to_string());
    }
    buckets.into_iter().map(Event::new).collect()
}

/// All `2^n` events of a space, mask-ordered. Only sensible for small spaces.
pub fn all_events(space: &ProbSpace) -> Vec<Event> {
    let atoms: Vec<&str> = space.atoms().collect();
    let n = atoms.len();
    (0u32..(1 << n))
        .map(|mask| {
            Event::new(
                atoms
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, a)| a.to_string()),
            )
        })
        .collect()
}

/// Classical component measures used as independent oracles.
pub fn p1(space: &ProbSpace, event: &Event) -> Rational {
    event
        .iter()
        .map(|a| space.weight(a).expect("atom exists").e_part().clone())
        .fold(Rational::zero(), |acc, x| acc + x)
}

pub fn p2(space: &ProbSpace, event: &Event) -> Rational {
    event
        .iter()
        .map(|a| space.weight(a).expect("atom exists").edag_part().clone())
        .fold(Rational::zero(), |acc, x| acc + x)
}
