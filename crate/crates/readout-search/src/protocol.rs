use std::collections::BTreeMap;
use std::fmt;

use ndarray::Array2;
use quoct_algebra::C64;
use serde::{Deserialize, Serialize};

use crate::channel::{basis_density, e_readout, n_partial_readout, Branch};
use crate::gates::NativeGate;
use crate::ReadoutError;

/// Computational basis states (e, n, m) in table order.
pub const COMPUTATIONAL: [(usize, usize, usize); 8] =
    [(0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 0), (0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Measurement {
    EReadout,
    NPartial,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Round {
    pub gates: Vec<NativeGate>,
    pub measurement: Measurement,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ReadoutProtocol {
    pub rounds: Vec<Round>,
}

impl ReadoutProtocol {
    pub fn from_circuits(circuits: Vec<Vec<NativeGate>>) -> Self {
        Self { rounds: circuits.into_iter().map(|gates| Round { gates, measurement: Measurement::EReadout }).collect() }
    }

    pub fn n_rounds(&self) -> usize {
        self.rounds.len()
    }

    pub fn n_gates(&self) -> usize {
        self.rounds.iter().map(|r| r.gates.len()).sum()
    }

    pub fn e_rounds(&self) -> usize {
        self.rounds.iter().filter(|r| r.measurement == Measurement::EReadout).count()
    }
}

impl fmt::Display for ReadoutProtocol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, r) in self.rounds.iter().enumerate() {
            if k > 0 {
                write!(f, " | ")?;
            }
            let g: Vec<String> = r.gates.iter().map(|g| g.to_string()).collect();
            let m = match r.measurement {
                Measurement::EReadout => "M_e",
                Measurement::NPartial => "M_n",
            };
            write!(f, "{}{}{m}", g.join(" "), if g.is_empty() { "" } else { " " })?;
        }
        Ok(())
    }
}

/// The four-round protocol: shelve, read; swap e and m, read; unshelve, read;
/// flip e, read.
pub fn reference_protocol() -> ReadoutProtocol {
    use NativeGate::*;
    ReadoutProtocol::from_circuits(vec![vec![ShelveEm], vec![SwapEm], vec![ShelveEm], vec![Xe]])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Outcome {
    Bright,
    Dark,
    /// Partial n readout.
    BrightN,
    DarkN,
}

impl Outcome {
    pub fn symbol(self) -> &'static str {
        match self {
            Outcome::Bright => "B",
            Outcome::Dark => "D",
            Outcome::BrightN => "B′",
            Outcome::DarkN => "D′",
        }
    }
}

pub fn bitstring(outcomes: &[Outcome]) -> String {
    outcomes.iter().map(|o| o.symbol()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SimMode {
    /// Every round as written.
    Plain,
    /// After a bright e readout, read n partially and stop.
    ShortCircuit,
}

#[derive(Clone, Debug)]
pub struct Leaf {
    pub outcomes: Vec<Outcome>,
    pub probability: f64,
    pub state: Array2<C64>,
}

#[derive(Clone, Debug)]
pub struct OutcomeRecord {
    pub leaves: Vec<Leaf>,
}

impl OutcomeRecord {
    pub fn deterministic(&self) -> bool {
        self.leaves.len() == 1 && self.leaves[0].probability > 1.0 - 1e-9
    }

    pub fn total_probability(&self) -> f64 {
        self.leaves.iter().map(|l| l.probability).sum()
    }
}

const PRUNE: f64 = 1e-12;

fn apply(u: &Array2<C64>, rho: &Array2<C64>) -> Array2<C64> {
    u.dot(rho).dot(&u.t().mapv(|x| x.conj()))
}

fn measure(
    rho: &Array2<C64>,
    which: Measurement,
) -> [(Outcome, Branch); 2] {
    match which {
        Measurement::EReadout => {
            let (b, d) = e_readout(rho);
            [(Outcome::Bright, b), (Outcome::Dark, d)]
        }
        Measurement::NPartial => {
            let (b, d) = n_partial_readout(rho);
            [(Outcome::BrightN, b), (Outcome::DarkN, d)]
        }
    }
}

/// Full branch tree of a protocol run on one initial density operator.
pub fn simulate_protocol(protocol: &ReadoutProtocol, rho0: &Array2<C64>, mode: SimMode) -> OutcomeRecord {
    let unitaries: Vec<Vec<Array2<C64>>> =
        protocol.rounds.iter().map(|r| r.gates.iter().map(|g| g.unitary()).collect()).collect();
    let mut live = vec![Leaf { outcomes: Vec::new(), probability: 1.0, state: rho0.clone() }];
    let mut done = Vec::new();
    for (k, round) in protocol.rounds.iter().enumerate() {
        let mut next = Vec::new();
        for leaf in live {
            let mut rho = leaf.state;
            for u in &unitaries[k] {
                rho = apply(u, &rho);
            }
            for (o, br) in measure(&rho, round.measurement) {
                let p = leaf.probability * br.probability;
                if p < PRUNE {
                    continue;
                }
                let mut outcomes = leaf.outcomes.clone();
                outcomes.push(o);
                if mode == SimMode::ShortCircuit && o == Outcome::Bright {
                    for (o2, br2) in measure(&br.state, Measurement::NPartial) {
                        let p2 = p * br2.probability;
                        if p2 >= PRUNE {
                            let mut oc = outcomes.clone();
                            oc.push(o2);
                            done.push(Leaf { outcomes: oc, probability: p2, state: br2.state });
                        }
                    }
                } else {
                    next.push(Leaf { outcomes, probability: p, state: br.state });
                }
            }
        }
        live = next;
    }
    done.extend(live);
    OutcomeRecord { leaves: done }
}

#[derive(Clone, Debug)]
pub struct Verification {
    pub unique: bool,
    pub n_dups: usize,
    /// Basis state → bitstring for deterministic states.
    pub table: Vec<((usize, usize, usize), Option<String>)>,
}

/// Runs the protocol (short-circuited) on every computational basis state.
/// Extra branches of a non-deterministic state count as duplicates.
pub fn verify_protocol(protocol: &ReadoutProtocol) -> Verification {
    let mut extra = 0;
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut table = Vec::new();
    for &(e, n, m) in &COMPUTATIONAL {
        let rec = simulate_protocol(protocol, &basis_density(e, n, m), SimMode::ShortCircuit);
        extra += rec.leaves.len().saturating_sub(1);
        for l in &rec.leaves {
            *counts.entry(bitstring(&l.outcomes)).or_default() += 1;
        }
        table.push(((e, n, m), rec.deterministic().then(|| bitstring(&rec.leaves[0].outcomes))));
    }
    let collisions: usize = counts.values().map(|&c| c - 1).sum();
    let n_dups = extra + collisions;
    Verification { unique: n_dups == 0, n_dups, table }
}

/// Lexicographic fitness: unique protocols first, then smaller
/// f = (1 + rounds)(1 + gates)(1 + dups).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Fitness {
    pub b_dups: bool,
    pub f: usize,
}

pub fn fitness(protocol: &ReadoutProtocol) -> (Fitness, usize) {
    let v = verify_protocol(protocol);
    let f = (1 + protocol.n_rounds()) * (1 + protocol.n_gates()) * (1 + v.n_dups);
    (Fitness { b_dups: !v.unique, f }, v.n_dups)
}

pub type Label = (usize, usize, usize);

/// Shortest outcome strings that still identify each basis state: any
/// readout whose result is already fixed by the preceding outcomes is
/// dropped.
pub fn short_circuit_table(protocol: &ReadoutProtocol) -> Result<Vec<(Label, String)>, ReadoutError> {
    let v = verify_protocol(protocol);
    if !v.unique {
        return Err(ReadoutError::NotUnique(v.n_dups));
    }
    let records: Vec<Vec<Outcome>> = COMPUTATIONAL
        .iter()
        .map(|&(e, n, m)| simulate_protocol(protocol, &basis_density(e, n, m), SimMode::ShortCircuit).leaves[0].outcomes.clone())
        .collect();
    Ok(COMPUTATIONAL
        .iter()
        .zip(&records)
        .map(|(&s, r)| {
            let kept: Vec<Outcome> = (0..r.len())
                .filter(|&k| records.iter().any(|o| o.len() >= k && o[..k] == r[..k] && o.get(k) != r.get(k)))
                .map(|k| r[k])
                .collect();
            (s, bitstring(&kept))
        })
        .collect())
}

